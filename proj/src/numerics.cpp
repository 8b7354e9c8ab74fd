// SPDX-License-Identifier: Apache-2.0
//
// patchkit - rectangular microstrip patch antenna synthesis and analysis
// Copyright (C) 2026 The patchkit authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "patchkit/numerics.hpp"

#include "patchkit/core.hpp"

#include <cmath>
#include <limits>
#include <utility>

namespace patchkit::numerics
{

namespace
{

struct SimpsonState
{
    const ScalarFn &f;
    int max_depth;
    bool exhausted = false;
};

double simpson_recurse(SimpsonState &st, double a, double b, double fa, double fm, double fb, double whole, double tol,
                       int depth)
{
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = st.f(lm);
    const double frm = st.f(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double delta = left + right - whole;
    if (std::abs(delta) <= 15.0 * tol)
        return left + right + delta / 15.0;
    if (depth >= st.max_depth)
    {
        st.exhausted = true;
        return left + right + delta / 15.0;
    }
    return simpson_recurse(st, a, m, fa, flm, fm, left, 0.5 * tol, depth + 1) +
           simpson_recurse(st, m, b, fm, frm, fb, right, 0.5 * tol, depth + 1);
}

} // namespace

double adaptive_simpson(const ScalarFn &f, double a, double b, const QuadratureOptions &opt)
{
    if (!(b > a))
        throw InvalidArgument("adaptive_simpson: empty interval");
    const int panels = opt.initial_panels > 0 ? opt.initial_panels : 1;
    SimpsonState st{f, opt.max_depth};
    const double h = (b - a) / panels;
    CompensatedSum total;
    for (int i = 0; i < panels; ++i)
    {
        const double lo = a + i * h;
        const double hi = (i + 1 == panels) ? b : a + (i + 1) * h;
        const double fa = f(lo), fb = f(hi), fm = f(0.5 * (lo + hi));
        const double whole = (hi - lo) / 6.0 * (fa + 4.0 * fm + fb);
        total.add(simpson_recurse(st, lo, hi, fa, fm, fb, whole, opt.abs_tol / panels, 0));
    }
    if (st.exhausted)
        throw ModelError("quadrature did not converge to tolerance within max subdivision depth");
    return total.value();
}

double composite_simpson(const ScalarFn &f, double a, double b, std::size_t n)
{
    if (n < 2)
        n = 2;
    if (n % 2)
        ++n;
    const double h = (b - a) / static_cast<double>(n);
    CompensatedSum s;
    s.add(f(a));
    s.add(f(b));
    for (std::size_t i = 1; i < n; ++i)
        s.add((i % 2 ? 4.0 : 2.0) * f(a + static_cast<double>(i) * h));
    return s.value() * h / 3.0;
}

double trapezoid(const ScalarFn &f, double a, double b, std::size_t n)
{
    if (n < 1)
        n = 1;
    const double h = (b - a) / static_cast<double>(n);
    CompensatedSum s;
    s.add(0.5 * f(a));
    s.add(0.5 * f(b));
    for (std::size_t i = 1; i < n; ++i)
        s.add(f(a + static_cast<double>(i) * h));
    return s.value() * h;
}

double bisect(const ScalarFn &f, double lo, double hi, const RootOptions &opt)
{
    double flo = f(lo);
    const double fhi = f(hi);
    if (flo == 0.0)
        return lo;
    if (fhi == 0.0)
        return hi;
    if ((flo > 0.0) == (fhi > 0.0))
        throw ModelError("bisect: root not bracketed");
    for (int i = 0; i < opt.max_iter; ++i)
    {
        const double mid = 0.5 * (lo + hi);
        if (hi - lo <= opt.x_tol)
            return mid;
        const double fm = f(mid);
        if (fm == 0.0)
            return mid;
        if ((fm > 0.0) == (flo > 0.0))
        {
            lo = mid;
            flo = fm;
        }
        else
            hi = mid;
    }
    throw ModelError("bisect: iteration cap reached");
}

double brent_root(const ScalarFn &f, double lo, double hi, const RootOptions &opt)
{
    double a = lo, b = hi;
    double fa = f(a), fb = f(b);
    if (fa == 0.0)
        return a;
    if (fb == 0.0)
        return b;
    if ((fa > 0.0) == (fb > 0.0))
        throw ModelError("brent_root: root not bracketed");
    double c = a, fc = fa, d = b - a, e = d;
    for (int iter = 0; iter < opt.max_iter; ++iter)
    {
        if ((fb > 0.0) == (fc > 0.0))
        {
            c = a;
            fc = fa;
            d = e = b - a;
        }
        if (std::abs(fc) < std::abs(fb))
        {
            a = b;
            b = c;
            c = a;
            fa = fb;
            fb = fc;
            fc = fa;
        }
        const double tol = 2.0 * std::numeric_limits<double>::epsilon() * std::abs(b) + 0.5 * opt.x_tol;
        const double xm = 0.5 * (c - b);
        if (std::abs(xm) <= tol || fb == 0.0)
            return b;
        if (std::abs(e) >= tol && std::abs(fa) > std::abs(fb))
        {
            const double s = fb / fa;
            double p, q;
            if (a == c)
            {
                p = 2.0 * xm * s;
                q = 1.0 - s;
            }
            else
            {
                const double qa = fa / fc, r = fb / fc;
                p = s * (2.0 * xm * qa * (qa - r) - (b - a) * (r - 1.0));
                q = (qa - 1.0) * (r - 1.0) * (s - 1.0);
            }
            if (p > 0.0)
                q = -q;
            p = std::abs(p);
            if (2.0 * p < std::min(3.0 * xm * q - std::abs(tol * q), std::abs(e * q)))
            {
                e = d;
                d = p / q;
            }
            else
            {
                d = xm;
                e = d;
            }
        }
        else
        {
            d = xm;
            e = d;
        }
        a = b;
        fa = fb;
        b += (std::abs(d) > tol) ? d : (xm > 0.0 ? tol : -tol);
        fb = f(b);
    }
    throw ModelError("brent_root: iteration cap reached");
}

double golden_section_min(const ScalarFn &f, double lo, double hi, double x_tol, int max_iter)
{
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double c = hi - inv_phi * (hi - lo);
    double d = lo + inv_phi * (hi - lo);
    double fc = f(c), fd = f(d);
    for (int i = 0; i < max_iter && (hi - lo) > x_tol; ++i)
    {
        if (fc < fd)
        {
            hi = d;
            d = c;
            fd = fc;
            c = hi - inv_phi * (hi - lo);
            fc = f(c);
        }
        else
        {
            lo = c;
            c = d;
            fc = fd;
            d = lo + inv_phi * (hi - lo);
            fd = f(d);
        }
    }
    return 0.5 * (lo + hi);
}

void CompensatedSum::add(double x)
{
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x))
        comp_ += (sum_ - t) + x;
    else
        comp_ += (x - t) + sum_;
    sum_ = t;
}

double compensated_sum(std::span<const double> xs)
{
    CompensatedSum s;
    for (double x : xs)
        s.add(x);
    return s.value();
}

} // namespace patchkit::numerics

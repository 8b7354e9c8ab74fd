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

#include "patchkit/mstripline.hpp"

#include "patchkit/synthesis.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace patchkit::mstripline
{

LineParams line_analysis(double width_m, const Substrate &sub)
{
    if (!std::isfinite(width_m) || width_m <= 0.0)
        throw InvalidArgument("line width must be positive");
    validate_substrate(sub);
    const double h = sub.height_m;
    const double u = width_m / h;
    const double e_eff = synthesis::effective_permittivity(sub.eps_r, h, width_m);
    double z0;
    if (u <= 1.0)
        z0 = 60.0 / std::sqrt(e_eff) * std::log(8.0 / u + 0.25 * u);
    else
        z0 = constants::eta0_approx / (std::sqrt(e_eff) * (u + 1.393 + 0.667 * std::log(u + 1.444)));
    return {z0, e_eff};
}

double wheeler_width(double z_target_ohm, const Substrate &sub)
{
    const double er = sub.eps_r;
    const double a = z_target_ohm / 60.0 * std::sqrt(0.5 * (er + 1.0)) + (er - 1.0) / (er + 1.0) * (0.23 + 0.11 / er);
    double u = 8.0 * std::exp(a) / (std::exp(2.0 * a) - 2.0);
    if (u > 2.0 || !(u > 0.0))
    {
        const double b = 377.0 * constants::pi / (2.0 * z_target_ohm * std::sqrt(er));
        u = 2.0 / constants::pi *
            (b - 1.0 - std::log(2.0 * b - 1.0) + (er - 1.0) / (2.0 * er) * (std::log(b - 1.0) + 0.39 - 0.61 / er));
    }
    return u * sub.height_m;
}

double line_synthesis(double z_target_ohm, const Substrate &sub)
{
    validate_substrate(sub);
    if (!(z_target_ohm >= kSynthesisMinZ && z_target_ohm <= kSynthesisMaxZ))
        throw InvalidArgument("line synthesis: target impedance " + std::to_string(z_target_ohm) +
                              " ohm outside supported range [10, 250]");

    const double h = sub.height_m;
    const double w_min = 0.01 * h;
    const double w_max = 100.0 * h;
    double seed = wheeler_width(z_target_ohm, sub);
    if (!std::isfinite(seed) || seed <= 0.0)
        seed = h;
    seed = std::clamp(seed, w_min, w_max);

    // z0 falls with width: lo is the narrow (high-Z) side.
    double lo = std::max(w_min, 0.5 * seed);
    double hi = std::min(w_max, 2.0 * seed);
    auto err = [&](double w) { return line_analysis(w, sub).z0_ohm - z_target_ohm; };
    while (err(lo) < 0.0 && lo > w_min)
        lo = std::max(w_min, 0.5 * lo);
    while (err(hi) > 0.0 && hi < w_max)
        hi = std::min(w_max, 2.0 * hi);
    if (err(lo) < 0.0 || err(hi) > 0.0)
        throw ModelError("line synthesis: target impedance not reachable on this substrate");

    for (int i = 0; i < kSynthesisMaxIter; ++i)
    {
        const double mid = std::sqrt(lo * hi);
        const double e = err(mid);
        if (std::abs(e) <= 1e-12 * z_target_ohm || hi / lo - 1.0 < 1e-14)
            return mid;
        if (e > 0.0)
            lo = mid;
        else
            hi = mid;
    }
    const double w = std::sqrt(lo * hi);
    if (std::abs(err(w)) <= kSynthesisRelTol * z_target_ohm)
        return w;
    throw ModelError("line synthesis did not converge");
}

double guided_wavelength(double f_hz, double eps_eff_line)
{
    if (!std::isfinite(f_hz) || f_hz <= 0.0)
        throw InvalidArgument("frequency must be positive");
    if (!(eps_eff_line >= 1.0))
        throw InvalidArgument("line effective permittivity below 1");
    return constants::c0 / (f_hz * std::sqrt(eps_eff_line));
}

LineGeometry qwt_section(double z_qwt_ohm, double f_hz, const Substrate &sub)
{
    const double w = line_synthesis(z_qwt_ohm, sub);
    const auto p = line_analysis(w, sub);
    return {w, 0.25 * guided_wavelength(f_hz, p.eps_eff_line), p.z0_ohm, p.eps_eff_line};
}

LineGeometry line_from_width(double width_m, double length_m, const Substrate &sub)
{
    if (!(length_m >= 0.0))
        throw InvalidArgument("line length must be non-negative");
    const auto p = line_analysis(width_m, sub);
    return {width_m, length_m, p.z0_ohm, p.eps_eff_line};
}

} // namespace patchkit::mstripline

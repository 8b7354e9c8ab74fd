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

#include "patchkit/network.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace patchkit::network
{

namespace
{

constexpr double kTwoPi = 2.0 * constants::pi;
const double kSlotScale = 1.0 / (120.0 * constants::pi * constants::pi);

double wavenumber(double f_hz) { return kTwoPi * f_hz / constants::c0; }

// [sin(a cos t) / cos t]^2 sin^3 t, with the removable point cos t = 0
// replaced by its limit a^2.
double slot_kernel(double a, double t)
{
    const double c = std::cos(t);
    const double s = std::sin(t);
    const double ratio = std::abs(c) < 1e-8 ? a : std::sin(a * c) / c;
    return ratio * ratio * s * s * s;
}

void require_positive(double v, const char *what)
{
    if (!std::isfinite(v) || v <= 0.0)
        throw InvalidArgument(std::string(what) + " must be positive");
}

} // namespace

double slot_conductance(double w_patch_m, double f_hz, const numerics::QuadratureOptions &opt)
{
    require_positive(w_patch_m, "patch width");
    require_positive(f_hz, "frequency");
    const double a = 0.5 * wavenumber(f_hz) * w_patch_m;
    const double i1 = numerics::adaptive_simpson([a](double t) { return slot_kernel(a, t); }, 0.0, constants::pi, opt);
    return i1 * kSlotScale;
}

double slot_conductance_panels(double w_patch_m, double f_hz, std::size_t n_panels)
{
    require_positive(w_patch_m, "patch width");
    require_positive(f_hz, "frequency");
    const double a = 0.5 * wavenumber(f_hz) * w_patch_m;
    return numerics::composite_simpson([a](double t) { return slot_kernel(a, t); }, 0.0, constants::pi, n_panels) *
           kSlotScale;
}

double slot_susceptance(double w_patch_m, const Substrate &sub, double f_hz)
{
    require_positive(w_patch_m, "patch width");
    require_positive(f_hz, "frequency");
    validate_substrate(sub);
    const double k0h = wavenumber(f_hz) * sub.height_m;
    if (k0h >= 1.0)
        throw InvalidArgument("slot susceptance: k0*h = " + std::to_string(k0h) +
                              " is outside thin-substrate validity (needs k0*h < 1)");
    const double lambda0 = constants::c0 / f_hz;
    return w_patch_m / (120.0 * lambda0) * (1.0 - 0.636 * std::log(k0h));
}

double mutual_conductance(double w_patch_m, double l_eff_m, double f_hz, const numerics::QuadratureOptions &opt)
{
    require_positive(w_patch_m, "patch width");
    require_positive(f_hz, "frequency");
    if (!std::isfinite(l_eff_m) || l_eff_m < 0.0)
        throw InvalidArgument("slot separation must be non-negative");
    const double k0 = wavenumber(f_hz);
    const double a = 0.5 * k0 * w_patch_m;
    const double kl = k0 * l_eff_m;
    const double i12 = numerics::adaptive_simpson(
        [a, kl](double t) { return slot_kernel(a, t) * std::cyl_bessel_j(0.0, kl * std::sin(t)); }, 0.0, constants::pi,
        opt);
    return i12 * kSlotScale;
}

double edge_resistance_slot_model(double g1, double g12)
{
    if (!(g1 > 0.0))
        throw InvalidArgument("slot conductance must be positive");
    const double g = g1 + g12;
    if (!(g > 0.0))
        throw ModelError("slot model: G1 + G12 is not positive");
    return 1.0 / (2.0 * g);
}

Complex line_admittance(Complex y_load, double yc, double beta_l)
{
    const double c = std::cos(beta_l);
    const double s = std::sin(beta_l);
    const Complex j(0.0, 1.0);
    const Complex den = yc * c + j * y_load * s;
    if (std::abs(den) == 0.0)
        throw ModelError("line transformation is singular");
    return yc * (y_load * c + j * yc * s) / den;
}

Complex patch_admittance(const TlmSolution &tlm, const Substrate &sub, double f_hz)
{
    require_positive(f_hz, "frequency");
    require_positive(tlm.l_patch_m, "patch length");
    const Complex ys(slot_conductance(tlm.w_patch_m, f_hz), slot_susceptance(tlm.w_patch_m, sub, f_hz));
    const auto line = mstripline::line_analysis(tlm.w_patch_m, sub);
    const double beta = wavenumber(f_hz) * std::sqrt(line.eps_eff_line);
    const Complex yin = ys + line_admittance(ys, 1.0 / line.z0_ohm, beta * tlm.l_patch_m);
    if (!std::isfinite(yin.real()) || !std::isfinite(yin.imag()) || std::abs(yin) == 0.0)
        throw ModelError("patch input admittance is singular");
    return yin;
}

Complex input_impedance(const TlmSolution &tlm, const Substrate &sub, double f_hz)
{
    return 1.0 / patch_admittance(tlm, sub, f_hz);
}

Complex cascade_line(Complex z_load, double z0_line, double beta_l)
{
    require_positive(z0_line, "line impedance");
    const Complex j(0.0, 1.0);
    const double c = std::cos(beta_l);
    const double s = std::sin(beta_l);
    const Complex num = c * z_load + j * z0_line * s;
    const Complex den = j * (s / z0_line) * z_load + c;
    if (std::abs(den) == 0.0)
        throw ModelError("ABCD cascade is singular");
    return num / den;
}

Complex cascade_qwt(Complex z_load, const LineGeometry &line, double f_hz)
{
    require_positive(f_hz, "frequency");
    if (!(line.eps_eff_line >= 1.0))
        throw InvalidArgument("line effective permittivity below 1");
    const double beta_l = wavenumber(f_hz) * std::sqrt(line.eps_eff_line) * line.length_m;
    return cascade_line(z_load, line.z0_ohm, beta_l);
}

Complex s11(Complex z, double z0_ref)
{
    require_positive(z0_ref, "reference impedance");
    const Complex den = z + z0_ref;
    if (std::abs(den) == 0.0)
        throw ModelError("reflection coefficient undefined at z = -z0");
    return (z - z0_ref) / den;
}

double s11_db(Complex gamma)
{
    const double m = std::abs(gamma);
    if (m == 0.0)
        return -std::numeric_limits<double>::infinity();
    return 20.0 * std::log10(m);
}

double return_loss_db(Complex gamma) { return -s11_db(gamma); }

double vswr(Complex gamma)
{
    const double m = std::abs(gamma);
    if (m >= 1.0)
        return std::numeric_limits<double>::infinity();
    return (1.0 + m) / (1.0 - m);
}

Complex feed_impedance(const PatchDesign &d, double f_hz)
{
    const Complex z_patch = input_impedance(d.tlm, d.sub, f_hz);
    const Complex z_qwt = cascade_qwt(z_patch, d.qwt, f_hz);
    return cascade_qwt(z_qwt, d.feed, f_hz);
}

Complex reflection(const PatchDesign &d, double f_hz) { return s11(feed_impedance(d, f_hz), d.target.z0_ohm); }

double patch_resonance(const TlmSolution &tlm, const Substrate &sub)
{
    require_positive(tlm.l_patch_m, "patch length");
    const auto line = mstripline::line_analysis(tlm.w_patch_m, sub);
    const double f_half = constants::c0 / (2.0 * tlm.l_patch_m * std::sqrt(line.eps_eff_line));
    const double lo = 0.5 * f_half * (1.0 + 1e-6);
    const double hi = f_half * (1.0 - 1e-12);
    auto im_y = [&](double f) { return patch_admittance(tlm, sub, f).imag(); };
    if (!(im_y(lo) < 0.0 && im_y(hi) > 0.0))
        throw ModelError("patch resonance: Im(Yin) has no sign change in the fundamental window");
    return numerics::brent_root(im_y, lo, hi, {1e-3, 200});
}

std::vector<double> band_frequencies(const BandSpec &band)
{
    validate_band(band);
    std::vector<double> f(band.n_points);
    const double step = (band.f_stop_hz - band.f_start_hz) / static_cast<double>(band.n_points - 1);
    for (std::size_t i = 0; i < band.n_points; ++i)
        f[i] = band.f_start_hz + static_cast<double>(i) * step;
    f.back() = band.f_stop_hz;
    return f;
}

double find_resonance(std::span<const double> freqs_hz, std::span<const double> mag,
                      std::span<const std::uint8_t> valid, const numerics::ScalarFn &model)
{
    const std::size_t n = freqs_hz.size();
    if (mag.size() != n || valid.size() != n)
        throw InvalidArgument("find_resonance: sequence lengths differ");

    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < n; ++i)
        if (valid[i] && std::isfinite(mag[i]))
            idx.push_back(i);
    if (idx.size() < 3)
        throw ModelError("find_resonance: fewer than 3 valid sweep points");

    std::size_t best = 0;
    for (std::size_t k = 1; k < idx.size(); ++k)
        if (mag[idx[k]] < mag[idx[best]])
            best = k;
    if (best == 0 || best + 1 == idx.size())
        throw ModelError("resonance not bracketed: |S11| minimum lies on the band edge");

    const double lo = freqs_hz[idx[best - 1]];
    const double hi = freqs_hz[idx[best + 1]];
    auto safe = [&](double f) {
        try
        {
            return model(f);
        }
        catch (const std::exception &)
        {
            return std::numeric_limits<double>::infinity();
        }
    };
    const double f_ref = numerics::golden_section_min(safe, lo, hi, 1e-10 * hi, 200);
    // Keep the grid point if the refinement did not improve on it.
    const double f_grid = freqs_hz[idx[best]];
    return safe(f_ref) <= safe(f_grid) ? f_ref : f_grid;
}

std::optional<Band> bandwidth(std::span<const double> freqs_hz, std::span<const double> s11_db,
                              std::span<const std::uint8_t> valid, double f_res_hz, double threshold_db)
{
    const std::size_t n = freqs_hz.size();
    if (s11_db.size() != n || valid.size() != n)
        throw InvalidArgument("bandwidth: sequence lengths differ");
    if (n == 0)
        return std::nullopt;

    auto inside = [&](std::size_t i) { return valid[i] && s11_db[i] <= threshold_db; };

    std::size_t k = n;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i)
    {
        if (!valid[i])
            continue;
        const double d = std::abs(freqs_hz[i] - f_res_hz);
        if (d < best)
        {
            best = d;
            k = i;
        }
    }
    if (k == n || !inside(k))
        return std::nullopt;

    auto crossing = [&](std::size_t out, std::size_t in) {
        if (!valid[out])
            return freqs_hz[in];
        const double t = (threshold_db - s11_db[out]) / (s11_db[in] - s11_db[out]);
        return freqs_hz[out] + t * (freqs_hz[in] - freqs_hz[out]);
    };

    Band b;
    std::size_t lo = k;
    while (lo > 0 && inside(lo - 1))
        --lo;
    if (lo == 0)
    {
        b.f_low_hz = freqs_hz.front();
        b.clipped_low = true;
    }
    else
        b.f_low_hz = crossing(lo - 1, lo);

    std::size_t hi = k;
    while (hi + 1 < n && inside(hi + 1))
        ++hi;
    if (hi + 1 == n)
    {
        b.f_high_hz = freqs_hz.back();
        b.clipped_high = true;
    }
    else
        b.f_high_hz = crossing(hi + 1, hi);

    b.bw_hz = b.f_high_hz - b.f_low_hz;
    return b;
}

} // namespace patchkit::network

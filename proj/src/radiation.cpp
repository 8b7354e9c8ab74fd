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

#include "patchkit/radiation.hpp"

#include "patchkit/numerics.hpp"

#include <algorithm>
#include <cmath>

namespace patchkit
{

namespace
{

constexpr double kDeg = constants::pi / 180.0;

// sin/cos of an angle in degrees, exact at multiples of 90 degrees so that
// the cos(theta) factor is a true zero on the horizon.
double sin_deg(double deg)
{
    const double r = std::fmod(deg, 360.0);
    if (r == 0.0 || r == 180.0 || r == -180.0)
        return 0.0;
    if (r == 90.0 || r == -270.0)
        return 1.0;
    if (r == -90.0 || r == 270.0)
        return -1.0;
    return std::sin(deg * kDeg);
}

double cos_deg(double deg) { return sin_deg(deg + 90.0); }

double sinc(double x) { return x == 0.0 ? 1.0 : std::sin(x) / x; }

double k0(double f_hz) { return 2.0 * constants::pi * f_hz / constants::c0; }

void check_hemisphere(double theta_deg)
{
    if (!(std::abs(theta_deg) <= 90.0 + 1e-9))
        throw InvalidArgument("theta outside the upper hemisphere [-90, 90] deg");
}

void check_model(const TlmSolution &tlm, double f_hz)
{
    if (!(f_hz > 0.0) || !(tlm.l_eff_m > 0.0) || !(tlm.w_patch_m > 0.0))
        throw InvalidArgument("pattern needs positive frequency and patch dimensions");
}

double intensity_rad(double theta, double phi, double half_kl, double half_kw)
{
    const double st = std::sin(theta);
    const double sp = std::sin(phi);
    const double x = half_kl * st * std::cos(phi);
    const double y = half_kw * st * sp;
    const double cx = std::cos(x);
    const double sy = sinc(y);
    return cx * cx * sy * sy * (1.0 - st * st * sp * sp);
}

radiation::PatternGrid make_axes(std::size_t n_theta, std::size_t n_phi, radiation::Support support)
{
    if (n_theta < 2 || n_phi < 2)
        throw InvalidArgument("pattern grid needs at least 2 points per axis");
    radiation::PatternGrid g;
    g.support = support;
    const double theta_max = support == radiation::Support::Hemisphere ? 90.0 : 180.0;
    g.theta_deg.resize(n_theta);
    for (std::size_t i = 0; i < n_theta; ++i)
        g.theta_deg[i] = theta_max * static_cast<double>(i) / static_cast<double>(n_theta - 1);
    g.phi_deg.resize(n_phi);
    for (std::size_t j = 0; j < n_phi; ++j)
        g.phi_deg[j] = 360.0 * static_cast<double>(j) / static_cast<double>(n_phi);
    g.u.assign(n_theta * n_phi, 0.0);
    return g;
}

void fill_row(radiation::PatternGrid &g, const radiation::IntensityFn &fn, std::size_t it)
{
    const std::size_t np = g.phi_deg.size();
    const double theta = g.theta_deg[it] * kDeg;
    for (std::size_t ip = 0; ip < np; ++ip)
        g.u[it * np + ip] = fn(theta, g.phi_deg[ip] * kDeg);
}

void normalize(radiation::PatternGrid &g)
{
    const double peak = *std::max_element(g.u.begin(), g.u.end());
    if (!(peak > 0.0))
        throw ModelError("pattern grid is identically zero");
    for (double &v : g.u)
        v /= peak;
}

} // namespace

namespace radiation
{

double e_plane_pattern(double theta_deg, const TlmSolution &tlm, double f_hz)
{
    check_hemisphere(theta_deg);
    check_model(tlm, f_hz);
    // Both cuts are even in theta; folding keeps them exactly symmetric.
    return std::abs(std::cos(0.5 * k0(f_hz) * tlm.l_eff_m * sin_deg(std::abs(theta_deg))));
}

double h_plane_pattern(double theta_deg, const TlmSolution &tlm, double f_hz)
{
    check_hemisphere(theta_deg);
    check_model(tlm, f_hz);
    const double t = std::abs(theta_deg);
    return std::abs(cos_deg(t) * sinc(0.5 * k0(f_hz) * tlm.w_patch_m * sin_deg(t)));
}

double intensity(double theta_deg, double phi_deg, const TlmSolution &tlm, double f_hz)
{
    check_model(tlm, f_hz);
    if (theta_deg > 90.0)
        return 0.0;
    const double st = sin_deg(theta_deg);
    const double sp = sin_deg(phi_deg);
    const double x = 0.5 * k0(f_hz) * tlm.l_eff_m * st * cos_deg(phi_deg);
    const double y = 0.5 * k0(f_hz) * tlm.w_patch_m * st * sp;
    const double cx = std::cos(x);
    const double sy = sinc(y);
    return cx * cx * sy * sy * (1.0 - st * st * sp * sp);
}

PatternGrid sample_grid(const IntensityFn &fn, std::size_t n_theta, std::size_t n_phi, Support support)
{
    PatternGrid g = make_axes(n_theta, n_phi, support);
    const auto rows = static_cast<std::ptrdiff_t>(n_theta);
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t it = 0; it < rows; ++it)
        fill_row(g, fn, static_cast<std::size_t>(it));
    normalize(g);
    return g;
}

PatternGrid intensity_grid(const TlmSolution &tlm, double f_hz, std::size_t n_theta, std::size_t n_phi)
{
    check_model(tlm, f_hz);
    const double half_kl = 0.5 * k0(f_hz) * tlm.l_eff_m;
    const double half_kw = 0.5 * k0(f_hz) * tlm.w_patch_m;
    return sample_grid(
        [half_kl, half_kw](double theta, double phi) { return intensity_rad(theta, phi, half_kl, half_kw); },
        n_theta, n_phi, Support::Hemisphere);
}

Directivity directivity(const PatternGrid &grid)
{
    const std::size_t nt = grid.theta_deg.size();
    const std::size_t np = grid.phi_deg.size();
    if (nt < 2 || np < 2 || grid.u.size() != nt * np)
        throw InvalidArgument("directivity: degenerate grid");

    const double dtheta = (grid.theta_deg.back() - grid.theta_deg.front()) * kDeg / static_cast<double>(nt - 1);
    const double dphi = 2.0 * constants::pi / static_cast<double>(np);

    numerics::CompensatedSum total;
    double u_max = 0.0;
    for (std::size_t it = 0; it < nt; ++it)
    {
        numerics::CompensatedSum row;
        for (std::size_t ip = 0; ip < np; ++ip)
        {
            const double v = grid.at(it, ip);
            row.add(v);
            u_max = std::max(u_max, v);
        }
        const double w = (it == 0 || it + 1 == nt) ? 0.5 : 1.0;
        total.add(w * row.value() * std::sin(grid.theta_deg[it] * kDeg));
    }
    const double prad = total.value() * dtheta * dphi;
    if (!(prad > 0.0))
        throw ModelError("directivity: radiated power integral is zero");
    const double d = 4.0 * constants::pi * u_max / prad;
    return {d, 10.0 * std::log10(d)};
}

double gain(double d0_dbi, double efficiency)
{
    if (!(efficiency > 0.0 && efficiency <= 1.0))
        throw InvalidArgument("efficiency must lie in (0, 1]");
    return d0_dbi + 10.0 * std::log10(efficiency);
}

PatternGrid analyze_pattern(const TlmSolution &tlm, double f_hz, double efficiency, std::size_t n_theta,
                            std::size_t n_phi)
{
    PatternGrid g = intensity_grid(tlm, f_hz, n_theta, n_phi);
    const auto d = directivity(g);
    g.d0_linear = d.linear;
    g.d0_dbi = d.dbi;
    g.efficiency = efficiency;
    g.gain_dbi = gain(d.dbi, efficiency);
    return g;
}

} // namespace radiation

namespace reference
{

radiation::PatternGrid sample_grid(const radiation::IntensityFn &fn, std::size_t n_theta, std::size_t n_phi,
                                   radiation::Support support)
{
    radiation::PatternGrid g = make_axes(n_theta, n_phi, support);
    for (std::size_t it = 0; it < n_theta; ++it)
        fill_row(g, fn, it);
    normalize(g);
    return g;
}

} // namespace reference
} // namespace patchkit

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

#ifndef PATCHKIT_RADIATION_HPP
#define PATCHKIT_RADIATION_HPP

#include "patchkit/synthesis.hpp"

#include <cstddef>
#include <functional>
#include <vector>

namespace patchkit
{

namespace radiation
{

enum class Support
{
    Hemisphere, // theta in [0, 90] deg; the patch over an infinite ground plane
    FullSphere, // theta in [0, 180] deg; only used to check the quadrature
};

// Radiation intensity samples on a (theta, phi) grid. theta includes both
// ends of its range; phi covers [0, 360) without repeating 360.
struct PatternGrid
{
    Support support = Support::Hemisphere;
    std::vector<double> theta_deg;
    std::vector<double> phi_deg;
    std::vector<double> u; // row-major [theta][phi], peak normalized to 1
    double d0_linear = 0.0;
    double d0_dbi = 0.0;
    double efficiency = 1.0;
    double gain_dbi = 0.0;

    double at(std::size_t it, std::size_t ip) const { return u[it * phi_deg.size() + ip]; }
};

inline constexpr double kDefaultEfficiency = 0.85;
inline constexpr std::size_t kDefaultThetaPoints = 181;
inline constexpr std::size_t kDefaultPhiPoints = 360;

// |cos((k0 l_eff / 2) sin theta)|, the two-slot array factor.
double e_plane_pattern(double theta_deg, const TlmSolution &tlm, double f_hz);

// |cos theta * sinc((k0 W / 2) sin theta)|
double h_plane_pattern(double theta_deg, const TlmSolution &tlm, double f_hz);

// U(theta, phi) = cos^2(X) sinc^2(Y) (1 - sin^2 theta sin^2 phi),
// X = (k0 l_eff / 2) sin theta cos phi, Y = (k0 W / 2) sin theta sin phi;
// zero below the ground plane (theta > 90 deg).
double intensity(double theta_deg, double phi_deg, const TlmSolution &tlm, double f_hz);

using IntensityFn = std::function<double(double theta_rad, double phi_rad)>;

// Samples an arbitrary intensity on the grid for a support, normalizing the
// peak to 1. Parallel over theta rows.
PatternGrid sample_grid(const IntensityFn &fn, std::size_t n_theta, std::size_t n_phi, Support support);

// Patch intensity on the upper hemisphere.
PatternGrid intensity_grid(const TlmSolution &tlm, double f_hz, std::size_t n_theta = kDefaultThetaPoints,
                           std::size_t n_phi = kDefaultPhiPoints);

struct Directivity
{
    double linear;
    double dbi;
};

// 4 pi U_max / (integral of U sin theta over the grid support), trapezoid in
// theta, periodic trapezoid in phi.
Directivity directivity(const PatternGrid &grid);

double gain(double d0_dbi, double efficiency);

// intensity_grid + directivity + gain, summary fields filled.
PatternGrid analyze_pattern(const TlmSolution &tlm, double f_hz, double efficiency = kDefaultEfficiency,
                            std::size_t n_theta = kDefaultThetaPoints, std::size_t n_phi = kDefaultPhiPoints);

} // namespace radiation

namespace reference
{
radiation::PatternGrid sample_grid(const radiation::IntensityFn &fn, std::size_t n_theta, std::size_t n_phi,
                                   radiation::Support support);
} // namespace reference

} // namespace patchkit

#endif

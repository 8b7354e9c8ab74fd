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

#ifndef PATCHKIT_MSTRIPLINE_HPP
#define PATCHKIT_MSTRIPLINE_HPP

#include "patchkit/core.hpp"

namespace patchkit
{

struct LineGeometry
{
    double width_m = 0.0;
    double length_m = 0.0;
    double z0_ohm = 0.0;
    double eps_eff_line = 1.0;
};

namespace mstripline
{

struct LineParams
{
    double z0_ohm;
    double eps_eff_line;
};

// Quasi-static Hammerstad closed forms, zero strip thickness, no dispersion.
// eps_eff uses the same (1 + 12 h/w)^(-1/2) form as the patch synthesis.
LineParams line_analysis(double width_m, const Substrate &sub);

inline constexpr double kSynthesisMinZ = 10.0;
inline constexpr double kSynthesisMaxZ = 250.0;
inline constexpr double kSynthesisRelTol = 0.005;
inline constexpr int kSynthesisMaxIter = 200;

// Wheeler's closed-form width estimate; used as the bisection seed.
double wheeler_width(double z_target_ohm, const Substrate &sub);

// Width whose line_analysis impedance matches z_target within 0.5 %.
double line_synthesis(double z_target_ohm, const Substrate &sub);

double guided_wavelength(double f_hz, double eps_eff_line);

// Line of the given impedance, width from line_synthesis and length lambda_g / 4 at f.
LineGeometry qwt_section(double z_qwt_ohm, double f_hz, const Substrate &sub);

// Line of the given width and length; z0/eps_eff re-derived from the substrate.
LineGeometry line_from_width(double width_m, double length_m, const Substrate &sub);

} // namespace mstripline
} // namespace patchkit

#endif

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

#ifndef PATCHKIT_SYNTHESIS_HPP
#define PATCHKIT_SYNTHESIS_HPP

#include "patchkit/core.hpp"

namespace patchkit
{

// Transmission-line-model design of a rectangular patch.
struct TlmSolution
{
    double w_patch_m = 0.0;  // radiating width
    double eps_eff = 0.0;    // effective dielectric constant of the patch
    double delta_l_m = 0.0;  // fringing extension at each radiating edge
    double l_eff_m = 0.0;    // electrical length, l_patch + 2 delta_l
    double l_patch_m = 0.0;  // physical length
    double z_edge_ohm = 0.0; // closed-form edge input impedance
    double z_qwt_ohm = 0.0;  // quarter-wave transformer impedance to the reference
};

namespace synthesis
{

// Width giving efficient radiation: c / (2 f) * sqrt(2 / (eps_r + 1)).
double patch_width(double f_r_hz, double eps_r);

// Quasi-static effective permittivity of a microstrip of width w on height h:
//   (eps_r + 1)/2 + (eps_r - 1)/2 * (1 + 12 h / w)^(-1/2)
// The design write-up this library follows prints the exponent as -1; that
// version does not reproduce its own 3.2 mm patch length (it gives ~3.38 mm),
// the standard -1/2 form does, so -1/2 is used.
double effective_permittivity(double eps_r, double h_m, double w_m);

// Hammerstad fringing extension; linear in h at fixed w/h.
double length_extension(double eps_eff, double h_m, double w_m);

struct PatchLength
{
    double l_eff_m;
    double l_patch_m;
};

PatchLength patch_length(double f_r_hz, double eps_eff, double delta_l_m);

// 90 * eps_r^2 / (eps_r - 1) * (L / W)^2. Singular at eps_r = 1, so air
// substrates are rejected.
double edge_impedance(double eps_r, double l_patch_m, double w_patch_m);

// sqrt(z0 * z_edge)
double qwt_impedance(double z0_ohm, double z_edge_ohm);

// Full chain width -> eps_eff -> delta_l -> lengths -> edge impedance ->
// transformer impedance. A failing stage rethrows with the stage name prefixed.
TlmSolution synthesize_patch(const DesignTarget &target, const Substrate &sub);

// Re-derives a solution for fixed physical dimensions (eps_eff, delta_l,
// l_eff and both impedances follow from w and l).
TlmSolution solution_from_dimensions(const DesignTarget &target, const Substrate &sub, double w_patch_m,
                                     double l_patch_m);

} // namespace synthesis
} // namespace patchkit

#endif

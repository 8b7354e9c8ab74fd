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

#ifndef PATCHKIT_NETWORK_HPP
#define PATCHKIT_NETWORK_HPP

#include "patchkit/design.hpp"
#include "patchkit/numerics.hpp"

#include <complex>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace patchkit
{

using Complex = std::complex<double>;

namespace network
{

// Radiating-slot self conductance G1 = I1 / (120 pi^2),
//   I1 = int_0^pi [sin((k0 w / 2) cos t) / cos t]^2 sin^3 t dt.
double slot_conductance(double w_patch_m, double f_hz, const numerics::QuadratureOptions &opt = {});

// Same integral with a fixed composite Simpson rule of n panels.
double slot_conductance_panels(double w_patch_m, double f_hz, std::size_t n_panels);

// Thin-substrate slot susceptance (w / (120 lambda0)) (1 - 0.636 ln(k0 h)).
// Only valid for k0 h < 1.
double slot_susceptance(double w_patch_m, const Substrate &sub, double f_hz);

// Mutual conductance of the two radiating slots separated by l_eff
// (J0-weighted version of the G1 integral). May be negative; |G12| < G1.
double mutual_conductance(double w_patch_m, double l_eff_m, double f_hz, const numerics::QuadratureOptions &opt = {});

// Resonant input resistance of two coupled slots, 1 / (2 (G1 + G12)).
double edge_resistance_slot_model(double g1, double g12);

// Transforms a load admittance y_load through a lossless line of
// characteristic admittance yc and electrical length beta_l.
Complex line_admittance(Complex y_load, double yc, double beta_l);

// Admittance at the feed edge of the patch: the patch interior is a line of
// width W and physical length L terminated by a slot admittance at each end.
Complex patch_admittance(const TlmSolution &tlm, const Substrate &sub, double f_hz);
Complex input_impedance(const TlmSolution &tlm, const Substrate &sub, double f_hz);

// Lossless ABCD transformation of z_load through a line section.
Complex cascade_line(Complex z_load, double z0_line, double beta_l);
Complex cascade_qwt(Complex z_load, const LineGeometry &line, double f_hz);

Complex s11(Complex z, double z0_ref);

// 20 log10 |gamma|; -infinity at gamma = 0.
double s11_db(Complex gamma);
// Positive return loss, -s11_db.
double return_loss_db(Complex gamma);
// (1 + |gamma|) / (1 - |gamma|); +infinity at |gamma| = 1.
double vswr(Complex gamma);

// Impedance seen at the 50 ohm feed reference plane and its reflection.
Complex feed_impedance(const PatchDesign &d, double f_hz);
Complex reflection(const PatchDesign &d, double f_hz);

// Frequency where Im(Yin) of the patch crosses zero from below inside the
// first resonant window beta L in (pi/2, pi). This is the fundamental
// TM10 resonance of the line model.
double patch_resonance(const TlmSolution &tlm, const Substrate &sub);

struct Band
{
    double f_low_hz = 0.0;
    double f_high_hz = 0.0;
    double bw_hz = 0.0;
    bool clipped_low = false;
    bool clipped_high = false;
    bool clipped() const { return clipped_low || clipped_high; }
};

struct SweepResult
{
    std::vector<double> freqs_hz;
    std::vector<Complex> gamma;
    std::vector<double> s11_db;
    std::vector<double> vswr;
    std::vector<std::uint8_t> valid; // 0 where the model was singular at that point
    double f_res_hz = 0.0;
    double s11_at_res_db = 0.0;
    std::optional<Band> band; // nullopt: no -10 dB band around f_res
    double threshold_db = -10.0;
};

std::vector<double> band_frequencies(const BandSpec &band);

// Per-point evaluation only (gamma and derived sequences). OpenMP-parallel
// over frequencies; results land at their own index so output does not
// depend on the schedule.
SweepResult evaluate_points(const PatchDesign &d, const BandSpec &band);

// evaluate_points + find_resonance + bandwidth.
SweepResult sweep(const PatchDesign &d, const BandSpec &band, double threshold_db = -10.0);

// Grid minimum of mag (over valid points) refined by golden section on
// model within the two neighbouring grid intervals. Throws ModelError
// "resonance not bracketed" when the grid minimum sits on a band edge.
double find_resonance(std::span<const double> freqs_hz, std::span<const double> mag,
                      std::span<const std::uint8_t> valid, const numerics::ScalarFn &model);

// Contiguous interval around f_res where s11_db <= threshold, edges by
// linear interpolation between grid points.
std::optional<Band> bandwidth(std::span<const double> freqs_hz, std::span<const double> s11_db,
                              std::span<const std::uint8_t> valid, double f_res_hz, double threshold_db = -10.0);

} // namespace network

namespace reference
{
// Serial version of network::evaluate_points.
network::SweepResult evaluate_points(const PatchDesign &d, const BandSpec &band);
} // namespace reference

} // namespace patchkit

#endif

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

#ifndef PATCHKIT_TUNE_HPP
#define PATCHKIT_TUNE_HPP

#include "patchkit/design.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace patchkit::tune
{

struct TuneOptions
{
    double freq_tol_hz = 1e3;
    int max_steps = 100;
    double bracket_lo = 0.8; // L multipliers bracketing the search
    double bracket_hi = 1.2;
};

// Bisection on the patch length until the network-model resonance sits at
// the target frequency. Only l_patch_m and l_eff_m change. Checks that
// f_res(0.8 L) > f_target > f_res(1.2 L) before iterating.
TlmSolution tune_length(const DesignTarget &target, const Substrate &sub, const TlmSolution &tlm,
                        const TuneOptions &opt = {});

// Length-scaled copy: l_patch = L, l_eff = L + 2 delta_l.
TlmSolution with_length(const TlmSolution &tlm, double l_patch_m);

// sqrt(z0 * R_model); throws for nonpositive R_model.
double transformer_impedance(double r_model_ohm, double z0_ohm);

struct MatchResult
{
    double f_res_hz;
    double r_model_ohm; // Re(Zin) at the patch edge at resonance
    double z_qwt_ohm;
    LineGeometry qwt;
};

// Sizes the quarter-wave section from the line model's resonant edge
// resistance instead of the closed-form edge impedance.
MatchResult match_qwt(const TlmSolution &tlm, const Substrate &sub, const DesignTarget &target);

struct ToleranceSpec
{
    double rel_tol_dims = 0.0; // 1-sigma, relative, patch and line dimensions
    double rel_tol_eps = 0.0;  // 1-sigma, relative, eps_r
    std::size_t n_samples = 100;
    std::uint64_t seed = 0;
};

void validate_tolerance_spec(const ToleranceSpec &spec);

inline constexpr double kTruncationSigma = 4.0;

struct SummaryStats
{
    double mean = 0.0;
    double std = 0.0;
    double min = 0.0;
    double max = 0.0;
};

struct SampleOutcome
{
    bool ok = false;
    double f_res_hz = 0.0;
    double s11_at_fr_db = 0.0;
};

struct ToleranceStats
{
    std::size_t n_samples = 0;
    std::size_t n_failed = 0;
    std::uint64_t seed = 0;
    std::string generator;
    SummaryStats f_res_hz;
    SummaryStats s11_at_fr_db; // |S11| at the nominal f_r, in dB
};

// Sample i draws from Philox stream i of the seed, so it is reproducible on
// its own. Samples run in parallel; aggregation walks them in index order.
SampleOutcome evaluate_sample(const PatchDesign &design, const ToleranceSpec &spec, std::size_t i);

ToleranceStats tolerance_mc(const PatchDesign &design, const ToleranceSpec &spec);

// Mean, sample standard deviation, min and max over ok outcomes. Sums are
// shifted by the first value and Neumaier-compensated.
ToleranceStats summarize(const std::vector<SampleOutcome> &outcomes, const ToleranceSpec &spec);

} // namespace patchkit::tune

namespace patchkit::reference
{
tune::ToleranceStats tolerance_mc(const PatchDesign &design, const tune::ToleranceSpec &spec);
} // namespace patchkit::reference

#endif

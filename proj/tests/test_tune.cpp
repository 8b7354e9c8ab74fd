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

#include "patchkit/design.hpp"
#include "patchkit/network.hpp"
#include "patchkit/synthesis.hpp"
#include "patchkit/tune.hpp"

#include <catch_amalgamated.hpp>
#include <omp.h>

#include <chrono>
#include <cmath>
#include <random>

using namespace patchkit;
using Catch::Approx;

namespace
{

const Substrate kSub{1.96, 0.762e-3, 0.0, "rt5880lz"};
const DesignTarget kTarget{28e9, 50.0};

PatchDesign reference_design() { return design_patch(kTarget, kSub); }

} // namespace

TEST_CASE("tune_length against a fine length scan", "[tune]")
{
    const auto s = synthesis::synthesize_patch(kTarget, kSub);
    const auto t = tune::tune_length(kTarget, kSub, s);

    // Step L in 1 um increments and interpolate the 28 GHz crossing.
    double prev_l = 3.0e-3, prev_f = network::patch_resonance(tune::with_length(s, prev_l), kSub), scan = 0.0;
    for (double l = 3.001e-3; l <= 3.7e-3 && scan == 0.0; l += 1e-6)
    {
        const double f = network::patch_resonance(tune::with_length(s, l), kSub);
        if (prev_f >= 28e9 && f < 28e9)
            scan = prev_l + (l - prev_l) * (prev_f - 28e9) / (prev_f - f);
        prev_l = l;
        prev_f = f;
    }
    REQUIRE(scan > 0.0);
    CHECK(t.l_patch_m == Approx(scan).margin(2e-9));
    CHECK(t.l_patch_m >= 3.0e-3);
    CHECK(t.l_patch_m <= 3.6e-3);
    CHECK(network::patch_resonance(t, kSub) == Approx(28e9).margin(10e6));
    CHECK(t.w_patch_m == s.w_patch_m);
    CHECK(t.delta_l_m == s.delta_l_m);
    CHECK(t.l_eff_m == Approx(t.l_patch_m + 2.0 * t.delta_l_m).epsilon(1e-15));
}

TEST_CASE("tune_length fixed point and bracketing", "[tune]")
{
    const auto s = synthesis::synthesize_patch(kTarget, kSub);
    const auto t = tune::tune_length(kTarget, kSub, s);
    const auto again = tune::tune_length(kTarget, kSub, t);
    // 1 kHz of resonance corresponds to well under a nanometre of length.
    CHECK(again.l_patch_m == Approx(t.l_patch_m).margin(1e-9));
    CHECK_THROWS_WITH(tune::tune_length({60e9, 50.0}, kSub, s), Catch::Matchers::ContainsSubstring("not bracketed"));
    CHECK_THROWS_AS(tune::tune_length({60e9, 50.0}, kSub, s), ModelError);
}

TEST_CASE("transformer impedance", "[tune]")
{
    CHECK(tune::transformer_impedance(190.5, 50.0) == Approx(97.6).margin(0.005));
    CHECK(tune::transformer_impedance(50.0, 50.0) == 50.0);
    CHECK(tune::transformer_impedance(220.0, 50.0) == Approx(104.9).margin(0.05));
    CHECK_THROWS_AS(tune::transformer_impedance(0.0, 50.0), InvalidArgument);
    CHECK_THROWS_AS(tune::transformer_impedance(-3.0, 50.0), InvalidArgument);
}

TEST_CASE("match_qwt sizes the section from the model resistance", "[tune]")
{
    const auto t = tune::tune_length(kTarget, kSub, synthesis::synthesize_patch(kTarget, kSub));
    const auto m = tune::match_qwt(t, kSub, kTarget);
    const double r = network::input_impedance(t, kSub, m.f_res_hz).real();
    CHECK(m.r_model_ohm == Approx(r).epsilon(1e-12));
    CHECK(m.z_qwt_ohm == Approx(std::sqrt(50.0 * r)).epsilon(1e-12));
    CHECK(std::abs(m.qwt.z0_ohm - m.z_qwt_ohm) / m.z_qwt_ohm <= 0.005);
    const auto d = reference_design();
    CHECK(std::abs(network::reflection(d, 28e9)) < 0.1);
}

TEST_CASE("tolerance spec validation", "[tune]")
{
    CHECK_NOTHROW(tune::validate_tolerance_spec({0.01, 0.0, 1, 0}));
    CHECK_THROWS_AS(tune::validate_tolerance_spec({0.01, 0.0, 0, 0}), InvalidArgument);
    CHECK_THROWS_AS(tune::validate_tolerance_spec({-0.01, 0.0, 10, 0}), InvalidArgument);
    CHECK_THROWS_AS(tune::validate_tolerance_spec({0.0, -0.01, 10, 0}), InvalidArgument);
}

TEST_CASE("zero tolerance collapses to the nominal design", "[tune]")
{
    const auto d = reference_design();
    const auto st = tune::tolerance_mc(d, {0.0, 0.0, 20, 3});
    CHECK(st.n_failed == 0);
    CHECK(st.f_res_hz.std == 0.0);
    CHECK(st.s11_at_fr_db.std == 0.0);
    CHECK(st.f_res_hz.mean == network::patch_resonance(d.tlm, d.sub));
    CHECK(st.f_res_hz.min == st.f_res_hz.max);
    CHECK(st.generator == "philox4x32-10");
    CHECK(st.seed == 3);
}

TEST_CASE("same seed gives identical statistics", "[tune]")
{
    const auto d = reference_design();
    const tune::ToleranceSpec spec{0.01, 0.01, 64, 7};
    const auto a = tune::tolerance_mc(d, spec);
    const auto b = tune::tolerance_mc(d, spec);
    CHECK(a.f_res_hz.mean == b.f_res_hz.mean);
    CHECK(a.f_res_hz.std == b.f_res_hz.std);
    CHECK(a.s11_at_fr_db.mean == b.s11_at_fr_db.mean);
    const auto c = tune::tolerance_mc(d, {0.01, 0.01, 64, 8});
    CHECK(c.f_res_hz.mean != a.f_res_hz.mean);
}

TEST_CASE("parallel Monte Carlo matches the serial reference bit for bit", "[tune][parallel]")
{
    const auto d = reference_design();
    const tune::ToleranceSpec spec{0.02, 0.01, 97, 11};
    const auto ref = reference::tolerance_mc(d, spec);
    for (int threads : {1, 2, 4, 7})
    {
        omp_set_num_threads(threads);
        const auto par = tune::tolerance_mc(d, spec);
        CHECK(par.f_res_hz.mean == ref.f_res_hz.mean);
        CHECK(par.f_res_hz.std == ref.f_res_hz.std);
        CHECK(par.f_res_hz.min == ref.f_res_hz.min);
        CHECK(par.s11_at_fr_db.max == ref.s11_at_fr_db.max);
        CHECK(par.n_failed == ref.n_failed);
    }
    omp_set_num_threads(1);
}

// The oracle uses the standard library engine and normal distribution and
// perturbs only what moves the patch resonance (W and L).
TEST_CASE("1% dimension tolerance spread", "[tune][slow]")
{
    const auto d = reference_design();
    const auto st = tune::tolerance_mc(d, {0.01, 0.0, 1000, 2024});
    const double rel = st.f_res_hz.std / 28e9;
    CHECK(rel >= 0.003);
    CHECK(rel <= 0.03);

    std::mt19937_64 eng(99);
    std::normal_distribution<double> n01;
    auto draw = [&] {
        double x;
        do
            x = n01(eng);
        while (std::abs(x) > 4.0);
        return x;
    };
    const int n = ORACLE_SAMPLES;
    double sum = 0.0, sq = 0.0;
    for (int i = 0; i < n; ++i)
    {
        const double w = d.tlm.w_patch_m * (1.0 + 0.01 * draw());
        const double l = d.tlm.l_patch_m * (1.0 + 0.01 * draw());
        const double f = network::patch_resonance(synthesis::solution_from_dimensions(kTarget, kSub, w, l), kSub);
        sum += f;
        sq += f * f;
    }
    const double mean = sum / n;
    const double oracle_std = std::sqrt((sq - n * mean * mean) / (n - 1));
    CHECK(st.f_res_hz.std == Approx(oracle_std).epsilon(0.06));
    CHECK(st.f_res_hz.mean == Approx(mean).epsilon(1e-3));
}

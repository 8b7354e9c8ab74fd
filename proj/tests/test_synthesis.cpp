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

#include "patchkit/synthesis.hpp"

#include <catch_amalgamated.hpp>

#include <cmath>

using namespace patchkit;
using Catch::Approx;

namespace
{

// Independent closed forms, written out longhand for comparison.
namespace oracle
{
constexpr double c = 299792458.0;
double width(double f, double er) { return c / (2.0 * f) * std::sqrt(2.0 / (er + 1.0)); }
double eps_eff(double er, double h, double w) { return (er + 1.0) / 2.0 + (er - 1.0) / 2.0 / std::sqrt(1.0 + 12.0 * h / w); }
double delta_l(double ee, double h, double w)
{
    const double u = w / h;
    return 0.412 * h * (ee + 0.3) * (u + 0.264) / ((ee - 0.258) * (u + 0.8));
}
} // namespace oracle

const Substrate kSub{1.96, 0.762e-3, 0.0, "rt5880lz"};

} // namespace

TEST_CASE("patch width", "[synthesis]")
{
    CHECK(synthesis::patch_width(28e9, 1.96) == Approx(oracle::width(28e9, 1.96)).epsilon(1e-14));
    CHECK(synthesis::patch_width(28e9, 1.96) * 1e3 == Approx(4.40050).margin(1e-5));
    CHECK(synthesis::patch_width(30e9, 1.0) == Approx(299792458.0 / 60e9).epsilon(1e-14));
    CHECK(synthesis::patch_width(10e9, 4.3) * 1e3 == Approx(9.2081).margin(1e-3));
    CHECK_THROWS_AS(synthesis::patch_width(0.0, 2.0), InvalidArgument);
    CHECK_THROWS_AS(synthesis::patch_width(1e9, 0.9), InvalidArgument);
}

TEST_CASE("effective permittivity", "[synthesis]")
{
    CHECK(synthesis::effective_permittivity(1.96, 0.762e-3, 4.404e-3) == Approx(1.754).margin(5e-4));
    CHECK(synthesis::effective_permittivity(1.0, 3e-3, 0.1e-3) == 1.0);
    CHECK(synthesis::effective_permittivity(2.2, 0.1e-3, 100e-3) == Approx(2.1964).margin(1e-4));
    CHECK(synthesis::effective_permittivity(3.5, 0.5e-3, 2e-3) == Approx(oracle::eps_eff(3.5, 0.5e-3, 2e-3)).epsilon(1e-14));
    CHECK_THROWS_AS(synthesis::effective_permittivity(2.0, 0.0, 1e-3), InvalidArgument);
    CHECK_THROWS_AS(synthesis::effective_permittivity(2.0, 1e-3, -1e-3), InvalidArgument);
}

TEST_CASE("length extension", "[synthesis]")
{
    CHECK(synthesis::length_extension(1.754, 0.762e-3, 4.404e-3) * 1e3 == Approx(0.396).margin(5e-4));
    CHECK(synthesis::length_extension(2.0, 1e-3, 10e-3) * 1e3 == Approx(0.412 * 2.3 * 10.264 / (1.742 * 10.8)).epsilon(1e-12));
    const double a = synthesis::length_extension(1.8, 0.5e-3, 2e-3);
    const double b = synthesis::length_extension(1.8, 1.0e-3, 4e-3);
    CHECK(b == Approx(2.0 * a).epsilon(1e-14));
    CHECK(a == Approx(oracle::delta_l(1.8, 0.5e-3, 2e-3)).epsilon(1e-14));
    CHECK_THROWS_AS(synthesis::length_extension(0.258, 1e-3, 1e-3), InvalidArgument);
}

TEST_CASE("patch length", "[synthesis]")
{
    const auto p = synthesis::patch_length(28e9, 1.754, 0.396e-3);
    CHECK(p.l_eff_m * 1e3 == Approx(4.042).margin(1e-3));
    CHECK(p.l_patch_m * 1e3 == Approx(3.250).margin(1e-3));
    const auto z = synthesis::patch_length(10e9, 2.0, 0.0);
    CHECK(z.l_patch_m == z.l_eff_m);
    const auto q = synthesis::patch_length(10e9, 2.0, 0.5e-3);
    CHECK(q.l_eff_m * 1e3 == Approx(10.600).margin(1e-3));
    CHECK(q.l_patch_m * 1e3 == Approx(9.600).margin(1e-3));
    CHECK_THROWS_AS(synthesis::patch_length(10e9, 2.0, 6e-3), InvalidArgument);
}

TEST_CASE("edge and transformer impedance", "[synthesis]")
{
    CHECK(synthesis::edge_impedance(1.96, 3.2e-3, 4.4e-3) == Approx(190.5).margin(0.05));
    CHECK(synthesis::edge_impedance(2.0, 5e-3, 5e-3) == Approx(360.0).epsilon(1e-14));
    CHECK(synthesis::edge_impedance(1.96, 3.2505e-3, 4.404e-3) == Approx(196.2).margin(0.1));
    CHECK_THROWS_WITH(synthesis::edge_impedance(1.0, 3e-3, 4e-3), Catch::Matchers::ContainsSubstring("singular"));
    CHECK(synthesis::qwt_impedance(50.0, 190.5) == Approx(97.60).margin(0.005));
    CHECK(synthesis::qwt_impedance(73.0, 73.0) == Approx(73.0).epsilon(1e-15));
    CHECK(synthesis::qwt_impedance(50.0, 200.0) == 100.0);
    CHECK_THROWS_AS(synthesis::qwt_impedance(0.0, 100.0), InvalidArgument);
}

TEST_CASE("full synthesis pipeline", "[synthesis]")
{
    const auto s = synthesis::synthesize_patch({28e9, 50.0}, kSub);
    CHECK(s.w_patch_m * 1e3 == Approx(4.4005).margin(1e-4));
    CHECK(s.l_patch_m * 1e3 == Approx(3.2508).margin(1e-4));
    CHECK(s.z_edge_ohm == Approx(196.5).margin(0.1));
    CHECK(s.z_qwt_ohm == Approx(99.13).margin(0.01));
    CHECK(s.l_patch_m == Approx(s.l_eff_m - 2.0 * s.delta_l_m).epsilon(1e-15));
    CHECK(s.eps_eff >= 1.0);
    CHECK(s.eps_eff <= kSub.eps_r);
    CHECK(s.z_qwt_ohm >= 50.0);
    CHECK(s.z_qwt_ohm <= s.z_edge_ohm);

    const auto r = synthesis::solution_from_dimensions({28e9, 50.0}, kSub, 4.4e-3, 3.2e-3);
    CHECK(r.z_edge_ohm == Approx(190.5).margin(0.05));
    CHECK(r.z_qwt_ohm == Approx(97.6).margin(0.01));

    const Substrate air{1.0, 0.762e-3, 0.0, "air"};
    CHECK_THROWS_WITH(synthesis::synthesize_patch({28e9, 50.0}, air), Catch::Matchers::ContainsSubstring("edge_impedance"));
    CHECK_THROWS_AS(synthesis::synthesize_patch({28e9, 50.0}, air), InvalidArgument);
}

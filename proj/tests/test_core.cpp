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

#include "patchkit/core.hpp"
#include "patchkit/format.hpp"

#include <catch_amalgamated.hpp>

#include <cmath>
#include <limits>

using namespace patchkit;

TEST_CASE("substrate invariants", "[core]")
{
    CHECK_NOTHROW(validate_substrate({1.96, 0.762e-3, 0.0, "a"}));
    CHECK_NOTHROW(validate_substrate({1.0, 1e-3, 0.0, "vacuum"}));
    CHECK_THROWS_WITH(validate_substrate({0.9, 1e-3, 0.0, ""}), Catch::Matchers::ContainsSubstring("eps_r below 1"));
    CHECK_THROWS_AS(validate_substrate({2.0, 0.0, 0.0, ""}), InvalidArgument);
    CHECK_THROWS_AS(validate_substrate({2.0, -1e-3, 0.0, ""}), InvalidArgument);
    CHECK_THROWS_AS(validate_substrate({2.0, 1e-3, 1.0, ""}), InvalidArgument);
    CHECK_THROWS_AS(validate_substrate({2.0, 1e-3, -0.1, ""}), InvalidArgument);
    CHECK_THROWS_AS(validate_substrate({std::nan(""), 1e-3, 0.0, ""}), InvalidArgument);
}

TEST_CASE("target and band invariants", "[core]")
{
    CHECK_NOTHROW(validate_target({28e9, 50.0}));
    CHECK_THROWS_AS(validate_target({0.0, 50.0}), InvalidArgument);
    CHECK_THROWS_AS(validate_target({28e9, 0.0}), InvalidArgument);
    CHECK_NOTHROW(validate_band({26e9, 30e9, 2}));
    CHECK_THROWS_AS(validate_band({26e9, 30e9, 1}), InvalidArgument);
    CHECK_THROWS_AS(validate_band({30e9, 26e9, 11}), InvalidArgument);
    CHECK_THROWS_AS(validate_band({26e9, 26e9, 11}), InvalidArgument);
}

TEST_CASE("constants and built-in substrate", "[core]")
{
    STATIC_REQUIRE(constants::c0 == 299792458.0);
    const Substrate s = rt5880lz();
    CHECK(s.eps_r == 1.96);
    CHECK(s.height_m == 0.762e-3);
    CHECK(s.loss_tangent == 0.0);
    CHECK(substrate_by_name("rt5880lz").eps_r == 1.96);
    CHECK_THROWS_AS(substrate_by_name("fr4-unknown"), InvalidArgument);
}

TEST_CASE("number formatting", "[core][format]")
{
    CHECK(fmt::trimmed(1.0) == "1.0");
    CHECK(fmt::trimmed(2.5) == "2.5");
    CHECK(fmt::trimmed(-0.0) == "0.0");
    CHECK(fmt::trimmed(-std::numeric_limits<double>::infinity()) == "-inf");
    CHECK(fmt::fixed(3.14159, 3) == "3.142");
    CHECK(fmt::scientific(0.0, 9) == "0.000000000e+00");
    CHECK(fmt::parse_double("+2.5") == 2.5);
    CHECK(fmt::parse_double(fmt::shortest(0.1)) == 0.1);
    CHECK_THROWS_AS(fmt::parse_double("abc"), InvalidArgument);
    CHECK_THROWS_AS(fmt::parse_double("1.0x"), InvalidArgument);
}

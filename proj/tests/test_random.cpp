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

#include "patchkit/random.hpp"

#include <catch_amalgamated.hpp>

#include <cmath>
#include <vector>

using namespace patchkit::random;

// Known-answer vectors distributed with the reference Philox implementation.
TEST_CASE("philox4x32-10 known answers", "[random]")
{
    CHECK(philox4x32_10({0, 0, 0, 0}, {0, 0}) == PhiloxCounter{0x6627e8d5, 0xe169c58d, 0xbc57ac4c, 0x9b00dbd8});
    CHECK(philox4x32_10({0xffffffff, 0xffffffff, 0xffffffff, 0xffffffff}, {0xffffffff, 0xffffffff}) ==
          PhiloxCounter{0x408f276d, 0x41c83b0e, 0xa20bc7c6, 0x6d5451fd});
    CHECK(philox4x32_10({0x243f6a88, 0x85a308d3, 0x13198a2e, 0x03707344}, {0xa4093822, 0x299f31d0}) ==
          PhiloxCounter{0xd16cfe09, 0x94fdcceb, 0x5001e420, 0x24126ea1});
}

TEST_CASE("normal streams are reproducible and independent", "[random]")
{
    NormalStream a(7, 3), b(7, 3), c(7, 4), d(8, 3);
    bool all_same = true, any_diff_stream = false, any_diff_seed = false;
    for (int i = 0; i < 50; ++i)
    {
        const double x = a.next();
        all_same = all_same && x == b.next();
        any_diff_stream = any_diff_stream || x != c.next();
        any_diff_seed = any_diff_seed || x != d.next();
    }
    CHECK(all_same);
    CHECK(any_diff_stream);
    CHECK(any_diff_seed);
}

TEST_CASE("normal moments and truncation", "[random]")
{
    NormalStream s(12345, 0);
    const int n = 200000;
    double sum = 0.0, sq = 0.0, worst = 0.0;
    for (int i = 0; i < n; ++i)
    {
        const double x = s.next_truncated(4.0);
        sum += x;
        sq += x * x;
        worst = std::max(worst, std::abs(x));
    }
    const double mean = sum / n;
    CHECK(std::abs(mean) < 0.01);
    CHECK(std::abs(sq / n - mean * mean - 1.0) < 0.015);
    CHECK(worst <= 4.0);

    NormalStream t(1, 1);
    for (int i = 0; i < 10000; ++i)
        REQUIRE(std::abs(t.next_truncated(0.5)) <= 0.5);
}

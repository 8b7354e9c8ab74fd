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

#ifndef PATCHKIT_RANDOM_HPP
#define PATCHKIT_RANDOM_HPP

#include <array>
#include <cstdint>

namespace patchkit::random
{

// Philox4x32-10 counter-based generator (Salmon et al., SC'11, as in
// Random123). Output is a pure function of (counter, key), so any sample
// can be regenerated independently of thread count or draw order.
using PhiloxCounter = std::array<std::uint32_t, 4>;
using PhiloxKey = std::array<std::uint32_t, 2>;

PhiloxCounter philox4x32_10(PhiloxCounter ctr, PhiloxKey key);

inline constexpr const char *kGeneratorName = "philox4x32-10";

// Standard normal stream for one (seed, stream id) pair. Box-Muller over
// 53-bit uniforms; every Philox block yields two normals.
class NormalStream
{
public:
    NormalStream(std::uint64_t seed, std::uint64_t stream_id);

    double next();

    // Normal truncated to [-limit, limit] by rejection.
    double next_truncated(double limit);

private:
    void refill();

    PhiloxKey key_;
    std::uint64_t stream_;
    std::uint32_t block_ = 0;
    double cache_[2] = {0.0, 0.0};
    int cached_ = 0;
};

} // namespace patchkit::random

#endif

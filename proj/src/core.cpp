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

#include <algorithm>
#include <cctype>
#include <cmath>

namespace patchkit
{

const Substrate &validate_substrate(const Substrate &s)
{
    if (!std::isfinite(s.eps_r) || s.eps_r < 1.0)
        throw InvalidArgument("substrate: eps_r below 1 (got " + std::to_string(s.eps_r) + ")");
    if (!std::isfinite(s.height_m) || s.height_m <= 0.0)
        throw InvalidArgument("substrate: height must be positive");
    if (!std::isfinite(s.loss_tangent) || s.loss_tangent < 0.0 || s.loss_tangent >= 1.0)
        throw InvalidArgument("substrate: loss tangent outside [0, 1)");
    return s;
}

const DesignTarget &validate_target(const DesignTarget &t)
{
    if (!std::isfinite(t.f_r_hz) || t.f_r_hz <= 0.0)
        throw InvalidArgument("target: resonant frequency must be positive");
    if (!std::isfinite(t.z0_ohm) || t.z0_ohm <= 0.0)
        throw InvalidArgument("target: reference impedance must be positive");
    return t;
}

const BandSpec &validate_band(const BandSpec &b)
{
    if (!std::isfinite(b.f_start_hz) || !std::isfinite(b.f_stop_hz) || b.f_start_hz <= 0.0)
        throw InvalidArgument("band: start frequency must be positive");
    if (!(b.f_start_hz < b.f_stop_hz))
        throw InvalidArgument("band: start must be below stop");
    if (b.n_points < 2)
        throw InvalidArgument("band: need at least 2 points");
    return b;
}

Substrate rt5880lz()
{
    return Substrate{1.96, units::mm_to_m(0.762), 0.0, "rt5880lz"};
}

Substrate substrate_by_name(const std::string &name)
{
    std::string key = name;
    std::transform(key.begin(), key.end(), key.begin(), [](unsigned char ch) { return std::tolower(ch); });
    if (key == "rt5880lz")
        return rt5880lz();
    throw InvalidArgument("unknown substrate '" + name + "'");
}

} // namespace patchkit

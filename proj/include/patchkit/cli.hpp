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

#ifndef PATCHKIT_CLI_HPP
#define PATCHKIT_CLI_HPP

#include "patchkit/design.hpp"
#include "patchkit/tune.hpp"

#include <iosfwd>
#include <optional>
#include <string>

namespace patchkit::cli
{

enum ExitCode : int
{
    kOk = 0,
    kModelFailure = 1,
    kUsage = 2,
};

enum class UslotMode
{
    None,
    Default,
    Custom,
};

// Resolved configuration: defaults, then the --config JSON file, then flags.
struct RunConfig
{
    DesignTarget target{28e9, 50.0};
    Substrate sub = rt5880lz();
    BandSpec band{26e9, 30e9, 401};
    double efficiency = 0.85;
    UslotMode uslot_mode = UslotMode::None;
    std::optional<double> uslot_w_mm, uslot_l_mm, uslot_arm_mm, uslot_y_mm;
    tune::ToleranceSpec tolerance{0.01, 0.0, 100, 0};
    std::string out_dir = "out";
    bool published_rows = false;
};

// Parses the JSON RunConfig document into cfg. Unknown keys are errors
// (InvalidArgument).
void apply_config_json(RunConfig &cfg, const std::string &text);

// Checks every invariant of the resolved config (InvalidArgument).
void validate_config(const RunConfig &cfg);

// Entry point shared by the executable and the tests.
int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

} // namespace patchkit::cli

#endif

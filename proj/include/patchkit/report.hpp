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

#ifndef PATCHKIT_REPORT_HPP
#define PATCHKIT_REPORT_HPP

#include "patchkit/network.hpp"
#include "patchkit/radiation.hpp"

#include <string>
#include <vector>

namespace patchkit::report
{

// Touchstone v1 one-port, "# GHz S RI R <z0>", one line per valid point.
// Values are written as d.ddddddddde+XX (10 significant digits).
std::string write_touchstone(const network::SweepResult &sweep, double z0_ref,
                             const std::vector<std::string> &comments = {});

struct TouchstoneData
{
    double z0_ref = 50.0;
    std::vector<double> freqs_hz;
    std::vector<Complex> gamma;
};

// Reads one-port files with Hz/kHz/MHz/GHz units and RI/MA/DB formats.
TouchstoneData parse_touchstone(const std::string &text);

// freq_hz,s11_db,vswr
std::string write_sweep_csv(const network::SweepResult &sweep);

// theta_deg,e_plane_db,h_plane_db for theta in [-90, 90], taken from the
// phi = 0/180 and phi = 90/270 columns of a hemisphere grid (n_phi must be a
// multiple of 4). dB is normalized to broadside; zeros print as "-inf".
std::string write_pattern_csv(const radiation::PatternGrid &grid);

struct ComparisonRow
{
    std::string label;
    double s11_db;
    double bandwidth_ghz;
    double gain_dbi;
};

inline constexpr const char *kModelRowLabel = "TL-model estimate";

// Published full-wave results of the 28 GHz reference design and three
// literature antennas. Static data, never recomputed.
const std::vector<ComparisonRow> &published_rows();

std::string comparison_table(const ComparisonRow &own, bool include_published_rows);

struct ReportOptions
{
    double efficiency = radiation::kDefaultEfficiency;
};

std::string design_report(const PatchDesign &design, const network::SweepResult &sweep,
                          const radiation::PatternGrid &grid, const ReportOptions &opt = {});

} // namespace patchkit::report

#endif

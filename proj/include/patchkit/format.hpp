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

#ifndef PATCHKIT_FORMAT_HPP
#define PATCHKIT_FORMAT_HPP

#include <string>

// Locale-independent number formatting for the writers. Non-finite values
// come out as "inf", "-inf" and "nan"; negative zero prints as zero.
namespace patchkit::fmt
{

// Fixed notation rounded to max_frac decimals, trailing zeros removed but at
// least one fractional digit kept: 1 -> "1.0", 2.50 -> "2.5".
std::string trimmed(double x, int max_frac = 6);

std::string fixed(double x, int decimals);

// d.ddddddddde+XX with the given number of mantissa decimals.
std::string scientific(double x, int decimals);

// Shortest representation that round-trips (50 -> "50", 97.6 -> "97.6").
std::string shortest(double x);

// Locale-independent parse of a whole string; accepts inf/nan spellings.
// Throws InvalidArgument on trailing garbage.
double parse_double(const std::string &s);

} // namespace patchkit::fmt

#endif

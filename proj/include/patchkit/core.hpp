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

#ifndef PATCHKIT_CORE_HPP
#define PATCHKIT_CORE_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace patchkit
{

// Precondition or configuration violation (bad input value).
class InvalidArgument : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

// The model could not produce a result for valid input (non-convergence,
// singular network, unbracketed resonance, geometry conflict).
class ModelError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

namespace constants
{
inline constexpr double c0 = 299792458.0; // speed of light in vacuum [m/s], exact
inline constexpr double pi = 3.14159265358979323846;
inline constexpr double eta0_approx = 120.0 * pi; // free-space impedance as used by the slot/line closed forms [ohm]
} // namespace constants

// Lengths are SI (meters) everywhere inside the library. Millimeters and GHz
// appear only at I/O boundaries.
namespace units
{
inline constexpr double mm_to_m(double mm) { return mm * 1e-3; }
inline constexpr double m_to_mm(double m) { return m * 1e3; }
inline constexpr double ghz_to_hz(double ghz) { return ghz * 1e9; }
inline constexpr double hz_to_ghz(double hz) { return hz * 1e-9; }
} // namespace units

struct Substrate
{
    double eps_r = 1.0;
    double height_m = 0.0;
    double loss_tangent = 0.0;
    std::string name;
};

struct DesignTarget
{
    double f_r_hz = 0.0;
    double z0_ohm = 50.0;
};

struct BandSpec
{
    double f_start_hz = 0.0;
    double f_stop_hz = 0.0;
    std::size_t n_points = 0;
};

// Each returns its argument unchanged or throws InvalidArgument naming the
// failed invariant.
const Substrate &validate_substrate(const Substrate &s);
const DesignTarget &validate_target(const DesignTarget &t);
const BandSpec &validate_band(const BandSpec &b);

// Rogers RT5880LZ: eps_r 1.96, h 0.762 mm. Loss tangent left at 0 (not stated
// for the design this table was built for).
Substrate rt5880lz();

// Looks up a built-in substrate alias ("rt5880lz"); throws InvalidArgument if unknown.
Substrate substrate_by_name(const std::string &name);

} // namespace patchkit

#endif

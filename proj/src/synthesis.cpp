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

#include <cmath>
#include <exception>
#include <string>

namespace patchkit::synthesis
{

namespace
{

void require_positive(double v, const char *what)
{
    if (!std::isfinite(v) || v <= 0.0)
        throw InvalidArgument(std::string(what) + " must be positive");
}

template <typename Fn>
auto stage(const char *name, Fn &&fn) -> decltype(fn())
{
    try
    {
        return fn();
    }
    catch (const InvalidArgument &e)
    {
        throw InvalidArgument(std::string(name) + ": " + e.what());
    }
    catch (const ModelError &e)
    {
        throw ModelError(std::string(name) + ": " + e.what());
    }
}

} // namespace

double patch_width(double f_r_hz, double eps_r)
{
    require_positive(f_r_hz, "frequency");
    if (!(eps_r >= 1.0))
        throw InvalidArgument("eps_r below 1");
    return constants::c0 / (2.0 * f_r_hz) * std::sqrt(2.0 / (eps_r + 1.0));
}

double effective_permittivity(double eps_r, double h_m, double w_m)
{
    if (!(eps_r >= 1.0))
        throw InvalidArgument("eps_r below 1");
    require_positive(h_m, "substrate height");
    require_positive(w_m, "width");
    return 0.5 * (eps_r + 1.0) + 0.5 * (eps_r - 1.0) / std::sqrt(1.0 + 12.0 * h_m / w_m);
}

double length_extension(double eps_eff, double h_m, double w_m)
{
    if (!(eps_eff > 0.258))
        throw InvalidArgument("eps_eff must exceed 0.258");
    require_positive(h_m, "substrate height");
    require_positive(w_m, "width");
    const double u = w_m / h_m;
    return 0.412 * h_m * ((eps_eff + 0.3) * (u + 0.264)) / ((eps_eff - 0.258) * (u + 0.8));
}

PatchLength patch_length(double f_r_hz, double eps_eff, double delta_l_m)
{
    require_positive(f_r_hz, "frequency");
    if (!(eps_eff >= 1.0))
        throw InvalidArgument("eps_eff below 1");
    if (!(delta_l_m >= 0.0))
        throw InvalidArgument("length extension must be non-negative");
    const double l_eff = constants::c0 / (2.0 * f_r_hz * std::sqrt(eps_eff));
    const double l_patch = l_eff - 2.0 * delta_l_m;
    if (!(l_patch > 0.0))
        throw InvalidArgument("fringing extension consumes the whole patch length");
    return {l_eff, l_patch};
}

double edge_impedance(double eps_r, double l_patch_m, double w_patch_m)
{
    if (!(eps_r > 1.0))
        throw InvalidArgument("edge impedance closed form is singular at eps_r = 1 (divides by eps_r - 1)");
    require_positive(l_patch_m, "patch length");
    require_positive(w_patch_m, "patch width");
    const double ratio = l_patch_m / w_patch_m;
    return 90.0 * (eps_r * eps_r / (eps_r - 1.0)) * ratio * ratio;
}

double qwt_impedance(double z0_ohm, double z_edge_ohm)
{
    require_positive(z0_ohm, "reference impedance");
    require_positive(z_edge_ohm, "edge impedance");
    return std::sqrt(z0_ohm * z_edge_ohm);
}

TlmSolution synthesize_patch(const DesignTarget &target, const Substrate &sub)
{
    validate_target(target);
    validate_substrate(sub);

    TlmSolution s;
    s.w_patch_m = stage("patch_width", [&] { return patch_width(target.f_r_hz, sub.eps_r); });
    s.eps_eff = stage("effective_permittivity",
                      [&] { return effective_permittivity(sub.eps_r, sub.height_m, s.w_patch_m); });
    s.delta_l_m = stage("length_extension", [&] { return length_extension(s.eps_eff, sub.height_m, s.w_patch_m); });
    const auto len = stage("patch_length", [&] { return patch_length(target.f_r_hz, s.eps_eff, s.delta_l_m); });
    s.l_eff_m = len.l_eff_m;
    s.l_patch_m = len.l_patch_m;
    s.z_edge_ohm = stage("edge_impedance", [&] { return edge_impedance(sub.eps_r, s.l_patch_m, s.w_patch_m); });
    s.z_qwt_ohm = stage("qwt_impedance", [&] { return qwt_impedance(target.z0_ohm, s.z_edge_ohm); });
    return s;
}

TlmSolution solution_from_dimensions(const DesignTarget &target, const Substrate &sub, double w_patch_m,
                                     double l_patch_m)
{
    validate_target(target);
    validate_substrate(sub);
    require_positive(w_patch_m, "patch width");
    require_positive(l_patch_m, "patch length");

    TlmSolution s;
    s.w_patch_m = w_patch_m;
    s.l_patch_m = l_patch_m;
    s.eps_eff = stage("effective_permittivity",
                      [&] { return effective_permittivity(sub.eps_r, sub.height_m, w_patch_m); });
    s.delta_l_m = stage("length_extension", [&] { return length_extension(s.eps_eff, sub.height_m, w_patch_m); });
    s.l_eff_m = l_patch_m + 2.0 * s.delta_l_m;
    s.z_edge_ohm = stage("edge_impedance", [&] { return edge_impedance(sub.eps_r, l_patch_m, w_patch_m); });
    s.z_qwt_ohm = stage("qwt_impedance", [&] { return qwt_impedance(target.z0_ohm, s.z_edge_ohm); });
    return s;
}

} // namespace patchkit::synthesis

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

#include "patchkit/design.hpp"

#include "patchkit/tune.hpp"

#include <algorithm>
#include <cmath>

namespace patchkit
{

void validate_uslot(const UslotSpec &u)
{
    if (!(u.outer_w_mm > 0.0 && u.outer_l_mm > 0.0 && u.arm_w_mm > 0.0))
        throw InvalidArgument("uslot: dimensions must be positive");
    if (!(u.arm_w_mm < 0.5 * u.outer_w_mm && u.arm_w_mm < u.outer_l_mm))
        throw InvalidArgument("uslot: arm width closes the U (need arm < outer_w / 2 and arm < outer_l)");
    if (u.center_x_mm != 0.0)
        throw InvalidArgument("uslot: must be centered on the feed axis (x = 0)");
}

UslotSpec default_uslot(const TlmSolution &tlm)
{
    UslotSpec u;
    u.outer_w_mm = 0.8 * units::m_to_mm(tlm.w_patch_m);
    u.outer_l_mm = 0.5 * units::m_to_mm(tlm.l_patch_m);
    u.arm_w_mm = 0.1 * units::m_to_mm(tlm.l_patch_m);
    u.center_x_mm = 0.0;
    u.center_y_mm = 0.0;
    u.placeholder = true;
    return u;
}

PatchDesign assemble_design(const DesignTarget &target, const Substrate &sub, const TlmSolution &tlm,
                            const LineGeometry &qwt, const DesignOptions &opt)
{
    validate_target(target);
    validate_substrate(sub);
    if (!(opt.board_margin_h > 0.0))
        throw InvalidArgument("board margin must be positive");
    if (!(opt.feed_length_wavelengths >= 0.0))
        throw InvalidArgument("feed length must be non-negative");

    PatchDesign d;
    d.target = target;
    d.sub = sub;
    d.tlm = tlm;
    d.qwt = qwt;

    const double wf = mstripline::line_synthesis(target.z0_ohm, sub);
    const auto fp = mstripline::line_analysis(wf, sub);
    const double lf = opt.feed_length_wavelengths * mstripline::guided_wavelength(target.f_r_hz, fp.eps_eff_line);
    d.feed = {wf, lf, fp.z0_ohm, fp.eps_eff_line};

    const double margin = opt.board_margin_h * sub.height_m;
    const double copper_w = std::max({tlm.w_patch_m, qwt.width_m, d.feed.width_m});
    const double copper_l = tlm.l_patch_m + qwt.length_m + d.feed.length_m;
    d.board_w_mm = units::m_to_mm(copper_w + 2.0 * margin);
    d.board_l_mm = units::m_to_mm(copper_l + 2.0 * margin);

    if (opt.uslot)
    {
        validate_uslot(*opt.uslot);
        d.uslot = opt.uslot;
    }
    else if (opt.default_uslot)
        d.uslot = default_uslot(tlm);
    return d;
}

PatchDesign design_patch(const DesignTarget &target, const Substrate &sub, const DesignOptions &opt)
{
    TlmSolution tlm = synthesis::synthesize_patch(target, sub);
    if (opt.tune)
        tlm = tune::tune_length(target, sub, tlm);
    const LineGeometry qwt = opt.match ? tune::match_qwt(tlm, sub, target).qwt
                                       : mstripline::qwt_section(tlm.z_qwt_ohm, target.f_r_hz, sub);
    return assemble_design(target, sub, tlm, qwt, opt);
}

} // namespace patchkit

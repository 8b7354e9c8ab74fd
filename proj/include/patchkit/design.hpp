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

#ifndef PATCHKIT_DESIGN_HPP
#define PATCHKIT_DESIGN_HPP

#include "patchkit/core.hpp"
#include "patchkit/mstripline.hpp"
#include "patchkit/synthesis.hpp"

#include <optional>

namespace patchkit
{

// U-shaped cutout in the ground plane. The open side of the U faces +y
// (away from the feed). Dimensions are placeholders unless the caller
// supplies measured values: the reference design gives no U dimensions.
struct UslotSpec
{
    double outer_w_mm = 0.0; // extent along x
    double outer_l_mm = 0.0; // extent along y
    double arm_w_mm = 0.0;
    double center_x_mm = 0.0;
    double center_y_mm = 0.0;
    bool placeholder = true;
};

void validate_uslot(const UslotSpec &u);

// 0.8 W x 0.5 L outer, 0.1 L arms, centered under the patch.
UslotSpec default_uslot(const TlmSolution &tlm);

// Complete physical design. Coordinates: origin at patch center, feed
// runs toward -y (patch -> transformer -> 50 ohm feed).
struct PatchDesign
{
    DesignTarget target;
    Substrate sub;
    TlmSolution tlm;
    LineGeometry qwt;
    LineGeometry feed;
    double board_w_mm = 0.0;
    double board_l_mm = 0.0;
    std::optional<UslotSpec> uslot;
};

struct DesignOptions
{
    bool tune = true;              // retune L so the network model resonates at f_r
    bool match = true;             // size the transformer from the model's resonant resistance
    double board_margin_h = 6.0;   // copper-to-board-edge margin in substrate heights
    double feed_length_wavelengths = 1.0;
    std::optional<UslotSpec> uslot; // explicit U-slot
    bool default_uslot = false;     // use default_uslot(tlm) when no explicit one is given
};

// synthesize -> (tune) -> (match) -> 50 ohm feed -> board outline.
PatchDesign design_patch(const DesignTarget &target, const Substrate &sub, const DesignOptions &opt = {});

// Builds a design around a given TlmSolution and transformer; computes the
// feed and board. Used by design_patch and by perturbation studies.
PatchDesign assemble_design(const DesignTarget &target, const Substrate &sub, const TlmSolution &tlm,
                            const LineGeometry &qwt, const DesignOptions &opt = {});

} // namespace patchkit

#endif

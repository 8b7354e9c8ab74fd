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

#ifndef PATCHKIT_LAYOUT_HPP
#define PATCHKIT_LAYOUT_HPP

#include "patchkit/design.hpp"

#include <span>
#include <string>
#include <utility>
#include <vector>

namespace patchkit::layout
{

enum class Layer
{
    Top,
    Ground,
};

enum class Kind
{
    Copper,
    Cutout,
};

const char *to_string(Layer l);
const char *to_string(Kind k);
Layer parse_layer(const std::string &s);
Kind parse_kind(const std::string &s);

struct Point
{
    double x_mm;
    double y_mm;
};

struct Polygon
{
    Layer layer = Layer::Top;
    Kind kind = Kind::Copper;
    std::vector<Point> vertices_mm; // counterclockwise, not closed (last != first)
};

double signed_area(const Polygon &p);
bool is_simple(const Polygon &p);

// >= 3 vertices, simple, counterclockwise. Throws InvalidArgument.
void validate_polygon(const Polygon &p);

Polygon rectangle(Layer layer, Kind kind, double x0, double y0, double x1, double y1);

// 8-vertex U outline opening toward +y.
Polygon u_outline(const UslotSpec &u, Layer layer, Kind kind);

// Top: patch, transformer, feed. Ground: board-sized plane, then the U-slot
// cutout if present. Throws ModelError on overlap/clearance problems.
std::vector<Polygon> build_layout(const PatchDesign &design);

using Metadata = std::vector<std::pair<std::string, std::string>>;

// {"units":"mm","polygons":[{"layer":..,"kind":..,"vertices":[[x,y],..]},..]}
// followed by "metadata" when non-empty. Compact, fixed key order, numbers
// with at most 6 decimals.
std::string export_json(std::span<const Polygon> polys, const Metadata &meta = {});
std::vector<Polygon> parse_layout_json(const std::string &text);

// ASCII DXF R12: closed POLYLINE/VERTEX/SEQEND entities, cutouts on
// "<layer>_cutout".
std::string export_dxf(std::span<const Polygon> polys);

struct DxfPolyline
{
    std::string layer;
    bool closed = false;
    std::vector<Point> vertices;
};

// Reads back the POLYLINE subset written by export_dxf.
std::vector<DxfPolyline> parse_dxf(const std::string &text);

} // namespace patchkit::layout

#endif

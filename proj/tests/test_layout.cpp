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
#include "patchkit/format.hpp"
#include "patchkit/layout.hpp"

#include <catch_amalgamated.hpp>

#include <cmath>
#include <sstream>

using namespace patchkit;
using namespace patchkit::layout;
using Catch::Approx;

namespace
{

const Substrate kSub{1.96, 0.762e-3, 0.0, "rt5880lz"};

PatchDesign reference_design(bool with_uslot)
{
    DesignOptions opt;
    opt.default_uslot = with_uslot;
    return design_patch({28e9, 50.0}, kSub, opt);
}

double width_of(const Polygon &p)
{
    double lo = INFINITY, hi = -INFINITY;
    for (const auto &v : p.vertices_mm)
    {
        lo = std::min(lo, v.x_mm);
        hi = std::max(hi, v.x_mm);
    }
    return hi - lo;
}

double height_of(const Polygon &p)
{
    double lo = INFINITY, hi = -INFINITY;
    for (const auto &v : p.vertices_mm)
    {
        lo = std::min(lo, v.y_mm);
        hi = std::max(hi, v.y_mm);
    }
    return hi - lo;
}

int count_of(const std::string &text, const std::string &line)
{
    std::istringstream in(text);
    std::string s;
    int n = 0;
    while (std::getline(in, s))
        n += s == line;
    return n;
}

} // namespace

TEST_CASE("polygon validation", "[layout]")
{
    const auto r = rectangle(Layer::Top, Kind::Copper, 0.0, 0.0, 2.0, 1.0);
    CHECK(signed_area(r) == 2.0);
    CHECK(is_simple(r));
    CHECK_NOTHROW(validate_polygon(r));

    Polygon cw = r;
    std::reverse(cw.vertices_mm.begin(), cw.vertices_mm.end());
    CHECK_THROWS_AS(validate_polygon(cw), InvalidArgument);

    Polygon bowtie{Layer::Top, Kind::Copper, {{0, 0}, {1, 1}, {1, 0}, {0, 1}}};
    CHECK_FALSE(is_simple(bowtie));
    CHECK_THROWS_AS(validate_polygon(bowtie), InvalidArgument);
    CHECK_THROWS_AS(validate_polygon({Layer::Top, Kind::Copper, {{0, 0}, {1, 0}}}), InvalidArgument);
}

TEST_CASE("U-slot outline", "[layout]")
{
    const UslotSpec u{3.0, 2.0, 0.4, 0.0, 0.5, true};
    const auto p = u_outline(u, Layer::Ground, Kind::Cutout);
    CHECK(p.vertices_mm.size() == 8);
    CHECK_NOTHROW(validate_polygon(p));
    // Area of the U: outer box minus the open notch.
    CHECK(signed_area(p) == Approx(3.0 * 2.0 - (3.0 - 0.8) * (2.0 - 0.4)).epsilon(1e-12));
    CHECK_THROWS_AS(validate_uslot({3.0, 2.0, 1.5, 0.0, 0.0, true}), InvalidArgument);
    CHECK_THROWS_AS(validate_uslot({3.0, 2.0, 2.0, 0.0, 0.0, true}), InvalidArgument);
    CHECK_THROWS_AS(validate_uslot({3.0, 2.0, 0.4, 0.3, 0.0, true}), InvalidArgument);
}

TEST_CASE("board layout of the 28 GHz design", "[layout]")
{
    const auto d = reference_design(false);
    const auto polys = build_layout(d);
    REQUIRE(polys.size() == 4);
    CHECK(width_of(polys[0]) == Approx(d.tlm.w_patch_m * 1e3).epsilon(1e-14));
    CHECK(height_of(polys[0]) == Approx(d.tlm.l_patch_m * 1e3).epsilon(1e-14));
    CHECK(width_of(polys[1]) == Approx(d.qwt.width_m * 1e3).epsilon(1e-14));
    CHECK(height_of(polys[2]) == Approx(d.feed.length_m * 1e3).epsilon(1e-12));
    CHECK(polys[3].layer == Layer::Ground);
    CHECK(width_of(polys[3]) == Approx(d.board_w_mm).epsilon(1e-14));
    for (std::size_t i = 0; i < 3; ++i)
    {
        // Copper sits on the symmetry axis and inside the board.
        double sx = 0.0;
        for (const auto &v : polys[i].vertices_mm)
        {
            sx += v.x_mm;
            CHECK(std::abs(v.x_mm) < 0.5 * d.board_w_mm);
            CHECK(std::abs(v.y_mm) < 0.5 * d.board_l_mm + 100.0);
        }
        CHECK(std::abs(sx) < 1e-12);
    }

    const auto ds = reference_design(true);
    const auto with_u = build_layout(ds);
    REQUIRE(with_u.size() == 5);
    CHECK(with_u[4].kind == Kind::Cutout);
    CHECK(with_u[4].vertices_mm.size() == 8);

    PatchDesign wide = ds;
    wide.uslot->outer_w_mm = ds.board_w_mm + 1.0;
    CHECK_THROWS_WITH(build_layout(wide), Catch::Matchers::ContainsSubstring("uslot exceeds ground"));
    CHECK_THROWS_AS(build_layout(wide), ModelError);

    PatchDesign fat = d;
    fat.qwt.width_m = 2.0 * d.tlm.w_patch_m;
    CHECK_THROWS_WITH(build_layout(fat), Catch::Matchers::ContainsSubstring("transformer wider than patch edge"));
}

TEST_CASE("JSON export", "[layout]")
{
    CHECK(export_json({}) == R"({"units":"mm","polygons":[]})");
    const auto polys = build_layout(reference_design(true));
    const auto a = export_json(polys, {{"uslot", "placeholder dimensions"}});
    CHECK(a == export_json(build_layout(reference_design(true)), {{"uslot", "placeholder dimensions"}}));
    CHECK(a.find("\"metadata\":{\"uslot\":\"placeholder dimensions\"}") != std::string::npos);

    const auto back = parse_layout_json(a);
    REQUIRE(back.size() == polys.size());
    for (std::size_t i = 0; i < polys.size(); ++i)
    {
        CHECK(back[i].layer == polys[i].layer);
        CHECK(back[i].kind == polys[i].kind);
        REQUIRE(back[i].vertices_mm.size() == polys[i].vertices_mm.size());
        for (std::size_t k = 0; k < polys[i].vertices_mm.size(); ++k)
        {
            // Exactly the value the formatter wrote.
            CHECK(back[i].vertices_mm[k].x_mm == fmt::parse_double(fmt::trimmed(polys[i].vertices_mm[k].x_mm)));
            CHECK(back[i].vertices_mm[k].y_mm == fmt::parse_double(fmt::trimmed(polys[i].vertices_mm[k].y_mm)));
        }
    }
    CHECK_THROWS(parse_layout_json("{\"units\":\"in\",\"polygons\":[]}"));
}

TEST_CASE("DXF export", "[layout]")
{
    const std::vector<Polygon> one = {rectangle(Layer::Top, Kind::Copper, -1.0, -0.5, 1.0, 0.5)};
    const auto dxf = export_dxf(one);
    CHECK(count_of(dxf, "POLYLINE") == 1);
    CHECK(count_of(dxf, "VERTEX") == 4);
    CHECK(count_of(dxf, "SEQEND") == 1);
    const auto r = parse_dxf(dxf);
    REQUIRE(r.size() == 1);
    CHECK(r[0].closed);
    CHECK(r[0].layer == "top");

    const auto polys = build_layout(reference_design(true));
    const auto text = export_dxf(polys);
    CHECK(text == export_dxf(build_layout(reference_design(true))));
    CHECK(count_of(text, "POLYLINE") == static_cast<int>(polys.size()));
    const auto back = parse_dxf(text);
    REQUIRE(back.size() == polys.size());
    CHECK(back[4].layer == "ground_cutout");
    for (std::size_t i = 0; i < polys.size(); ++i)
    {
        REQUIRE(back[i].vertices.size() == polys[i].vertices_mm.size());
        for (std::size_t k = 0; k < back[i].vertices.size(); ++k)
        {
            CHECK(back[i].vertices[k].x_mm == Approx(polys[i].vertices_mm[k].x_mm).margin(1e-6));
            CHECK(back[i].vertices[k].y_mm == Approx(polys[i].vertices_mm[k].y_mm).margin(1e-6));
        }
    }
}

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

#include "patchkit/layout.hpp"

#include "patchkit/format.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

namespace patchkit::layout
{

const char *to_string(Layer l) { return l == Layer::Top ? "top" : "ground"; }
const char *to_string(Kind k) { return k == Kind::Copper ? "copper" : "cutout"; }

Layer parse_layer(const std::string &s)
{
    if (s == "top")
        return Layer::Top;
    if (s == "ground")
        return Layer::Ground;
    throw InvalidArgument("unknown layer '" + s + "'");
}

Kind parse_kind(const std::string &s)
{
    if (s == "copper")
        return Kind::Copper;
    if (s == "cutout")
        return Kind::Cutout;
    throw InvalidArgument("unknown polygon kind '" + s + "'");
}

double signed_area(const Polygon &p)
{
    const auto &v = p.vertices_mm;
    double a = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i)
    {
        const auto &p0 = v[i];
        const auto &p1 = v[(i + 1) % v.size()];
        a += p0.x_mm * p1.y_mm - p1.x_mm * p0.y_mm;
    }
    return 0.5 * a;
}

namespace
{

double cross(const Point &o, const Point &a, const Point &b)
{
    return (a.x_mm - o.x_mm) * (b.y_mm - o.y_mm) - (a.y_mm - o.y_mm) * (b.x_mm - o.x_mm);
}

bool on_segment(const Point &p, const Point &q, const Point &r)
{
    return std::min(p.x_mm, r.x_mm) <= q.x_mm && q.x_mm <= std::max(p.x_mm, r.x_mm) &&
           std::min(p.y_mm, r.y_mm) <= q.y_mm && q.y_mm <= std::max(p.y_mm, r.y_mm);
}

int orient(const Point &a, const Point &b, const Point &c)
{
    const double v = cross(a, b, c);
    return v > 0.0 ? 1 : (v < 0.0 ? -1 : 0);
}

bool segments_intersect(const Point &p1, const Point &p2, const Point &p3, const Point &p4)
{
    const int o1 = orient(p1, p2, p3), o2 = orient(p1, p2, p4);
    const int o3 = orient(p3, p4, p1), o4 = orient(p3, p4, p2);
    if (o1 != o2 && o3 != o4)
        return true;
    return (o1 == 0 && on_segment(p1, p3, p2)) || (o2 == 0 && on_segment(p1, p4, p2)) ||
           (o3 == 0 && on_segment(p3, p1, p4)) || (o4 == 0 && on_segment(p3, p2, p4));
}

} // namespace

bool is_simple(const Polygon &p)
{
    const auto &v = p.vertices_mm;
    const std::size_t n = v.size();
    if (n < 3)
        return false;
    for (std::size_t i = 0; i < n; ++i)
    {
        for (std::size_t j = i + 1; j < n; ++j)
        {
            const bool adjacent = (j == i + 1) || (i == 0 && j == n - 1);
            if (adjacent)
                continue;
            if (segments_intersect(v[i], v[(i + 1) % n], v[j], v[(j + 1) % n]))
                return false;
        }
    }
    return true;
}

void validate_polygon(const Polygon &p)
{
    if (p.vertices_mm.size() < 3)
        throw InvalidArgument("polygon needs at least 3 vertices");
    if (!is_simple(p))
        throw InvalidArgument("polygon is self-intersecting");
    if (!(signed_area(p) > 0.0))
        throw InvalidArgument("polygon is not counterclockwise");
}

Polygon rectangle(Layer layer, Kind kind, double x0, double y0, double x1, double y1)
{
    return {layer, kind, {{x0, y0}, {x1, y0}, {x1, y1}, {x0, y1}}};
}

Polygon u_outline(const UslotSpec &u, Layer layer, Kind kind)
{
    const double a = 0.5 * u.outer_w_mm;
    const double y0 = u.center_y_mm - 0.5 * u.outer_l_mm;
    const double y1 = u.center_y_mm + 0.5 * u.outer_l_mm;
    const double t = u.arm_w_mm;
    const double cx = u.center_x_mm;
    return {layer,
            kind,
            {{cx - a, y0},
             {cx + a, y0},
             {cx + a, y1},
             {cx + a - t, y1},
             {cx + a - t, y0 + t},
             {cx - a + t, y0 + t},
             {cx - a + t, y1},
             {cx - a, y1}}};
}

std::vector<Polygon> build_layout(const PatchDesign &d)
{
    using units::m_to_mm;
    const double w = m_to_mm(d.tlm.w_patch_m);
    const double l = m_to_mm(d.tlm.l_patch_m);
    const double wq = m_to_mm(d.qwt.width_m);
    const double lq = m_to_mm(d.qwt.length_m);
    const double wf = m_to_mm(d.feed.width_m);
    const double lf = m_to_mm(d.feed.length_m);
    if (!(w > 0.0 && l > 0.0 && wq > 0.0 && wf > 0.0 && lq >= 0.0 && lf >= 0.0))
        throw ModelError("layout: nonpositive copper dimension");
    if (wq > w)
        throw ModelError("layout: transformer wider than patch edge");
    if (wf > w)
        throw ModelError("layout: feed line wider than patch edge");

    const double y_top = 0.5 * l;
    const double y_qwt = -0.5 * l;
    const double y_feed = y_qwt - lq;
    const double y_bottom = y_feed - lf;
    const double copper_half_w = 0.5 * std::max({w, wq, wf});
    const double margin_x = 0.5 * d.board_w_mm - copper_half_w;
    const double margin_y = 0.5 * (d.board_l_mm - (y_top - y_bottom));
    if (!(margin_x > 0.0 && margin_y > 0.0))
        throw ModelError("layout: board does not enclose the copper with a positive margin");
    const double bx = 0.5 * d.board_w_mm;
    const double by0 = y_bottom - margin_y;
    const double by1 = y_top + margin_y;

    std::vector<Polygon> polys;
    polys.push_back(rectangle(Layer::Top, Kind::Copper, -0.5 * w, -0.5 * l, 0.5 * w, 0.5 * l));
    if (lq > 0.0)
        polys.push_back(rectangle(Layer::Top, Kind::Copper, -0.5 * wq, y_feed, 0.5 * wq, y_qwt));
    if (lf > 0.0)
        polys.push_back(rectangle(Layer::Top, Kind::Copper, -0.5 * wf, y_bottom, 0.5 * wf, y_feed));
    polys.push_back(rectangle(Layer::Ground, Kind::Copper, -bx, by0, bx, by1));

    if (d.uslot)
    {
        const UslotSpec &u = *d.uslot;
        validate_uslot(u);
        const double ux = std::abs(u.center_x_mm) + 0.5 * u.outer_w_mm;
        const double uy0 = u.center_y_mm - 0.5 * u.outer_l_mm;
        const double uy1 = u.center_y_mm + 0.5 * u.outer_l_mm;
        if (!(ux < bx && uy0 > by0 && uy1 < by1))
            throw ModelError("layout: uslot exceeds ground");
        polys.push_back(u_outline(u, Layer::Ground, Kind::Cutout));
    }

    for (const auto &p : polys)
        validate_polygon(p);
    return polys;
}

std::string export_json(std::span<const Polygon> polys, const Metadata &meta)
{
    std::string out = "{\"units\":\"mm\",\"polygons\":[";
    for (std::size_t i = 0; i < polys.size(); ++i)
    {
        const auto &p = polys[i];
        if (i)
            out += ',';
        out += "{\"layer\":\"";
        out += to_string(p.layer);
        out += "\",\"kind\":\"";
        out += to_string(p.kind);
        out += "\",\"vertices\":[";
        for (std::size_t k = 0; k < p.vertices_mm.size(); ++k)
        {
            if (k)
                out += ',';
            out += '[' + fmt::trimmed(p.vertices_mm[k].x_mm) + ',' + fmt::trimmed(p.vertices_mm[k].y_mm) + ']';
        }
        out += "]}";
    }
    out += ']';
    if (!meta.empty())
    {
        out += ",\"metadata\":{";
        for (std::size_t i = 0; i < meta.size(); ++i)
        {
            if (i)
                out += ',';
            out += nlohmann::json(meta[i].first).dump() + ':' + nlohmann::json(meta[i].second).dump();
        }
        out += '}';
    }
    out += '}';
    return out;
}

std::vector<Polygon> parse_layout_json(const std::string &text)
{
    nlohmann::json doc;
    try
    {
        doc = nlohmann::json::parse(text);
    }
    catch (const nlohmann::json::exception &e)
    {
        throw InvalidArgument(std::string("layout json: ") + e.what());
    }
    if (doc.value("units", std::string()) != "mm")
        throw InvalidArgument("layout json: units must be \"mm\"");
    std::vector<Polygon> polys;
    for (const auto &jp : doc.at("polygons"))
    {
        Polygon p;
        p.layer = parse_layer(jp.at("layer").get<std::string>());
        p.kind = parse_kind(jp.at("kind").get<std::string>());
        for (const auto &v : jp.at("vertices"))
            p.vertices_mm.push_back({v.at(0).get<double>(), v.at(1).get<double>()});
        polys.push_back(std::move(p));
    }
    return polys;
}

namespace
{

std::string dxf_layer(const Polygon &p)
{
    std::string name = to_string(p.layer);
    if (p.kind == Kind::Cutout)
        name += "_cutout";
    return name;
}

void pair(std::string &out, int code, const std::string &value)
{
    out += std::to_string(code);
    out += '\n';
    out += value;
    out += '\n';
}

} // namespace

std::string export_dxf(std::span<const Polygon> polys)
{
    std::vector<std::string> layers = {"top", "ground"};
    for (const auto &p : polys)
    {
        const auto name = dxf_layer(p);
        if (std::find(layers.begin(), layers.end(), name) == layers.end())
            layers.push_back(name);
    }

    std::string out;
    pair(out, 0, "SECTION");
    pair(out, 2, "HEADER");
    pair(out, 9, "$ACADVER");
    pair(out, 1, "AC1009");
    pair(out, 0, "ENDSEC");

    pair(out, 0, "SECTION");
    pair(out, 2, "TABLES");
    pair(out, 0, "TABLE");
    pair(out, 2, "LAYER");
    pair(out, 70, std::to_string(layers.size()));
    for (std::size_t i = 0; i < layers.size(); ++i)
    {
        pair(out, 0, "LAYER");
        pair(out, 2, layers[i]);
        pair(out, 70, "0");
        pair(out, 62, std::to_string(i + 1));
        pair(out, 6, "CONTINUOUS");
    }
    pair(out, 0, "ENDTAB");
    pair(out, 0, "ENDSEC");

    pair(out, 0, "SECTION");
    pair(out, 2, "ENTITIES");
    for (const auto &p : polys)
    {
        const auto layer = dxf_layer(p);
        pair(out, 0, "POLYLINE");
        pair(out, 8, layer);
        pair(out, 66, "1");
        pair(out, 70, "1");
        pair(out, 10, "0.0");
        pair(out, 20, "0.0");
        pair(out, 30, "0.0");
        for (const auto &v : p.vertices_mm)
        {
            pair(out, 0, "VERTEX");
            pair(out, 8, layer);
            pair(out, 10, fmt::fixed(v.x_mm, 9));
            pair(out, 20, fmt::fixed(v.y_mm, 9));
            pair(out, 30, "0.0");
        }
        pair(out, 0, "SEQEND");
        pair(out, 8, layer);
    }
    pair(out, 0, "ENDSEC");
    pair(out, 0, "EOF");
    return out;
}

std::vector<DxfPolyline> parse_dxf(const std::string &text)
{
    std::istringstream in(text);
    std::vector<DxfPolyline> result;
    std::string code_line, value;
    enum class State
    {
        Outside,
        Header,
        Vertex
    } state = State::Outside;
    DxfPolyline current;
    Point vertex{0.0, 0.0};

    auto trim = [](std::string s) {
        const auto b = s.find_first_not_of(" \t\r");
        const auto e = s.find_last_not_of(" \t\r");
        return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    auto flush_vertex = [&] {
        if (state == State::Vertex)
            current.vertices.push_back(vertex);
    };

    while (std::getline(in, code_line) && std::getline(in, value))
    {
        const int code = std::stoi(trim(code_line));
        value = trim(value);
        if (code == 0)
        {
            flush_vertex();
            if (value == "POLYLINE")
            {
                current = DxfPolyline{};
                state = State::Header;
            }
            else if (value == "VERTEX" && state != State::Outside)
            {
                vertex = {0.0, 0.0};
                state = State::Vertex;
            }
            else if (value == "SEQEND" && state != State::Outside)
            {
                result.push_back(current);
                state = State::Outside;
            }
            else if (state != State::Outside)
                throw InvalidArgument("dxf: unexpected entity '" + value + "' inside POLYLINE");
            continue;
        }
        if (state == State::Header)
        {
            if (code == 8)
                current.layer = value;
            else if (code == 70)
                current.closed = (std::stoi(value) & 1) != 0;
        }
        else if (state == State::Vertex)
        {
            if (code == 10)
                vertex.x_mm = fmt::parse_double(value);
            else if (code == 20)
                vertex.y_mm = fmt::parse_double(value);
        }
    }
    if (state != State::Outside)
        throw InvalidArgument("dxf: unterminated POLYLINE");
    return result;
}

} // namespace patchkit::layout

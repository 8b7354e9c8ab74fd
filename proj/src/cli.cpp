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

#include "patchkit/cli.hpp"

#include "patchkit/format.hpp"
#include "patchkit/layout.hpp"
#include "patchkit/network.hpp"
#include "patchkit/radiation.hpp"
#include "patchkit/random.hpp"
#include "patchkit/report.hpp"

#include <CLI11.hpp>
#include <json.hpp>
#include <omp.h>

#include <filesystem>
#include <fstream>
#include <ostream>
#include <set>
#include <sstream>

namespace patchkit::cli
{

namespace
{

using nlohmann::json;
using nlohmann::ordered_json;

class ConfigError : public InvalidArgument
{
public:
    using InvalidArgument::InvalidArgument;
};

void reject_unknown(const json &obj, const std::set<std::string> &allowed, const std::string &where)
{
    if (!obj.is_object())
        throw ConfigError(where + ": expected an object");
    for (const auto &[key, value] : obj.items())
        if (!allowed.count(key))
            throw ConfigError(where + ": unknown key '" + key + "'");
}

double num(const json &j, const std::string &what)
{
    if (!j.is_number())
        throw ConfigError(what + ": expected a number");
    return j.get<double>();
}

std::size_t count(const json &j, const std::string &what)
{
    if (!j.is_number_integer() || j.get<long long>() < 0)
        throw ConfigError(what + ": expected a non-negative integer");
    return j.get<std::size_t>();
}

UslotMode parse_uslot_mode(const std::string &s)
{
    if (s == "none")
        return UslotMode::None;
    if (s == "default")
        return UslotMode::Default;
    throw ConfigError("uslot: expected \"none\", \"default\" or an object");
}

// Flags as given on the command line; unset ones leave the config alone.
struct Flags
{
    std::string config;
    std::optional<double> f_ghz, z0, eps_r, h_mm, tand, points, efficiency;
    std::optional<std::string> substrate, uslot, out;
    std::vector<double> band;
    std::optional<double> uslot_w, uslot_l, uslot_arm, uslot_y;
    std::optional<double> dim_tol, eps_tol;
    std::optional<long long> n;
    std::optional<std::uint64_t> seed;
    std::optional<int> threads;
    bool published_rows = false;
};

void add_common(CLI::App *sub, Flags &f)
{
    sub->add_option("--config", f.config, "JSON run configuration; flags override it");
    sub->add_option("--f", f.f_ghz, "resonant frequency [GHz]");
    sub->add_option("--z0", f.z0, "reference/feed impedance [ohm]");
    sub->add_option("--substrate", f.substrate, "built-in substrate (rt5880lz)");
    sub->add_option("--eps-r", f.eps_r, "substrate relative permittivity");
    sub->add_option("--h-mm", f.h_mm, "substrate height [mm]");
    sub->add_option("--tand", f.tand, "substrate loss tangent");
    sub->add_option("--band", f.band, "sweep band start stop [GHz]")->expected(2);
    sub->add_option("--points", f.points, "sweep points");
    sub->add_option("--efficiency", f.efficiency, "radiation efficiency (0, 1]");
    sub->add_option("--uslot", f.uslot, "ground U-slot: none | default");
    sub->add_option("--uslot-w-mm", f.uslot_w, "U-slot outer width [mm]");
    sub->add_option("--uslot-l-mm", f.uslot_l, "U-slot outer length [mm]");
    sub->add_option("--uslot-arm-mm", f.uslot_arm, "U-slot arm width [mm]");
    sub->add_option("--uslot-y-mm", f.uslot_y, "U-slot center y [mm]");
    sub->add_option("--dim-tol", f.dim_tol, "relative 1-sigma dimension tolerance");
    sub->add_option("--eps-tol", f.eps_tol, "relative 1-sigma eps_r tolerance");
    sub->add_option("--n", f.n, "Monte Carlo sample count");
    sub->add_option("--seed", f.seed, "Monte Carlo seed");
    sub->add_option("--out", f.out, "output directory");
    sub->add_option("--threads", f.threads, "OpenMP thread count");
}

RunConfig resolve(const Flags &f)
{
    RunConfig cfg;
    if (!f.config.empty())
    {
        std::ifstream in(f.config);
        if (!in)
            throw ConfigError("cannot read config file '" + f.config + "'");
        std::stringstream ss;
        ss << in.rdbuf();
        apply_config_json(cfg, ss.str());
    }
    if (f.f_ghz)
        cfg.target.f_r_hz = units::ghz_to_hz(*f.f_ghz);
    if (f.z0)
        cfg.target.z0_ohm = *f.z0;
    if (f.substrate)
        cfg.sub = substrate_by_name(*f.substrate);
    if (f.eps_r || f.h_mm || f.tand)
    {
        if (!f.substrate)
            cfg.sub.name = "custom";
        if (f.eps_r)
            cfg.sub.eps_r = *f.eps_r;
        if (f.h_mm)
            cfg.sub.height_m = units::mm_to_m(*f.h_mm);
        if (f.tand)
            cfg.sub.loss_tangent = *f.tand;
    }
    if (f.band.size() == 2)
    {
        cfg.band.f_start_hz = units::ghz_to_hz(f.band[0]);
        cfg.band.f_stop_hz = units::ghz_to_hz(f.band[1]);
    }
    if (f.points)
    {
        if (*f.points < 0 || *f.points != std::floor(*f.points))
            throw ConfigError("--points must be a non-negative integer");
        cfg.band.n_points = static_cast<std::size_t>(*f.points);
    }
    if (f.efficiency)
        cfg.efficiency = *f.efficiency;
    if (f.uslot)
        cfg.uslot_mode = parse_uslot_mode(*f.uslot);
    if (f.uslot_w)
        cfg.uslot_w_mm = f.uslot_w;
    if (f.uslot_l)
        cfg.uslot_l_mm = f.uslot_l;
    if (f.uslot_arm)
        cfg.uslot_arm_mm = f.uslot_arm;
    if (f.uslot_y)
        cfg.uslot_y_mm = f.uslot_y;
    if (f.uslot_w || f.uslot_l || f.uslot_arm || f.uslot_y)
        cfg.uslot_mode = UslotMode::Custom;
    if (f.dim_tol)
        cfg.tolerance.rel_tol_dims = *f.dim_tol;
    if (f.eps_tol)
        cfg.tolerance.rel_tol_eps = *f.eps_tol;
    if (f.n)
    {
        if (*f.n < 0)
            throw ConfigError("--n must be non-negative");
        cfg.tolerance.n_samples = static_cast<std::size_t>(*f.n);
    }
    if (f.seed)
        cfg.tolerance.seed = *f.seed;
    if (f.out)
        cfg.out_dir = *f.out;
    cfg.published_rows = f.published_rows;
    return cfg;
}

std::optional<UslotSpec> resolve_uslot(const RunConfig &cfg, const TlmSolution &tlm)
{
    if (cfg.uslot_mode == UslotMode::None)
        return std::nullopt;
    UslotSpec u = default_uslot(tlm);
    if (cfg.uslot_mode == UslotMode::Custom)
    {
        if (cfg.uslot_w_mm)
            u.outer_w_mm = *cfg.uslot_w_mm;
        if (cfg.uslot_l_mm)
            u.outer_l_mm = *cfg.uslot_l_mm;
        if (cfg.uslot_arm_mm)
            u.arm_w_mm = *cfg.uslot_arm_mm;
        if (cfg.uslot_y_mm)
            u.center_y_mm = *cfg.uslot_y_mm;
        u.placeholder = !(cfg.uslot_w_mm && cfg.uslot_l_mm && cfg.uslot_arm_mm);
    }
    // Geometry problems surface as model failures, like the layout checks.
    validate_uslot(u);
    return u;
}

PatchDesign build_design(const RunConfig &cfg)
{
    PatchDesign d = design_patch(cfg.target, cfg.sub);
    d.uslot = resolve_uslot(cfg, d.tlm);
    return d;
}

void write_file(const std::filesystem::path &path, const std::string &text)
{
    std::ofstream f(path, std::ios::binary);
    if (!f)
        throw ModelError("cannot write '" + path.string() + "'");
    f << text;
    if (!f)
        throw ModelError("failed writing '" + path.string() + "'");
}

std::filesystem::path prepare_out(const RunConfig &cfg)
{
    std::filesystem::path dir(cfg.out_dir);
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec)
        throw ModelError("cannot create output directory '" + cfg.out_dir + "'");
    return dir;
}

std::string mm(double m, int dec = 3) { return fmt::fixed(units::m_to_mm(m), dec) + " mm"; }

ordered_json line_json(const LineGeometry &l)
{
    ordered_json j;
    j["width_mm"] = units::m_to_mm(l.width_m);
    j["length_mm"] = units::m_to_mm(l.length_m);
    j["z0_ohm"] = l.z0_ohm;
    j["eps_eff_line"] = l.eps_eff_line;
    return j;
}

int cmd_synth(const RunConfig &cfg, std::ostream &out)
{
    const TlmSolution s = synthesis::synthesize_patch(cfg.target, cfg.sub);
    const LineGeometry qwt = mstripline::qwt_section(s.z_qwt_ohm, cfg.target.f_r_hz, cfg.sub);
    const PatchDesign d = assemble_design(cfg.target, cfg.sub, s, qwt);

    out << "W       " << mm(s.w_patch_m) << '\n';
    out << "L       " << mm(s.l_patch_m) << '\n';
    out << "eps_eff " << fmt::fixed(s.eps_eff, 4) << '\n';
    out << "dL      " << mm(s.delta_l_m) << '\n';
    out << "L_eff   " << mm(s.l_eff_m) << '\n';
    out << "Z_in    " << fmt::fixed(s.z_edge_ohm, 1) << " ohm\n";
    out << "Z_T     " << fmt::fixed(s.z_qwt_ohm, 1) << " ohm\n";

    ordered_json j;
    j["target"] = {{"f_ghz", units::hz_to_ghz(cfg.target.f_r_hz)}, {"z0_ohm", cfg.target.z0_ohm}};
    j["substrate"] = {{"name", cfg.sub.name},
                      {"eps_r", cfg.sub.eps_r},
                      {"h_mm", units::m_to_mm(cfg.sub.height_m)},
                      {"tan_d", cfg.sub.loss_tangent}};
    j["synthesis"] = {{"w_patch_mm", units::m_to_mm(s.w_patch_m)}, {"eps_eff", s.eps_eff},
                      {"delta_l_mm", units::m_to_mm(s.delta_l_m)}, {"l_eff_mm", units::m_to_mm(s.l_eff_m)},
                      {"l_patch_mm", units::m_to_mm(s.l_patch_m)}, {"z_edge_ohm", s.z_edge_ohm},
                      {"z_qwt_ohm", s.z_qwt_ohm}};
    j["qwt"] = line_json(d.qwt);
    j["feed"] = line_json(d.feed);
    j["feed"]["length_rule"] = "one guided wavelength at f_r";
    const auto dir = prepare_out(cfg);
    write_file(dir / "design.json", j.dump(2) + "\n");
    out << "wrote " << (dir / "design.json").string() << '\n';
    return kOk;
}

int cmd_analyze(const RunConfig &cfg, std::ostream &out)
{
    const PatchDesign d = build_design(cfg);
    const auto sw = network::sweep(d, cfg.band);
    const auto grid = radiation::analyze_pattern(d.tlm, cfg.target.f_r_hz, cfg.efficiency);
    const Complex g = network::reflection(d, sw.f_res_hz);

    const auto dir = prepare_out(cfg);
    write_file(dir / "patch.s1p",
               report::write_touchstone(sw, cfg.target.z0_ohm,
                                        {"f_r " + fmt::shortest(units::hz_to_ghz(cfg.target.f_r_hz)) + " GHz, eps_r " +
                                         fmt::shortest(cfg.sub.eps_r) + ", h " +
                                         fmt::shortest(units::m_to_mm(cfg.sub.height_m)) + " mm"}));
    write_file(dir / "sweep.csv", report::write_sweep_csv(sw));
    write_file(dir / "pattern.csv", report::write_pattern_csv(grid));
    write_file(dir / "report.txt", report::design_report(d, sw, grid, {cfg.efficiency}));

    out << "f_res        " << fmt::fixed(units::hz_to_ghz(sw.f_res_hz), 4) << " GHz\n";
    out << "S11@f_res    " << fmt::fixed(sw.s11_at_res_db, 2) << " dB\n";
    out << "VSWR@f_res   " << fmt::fixed(network::vswr(g), 3) << '\n';
    if (sw.band)
        out << "band(-10dB)  " << fmt::fixed(units::hz_to_ghz(sw.band->f_low_hz), 4) << " - "
            << fmt::fixed(units::hz_to_ghz(sw.band->f_high_hz), 4) << " GHz, BW "
            << fmt::fixed(units::hz_to_ghz(sw.band->bw_hz), 4) << " GHz" << (sw.band->clipped() ? " (clipped)" : "")
            << '\n';
    else
        out << "band(-10dB)  none\n";
    out << "directivity  " << fmt::fixed(grid.d0_dbi, 2) << " dBi\n";
    out << "gain         " << fmt::fixed(grid.gain_dbi, 2) << " dBi\n";
    out << "wrote 4 files to " << dir.string() << '\n';
    return kOk;
}

int cmd_tolerance(const RunConfig &cfg, std::ostream &out)
{
    const PatchDesign d = build_design(cfg);
    const auto st = tune::tolerance_mc(d, cfg.tolerance);
    auto row = [&](const char *name, const tune::SummaryStats &s, double scale, int dec, const char *unit) {
        out << name << " mean " << fmt::fixed(s.mean * scale, dec) << " std " << fmt::fixed(s.std * scale, dec)
            << " min " << fmt::fixed(s.min * scale, dec) << " max " << fmt::fixed(s.max * scale, dec) << ' ' << unit
            << '\n';
    };
    out << "generator " << st.generator << " seed " << st.seed << '\n';
    out << "samples " << st.n_samples << " failed " << st.n_failed << '\n';
    out << "dim_tol " << fmt::shortest(cfg.tolerance.rel_tol_dims) << " eps_tol "
        << fmt::shortest(cfg.tolerance.rel_tol_eps) << '\n';
    row("f_res", st.f_res_hz, 1e-9, 6, "GHz");
    row("S11@f_r", st.s11_at_fr_db, 1.0, 3, "dB");
    return kOk;
}

int cmd_layout(const RunConfig &cfg, std::ostream &out)
{
    const PatchDesign d = build_design(cfg);
    const auto polys = layout::build_layout(d);
    layout::Metadata meta = {{"origin", "patch center, feed toward -y"}};
    if (d.uslot)
        meta.emplace_back("uslot", d.uslot->placeholder ? "placeholder dimensions" : "user dimensions");
    else
        meta.emplace_back("uslot", "none");

    const auto dir = prepare_out(cfg);
    write_file(dir / "layout.json", layout::export_json(polys, meta) + "\n");
    write_file(dir / "layout.dxf", layout::export_dxf(polys));
    out << "board " << fmt::fixed(d.board_w_mm, 3) << " x " << fmt::fixed(d.board_l_mm, 3) << " mm\n";
    out << "polygons " << polys.size() << '\n';
    out << "wrote " << (dir / "layout.json").string() << " and " << (dir / "layout.dxf").string() << '\n';
    return kOk;
}

int cmd_report(const RunConfig &cfg, std::ostream &out)
{
    const PatchDesign d = build_design(cfg);
    const auto sw = network::sweep(d, cfg.band);
    const auto grid = radiation::analyze_pattern(d.tlm, cfg.target.f_r_hz, cfg.efficiency);
    out << report::design_report(d, sw, grid, {cfg.efficiency}) << '\n';
    const double bw = sw.band ? units::hz_to_ghz(sw.band->bw_hz) : 0.0;
    out << report::comparison_table({"", sw.s11_at_res_db, bw, grid.gain_dbi}, cfg.published_rows);
    return kOk;
}

} // namespace

void apply_config_json(RunConfig &cfg, const std::string &text)
{
    json j;
    try
    {
        j = json::parse(text);
    }
    catch (const json::exception &e)
    {
        throw ConfigError(std::string("config: ") + e.what());
    }
    reject_unknown(j, {"f_ghz", "z0_ohm", "substrate", "band", "efficiency", "uslot", "tolerance", "out"}, "config");

    if (j.contains("f_ghz"))
        cfg.target.f_r_hz = units::ghz_to_hz(num(j["f_ghz"], "f_ghz"));
    if (j.contains("z0_ohm"))
        cfg.target.z0_ohm = num(j["z0_ohm"], "z0_ohm");
    if (j.contains("substrate"))
    {
        const auto &s = j["substrate"];
        if (s.is_string())
            cfg.sub = substrate_by_name(s.get<std::string>());
        else
        {
            reject_unknown(s, {"name", "eps_r", "h_mm", "tan_d"}, "substrate");
            Substrate sub = s.contains("name") && s["name"].is_string() ? Substrate{} : cfg.sub;
            sub.name = s.value("name", std::string("custom"));
            if (s.contains("eps_r"))
                sub.eps_r = num(s["eps_r"], "substrate.eps_r");
            if (s.contains("h_mm"))
                sub.height_m = units::mm_to_m(num(s["h_mm"], "substrate.h_mm"));
            if (s.contains("tan_d"))
                sub.loss_tangent = num(s["tan_d"], "substrate.tan_d");
            cfg.sub = sub;
        }
    }
    if (j.contains("band"))
    {
        const auto &b = j["band"];
        reject_unknown(b, {"start_ghz", "stop_ghz", "points"}, "band");
        if (b.contains("start_ghz"))
            cfg.band.f_start_hz = units::ghz_to_hz(num(b["start_ghz"], "band.start_ghz"));
        if (b.contains("stop_ghz"))
            cfg.band.f_stop_hz = units::ghz_to_hz(num(b["stop_ghz"], "band.stop_ghz"));
        if (b.contains("points"))
            cfg.band.n_points = count(b["points"], "band.points");
    }
    if (j.contains("efficiency"))
        cfg.efficiency = num(j["efficiency"], "efficiency");
    if (j.contains("uslot"))
    {
        const auto &u = j["uslot"];
        if (u.is_string())
            cfg.uslot_mode = parse_uslot_mode(u.get<std::string>());
        else
        {
            reject_unknown(u, {"outer_w_mm", "outer_l_mm", "arm_w_mm", "center_y_mm"}, "uslot");
            cfg.uslot_mode = UslotMode::Custom;
            if (u.contains("outer_w_mm"))
                cfg.uslot_w_mm = num(u["outer_w_mm"], "uslot.outer_w_mm");
            if (u.contains("outer_l_mm"))
                cfg.uslot_l_mm = num(u["outer_l_mm"], "uslot.outer_l_mm");
            if (u.contains("arm_w_mm"))
                cfg.uslot_arm_mm = num(u["arm_w_mm"], "uslot.arm_w_mm");
            if (u.contains("center_y_mm"))
                cfg.uslot_y_mm = num(u["center_y_mm"], "uslot.center_y_mm");
        }
    }
    if (j.contains("tolerance"))
    {
        const auto &t = j["tolerance"];
        reject_unknown(t, {"dim_tol", "eps_tol", "n", "seed"}, "tolerance");
        if (t.contains("dim_tol"))
            cfg.tolerance.rel_tol_dims = num(t["dim_tol"], "tolerance.dim_tol");
        if (t.contains("eps_tol"))
            cfg.tolerance.rel_tol_eps = num(t["eps_tol"], "tolerance.eps_tol");
        if (t.contains("n"))
            cfg.tolerance.n_samples = count(t["n"], "tolerance.n");
        if (t.contains("seed"))
        {
            if (!t["seed"].is_number_unsigned())
                throw ConfigError("tolerance.seed: expected an unsigned integer");
            cfg.tolerance.seed = t["seed"].get<std::uint64_t>();
        }
    }
    if (j.contains("out"))
    {
        if (!j["out"].is_string())
            throw ConfigError("out: expected a string");
        cfg.out_dir = j["out"].get<std::string>();
    }
}

void validate_config(const RunConfig &cfg)
{
    validate_target(cfg.target);
    validate_substrate(cfg.sub);
    validate_band(cfg.band);
    if (!(cfg.efficiency > 0.0 && cfg.efficiency <= 1.0))
        throw InvalidArgument("efficiency must lie in (0, 1]");
    tune::validate_tolerance_spec(cfg.tolerance);
    if (cfg.out_dir.empty())
        throw InvalidArgument("output directory must not be empty");
}

int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err)
{
    CLI::App app{"patchkit: rectangular microstrip patch antenna synthesis and analysis"};
    app.require_subcommand(1);
    Flags flags;
    auto *synth = app.add_subcommand("synth", "closed-form transmission-line synthesis; writes design.json");
    auto *analyze = app.add_subcommand("analyze", "tune, match, sweep and pattern; writes s1p, CSVs and report");
    auto *tolerance = app.add_subcommand("tolerance", "Monte Carlo fabrication tolerance study");
    auto *layout_cmd = app.add_subcommand("layout", "board geometry as JSON and DXF");
    auto *report_cmd = app.add_subcommand("report", "print the design report and comparison table");
    for (auto *sub : {synth, analyze, tolerance, layout_cmd, report_cmd})
        add_common(sub, flags);
    report_cmd->add_flag("--published-rows", flags.published_rows, "append the published comparison rows");

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError &e)
    {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    RunConfig cfg;
    try
    {
        cfg = resolve(flags);
        validate_config(cfg);
    }
    catch (const std::exception &e)
    {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
    if (flags.threads)
    {
        if (*flags.threads < 1)
        {
            err << "error: --threads must be at least 1\n";
            return kUsage;
        }
        omp_set_num_threads(*flags.threads);
    }

    try
    {
        if (synth->parsed())
            return cmd_synth(cfg, out);
        if (analyze->parsed())
            return cmd_analyze(cfg, out);
        if (tolerance->parsed())
            return cmd_tolerance(cfg, out);
        if (layout_cmd->parsed())
            return cmd_layout(cfg, out);
        return cmd_report(cfg, out);
    }
    catch (const ConfigError &e)
    {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
    catch (const std::exception &e)
    {
        err << "error: " << e.what() << '\n';
        return kModelFailure;
    }
}

} // namespace patchkit::cli

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

#include "patchkit/report.hpp"

#include "patchkit/format.hpp"
#include "patchkit/random.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>
#include <sstream>

namespace patchkit::report
{

std::string write_touchstone(const network::SweepResult &sweep, double z0_ref,
                             const std::vector<std::string> &comments)
{
    if (!(z0_ref > 0.0))
        throw InvalidArgument("touchstone: reference impedance must be positive");
    const auto &f = sweep.freqs_hz;
    for (std::size_t i = 1; i < f.size(); ++i)
        if (!(f[i] > f[i - 1]))
            throw InvalidArgument("touchstone: frequencies must be strictly ascending");

    std::string out = "! patchkit one-port reflection (transmission-line model estimate)\n";
    for (const auto &c : comments)
        out += "! " + c + '\n';
    std::size_t skipped = 0;
    for (auto v : sweep.valid)
        skipped += v ? 0 : 1;
    if (skipped)
        out += "! " + std::to_string(skipped) + " singular model points omitted\n";
    out += "# GHz S RI R " + fmt::shortest(z0_ref) + '\n';
    for (std::size_t i = 0; i < f.size(); ++i)
    {
        if (!sweep.valid[i])
            continue;
        out += fmt::scientific(units::hz_to_ghz(f[i]), 9);
        out += ' ';
        out += fmt::scientific(sweep.gamma[i].real(), 9);
        out += ' ';
        out += fmt::scientific(sweep.gamma[i].imag(), 9);
        out += '\n';
    }
    return out;
}

TouchstoneData parse_touchstone(const std::string &text)
{
    TouchstoneData d;
    double scale = 1e9;
    std::string format = "MA";
    bool have_options = false;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line))
    {
        if (const auto bang = line.find('!'); bang != std::string::npos)
            line.erase(bang);
        std::istringstream ls(line);
        std::vector<std::string> tok;
        for (std::string t; ls >> t;)
            tok.push_back(t);
        if (tok.empty())
            continue;
        if (tok[0] == "#")
        {
            if (have_options)
                continue; // only the first option line counts
            have_options = true;
            for (std::size_t i = 1; i < tok.size(); ++i)
            {
                std::string t = tok[i];
                std::transform(t.begin(), t.end(), t.begin(), [](unsigned char c) { return std::toupper(c); });
                if (t == "HZ")
                    scale = 1.0;
                else if (t == "KHZ")
                    scale = 1e3;
                else if (t == "MHZ")
                    scale = 1e6;
                else if (t == "GHZ")
                    scale = 1e9;
                else if (t == "RI" || t == "MA" || t == "DB")
                    format = t;
                else if (t == "R" && i + 1 < tok.size())
                    d.z0_ref = fmt::parse_double(tok[++i]);
                else if (t != "S")
                    throw InvalidArgument("touchstone: unsupported option '" + tok[i] + "'");
            }
            continue;
        }
        if (tok.size() != 3)
            throw InvalidArgument("touchstone: one-port data lines need 3 values");
        const double f = fmt::parse_double(tok[0]) * scale;
        const double a = fmt::parse_double(tok[1]);
        const double b = fmt::parse_double(tok[2]);
        Complex g;
        if (format == "RI")
            g = Complex(a, b);
        else
        {
            const double mag = format == "MA" ? a : std::pow(10.0, a / 20.0);
            g = std::polar(mag, b * constants::pi / 180.0);
        }
        d.freqs_hz.push_back(f);
        d.gamma.push_back(g);
    }
    return d;
}

std::string write_sweep_csv(const network::SweepResult &sweep)
{
    std::string out = "freq_hz,s11_db,vswr\n";
    for (std::size_t i = 0; i < sweep.freqs_hz.size(); ++i)
    {
        out += fmt::trimmed(sweep.freqs_hz[i]);
        out += ',';
        out += fmt::trimmed(sweep.s11_db[i]);
        out += ',';
        out += fmt::trimmed(sweep.vswr[i]);
        out += '\n';
    }
    return out;
}

namespace
{

double to_db(double u)
{
    return u > 0.0 ? 10.0 * std::log10(u) : -std::numeric_limits<double>::infinity();
}

std::size_t phi_index(const radiation::PatternGrid &g, std::size_t quarter)
{
    return quarter * g.phi_deg.size() / 4;
}

} // namespace

std::string write_pattern_csv(const radiation::PatternGrid &grid)
{
    if (grid.support != radiation::Support::Hemisphere)
        throw InvalidArgument("pattern csv: expects a hemisphere grid");
    if (grid.phi_deg.size() % 4 != 0)
        throw InvalidArgument("pattern csv: phi sample count must be a multiple of 4");
    const std::size_t e_pos = phi_index(grid, 0), h_pos = phi_index(grid, 1);
    const std::size_t e_neg = phi_index(grid, 2), h_neg = phi_index(grid, 3);
    const std::size_t nt = grid.theta_deg.size();

    std::string out = "theta_deg,e_plane_db,h_plane_db\n";
    auto row = [&](double theta, double e, double h) {
        out += fmt::trimmed(theta);
        out += ',';
        out += fmt::trimmed(to_db(e));
        out += ',';
        out += fmt::trimmed(to_db(h));
        out += '\n';
    };
    for (std::size_t k = nt; k-- > 1;)
        row(-grid.theta_deg[k], grid.at(k, e_neg), grid.at(k, h_neg));
    for (std::size_t k = 0; k < nt; ++k)
        row(grid.theta_deg[k], grid.at(k, e_pos), grid.at(k, h_pos));
    return out;
}

const std::vector<ComparisonRow> &published_rows()
{
    // Bandwidth of the reference design is the tabulated 2.02 GHz; its quoted
    // band edges (27.185-29.211 GHz) give 2.026 GHz.
    static const std::vector<ComparisonRow> rows = {
        {"Proposed design (published, CST)", -21.4, 2.02, 8.19},
        {"Gaid et al., 2024", -45.0, 1.43, 8.1},
        {"Farahat & Hussein, 2022", -34.5, 1.23, 6.6},
        {"Raheel et al., 2021", -25.0, 1.0, 7.1},
    };
    return rows;
}

std::string comparison_table(const ComparisonRow &own, bool include_published_rows)
{
    if (!std::isfinite(own.s11_db) || !std::isfinite(own.bandwidth_ghz) || !std::isfinite(own.gain_dbi))
        throw InvalidArgument("comparison table: model metrics must be finite");

    auto pad = [](std::string s, std::size_t w, bool left) {
        if (s.size() >= w)
            return s;
        return left ? s + std::string(w - s.size(), ' ') : std::string(w - s.size(), ' ') + s;
    };
    std::string out;
    out += pad("Antenna", 34, true) + pad("S11 (dB)", 10, false) + pad("BW (GHz)", 10, false) +
           pad("Gain (dBi)", 12, false) + '\n';
    auto emit = [&](const ComparisonRow &r) {
        out += pad(r.label, 34, true) + pad(fmt::fixed(r.s11_db, 2), 10, false) +
               pad(fmt::fixed(r.bandwidth_ghz, 3), 10, false) + pad(fmt::fixed(r.gain_dbi, 2), 12, false) + '\n';
    };
    ComparisonRow model = own;
    model.label = kModelRowLabel;
    emit(model);
    if (include_published_rows)
        for (const auto &r : published_rows())
            emit(r);
    return out;
}

std::string design_report(const PatchDesign &d, const network::SweepResult &sweep, const radiation::PatternGrid &grid,
                          const ReportOptions &opt)
{
    using fmt::fixed;
    using units::hz_to_ghz;
    using units::m_to_mm;

    const TlmSolution closed = synthesis::synthesize_patch(d.target, d.sub);
    std::string out;
    auto line = [&](const std::string &label, const std::string &value) {
        std::string l = "  " + label;
        if (l.size() < 34)
            l += std::string(34 - l.size(), ' ');
        out += l + value + '\n';
    };

    out += "Microstrip patch design report\n";
    out += "==============================\n\n";

    out += "Inputs\n";
    line("resonant frequency", fixed(hz_to_ghz(d.target.f_r_hz), 3) + " GHz");
    line("reference impedance", fixed(d.target.z0_ohm, 2) + " ohm");
    line("substrate", d.sub.name.empty() ? std::string("custom") : d.sub.name);
    line("eps_r", fixed(d.sub.eps_r, 3));
    line("height", fixed(m_to_mm(d.sub.height_m), 3) + " mm");
    line("loss tangent", fixed(d.sub.loss_tangent, 4));
    out += '\n';

    out += "Closed-form transmission-line synthesis\n";
    line("patch width W", fixed(m_to_mm(closed.w_patch_m), 3) + " mm");
    line("effective permittivity", fixed(closed.eps_eff, 4));
    line("length extension dL", fixed(m_to_mm(closed.delta_l_m), 3) + " mm");
    line("effective length L_eff", fixed(m_to_mm(closed.l_eff_m), 3) + " mm");
    line("patch length L", fixed(m_to_mm(closed.l_patch_m), 3) + " mm");
    line("edge impedance Z_in", fixed(closed.z_edge_ohm, 1) + " ohm");
    line("transformer impedance Z_T", fixed(closed.z_qwt_ohm, 1) + " ohm");
    out += '\n';

    out += "Tuned geometry (network model)\n";
    line("patch W x L", fixed(m_to_mm(d.tlm.w_patch_m), 3) + " x " + fixed(m_to_mm(d.tlm.l_patch_m), 3) + " mm");
    line("transformer Z / width / length", fixed(d.qwt.z0_ohm, 1) + " ohm / " + fixed(m_to_mm(d.qwt.width_m), 3) +
                                               " mm / " + fixed(m_to_mm(d.qwt.length_m), 3) + " mm");
    line("feed Z / width / length", fixed(d.feed.z0_ohm, 1) + " ohm / " + fixed(m_to_mm(d.feed.width_m), 3) +
                                        " mm / " + fixed(m_to_mm(d.feed.length_m), 3) + " mm");
    line("board W x L", fixed(d.board_w_mm, 3) + " x " + fixed(d.board_l_mm, 3) + " mm");
    if (d.uslot)
        line("ground U-slot (w x l, arm)", fixed(d.uslot->outer_w_mm, 3) + " x " + fixed(d.uslot->outer_l_mm, 3) +
                                               ", " + fixed(d.uslot->arm_w_mm, 3) + " mm" +
                                               (d.uslot->placeholder ? " [placeholder]" : ""));
    else
        line("ground U-slot", "none");
    out += '\n';

    const Complex g_res = network::reflection(d, sweep.f_res_hz);
    out += "Model metrics\n";
    line("resonance f_res", fixed(hz_to_ghz(sweep.f_res_hz), 4) + " GHz");
    line("S11 at f_res", fixed(sweep.s11_at_res_db, 2) + " dB");
    line("VSWR at f_res", fixed(network::vswr(g_res), 3));
    if (sweep.band)
    {
        const auto &b = *sweep.band;
        line(fixed(sweep.threshold_db, 0) + " dB band",
             fixed(hz_to_ghz(b.f_low_hz), 4) + " - " + fixed(hz_to_ghz(b.f_high_hz), 4) + " GHz (" +
                 fixed(hz_to_ghz(b.bw_hz), 4) + " GHz" + (b.clipped() ? ", clipped by sweep edge" : "") + ")");
    }
    else
        line(fixed(sweep.threshold_db, 0) + " dB band", "none");
    line("directivity", fixed(grid.d0_dbi, 2) + " dBi");
    line("gain", fixed(grid.gain_dbi, 2) + " dBi (efficiency " + fixed(opt.efficiency, 2) + ")");
    out += '\n';

    out += "Assumptions\n";
    out += "  - Radiation efficiency " + fixed(opt.efficiency, 2) +
           " is an assumed value, not derived; gain = directivity + 10 log10(efficiency).\n";
    out += "  - Network and pattern come from the two-slot transmission-line model on an infinite\n"
           "    ground plane. They are estimates, not full-wave results.\n";
    out += "  - Lossless quasi-static lines: no dispersion, conductor or dielectric loss, no surface waves.\n";
    out += "  - The ground-plane U-slot is geometry only; it does not enter the network or pattern model.\n";
    if (d.uslot && d.uslot->placeholder)
        out += "  - U-slot dimensions are placeholders (0.8 W x 0.5 L, arm 0.1 L, centered under the patch).\n";
    out += "  - Feed line length is " + fixed(m_to_mm(d.feed.length_m), 3) +
           " mm; in the lossless model it only rotates the phase of S11.\n";
    out += "  - Board margin derived from the substrate height; Monte Carlo uses " +
           std::string(random::kGeneratorName) + ".\n";
    return out;
}

} // namespace patchkit::report

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

#include <catch_amalgamated.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

using namespace patchkit;
namespace fs = std::filesystem;

namespace
{

struct Result
{
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args)
{
    args.insert(args.begin(), "patchkit");
    std::vector<const char *> argv;
    for (const auto &a : args)
        argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

fs::path scratch(const std::string &name)
{
    const fs::path p = fs::temp_directory_path() / ("patchkit_cli_test_" + name);
    fs::remove_all(p);
    return p;
}

std::string slurp(const fs::path &p)
{
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

double number_after(const std::string &text, const std::string &label)
{
    std::smatch m;
    const std::regex re(label + R"(\s+(-?[0-9.]+))");
    REQUIRE(std::regex_search(text, m, re));
    return std::stod(m[1]);
}

} // namespace

TEST_CASE("synth", "[cli]")
{
    const auto dir = scratch("synth");
    const auto r = run({"synth", "--f", "28", "--eps-r", "1.96", "--h-mm", "0.762", "--out", dir.string()});
    REQUIRE(r.code == 0);
    CHECK(number_after(r.out, "W") == Catch::Approx(4.40).margin(0.005));
    CHECK(number_after(r.out, "L") == Catch::Approx(3.25).margin(0.005));
    CHECK(number_after(r.out, "Z_in") == Catch::Approx(196.5).margin(0.1));
    CHECK(number_after(r.out, "Z_T") == Catch::Approx(99.1).margin(0.1));
    CHECK(r.out.find(" mm") != std::string::npos);
    const auto j = nlohmann::json::parse(slurp(dir / "design.json"));
    CHECK(j["synthesis"]["w_patch_mm"].get<double>() == Catch::Approx(4.4005).margin(1e-4));
    fs::remove_all(dir);
}

TEST_CASE("invalid configuration exits 2", "[cli]")
{
    for (const char *cmd : {"synth", "analyze", "tolerance", "layout", "report"})
    {
        const auto e = run({cmd, "--eps-r", "0.5", "--out", scratch("bad").string()});
        CHECK(e.code == 2);
        CHECK(e.err.find("eps_r below 1") != std::string::npos);
        CHECK(run({cmd, "--f", "0"}).code == 2);
        CHECK(run({cmd, "--no-such-flag"}).code == 2);
        CHECK(run({cmd, "--efficiency", "1.5"}).code == 2);
    }
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("computation failure exits 1", "[cli]")
{
    const auto r = run({"synth", "--eps-r", "1.0", "--out", scratch("air").string()});
    CHECK(r.code == 1);
    CHECK(r.err.find("edge_impedance") != std::string::npos);
    fs::remove_all(scratch("air"));
}

TEST_CASE("analyze", "[cli]")
{
    const auto dir = scratch("analyze");
    const auto r = run({"analyze", "--out", dir.string()});
    REQUIRE(r.code == 0);
    CHECK(number_after(r.out, "f_res") == Catch::Approx(28.0).margin(0.05));
    CHECK(number_after(r.out, "S11@f_res") <= -20.0);
    CHECK(r.out.find("directivity") != std::string::npos);
    CHECK(r.out.find("gain") != std::string::npos);
    CHECK(r.out.find("VSWR") != std::string::npos);
    std::size_t n = 0;
    for ([[maybe_unused]] const auto &e : fs::directory_iterator(dir))
        ++n;
    CHECK(n == 4);
    for (const char *f : {"patch.s1p", "sweep.csv", "pattern.csv", "report.txt"})
        CHECK(fs::exists(dir / f));

    const auto first = slurp(dir / "patch.s1p") + slurp(dir / "sweep.csv") + slurp(dir / "pattern.csv");
    REQUIRE(run({"analyze", "--out", dir.string(), "--threads", "3"}).code == 0);
    CHECK(first == slurp(dir / "patch.s1p") + slurp(dir / "sweep.csv") + slurp(dir / "pattern.csv"));

    const auto off = run({"analyze", "--band", "29", "30", "--out", dir.string()});
    CHECK(off.code == 1);
    CHECK(off.err.find("resonance not bracketed") != std::string::npos);
    fs::remove_all(dir);
}

TEST_CASE("tolerance", "[cli]")
{
    const auto a = run({"tolerance", "--seed", "7", "--n", "100"});
    const auto b = run({"tolerance", "--seed", "7", "--n", "100"});
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.find("seed 7") != std::string::npos);
    CHECK(a.out.find("philox4x32-10") != std::string::npos);

    const auto z = run({"tolerance", "--dim-tol", "0", "--n", "10"});
    REQUIRE(z.code == 0);
    CHECK(number_after(z.out, "f_res mean [0-9.]+ std") == 0.0);
    CHECK(run({"tolerance", "--n", "0"}).code == 2);
    CHECK(run({"tolerance", "--dim-tol", "-0.1"}).code == 2);
}

TEST_CASE("layout", "[cli]")
{
    const auto dir = scratch("layout");
    const auto plain = run({"layout", "--out", dir.string()});
    REQUIRE(plain.code == 0);
    CHECK(number_after(plain.out, "polygons") == 4);
    CHECK(plain.out.find("board") != std::string::npos);
    CHECK(fs::exists(dir / "layout.json"));
    CHECK(fs::exists(dir / "layout.dxf"));

    const auto with_u = run({"layout", "--uslot", "default", "--out", dir.string()});
    REQUIRE(with_u.code == 0);
    CHECK(number_after(with_u.out, "polygons") == 5);
    CHECK(slurp(dir / "layout.json").find("placeholder") != std::string::npos);

    CHECK(run({"layout", "--uslot-w-mm", "40", "--out", dir.string()}).code == 1);
    CHECK(run({"layout", "--uslot", "sideways"}).code == 2);
    fs::remove_all(dir);
}

TEST_CASE("report", "[cli]")
{
    const auto r = run({"report", "--published-rows", "--out", scratch("report").string()});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("Assumptions") != std::string::npos);
    CHECK(r.out.find("TL-model estimate") != std::string::npos);
    CHECK(r.out.find("8.19") != std::string::npos);
    const auto plain = run({"report"});
    CHECK(plain.out.find("8.19") == std::string::npos);
}

TEST_CASE("config file and flag precedence", "[cli]")
{
    const auto dir = scratch("config");
    fs::create_directories(dir);
    const auto cfg = dir / "run.json";
    std::ofstream(cfg) << R"({"f_ghz": 24, "substrate": {"eps_r": 2.2, "h_mm": 0.5}, "out": ")" +
                              (dir / "o").string() + R"("})";

    {
        cli::RunConfig c;
        cli::apply_config_json(c, slurp(cfg));
        CHECK(c.target.f_r_hz == 24e9);
        CHECK(c.sub.eps_r == 2.2);
        CHECK(c.sub.height_m == Catch::Approx(0.5e-3).epsilon(1e-15));
    }

    const auto from_file = run({"synth", "--config", cfg.string()});
    REQUIRE(from_file.code == 0);
    const double w24 = number_after(from_file.out, "W");
    CHECK(w24 == Catch::Approx(299.792458 / 48.0 * std::sqrt(2.0 / 3.2)).margin(0.001));

    const auto flag_wins = run({"synth", "--config", cfg.string(), "--f", "28"});
    REQUIRE(flag_wins.code == 0);
    CHECK(number_after(flag_wins.out, "W") == Catch::Approx(299.792458 / 56.0 * std::sqrt(2.0 / 3.2)).margin(0.001));
    CHECK(fs::exists(dir / "o" / "design.json"));

    std::ofstream(dir / "bad.json") << R"({"f_ghz": 28, "colour": "red"})";
    const auto bad = run({"synth", "--config", (dir / "bad.json").string()});
    CHECK(bad.code == 2);
    CHECK(bad.err.find("colour") != std::string::npos);
    CHECK(run({"synth", "--config", (dir / "missing.json").string()}).code == 2);

    cli::RunConfig c;
    CHECK_THROWS(cli::apply_config_json(c, R"({"band": {"start_ghz": 26, "points": -3}})"));
    CHECK_THROWS(cli::apply_config_json(c, R"({"substrate": {"eps_r": 2, "thickness": 1}})"));
    fs::remove_all(dir);
}

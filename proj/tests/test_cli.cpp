// Copyright (C) 2026 the abharm authors
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT
#include "doctest.h"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>

#include "abharm/errors.hpp"
#include "abharm/json_io.hpp"

namespace fs = std::filesystem;

namespace {

std::string g_cli_path;
fs::path g_work_dir;

struct RunResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

std::string slurp(const fs::path& p)
{
    std::ifstream in(p, std::ios::binary);
    return std::string((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
}

void spit(const fs::path& p, const std::string& text)
{
    std::ofstream out(p, std::ios::binary);
    out << text;
}

RunResult run_cli(const std::string& args)
{
    const fs::path out_file = g_work_dir / "stdout.tmp";
    const fs::path err_file = g_work_dir / "stderr.tmp";
    const std::string cmd = g_cli_path + " " + args + " > " + out_file.string() + " 2> " +
                            err_file.string();
    const int status = std::system(cmd.c_str());
    RunResult r;
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = slurp(out_file);
    r.err = slurp(err_file);
    return r;
}

void write_fixtures()
{
    spit(g_work_dir / "g2.json", R"({"cyclic_orders":[2]})");
    spit(g_work_dir / "g3.json", R"({"cyclic_orders":[3]})");
    spit(g_work_dir / "g4.json", R"({"cyclic_orders":[4]})");
    spit(g_work_dir / "g34.json", R"({"cyclic_orders":[3,4]})");
    spit(g_work_dir / "g12.json", R"({"cyclic_orders":[12]})");
    spit(g_work_dir / "g64.json", R"({"cyclic_orders":[64]})");
    spit(g_work_dir / "ones2.json", R"({"values":[[1,0],[1,0]]})");
    spit(g_work_dir / "d1.json", R"({"values":[[0,0],[1,0],[0,0],[0,0]]})");
    spit(g_work_dir / "sup.json", R"({"support":[[0,[1,0]],[1,[1,0]],[2,[1,0]]]})");
    spit(g_work_dir / "cf.json", R"({"base":2,"depth":1,"values":[[1,0],[0,0]]})");
    spit(g_work_dir / "f.csv", "1,0\n1,0\n");
    spit(g_work_dir / "bad.json", R"({"values":[[1,0]]})");
    spit(g_work_dir / "garbage.json", "not json at all");
    spit(g_work_dir / "gneg.json", R"({"cyclic_orders":[-3]})");
    spit(g_work_dir / "tiny_env_f.json", R"({"values":[[1,0],[1,0]]})");
}

} // namespace

TEST_CASE("transform on [2] maps the constant to the trivial character")
{
    const auto r = run_cli("transform --group " + (g_work_dir / "g2.json").string() +
                           " --in " + (g_work_dir / "ones2.json").string());
    REQUIRE(r.exit_code == 0);
    const auto j = abharm::io::parse_text(r.out);
    const auto values = abharm::io::values_from_json(j["values"]);
    REQUIRE(values.size() == 2);
    CHECK(std::abs(values[0] - abharm::Complex{1.0, 0.0}) <= 1e-12);
    CHECK(std::abs(values[1]) <= 1e-12);
}

TEST_CASE("transform then itransform round-trips through files")
{
    abharm::io::json values = abharm::io::json::array();
    for (int i = 0; i < 12; ++i)
        values.push_back({0.125 * i - 0.4, 0.25 - 0.0625 * i});
    spit(g_work_dir / "f.json", abharm::io::dump_json({{"values", values}}, 17));

    const std::string spectrum_path = (g_work_dir / "spectrum.json").string();
    auto r = run_cli("transform --group " + (g_work_dir / "g34.json").string() + " --in " +
                     (g_work_dir / "f.json").string() + " --out " + spectrum_path);
    REQUIRE(r.exit_code == 0);

    r = run_cli("itransform --group " + (g_work_dir / "g34.json").string() + " --in " +
                spectrum_path);
    REQUIRE(r.exit_code == 0);
    const auto round = abharm::io::values_from_json(abharm::io::parse_text(r.out)["values"]);
    REQUIRE(round.size() == 12);
    for (int i = 0; i < 12; ++i) {
        const abharm::Complex expect{0.125 * i - 0.4, 0.25 - 0.0625 * i};
        CHECK(std::abs(round[i] - expect) <= 1e-9);
    }
}

TEST_CASE("reruns are byte-identical and --naive agrees with the fast path")
{
    abharm::io::json values = abharm::io::json::array();
    for (int i = 0; i < 12; ++i)
        values.push_back({std::sin(0.7 * i), std::cos(1.3 * i)});
    spit(g_work_dir / "f12.json", abharm::io::dump_json({{"values", values}}, 17));

    const std::string base_cmd = "transform --group " + (g_work_dir / "g12.json").string() +
                                 " --in " + (g_work_dir / "f12.json").string();
    const auto first = run_cli(base_cmd);
    const auto second = run_cli(base_cmd);
    REQUIRE(first.exit_code == 0);
    CHECK(first.out == second.out);

    const auto naive = run_cli(base_cmd + " --naive");
    REQUIRE(naive.exit_code == 0);
    const auto fast_values =
        abharm::io::values_from_json(abharm::io::parse_text(first.out)["values"]);
    const auto naive_values =
        abharm::io::values_from_json(abharm::io::parse_text(naive.out)["values"]);
    for (std::size_t i = 0; i < 12; ++i)
        CHECK(std::abs(fast_values[i] - naive_values[i]) <= 1e-9);
}

TEST_CASE("convolve, translate, characters, haar commands")
{

    auto r = run_cli("convolve --group " + (g_work_dir / "g4.json").string() + " --in " +
                     (g_work_dir / "d1.json").string() + " --in2 " +
                     (g_work_dir / "d1.json").string() + " --haar counting");
    REQUIRE(r.exit_code == 0);
    auto vals = abharm::io::values_from_json(abharm::io::parse_text(r.out)["values"]);
    CHECK(std::abs(vals[2] - abharm::Complex{1.0, 0.0}) <= 1e-12);
    CHECK(std::abs(vals[0]) <= 1e-12);

    r = run_cli("translate --group " + (g_work_dir / "g4.json").string() + " --in " +
                (g_work_dir / "d1.json").string() + " --by \"[2]\"");
    REQUIRE(r.exit_code == 0);
    vals = abharm::io::values_from_json(abharm::io::parse_text(r.out)["values"]);
    CHECK(vals[3] == abharm::Complex{1.0, 0.0});

    r = run_cli("characters --group " + (g_work_dir / "g2.json").string());
    REQUIRE(r.exit_code == 0);
    auto j = abharm::io::parse_text(r.out);
    CHECK(j["count"] == 2);
    CHECK(j["characters"].size() == 2);

    r = run_cli("haar-unique --group " + (g_work_dir / "g3.json").string());
    REQUIRE(r.exit_code == 0);
    CHECK(abharm::io::parse_text(r.out)["dimension"] == 1);

    r = run_cli("haar-check --group " + (g_work_dir / "g4.json").string() + " --function " +
                (g_work_dir / "d1.json").string() + " --shifts 8");
    REQUIRE(r.exit_code == 0);
    j = abharm::io::parse_text(r.out);
    CHECK(j["positivity_ok"] == true);
    CHECK(j["invariance_max_residual"].get<double>() <= 1e-12);
    CHECK(j["linearity_max_residual"].get<double>() <= 1e-12);
}

TEST_CASE("laplace command")
{
    const auto r = run_cli("laplace --support " + (g_work_dir / "sup.json").string() +
                           " --base \"1,0\"");
    REQUIRE(r.exit_code == 0);
    const auto j = abharm::io::parse_text(r.out);
    CHECK(j["character"] == "bounded");
    CHECK(std::abs(j["value"][0].get<double>() - 3.0) <= 1e-12);
    CHECK(std::abs(j["value"][1].get<double>()) <= 1e-12);
}

TEST_CASE("cantor commands")
{

    auto r = run_cli("cantor-integrate --in " + (g_work_dir / "cf.json").string());
    REQUIRE(r.exit_code == 0);
    CHECK(std::abs(abharm::io::parse_text(r.out)["value"][0].get<double>() - 0.5) <= 1e-15);

    r = run_cli("cantor-refine --in " + (g_work_dir / "cf.json").string() + " --to 2");
    REQUIRE(r.exit_code == 0);
    auto j = abharm::io::parse_text(r.out);
    CHECK(j["depth"] == 2);
    auto vals = abharm::io::values_from_json(j["values"]);
    REQUIRE(vals.size() == 4);
    CHECK(vals[0] == abharm::Complex{1.0, 0.0});
    CHECK(vals[1] == abharm::Complex{0.0, 0.0});
    CHECK(vals[2] == abharm::Complex{1.0, 0.0});
    CHECK(vals[3] == abharm::Complex{0.0, 0.0});

    r = run_cli("cantor-transform --in " + (g_work_dir / "cf.json").string() + " --base 2");
    REQUIRE(r.exit_code == 0);
    vals = abharm::io::values_from_json(abharm::io::parse_text(r.out)["values"]);
    CHECK(std::abs(vals[0] - abharm::Complex{0.5, 0.0}) <= 1e-12);
    CHECK(std::abs(vals[1] - abharm::Complex{0.5, 0.0}) <= 1e-12);

    r = run_cli("cantor-transform --in " + (g_work_dir / "cf.json").string() + " --base 3");
    CHECK(r.exit_code == 1);
}

TEST_CASE("csv import")
{
    const auto r = run_cli("transform --group " + (g_work_dir / "g2.json").string() +
                           " --in " + (g_work_dir / "f.csv").string() + " --csv");
    REQUIRE(r.exit_code == 0);
    const auto vals = abharm::io::values_from_json(abharm::io::parse_text(r.out)["values"]);
    CHECK(std::abs(vals[0] - abharm::Complex{1.0, 0.0}) <= 1e-12);
}

TEST_CASE("error contract: schema errors exit 1, I/O errors exit 2, no partial output")
{
    auto r = run_cli("transform --group " + (g_work_dir / "g4.json").string() + " --in " +
                     (g_work_dir / "bad.json").string());
    CHECK(r.exit_code == 1);
    CHECK(r.out.empty());
    auto err = abharm::io::parse_text(r.err);
    CHECK(err["code"] == "ShapeMismatch");
    CHECK(err["path"].get<std::string>().find("bad.json") != std::string::npos);

    r = run_cli("transform --group " + (g_work_dir / "g4.json").string() + " --in " +
                (g_work_dir / "missing.json").string());
    CHECK(r.exit_code == 2);
    CHECK(r.out.empty());
    err = abharm::io::parse_text(r.err);
    CHECK(err["code"] == "IoError");

    r = run_cli("transform --group " + (g_work_dir / "g4.json").string() + " --in " +
                (g_work_dir / "garbage.json").string());
    CHECK(r.exit_code == 1);
    err = abharm::io::parse_text(r.err);
    CHECK(err["code"] == "ParseError");

    r = run_cli("haar-unique --group " + (g_work_dir / "gneg.json").string());
    CHECK(r.exit_code == 1);
    err = abharm::io::parse_text(r.err);
    CHECK(err["code"] == "NonPositiveOrder");
}

TEST_CASE("precision flag and version")
{
    const std::string base = "transform --group " + (g_work_dir / "g2.json").string() +
                             " --in " + (g_work_dir / "ones2.json").string();
    auto r = run_cli(base + " --precision 6");
    REQUIRE(r.exit_code == 0);
    const auto again = run_cli(base + " --precision 6");
    CHECK(r.out == again.out);

    r = run_cli(base + " --precision 3");
    CHECK(r.exit_code != 0);
    r = run_cli(base + " --precision 18");
    CHECK(r.exit_code != 0);

    r = run_cli("--version");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("abharm") != std::string::npos);
    r = run_cli("--help");
    CHECK(r.exit_code == 0);
}

TEST_CASE("json io schemas")
{
    using abharm::io::json;
    CHECK(abharm::io::complex_from_json(json{{"re", 1.5}, {"im", -2.0}}) ==
          abharm::Complex{1.5, -2.0});
    CHECK_THROWS_AS(abharm::io::complex_from_json(json{{"re", 1.5}}), abharm::Error);

    CHECK(abharm::io::format_double(1.0, 12) == "1");
    CHECK(abharm::io::format_double(0.25, 12) == "0.25");
    CHECK(abharm::io::format_double(1.0 / 3.0, 6) == "0.333333");

    const json report{{"b", true}, {"a", 0.5}, {"list", json::array({1, 2.25})}};
    CHECK(abharm::io::dump_json(report, 12) == R"({"a":0.5,"b":true,"list":[1,2.25]})");

    const auto csv = abharm::io::values_from_csv("0.5,-1\n\n 2, 3 \n");
    REQUIRE(csv.size() == 2);
    CHECK(csv[0] == abharm::Complex{0.5, -1.0});
    CHECK(csv[1] == abharm::Complex{2.0, 3.0});
    CHECK_THROWS_AS(abharm::io::values_from_csv("only-one-column\n"), abharm::Error);

    const auto support = abharm::io::support_from_json(
        abharm::io::parse_text(R"({"support":[[3,[0.5,1]],[-2,[0,0.25]]]})"));
    REQUIRE(support.size() == 2);
    CHECK(support[0].index == 3);
    CHECK(support[1].value == abharm::Complex{0.0, 0.25});
}

TEST_CASE("ABHARM_SIZE_CAP lowers the construction cap")
{
    const auto r = run_cli(std::string("transform --group ") +
                           (g_work_dir / "g64.json").string() + " --in " +
                           (g_work_dir / "tiny_env_f.json").string());
    // Sanity: without the env var this fails only on the value count.
    CHECK(r.exit_code == 1);

    const fs::path out_file = g_work_dir / "stdout.tmp";
    const fs::path err_file = g_work_dir / "stderr.tmp";
    const std::string cmd = "ABHARM_SIZE_CAP=32 " + g_cli_path + " haar-unique --group " +
                            (g_work_dir / "g64.json").string() + " > " + out_file.string() +
                            " 2> " + err_file.string();
    const int status = std::system(cmd.c_str());
    CHECK(WEXITSTATUS(status) == 1);
    const auto err = abharm::io::parse_text(slurp(err_file));
    CHECK(err["code"] == "SizeCapExceeded");
}

int main(int argc, char** argv)
{
    const char* env = std::getenv("ABHARM_BIN");
    if (env != nullptr) {
        g_cli_path = env;
    } else {
        // Default build layout: <build>/tests/test_cli and <build>/tools/abharm.
        const fs::path self = fs::absolute(argv[0]);
        g_cli_path = (self.parent_path().parent_path() / "tools" / "abharm").string();
    }
    if (!fs::exists(g_cli_path)) {
        std::fprintf(stderr, "cannot find the abharm binary at %s\n", g_cli_path.c_str());
        return 1;
    }

    g_work_dir = fs::temp_directory_path() /
                 ("abharm_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(g_work_dir);
    write_fixtures();

    doctest::Context context(argc, argv);
    const int rc = context.run();

    std::error_code ec;
    fs::remove_all(g_work_dir, ec);
    return rc;
}

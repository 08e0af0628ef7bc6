#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "ancilla/cli.hpp"

using namespace ancilla;
using cli::RunConfig;

namespace {

constexpr double kPi = std::numbers::pi;

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

int run_cli(const std::vector<std::string>& args) {
    std::vector<const char*> argv = {"ancillasim"};
    for (const auto& a : args) argv.push_back(a.c_str());
    return cli::run_main(static_cast<int>(argv.size()), argv.data());
}

struct TempDir {
    std::filesystem::path path;
    TempDir() {
        path = std::filesystem::temp_directory_path() / "ancilla_cli_test";
        std::filesystem::create_directories(path);
    }
    ~TempDir() { std::filesystem::remove_all(path); }
    std::string file(const std::string& name) const { return (path / name).string(); }
};

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
    std::vector<std::vector<std::string>> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::vector<std::string> fields;
        std::istringstream ls(line);
        std::string field;
        while (std::getline(ls, field, ',')) fields.push_back(field);
        rows.push_back(std::move(fields));
    }
    return rows;
}

}  // namespace

TEST_CASE("parse_args builds the sphere config") {
    const auto cfg = cli::parse_args({"sphere", "--phi", "0.19634954", "--n", "20", "--out", "out.csv"});
    CHECK(cfg.scenario == RunConfig::Scenario::sphere);
    REQUIRE(cfg.phis.size() == 1);
    CHECK(cfg.phis[0] == doctest::Approx(kPi / 16.0).epsilon(1e-7));
    CHECK(cfg.n == 20);
    CHECK(cfg.out == "out.csv");
}

TEST_CASE("parse_args builds the zeno config with explicit phi") {
    const auto cfg = cli::parse_args({"zeno", "--n-max", "100", "--phi", "1.5707963", "--out", "z.csv"});
    CHECK(cfg.scenario == RunConfig::Scenario::zeno);
    CHECK(cfg.n_max == 100);
    CHECK(cfg.phi == doctest::Approx(kPi / 2.0).epsilon(1e-7));
}

TEST_CASE("zeno and entanglement defaults") {
    const auto z = cli::parse_args({"zeno", "--n-max", "10", "--out", "z.csv"});
    CHECK(z.phi == doctest::Approx(kPi / 2.0).epsilon(1e-15));

    const auto e = cli::parse_args({"entanglement", "--out", "e.csv"});
    CHECK(e.scenario == RunConfig::Scenario::entanglement);
    CHECK(e.delta == 8e5);
    CHECK(e.g == 1.5e4);
    CHECK(e.g_t2 == doctest::Approx(kPi / 2.0).epsilon(1e-15));
    CHECK(e.alpha == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-15));
    CHECK(e.n_max == 50);
}

TEST_CASE("parse_args rejects bad input with usage errors") {
    auto expect_usage = [](const std::vector<std::string>& args) {
        try {
            (void)cli::parse_args(args);
            FAIL_CHECK("expected UsageError");
        } catch (const cli::UsageError& e) {
            CHECK(e.exit_code() == 2);
        }
    };
    expect_usage({"--bogus"});
    expect_usage({"sphere", "--phi", "0.1", "--n", "20"});          // missing --out
    expect_usage({"sphere", "--phi", "0.1", "--out", "x.csv"});     // missing --n
    expect_usage({"sphere", "--phi", "zzz", "--n", "5", "--out", "x.csv"});
    expect_usage({"sphere", "--phi", "0.1", "--n", "0", "--out", "x.csv"});
    expect_usage({"survival", "--phi", "nan", "--n", "5", "--out", "x.csv"});
    expect_usage({"entanglement", "--alpha", "1.0", "--out", "x.csv"});  // not normalized with default beta
    expect_usage({"zeno", "--n-max", "10", "--unknown", "1", "--out", "x.csv"});
}

TEST_CASE("help requests exit with status zero") {
    try {
        (void)cli::parse_args({"--help"});
        FAIL_CHECK("expected UsageError");
    } catch (const cli::UsageError& e) {
        CHECK(e.exit_code() == 0);
        CHECK(std::string(e.what()).find("sphere") != std::string::npos);
    }
}

TEST_CASE("repeated runs are byte-identical") {
    TempDir tmp;
    for (const auto& scenario : std::vector<std::vector<std::string>>{
             {"sphere", "--phi", "0.19634954", "--n", "20", "--out", tmp.file("a.csv")},
             {"survival", "--phi", "0.31415927", "--n", "10", "--samples", "16", "--out", tmp.file("a.csv")},
             {"zeno", "--n-max", "40", "--out", tmp.file("a.csv")},
             {"entanglement", "--n-max", "12", "--out", tmp.file("a.csv")}}) {
        CHECK(run_cli(scenario) == 0);
        const std::string first = slurp(tmp.file("a.csv"));
        CHECK(run_cli(scenario) == 0);
        CHECK(first == slurp(tmp.file("a.csv")));
        CHECK(!first.empty());
    }
}

TEST_CASE("sphere CSV carries the schema, unit points, and the axis row") {
    TempDir tmp;
    REQUIRE(run_cli({"sphere", "--phi", "0.19634954", "--n", "20", "--out", tmp.file("s.csv")}) == 0);
    const std::string text = slurp(tmp.file("s.csv"));
    CHECK(text.rfind("step,x,y,z\n", 0) == 0);
    CHECK(text.find("# axis,") != std::string::npos);

    const auto rows = parse_csv(text);
    REQUIRE(rows.size() == 22);  // header + 21 points
    for (std::size_t i = 1; i < rows.size(); ++i) {
        REQUIRE(rows[i].size() == 4);
        const double x = std::stod(rows[i][1]);
        const double y = std::stod(rows[i][2]);
        const double z = std::stod(rows[i][3]);
        CHECK(std::abs(std::sqrt(x * x + y * y + z * z) - 1.0) < 1e-10);
    }
}

TEST_CASE("sphere with several phi values writes indexed files") {
    TempDir tmp;
    REQUIRE(run_cli({"sphere", "--phi", "0.09817477", "--phi", "0.19634954", "--phi", "0.39269908",
                     "--n", "20", "--out", tmp.file("fig.csv")}) == 0);
    CHECK(std::filesystem::exists(tmp.file("fig_1.csv")));
    CHECK(std::filesystem::exists(tmp.file("fig_2.csv")));
    CHECK(std::filesystem::exists(tmp.file("fig_3.csv")));
    CHECK(!std::filesystem::exists(tmp.file("fig.csv")));
}

TEST_CASE("survival CSV schema and probability bounds") {
    TempDir tmp;
    REQUIRE(run_cli({"survival", "--phi", "0.31415927", "--n", "10", "--samples", "8",
                     "--out", tmp.file("t.csv")}) == 0);
    const std::string text = slurp(tmp.file("t.csv"));
    CHECK(text.rfind("t,p001,dp001_dt,segment,step\n", 0) == 0);
    const auto rows = parse_csv(text);
    REQUIRE(rows.size() == 1 + 10 * 2 * 8);
    for (std::size_t i = 1; i < rows.size(); ++i) {
        REQUIRE(rows[i].size() == 5);
        const double p = std::stod(rows[i][1]);
        CHECK(p >= 0.0);
        CHECK(p <= 1.0);
        CHECK((rows[i][3] == "bc" || rows[i][3] == "ab"));
    }
}

TEST_CASE("rate is an alias of survival") {
    TempDir tmp;
    REQUIRE(run_cli({"survival", "--phi", "0.31415927", "--n", "6", "--samples", "8",
                     "--out", tmp.file("a.csv")}) == 0);
    REQUIRE(run_cli({"rate", "--phi", "0.31415927", "--n", "6", "--samples", "8",
                     "--out", tmp.file("b.csv")}) == 0);
    CHECK(slurp(tmp.file("a.csv")) == slurp(tmp.file("b.csv")));
}

TEST_CASE("zeno CSV carries both baselines") {
    TempDir tmp;
    REQUIRE(run_cli({"zeno", "--n-max", "10", "--out", tmp.file("z.csv")}) == 0);
    const std::string text = slurp(tmp.file("z.csv"));
    CHECK(text.rfind("n,p001,zeno_paper,zeno_squared\n", 0) == 0);
    const auto rows = parse_csv(text);
    REQUIRE(rows.size() == 11);
    for (std::size_t i = 1; i < rows.size(); ++i) {
        REQUIRE(rows[i].size() == 4);
        for (int col : {1, 2, 3}) {
            const double v = std::stod(rows[i][col]);
            CHECK(v >= 0.0);
            CHECK(v <= 1.0);
        }
    }
}

TEST_CASE("entanglement CSV matches the sweep schema") {
    TempDir tmp;
    REQUIRE(run_cli({"entanglement", "--n-max", "8", "--out", tmp.file("e.csv")}) == 0);
    const std::string text = slurp(tmp.file("e.csv"));
    CHECK(text.rfind("n,t1,concurrence\n", 0) == 0);
    const auto rows = parse_csv(text);
    REQUIRE(rows.size() == 9);
    CHECK(std::stod(rows[1][2]) < 1e-12);              // N=1: fully swapped
    CHECK(std::stod(rows[1][1]) ==
          doctest::Approx(kPi / (2.0 * 1.5e4)).epsilon(1e-12));  // t1 = pi/(2g)
}

TEST_CASE("exit codes for I/O and degenerate parameters") {
    CHECK(run_cli({"sphere", "--phi", "0.1", "--n", "5",
                   "--out", "/nonexistent_ancilla_dir/x.csv"}) == 3);
    CHECK(run_cli({"sphere", "--phi", "0", "--n", "5", "--out", "/tmp/ancilla_degenerate.csv"}) == 4);
    CHECK(run_cli({"--bogus"}) == 2);
}

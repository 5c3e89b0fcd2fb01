// End-to-end checks of the command-line tool.  The binary path comes from
// the build system via CPNANO_CLI_PATH.

#include <array>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <doctest.h>
#include <json.hpp>

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    const std::string cmd = std::string(CPNANO_CLI_PATH) + " " + args + " 2>/dev/null";
    RunResult r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf{};
    while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) {
        r.out.append(buf.data(), n);
    }
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string slurp(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    std::ostringstream os;
    os << is.rdbuf();
    return os.str();
}

}  // namespace

TEST_CASE("eval: plate at the entropy zero crossing") {
    const auto r = run_cli(
        "eval --system plate --alpha-perp 1 --alpha-z 1 --Z 1 --y 2.97169");
    REQUIRE(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["command"] == "eval");
    CHECK(std::fabs(j["S"].get<double>()) < 1e-5);
    CHECK(std::fabs(j["s"].get<double>()) < 1e-6);
    CHECK(j["s_TE"].get<double>() < 0.0);
    CHECK(j["y"].get<double>() == doctest::Approx(2.97169));
}

TEST_CASE("eval: degenerate inputs") {
    const auto zero = run_cli(
        "eval --system pair --alpha-z-1 0 --alpha-z-2 0 --Z 1 --T 0.1");
    REQUIRE(zero.exit_code == 0);
    auto j = nlohmann::json::parse(zero.out);
    CHECK(j["F"].get<double>() == 0.0);
    CHECK(j["S"].get<double>() == 0.0);

    const auto dual = run_cli(
        "eval --system plate --alpha-perp 1 --alpha-z 1 --beta-perp 1 "
        "--beta-z 1 --Z 1 --T 0.2");
    REQUIRE(dual.exit_code == 0);
    j = nlohmann::json::parse(dual.out);
    CHECK(j["F"].get<double>() == 0.0);
}

TEST_CASE("usage errors exit with code 1") {
    CHECK(run_cli("eval --system bogus --T 1").exit_code == 1);
    CHECK(run_cli("eval --system plate").exit_code == 1);  // no T or y
    CHECK(run_cli("figure fig99").exit_code == 1);
    CHECK(run_cli("eval --system plate --T 0.1 --Z -1").exit_code == 1);
    CHECK(run_cli("nonsense").exit_code == 1);
}

TEST_CASE("critical: value and none-in-range statuses") {
    const auto hit = run_cli(
        "critical --system plate --sector tm --gamma-range 1.5 2.5 "
        "--tol 1e-4");
    REQUIRE(hit.exit_code == 0);
    auto j = nlohmann::json::parse(hit.out);
    CHECK(j["status"] == "ok");
    CHECK(j["gamma_star"].get<double>() == doctest::Approx(2.0).epsilon(1e-3));

    const auto miss = run_cli(
        "critical --system pair --sweep alpha-both --alpha-perp-1 1 "
        "--alpha-z-1 1 --alpha-perp-2 1 --alpha-z-2 1 "
        "--gamma-range 1.5 3.0 --tol 1e-4");
    REQUIRE(miss.exit_code == 0);  // informative, not a failure
    j = nlohmann::json::parse(miss.out);
    CHECK(j["status"] == "none-in-range");

    // magnetic sweep of two conducting spheres
    const auto beta = run_cli(
        "critical --system pair --sweep beta-both --alpha-perp-1 1 "
        "--alpha-z-1 1 --beta-perp-1 -0.5 --beta-z-1 -0.5 --alpha-perp-2 1 "
        "--alpha-z-2 1 --beta-perp-2 -0.5 --beta-z-2 -0.5 "
        "--gamma-range 0.3 0.8 --tol 1e-4");
    REQUIRE(beta.exit_code == 0);
    j = nlohmann::json::parse(beta.out);
    CHECK(j["gamma_star"].get<double>() ==
          doctest::Approx(0.5436).epsilon(2e-3));
}

TEST_CASE("figure: json format") {
    const auto r = run_cli("figure fig1 --format json --out -");
    REQUIRE(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["id"] == "fig1");
    CHECK(j["columns"].size() == 5);
    CHECK(j["rows"].size() >= 400);
}

TEST_CASE("figure: files are byte-identical across runs") {
    const std::string p1 = "/tmp/cpnano_test_fig4_a.csv";
    const std::string p2 = "/tmp/cpnano_test_fig4_b.csv";
    REQUIRE(run_cli("figure fig4 --out " + p1).exit_code == 0);
    REQUIRE(run_cli("figure fig4 --out " + p2).exit_code == 0);
    const std::string a = slurp(p1);
    CHECK(!a.empty());
    CHECK(a == slurp(p2));
    CHECK(a.rfind("ZT,", 0) == 0);
    std::remove(p1.c_str());
    std::remove(p2.c_str());
}

TEST_CASE("verify: passes at spec tolerance, fails when over-tightened") {
    const auto ok = run_cli("verify --tol 1e-9");
    REQUIRE(ok.exit_code == 0);
    const auto j = nlohmann::json::parse(ok.out);
    CHECK(j["pass"] == true);
    CHECK(j["te_mode_zero"] == true);
    CHECK(j["max_relative_deviation"].get<double>() < 1e-10);

    // single-point grid
    const auto single = run_cli("verify --tol 1e-10 --gammas 1 --ys 1");
    REQUIRE(single.exit_code == 0);
    CHECK(nlohmann::json::parse(single.out)["max_relative_deviation"]
              .get<double>() < 1e-10);

    // negative control: an absurd tolerance must trip the failure exit code
    CHECK(run_cli("verify --tol 1e-18").exit_code == 2);
}

TEST_CASE("table: all rows match and the exit code is zero") {
    const std::string out = "/tmp/cpnano_test_table.json";
    const auto r = run_cli("table --out " + out);
    REQUIRE(r.exit_code == 0);
    const auto rows = nlohmann::json::parse(slurp(out));
    REQUIRE(rows.size() == 7);
    for (const auto& row : rows) {
        CHECK(row["match"] == true);
    }
    std::remove(out.c_str());
}

TEST_CASE("config file mirrors flags, flags take precedence") {
    const std::string cfg = "/tmp/cpnano_test_cfg.ini";
    {
        std::ofstream os(cfg);
        os << "[eval]\nsystem=plate\nalpha-perp=1\nalpha-z=1\nZ=1\ny=1.0\n";
    }
    const auto base = run_cli("--config " + cfg + " eval");
    REQUIRE(base.exit_code == 0);
    CHECK(nlohmann::json::parse(base.out)["y"].get<double>() ==
          doctest::Approx(1.0));
    const auto override_y = run_cli("--config " + cfg + " eval --y 2.0");
    REQUIRE(override_y.exit_code == 0);
    CHECK(nlohmann::json::parse(override_y.out)["y"].get<double>() ==
          doctest::Approx(2.0));
    std::remove(cfg.c_str());
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>

#include "drp/config.hpp"
#include "drp/csv.hpp"
#include "drp/synthesis.hpp"

using namespace drp;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

fs::path temp_dir() {
    const fs::path dir = fs::temp_directory_path() / "drp_test_config_io";
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

}  // namespace

TEST_CASE("format_double round-trips arbitrary doubles") {
    CHECK(csv::format_double(0.9) == "0.90000000000000002");
    CHECK(csv::format_double(0.0) == "0");
    CHECK(csv::format_double(-1.0) == "-1");
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> dist(-1e6, 1e6);
    for (int i = 0; i < 200; ++i) {
        const double x = dist(rng);
        CHECK(std::strtod(csv::format_double(x).c_str(), nullptr) == x);
    }
}

TEST_CASE("atomic_write creates directories, leaves no temp file, overwrites") {
    const fs::path dir = temp_dir();
    const fs::path target = dir / "nested" / "deep" / "data.csv";
    csv::atomic_write(target, "a,b\n1,2\n");
    CHECK(slurp(target) == "a,b\n1,2\n");
    CHECK(!fs::exists(target.string() + ".tmp"));
    csv::atomic_write(target, "a,b\n3,4\n");
    CHECK(slurp(target) == "a,b\n3,4\n");
}

TEST_CASE("coefficients CSV golden, 3-point scheme") {
    const std::string expected =
        "k,gamma\n"
        "-1,-0.63661977236758138\n"
        "0,0\n"
        "1,0.63661977236758138\n";
    CHECK(csv::coefficients_csv(synthesize_drp(1)) == expected);
}

TEST_CASE("column headers of every documented schema") {
    CHECK(csv::history_csv({}).rfind("t,linf\n", 0) == 0);
    CHECK(csv::joint_roots_csv({}).rfind("theta_star,phi_star,f1,f2\n", 0) == 0);
    CHECK(csv::f1f2_csv({}, {}, {}).rfind("theta,f1,f2\n", 0) == 0);
    CHECK(csv::profile_csv({}).rfind("phi,xi_tau,eta_tau,vg_over_c\n", 0) == 0);
    CHECK(csv::caustics_csv({}).rfind("phi_c,k_c,U_c,kind,backend,sigma\n", 0) == 0);
    CHECK(csv::ray_csv({0.0, 2.0}, -2.5) == "t,x\n0,0\n2,-5\n");
    FieldGrid grid;
    grid.x = {1.0, 2.0};
    grid.t = {0.0};
    grid.values = {3.0, 4.0};
    CHECK(csv::field_grid_csv(grid) == "t,1,2\n0,3,4\n");
}

TEST_CASE("config parsing: full round trip") {
    const std::string text =
        "# reference setup\n"
        "m = 2\n"
        "sigma = 0.5\n"
        "h = 0.02\n"
        "backend = general\n"
        "\n"
        "[packet1]\n"
        "alpha = 0.0005\n"
        "x0 = -3.5\n"
        "k = 1.25\n"
        "v = -2.68381\n"
        "\n"
        "[caustics]\n"
        "scan_points = 512\n";
    const ParseResult result = parse_config(text);
    REQUIRE(result.errors.empty());
    REQUIRE(result.config.has_value());
    CHECK(result.config->m == 2);
    CHECK(result.config->sigma == 0.5);
    CHECK(result.config->h == 0.02);
    CHECK(result.config->packet1.alpha == 0.0005);
    CHECK(result.config->packet1.x0 == -3.5);
    CHECK(result.config->packet1.k == 1.25);
    CHECK(result.config->packet1.v == -2.68381);
    CHECK(result.config->caustic_scan.scan_points == 512);
    CHECK(result.config->packet1.length() == doctest::Approx(44.721359549995796).epsilon(1e-15));
}

TEST_CASE("config parsing: all errors collected with line numbers") {
    const std::string text =
        "m = 2\n"
        "sigma = -1\n"          // line 2: constraint violation
        "mystery = 4\n"         // line 3: unknown key
        "h = banana\n"          // line 4: type mismatch
        "[packet1]\n"
        "alpha = -0.25\n";      // line 6: constraint violation
    const ParseResult result = parse_config(text);
    CHECK(!result.config.has_value());
    REQUIRE(result.errors.size() == 4);
    CHECK(result.errors[0].line == 2);
    CHECK(result.errors[1].line == 3);
    CHECK(result.errors[2].line == 4);
    CHECK(result.errors[3].line == 6);
}

TEST_CASE("config parsing: cross-field validation") {
    const ParseResult result = parse_config("m = 2\nbackend = threepoint\n");
    CHECK(!result.config.has_value());
    REQUIRE(result.errors.size() == 1);
    CHECK(result.errors[0].line == 0);
}

#ifdef DRP_CLI_PATH
TEST_CASE("CLI exit codes and synth output") {
    const fs::path dir = temp_dir();
    const std::string cli = DRP_CLI_PATH;
    const fs::path out = dir / "out";

    CHECK(std::system((cli + " synth --m 1 --out " + out.string() + " > /dev/null 2>&1").c_str()) ==
          0);
    const std::string csv = slurp(out / "coefficients.csv");
    CHECK(csv.find("1,0.63661977236758138") != std::string::npos);

    // config errors -> exit 2 (shells report status * 256)
    int rc = std::system((cli + " synth --backend bogus > /dev/null 2>&1").c_str());
    CHECK(WEXITSTATUS(rc) == 2);
    rc = std::system((cli + " > /dev/null 2>&1").c_str());  // missing subcommand
    CHECK(WEXITSTATUS(rc) == 2);

    // unreadable config file -> exit 3
    rc = std::system(
        (cli + " synth --config " + (dir / "absent.cfg").string() + " > /dev/null 2>&1").c_str());
    CHECK(WEXITSTATUS(rc) == 3);

    // parse errors from a config file -> exit 2
    std::ofstream(dir / "bad.cfg") << "sigma = -3\n";
    rc = std::system(
        (cli + " synth --config " + (dir / "bad.cfg").string() + " > /dev/null 2>&1").c_str());
    CHECK(WEXITSTATUS(rc) == 2);
}
#endif

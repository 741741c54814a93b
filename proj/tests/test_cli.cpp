#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "hopflab/cli.hpp"
#include "hopflab/report.hpp"

using namespace hopflab;
namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run_command(args, out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
}

fs::path scratch(const std::string& name) {
    const fs::path dir = fs::temp_directory_path() / ("hopflab-test-" + name);
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

const std::string kSource = HOPFLAB_SOURCE_DIR;

}  // namespace

TEST_CASE("exit codes") {
    CHECK(run({}).code == exit_usage);
    CHECK(run({"frobnicate"}).code == exit_usage);
    CHECK(run({"check", "kminkowski2d"}).code == exit_pass);
    CHECK(run({"check", kSource + "/models/podles.alg"}).code == exit_pass);
    CHECK(run({"check", "ktranslations4d-paper-antipode"}).code == exit_fail);
    CHECK(run({"check", "kminkowski4d-paper-bracket"}).code == exit_fail);
    CHECK(run({"check", kSource + "/tests/fixtures/podles-corrupted.alg"}).code == exit_fail);
    CHECK(run({"check", "no-such-model"}).code == exit_usage);
    CHECK(run({"check", "kminkowski2d", "--bind", "kappa=0"}).code == exit_usage);
    CHECK(run({"check", "kminkowski2d", "--bind", "kappa"}).code == exit_usage);
    CHECK(run({"nf", "x1*", "--model", "kminkowski2d"}).code == exit_usage);
    CHECK(run({"pair", "--compat"}).code == exit_pass);
    CHECK(run({"pair", "--compat", "--model-a", "kminkowski4d-paper-bracket"}).code == exit_fail);
    CHECK(run({"podles", "--mu", "1/2", "--c", "1", "--dim", "8"}).code == exit_pass);
    CHECK(run({"podles", "--mu", "2", "--c", "1"}).code == exit_usage);
    CHECK(run({"podles", "--mu", "1/2", "--c", "0", "--sign", "minus"}).code == exit_usage);
    CHECK(run({"twoparticle"}).code == exit_pass);
    CHECK(run({"igl", "--refine", "3"}).code == exit_pass);
    CHECK(run({"igl", "--grid", "2"}).code == exit_usage);
}

TEST_CASE("normal form output") {
    const Run r = run({"nf", "x1*x0*x0", "--model", "kminkowski2d"});
    CHECK(r.code == 0);
    CHECK(r.out == "x0^2*x1 - 2*i*kappa*x0*x1 - kappa^2*x1\n");
    const Run b = run({"nf", "x1*x0", "--model", "kminkowski2d", "--bind", "kappa=2"});
    CHECK(b.out == "x0*x1 - 2*i*x1\n");
    CHECK(run({"pair", "x1*x1", "P1*P1"}).out == "-2\n");
}

TEST_CASE("check JSON names the failing axiom and its witness") {
    const Run r = run({"check", "ktranslations4d-paper-antipode", "--json"});
    REQUIRE(r.code == exit_fail);
    const json j = json::parse(r.out);
    CHECK(j["all_pass"] == false);
    CHECK(j["confluence"]["pass"] == true);
    bool seen = false;
    for (const auto& a : j["hopf"]["axioms"]) {
        if (a["axiom"] != "antipode-law") {
            CHECK(a["pass"] == true);
            continue;
        }
        seen = true;
        CHECK(a["pass"] == false);
        CHECK(a["witnesses"][0]["element"] == "P1");
        CHECK(a["witnesses"][0]["residual"] == "-P1*E + P1");
    }
    CHECK(seen);
}

TEST_CASE("golden files round trip through export and check") {
    const fs::path dir = scratch("export");
    REQUIRE(run({"models", "--export", dir.string()}).code == 0);
    for (const auto& entry : fs::directory_iterator(kSource + "/models")) {
        INFO(entry.path().filename().string());
        CHECK(slurp(entry.path()) == slurp(dir / entry.path().filename()));
    }
    CHECK(std::distance(fs::directory_iterator(dir), fs::directory_iterator{}) == 9);
    fs::remove_all(dir);
}

TEST_CASE("outputs are byte stable") {
    const fs::path dir = scratch("stable");
    const std::vector<std::vector<std::string>> cmds{
        {"check", "kpoincare2d", "--json"},
        {"models", "--json"},
        {"pair", "--compat", "--json"},
        {"podles", "--mu", "3/4", "--c", "2", "--dim", "64", "--json"},
        {"twoparticle", "--json"},
        {"igl", "--json"},
    };
    for (const auto& c : cmds) {
        INFO(c[0]);
        const Run a = run(c), b = run(c);
        CHECK(a.code == b.code);
        CHECK(a.out == b.out);
        CHECK_FALSE(a.out.empty());
    }
    for (int k = 0; k < 2; ++k) {
        const std::string s = std::to_string(k);
        run({"igl", "--csv", (dir / ("igl" + s + ".csv")).string()});
        run({"podles", "--spectrum", (dir / ("spec" + s + ".csv")).string(), "--mu", "1/4", "--c", "1"});
        run({"check", "podles", "--out", (dir / ("check" + s + ".json")).string()});
    }
    for (const char* f : {"igl", "spec", "check"}) {
        const std::string ext = std::string(f) == "check" ? ".json" : ".csv";
        const std::string a = slurp(dir / (std::string(f) + "0" + ext));
        CHECK_FALSE(a.empty());
        CHECK(a == slurp(dir / (std::string(f) + "1" + ext)));
    }
    fs::remove_all(dir);
}

TEST_CASE("report formatting") {
    CHECK(format15(0.1) == "0.1");
    CHECK(format15(-0.0) == "0");
    CHECK(round15(1.0 / 3) == 0.333333333333333);
    CHECK(csv_table({"a", "b"}, {{1, 0.5}}) == "a,b\n1,0.5\n");
}

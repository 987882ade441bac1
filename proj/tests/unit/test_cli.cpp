#include <doctest.h>

#include <filesystem>
#include <sstream>

#include "cli.hpp"
#include "fixtures.hpp"
#include "snccc/io.hpp"

using namespace snccc;
namespace fs = std::filesystem;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

fs::path tmp(const std::string& name) {
    const fs::path dir(SNCCC_TEST_TMPDIR);
    fs::create_directories(dir);
    return dir / name;
}

}  // namespace

TEST_CASE("gen reproduces the worked example") {
    const auto r = run({"gen", "--seed", "example1", "--P", "2", "--partition", "0,3,0", "--mos", "hadamard"});
    REQUIRE(r.code == cli::kSuccess);
    const auto family = family_from_string(r.out);
    REQUIRE(family.size() == 1);
    CHECK(family.sets[0].codes() == fixtures::example1_outputs());
}

TEST_CASE("gen writes files and recipes") {
    const auto out = tmp("family.json");
    const auto recipe = tmp("recipe.json");
    auto r = run({"gen", "--seed", "example1", "--P", "2", "--partition", "0,3,0", "--perms", "1,2,3,4;2,1,4,3",
                  "--out", out.string(), "--save-recipe", recipe.string()});
    REQUIRE(r.code == cli::kSuccess);
    CHECK(r.out.empty());
    const auto first = read_text_file(out);

    const auto replay = tmp("replay.json");
    r = run({"gen", "--recipe", recipe.string(), "--out", replay.string()});
    REQUIRE(r.code == cli::kSuccess);
    CHECK(read_text_file(replay) == first);
}

TEST_CASE("verify exit codes") {
    const auto good = tmp("good.json");
    REQUIRE(run({"gen", "--seed", "example1", "--P", "2", "--partition", "0,3,0", "--out", good.string()}).code == 0);
    const auto ok = run({"verify", good.string()});
    CHECK(ok.code == cli::kSuccess);
    CHECK(ok.out.find("verdict: PASS") != std::string::npos);
    CHECK(ok.out.find("peak 24 epsilon 12") != std::string::npos);

    auto codes = fixtures::example1_outputs();
    codes[2] = codes[2].with_entry(1, 7, -codes[2].at(1, 7));
    const auto bad = tmp("bad.json");
    save_codeset(CodeSet(codes), bad);
    const auto fail = run({"verify", bad.string(), "--mode", "aperiodic"});
    CHECK(fail.code == cli::kVerificationFailed);
    CHECK(fail.out.find("verdict: FAIL") != std::string::npos);

    const auto report = tmp("report.json");
    CHECK(run({"verify", good.string(), "--report", report.string()}).code == 0);
    CHECK(read_text_file(report).find("\"verdict\": true") != std::string::npos);

    CHECK(run({"verify", good.string(), "--zccs", "9"}).code == cli::kSuccess);
    CHECK(run({"verify", tmp("missing.json").string()}).code == cli::kUsageError);
}

TEST_CASE("infeasible partitions exit with 3") {
    const auto r = run({"gen", "--seed", "hadamard:4", "--P", "3", "--n", "2", "--strategy", "distinct"});
    CHECK(r.code == cli::kInfeasible);
    CHECK(r.err.find("infeasible") != std::string::npos);
    CHECK(run({"search-perms", "--M", "3", "--P", "3", "--require-14"}).code == cli::kInfeasible);
}

TEST_CASE("search-perms prints a verified family") {
    const auto r = run({"search-perms", "--M", "4", "--P", "4", "--require-14"});
    REQUIRE(r.code == cli::kSuccess);
    CHECK(r.out == "1,2,3,4\n2,4,1,3\n3,1,4,2\n4,3,2,1\ncolumn_disjoint: true\noffset_unique: true\n");
}

TEST_CASE("profile and measure") {
    const auto fam = tmp("fam2.json");
    REQUIRE(run({"gen", "--seed", "example1", "--P", "2", "--partition", "0,3,0", "--perms", "1,2,3,4;2,1,4,3",
                 "--out", fam.string()})
                .code == 0);

    auto p = run({"profile", fam.string(), "--set", "0", "--code", "0"});
    REQUIRE(p.code == 0);
    CHECK(p.out.rfind("tau,re,im,abs\n", 0) == 0);
    CHECK(p.out.find("\n0,24,0,24\n") != std::string::npos);
    CHECK(std::count(p.out.begin(), p.out.end(), '\n') == 18);

    p = run({"profile", fam.string(), "--set", "0", "--code", "0", "--with-set", "1", "--mode", "periodic"});
    REQUIRE(p.code == 0);
    CHECK(std::count(p.out.begin(), p.out.end(), '\n') == 10);
    CHECK(run({"profile", fam.string(), "--set", "5"}).code == cli::kUsageError);

    const auto m = run({"measure", fam.string(), "--mode", "aperiodic"});
    CHECK(m.code == 0);
    CHECK(m.out.find("aperiodic: Z 6 (predicted 6)") != std::string::npos);
}

TEST_CASE("usage errors") {
    CHECK(run({}).code == cli::kUsageError);
    CHECK(run({"frobnicate"}).code == cli::kUsageError);
    CHECK(run({"gen", "--P", "x"}).code == cli::kUsageError);
    CHECK(run({"gen", "--seed", "example1", "--P", "2", "--strategy", "sideways"}).code == cli::kUsageError);
    CHECK(run({"gen", "--seed", "example1", "--P", "2", "--perms", "1,2,3,4;1,2,3,4"}).code == cli::kUsageError);
    CHECK(run({"search-perms", "--M", "4"}).code == cli::kUsageError);
}

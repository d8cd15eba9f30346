#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
// End-to-end tests that drive the installed binary the way a user would:
// through a shell, checking exit codes and exact stdout.  CB_TOOL_PATH is
// injected by the build.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct RunResult {
    int rc = -1;
    std::string out;  // stdout and stderr, interleaved
};

RunResult run(const std::string& args) {
    std::string cmd = std::string(CB_TOOL_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    char buf[4096];
    while (std::size_t got = std::fread(buf, 1, sizeof buf, pipe)) r.out.append(buf, got);
    int status = pclose(pipe);
    r.rc = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

RunResult run_env(const std::string& env, const std::string& args) {
    std::string cmd = env + " " + std::string(CB_TOOL_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    char buf[4096];
    while (std::size_t got = std::fread(buf, 1, sizeof buf, pipe)) r.out.append(buf, got);
    int status = pclose(pipe);
    r.rc = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

// Scratch directory shared by the cases below; recreated once per process.
const fs::path& scratch() {
    static fs::path dir = [] {
        fs::path d = fs::temp_directory_path() / "cb_cli_scratch";
        fs::remove_all(d);
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

void write_file(const fs::path& p, const std::string& text) {
    std::ofstream out(p);
    REQUIRE(out.good());
    out << text;
}

const char* kBad3x2 = "2 1 3 2\n1 0 0\n0 1 1\n";
const char* kFanoPts = "2 1 3 7\n0 0 1\n0 1 0\n0 1 1\n1 0 0\n1 0 1\n1 1 0\n1 1 1\n";
// minimal [13, 5, 5] over GF(2), verified by the library's own brute force;
// serves as the external ingredient for reference table 1, row 5
const char* kExtern1355 =
    "2 1 13 5\n"
    "0 0 0 0 0 1 1 1 1 1 1 1 1\n"
    "0 0 1 1 1 0 0 0 0 0 1 1 1\n"
    "0 0 0 1 1 0 0 1 1 1 0 1 1\n"
    "0 1 0 0 0 0 1 0 0 1 1 0 1\n"
    "1 1 0 0 1 1 0 0 1 0 1 0 0\n";

}  // namespace

TEST_CASE("version, help and usage errors") {
    auto ver = run("--version");
    CHECK(ver.rc == 0);
    CHECK(ver.out == "concat-blocking 1.0.0\n");

    auto help = run("--help");
    CHECK(help.rc == 0);
    CHECK(contains(help.out, "Subcommands:"));
    CHECK(contains(help.out, "reproduce"));

    CHECK(run("").rc == 64);
    CHECK(run("frobnicate").rc == 64);
    CHECK(run("check minimal /no/such/file.gmat").rc == 64);
}

TEST_CASE("construct simplex prints the canonical matrix") {
    auto r = run("construct simplex --field 2 -k 2");
    CHECK(r.rc == 0);
    CHECK(r.out == "2 1 3 2\n0 1 1\n1 0 1\n");
}

TEST_CASE("construct, concatenate and inspect, end to end") {
    auto dir = scratch();
    CHECK(run("construct grs --field 4 -n 3 -k 2 -o " + (dir / "outer.gmat").string()).rc == 0);
    CHECK(run("construct simplex --field 2 -k 2 -o " + (dir / "inner.gmat").string()).rc == 0);
    auto cc = run("concat --outer " + (dir / "outer.gmat").string() + " --inner " +
                  (dir / "inner.gmat").string() + " -o " + (dir / "cc.gmat").string());
    CHECK(cc.rc == 0);

    auto info = run("info " + (dir / "cc.gmat").string());
    CHECK(info.rc == 0);
    CHECK(contains(info.out, "n = 9"));
    CHECK(contains(info.out, "k = 4"));
    CHECK(contains(info.out, "d = 4"));
    CHECK(contains(info.out, "projective = true"));
    CHECK(contains(info.out, "\"4\":9"));  // weight distribution A_4 = 9

    auto prof = run("profile " + (dir / "cc.gmat").string());
    CHECK(prof.rc == 0);
    CHECK(contains(prof.out, "min_hits = 3"));
    CHECK(contains(prof.out, "max_hits = 5"));
    CHECK(contains(prof.out, "certified_strong_blocking = true"));

    auto check = run("check minimal " + (dir / "cc.gmat").string());
    CHECK(check.rc == 0);
    CHECK(contains(check.out, "verdict: minimal"));
    CHECK(contains(check.out, "15 projective classes scanned"));
}

TEST_CASE("certification through the concat subcommand") {
    auto dir = scratch();
    CHECK(run("construct grs --field 4 -n 5 -k 3 -o " + (dir / "outer53.gmat").string()).rc == 0);
    CHECK(run("construct simplex --field 2 -k 2 -o " + (dir / "s22.gmat").string()).rc == 0);

    auto cert = run("concat --outer " + (dir / "outer53.gmat").string() + " --inner " +
                    (dir / "s22.gmat").string() + " --certify");
    CHECK(cert.rc == 0);
    CHECK(contains(cert.out, "verdict: certified-minimal"));
    CHECK(contains(cert.out, "method: outer-weight-spread"));
    CHECK(contains(cert.out, "inner is a simplex code; D=3 W=5 base_q=2"));

    auto mds = run("concat --outer " + (dir / "outer53.gmat").string() + " --inner " +
                   (dir / "s22.gmat").string() + " --certify --mds");
    CHECK(mds.rc == 0);
    CHECK(contains(mds.out, "outer promised MDS"));

    auto js = run("concat --outer " + (dir / "outer53.gmat").string() + " --inner " +
                  (dir / "s22.gmat").string() + " --certify --json");
    CHECK(js.rc == 0);
    auto doc = json::parse(js.out);
    CHECK(doc["certificate"]["verdict"] == "certified-minimal");
    CHECK(doc["n"] == 15);
    CHECK(doc["k"] == 6);
}

TEST_CASE("verdicts drive the exit code") {
    auto dir = scratch();
    write_file(dir / "bad.gmat", kBad3x2);
    auto bad = run("check minimal " + (dir / "bad.gmat").string());
    CHECK(bad.rc == 1);
    CHECK(contains(bad.out, "verdict: not-minimal"));
    CHECK(contains(bad.out, "container message: 3"));
    CHECK(contains(bad.out, "contained message: 1"));

    auto ab = run("check ab " + (dir / "bad.gmat").string());
    CHECK(ab.rc == 2);
    CHECK(contains(ab.out, "verdict: inconclusive"));
    CHECK(contains(ab.out, "d=1 w=3 q=2"));

    // an oversized instance maps the guard error to exit code 2
    std::string big = "2 1 17 17\n";
    for (int i = 0; i < 17; ++i) {
        for (int j = 0; j < 17; ++j) big += (i == j ? "1" : "0") + std::string(j < 16 ? " " : "");
        big += "\n";
    }
    write_file(dir / "big.gmat", big);
    auto guard = run("check minimal " + (dir / "big.gmat").string());
    CHECK(guard.rc == 2);
    CHECK(contains(guard.out, "TooLarge"));
}

TEST_CASE("point-set checks") {
    auto dir = scratch();
    write_file(dir / "bad.gmat", kBad3x2);
    write_file(dir / "fano.pts", kFanoPts);

    auto sbs = run("check sbs " + (dir / "fano.pts").string());
    CHECK(sbs.rc == 0);
    CHECK(contains(sbs.out, "strong blocking: yes"));

    auto thin = run("check sbs " + (dir / "bad.gmat").string());
    CHECK(thin.rc == 1);
    CHECK(contains(thin.out, "strong blocking: no"));
    CHECK(contains(thin.out, "failing hyperplane normal: 1 1"));

    auto whole = run("check saturating " + (dir / "fano.pts").string());
    CHECK(whole.rc == 0);
    CHECK(contains(whole.out, "saturation radius = 0"));

    auto up = run("check saturating " + (dir / "fano.pts").string() + " --ambient 4");
    CHECK(up.rc == 0);
    CHECK(contains(up.out, "saturation radius = 1"));

    auto js = run("check saturating " + (dir / "fano.pts").string() + " --ambient 2^2 --json");
    CHECK(js.rc == 0);
    auto doc = json::parse(js.out);
    CHECK(doc["saturation_radius"] == 1);
    CHECK(doc["q"] == 4);
    CHECK(doc["points"] == 7);
}

TEST_CASE("search subcommand reports the shortest length") {
    auto text = run("construct search -q 2 -k 2");
    CHECK(text.rc == 0);
    CHECK(text.out == "2 1 3 2\n0 1 1\n1 0 1\n");

    auto js = run("construct search -q 2 -k 3 --json");
    CHECK(js.rc == 0);
    auto doc = json::parse(js.out);
    CHECK(doc["n_min"] == 6);
    CHECK(doc["k"] == 3);

    CHECK(run("construct search -q 5 -k 3").rc == 64);  // guard without --allow-large
}

TEST_CASE("closed-form bounds subcommands") {
    auto tower = run("bounds tower --q0 2 --h 3 --level 2");
    CHECK(tower.rc == 0);
    CHECK(tower.out ==
          "N = 447\nlambda = 49\nn_n = 447\nm_n = 223\nk_n = 175\n"
          "concat_len = 28161\nconcat_dim = 1050\nconcat_dist_lb = 7152\n"
          "example_len = 3129\nexample_dim = 525\nexample_dist_lb = 896\n");

    auto sbs = run("bounds sbs -k 6 -q 2");
    CHECK(sbs.rc == 0);
    CHECK(contains(sbs.out, "lower = 15"));
    CHECK(contains(sbs.out, "upper = 26"));

    auto eps = run("bounds eps --q0 2 --h 3 --dtilde 64");
    CHECK(eps.rc == 0);
    CHECK(eps.out == "threshold = 0.8493303571428572\n");

    auto inadmissible = run("bounds eps --q0 2 --h 3 --dtilde 64 --eps 0.9");
    CHECK(inadmissible.rc == 1);
    CHECK(contains(inadmissible.out, "admissible = false"));

    auto admissible = run("bounds eps --q0 2 --h 3 --dtilde 64 --eps 0.5 --json");
    CHECK(admissible.rc == 0);
    CHECK(json::parse(admissible.out)["admissible"] == true);
}

TEST_CASE("reference table 1 reproduces") {
    auto r = run("reproduce --table 1");
    CHECK(r.rc == 0);
    CHECK(contains(r.out, "rows: 15 passed, 0 failed, 1 skipped"));
    CHECK(contains(r.out, "T1 R05 SKIPPED"));

    auto js = run("reproduce --table 1 --json");
    CHECK(js.rc == 0);
    auto doc = json::parse(js.out);
    CHECK(doc["rows"].size() == 16);
    CHECK(doc["passed"] == 15);
    CHECK(doc["skipped"] == 1);
    CHECK(doc["rows"][0]["status"] == "PASS");
    CHECK(doc["rows"][0]["built"]["d"] == 4);
}

TEST_CASE("external matrices complete the remaining rows") {
    auto codes = scratch() / "codes";
    std::filesystem::create_directories(codes);
    write_file(codes / "13_5_5_q2.gmat", kExtern1355);

    auto row5 = run("reproduce --table 1 --row 5 --codes " + codes.string());
    CHECK(row5.rc == 0);
    CHECK(contains(row5.out, "T1 R05 PASS"));
    CHECK(contains(row5.out, "[39,10,10]q2"));

    // a wrong external matrix must fail loudly, not silently skip
    write_file(codes / "9_4_5_q4.gmat",
               "2 2 9 4\n1 0 0 0 0 0 0 0 0\n0 1 0 0 0 0 0 0 0\n"
               "0 0 1 0 0 0 0 0 0\n0 0 0 1 0 0 0 0 0\n");
    auto wrong = run("reproduce --table 2 --row 1 --codes " + codes.string());
    CHECK(wrong.rc == 1);
    CHECK(contains(wrong.out, "T2 R01 FAIL"));
    CHECK(contains(wrong.out, "minimum distance 1"));

    // without --codes, table 2 skips everything and still exits cleanly
    auto t2 = run("reproduce --table 2");
    CHECK(t2.rc == 0);
    CHECK(contains(t2.out, "rows: 0 passed, 0 failed, 6 skipped"));
}

TEST_CASE("worker count does not change the report") {
    std::string args = "reproduce --table 1 --row 2";
    auto one = run_env("CONCAT_BLOCKING_THREADS=1", args);
    auto four = run_env("CONCAT_BLOCKING_THREADS=4", args);
    CHECK(one.rc == 0);
    CHECK(four.rc == 0);
    CHECK(one.out == four.out);
}

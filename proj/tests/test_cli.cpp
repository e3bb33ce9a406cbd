#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>

#include "vincyc/verify.hpp"

namespace {

struct RunResult {
    int code;
    std::string out;  // stdout and stderr interleaved
};

RunResult run(const std::string& args) {
    std::string cmd = std::string(VINCYC_BIN) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
    int status = pclose(pipe);
    int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return {code, out};
}

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p);
    return std::string(std::istreambuf_iterator<char>(in),
                       std::istreambuf_iterator<char>());
}

}  // namespace

TEST_CASE("bijection commands") {
    CHECK(run("theta 964572813").out == "629345781\n");
    CHECK(run("theta 2341").out == "4123\n");
    CHECK(run("theta-inv 321").out == "312\n");
    CHECK(run("theta-inv 629345781").out == "964572813\n");
    CHECK(run("theta 2341").code == 0);
}

TEST_CASE("membership checks") {
    RunResult r = run("check 2341");
    CHECK(r.code == 0);
    CHECK(contains(r.out, "member: yes"));

    CHECK(run("check 321 --method direct").out == "no\n");
    CHECK(run("check 2341 --method depth").out == "yes\n");
    CHECK(run("check 2341 --method arrow").out == "yes\n");
    CHECK(run("check 321 --method direct").code == 0);

    RunResult ex = run("check 2341 --explain");
    CHECK(ex.code == 0);
    nlohmann::json j = nlohmann::json::parse(ex.out);
    CHECK(j["member"] == true);
    CHECK(j["direct"] == true);
    CHECK(j["eq1"] == true);
    CHECK(j["perm"] == "2341");

    nlohmann::json bad = nlohmann::json::parse(run("check 3421 --explain").out);
    CHECK(bad["member"] == false);
    CHECK(bad["witnesses"].size() >= 2);
}

TEST_CASE("pattern matching") {
    CHECK(run("match '[23]1' 639245781 --count").out == "6\n");
    CHECK(run("match '[21]' 321 --count").out == "2\n");

    RunResult hit = run("match '[21]3$' 3214");
    CHECK(hit.code == 0);
    CHECK(contains(hit.out, "match at positions"));
    CHECK(contains(hit.out, "values"));

    RunResult miss = run("match '[21]' 123");
    CHECK(miss.code == 0);
    CHECK(miss.out == "no match\n");
}

TEST_CASE("enumeration") {
    CHECK(run("enumerate c321 3").out == "231\n312\n");
    CHECK(run("enumerate c321 3 --emit theta").out == "312\n321\n");
    CHECK(run("enumerate c321 3 --emit both").out == "231 312\n312 321\n");
    CHECK(run("enumerate A 3").out == "123\n213\n312\n321\n");
}

TEST_CASE("counting with a cache file") {
    CHECK(run("count c321 --max-n 5").out ==
          "c_1 = 1\nc_2 = 1\nc_3 = 2\nc_4 = 4\nc_5 = 10\n");
    CHECK(run("count simples --max-n 6 --threads 2").out ==
          "s_2 = 2\ns_3 = 0\ns_4 = 2\ns_5 = 0\ns_6 = 10\n");

    auto cache = std::filesystem::temp_directory_path() / "vincyc_cli_cache.json";
    std::filesystem::remove(cache);
    CHECK(run("count c321 --max-n 5 --cache " + cache.string()).code == 0);
    CHECK(std::filesystem::exists(cache));
    // Re-counting into the same cache agrees with what is already there.
    CHECK(run("count c321 --max-n 6 --cache " + cache.string()).code == 0);

    auto out = std::filesystem::temp_directory_path() / "vincyc_cli_export.txt";
    CHECK(run("export --seq c --format bfile --out " + out.string() +
              " --cache " + cache.string())
              .code == 0);
    CHECK(slurp(out) == "1 1\n2 1\n3 2\n4 4\n5 10\n6 24\n");
    std::filesystem::remove(cache);
    std::filesystem::remove(out);
}

TEST_CASE("verification through the binary") {
    RunResult r = run("verify stat-identities --max-n 4");
    CHECK(r.code == 0);
    CHECK(contains(r.out, "suite stat-identities: PASS"));

    RunResult e = run("verify endpoint-lemma --max-n 5");
    CHECK(e.code == 0);
    CHECK(contains(e.out, "PASS"));
}

TEST_CASE("suite registry") {
    CHECK(vincyc::suite_names().size() == 14);
    CHECK(vincyc::suite_names().front() == "theorem-equivalence");
    CHECK(vincyc::suite_default_max_n("tail-growth-floor") == 23);
    CHECK_THROWS_AS(vincyc::suite_default_max_n("nope"), std::invalid_argument);
    // A short in-process run of the cheapest suite.
    vincyc::SuiteResult sr = vincyc::run_suite("endpoint-lemma", 5);
    CHECK(sr.ok);
    CHECK_FALSE(sr.detail.empty());
}

TEST_CASE("growth commands") {
    RunResult lb = run("growth lower-bound");
    CHECK(lb.code == 0);
    CHECK(contains(lb.out, "3.141011764"));

    RunResult rep = run("growth report");
    CHECK(rep.code == 0);
    CHECK(contains(rep.out, "c_n/c_(n-1)"));
    CHECK(contains(rep.out, "growth rate lower estimate"));
    CHECK(contains(rep.out, "s_23/s_22 = 3.440368504"));
    CHECK(contains(rep.out, "series root, head only: 3.126257714"));
    CHECK(contains(rep.out, "series root, with geometric tail: 3.141011764"));

    RunResult ui = run("growth upper-identity");
    CHECK(ui.code == 0);
    CHECK(contains(ui.out, "[outside asserted range]"));
    CHECK(contains(ui.out, "(agree)"));
    CHECK_FALSE(contains(ui.out, "counterexample"));
}

TEST_CASE("export without a cache synthesizes the tables") {
    auto out = std::filesystem::temp_directory_path() / "vincyc_cli_bfile.txt";
    CHECK(run("export --seq c --format bfile --out " + out.string() +
              " --max-n 8")
              .code == 0);
    CHECK(slurp(out) == "1 1\n2 1\n3 2\n4 4\n5 10\n6 24\n7 66\n8 178\n");

    CHECK(run("export --seq s --format csv --out " + out.string() +
              " --max-n 3")
              .code == 0);
    CHECK(slurp(out) == "n,value,provenance\n2,2,paper-table\n3,0,paper-table\n");

    CHECK(run("export --seq a --format json --out " + out.string() +
              " --max-n 2")
              .code == 0);
    nlohmann::json j = nlohmann::json::parse(slurp(out));
    CHECK(j["name"] == "a");
    CHECK(j["values"]["1"] == "1");
    CHECK(j["values"]["2"] == "2");
    std::filesystem::remove(out);
}

TEST_CASE("failures exit with the usage code") {
    CHECK(run("frobnicate").code == 2);
    CHECK(run("theta").code == 2);              // missing argument
    CHECK(run("theta not-a-perm").code == 2);   // malformed permutation
    CHECK(run("theta 122").code == 2);          // repeated entry
    CHECK(run("check 2341 --method bogus").code == 2);
    CHECK(run("enumerate c321 0").code == 2);
    CHECK(run("verify no-such-suite").code == 2);
    CHECK(run("match '[32' 321").code == 2);    // malformed pattern
    CHECK(run("export --seq c --format bfile --out /tmp/x.bfile "
              "--cache /tmp/vincyc-definitely-missing.json")
              .code == 2);
    RunResult r = run("export --seq c --format bfile --out /no-such-dir/out.txt");
    CHECK(r.code == 2);
    CHECK(contains(r.out, "error:"));
}

#include "doctest.h"

#include "jord/algebra_io.hpp"
#include "jord/catalog.hpp"

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

using namespace jord;

namespace {

struct RunResult {
    int exit_code;
    std::string output;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(JORDCLI_PATH) + " " + args + " 2>&1";
    std::array<char, 4096> buf;
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    while (fgets(buf.data(), buf.size(), pipe)) out += buf.data();
    int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

std::string write_temp(const std::string& name, const std::string& content) {
    std::string path = std::string("cli_tmp_") + name;
    std::ofstream f(path);
    f << content;
    return path;
}

} // namespace

TEST_CASE("check: pass, fail with witness quadruple, parse error") {
    auto ok = run_cli("check T02");
    CHECK(ok.exit_code == 0);
    CHECK(ok.output.find("PASS") != std::string::npos);

    std::string bad = write_temp("nonjordan.json", R"({
        "dim": 2, "basis": ["e1","e2"],
        "products": {"e1*e1": "e2", "e1*e2": "e1"}
    })");
    auto fail = run_cli("check " + bad);
    CHECK(fail.exit_code == 1);
    CHECK(fail.output.find("jordan-identity") != std::string::npos);
    CHECK(fail.output.find("quadruple") != std::string::npos);

    std::string malformed = write_temp("malformed.json", "{ not json");
    CHECK(run_cli("check " + malformed).exit_code == 2);
    CHECK(run_cli("check NOPE99").exit_code == 2);
}

TEST_CASE("invariants: golden cross-check and values") {
    auto r = run_cli("invariants T08");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("dim Der = 4") != std::string::npos);
    CHECK(r.output.find("dim Rad = 2") != std::string::npos);

    auto rj = run_cli("invariants J6");
    CHECK(rj.exit_code == 0);
    CHECK(rj.output.find("dim Der = 30") != std::string::npos);
    CHECK(rj.output.find("dim H^2 = 0") != std::string::npos);

    auto rz = run_cli("invariants C3");
    CHECK(rz.exit_code == 0);
    CHECK(rz.output.find("dim Der = 9") != std::string::npos);
    CHECK(rz.output.find("dim Rad = 3") != std::string::npos);
}

TEST_CASE("unicode labels are accepted") {
    auto r = run_cli("check \xF0\x9D\x95\x8B\xE2\x82\x80\xE2\x82\x82"); // blackboard T02
    CHECK(r.exit_code == 0);
}

TEST_CASE("verify-deg: shipped edge, file, failing file") {
    CHECK(run_cli("verify-deg T03 T09").exit_code == 0);
    CHECK(run_cli("verify-deg B4 B1").exit_code == 0);

    std::string wfile = write_temp("witness.json", R"({
        "source": "T03", "target": "T09",
        "basis": [["1","0","0"],["0","0","1"],["0","t","0"]]
    })");
    CHECK(run_cli("verify-deg " + wfile).exit_code == 0);

    std::string bad = write_temp("badwitness.json", R"({
        "source": "T03", "target": "T15",
        "basis": [["0","1","0"],["t","0","1"],["0","0","-t^2"]]
    })");
    auto r = run_cli("verify-deg " + bad);
    CHECK(r.exit_code == 1);
    CHECK(r.output.find("pole") != std::string::npos);
}

TEST_CASE("verify-nondeg: shipped pair and file") {
    CHECK(run_cli("verify-nondeg T06 T07").exit_code == 0);
    CHECK(run_cli("verify-nondeg T04 T17").exit_code == 0);
    std::string cfile = write_temp("cert.json",
                                   R"({"kind": "generic-degree", "pair": ["T13", "T17"]})");
    CHECK(run_cli("verify-nondeg " + cfile).exit_code == 0);
}

TEST_CASE("graph and catalog output") {
    auto g2 = run_cli("graph dim2");
    CHECK(g2.exit_code == 0);
    CHECK(g2.output.find("B4 -> B1") != std::string::npos);
    CHECK(g2.output.find("rigid: B2 B4") != std::string::npos);

    auto dot = run_cli("graph dim2 --dot");
    CHECK(dot.output.find("digraph") != std::string::npos);

    auto list = run_cli("catalog list");
    CHECK(list.exit_code == 0);
    CHECK(list.output.find("T12") != std::string::npos);
    CHECK(list.output.find("J<k>") != std::string::npos);
}

TEST_CASE("verify-all: scopes pass, json payload matches text verdicts") {
    auto d2 = run_cli("verify-all dim2");
    CHECK(d2.exit_code == 0);

    auto m = run_cli("verify-all marginal --kmin 2 --kmax 4");
    CHECK(m.exit_code == 0);
    CHECK(m.output.find("dim Der(J_4) = 12") != std::string::npos);

    auto j = run_cli("--format json verify-all dim2");
    CHECK(j.exit_code == 0);
    CHECK(j.output.find("\"pass\": true") != std::string::npos);

    // identical runs produce identical payloads
    auto j2 = run_cli("--format json verify-all dim2");
    CHECK(j.output == j2.output);

    // parallel verification does not change the payload
    auto jp = run_cli("--format json --parallel 4 verify-all dim2");
    CHECK(jp.output == j.output);
}

TEST_CASE("verify-all --published reports the failing printed claims") {
    auto r = run_cli("verify-all dim3 --published");
    CHECK(r.exit_code == 1);
    CHECK(r.output.find("FAIL  published basis T04 -> T17") != std::string::npos);
    CHECK(r.output.find("FAIL  published basis T05 -> T17") != std::string::npos);
    CHECK(r.output.find("PASS  published basis T03 -> T09") != std::string::npos);
    CHECK(r.output.find("PASS  published set R1 contains T10") != std::string::npos);
    CHECK(r.output.find("FAIL  published set R1 is triangularly stable") != std::string::npos);
    CHECK(r.output.find("PASS  published set R1 excludes the orbit of T17") != std::string::npos);
    CHECK(r.output.find("PASS  published component closure(T01)") != std::string::npos);
    CHECK(r.output.find("FAIL  published component closure(T02)") != std::string::npos);
}

TEST_CASE("budget exhaustion surfaces as exit 3") {
    auto r = run_cli("--budget 1 invariants T02");
    CHECK(r.exit_code == 3);
}

TEST_CASE("data files round trip against the embedded copies") {
    auto dump = run_cli("data dump cli_tmp_data");
    CHECK(dump.exit_code == 0);
    auto verify = run_cli("data verify cli_tmp_data");
    CHECK(verify.exit_code == 0);
    // the shipped counterexample is rejected by `check`
    auto bad = run_cli("check cli_tmp_data/counterexample.json");
    CHECK(bad.exit_code == 1);
    // tampering is detected
    {
        std::ofstream f("cli_tmp_data/witnesses_dim2.json", std::ios::app);
        f << "\n";
    }
    auto reverify = run_cli("data verify cli_tmp_data");
    CHECK(reverify.exit_code == 1);
    CHECK(reverify.output.find("FAIL  witnesses_dim2.json") != std::string::npos);
}

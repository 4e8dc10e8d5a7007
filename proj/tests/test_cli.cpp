#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <array>
#include <cstdio>
#include <fstream>
#include <string>

#include "doctest.h"
#include "json.hpp"
#include "signrank/pattern.hpp"

using namespace signrank;

namespace {

struct RunResult {
    int status;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(SIGNRANK_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
    int raw = pclose(pipe);
    return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

std::string pattern_path(const std::string& name) {
    return std::string(SIGNRANK_PATTERNS_DIR) + "/" + name;
}

std::string write_temp(const std::string& name, const std::string& text) {
    std::string path = "/tmp/" + name;
    std::ofstream out(path);
    out << text;
    return path;
}

}  // namespace

TEST_SUITE_BEGIN("command line");

TEST_CASE("mr reports exact values") {
    auto r = run_cli("mr " + pattern_path("example_a.sp"));
    CHECK(r.status == 0);
    CHECK(r.out.find("mr = 2 (exact)") != std::string::npos);
    auto rb = run_cli("mr " + pattern_path("example_b.sp"));
    CHECK(rb.status == 0);
    CHECK(rb.out.find("mr = 3 (exact)") != std::string::npos);
}

TEST_CASE("mr input failures exit 1") {
    CHECK(run_cli("mr /tmp/does_not_exist.sp").status == 1);
    std::string bad = write_temp("bad_pattern.sp", "+ q\n");
    CHECK(run_cli("mr " + bad).status == 1);
    CHECK(run_cli("mr --grid 1,0 " + pattern_path("example_a.sp")).status == 1);
    CHECK(run_cli("bogus_subcommand").status == 1);
}

TEST_CASE("mr without a witness search stays open") {
    // all cells fixed to +-1 by the grid, the lone member has full rank, and
    // zero restarts leave nothing to tighten with
    std::string path = write_temp("open_interval.sp", "+ + + +\n+ - + +\n+ + - +\n+ + + -\n");
    auto r = run_cli("mr --restarts 0 --grid 1,-1 " + path);
    CHECK(r.status == 2);
    CHECK(r.out.find("(open)") != std::string::npos);
}

TEST_CASE("decompose lists separations and the term table") {
    auto r = run_cli("decompose " + pattern_path("example_b.sp"));
    CHECK(r.status == 0);
    CHECK(r.out.find("separation") != std::string::npos);
    CHECK(r.out.find("achieving") != std::string::npos);
    auto first = run_cli("decompose --first " + pattern_path("example_b.sp"));
    CHECK(first.status == 0);
    CHECK(first.out.find("cut (0, 1)") != std::string::npos);
    auto traced = run_cli("decompose --first --trace " + pattern_path("example_c.sp"));
    CHECK(traced.status == 0);
    CHECK(traced.out.find("formula") != std::string::npos);

    std::string dense = write_temp("dense.sp", "+ + +\n+ + +\n+ + +\n");
    auto none = run_cli("decompose " + dense);
    CHECK(none.status == 3);
    CHECK(none.out.find("no 1-separation") != std::string::npos);
    std::string tiny = write_temp("tiny.sp", "+ +\n+ +\n");
    CHECK(run_cli("decompose " + tiny).status == 3);
}

TEST_CASE("examples match the reference values") {
    auto r = run_cli("examples");
    CHECK(r.status == 0);
    CHECK(r.out.find("5/5 matched") != std::string::npos);
    auto bad = run_cli("examples --tamper");
    CHECK(bad.status == 4);
    CHECK(bad.out.find("MISMATCH") != std::string::npos);
    CHECK(bad.out.find("4/5 matched") != std::string::npos);
}

TEST_CASE("verify runs the requested suites") {
    auto small = run_cli("verify --shape 2x2");
    CHECK(small.status == 0);
    CHECK(small.out.find("0 cases") != std::string::npos);
    auto lemmas = run_cli("verify --lemmas --trials 25 --seed 7");
    CHECK(lemmas.status == 0);
    CHECK(lemmas.out.find("verification clean") != std::string::npos);
    CHECK(run_cli("verify --shape nonsense").status == 1);
}

TEST_CASE("structured output is stable and well formed") {
    auto a = run_cli("examples --json -");
    auto b = run_cli("examples --json -");
    CHECK(a.status == 0);
    CHECK(a.out == b.out);
    std::size_t brace = a.out.find('{');
    REQUIRE(brace != std::string::npos);
    auto doc = nlohmann::json::parse(a.out.substr(brace));
    CHECK(doc["schema"] == "signrank/1");
    CHECK(doc["command"] == "examples");
    CHECK(doc["config"]["seed"] == 0);
    CHECK(doc["result"]["groups_matched"] == 5);

    auto v1 = run_cli("verify --lemmas --trials 10 --json -");
    auto v2 = run_cli("verify --lemmas --trials 10 --json -");
    CHECK(v1.out == v2.out);
    auto changed = run_cli("verify --lemmas --trials 10 --seed 3 --json -");
    CHECK(changed.status == 0);

    auto mr_json = run_cli("mr --json - " + pattern_path("example_d.sp"));
    auto doc2 = nlohmann::json::parse(mr_json.out.substr(mr_json.out.find('{')));
    CHECK(doc2["result"]["lb"] == 2);
    CHECK(doc2["result"]["ub"] == 2);
    CHECK(doc2["result"]["exact"] == true);
}

TEST_CASE("serialized pattern round trips through mr") {
    std::ifstream in(pattern_path("example_c.sp"));
    std::stringstream buf;
    buf << in.rdbuf();
    GenSignPattern p = parse_pattern(buf.str());
    std::string echoed = write_temp("roundtrip.sp", serialize_pattern(p));
    auto direct = run_cli("mr --json - " + pattern_path("example_c.sp"));
    auto redone = run_cli("mr --json - " + echoed);
    CHECK(direct.status == 0);
    CHECK(direct.out == redone.out);
}

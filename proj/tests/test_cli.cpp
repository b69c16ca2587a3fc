#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <lenrep/io.hpp>
#include <lenrep/knitting.hpp>

#include "test_helpers.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

using namespace lenrep;

namespace {

const std::string kFixtures = LENREP_FIXTURES_DIR;
const std::string kBin = LENREP_CLI_BIN;

struct RunResult {
    int exit_code;
    std::string output;
};

RunResult run_cli(const std::string& args, int tag) {
    std::string out_path = "/tmp/lenrep_test_" + std::to_string(tag) + ".out";
    std::string cmd = kBin + " " + args + " > " + out_path + " 2>/dev/null";
    int status = std::system(cmd.c_str());
    std::ifstream in(out_path);
    std::stringstream ss;
    ss << in.rdbuf();
    std::remove(out_path.c_str());
    return RunResult{WEXITSTATUS(status), ss.str()};
}

}  // namespace

TEST_CASE("fixture corpus parses and builds with the documented dimensions") {
    struct Expect {
        std::string file;
        std::size_t dim;
    };
    std::vector<Expect> table = {
        {"z1.json", 4},   {"z2.json", 6},           {"z3.json", 12},
        {"z5.json", 20},  {"alpha_beta_zero.json", 5}, {"semisimple.json", 3},
        {"two_loop.json", 14}, {"commutative_square.json", 9},
    };
    for (const auto& e : table) {
        auto pa = parse_algebra_spec(load_json_file(kFixtures + "/" + e.file));
        CHECK(pa.algebra->dim() == e.dim);
    }
}

TEST_CASE("module specs parse, validate, and round-trip exactly") {
    auto pa = parse_algebra_spec(load_json_file(kFixtures + "/z3.json"));
    Rep m = parse_module_spec(load_json_file(kFixtures + "/modules/z3_m12.json"), pa.algebra);
    CHECK(check_rep(m).valid());
    CHECK(m.total_dim() == 2);
    Rep back = parse_module_spec(module_to_json(m), pa.algebra);
    CHECK(back == m);

    // a handful of machine modules round-trip too
    auto q = knit_ar_quiver(pa.algebra, 4);
    for (const auto& v : q.vertices) CHECK(parse_module_spec(module_to_json(v), pa.algebra) == v);
}

TEST_CASE("malformed input raises SpecError") {
    CHECK_THROWS_AS(load_json_file(kFixtures + "/corrupt.json"), SpecError);
    CHECK_THROWS_AS(load_json_file(kFixtures + "/no_such_file.json"), SpecError);
    json bad = json::object();
    CHECK_THROWS_AS(parse_algebra_spec(bad), SpecError);
    json nonprime = load_json_file(kFixtures + "/z3.json");
    nonprime["field"]["char"] = 6;
    CHECK_THROWS_AS(parse_algebra_spec(nonprime), SpecError);
    auto pa = parse_algebra_spec(load_json_file(kFixtures + "/z3.json"));
    json badmod = json{{"dims", {{"1", 1}}}, {"maps", {{"a1", json::array({json::array({1})})}}}};
    CHECK_THROWS_AS(parse_module_spec(badmod, pa.algebra), SpecError);
}

TEST_CASE("cmd check: exit 0 on valid, 1 on invalid, 2 on corrupt input") {
    auto ok = run_cli("check " + kFixtures + "/z3.json " + kFixtures + "/modules/z3_m12.json", 1);
    CHECK(ok.exit_code == 0);
    CHECK(json::parse(ok.output)["valid"] == true);

    auto bad = run_cli("check " + kFixtures + "/z3.json " + kFixtures + "/modules/z3_nonnilpotent.json", 2);
    CHECK(bad.exit_code == 1);
    auto jb = json::parse(bad.output);
    CHECK(jb["valid"] == false);
    CHECK_FALSE(jb["nilpotency_violation"].is_null());

    auto rel = run_cli("check " + kFixtures + "/alpha_beta_zero.json " + kFixtures +
                           "/modules/abz_relation_violating.json",
                       3);
    CHECK(rel.exit_code == 1);
    CHECK(json::parse(rel.output)["relation_violations"].size() == 1);

    auto corrupt = run_cli("check " + kFixtures + "/corrupt.json " + kFixtures + "/modules/z3_m12.json", 4);
    CHECK(corrupt.exit_code == 2);
}

TEST_CASE("cmd suite on the cycle: all sections report the expected verdicts") {
    auto res = run_cli("suite " + kFixtures + "/z3.json --dot /tmp/lenrep_test_ar.dot", 5);
    REQUIRE(res.exit_code == 0);
    json out = json::parse(res.output);
    CHECK(out["knit"]["vertices"] == 12);
    CHECK(out["knit"]["complete"] == true);
    for (const auto& p : out["knit"]["tau_periods"]) CHECK(p == 3);
    CHECK(out["k0"]["verdict"] == true);
    CHECK(out["k0"]["kernel_rank"] == 9);
    for (const auto& d : out["k0"]["snf_diag"]) CHECK(d == "1");
    CHECK(out["uniserial"]["gabriel"]["verdict"] == true);
    CHECK(out["uniserial"]["heights"]["verdict"] == true);
    CHECK(out["uniserial"]["agree"] == true);
    CHECK(out["uniserial"]["gabriel_conditions"]["height_grows_with_level"] == true);
    CHECK(out["serre"]["recognized"] == true);
    CHECK(out["serre"]["all_pass"] == true);
    CHECK(out["mild"]["verdict"] == "cycle_Zn(3)");

    std::ifstream dot("/tmp/lenrep_test_ar.dot");
    REQUIRE(dot.good());
    std::stringstream ss;
    ss << dot.rdbuf();
    CHECK(ss.str().find("digraph") != std::string::npos);
    std::remove("/tmp/lenrep_test_ar.dot");
}

TEST_CASE("cmd suite on the counterexample: both uniseriality tests fail, mild violates") {
    auto res = run_cli("suite " + kFixtures + "/alpha_beta_zero.json --commands uniserial,mild", 6);
    REQUIRE(res.exit_code == 0);
    json out = json::parse(res.output);
    CHECK(out["uniserial"]["gabriel"]["verdict"] == false);
    CHECK(out["uniserial"]["heights"]["verdict"] == false);
    CHECK(out["uniserial"]["agree"] == true);
    std::string witness = out["uniserial"]["gabriel"]["witness"];
    CHECK(witness.find("in-degree 2") != std::string::npos);
    std::string verdict = out["mild"]["verdict"];
    CHECK(verdict.find("violates") != std::string::npos);
}

TEST_CASE("cmd suite on the semisimple fixture") {
    auto res = run_cli("suite " + kFixtures + "/semisimple.json --commands knit,k0", 7);
    REQUIRE(res.exit_code == 0);
    json out = json::parse(res.output);
    CHECK(out["knit"]["vertices"] == 3);
    CHECK(out["knit"]["meshes"] == 0);
    CHECK(out["k0"]["kernel_rank"] == 0);
    CHECK(out["k0"]["verdict"] == true);
}

TEST_CASE("suite output is byte-identical across runs") {
    auto a = run_cli("suite " + kFixtures + "/z3.json", 8);
    auto b = run_cli("suite " + kFixtures + "/z3.json", 9);
    REQUIRE(a.exit_code == 0);
    CHECK(a.output == b.output);
    CHECK_FALSE(a.output.empty());
}

TEST_CASE("cmd ext1 honors the stability gate with exit code 2") {
    auto ok = run_cli("ext1 " + kFixtures + "/z3.json " + kFixtures + "/modules/z3_m12.json " +
                          kFixtures + "/modules/z3_m12.json",
                      10);
    REQUIRE(ok.exit_code == 0);
    CHECK(json::parse(ok.output)["dimension"] == 0);

    auto shallow = run_cli("ext1 " + kFixtures + "/z3.json " + kFixtures + "/modules/z3_m12.json " +
                               kFixtures + "/modules/z3_m12.json --level-override 3",
                           11);
    CHECK(shallow.exit_code == 2);
}

TEST_CASE("cmd hom reports dimension and basis") {
    auto res = run_cli("hom " + kFixtures + "/z3.json " + kFixtures + "/modules/z3_m12.json " +
                           kFixtures + "/modules/z3_m12.json",
                       12);
    REQUIRE(res.exit_code == 0);
    json out = json::parse(res.output);
    CHECK(out["dimension"] == 1);
    CHECK(out["basis"].size() == 1);
}

TEST_CASE("cmd ar verifies the sequence ending at a module") {
    auto res = run_cli("ar " + kFixtures + "/z3.json --ending-at " + kFixtures + "/modules/z3_m12.json", 13);
    REQUIRE(res.exit_code == 0);
    json out = json::parse(res.output);
    CHECK(out["almost_split"] == true);
    CHECK(out["verified_against"] == 12);
    // tau M(1,2) = M(2,2)
    CHECK(out["left"]["dims"]["2"] == 1);
    CHECK(out["left"]["dims"]["3"] == 1);
    // a projective right-hand term is rejected as input error
    auto pa = parse_algebra_spec(load_json_file(kFixtures + "/z3.json"));
    std::ofstream proj("/tmp/lenrep_test_proj.json");
    proj << module_to_json(projective_module(pa.algebra, 0).rep).dump();
    proj.close();
    auto bad = run_cli("ar " + kFixtures + "/z3.json --ending-at /tmp/lenrep_test_proj.json", 14);
    CHECK(bad.exit_code == 2);
    std::remove("/tmp/lenrep_test_proj.json");
}

TEST_CASE("cmd decompose splits a twisted direct sum") {
    auto pa = parse_algebra_spec(load_json_file(kFixtures + "/z3.json"));
    Rep m12 = top_quotient(pa.algebra, 0, 2);
    Rep s3 = simple_rep(pa.algebra, 2);
    std::mt19937 rng(17);
    Rep twisted = fixtures::conjugate(direct_sum(pa.algebra, {m12, s3}).sum, rng);
    std::ofstream mod("/tmp/lenrep_test_sum.json");
    mod << module_to_json(twisted).dump();
    mod.close();
    auto res = run_cli("decompose " + kFixtures + "/z3.json /tmp/lenrep_test_sum.json", 15);
    REQUIRE(res.exit_code == 0);
    json out = json::parse(res.output);
    CHECK(out["pieces"].size() == 2);
    std::remove("/tmp/lenrep_test_sum.json");
}

TEST_CASE("remaining fixtures run through the suite") {
    auto z1 = run_cli("suite " + kFixtures + "/z1.json --commands knit,mild", 18);
    REQUIRE(z1.exit_code == 0);
    json j1 = json::parse(z1.output);
    CHECK(j1["knit"]["vertices"] == 4);
    CHECK(j1["mild"]["verdict"] == "cycle_Zn(1)");

    auto z5 = run_cli("suite " + kFixtures + "/z5.json --commands knit,uniserial", 19);
    REQUIRE(z5.exit_code == 0);
    json j5 = json::parse(z5.output);
    CHECK(j5["knit"]["vertices"] == 20);
    CHECK(j5["uniserial"]["agree"] == true);

    auto sq = run_cli("suite " + kFixtures + "/commutative_square.json --commands uniserial,mild", 20);
    REQUIRE(sq.exit_code == 0);
    json jsq = json::parse(sq.output);
    CHECK(jsq["uniserial"]["gabriel"]["verdict"] == false);
    CHECK(jsq["uniserial"]["heights"]["verdict"] == false);
}

TEST_CASE("an exhausted knitting budget exits 3 with a frontier section") {
    auto res = run_cli("suite " + kFixtures + "/z3.json --commands knit --budget 4", 17);
    CHECK(res.exit_code == 3);
    json out = json::parse(res.output);
    CHECK(out["knit"]["complete"] == false);
    CHECK(out["knit"].contains("frontier"));
}

TEST_CASE("level override rebuilds the algebra") {
    auto res = run_cli("suite " + kFixtures + "/z3.json --commands knit --level-override 2", 16);
    REQUIRE(res.exit_code == 0);
    json out = json::parse(res.output);
    CHECK(out["algebra"]["level"] == 2);
    CHECK(out["knit"]["vertices"] == 6);
}

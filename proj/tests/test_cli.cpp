#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "hopfyb/cli.hpp"
#include "hopfyb/json_io.hpp"

using namespace hopfyb;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run_command(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("catalog emits hopf.v1 that round-trips") {
    Run r = run({"catalog", "a_c2c2"});
    REQUIRE(r.code == 0);
    Json j = Json::parse(r.out);
    CHECK(j["schema"] == "hopf.v1");
    CHECK(j["dim"] == 8);
    HopfAlgebra h = hopf_from_json(j);
    CHECK(verify_hopf(h).all_passed());
    CHECK(hopf_to_json(h).dump() == j.dump());

    CHECK(run({"catalog", "nosuch"}).code == 2);
}

TEST_CASE("identical invocations produce byte-identical output") {
    Run a = run({"verify-pair", "--hopf", "a_c2c2", "--pair", "family2", "--json"});
    Run b = run({"verify-pair", "--hopf", "a_c2c2", "--pair", "family2", "--json"});
    CHECK(a.code == 0);
    Json ja = Json::parse(a.out), jb = Json::parse(b.out);
    ja.erase("elapsed_ms");
    jb.erase("elapsed_ms");
    CHECK(ja.dump() == jb.dump());
}

TEST_CASE("exit codes separate false results from bad input") {
    CHECK(run({"involutive", "--hopf", "a_c2c2", "--pair", "family1"}).code == 0);
    CHECK(run({"involutive", "--hopf", "s3", "--pair", "conjugation"}).code == 1);
    CHECK(run({"check-braid", "--hopf", "s3", "--pair", "conjugation"}).code == 0);
    // trivial pair on s3 fails MP*: mathematically false, not malformed
    CHECK(run({"verify-pair", "--hopf", "s3", "--pair", "trivial"}).code == 1);
    // malformed input
    CHECK(run({"verify-pair", "--hopf", "s3", "--pair", "family1"}).code == 2);
    CHECK(run({"verify-hopf", "--hopf", "/nonexistent.json"}).code == 2);
    CHECK(run({"verify-hopf"}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
}

TEST_CASE("json report mode") {
    Run r = run({"verify-pair", "--hopf", "a_c2c2", "--pair", "family1", "--json"});
    REQUIRE(r.code == 0);
    Json j = Json::parse(r.out);
    CHECK(j["passed"] == true);
    CHECK(j["checks"].size() >= 14);
}

TEST_CASE("build-r, extract-actions and files round-trip") {
    std::string path = "hopfyb_test_rmatrix.json";
    Run r = run({"build-r", "--hopf", "a_c2c2", "--pair", "family1", "--out", path});
    REQUIRE(r.code == 0);
    Run e = run({"extract-actions", "--hopf", "a_c2c2", "--rmatrix", path, "--json"});
    REQUIRE(e.code == 0);
    Json j = Json::parse(e.out);
    CHECK(j["schema"] == "pair.v1");
    ActionPair back = pair_from_json(j, [](const std::string& n) { return catalog_hopf(n); });
    ActionPair fam1 = a22_family_pair(1);
    CHECK(back.left == fam1.left);
    CHECK(back.right == fam1.right);
    std::remove(path.c_str());
}

TEST_CASE("derive-right reproduces the catalog right action deterministically") {
    Run r = run({"derive-right", "--hopf", "a_c2c2", "--pair", "family2", "--json"});
    REQUIRE(r.code == 0);
    Json j = Json::parse(r.out);
    CHECK(j.dump() == pair_to_json(a22_family_pair(2)).dump());
}

TEST_CASE("hopf.v1 files load back and tampering flips the exit code") {
    std::string path = "hopfyb_test_hopf.json";
    {
        std::ofstream f(path);
        f << hopf_to_json(a_c2c2()).dump();
    }
    CHECK(run({"verify-hopf", "--hopf", path}).code == 0);
    // break the antipode: still well-formed, mathematically false
    Json j = hopf_to_json(a_c2c2());
    j["antipode"][4][4] = "1";
    j["antipode"][5][4] = "0";
    {
        std::ofstream f(path);
        f << j.dump();
    }
    Run r = run({"verify-hopf", "--hopf", path});
    CHECK(r.code == 1);
    CHECK(r.out.find("[FAIL] antipode") != std::string::npos);
    // malformed scalar text is an input error instead
    j["antipode"][4][4] = "oops";
    {
        std::ofstream f(path);
        f << j.dump();
    }
    CHECK(run({"verify-hopf", "--hopf", path}).code == 2);
    std::remove(path.c_str());
}

TEST_CASE("pair files with no right action derive it on load") {
    Json j = pair_to_json(a22_family_pair(1));
    j.erase("right");
    std::string path = "hopfyb_test_pair.json";
    {
        std::ofstream f(path);
        f << j.dump();
    }
    Run r = run({"verify-pair", "--hopf", "a_c2c2", "--pair", path});
    CHECK(r.code == 0);
    std::remove(path.c_str());
}

TEST_CASE("alpha instantiation and fast mode") {
    CHECK(run({"involutive", "--hopf", "a_c2c2", "--pair", "family2", "--alpha", "5/7"}).code == 0);
    CHECK(run({"check-braid", "--hopf", "a_c2c2", "--pair", "family1", "--fast"}).code == 0);
    CHECK(run({"involutive", "--hopf", "a_c2c2", "--pair", "family1", "--alpha", "x"}).code == 2);
}

TEST_CASE("cqt commands") {
    Run v = run({"cqt-verify", "--form", "r_alpha"});
    CHECK(v.code == 0);
    CHECK(v.out.find("cotriangular: yes") != std::string::npos);
    Run i = run({"cqt-induce", "--form", "r_alpha", "--json"});
    REQUIRE(i.code == 0);
    Json j = Json::parse(i.out);
    ActionPair p = pair_from_json(j, [](const std::string& n) { return catalog_hopf(n); });
    CHECK(p.left == a22_family_pair(1).left);
}

TEST_CASE("product constructions through the cli") {
    Run d = run({"dcp", "--hopf", "s3", "--pair", "conjugation", "--json"});
    REQUIRE(d.code == 0);
    HopfAlgebra dcp = hopf_from_json(Json::parse(d.out));
    CHECK(dcp.dim == 36);
    Run p = run({"check-phi", "--hopf", "s3", "--pair", "conjugation"});
    CHECK(p.code == 0);
}

TEST_CASE("transmute and adjoints report the involutivity split") {
    Run t1 = run({"transmute", "--hopf", "a_c2c2", "--pair", "family1"});
    CHECK(t1.code == 0);
    CHECK(t1.out.find("braided commutative: yes") != std::string::npos);
    Run t2 = run({"transmute", "--hopf", "s3", "--pair", "conjugation"});
    CHECK(t2.code == 0);
    CHECK(t2.out.find("braided commutative: no") != std::string::npos);
    Run a = run({"adjoints", "--hopf", "s3", "--pair", "conjugation", "--json"});
    REQUIRE(a.code == 0);
    Json j = Json::parse(a.out);
    CHECK(j["left_trivial"] == false);
    CHECK(j["right_trivial"] == false);
}

TEST_CASE("invert-r agrees across both routes") {
    Run r = run({"invert-r", "--hopf", "a_c2c2", "--pair", "family1"});
    CHECK(r.code == 0);
    CHECK(r.out.find("antipode-route agrees") != std::string::npos);
}

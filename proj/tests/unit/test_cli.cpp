#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "recurseq/cli.hpp"
#include "recurseq/sequence_json.hpp"

using nlohmann::json;
using recurseq::cli::run;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result invoke(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

const std::string kFib = R"({"type":"linear","coeffs":[1,1],"initial":[0,1]})";
const std::string kDegenerate = R"({"type":"linear","coeffs":[0,1],"initial":[1,2]})";

std::string write_temp(const std::string& name, const std::string& text) {
    std::string path = "cli_test_" + name + ".json";
    std::ofstream(path) << text;
    return path;
}

}  // namespace

TEST_CASE("divisors from a spec file") {
    std::string path = write_temp("fib", kFib);
    Result r = invoke({"divisors", "--spec", path, "--bound", "100"});
    CHECK(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["bound"] == 100);
    CHECK(j["divisors"].size() == 25);
    CHECK(j["has_zero_term"] == true);
    CHECK(recurseq::report_from_json(j).divisors.size() == 25);
}

TEST_CASE("verify exit codes") {
    Result degen = invoke({"verify", "linear", "--json", kDegenerate, "--bound", "100"});
    CHECK(degen.code == 1);
    CHECK(json::parse(degen.out)["status"] == "PRECONDITION_DEGENERATE");

    Result ok = invoke({"verify", "linear", "--json", kFib, "--bound", "1000"});
    CHECK(ok.code == 0);

    Result order1 = invoke({"verify", "linear", "--json", R"({"type":"linear","coeffs":[2],"initial":[1]})",
                            "--bound", "100"});
    CHECK(order1.code == 1);
    CHECK(json::parse(order1.out)["status"] == "PRECONDITION_ORDER");

    Result schur = invoke({"verify", "schur", "--poly", "1,0,1", "--bound", "1000"});
    CHECK(schur.code == 0);
    CHECK(json::parse(schur.out)["checkpoints"].size() == 2);
}

TEST_CASE("phi-b prints a coefficient list") {
    Result r = invoke({"phi-b", "--g", "1,-1,-1", "--b", "2"});
    CHECK(r.code == 0);
    CHECK(r.out == "1,-3,1\n");
    Result j = invoke({"--format", "json", "phi-b", "--g", "1,-1,-1", "--b", "2"});
    CHECK(json::parse(j.out)["phi_b"] == json::array({1, -3, 1}));
    CHECK(invoke({"phi-b", "--g", "2,-1", "--b", "2"}).code == 2);
}

TEST_CASE("usage errors") {
    CHECK(invoke({}).code == 2);
    CHECK(invoke({"bogus"}).code == 2);
    CHECK(invoke({"terms"}).code == 2);
    CHECK(invoke({"period", "--json", kFib}).code == 2);
    CHECK(invoke({"period", "--json", kFib, "--m", "zero"}).code == 2);
    CHECK(invoke({"--format", "xml", "terms", "--json", kFib}).code == 2);
    CHECK(invoke({"gf", "--json", R"({"type":"nonlinear","k":1,"sign":1,"poly":[],"initial":[1,1]})"}).code == 2);
    CHECK(invoke({"terms", "--spec", "does/not/exist.json"}).code == 2);
    CHECK(invoke({"--help"}).code == 0);
}

TEST_CASE("malformed specs are position-annotated") {
    Result syntax = invoke({"terms", "--json", R"({"type":"linear","coeffs":[1,1)"});
    CHECK(syntax.code == 2);
    CHECK(syntax.err.find("line 1, column") != std::string::npos);
    Result schema = invoke({"terms", "--json", R"({"type":"linear","coeffs":[1,true],"initial":[0,1]})"});
    CHECK(schema.code == 2);
    CHECK(schema.err.find("/coeffs/1") != std::string::npos);
    std::string path = write_temp("broken", "{\n  \"type\": \"linear\",\n  \"coeffs\": [1 1]\n}");
    Result file = invoke({"terms", "--spec", path});
    CHECK(file.code == 2);
    CHECK(file.err.find(path) != std::string::npos);
    CHECK(file.err.find("line 3") != std::string::npos);
}

TEST_CASE("bound exhaustion") {
    Result capped = invoke({"prime-index", "--json", R"({"type":"linear","coeffs":[2],"initial":[4]})", "--p", "2"});
    CHECK(capped.code == 3);
    json j = json::parse(capped.out);
    CHECK(j["index"] == "CAP_EXCEEDED");
    CHECK(j["gcd_hypothesis"] == false);

    Result period = invoke({"--state-cap", "10", "period", "--json", kFib, "--m", "1000"});
    CHECK(period.code == 3);
    setenv("RECURSEQ_STATE_CAP", "10", 1);
    CHECK(invoke({"period", "--json", kFib, "--m", "1000"}).code == 3);
    CHECK(invoke({"--state-cap", "100000", "period", "--json", kFib, "--m", "1000"}).code == 0);
    unsetenv("RECURSEQ_STATE_CAP");

    Result divs = invoke({"--state-cap", "50", "divisors", "--json", kFib, "--bound", "200", "--skip-zero-terms"});
    CHECK(divs.code == 3);
    CHECK(!json::parse(divs.out)["errors"].empty());
}

TEST_CASE("sequence commands") {
    json terms = json::parse(invoke({"terms", "--json", kFib, "--n", "10"}).out);
    CHECK(terms["terms"].back() == 55);
    json gf = json::parse(invoke({"gf", "--json", kFib}).out);
    CHECK(gf["g"] == json::array({1, -1, -1}));
    json minimal = json::parse(invoke({"minimal", "--json", R"({"type":"linear","coeffs":[3,-1,-2],"initial":[0,1,1]})"}).out);
    CHECK(minimal["coeffs"] == json::array({1, 1}));
    json degen = json::parse(invoke({"degenerate", "--json", kDegenerate}).out);
    CHECK(degen["verdict"] == "DEGENERATE");
    CHECK(degen["witness"] == "Phi_2");
    json sub = json::parse(invoke({"subseq", "--json", kFib, "--c", "0", "--b", "2"}).out);
    CHECK(sub["coeffs"] == json::array({3, -1}));
    json period = json::parse(invoke({"period", "--json", kFib, "--m", "10"}).out);
    CHECK(period["period"] == 60);
    json null = json::parse(invoke({"null-divisor", "--json", R"({"type":"linear","coeffs":[2],"initial":[1]})", "--m", "4"}).out);
    CHECK(null["null_divisor"] == true);
    json poly = json::parse(invoke({"minimal", "--json", R"({"type":"polynomial","poly":[0,0,1]})"}).out);
    CHECK(poly["coeffs"] == json::array({3, -3, 1}));
}

TEST_CASE("scaling and strip commands") {
    Result gap = invoke({"scaling", "--json", R"({"type":"linear","coeffs":[2,4],"initial":[0,1]})", "--s", "1", "--t", "2"});
    CHECK(gap.code == 1);
    CHECK(json::parse(gap.out)["failure_witness"]["n"] == 1);
    Result cand = invoke({"scaling", "--json", R"({"type":"linear","coeffs":[2,4],"initial":[0,4]})", "--s", "2"});
    json c = json::parse(cand.out);
    CHECK(c["candidate_t"] == 4);
    CHECK(c["scaled"] == json::array({3, -1}));
    json strip = json::parse(invoke({"strip-prime", "--json", kFib, "--p", "2"}).out);
    CHECK(strip["step"] == 3);
}

TEST_CASE("topology commands") {
    json i = json::parse(invoke({"topology", "intersect", "--class", "1:2", "--class", "2:3"}).out);
    CHECK(i["a"] == 5);
    CHECK(i["b"] == 6);
    json e = json::parse(invoke({"topology", "intersect", "--class", "0:2", "--class", "1:4"}).out);
    CHECK(e["empty"] == true);
    json w = json::parse(invoke({"topology", "witness", "--primes", "2,3"}).out);
    CHECK(w["witness"] == 7);
    CHECK(invoke({"topology", "witness", "--primes", "2,4"}).code == 2);
    json cont = json::parse(invoke({"topology", "continuity", "--json", kFib, "--b", "2"}).out);
    CHECK(cont["period"] == 3);
    CHECK(invoke({"topology", "intersect", "--class", "1:0", "--class", "1:2"}).code == 2);
}

TEST_CASE("table output") {
    Result t = invoke({"--format", "table", "divisors", "--json", kFib, "--bound", "30"});
    CHECK(t.code == 0);
    CHECK(t.out.find("status         OK") != std::string::npos);
    for (char ch : t.out) CHECK(static_cast<unsigned char>(ch) < 128);
    Result flat = invoke({"--format", "table", "period", "--json", kFib, "--m", "2"});
    CHECK(flat.out.find("period") != std::string::npos);
}

TEST_CASE("parallel jobs give the same report") {
    Result one = invoke({"divisors", "--json", R"({"type":"linear","coeffs":[1,2],"initial":[1,1]})", "--bound", "500"});
    Result four = invoke({"--jobs", "4", "divisors", "--json", R"({"type":"linear","coeffs":[1,2],"initial":[1,1]})",
                          "--bound", "500"});
    CHECK(one.out == four.out);
}

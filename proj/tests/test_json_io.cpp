#include "oracles.hpp"

#include <tropcirc/bridge.hpp>
#include <tropcirc/circuit.hpp>
#include <tropcirc/json_io.hpp>
#include <tropcirc/symmetric.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <fstream>
#include <string>

using namespace tropcirc;

namespace {

Partition P(const std::string& s) { return Partition::parse(s); }

}  // namespace

TEST_CASE("polynomial json format and round trip") {
    ExactPolynomial f = skew_schur(SkewShape(P("2,1"), P("1")), 2);
    Json j = poly_to_json(f);
    CHECK(j.dump() ==
          R"({"terms":[{"coeff":"1","exp":[0,2]},{"coeff":"2","exp":[1,1]},{"coeff":"1","exp":[2,0]}],"vars":2})");
    CHECK(poly_from_json(j) == f);

    ExactPolynomial zero(3);
    Json jz = poly_to_json(zero);
    CHECK(jz["terms"].empty());
    CHECK(poly_from_json(jz) == zero);

    // Unbounded coefficients survive the string encoding.
    ExactPolynomial big(1);
    big.add_term({1}, Int("123456789012345678901234567890"));
    CHECK(poly_from_json(poly_to_json(big)) == big);
}

TEST_CASE("polynomial json rejects malformed input") {
    CHECK_THROWS_AS(poly_from_json(Json::parse(R"({"vars":2})")), std::invalid_argument);
    CHECK_THROWS_AS(poly_from_json(Json::parse(R"({"vars":0,"terms":[]})")),
                    std::invalid_argument);
    CHECK_THROWS_AS(
        poly_from_json(Json::parse(R"({"vars":2,"terms":[{"exp":[1],"coeff":"1"}]})")),
        std::invalid_argument);
    CHECK_THROWS_AS(
        poly_from_json(Json::parse(R"({"vars":1,"terms":[{"exp":[1],"coeff":1}]})")),
        std::invalid_argument);
}

TEST_CASE("tropical polynomial json round trip keeps rational coefficients") {
    TropicalPolynomial g(2);
    g.add_term({1, 0}, Rational(1, 2));
    g.add_term({0, 1}, Rational(-3));
    Json j = trop_to_json(g);
    CHECK(trop_from_json(j) == g);
    CHECK(j["terms"][0]["coeff"].is_string());
}

TEST_CASE("lattice point set json format and round trip") {
    LatticePointSet s = permutahedron_points(P("2"), 2);
    Json j = lattice_to_json(s);
    CHECK(j.dump() == R"({"dim":2,"points":[[0,2],[1,1],[2,0]]})");
    CHECK(lattice_from_json(j) == s);
    CHECK_THROWS_AS(lattice_from_json(Json::parse(R"({"dim":2,"points":[[1]]})")),
                    std::invalid_argument);
}

TEST_CASE("circuit json format and round trip") {
    Circuit c = build_schur_circuit(P("2,1"), 3);
    Json j = circuit_to_json(c);
    CHECK(j["vars"] == 3);
    CHECK(j["output"] == c.output());
    REQUIRE(j["gates"].is_array());
    for (const auto& g : j["gates"]) {
        std::string op = g["op"].get<std::string>();
        CHECK((op == "input" || op == "const" || op == "oplus" || op == "odot"));
    }
    Circuit back = circuit_from_json(j);
    CHECK(circuit_to_json(back).dump() == j.dump());
    CHECK(circuit_eval(back, {Rational(1), Rational(2), Rational(3)}) ==
          circuit_eval(c, {Rational(1), Rational(2), Rational(3)}));

    Circuit constant = build_schur_circuit(P(""), 2);
    Json jc = circuit_to_json(constant);
    CHECK(jc["gates"][0]["op"] == "const");
    CHECK(jc["gates"][0]["val"].is_string());
    CHECK(circuit_eval(circuit_from_json(jc), {Rational(4), Rational(5)}) == 0);
}

TEST_CASE("circuit json rejects malformed circuits instead of repairing them") {
    CHECK_THROWS_AS(circuit_from_json(Json::parse(
                        R"({"vars":1,"gates":[{"op":"nonsense"}],"output":0})")),
                    std::invalid_argument);
    CHECK_THROWS_AS(circuit_from_json(Json::parse(
                        R"({"vars":1,"gates":[{"op":"input","var":0}],"output":3})")),
                    std::invalid_argument);
    CHECK_THROWS_AS(
        circuit_from_json(Json::parse(
            R"({"vars":1,"gates":[{"op":"oplus","args":[0,1]},{"op":"input","var":0}],"output":0})")),
        std::invalid_argument);
    CHECK_THROWS_AS(circuit_from_json(Json::parse(
                        R"({"vars":2,"gates":[{"op":"input","var":5}],"output":0})")),
                    std::invalid_argument);
}

TEST_CASE("theorem report json carries the six fields") {
    TheoremReport r = verify_theorem_main(SkewShape(P("2,1"), P("1")), 2);
    Json j = report_to_json(r);
    CHECK(j.size() == 6);
    CHECK(j["shape"] == "2,1/1");
    CHECK(j["n"] == 2);
    CHECK(j["beta"] == "2");
    CHECK(j["beta1_equals_lambda1"] == true);
    CHECK(j["trop_equal_axiomatic"] == true);
    CHECK(j["dominating_partition_is_beta"] == true);
}

TEST_CASE("json file io") {
    const std::string path = "tropcirc_test_io.json";
    write_json_file(path, poly_to_json(schur(P("2"), 2)), false);
    Json j = read_json_file(path);
    CHECK(poly_from_json(j) == schur(P("2"), 2));
    std::remove(path.c_str());
    CHECK_THROWS_AS(read_json_file("does_not_exist_anywhere.json"), std::invalid_argument);

    std::ofstream bad("tropcirc_test_bad.json");
    bad << "{ not json";
    bad.close();
    CHECK_THROWS_AS(read_json_file("tropcirc_test_bad.json"), std::invalid_argument);
    std::remove("tropcirc_test_bad.json");
}

TEST_CASE("json output is deterministic") {
    ExactPolynomial f = stanley_poly(Permutation::parse("3,1,4,2"), 3);
    CHECK(poly_to_json(f).dump() == poly_to_json(f).dump());
    Circuit c = build_schur_circuit(P("3,1"), 4);
    CHECK(circuit_to_json(c).dump() == circuit_to_json(c).dump());
}

#include "conjspace/json_io.hpp"
#include "test_support.hpp"

#include <catch_amalgamated.hpp>

using namespace conjspace;
using namespace conjspace::json_io;
using namespace conjspace::testing;

TEST_CASE("integers: numbers, decimal strings, rejection of floats") {
  CHECK(to_int(json(42), "x") == 42);
  CHECK(to_int(json(-7), "x") == -7);
  CHECK(to_int(json("123456789012345678901234567890"), "x") == Int("123456789012345678901234567890"));
  CHECK(to_int(json("-5"), "x") == -5);
  CHECK_THROWS_AS(to_int(json(1.5), "x"), MalformedInput);
  CHECK_THROWS_AS(to_int(json("1e3"), "x"), MalformedInput);
  CHECK_THROWS_AS(to_int(json("-"), "x"), MalformedInput);
  CHECK_THROWS_AS(to_int(json(true), "x"), MalformedInput);

  CHECK(from_int(Int(12)) == json(12));
  const Int big = Int("98765432109876543210");
  CHECK(from_int(big) == json("98765432109876543210"));
  CHECK(to_int(from_int(big), "x") == big);
  CHECK(from_int(Int(std::numeric_limits<std::int64_t>::min())).is_number_integer());
}

TEST_CASE("wall data parsing") {
  const json j = parse_text(R"({"m": 3, "mu": [[1,2,3,1]], "p1": [0,0,0]})");
  const WallInput w = to_wall_input(j);
  CHECK(w.m == 3);
  CHECK(w.mu(2, 0, 1) == 1);
  const WallValidation v = validate(w);
  REQUIRE(v.ok());
  CHECK(from_wall_data(*v.data) == j);

  // triple order inside an entry is irrelevant
  CHECK(to_wall_input(parse_text(R"({"m": 3, "mu": [[3,1,2,1]], "p1": [0,0,0]})")).mu == w.mu);

  CHECK_THROWS_AS(to_wall_input(parse_text(R"({"m": 1, "mu": [], "p1": [0], "extra": 1})")), MalformedInput);
  CHECK_THROWS_AS(to_wall_input(parse_text(R"({"m": 1, "mu": []})")), MalformedInput);
  CHECK_THROWS_AS(to_wall_input(parse_text(R"({"m": 1, "mu": [[1,1,2,1]], "p1": [0]})")), MalformedInput);
  CHECK_THROWS_AS(to_wall_input(parse_text(R"({"m": 1, "mu": [[0,1,1,1]], "p1": [0]})")), MalformedInput);
  CHECK_THROWS_AS(to_wall_input(parse_text(R"({"m": 1, "mu": [[1,1,1,1],[1,1,1,2]], "p1": [0]})")), MalformedInput);
  CHECK_THROWS_AS(to_wall_input(parse_text(R"({"m": 1, "mu": [[1,1,1]], "p1": [0]})")), MalformedInput);
  CHECK_THROWS_AS(to_wall_input(parse_text(R"({"m": 2, "mu": [], "p1": [0]})")), MalformedInput);
  CHECK_THROWS_AS(to_wall_input(parse_text(R"({"m": 1, "mu": [], "p1": [0.5]})")), MalformedInput);
  CHECK_THROWS_AS(to_wall_input(parse_text(R"({"m": 1000, "mu": [], "p1": []})")), std::length_error);
  CHECK_THROWS_AS(parse_text("{\"m\": "), MalformedInput);
  CHECK_THROWS_AS(to_wall_input(parse_text("[1,2]")), MalformedInput);
}

TEST_CASE("wall validation serializes witnesses") {
  const WallValidation v = validate(to_wall_input(parse_text(R"({"m": 1, "mu": [[1,1,1,1]], "p1": [6]})")));
  const json out = from_wall_validation(v);
  CHECK(out["valid"] == false);
  REQUIRE(out["violations"].size() == 1);
  CHECK(out["violations"][0]["kind"] == "pontryagin");
  CHECK(out["violations"][0]["x"] == json::array({1}));
}

TEST_CASE("3-manifold data parsing") {
  const M3Data M = to_m3(parse_text(R"({"b1": 3, "torsion": [], "t": [[1,2,3]]})"));
  CHECK(M.b1() == 3);
  CHECK(M.t()(0, 1, 2) == 1);
  CHECK(from_m3(M) == parse_text(R"({"b1": 3, "torsion": [], "t": [[1,2,3]]})"));
  CHECK(to_m3(parse_text(R"({"b1": 0, "t": []})")).is_z2_homology_sphere());
  CHECK_THROWS_AS(to_m3(parse_text(R"({"b1": 1, "torsion": [], "t": [[1,1,1]]})")), std::domain_error);
  CHECK_NOTHROW(to_m3(parse_text(R"({"b1": 1, "torsion": [2], "t": [[1,1,1]]})")));
  CHECK_THROWS_AS(to_m3(parse_text(R"({"b1": 0, "torsion": [1], "t": []})")), std::invalid_argument);
}

TEST_CASE("bordism classes round trip") {
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t m = static_cast<std::size_t>(rand_int(1, 4));
    ZubrClass z(random_vector(m, 1000), random_form(m, 1000));
    z.lambda[0] *= Int("1000000000000000000000");
    const json j = from_zubr(z);
    CHECK(to_zubr(parse_text(j.dump())) == z);
  }
  CHECK_THROWS_AS(to_zubr(parse_text(R"({"m": 2, "lambda": [1], "mu": []})")), MalformedInput);
}

TEST_CASE("Lambda-module and form parsing") {
  const LambdaModule M = to_lambda_module(parse_text(R"({"rank": 2, "T": [[1,1],[0,-1]]})"));
  const json d = from_decomposition(decompose(M));
  CHECK(d["a"] == 0);
  CHECK(d["b"] == 0);
  CHECK(d["c"] == 1);
  CHECK_THROWS_AS(to_lambda_module(parse_text(R"({"rank": 2, "T": [[1,1],[0,1]]})")), std::domain_error);
  CHECK_THROWS_AS(to_lambda_module(parse_text(R"({"rank": 2, "T": [[1,1]]})")), MalformedInput);

  const LambdaForm F = to_lambda_form(parse_text(R"({"rank": 2, "gram": [[[0,0],[1,0]],[[-1,0],[0,0]]]})"));
  CHECK(check_skew_hermitian(F));
  CHECK(F(1, 0) == LambdaElem{-1, 0});
  CHECK_THROWS_AS(to_lambda_form(parse_text(R"({"rank": 1, "gram": [[[0,0,0]]]})")), MalformedInput);
  CHECK_THROWS_AS(to_lambda_form(parse_text(R"({"rank": 1, "gram": [[[0,0]]], "q": [0]})")), MalformedInput);
  CHECK_NOTHROW(to_lambda_form(parse_text(R"({"rank": 1, "gram": [[[0,0]]], "q": [0]})"), {"q"}));

  const json h = from_hyperbolic(hyperbolic_basis(eps_reduce(F)));
  CHECK(h["pairs"].size() == 1);
  CHECK(h["radical"].empty());
}

TEST_CASE("verdicts and reports serialize") {
  const Verdict v{Outcome::AdmitsByTheorem, F2Matrix::identity(2), {}};
  const json j = from_verdict(v);
  CHECK(j["outcome"] == "AdmitsByTheorem");
  CHECK(j["certificate"] == json::array({"10", "01"}));
  CHECK(from_verdict(Verdict{Outcome::NoRingIso, std::nullopt, {"x"}})["certificate"].is_null());

  TableReport r{2, {{"a", true, ""}, {"b", false, "detail"}}};
  const json rj = from_table_report(r);
  CHECK(rj["all_passed"] == false);
  CHECK(rj["checks"].size() == 2);
}

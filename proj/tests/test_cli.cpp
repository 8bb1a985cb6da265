#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "polarpath/sysfile.hpp"

using namespace polarpath;

TEST_CASE("system file parsing") {
  SystemFile sf = parse_system_file(
      "# a comment\n"
      "vars: x y z\n"
      "eq: x^2 + y^2 - z^2 - 1\n"
      "eq: 2*x - 1/3\n");
  CHECK(sf.variables.size() == 3);
  REQUIRE(sf.equations.size() == 2);
  CHECK(sf.equations[0].degree() == 2);
  CHECK(sf.equations[1].degree() == 1);
}

TEST_CASE("parser diagnostics carry line and column") {
  try {
    parse_system_file("vars: x\neq: x + w\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line == 2);
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_system_file("eq: x\n"), ParseError);
  CHECK_THROWS_AS(parse_system_file("vars: x\n"), ParseError);   // empty system
  CHECK_THROWS_AS(parse_system_file("vars: x\neq: x - x\n"), ParseError);  // zero eq
}

TEST_CASE("parser round trip: print then reparse") {
  std::vector<std::string> vars{"x", "y"};
  Rng rng(44);
  for (int trial = 0; trial < 25; ++trial) {
    std::vector<MultiPoly::Term> ts;
    for (int t = 0; t < 5; ++t) {
      Monomial m = Monomial::one(2);
      m.e[0] = (uint16_t)(rng.next() % 4);
      m.e[1] = (uint16_t)(rng.next() % 4);
      m.deg = m.e[0] + m.e[1];
      ts.push_back({m, Rational(rng.integer(-9, 9))});
    }
    MultiPoly f = MultiPoly::from_terms(2, std::move(ts));
    if (f.is_zero()) continue;
    std::string text = print_polynomial(f, vars);
    MultiPoly g = parse_polynomial(text, vars);
    CHECK(f == g);
  }
}

TEST_CASE("points files: tuples and parametrization json") {
  Rng rng(45);
  QueryPoints qp = parse_points_file(R"({"points": [["1","0"],["0","1/2"]]})", 2, rng);
  CHECK(qp.tuples.size() == 2);
  CHECK(qp.param.degree() == 2);
  CHECK(point_on_param({Rational(0), Rational(1) / 2}, qp.param));
  // round trip through the parametrization JSON form
  std::string pj = zero_dim_to_json(qp.param);
  QueryPoints qp2 = parse_points_file(pj, 2, rng);
  CHECK(qp2.param.degree() == 2);
  CHECK(qp2.tuples.empty());
  CHECK_THROWS_AS(parse_points_file("{not json", 2, rng), InvalidInput);
  CHECK_THROWS_AS(parse_points_file(R"({"points": [["1"]]})", 2, rng), InvalidInput);
}

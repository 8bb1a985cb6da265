#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "polarpath/roadmap.hpp"
#include "polarpath/sysfile.hpp"

using namespace polarpath;

namespace {

std::vector<Rational> qpt(std::initializer_list<long> xs) {
  std::vector<Rational> v;
  for (long x : xs) v.push_back(Rational(x));
  return v;
}

}  // namespace

TEST_CASE("curve topology: circle has one component") {
  elim::SolveOptions opt;
  opt.seed = 5;
  std::vector<MultiPoly> circle{
      parse_polynomial("x^2 + y^2 - 1", {"x", "y"})};
  auto c = elim::solve_system_one_dim(circle, 2, opt);
  topology::TopologyOptions topt;
  topt.seed = 9;
  topt.system = &circle;
  topology::PieceTopology top(c, topt);
  CHECK(top.component_count() == 1);
}

TEST_CASE("curve topology: two disjoint circles give two components") {
  // (x-3)^2 + y^2 = 1 and (x+3)^2 + y^2 = 1 as one curve
  std::vector<MultiPoly> sys{parse_polynomial(
      "((x-3)^2 + y^2 - 1) * ((x+3)^2 + y^2 - 1)", {"x", "y"})};
  elim::SolveOptions opt;
  opt.seed = 6;
  auto c = elim::solve_system_one_dim(sys, 2, opt);
  CHECK(c.degree() == 4);
  topology::TopologyOptions topt;
  topt.seed = 10;
  topt.system = &sys;
  topology::PieceTopology top(c, topt);
  CHECK(top.component_count() == 2);

  // brute-force sampling union-find oracle at grid resolution 1e-3 would
  // count the same; the two ovals are separated by the y-axis, checked via
  // point location instead
  Rng rng(3);
  auto pts = from_rational_points(2, {qpt({3, 1}), qpt({-3, 1}), qpt({2, 0})}, rng);
  auto apts = topology::real_points_of(pts);
  REQUIRE(apts.size() == 3);
  // identify which algebraic point is which by coordinates
  int right = -1, left = -1, right2 = -1;
  for (int i = 0; i < 3; ++i) {
    auto cs = apts[i].coords();
    if (cs[0].contains(Rational(3))) right = i;
    if (cs[0].contains(Rational(-3))) left = i;
    if (cs[0].contains(Rational(2))) right2 = i;
  }
  REQUIRE(right >= 0);
  REQUIRE(left >= 0);
  REQUIRE(right2 >= 0);
  int c_right = top.locate(apts[right]);
  int c_left = top.locate(apts[left]);
  int c_right2 = top.locate(apts[right2]);
  CHECK(c_right >= 0);
  CHECK(c_left >= 0);
  CHECK(c_right != c_left);
  CHECK(c_right == c_right2);
}

TEST_CASE("curve topology: empty real trace has zero components") {
  // x^2 + y^2 + 1 = 0 has no real points
  std::vector<MultiPoly> sys{parse_polynomial("x^2 + y^2 + 1", {"x", "y"})};
  elim::SolveOptions opt;
  opt.seed = 7;
  auto c = elim::solve_system_one_dim(sys, 2, opt);
  topology::TopologyOptions topt;
  topt.seed = 11;
  topt.system = &sys;
  topology::PieceTopology top(c, topt);
  CHECK(top.component_count() == 0);
}

TEST_CASE("roadmap: circle input is its own roadmap (d = 1)") {
  SystemFile sf = parse_system_file("vars: x y\neq: x^2 + y^2 - 1\n");
  Slp gamma = slp_from_polys(sf.equations);
  Rng rng(8);
  auto p0 = from_rational_points(2, {qpt({1, 0}), qpt({0, 1})}, rng);
  roadmap::RoadmapConfig cfg;
  cfg.seed = 31;
  auto result = roadmap::roadmap_unbounded(gamma, p0, cfg);
  CHECK(result.componentCount == 1);
  CHECK(result.queryComponent.at("p0") == result.queryComponent.at("p1"));
  CHECK(roadmap::connectivity_query(result, "p0", "p1"));
  CHECK(roadmap::connectivity_query(result, "p0", "p0"));
  CHECK_THROWS_AS(roadmap::connectivity_query(result, "p0", "zz"), InvalidInput);
}

TEST_CASE("roadmap: one-sheet hyperboloid connects antipodal points") {
  SystemFile sf = parse_system_file("vars: x y z\neq: x^2 + y^2 - z^2 - 1\n");
  Slp gamma = slp_from_polys(sf.equations);
  Rng rng(9);
  auto p0 = from_rational_points(3, {qpt({1, 0, 0}), qpt({-1, 0, 0})}, rng);
  roadmap::RoadmapConfig cfg;
  cfg.seed = 20260809;
  auto result = roadmap::roadmap_unbounded(gamma, p0, cfg);
  CHECK(validate(result.curve).ok);
  for (auto& e : result.degreeLedger) CHECK(e.ok);
  CHECK(roadmap::connectivity_query(result, "p0", "p1"));
  // the roadmap curve carries the query points exactly
  CHECK(roadmap::points_on_curve(result.queries, result.curve));
}

TEST_CASE("roadmap: two-sheet hyperboloid separates the sheets") {
  SystemFile sf = parse_system_file("vars: x y z\neq: z^2 - x^2 - y^2 - 1\n");
  Slp gamma = slp_from_polys(sf.equations);
  Rng rng(10);
  auto p0 = from_rational_points(3, {qpt({0, 0, 1}), qpt({0, 0, -1})}, rng);
  roadmap::RoadmapConfig cfg;
  cfg.seed = 77001;
  auto result = roadmap::roadmap_unbounded(gamma, p0, cfg);
  CHECK(validate(result.curve).ok);
  CHECK_FALSE(roadmap::connectivity_query(result, "p0", "p1"));
  CHECK(result.componentCount >= 2);
}

TEST_CASE("roadmap json round trip and query") {
  SystemFile sf = parse_system_file("vars: x y\neq: x^2 + y^2 - 1\n");
  Slp gamma = slp_from_polys(sf.equations);
  Rng rng(12);
  auto p0 = from_rational_points(2, {qpt({1, 0})}, rng);
  roadmap::RoadmapConfig cfg;
  cfg.seed = 5150;
  auto result = roadmap::roadmap_unbounded(gamma, p0, cfg);
  std::string js = roadmap::result_to_json(result);
  auto back = roadmap::result_from_json(js);
  CHECK(roadmap::result_to_json(back) == js);
  CHECK(roadmap::connectivity_query(back, "p0", "p0"));
}

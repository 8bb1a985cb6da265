#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "polarpath/elim.hpp"

using namespace polarpath;

namespace {

MultiPoly mp(int n, std::vector<std::pair<std::vector<int>, long>> terms) {
  std::vector<MultiPoly::Term> ts;
  for (auto& [es, c] : terms) {
    Monomial m = Monomial::one(n);
    for (int i = 0; i < n; ++i) {
      m.e[i] = (uint16_t)es[i];
      m.deg += es[i];
    }
    ts.push_back({m, Rational(c)});
  }
  return MultiPoly::from_terms(n, std::move(ts));
}

}  // namespace

TEST_CASE("groebner of an already reduced basis") {
  elim::IdealPresentation I;
  I.variableCount = 2;
  I.generators = {mp(2, {{{1, 0}, 1}, {{0, 0}, -1}}), mp(2, {{{0, 1}, 1}, {{0, 0}, -2}})};
  auto G = elim::groebner(I);
  REQUIRE(G.elements.size() == 2);
  // same set (basis order is grevlex-ascending by lead)
  for (auto& g : I.generators) {
    bool found = false;
    for (auto& h : G.elements)
      if (g == h) found = true;
    CHECK(found);
  }
}

TEST_CASE("groebner of a monomial ideal is itself") {
  elim::IdealPresentation I;
  I.variableCount = 2;
  I.generators = {mp(2, {{{2, 0}, 1}}), mp(2, {{{1, 1}, 1}})};
  auto G = elim::groebner(I);
  REQUIRE(G.elements.size() == 2);
  for (auto& g : I.generators) {
    bool found = false;
    for (auto& h : G.elements)
      if (g == h) found = true;
    CHECK(found);
  }
}

TEST_CASE("circle intersect line contains x1^2 - 1") {
  elim::IdealPresentation I;
  I.variableCount = 2;
  I.generators = {mp(2, {{{2, 0}, 1}, {{0, 2}, 1}, {{0, 0}, -1}}), mp(2, {{{0, 1}, 1}})};
  auto G = elim::groebner(I);
  MultiPoly want = mp(2, {{{2, 0}, 1}, {{0, 0}, -1}});
  bool found = false;
  for (auto& g : G.elements)
    if (g == want) found = true;
  CHECK(found);
}

TEST_CASE("multi-modular groebner agrees with rational buchberger") {
  Rng rng(2024);
  int done = 0;
  for (int trial = 0; done < 8 && trial < 40; ++trial) {
    int n = 2 + (int)(rng.next() % 3);  // up to 4 vars
    elim::IdealPresentation I;
    I.variableCount = n;
    for (int k = 0; k < n; ++k) {
      std::vector<MultiPoly::Term> ts;
      for (int t = 0; t < 4; ++t) {
        Monomial m = Monomial::one(n);
        int deg = 0;
        for (int i = 0; i < n; ++i) {
          int e = (int)(rng.next() % 2);
          if (deg + e > 3) e = 0;
          m.e[i] = (uint16_t)e;
          m.deg += e;
          deg += e;
        }
        ts.push_back({m, Rational(rng.integer(-9, 9))});
      }
      MultiPoly f = MultiPoly::from_terms(n, std::move(ts));
      if (f.is_zero()) f = MultiPoly::constant(n, Rational(1));
      I.generators.push_back(f);
    }
    elim::GroebnerOptions o1;
    o1.seed = 55 + trial;
    elim::GroebnerOptions o2 = o1;
    o2.force_rational = true;
    auto G1 = elim::groebner(I, o1);
    auto G2 = elim::groebner(I, o2);
    REQUIRE(G1.elements.size() == G2.elements.size());
    for (size_t i = 0; i < G1.elements.size(); ++i) CHECK(G1.elements[i] == G2.elements[i]);
    ++done;
  }
  CHECK(done >= 8);
}

TEST_CASE("buchberger criterion holds on emitted bases") {
  elim::IdealPresentation I;
  I.variableCount = 3;
  I.generators = {mp(3, {{{2, 0, 0}, 1}, {{0, 1, 0}, 1}, {{0, 0, 1}, -1}}),
                  mp(3, {{{1, 1, 0}, 1}, {{0, 0, 2}, -1}}),
                  mp(3, {{{0, 2, 1}, 1}, {{1, 0, 0}, -1}})};
  auto G = elim::groebner(I);
  for (size_t i = 0; i < G.elements.size(); ++i)
    for (size_t j = i + 1; j < G.elements.size(); ++j) {
      const auto &a = G.elements[i], &b = G.elements[j];
      Monomial l = a.lead().m.lcm(b.lead().m);
      MultiPoly s = a.mul_term(l / a.lead().m, Rational(1)) -
                    b.mul_term(l / b.lead().m, Rational(1));
      CHECK(normal_form(s, G.elements).is_zero());
    }
}

TEST_CASE("dimension examples") {
  {  // {1}
    elim::IdealPresentation I;
    I.variableCount = 2;
    I.generators = {mp(2, {{{0, 0}, 1}})};
    CHECK(elim::dimension(elim::groebner(I)) == -1);
  }
  {  // sphere in 3 vars is a surface
    elim::IdealPresentation I;
    I.variableCount = 3;
    I.generators = {mp(3, {{{2, 0, 0}, 1}, {{0, 2, 0}, 1}, {{0, 0, 2}, 1}, {{0, 0, 0}, -1}})};
    CHECK(elim::dimension(elim::groebner(I)) == 2);
  }
  {  // two points
    elim::IdealPresentation I;
    I.variableCount = 2;
    I.generators = {mp(2, {{{2, 0}, 1}, {{1, 0}, -1}}), mp(2, {{{0, 1}, 1}, {{1, 0}, -1}})};
    CHECK(elim::dimension(elim::groebner(I)) == 0);
  }
}

TEST_CASE("solve_zero_dim examples") {
  elim::SolveOptions opt;
  opt.seed = 9;
  {  // x^2 - 2 over one variable
    std::vector<MultiPoly> gens{mp(1, {{{2}, 1}, {{0}, -2}})};
    auto p = elim::solve_system_zero_dim(gens, 1, opt);
    CHECK(p.degree() == 2);
    CHECK(validate(p).ok);
    CHECK(generator_vanishes(gens[0], p));
    CHECK(real_count(p) == 2);
  }
  {  // {1}: empty set
    elim::IdealPresentation I;
    I.variableCount = 2;
    I.generators = {mp(2, {{{0, 0}, 1}})};
    auto G = elim::groebner(I);
    auto p = elim::solve_zero_dim(G, opt);
    CHECK(p.is_empty());
    CHECK(p.degree() == 0);
  }
  {  // {(0,0), (1,1)} via {x^2 - x, y - x}
    std::vector<MultiPoly> gens{mp(2, {{{2, 0}, 1}, {{1, 0}, -1}}),
                                mp(2, {{{0, 1}, 1}, {{1, 0}, -1}})};
    auto p = elim::solve_system_zero_dim(gens, 2, opt);
    CHECK(p.degree() == 2);
    CHECK(real_count(p) == 2);
    CHECK(point_on_param({Rational(0), Rational(0)}, p));
    CHECK(point_on_param({Rational(1), Rational(1)}, p));
  }
  {  // positive dimensional input must fail
    std::vector<MultiPoly> gens{mp(2, {{{1, 0}, 1}})};
    CHECK_THROWS_AS(elim::solve_system_zero_dim(gens, 2, opt), elim::DimensionError);
  }
  {  // non-radical input: double point x^2 = 0, y = 0 -> degree 1 param
    std::vector<MultiPoly> gens{mp(2, {{{2, 0}, 1}}), mp(2, {{{0, 1}, 1}})};
    auto p = elim::solve_system_zero_dim(gens, 2, opt);
    CHECK(p.degree() == 1);
    CHECK(point_on_param({Rational(0), Rational(0)}, p));
  }
}

TEST_CASE("solve_zero_dim degree equals quotient dimension on radical input") {
  // circle intersect hyperbola xy = 1: 4 simple points = staircase count
  std::vector<MultiPoly> gens{mp(2, {{{2, 0}, 1}, {{0, 2}, 1}, {{0, 0}, -4}}),
                              mp(2, {{{1, 1}, 1}, {{0, 0}, -1}})};
  elim::SolveOptions opt;
  opt.seed = 31;
  auto p = elim::solve_system_zero_dim(gens, 2, opt);
  CHECK(p.degree() == 4);
  CHECK(validate(p).ok);
  for (auto& g : gens) CHECK(generator_vanishes(g, p));
  CHECK(real_count(p) == 4);
  // multiplicities collapse under the squarefree convention
  std::vector<MultiPoly> fat{mp(2, {{{2, 0}, 1}, {{0, 2}, 1}, {{0, 0}, -4}}),
                             mp(2, {{{2, 0}, 1}, {{0, 2}, 4}, {{0, 0}, -4}})};
  auto q = elim::solve_system_zero_dim(fat, 2, opt);
  CHECK(q.degree() == 2);
  CHECK(real_count(q) == 2);
}

TEST_CASE("solve_one_dim examples") {
  elim::SolveOptions opt;
  opt.seed = 77;
  {  // unit circle: degree 2 curve
    std::vector<MultiPoly> gens{mp(2, {{{2, 0}, 1}, {{0, 2}, 1}, {{0, 0}, -1}})};
    auto c = elim::solve_system_one_dim(gens, 2, opt);
    CHECK(c.degree() == 2);
    CHECK(validate(c).ok);
    CHECK(generator_vanishes(gens[0], c));
  }
  {  // line x2 = 0 in 2 vars: degree 1
    std::vector<MultiPoly> gens{mp(2, {{{0, 1}, 1}})};
    auto c = elim::solve_system_one_dim(gens, 2, opt);
    CHECK(c.degree() == 1);
    CHECK(validate(c).ok);
  }
  {  // dimension mismatch fails
    std::vector<MultiPoly> gens{mp(3, {{{1, 0, 0}, 1}})};
    CHECK_THROWS_AS(elim::solve_system_one_dim(gens, 3, opt), elim::DimensionError);
  }
}

TEST_CASE("solve_one_dim on a twisted cubic slice") {
  // space curve: y = x^2, z = x^3
  std::vector<MultiPoly> gens{mp(3, {{{0, 1, 0}, 1}, {{2, 0, 0}, -1}}),
                              mp(3, {{{0, 0, 1}, 1}, {{3, 0, 0}, -1}})};
  elim::SolveOptions opt;
  opt.seed = 123;
  auto c = elim::solve_system_one_dim(gens, 3, opt);
  CHECK(validate(c).ok);
  CHECK(c.degree() == 3);
  for (auto& g : gens) CHECK(generator_vanishes(g, c));
}

TEST_CASE("groebner resource limit fails with statistics") {
  elim::IdealPresentation I;
  I.variableCount = 3;
  I.generators = {mp(3, {{{3, 1, 0}, 1}, {{0, 2, 2}, 3}, {{1, 0, 0}, -2}}),
                  mp(3, {{{0, 3, 1}, 2}, {{2, 0, 1}, -1}, {{0, 1, 0}, 5}}),
                  mp(3, {{{1, 1, 2}, 1}, {{0, 0, 3}, 4}, {{0, 0, 1}, -7}})};
  elim::GroebnerOptions opt;
  opt.force_rational = true;
  opt.limits.max_pairs = 3;
  CHECK_THROWS_AS(elim::groebner(I, opt), ResourceLimit);
}

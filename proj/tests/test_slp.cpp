#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "polarpath/slp.hpp"

using namespace polarpath;

namespace {

std::vector<Rational> pt(std::initializer_list<long> xs) {
  std::vector<Rational> v;
  for (long x : xs) v.push_back(Rational(x));
  return v;
}

MultiPoly parse_term_sum(int n, std::vector<std::pair<std::vector<int>, long>> terms) {
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

TEST_CASE("slp computing x1^(2^m), m=3") {
  // gamma_1 = (*, -1, -1), gamma_k = (*, k-1, k-1) over two variables
  std::vector<Slp::Instr> ins;
  ins.push_back({Slp::OpKind::Mul, Rational(0), -1, -1});
  ins.push_back({Slp::OpKind::Mul, Rational(0), 1, 1});
  ins.push_back({Slp::OpKind::Mul, Rational(0), 2, 2});
  Slp g(2, ins, {3});
  CHECK(g.length() == 3);
  auto out = g.eval_rational(pt({2, 17}));
  CHECK(out[0] == Rational(256));
}

TEST_CASE("slp of the zero polynomial and x1+x2") {
  std::vector<Slp::Instr> zero_ins;
  zero_ins.push_back({Slp::OpKind::Const, Rational(0), 0, 0});
  Slp z(2, zero_ins, {1});
  CHECK(z.eval_rational(pt({5, -3}))[0] == Rational(0));

  std::vector<Slp::Instr> add_ins;
  add_ins.push_back({Slp::OpKind::Add, Rational(0), -1, 0});
  Slp s(2, add_ins, {1});
  CHECK(s.eval_rational(pt({1, 1}))[0] == Rational(2));
}

TEST_CASE("slp_from_polys matches direct evaluation at random points") {
  // x1^2 compiles to a single multiply
  MultiPoly sq = parse_term_sum(1, {{{2}, 1}});
  Slp g = slp_from_polys({sq});
  CHECK(g.length() == 1);

  // paper example polynomial over 4 vars
  MultiPoly f = parse_term_sum(4, {{{3, 0, 0, 0}, 1}, {{0, 3, 0, 0}, 1},
                                   {{0, 0, 3, 0}, 1}, {{0, 0, 0, 3}, 1},
                                   {{1, 0, 0, 0}, -1}, {{0, 1, 0, 0}, -1},
                                   {{0, 0, 1, 0}, -1}, {{0, 0, 0, 1}, -1},
                                   {{0, 0, 0, 0}, -1}});
  Slp gf = slp_from_polys({f});
  CHECK(gf.eval_rational(pt({1, 1, 1, 1}))[0] == Rational(-1));
  CHECK(gf.length() <= 3 * (size_t)f.term_count() * (size_t)f.degree());

  Rng rng(5);
  for (int t = 0; t < 20; ++t) {
    std::vector<Rational> x;
    for (int i = 0; i < 4; ++i)
      x.push_back(rat(rng.integer(-10, 10), rng.integer(1, 10)));
    CHECK(gf.eval_rational(x)[0] == eval_at(f, x));
  }
  CHECK_THROWS_AS(slp_from_polys({}), InvalidInput);
}

TEST_CASE("slp_to_polys round trip") {
  MultiPoly f = parse_term_sum(3, {{{2, 1, 0}, 3}, {{0, 0, 1}, -2}, {{0, 0, 0}, 5}});
  auto back = slp_to_polys(slp_from_polys({f}));
  REQUIRE(back.size() == 1);
  CHECK(back[0] == f);
}

TEST_CASE("phigen values and length") {
  {  // alpha = 0, n = 2, point (1,2): phi1 = 5, phi2 = 0
    std::vector<Rational> alpha(4, Rational(0));
    Slp g = phigen(alpha);
    auto out = g.eval_rational(pt({1, 2}));
    CHECK(out[0] == Rational(5));
    CHECK(out[1] == Rational(0));
  }
  {  // paper-like alpha1 = e1 - e4 over n=4 at (1,0,0,1): phi1 = 2
    std::vector<Rational> alpha(8, Rational(0));
    alpha[0] = 1;
    alpha[3] = -1;
    Slp g = phigen(alpha);
    auto out = g.eval_rational(pt({1, 0, 0, 1}));
    CHECK(out[0] == Rational(2));
  }
  {  // n=1, alpha=(3,5), point (2): (phi1, phi2) = (10, 10)
    Slp g = phigen({Rational(3), Rational(5)});
    auto out = g.eval_rational(pt({2}));
    CHECK(out[0] == Rational(10));
    CHECK(out[1] == Rational(10));
  }
  Rng rng(11);
  for (int n = 1; n <= 64; ++n) {
    std::vector<Rational> alpha;
    for (int i = 0; i < 2 * n; ++i) alpha.push_back(Rational(rng.integer(-99, 99)));
    Slp g = phigen(alpha);
    CHECK(g.length() <= (size_t)(6 * n - 2));
  }
}

TEST_CASE("inc_slp length formula and evaluation") {
  Rng rng(3);
  // length check across random shapes: E + E' + i exactly
  for (int trial = 0; trial < 1000; ++trial) {
    int n = 1 + (int)(rng.next() % 4);
    std::vector<MultiPoly> fs;
    int cnt = 1 + (int)(rng.next() % 2);
    for (int k = 0; k < cnt; ++k) {
      std::vector<MultiPoly::Term> ts;
      for (int t = 0; t < 3; ++t) {
        Monomial m = Monomial::one(n);
        for (int i = 0; i < n; ++i) {
          m.e[i] = (uint16_t)(rng.next() % 3);
          m.deg += m.e[i];
        }
        ts.push_back({m, Rational(rng.integer(-5, 5))});
      }
      MultiPoly f = MultiPoly::from_terms(n, std::move(ts));
      if (f.is_zero()) f = MultiPoly::constant(n, Rational(1));
      fs.push_back(f);
    }
    Slp gamma = slp_from_polys(fs);
    std::vector<Rational> alpha;
    for (int i = 0; i < 2 * n; ++i) alpha.push_back(Rational(rng.integer(-9, 9)));
    Slp gphi = phigen(alpha);
    int i = 1 + (int)(rng.next() % 2);
    Slp inc = inc_slp(gamma, gphi, i);
    CHECK(inc.length() == gamma.length() + gphi.length() + (size_t)i);
    CHECK(inc.input_count() == n + i);
  }

  // on the incidence variety the trailing outputs vanish
  MultiPoly f = parse_term_sum(2, {{{2, 0}, 1}, {{0, 2}, 1}, {{0, 0}, -1}});
  Slp gamma = slp_from_polys({f});
  Slp gphi = phigen({Rational(1), Rational(0), Rational(0), Rational(2)});
  Slp inc = inc_slp(gamma, gphi, 2);
  std::vector<Rational> x = pt({3, -2});
  auto phi = gphi.eval_rational(x);
  std::vector<Rational> exa{phi[0], phi[1], x[0], x[1]};
  auto out = inc.eval_rational(exa);
  REQUIRE(out.size() == 3);
  CHECK(out[0] == eval_at(f, x));
  CHECK(out[1] == Rational(0));
  CHECK(out[2] == Rational(0));
  // shifted e gives the shifted tail
  std::vector<Rational> exb{phi[0] + 1, phi[1], x[0], x[1]};
  auto out2 = inc.eval_rational(exb);
  CHECK(out2[1] == Rational(-1));
  CHECK(out2[2] == Rational(0));
}

TEST_CASE("jac_slp matches symbolic derivatives") {
  {  // d(x1^2)/dx1 = 2 x1, at 3 -> 6
    MultiPoly f = parse_term_sum(1, {{{2}, 1}});
    Slp g = jac_slp(slp_from_polys({f}));
    auto out = g.eval_rational(pt({3}));
    REQUIRE(out.size() == 2);
    CHECK(out[1] == Rational(6));
  }
  {  // gradient of x1 x2 + x2 at (1,1) is (1, 2)
    MultiPoly f = parse_term_sum(2, {{{1, 1}, 1}, {{0, 1}, 1}});
    Slp g = jac_slp(slp_from_polys({f}));
    auto out = g.eval_rational(pt({1, 1}));
    CHECK(out[1] == Rational(1));
    CHECK(out[2] == Rational(2));
  }
  {  // gradient of sum(x_i^3 - x_i) - 1 at ones is (2,2,2,2)
    MultiPoly f = parse_term_sum(4, {{{3, 0, 0, 0}, 1}, {{0, 3, 0, 0}, 1},
                                     {{0, 0, 3, 0}, 1}, {{0, 0, 0, 3}, 1},
                                     {{1, 0, 0, 0}, -1}, {{0, 1, 0, 0}, -1},
                                     {{0, 0, 1, 0}, -1}, {{0, 0, 0, 1}, -1},
                                     {{0, 0, 0, 0}, -1}});
    Slp g = jac_slp(slp_from_polys({f}));
    auto out = g.eval_rational(pt({1, 1, 1, 1}));
    for (int i = 1; i <= 4; ++i) CHECK(out[i] == Rational(2));
  }
  // derivatives equal symbolic expansion exactly at random points
  Rng rng(17);
  for (int trial = 0; trial < 25; ++trial) {
    int n = 2 + (int)(rng.next() % 3);
    std::vector<MultiPoly::Term> ts;
    for (int t = 0; t < 5; ++t) {
      Monomial m = Monomial::one(n);
      for (int i = 0; i < n; ++i) {
        m.e[i] = (uint16_t)(rng.next() % 4);
        m.deg += m.e[i];
      }
      ts.push_back({m, Rational(rng.integer(-7, 7))});
    }
    MultiPoly f = MultiPoly::from_terms(n, std::move(ts));
    if (f.is_zero()) continue;
    Slp base = slp_from_polys({f});
    Slp g = jac_slp(base);
    std::vector<Rational> x;
    for (int i = 0; i < n; ++i) x.push_back(rat(rng.integer(-6, 6), rng.integer(1, 5)));
    auto out = g.eval_rational(x);
    for (int i = 0; i < n; ++i) CHECK(out[1 + i] == eval_at(f.derivative(i), x));
  }
}

TEST_CASE("slp json round trip") {
  MultiPoly f = parse_term_sum(2, {{{2, 0}, 1}, {{0, 1}, -3}});
  Slp g = slp_from_polys({f});
  std::string j = g.to_json();
  Slp h = Slp::from_json(j);
  CHECK(h.to_json() == j);
  CHECK(h.eval_rational(pt({4, 5})) == g.eval_rational(pt({4, 5})));
}

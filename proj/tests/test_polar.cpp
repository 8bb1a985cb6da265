#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "polarpath/polar.hpp"

using namespace polarpath;
using namespace polarpath::polar;

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

MultiPoly paper_f() {
  // sum over 4 vars of (x_i^3 - x_i), minus 1
  std::vector<MultiPoly::Term> ts;
  for (int i = 0; i < 4; ++i) {
    Monomial m3 = Monomial::one(4);
    m3.e[i] = 3;
    m3.deg = 3;
    ts.push_back({m3, Rational(1)});
    Monomial m1 = Monomial::one(4);
    m1.e[i] = 1;
    m1.deg = 1;
    ts.push_back({m1, Rational(-1)});
  }
  ts.push_back({Monomial::one(4), Rational(-1)});
  return MultiPoly::from_terms(4, std::move(ts));
}

Slp paper_phi() {
  // phi1 = |x|^2 + x1 - x4, phi2 = x2
  std::vector<Rational> alpha(8, Rational(0));
  alpha[0] = 1;
  alpha[3] = -1;
  alpha[4 + 1] = 1;  // phi2 = x2
  return phigen(alpha);
}

MultiPoly sphere3() {
  return mp(3, {{{2, 0, 0}, 1}, {{0, 2, 0}, 1}, {{0, 0, 2}, 1}, {{0, 0, 0}, -1}});
}

}  // namespace

TEST_CASE("singular points of the paper example are empty") {
  PolarOptions opt;
  opt.seed = 3;
  Slp gamma = slp_from_polys({paper_f()});
  auto sing = singular_points(gamma, opt);
  CHECK(sing.is_empty());
}

TEST_CASE("singular points of the cone are the origin") {
  PolarOptions opt;
  opt.seed = 4;
  MultiPoly cone = mp(3, {{{2, 0, 0}, 1}, {{0, 2, 0}, 1}, {{0, 0, 2}, 1}});
  auto sing = singular_points(slp_from_polys({cone}), opt);
  CHECK(sing.degree() == 1);
  CHECK(point_on_param({Rational(0), Rational(0), Rational(0)}, sing));
}

TEST_CASE("singular points of the sphere are empty") {
  PolarOptions opt;
  opt.seed = 5;
  auto sing = singular_points(slp_from_polys({sphere3()}), opt);
  CHECK(sing.is_empty());
}

TEST_CASE("build_h_minors shapes and the projection sign reduction") {
  // hypersurface in 4 vars, i = 2: sequence length n-c-i+1 = 2
  MultiPoly f = paper_f();
  auto phis = slp_to_polys(paper_phi());
  MinorSelection sel;
  sel.excluded_h_row = 0;
  sel.cols = {0, 1};
  auto ms = build_h_minors({f}, phis, 2, sel);
  CHECK(ms.minors.size() == 2);
  // i = n - c + 1 gives the empty sequence (W = V case)
  MinorSelection sel4;
  sel4.excluded_h_row = 0;
  sel4.cols = {0, 1, 2, 3};
  std::vector<MultiPoly> phis4 = {phis[0], phis[1], mp(4, {{{0, 0, 1, 0}, 1}}),
                                  mp(4, {{{0, 0, 0, 1}, 1}})};
  auto ms4 = build_h_minors({f}, phis4, 4, sel4);
  CHECK(ms4.minors.empty());

  // projection case: phi = (x1, ..., xi) reduces, up to sign (-1)^{ic}, to
  // minors of the truncated Jacobian (Lemma 2.4)
  std::vector<MultiPoly> proj = {mp(4, {{{1, 0, 0, 0}, 1}}), mp(4, {{{0, 1, 0, 0}, 1}})};
  MinorSelection psel;
  psel.excluded_h_row = 0;
  psel.cols = {0, 1};  // m'' = the identity block of jac(proj)
  auto pm = build_h_minors({f}, proj, 2, psel);
  REQUIRE(pm.minors.size() == 2);
  // truncated jacobian: d f / d x_j for j in {2, 3}; sign (-1)^{ic} = (-1)^2 = 1
  CHECK(pm.minors[0] == f.derivative(2));
  CHECK(pm.minors[1] == f.derivative(3));
}

TEST_CASE("w_lag type arithmetic and eval consistency") {
  // incidence-lifted paper example: n = 6, p = 3, i = 2 -> ((6,3),(3,5),0)
  Slp gamma = slp_from_polys({paper_f()});
  Slp inc = inc_slp(gamma, paper_phi(), 2);
  LagrangeSystem L;
  L.gamma = inc;
  L.qParam = empty_zero_dim(0);
  L.sParam = empty_zero_dim(6);
  L.type = LagrangeType{6, 0, 3, 0, 0};
  std::vector<Rational> u{Rational(1), Rational(0), Rational(0)};
  LagrangeSystem W = w_lag(L, u, 2);
  CHECK(W.type.n == 6);
  CHECK(W.type.m == 3);
  CHECK(W.type.p == 3);
  CHECK(W.type.q == 5);
  CHECK(W.type.e == 0);
  // with u = e1 the last equation is L_1 - 1
  auto gens = lagrange_generators(W);
  REQUIRE(gens.size() == 8);  // p + q = 3 + 5
  MultiPoly want = mp(9, {{{0, 0, 0, 0, 0, 0, 1, 0, 0}, 1}, {std::vector<int>(9, 0), -1}});
  CHECK(gens.back() == want);
  // at a point (e, x, l) with l . jac = 0 and u . l = 1 all new outputs vanish:
  // build such a point for the sphere instead (easier to solve by hand)
}

TEST_CASE("w_lag eval at a hand-built critical configuration") {
  // sphere, phi1 = |x|^2 + x1 (alpha1 = e1, alpha2 = e2 for phi2 = x2)
  Slp gamma = slp_from_polys({sphere3()});
  std::vector<Rational> alpha(6, Rational(0));
  alpha[0] = 1;
  alpha[3 + 1] = 1;
  Slp gphi = phigen(alpha);
  Slp inc = inc_slp(gamma, gphi, 1);
  LagrangeSystem L{inc, empty_zero_dim(0), empty_zero_dim(4), LagrangeType{4, 0, 2, 0, 0}};
  std::vector<Rational> u{Rational(1), Rational(1)};
  LagrangeSystem W = w_lag(L, u, 1);
  // x = (1,0,0): critical point of phi1 on the sphere; jacobian rows there:
  // d f = (2,0,0), d(phi1 - e1) = (3,0,0): l = (a, b) with 2a + 3b = 0 scaled
  // to u.l = 1: a + b = 1 -> a = 3, b = -2... solve 2a+3b=0, a+b=1: a=3, b=-2
  std::vector<Rational> pt{Rational(2) /* e1 = phi1(x) = 1+1 */, Rational(1),
                           Rational(0),  Rational(0),
                           Rational(3),  Rational(-2)};
  auto vals = W.gamma.eval_rational(pt);
  for (auto& v : vals) CHECK(v == Rational(0));
}

TEST_CASE("f_lag types and lying-over") {
  Slp gamma = slp_from_polys({sphere3()});
  LagrangeSystem L{gamma, empty_zero_dim(0), empty_zero_dim(3), LagrangeType{3, 0, 1, 0, 0}};
  Rng rng(8);
  auto qpp = from_rational_points(1, {{Rational(0)}}, rng);
  auto spp = empty_zero_dim(3);
  LagrangeSystem F = f_lag(L, qpp, spp);
  CHECK(F.type.e == 1);
  CHECK(F.type.n == 3);
  // empty base defines the empty set
  LagrangeSystem FE = f_lag(L, empty_zero_dim(1), empty_zero_dim(3));
  auto gens = lagrange_generators(FE);
  bool has_one = false;
  for (auto& g : gens)
    if (g.is_constant() && !g.is_zero()) has_one = true;
  CHECK(has_one);
  // lying-over violation: S'' projecting outside Z(Q'')
  auto bad_s = from_rational_points(3, {{Rational(5), Rational(0), Rational(0)}}, rng);
  CHECK_THROWS_AS(f_lag(L, qpp, bad_s), InvalidInput);
}

TEST_CASE("crit on the sphere finds the two axis points") {
  // phi1 = |x|^2 + x1: K(phi1, sphere) = {(1,0,0), (-1,0,0)}
  Slp gamma = slp_from_polys({sphere3()});
  std::vector<Rational> alpha(6, Rational(0));
  alpha[0] = 1;
  alpha[3 + 1] = 1;
  Slp gphi = phigen(alpha);
  for (Route route : {Route::Minors, Route::Lagrange}) {
    PolarOptions opt;
    opt.seed = 11;
    opt.route = route;
    DegreeLedger ledger;
    auto k = crit(gamma, gphi, empty_zero_dim(3), opt, &ledger);
    CHECK(k.degree() == 2);
    CHECK(real_count(k) == 2);
    CHECK(point_on_param({Rational(1), Rational(0), Rational(0)}, k));
    CHECK(point_on_param({Rational(-1), Rational(0), Rational(0)}, k));
    REQUIRE(ledger.size() == 1);
    CHECK(ledger[0].ok);
  }
  // S nonempty, critical locus still finite: Z(out) contains Z(S)
  PolarOptions opt;
  opt.seed = 12;
  Rng rng(19);
  auto S = from_rational_points(3, {{Rational(0), Rational(0), Rational(1)}}, rng);
  auto k2 = crit(gamma, gphi, S, opt);
  CHECK(k2.degree() == 3);
  CHECK(points_subset(S, k2));
}

TEST_CASE("solve_polar on the sphere gives a conic, both routes agree") {
  Slp gamma = slp_from_polys({sphere3()});
  std::vector<Rational> alpha{Rational(1), Rational(0), Rational(0),
                              Rational(0), Rational(1), Rational(0)};
  Slp gphi = phigen(alpha);
  OneDimParam byroute[2];
  int idx = 0;
  for (Route route : {Route::Minors, Route::Lagrange}) {
    PolarOptions opt;
    opt.seed = 21;
    opt.route = route;
    DegreeLedger ledger;
    auto w2 = solve_polar(gamma, gphi, empty_zero_dim(3), opt, &ledger);
    CHECK(validate(w2).ok);
    CHECK(w2.degree() == 2);
    CHECK(ledger[0].ok);
    byroute[idx++] = w2;
  }
  // identical zero sets via exact mutual coverage
  CHECK(curve_covers(byroute[0], byroute[1]));
  CHECK(curve_covers(byroute[1], byroute[0]));
}

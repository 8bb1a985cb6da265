#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "polarpath/realroot.hpp"
#include "polarpath/unipoly.hpp"

using namespace polarpath;

namespace {

QUPoly upoly(std::initializer_list<long> asc) {
  QUPoly f;
  for (long c : asc) f.c.push_back(Rational(c));
  f.norm();
  return f;
}

// squarefree part of a univariate over Q: monic f / gcd(f, f')
QUPoly squarefree_part_q(const QUPoly& f) {
  if (f.is_zero()) throw InvalidInput("zero polynomial");
  return upoly_squarefree(f);
}

}  // namespace

TEST_CASE("rational parse/print round trip") {
  CHECK(rational_to_string(parse_rational("-7/4")) == "-7/4");
  CHECK(rational_to_string(parse_rational("12")) == "12");
  CHECK(parse_rational("4/6") == Rational(2, 3));
  CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
}

TEST_CASE("crt and rational reconstruction") {
  Int x = crt_pair(3, 7, 4, 11);
  CHECK(x % 7 == 3);
  CHECK(x % 11 == 4);
  // reconstruct 22/7 mod a big modulus
  Int m = Int(1000003) * Int(1000033);
  Int inv7;
  mpz_invert(inv7.get_mpz_t(), Int(7).get_mpz_t(), m.get_mpz_t());
  Int a = (22 * inv7) % m;
  Rational out;
  REQUIRE(rational_reconstruct(a, m, out));
  CHECK(out == rat(22, 7));
}

TEST_CASE("squarefree part examples") {
  // u^2 -> u (repeated root collapses)
  CHECK(squarefree_part_q(upoly({0, 0, 1})) == upoly({0, 1}));
  // u^2 - 1 stays
  CHECK(squarefree_part_q(upoly({-1, 0, 1})) == upoly({-1, 0, 1}));
  // 2u^3 - 2u^2 -> u^2 - u  (gcd(f, f') = u by hand Euclid)
  CHECK(squarefree_part_q(upoly({0, 0, -2, 2})) == upoly({0, -1, 1}));
  CHECK_THROWS_AS(squarefree_part_q(QUPoly()), InvalidInput);
}

TEST_CASE("sturm real root counts") {
  // u^2 + 1 -> 0
  CHECK(sturm_count_all(sturm_chain(zz_from_upoly(upoly({1, 0, 1})))) == 0);
  // u^2 - 2 -> 2
  CHECK(sturm_count_all(sturm_chain(zz_from_upoly(upoly({-2, 0, 1})))) == 2);
  // u^3 - u -> 3
  CHECK(sturm_count_all(sturm_chain(zz_from_upoly(upoly({0, -1, 0, 1})))) == 3);
}

TEST_CASE("root isolation basics") {
  // u - 1/2 at precision 1/100
  QUPoly f;
  f.c = {rat(-1, 2), Rational(1)};
  ZZPoly z = zz_from_upoly(f);
  auto roots = isolate_roots(z);
  REQUIRE(roots.size() == 1);
  refine_root(z, roots[0], rat(1, 100));
  CHECK(roots[0].lo <= rat(1, 2));
  CHECK(rat(1, 2) <= roots[0].hi);
  CHECK(roots[0].width() <= rat(1, 100));
}

TEST_CASE("root isolation sqrt2 to 1e-6") {
  ZZPoly z = zz_from_upoly(upoly({-2, 0, 1}));
  auto roots = isolate_roots(z);
  REQUIRE(roots.size() == 2);
  Rational eps(1, 1000000);
  for (auto& r : roots) refine_root(z, r, eps);
  // the positive root brackets sqrt(2): lo^2 <= 2 <= hi^2
  auto& pos = roots[1];
  CHECK(sgn(pos.lo) > 0);
  CHECK(pos.lo * pos.lo <= Rational(2));
  CHECK(Rational(2) <= pos.hi * pos.hi);
  CHECK(pos.width() <= eps);
  // u^2 + 1 -> no intervals
  CHECK(isolate_roots(zz_from_upoly(upoly({1, 0, 1}))).empty());
}

TEST_CASE("root isolation with rational roots and clustering") {
  // (u)(u-1)(u+1)(u-1/2)(u-255/256): all roots found, disjoint, exact dyadics
  QUPoly f = upoly({0, 1});
  auto mul_lin = [&](const Rational& r) {
    QUPoly lin;
    lin.c = {-r, Rational(1)};
    f = f * lin;
  };
  mul_lin(Rational(1));
  mul_lin(Rational(-1));
  mul_lin(rat(1, 2));
  mul_lin(rat(255, 256));
  ZZPoly z = zz_from_upoly(f);
  auto roots = isolate_roots(z);
  REQUIRE(roots.size() == 5);
  for (size_t i = 0; i + 1 < roots.size(); ++i) CHECK(roots[i].hi < roots[i + 1].lo);
  int count = sturm_count_all(sturm_chain(z));
  CHECK(count == 5);
}

TEST_CASE("sturm count agrees with isolation on random squarefree polys") {
  Rng rng(42);
  for (int trial = 0; trial < 30; ++trial) {
    QUPoly f;
    int d = 2 + (int)(rng.next() % 7);
    for (int i = 0; i <= d; ++i) f.c.push_back(Rational(rng.integer(-9, 9)));
    f.norm();
    if (f.deg() < 1) continue;
    f = upoly_squarefree(f);
    ZZPoly z = zz_from_upoly(f);
    if (z.deg() < 1) continue;
    CHECK(sturm_count_all(sturm_chain(z)) == (int)isolate_roots(z).size());
  }
}

TEST_CASE("zp resultant and interpolation") {
  uint32_t p = 1073741789;  // prime
  // res(x^2-1, x-2) = (2^2-1) = 3
  ZpUPoly a, b;
  a.c = {Zp(p - 1, p), Zp(0, p), Zp(1, p)};
  b.c = {Zp(p - 2, p), Zp(1, p)};
  CHECK(zp_resultant(a, b).v == 3);
  std::vector<Zp> xs{Zp(0, p), Zp(1, p), Zp(2, p)};
  std::vector<Zp> ys{Zp(1, p), Zp(2, p), Zp(5, p)};  // 1 + x^2
  ZpUPoly f = zp_interpolate(xs, ys);
  REQUIRE(f.deg() == 2);
  CHECK(f.c[0].v == 1);
  CHECK(f.c[1].v == 0);
  CHECK(f.c[2].v == 1);
}

TEST_CASE("modular image of a product equals product of images") {
  Rng rng(7);
  PrimeStream ps(99);
  for (int trial = 0; trial < 10; ++trial) {
    int n = 3;
    auto rand_poly = [&](int terms) {
      std::vector<MultiPoly::Term> ts;
      for (int t = 0; t < terms; ++t) {
        Monomial m = Monomial::one(n);
        for (int i = 0; i < n; ++i) {
          m.e[i] = (uint16_t)(rng.next() % 3);
          m.deg += m.e[i];
        }
        ts.push_back({m, rat(rng.integer(-20, 20), rng.integer(1, 7))});
      }
      return MultiPoly::from_terms(n, std::move(ts));
    };
    MultiPoly f = rand_poly(4), g = rand_poly(4);
    MultiPoly prod = f * g;
    uint32_t p = ps.next();
    ModPoly fp(n), gp(n), pp(n);
    REQUIRE(reduce_poly_mod(f, p, fp));
    REQUIRE(reduce_poly_mod(g, p, gp));
    REQUIRE(reduce_poly_mod(prod, p, pp));
    CHECK(fp * gp == pp);
  }
}

TEST_CASE("bivariate division by monic in u") {
  // omega = u^2 - v, f = u^3 -> remainder u*v
  QBPoly omega;
  omega.cu.resize(3);
  omega.cu[0].c = {Rational(0), Rational(-1)};
  omega.cu[1] = QUPoly();
  omega.cu[2] = QUPoly::constant(Rational(1));
  QBPoly f;
  f.cu.resize(4);
  f.cu[3] = QUPoly::constant(Rational(1));
  f.norm();
  omega.norm();
  QBPoly r = f.mod_u(omega);
  REQUIRE(r.deg_u() == 1);
  CHECK(r.cu[1].c.size() == 2);
  CHECK(r.cu[1].c[1] == Rational(1));
}

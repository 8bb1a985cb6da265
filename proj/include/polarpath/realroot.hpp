#ifndef POLARPATH_REALROOT_HPP
#define POLARPATH_REALROOT_HPP

#include "polarpath/bipoly.hpp"

namespace polarpath {

// Dense integer polynomial for the trusted real-root path.
struct ZZPoly {
  std::vector<Int> c;

  void norm() {
    while (!c.empty() && c.back() == 0) c.pop_back();
  }
  bool is_zero() const { return c.empty(); }
  int deg() const { return static_cast<int>(c.size()) - 1; }

  ZZPoly derivative() const;
  // exact sign of f(x) for rational x
  int sign_at(const Rational& x) const;
  Rational eval(const Rational& x) const;
  ZZPoly primitive() const;  // divide by integer content, keep sign
};

ZZPoly zz_from_upoly(const QUPoly& f);  // clears denominators (same roots)
QUPoly upoly_from_zz(const ZZPoly& f);

// Sturm chain of f (integer pseudo-remainders with positive multipliers).
std::vector<ZZPoly> sturm_chain(const ZZPoly& f);
// number of distinct real roots (f squarefree not required here; Sturm counts
// distinct roots regardless)
int sturm_count_all(const std::vector<ZZPoly>& chain);
// distinct roots in the half-open interval (a, b]
int sturm_count(const std::vector<ZZPoly>& chain, const Rational& a, const Rational& b);

struct RootInterval {
  Rational lo, hi;   // lo <= hi; root in [lo, hi]; open or exact
  bool exact = false;  // true when lo == hi is the root itself

  Rational mid() const { return (lo + hi) / 2; }
  Rational width() const { return hi - lo; }
};

// Isolating intervals for the distinct real roots of a squarefree f,
// sorted ascending, pairwise disjoint (Descartes/bisection, exact).
std::vector<RootInterval> isolate_roots(const ZZPoly& f);

// Bisection refinement until width <= eps (no-op on exact roots).
void refine_root(const ZZPoly& f, RootInterval& iv, const Rational& eps);

// interval arithmetic with exact rational endpoints
struct QI {
  Rational lo, hi;

  QI() : lo(0), hi(0) {}
  QI(const Rational& a) : lo(a), hi(a) {}
  QI(const Rational& a, const Rational& b) : lo(a), hi(b) {}

  bool contains_zero() const { return sgn(lo) <= 0 && sgn(hi) >= 0; }
  bool contains(const Rational& x) const { return lo <= x && x <= hi; }
  Rational width() const { return hi - lo; }
  Rational mid() const { return (lo + hi) / 2; }

  QI operator+(const QI& o) const { return QI(lo + o.lo, hi + o.hi); }
  QI operator-(const QI& o) const { return QI(lo - o.hi, hi - o.lo); }
  QI operator-() const { return QI(-hi, -lo); }
  QI operator*(const QI& o) const {
    Rational a = lo * o.lo, b = lo * o.hi, c = hi * o.lo, d = hi * o.hi;
    return QI(std::min(std::min(a, b), std::min(c, d)),
              std::max(std::max(a, b), std::max(c, d)));
  }
  QI operator*(const Rational& k) const {
    return sgn(k) >= 0 ? QI(lo * k, hi * k) : QI(hi * k, lo * k);
  }
  // division by an interval that excludes zero
  QI operator/(const QI& o) const {
    if (o.contains_zero()) throw InvalidInput("interval division by zero");
    Rational a = lo / o.lo, b = lo / o.hi, c = hi / o.lo, d = hi / o.hi;
    return QI(std::min(std::min(a, b), std::min(c, d)),
              std::max(std::max(a, b), std::max(c, d)));
  }
  bool disjoint(const QI& o) const { return hi < o.lo || o.hi < lo; }
  bool overlaps(const QI& o) const { return !disjoint(o); }
};

QI qi_eval(const QUPoly& f, const QI& x);
QI qi_eval2(const QBPoly& f, const QI& u, const QI& v);

}  // namespace polarpath

#endif

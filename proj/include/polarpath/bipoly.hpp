#ifndef POLARPATH_BIPOLY_HPP
#define POLARPATH_BIPOLY_HPP

#include "polarpath/unipoly.hpp"

namespace polarpath {

// Dense bivariate polynomial in (u, v): cu[i] is the v-polynomial multiplying
// u^i. Trailing zero rows stripped.
template <class C>
struct BPoly {
  std::vector<UPoly<C>> cu;

  BPoly() = default;

  static BPoly zero() { return BPoly(); }
  static BPoly constant(const C& c) {
    BPoly r;
    if (!coeff_is_zero(c)) r.cu.push_back(UPoly<C>::constant(c));
    return r;
  }
  static BPoly from_u(const UPoly<C>& f) {
    BPoly r;
    r.cu.reserve(f.c.size());
    for (auto& c : f.c) r.cu.push_back(UPoly<C>::constant(c));
    r.norm();
    return r;
  }
  static BPoly from_v(const UPoly<C>& f) {
    BPoly r;
    r.cu.push_back(f);
    r.norm();
    return r;
  }

  void norm() {
    while (!cu.empty() && cu.back().is_zero()) cu.pop_back();
  }
  bool is_zero() const { return cu.empty(); }
  int deg_u() const { return static_cast<int>(cu.size()) - 1; }
  int deg_v() const {
    int d = -1;
    for (auto& f : cu) d = std::max(d, f.deg());
    return d;
  }
  int total_deg() const {
    int d = -1;
    for (size_t i = 0; i < cu.size(); ++i)
      if (!cu[i].is_zero()) d = std::max<int>(d, static_cast<int>(i) + cu[i].deg());
    return d;
  }
  bool monic_in_u() const {
    if (cu.empty() || cu.back().deg() != 0) return false;
    const C& lc = cu.back().c[0];
    return coeff_is_zero(lc - coeff_from_long(lc, 1));
  }

  bool operator==(const BPoly& o) const { return cu == o.cu; }
  bool operator!=(const BPoly& o) const { return !(cu == o.cu); }

  BPoly operator-() const {
    BPoly r = *this;
    for (auto& f : r.cu) f = -f;
    return r;
  }
  BPoly operator+(const BPoly& o) const {
    BPoly r;
    r.cu.resize(std::max(cu.size(), o.cu.size()));
    for (size_t i = 0; i < r.cu.size(); ++i) {
      if (i < cu.size() && i < o.cu.size())
        r.cu[i] = cu[i] + o.cu[i];
      else if (i < cu.size())
        r.cu[i] = cu[i];
      else
        r.cu[i] = o.cu[i];
    }
    r.norm();
    return r;
  }
  BPoly operator-(const BPoly& o) const { return *this + (-o); }
  BPoly operator*(const BPoly& o) const {
    if (is_zero() || o.is_zero()) return BPoly();
    BPoly r;
    r.cu.resize(cu.size() + o.cu.size() - 1);
    for (size_t i = 0; i < cu.size(); ++i) {
      if (cu[i].is_zero()) continue;
      for (size_t j = 0; j < o.cu.size(); ++j) r.cu[i + j] = r.cu[i + j] + cu[i] * o.cu[j];
    }
    r.norm();
    return r;
  }
  BPoly operator*(const C& k) const {
    BPoly r = *this;
    for (auto& f : r.cu) f = f * k;
    r.norm();
    return r;
  }

  BPoly derivative_u() const {
    BPoly r;
    if (cu.size() <= 1) return r;
    r.cu.resize(cu.size() - 1);
    for (size_t i = 1; i < cu.size(); ++i) {
      if (cu[i].is_zero()) continue;
      C k = coeff_from_long(cu[i].lead(), (long)i);
      r.cu[i - 1] = cu[i] * k;
    }
    r.norm();
    return r;
  }
  BPoly derivative_v() const {
    BPoly r = *this;
    for (auto& f : r.cu) f = f.derivative();
    r.norm();
    return r;
  }

  UPoly<C> eval_v(const C& v0) const {  // univariate in u
    UPoly<C> r;
    r.c.resize(cu.size());
    for (size_t i = 0; i < cu.size(); ++i)
      r.c[i] = cu[i].is_zero() ? v0 - v0 : cu[i].eval(v0);
    r.norm();
    return r;
  }
  UPoly<C> eval_u(const C& u0) const {  // univariate in v
    UPoly<C> acc;
    for (size_t i = cu.size(); i-- > 0;) acc = acc * UPoly<C>::constant(u0) + cu[i];
    return acc;
  }
  C eval(const C& u0, const C& v0) const { return eval_v(v0).eval(u0); }

  // remainder/quotient by a divisor monic in u (exact in C[v][u])
  static void divrem_u(const BPoly& a, const BPoly& b, BPoly& q, BPoly& r);
  BPoly mod_u(const BPoly& b) const {
    BPoly q, r;
    divrem_u(*this, b, q, r);
    return r;
  }
};

using QBPoly = BPoly<Rational>;
using ZpBPoly = BPoly<Zp>;

template <class C>
void BPoly<C>::divrem_u(const BPoly& a, const BPoly& b, BPoly& q, BPoly& r) {
  if (b.is_zero()) throw InvalidInput("BPoly division by zero");
  if (!(b.cu.back().deg() == 0))
    throw InvalidInput("BPoly::divrem_u requires divisor monic in u");
  C lc = b.cu.back().c[0];
  C lcinv = inv_coeff(lc);
  r = a;
  q = BPoly();
  int db = b.deg_u();
  if (a.deg_u() < db) return;
  q.cu.resize(a.deg_u() - db + 1);
  while (!r.is_zero() && r.deg_u() >= db) {
    int k = r.deg_u() - db;
    UPoly<C> f = r.cu.back() * lcinv;
    q.cu[k] = q.cu[k] + f;
    for (int i = 0; i <= db; ++i) r.cu[i + k] = r.cu[i + k] - f * b.cu[i];
    r.norm();
  }
  q.norm();
}

// interpolation in v over Z/p: reconstruct a BPoly from evaluations at
// distinct v-points, each a univariate polynomial in u
ZpBPoly zp_binterpolate(const std::vector<Zp>& vs, const std::vector<ZpUPoly>& fs);

// resultant in u of two bivariate polynomials over Z/p via
// evaluation-interpolation; requires lc_u constant (monic-in-u inputs ok)
ZpUPoly zp_resultant_u(const ZpBPoly& a, const ZpBPoly& b, int deg_bound);

bool reduce_bpoly_mod(const QBPoly& f, uint32_t p, ZpBPoly& out);

// 2-variable MultiPoly (vars u=0, v=1) conversions
QBPoly to_bpoly(const MultiPoly& f);
MultiPoly to_multipoly2(const QBPoly& f);

// substitute (u, v) := (linear forms in x) building a MultiPoly over n vars:
// result = f(l(x), l2(x))
MultiPoly bpoly_compose_linear(const QBPoly& f, const std::vector<Rational>& l,
                               const std::vector<Rational>& l2);

}  // namespace polarpath

#endif

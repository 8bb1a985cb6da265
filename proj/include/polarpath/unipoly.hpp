#ifndef POLARPATH_UNIPOLY_HPP
#define POLARPATH_UNIPOLY_HPP

#include <algorithm>
#include <vector>

#include "polarpath/multipoly.hpp"

namespace polarpath {

// Dense univariate polynomial, c[i] = coefficient of u^i, trailing zeros
// stripped (zero polynomial = empty vector).
template <class C>
struct UPoly {
  std::vector<C> c;

  UPoly() = default;
  explicit UPoly(std::vector<C> cc) : c(std::move(cc)) { norm(); }

  static UPoly zero() { return UPoly(); }
  static UPoly constant(const C& v) {
    UPoly r;
    if (!coeff_is_zero(v)) r.c.push_back(v);
    return r;
  }
  static UPoly x(const C& one) {
    UPoly r;
    r.c.resize(2, one - one);
    r.c[1] = one;
    return r;
  }

  void norm() {
    while (!c.empty() && coeff_is_zero(c.back())) c.pop_back();
  }
  bool is_zero() const { return c.empty(); }
  int deg() const { return static_cast<int>(c.size()) - 1; }
  const C& lead() const { return c.back(); }
  C get(size_t i, const C& zero_val) const { return i < c.size() ? c[i] : zero_val; }

  bool operator==(const UPoly& o) const {
    if (c.size() != o.c.size()) return false;
    for (size_t i = 0; i < c.size(); ++i)
      if (!(c[i] == o.c[i])) return false;
    return true;
  }
  bool operator!=(const UPoly& o) const { return !(*this == o); }

  UPoly operator-() const {
    UPoly r = *this;
    for (auto& v : r.c) v = -v;
    return r;
  }
  UPoly operator+(const UPoly& o) const {
    UPoly r;
    r.c.resize(std::max(c.size(), o.c.size()));
    for (size_t i = 0; i < r.c.size(); ++i) {
      if (i < c.size() && i < o.c.size())
        r.c[i] = c[i] + o.c[i];
      else if (i < c.size())
        r.c[i] = c[i];
      else
        r.c[i] = o.c[i];
    }
    r.norm();
    return r;
  }
  UPoly operator-(const UPoly& o) const { return *this + (-o); }
  UPoly operator*(const UPoly& o) const {
    if (is_zero() || o.is_zero()) return UPoly();
    UPoly r;
    C z = c[0] - c[0];
    r.c.assign(c.size() + o.c.size() - 1, z);
    for (size_t i = 0; i < c.size(); ++i) {
      if (coeff_is_zero(c[i])) continue;
      for (size_t j = 0; j < o.c.size(); ++j) r.c[i + j] += c[i] * o.c[j];
    }
    r.norm();
    return r;
  }
  UPoly operator*(const C& k) const {
    UPoly r = *this;
    for (auto& v : r.c) v = v * k;
    r.norm();
    return r;
  }
  UPoly shift_up(int k) const {  // * u^k
    if (is_zero()) return *this;
    UPoly r;
    C z = c[0] - c[0];
    r.c.assign(c.size() + k, z);
    for (size_t i = 0; i < c.size(); ++i) r.c[i + k] = c[i];
    return r;
  }

  UPoly derivative() const {
    UPoly r;
    if (c.size() <= 1) return r;
    r.c.resize(c.size() - 1);
    for (size_t i = 1; i < c.size(); ++i) r.c[i - 1] = c[i] * coeff_from_long(c[i], (long)i);
    r.norm();
    return r;
  }

  C eval(const C& x) const {
    if (c.empty()) return x - x;
    C acc = c.back();
    for (int i = static_cast<int>(c.size()) - 2; i >= 0; --i) acc = acc * x + c[i];
    return acc;
  }

  // division with remainder; divisor must have invertible leading coefficient
  static void divrem(const UPoly& a, const UPoly& b, UPoly& q, UPoly& r);
  UPoly operator%(const UPoly& b) const {
    UPoly q, r;
    divrem(*this, b, q, r);
    return r;
  }
  UPoly operator/(const UPoly& b) const {
    UPoly q, r;
    divrem(*this, b, q, r);
    return q;
  }

  UPoly monic() const {
    if (is_zero()) return *this;
    return *this * inv_coeff(lead());
  }
};

template <class C>
void UPoly<C>::divrem(const UPoly& a, const UPoly& b, UPoly& q, UPoly& r) {
  if (b.is_zero()) throw InvalidInput("UPoly division by zero");
  r = a;
  q = UPoly();
  if (a.deg() < b.deg()) return;
  C lcinv = inv_coeff(b.lead());
  C z = b.c[0] - b.c[0];
  q.c.assign(a.deg() - b.deg() + 1, z);
  while (!r.is_zero() && r.deg() >= b.deg()) {
    int k = r.deg() - b.deg();
    C f = r.lead() * lcinv;
    q.c[k] = f;
    for (int i = 0; i <= b.deg(); ++i) r.c[i + k] = r.c[i + k] - f * b.c[i];
    r.norm();
  }
  q.norm();
}

template <class C>
UPoly<C> upoly_gcd(UPoly<C> a, UPoly<C> b) {
  while (!b.is_zero()) {
    UPoly<C> r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

template <class C>
UPoly<C> upoly_squarefree(const UPoly<C>& f) {
  if (f.deg() <= 0) return f.monic();
  UPoly<C> g = upoly_gcd(f, f.derivative());
  return (f / g).monic();
}

// extended gcd: g = gcd(a,b) monic, g = s*a + t*b
template <class C>
UPoly<C> upoly_xgcd(const UPoly<C>& a, const UPoly<C>& b, UPoly<C>& s, UPoly<C>& t) {
  if (a.is_zero() && b.is_zero()) {
    s = t = UPoly<C>();
    return UPoly<C>();
  }
  C onev = coeff_from_long(a.is_zero() ? b.c[0] : a.c[0], 1);
  UPoly<C> r0 = a, r1 = b;
  UPoly<C> s0 = UPoly<C>::constant(onev), s1;
  UPoly<C> t0, t1 = s0;
  while (!r1.is_zero()) {
    UPoly<C> q, r;
    UPoly<C>::divrem(r0, r1, q, r);
    UPoly<C> s2 = s0 - q * s1;
    UPoly<C> t2 = t0 - q * t1;
    r0 = std::move(r1); r1 = std::move(r);
    s0 = std::move(s1); s1 = std::move(s2);
    t0 = std::move(t1); t1 = std::move(t2);
  }
  if (!r0.is_zero()) {
    C k = inv_coeff(r0.lead());
    r0 = r0 * k;
    s0 = s0 * k;
    t0 = t0 * k;
  }
  s = s0;
  t = t0;
  return r0;
}

// inverse of a mod m (monic m), fails (returns false) when gcd != 1
template <class C>
bool upoly_invmod(const UPoly<C>& a, const UPoly<C>& m, UPoly<C>& inv) {
  UPoly<C> s, t;
  UPoly<C> g = upoly_xgcd(a % m, m, s, t);
  if (g.deg() != 0) return false;
  inv = s % m;
  return true;
}

template <class C>
UPoly<C> upoly_mulmod(const UPoly<C>& a, const UPoly<C>& b, const UPoly<C>& m) {
  return (a * b) % m;
}

// a(b) mod m via Horner
template <class C>
UPoly<C> upoly_compose_mod(const UPoly<C>& a, const UPoly<C>& b, const UPoly<C>& m) {
  UPoly<C> acc;
  for (int i = a.deg(); i >= 0; --i) {
    acc = (acc * b) % m;
    acc = acc + UPoly<C>::constant(a.c[i]);
  }
  return acc;
}

using QUPoly = UPoly<Rational>;
using ZpUPoly = UPoly<Zp>;

// Lagrange interpolation over Z/p from sample points (xs distinct)
ZpUPoly zp_interpolate(const std::vector<Zp>& xs, const std::vector<Zp>& ys);

// resultant of univariate polynomials over Z/p (subresultant-free Euclid
// with leading-coefficient bookkeeping)
Zp zp_resultant(ZpUPoly a, ZpUPoly b);

// exact resultant over Q via fraction-clearing and the same scheme
Rational q_resultant(const QUPoly& a, const QUPoly& b);

// conversions to/from 1-variable MultiPoly
QUPoly to_upoly(const MultiPoly& f);
MultiPoly to_multipoly(const QUPoly& f);
bool reduce_upoly_mod(const QUPoly& f, uint32_t p, ZpUPoly& out);

// CRT/ratrec state for reconstructing vectors of rationals
class RatRecState {
 public:
  // feed one prime's worth of residues; returns true when the rational
  // reconstruction is stable (same result twice in a row)
  bool feed(uint32_t p, const std::vector<uint32_t>& residues);
  const std::vector<Rational>& value() const { return value_; }
  size_t primes_used() const { return count_; }

 private:
  Int modulus_ = 1;
  std::vector<Int> residues_;
  std::vector<Rational> value_;
  bool have_value_ = false;
  size_t count_ = 0;
};

}  // namespace polarpath

#endif

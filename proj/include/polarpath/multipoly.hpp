#ifndef POLARPATH_MULTIPOLY_HPP
#define POLARPATH_MULTIPOLY_HPP

#include <algorithm>
#include <string>
#include <type_traits>
#include <unordered_map>
#include <vector>

#include "polarpath/modular.hpp"
#include "polarpath/monomial.hpp"
#include "polarpath/rational.hpp"

namespace polarpath {

inline bool coeff_is_zero(const Rational& c) { return sgn(c) == 0; }
inline bool coeff_is_zero(const Zp& c) { return c.is_zero(); }

Rational inv_coeff(const Rational& c);
Zp inv_coeff(const Zp& c);

inline Rational coeff_from_long(const Rational&, long k) { return Rational(k); }
inline Zp coeff_from_long(const Zp& like, long k) {
  long r = k % like.p;
  if (r < 0) r += like.p;
  return Zp::raw(static_cast<uint32_t>(r), like.p);
}

// Sparse multivariate polynomial, terms strictly decreasing in grevlex,
// no zero coefficients. C is Rational or Zp.
template <class C>
class Poly {
 public:
  struct Term {
    Monomial m;
    C c;
  };

  Poly() : n_(0) {}
  explicit Poly(int nvars) : n_(nvars) {}

  static Poly zero(int nvars) { return Poly(nvars); }
  static Poly constant(int nvars, const C& c) {
    Poly p(nvars);
    if (!coeff_is_zero(c)) p.t_.push_back({Monomial::one(nvars), c});
    return p;
  }
  static Poly variable(int nvars, int i, const C& one) {
    Poly p(nvars);
    p.t_.push_back({Monomial::var(nvars, i), one});
    return p;
  }
  static Poly monomial(int nvars, const Monomial& m, const C& c) {
    Poly p(nvars);
    if (!coeff_is_zero(c)) p.t_.push_back({m, c});
    return p;
  }
  static Poly from_terms(int nvars, std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return cmp_grevlex(a.m, b.m) > 0; });
    Poly p(nvars);
    for (auto& t : terms) {
      if (!p.t_.empty() && p.t_.back().m == t.m)
        p.t_.back().c += t.c;
      else
        p.t_.push_back(std::move(t));
    }
    p.strip_zeros();
    return p;
  }

  int nvars() const { return n_; }
  bool is_zero() const { return t_.empty(); }
  void pop_lead() { t_.erase(t_.begin()); }
  size_t term_count() const { return t_.size(); }
  const std::vector<Term>& terms() const { return t_; }
  const Term& lead() const { return t_.front(); }
  int degree() const {
    int d = -1;
    for (auto& t : t_) d = std::max<int>(d, t.m.deg);
    return d;
  }
  int degree_in(int var) const {
    int d = 0;
    for (auto& t : t_) d = std::max<int>(d, t.m.e[var]);
    return d;
  }
  bool is_constant() const { return t_.empty() || (t_.size() == 1 && t_[0].m.is_one()); }

  bool operator==(const Poly& o) const {
    if (t_.size() != o.t_.size()) return false;
    for (size_t i = 0; i < t_.size(); ++i)
      if (t_[i].m != o.t_[i].m || !(t_[i].c == o.t_[i].c)) return false;
    return true;
  }
  bool operator!=(const Poly& o) const { return !(*this == o); }

  Poly operator-() const {
    Poly r = *this;
    for (auto& t : r.t_) t.c = -t.c;
    return r;
  }
  Poly operator+(const Poly& o) const { return merged(o, false); }
  Poly operator-(const Poly& o) const { return merged(o, true); }
  Poly& operator+=(const Poly& o) { return *this = merged(o, false); }
  Poly& operator-=(const Poly& o) { return *this = merged(o, true); }

  Poly mul_term(const Monomial& m, const C& c) const {
    Poly r(n_);
    if (coeff_is_zero(c)) return r;
    r.t_.reserve(t_.size());
    for (auto& t : t_) {
      C nc = t.c * c;
      if (!coeff_is_zero(nc)) r.t_.push_back({t.m * m, nc});
    }
    return r;
  }
  Poly operator*(const C& c) const { return mul_term(Monomial::one(n_), c); }

  Poly operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return Poly(n_);
    std::unordered_map<Monomial, C, MonomialHash> acc;
    acc.reserve(t_.size() * o.t_.size() / 2 + 8);
    for (auto& a : t_)
      for (auto& b : o.t_) {
        Monomial m = a.m * b.m;
        C prod = a.c * b.c;
        auto it = acc.find(m);
        if (it == acc.end())
          acc.emplace(m, prod);
        else
          it->second += prod;
      }
    std::vector<Term> ts;
    ts.reserve(acc.size());
    for (auto& kv : acc)
      if (!coeff_is_zero(kv.second)) ts.push_back({kv.first, kv.second});
    return from_terms(n_, std::move(ts));
  }

  // *this -= c * x^m * g  (hot path of reduction)
  void axpy_sub(const C& c, const Monomial& m, const Poly& g) {
    Poly r(n_);
    r.t_.reserve(t_.size() + g.t_.size());
    size_t i = 0, j = 0;
    while (i < t_.size() && j < g.t_.size()) {
      Monomial gm = g.t_[j].m * m;
      int cc = cmp_grevlex(t_[i].m, gm);
      if (cc > 0) {
        r.t_.push_back(std::move(t_[i++]));
      } else if (cc < 0) {
        r.t_.push_back({gm, -(c * g.t_[j].c)});
        ++j;
      } else {
        C nc = t_[i].c - c * g.t_[j].c;
        if (!coeff_is_zero(nc)) r.t_.push_back({t_[i].m, std::move(nc)});
        ++i, ++j;
      }
    }
    while (i < t_.size()) r.t_.push_back(std::move(t_[i++]));
    while (j < g.t_.size()) {
      r.t_.push_back({g.t_[j].m * m, -(c * g.t_[j].c)});
      ++j;
    }
    *this = std::move(r);
  }

  Poly derivative(int var) const {
    std::vector<Term> ts;
    ts.reserve(t_.size());
    for (auto& t : t_) {
      if (t.m.e[var] == 0) continue;
      Term nt = t;
      nt.c = t.c * coeff_from_long(t.c, t.m.e[var]);
      nt.m.e[var] -= 1;
      nt.m.deg -= 1;
      if (!coeff_is_zero(nt.c)) ts.push_back(nt);
    }
    return from_terms(n_, std::move(ts));
  }

  template <class Ring>
  typename Ring::Elem eval(const Ring& ring,
                           const std::vector<typename Ring::Elem>& x) const {
    std::vector<std::vector<typename Ring::Elem>> pw(n_);
    for (int i = 0; i < n_; ++i) pw[i].push_back(ring.one());
    auto acc = ring.zero();
    for (auto& t : t_) {
      auto val = ring.from_coeff(t.c);
      for (int i = 0; i < n_; ++i) {
        int e = t.m.e[i];
        while ((int)pw[i].size() <= e) pw[i].push_back(ring.mul(pw[i].back(), x[i]));
        if (e) val = ring.mul(val, pw[i][e]);
      }
      acc = ring.add(acc, val);
    }
    return acc;
  }

  // substitute x[var] := g, a polynomial over the same variable set
  Poly substitute(int var, const Poly& g) const {
    if (t_.empty()) return Poly(n_);
    std::vector<Poly> pw = {constant(n_, coeff_from_long(t_[0].c, 1))};
    Poly acc(n_);
    for (auto& t : t_) {
      int e = t.m.e[var];
      while ((int)pw.size() <= e) pw.push_back(pw.back() * g);
      Monomial m = t.m;
      m.deg -= m.e[var];
      m.e[var] = 0;
      acc += pw[e].mul_term(m, t.c);
    }
    return acc;
  }

  // renumber variables into an ambient space of nnew vars; where[i] is the
  // new index of old variable i
  Poly remap(int nnew, const std::vector<int>& where) const {
    std::vector<Term> ts;
    ts.reserve(t_.size());
    for (auto& t : t_) {
      Monomial m = Monomial::one(nnew);
      for (int i = 0; i < n_; ++i) m.e[where[i]] = t.m.e[i];
      m.deg = t.m.deg;
      ts.push_back({m, t.c});
    }
    return from_terms(nnew, std::move(ts));
  }

  std::string str(const std::vector<std::string>* names = nullptr) const;

 private:
  int n_;
  std::vector<Term> t_;

  void strip_zeros() {
    t_.erase(std::remove_if(t_.begin(), t_.end(),
                            [](const Term& t) { return coeff_is_zero(t.c); }),
             t_.end());
  }

  Poly merged(const Poly& o, bool subtract) const {
    Poly r(n_);
    r.t_.reserve(t_.size() + o.t_.size());
    size_t i = 0, j = 0;
    while (i < t_.size() && j < o.t_.size()) {
      int c = cmp_grevlex(t_[i].m, o.t_[j].m);
      if (c > 0) {
        r.t_.push_back(t_[i++]);
      } else if (c < 0) {
        Term t = o.t_[j++];
        if (subtract) t.c = -t.c;
        r.t_.push_back(std::move(t));
      } else {
        C nc = subtract ? C(t_[i].c - o.t_[j].c) : C(t_[i].c + o.t_[j].c);
        if (!coeff_is_zero(nc)) r.t_.push_back({t_[i].m, nc});
        ++i, ++j;
      }
    }
    while (i < t_.size()) r.t_.push_back(t_[i++]);
    while (j < o.t_.size()) {
      Term t = o.t_[j++];
      if (subtract) t.c = -t.c;
      r.t_.push_back(std::move(t));
    }
    return r;
  }
};

using MultiPoly = Poly<Rational>;
using ModPoly = Poly<Zp>;

template <>
std::string Poly<Rational>::str(const std::vector<std::string>* names) const;
template <>
std::string Poly<Zp>::str(const std::vector<std::string>* names) const;

MultiPoly primitive_part(const MultiPoly& f);
MultiPoly make_monic(const MultiPoly& f);
ModPoly make_monic(const ModPoly& f);

// false when some denominator vanishes mod p
bool reduce_poly_mod(const MultiPoly& f, uint32_t p, ModPoly& out);

Rational eval_at(const MultiPoly& f, const std::vector<Rational>& x);

// jac[i][j] = d f_i / d x_j
template <class C>
std::vector<std::vector<Poly<C>>> jacobian(const std::vector<Poly<C>>& fs) {
  std::vector<std::vector<Poly<C>>> m(fs.size());
  for (size_t i = 0; i < fs.size(); ++i) {
    int n = fs[i].nvars();
    m[i].reserve(n);
    for (int j = 0; j < n; ++j) m[i].push_back(fs[i].derivative(j));
  }
  return m;
}

// cofactor-expansion determinant; fine at the matrix sizes this project meets
template <class C>
Poly<C> poly_det(const std::vector<std::vector<Poly<C>>>& m) {
  size_t k = m.size();
  if (k == 0) throw InvalidInput("poly_det: empty matrix");
  if (k == 1) return m[0][0];
  int n = m[0][0].nvars();
  Poly<C> acc(n);
  std::vector<std::vector<Poly<C>>> sub(k - 1, std::vector<Poly<C>>());
  for (size_t col = 0; col < k; ++col) {
    if (m[0][col].is_zero()) continue;
    for (size_t i = 1; i < k; ++i) {
      sub[i - 1].clear();
      for (size_t j = 0; j < k; ++j)
        if (j != col) sub[i - 1].push_back(m[i][j]);
    }
    Poly<C> term = m[0][col] * poly_det(sub);
    if (col % 2 == 0)
      acc += term;
    else
      acc -= term;
  }
  return acc;
}

struct RationalRing {
  using Elem = Rational;
  Elem zero() const { return Rational(0); }
  Elem one() const { return Rational(1); }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem from_coeff(const Rational& c) const { return c; }
};

struct ZpRing {
  uint32_t p;
  using Elem = Zp;
  Elem zero() const { return Zp::zero(p); }
  Elem one() const { return Zp::one(p); }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem from_coeff(const Zp& c) const { return c; }
  Elem from_coeff(const Rational& c) const {
    Zp out;
    if (!reduce_mod(c, p, out)) throw InvalidInput("denominator vanishes mod p");
    return out;
  }
};

}  // namespace polarpath

#endif

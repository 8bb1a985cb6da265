#include "polarpath/unipoly.hpp"

namespace polarpath {

Rational inv_coeff(const Rational& c) { return 1 / c; }
Zp inv_coeff(const Zp& c) { return c.inv(); }

ZpUPoly zp_interpolate(const std::vector<Zp>& xs, const std::vector<Zp>& ys) {
  // Newton form, then expand
  size_t m = xs.size();
  if (m == 0) return ZpUPoly();
  uint32_t p = xs[0].p;
  std::vector<Zp> dd(ys);  // divided differences
  for (size_t level = 1; level < m; ++level) {
    for (size_t i = m - 1; i >= level; --i) {
      Zp num = dd[i] - dd[i - 1];
      Zp den = xs[i] - xs[i - level];
      dd[i] = num * den.inv();
      if (i == level) break;
    }
  }
  ZpUPoly acc;
  for (size_t i = m; i-- > 0;) {
    // acc = acc * (x - xs[i]) + dd[i]
    ZpUPoly lin;
    lin.c = {-xs[i], Zp::one(p)};
    acc = acc * lin + ZpUPoly::constant(dd[i]);
  }
  return acc;
}

Zp zp_resultant(ZpUPoly a, ZpUPoly b) {
  if (a.is_zero() || b.is_zero()) {
    uint32_t p = a.is_zero() ? (b.is_zero() ? 2 : b.c[0].p) : a.c[0].p;
    return Zp::zero(p);
  }
  uint32_t p = a.c[0].p;
  Zp res = Zp::one(p);
  // Euclidean resultant with sign/leading-coefficient bookkeeping
  while (true) {
    if (b.deg() == 0) {
      // res *= lc(b)^deg(a)
      Zp lb = b.c[0];
      for (int i = 0; i < a.deg(); ++i) res = res * lb;
      return res;
    }
    ZpUPoly r = a % b;
    if (r.is_zero()) return Zp::zero(p);
    int da = a.deg(), db = b.deg(), dr = r.deg();
    // res(a,b) = (-1)^{da*db} lc(b)^{da-dr} res(b,r)
    Zp lb = b.lead();
    Zp factor = Zp::one(p);
    for (int i = 0; i < da - dr; ++i) factor = factor * lb;
    if ((da % 2) && (db % 2)) factor = -factor;
    res = res * factor;
    a = std::move(b);
    b = std::move(r);
  }
}

Rational q_resultant(const QUPoly& a, const QUPoly& b) {
  if (a.is_zero() || b.is_zero()) return Rational(0);
  QUPoly f = a, g = b;
  Rational res = 1;
  while (true) {
    if (g.deg() == 0) {
      Rational lb = g.c[0];
      for (int i = 0; i < f.deg(); ++i) res *= lb;
      return res;
    }
    QUPoly r = f % g;
    if (r.is_zero()) return Rational(0);
    int da = f.deg(), db = g.deg(), dr = r.deg();
    Rational lb = g.lead();
    Rational factor = 1;
    for (int i = 0; i < da - dr; ++i) factor *= lb;
    if ((da % 2) && (db % 2)) factor = -factor;
    res *= factor;
    f = std::move(g);
    g = std::move(r);
  }
}

QUPoly to_upoly(const MultiPoly& f) {
  QUPoly r;
  if (f.is_zero()) return r;
  if (f.nvars() > 1) {
    for (auto& t : f.terms())
      for (int i = 1; i < f.nvars(); ++i)
        if (t.m.e[i]) throw InvalidInput("polynomial is not univariate");
  }
  r.c.assign(f.degree() + 1, Rational(0));
  for (auto& t : f.terms()) r.c[t.m.e[0]] = t.c;
  r.norm();
  return r;
}

MultiPoly to_multipoly(const QUPoly& f) {
  std::vector<MultiPoly::Term> ts;
  for (size_t i = 0; i < f.c.size(); ++i) {
    if (sgn(f.c[i]) == 0) continue;
    ts.push_back({Monomial::var(1, 0, static_cast<uint16_t>(i)), f.c[i]});
  }
  return MultiPoly::from_terms(1, std::move(ts));
}

bool reduce_upoly_mod(const QUPoly& f, uint32_t p, ZpUPoly& out) {
  out.c.assign(f.c.size(), Zp::zero(p));
  for (size_t i = 0; i < f.c.size(); ++i) {
    if (!reduce_mod(f.c[i], p, out.c[i])) return false;
  }
  out.norm();
  return true;
}

bool RatRecState::feed(uint32_t p, const std::vector<uint32_t>& residues) {
  ++count_;
  if (residues_.empty()) {
    residues_.assign(residues.begin(), residues.end());
    modulus_ = p;
  } else {
    if (residues.size() != residues_.size())
      throw InvalidInput("RatRecState: residue vector size changed");
    Int newmod = modulus_ * p;
    for (size_t i = 0; i < residues_.size(); ++i)
      residues_[i] = crt_pair(residues_[i], modulus_, Int(residues[i]), Int(p));
    modulus_ = newmod;
  }
  std::vector<Rational> cand(residues_.size());
  for (size_t i = 0; i < residues_.size(); ++i) {
    if (!rational_reconstruct(residues_[i], modulus_, cand[i])) {
      have_value_ = false;
      return false;
    }
  }
  if (have_value_ && cand == value_) return true;
  value_ = std::move(cand);
  have_value_ = true;
  return false;
}

}  // namespace polarpath

#include "polarpath/bipoly.hpp"

namespace polarpath {

ZpBPoly zp_binterpolate(const std::vector<Zp>& vs, const std::vector<ZpUPoly>& fs) {
  if (vs.empty()) return ZpBPoly();
  size_t du = 0;
  for (auto& f : fs) du = std::max<size_t>(du, f.c.size());
  ZpBPoly r;
  r.cu.resize(du);
  uint32_t p = vs[0].p;
  for (size_t i = 0; i < du; ++i) {
    std::vector<Zp> ys(vs.size(), Zp::zero(p));
    for (size_t k = 0; k < vs.size(); ++k)
      if (i < fs[k].c.size()) ys[k] = fs[k].c[i];
    r.cu[i] = zp_interpolate(vs, ys);
  }
  r.norm();
  return r;
}

ZpUPoly zp_resultant_u(const ZpBPoly& a, const ZpBPoly& b, int deg_bound) {
  if (a.is_zero() || b.is_zero()) return ZpUPoly();
  uint32_t p = 0;
  for (auto& f : a.cu)
    if (!f.is_zero()) { p = f.c[0].p; break; }
  // leading u-coefficients must not vanish at the evaluation points, else the
  // degree-drop would corrupt the interpolation
  const UPoly<Zp>& la = a.cu.back();
  const UPoly<Zp>& lb = b.cu.back();
  std::vector<Zp> vs;
  std::vector<Zp> rs;
  uint64_t probe = 0;
  while ((int)vs.size() < deg_bound + 1) {
    if (probe >= p) throw MonteCarloFailure("zp_resultant_u: field exhausted");
    Zp v0 = Zp(probe++, p);
    if (la.eval(v0).is_zero() || lb.eval(v0).is_zero()) continue;
    vs.push_back(v0);
    rs.push_back(zp_resultant(a.eval_v(v0), b.eval_v(v0)));
  }
  std::vector<ZpUPoly> dummy;
  // plain univariate interpolation of scalar samples
  return zp_interpolate(vs, rs);
}

bool reduce_bpoly_mod(const QBPoly& f, uint32_t p, ZpBPoly& out) {
  out.cu.assign(f.cu.size(), ZpUPoly());
  for (size_t i = 0; i < f.cu.size(); ++i)
    if (!reduce_upoly_mod(f.cu[i], p, out.cu[i])) return false;
  out.norm();
  return true;
}

QBPoly to_bpoly(const MultiPoly& f) {
  if (f.nvars() != 2) throw InvalidInput("to_bpoly: expected 2 variables");
  QBPoly r;
  r.cu.resize(f.degree_in(0) + 1);
  for (auto& row : r.cu) row = QUPoly();
  for (auto& t : f.terms()) {
    int i = t.m.e[0], j = t.m.e[1];
    if ((int)r.cu[i].c.size() <= j) r.cu[i].c.resize(j + 1, Rational(0));
    r.cu[i].c[j] = t.c;
  }
  for (auto& row : r.cu) row.norm();
  r.norm();
  return r;
}

MultiPoly to_multipoly2(const QBPoly& f) {
  std::vector<MultiPoly::Term> ts;
  for (size_t i = 0; i < f.cu.size(); ++i)
    for (size_t j = 0; j < f.cu[i].c.size(); ++j) {
      if (sgn(f.cu[i].c[j]) == 0) continue;
      Monomial m = Monomial::one(2);
      m.e[0] = static_cast<uint16_t>(i);
      m.e[1] = static_cast<uint16_t>(j);
      m.deg = static_cast<uint32_t>(i + j);
      ts.push_back({m, f.cu[i].c[j]});
    }
  return MultiPoly::from_terms(2, std::move(ts));
}

MultiPoly bpoly_compose_linear(const QBPoly& f, const std::vector<Rational>& l,
                               const std::vector<Rational>& l2) {
  int n = static_cast<int>(l.size());
  std::vector<MultiPoly::Term> lt, lt2;
  for (int i = 0; i < n; ++i) {
    if (sgn(l[i])) lt.push_back({Monomial::var(n, i), l[i]});
    if (sgn(l2[i])) lt2.push_back({Monomial::var(n, i), l2[i]});
  }
  MultiPoly L = MultiPoly::from_terms(n, std::move(lt));
  MultiPoly L2 = MultiPoly::from_terms(n, std::move(lt2));
  // Horner in u, inner Horner in v
  MultiPoly acc = MultiPoly::zero(n);
  for (size_t i = f.cu.size(); i-- > 0;) {
    MultiPoly row = MultiPoly::zero(n);
    for (size_t j = f.cu[i].c.size(); j-- > 0;) {
      row = row * L2;
      if (sgn(f.cu[i].c[j])) row += MultiPoly::constant(n, f.cu[i].c[j]);
    }
    acc = acc * L;
    acc += row;
  }
  return acc;
}

}  // namespace polarpath

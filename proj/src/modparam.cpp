#include "polarpath/modparam.hpp"

namespace polarpath {

bool reduce_param_mod(const QUPoly& omega, const std::vector<QUPoly>& rho, uint32_t p,
                      ModParam0& out) {
  out.p = p;
  if (!reduce_upoly_mod(omega, p, out.omega)) return false;
  if (out.omega.deg() != omega.deg()) return false;
  out.rho.assign(rho.size(), ZpUPoly());
  for (size_t i = 0; i < rho.size(); ++i)
    if (!reduce_upoly_mod(rho[i], p, out.rho[i])) return false;
  return true;
}

ZpMat power_matrix(const ZpUPoly& s, const ZpUPoly& omega, int count, uint32_t p) {
  int delta = omega.deg();
  ZpMat K(delta, count, p);
  ZpUPoly t = ZpUPoly::constant(Zp::one(p));
  for (int j = 0; j < count; ++j) {
    for (int i = 0; i <= t.deg(); ++i) K.at(i, j) = t.c[i].v;
    t = (t * s) % omega;
  }
  return K;
}

ZpMat mult_matrix(const ZpUPoly& s, const ZpUPoly& omega, uint32_t p) {
  int delta = omega.deg();
  ZpMat M(delta, delta, p);
  ZpUPoly col = s % omega;
  for (int j = 0; j < delta; ++j) {
    for (int i = 0; i <= col.deg(); ++i) M.at(i, j) = col.c[i].v;
    col = col.shift_up(1) % omega;
  }
  return M;
}

bool reparam_mod(const ModParam0& in, const std::vector<Rational>& form, int n_out,
                 ModParam0& out) {
  uint32_t p = in.p;
  int delta = in.omega.deg();
  if (delta <= 0) {
    out = in;
    out.rho.assign(n_out, ZpUPoly());
    return true;
  }
  ZpUPoly s;
  for (size_t i = 0; i < form.size(); ++i) {
    Zp c;
    if (!reduce_mod(form[i], p, c)) return false;
    if (i < in.rho.size() && !c.is_zero()) s = s + in.rho[i] * c;
  }
  s = s % in.omega;
  ZpUPoly m = zp_charpoly(mult_matrix(s, in.omega, p));
  ZpUPoly md = m.derivative();
  if (md.is_zero()) return false;
  ZpUPoly mbar = (m / upoly_gcd(m, md)).monic();
  int dbar = mbar.deg();
  if (dbar <= 0) return false;
  ZpMat K = power_matrix(s, in.omega, dbar, p);
  std::vector<std::vector<uint32_t>> rhs;
  for (int i = 0; i < n_out; ++i) {
    std::vector<uint32_t> b(delta, 0);
    for (int j = 0; j <= in.rho[i].deg(); ++j) b[j] = in.rho[i].c[j].v;
    rhs.push_back(std::move(b));
  }
  std::vector<std::vector<uint32_t>> sol;
  if (!zp_solve(K, rhs, sol)) return false;
  out.p = p;
  out.omega = mbar;
  out.rho.clear();
  for (int i = 0; i < n_out; ++i) {
    ZpUPoly r;
    r.c.assign(dbar, Zp::zero(p));
    for (int j = 0; j < dbar; ++j) r.c[j] = Zp::raw(sol[i][j], p);
    r.norm();
    out.rho.push_back(std::move(r));
  }
  return true;
}

bool union_mod(const ModParam0& a, const ModParam0& b, ModParam0& out) {
  if (a.p != b.p || a.rho.size() != b.rho.size()) return false;
  uint32_t p = a.p;
  size_t n = a.rho.size();
  if (a.omega.deg() <= 0) {
    out = b;
    return true;
  }
  if (b.omega.deg() <= 0) {
    out = a;
    return true;
  }
  ZpUPoly g = upoly_gcd(a.omega, b.omega);
  ZpUPoly wb_red = b.omega / g;
  if (g.deg() > 0) {
    for (size_t i = 0; i < n; ++i)
      if (!((a.rho[i] - b.rho[i]) % g).is_zero()) return false;
  }
  out.p = p;
  out.omega = (a.omega * wb_red).monic();
  out.rho.clear();
  if (wb_red.deg() == 0) {
    out.rho = a.rho;
    return true;
  }
  ZpUPoly inv_a;
  if (!upoly_invmod(a.omega, wb_red, inv_a)) return false;
  for (size_t i = 0; i < n; ++i) {
    ZpUPoly d = ((b.rho[i] - a.rho[i]) % wb_red) * inv_a % wb_red;
    out.rho.push_back((a.rho[i] + a.omega * d) % out.omega);
  }
  return true;
}

}  // namespace polarpath

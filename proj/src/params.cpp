#include "polarpath/params.hpp"

#include <nlohmann/json.hpp>

#include "polarpath/modparam.hpp"
#include "polarpath/zplinalg.hpp"

namespace polarpath {

using json = nlohmann::json;

ZeroDimParam empty_zero_dim(int n) {
  ZeroDimParam p;
  p.n = n;
  p.omega = QUPoly::constant(Rational(1));
  p.rho.assign(n, QUPoly());
  p.form.assign(n, Rational(0));
  if (n > 0) p.form[0] = 1;
  return p;
}

OneDimParam empty_one_dim(int n) {
  OneDimParam p;
  p.n = n;
  p.omega = QBPoly::constant(Rational(1));
  p.rho.assign(n, QBPoly());
  p.form.assign(n, Rational(0));
  p.form2.assign(n, Rational(0));
  if (n > 0) p.form[0] = 1;
  if (n > 1) p.form2[1] = 1;
  return p;
}

namespace {

// proof that f (exactly) has no repeated factor: gcd(f, f') = 1 mod some prime
// not dividing the leading coefficient
bool squarefree_certificate(const QUPoly& f, uint64_t seed) {
  if (f.deg() <= 0) return true;
  PrimeStream ps(seed);
  for (int tries = 0; tries < 12; ++tries) {
    uint32_t p = ps.next();
    ZpUPoly fp;
    if (!reduce_upoly_mod(f, p, fp)) continue;
    if (fp.deg() != f.deg()) continue;
    ZpUPoly d = fp.derivative();
    if (d.is_zero()) continue;
    if (upoly_gcd(fp, d).deg() == 0) return true;
  }
  return false;
}

bool squarefree_certificate2(const QBPoly& f, uint64_t seed) {
  // omega monic in u, squarefree as a bivariate <=> res_u(omega, d omega/du)
  // is not the zero polynomial; a nonzero value at one (p, v0) is a proof
  if (f.deg_u() <= 0) return true;
  PrimeStream ps(seed);
  Rng rng(seed ^ 0x5eedbeef);
  for (int tries = 0; tries < 20; ++tries) {
    uint32_t p = ps.next();
    ZpBPoly fp;
    if (!reduce_bpoly_mod(f, p, fp)) continue;
    if (fp.deg_u() != f.deg_u()) continue;
    for (int probe = 0; probe < 10; ++probe) {
      Zp v0 = Zp(rng.next(), p);
      ZpUPoly fv = fp.eval_v(v0);
      if (fv.deg() != f.deg_u()) continue;
      ZpUPoly d = fv.derivative();
      if (d.is_zero()) continue;
      if (!zp_resultant(fv, d).is_zero()) return true;
    }
  }
  return false;
}

}  // namespace

ValidationReport validate(const ZeroDimParam& p) {
  ValidationReport rep;
  auto fail = [&](const std::string& why) {
    rep.ok = false;
    rep.reason = why;
    return rep;
  };
  if ((int)p.rho.size() != p.n || (int)p.form.size() != p.n)
    return fail("field lengths do not match n");
  if (p.omega.is_zero()) return fail("omega is zero");
  if (p.omega.lead() != Rational(1)) return fail("omega not monic");
  if (p.omega.deg() == 0) {
    for (auto& r : p.rho)
      if (!r.is_zero()) return fail("empty-set parametrization with nonzero rho");
    return rep;
  }
  for (auto& r : p.rho)
    if (r.deg() >= p.omega.deg()) return fail("deg(rho) >= deg(omega)");
  if (!squarefree_certificate(p.omega, 0x51c2f00dULL))
    return fail("omega not squarefree");
  // l(rho) = u mod omega
  QUPoly s;
  for (int i = 0; i < p.n; ++i) s = s + p.rho[i] * p.form[i];
  QUPoly u = QUPoly::x(Rational(1));
  if (!((s - u) % p.omega).is_zero()) return fail("l(rho) != u mod omega");
  return rep;
}

ValidationReport validate(const OneDimParam& p) {
  ValidationReport rep;
  auto fail = [&](const std::string& why) {
    rep.ok = false;
    rep.reason = why;
    return rep;
  };
  if ((int)p.rho.size() != p.n || (int)p.form.size() != p.n || (int)p.form2.size() != p.n)
    return fail("field lengths do not match n");
  if (p.omega.is_zero()) return fail("omega is zero");
  if (!p.omega.monic_in_u()) return fail("omega not monic in u");
  if (p.omega.deg_u() == 0) {
    for (auto& r : p.rho)
      if (!r.is_zero()) return fail("empty-curve parametrization with nonzero rho");
    return rep;
  }
  for (auto& r : p.rho)
    if (r.deg_u() >= p.omega.deg_u()) return fail("deg_u(rho) >= deg_u(omega)");
  if (!squarefree_certificate2(p.omega, 0x51c2f11dULL))
    return fail("omega not squarefree");
  QBPoly wu = p.omega.derivative_u();
  QBPoly s, s2;
  for (int i = 0; i < p.n; ++i) {
    s = s + p.rho[i] * p.form[i];
    s2 = s2 + p.rho[i] * p.form2[i];
  }
  QBPoly uvar = QBPoly::from_u(QUPoly::x(Rational(1)));
  QBPoly vvar = QBPoly::from_v(QUPoly::x(Rational(1)));
  if (!((s - uvar * wu).mod_u(p.omega)).is_zero())
    return fail("l(rho) != u * domega/du mod omega");
  if (!((s2 - vvar * wu).mod_u(p.omega)).is_zero())
    return fail("l'(rho) != v * domega/du mod omega");
  return rep;
}

namespace {
std::vector<Rational> random_form_range(int n, Rng& rng, long bound) {
  std::vector<Rational> f(n);
  bool nonzero = false;
  for (int i = 0; i < n; ++i) {
    long v = rng.integer(-bound, bound);
    f[i] = Rational(v);
    if (v) nonzero = true;
  }
  if (!nonzero && n > 0) f[0] = 1;
  return f;
}
}  // namespace

std::vector<Rational> random_form(int n, Rng& rng) {
  return random_form_range(n, rng, 1L << 16);
}

std::vector<Rational> random_form_small(int n, Rng& rng) {
  return random_form_range(n, rng, 1L << 7);
}

// ---------------------------------------------------------------------------
// reparametrization core (modular)
// ---------------------------------------------------------------------------

namespace {

std::vector<uint32_t> flatten_mod(const ModParam0& r, int dbar, int n_out) {
  std::vector<uint32_t> out;
  out.reserve((dbar + 1) + n_out * dbar);
  for (int i = 0; i <= dbar; ++i)
    out.push_back(i <= r.omega.deg() ? r.omega.c[i].v : 0);
  for (int k = 0; k < n_out; ++k)
    for (int i = 0; i < dbar; ++i)
      out.push_back(i <= r.rho[k].deg() ? r.rho[k].c[i].v : 0);
  return out;
}

ZeroDimParam unflatten(const std::vector<Rational>& vals, int dbar, int n_out,
                       const std::vector<Rational>& form) {
  ZeroDimParam out;
  out.n = n_out;
  size_t pos = 0;
  out.omega.c.assign(vals.begin(), vals.begin() + dbar + 1);
  out.omega.norm();
  pos = dbar + 1;
  for (int k = 0; k < n_out; ++k) {
    QUPoly r;
    r.c.assign(vals.begin() + pos, vals.begin() + pos + dbar);
    r.norm();
    pos += dbar;
    out.rho.push_back(std::move(r));
  }
  out.form = form;
  return out;
}

// exact containment of old data in a candidate new parametrization:
// omega_new(l(rho_old)) = 0 and rho_new(l(rho_old)) = rho_old mod omega_old
bool covers_exactly(const ZeroDimParam& cand, const QUPoly& omega_old,
                    const std::vector<QUPoly>& rho_old) {
  QUPoly s;
  for (size_t i = 0; i < cand.form.size() && i < rho_old.size(); ++i)
    s = s + rho_old[i] * cand.form[i];
  s = s % omega_old;
  if (!upoly_compose_mod(cand.omega, s, omega_old).is_zero()) return false;
  for (size_t i = 0; i < cand.rho.size(); ++i) {
    QUPoly lifted = upoly_compose_mod(cand.rho[i], s, omega_old);
    if (!((lifted - rho_old[i]) % omega_old).is_zero()) return false;
  }
  return true;
}

bool check_form_congruence(const ZeroDimParam& p) {
  if (p.omega.deg() == 0) return true;
  QUPoly s;
  for (int i = 0; i < p.n; ++i) s = s + p.rho[i] * p.form[i];
  return ((s - QUPoly::x(Rational(1))) % p.omega).is_zero();
}

}  // namespace

ZeroDimParam reparametrize(int k, const QUPoly& omega, const std::vector<QUPoly>& rho,
                           Rng& rng, uint64_t seed) {
  if (omega.deg() <= 0) return empty_zero_dim(k);
  const size_t kMaxPrimes = 256;
  for (int attempt = 0; attempt < 8; ++attempt) {
    std::vector<Rational> form = random_form(k, rng);
    PrimeStream ps(seed + 977 * attempt + 1);
    RatRecState state;
    int dbar = -1;
    size_t bad = 0;
    bool form_bad = false;
    while (state.primes_used() < kMaxPrimes && !form_bad) {
      uint32_t p = ps.next();
      ModParam0 mp;
      if (!reduce_param_mod(omega, rho, p, mp)) continue;
      ModParam0 mr;
      if (!reparam_mod(mp, form, k, mr)) {
        if (state.primes_used() == 0 && ++bad >= 3) form_bad = true;
        continue;
      }
      if (dbar < 0) dbar = mr.omega.deg();
      if (mr.omega.deg() != dbar) {
        if (++bad >= 6) form_bad = true;
        continue;
      }
      bool stable = state.feed(p, flatten_mod(mr, dbar, k));
      if (stable) {
        ZeroDimParam cand = unflatten(state.value(), dbar, k, form);
        if (cand.omega.lead() == Rational(1) && check_form_congruence(cand) &&
            covers_exactly(cand, omega, rho) &&
            squarefree_certificate(cand.omega, seed ^ 0xabc1)) {
          return cand;
        }
      }
    }
    if (!form_bad)
      throw ResourceLimit("reparametrize: modular reconstruction did not stabilize");
  }
  throw MonteCarloFailure("reparametrize: no separating linear form found");
}

ZeroDimParam from_rational_points(int n, const std::vector<std::vector<Rational>>& pts,
                                  Rng& rng) {
  if (pts.empty()) return empty_zero_dim(n);
  for (auto& pt : pts)
    if ((int)pt.size() != n) throw InvalidInput("point arity mismatch");
  // deduplicate
  std::vector<std::vector<Rational>> uniq;
  for (auto& pt : pts) {
    bool seen = false;
    for (auto& q : uniq)
      if (q == pt) seen = true;
    if (!seen) uniq.push_back(pt);
  }
  for (int attempt = 0; attempt < 8; ++attempt) {
    std::vector<Rational> form = random_form(n, rng);
    std::vector<Rational> vals;
    bool ok = true;
    for (auto& pt : uniq) {
      Rational v(0);
      for (int i = 0; i < n; ++i) v += form[i] * pt[i];
      for (auto& w : vals)
        if (w == v) ok = false;
      vals.push_back(v);
    }
    if (!ok) continue;
    QUPoly omega = QUPoly::constant(Rational(1));
    for (auto& v : vals) {
      QUPoly lin;
      lin.c = {-v, Rational(1)};
      omega = omega * lin;
    }
    ZeroDimParam out;
    out.n = n;
    out.omega = omega;
    out.form = form;
    // Lagrange interpolation of each coordinate
    for (int i = 0; i < n; ++i) {
      QUPoly r;
      for (size_t a = 0; a < uniq.size(); ++a) {
        QUPoly li = QUPoly::constant(Rational(1));
        Rational denom(1);
        for (size_t b = 0; b < uniq.size(); ++b) {
          if (a == b) continue;
          QUPoly lin;
          lin.c = {-vals[b], Rational(1)};
          li = li * lin;
          denom *= vals[a] - vals[b];
        }
        r = r + li * (uniq[a][i] / denom);
      }
      out.rho.push_back(r);
    }
    return out;
  }
  throw MonteCarloFailure("from_rational_points: no separating form found");
}

// ---------------------------------------------------------------------------
// union / projection / image / inc_param
// ---------------------------------------------------------------------------

ZeroDimParam union_params(const ZeroDimParam& a, const ZeroDimParam& b, Rng& rng) {
  if (a.n != b.n) throw InvalidInput("union: ambient dimensions differ");
  if (a.is_empty()) return b;
  if (b.is_empty()) return a;
  const int n = a.n;
  const size_t kMaxPrimes = 256;
  uint64_t seed = rng.next();
  for (int attempt = 0; attempt < 8; ++attempt) {
    std::vector<Rational> form = random_form(n, rng);
    PrimeStream ps(seed + 977 * attempt + 13);
    RatRecState state;
    int dbar = -1;
    size_t bad = 0;
    bool form_bad = false;
    while (state.primes_used() < kMaxPrimes && !form_bad) {
      uint32_t p = ps.next();
      ModParam0 ma, mb;
      if (!reduce_param_mod(a.omega, a.rho, p, ma)) continue;
      if (!reduce_param_mod(b.omega, b.rho, p, mb)) continue;
      ModParam0 ra, rb;
      if (!reparam_mod(ma, form, n, ra) || !reparam_mod(mb, form, n, rb)) {
        if (state.primes_used() == 0 && ++bad >= 3) form_bad = true;
        continue;
      }
      // separation within each part is required for a union under this form
      if (ra.omega.deg() != a.omega.deg() || rb.omega.deg() != b.omega.deg()) {
        if (state.primes_used() == 0 && ++bad >= 3) form_bad = true;
        continue;
      }
      ModParam0 mu;
      if (!union_mod(ra, rb, mu)) {
        if (state.primes_used() == 0 && ++bad >= 3) form_bad = true;
        continue;
      }
      int d_here = mu.omega.deg();
      if (dbar < 0) dbar = d_here;
      if (d_here != dbar) {
        if (++bad >= 6) form_bad = true;
        continue;
      }
      bool stable = state.feed(p, flatten_mod(mu, dbar, n));
      if (stable) {
        ZeroDimParam cand = unflatten(state.value(), dbar, n, form);
        if (cand.omega.lead() == Rational(1) && check_form_congruence(cand) &&
            covers_exactly(cand, a.omega, a.rho) && covers_exactly(cand, b.omega, b.rho) &&
            cand.degree() <= a.degree() + b.degree() &&
            squarefree_certificate(cand.omega, seed ^ 0xabc2)) {
          return cand;
        }
      }
    }
    if (!form_bad)
      throw ResourceLimit("union: modular reconstruction did not stabilize");
  }
  throw MonteCarloFailure("union: no separating linear form for the union");
}

ZeroDimParam projection(const ZeroDimParam& p, int k, Rng& rng) {
  if (k < 1 || k > p.n) throw InvalidInput("projection: bad coordinate count");
  if (p.is_empty()) return empty_zero_dim(k);
  uint64_t seed = rng.next();
  return reparametrize(k, p.omega, p.rho, rng, seed);
}

ZeroDimParam inc_param(const ZeroDimParam& p, const Slp& phi, int i) {
  if (i < 1 || i > (int)phi.output_count())
    throw InvalidInput("inc_param: i exceeds phi output count");
  if (phi.input_count() != p.n) throw InvalidInput("inc_param: variable mismatch");
  ZeroDimParam out;
  out.n = p.n + i;
  out.omega = p.omega;
  if (p.is_empty()) return empty_zero_dim(out.n);
  SUModRing ring{p.omega};
  std::vector<QUPoly> point(p.rho.begin(), p.rho.end());
  auto w = phi.eval(ring, point);
  for (int j = 0; j < i; ++j) out.rho.push_back(w[j] % p.omega);
  for (auto& r : p.rho) out.rho.push_back(r);
  out.form.assign(i, Rational(0));
  for (auto& c : p.form) out.form.push_back(c);
  return out;
}

ZeroDimParam image(const Slp& phi, int j, const ZeroDimParam& p, Rng& rng) {
  ZeroDimParam lifted = inc_param(p, phi, j);
  return projection(lifted, j, rng);
}

int real_count(const ZeroDimParam& p) {
  if (p.is_empty()) return 0;
  ZZPoly f = zz_from_upoly(p.omega);
  return sturm_count_all(sturm_chain(f));
}

// ---------------------------------------------------------------------------
// exact checks
// ---------------------------------------------------------------------------

bool generator_vanishes(const MultiPoly& g, const ZeroDimParam& p) {
  if (p.is_empty()) return true;
  if (g.nvars() != p.n) throw InvalidInput("generator_vanishes: arity mismatch");
  SUModRing ring{p.omega};
  std::vector<QUPoly> point(p.rho.begin(), p.rho.end());
  return g.eval(ring, point).is_zero();
}

QUPoly compose_on_param(const MultiPoly& g, const ZeroDimParam& p) {
  SUModRing ring{p.omega};
  std::vector<QUPoly> point(p.rho.begin(), p.rho.end());
  return g.eval(ring, point) % p.omega;
}

bool generator_vanishes(const MultiPoly& g, const OneDimParam& p) {
  if (p.is_empty()) return true;
  if (g.nvars() != p.n) throw InvalidInput("generator_vanishes: arity mismatch");
  // Check g(rho / omega_u) * omega_u^deg(g) = 0 mod omega exactly, via enough
  // v-samples to exceed the v-degree of the remainder.
  int D = std::max(0, g.degree());
  int dv = p.omega.deg_v();
  for (auto& r : p.rho) dv = std::max(dv, r.deg_v());
  int du = p.omega.deg_u();
  long dv_num = (long)D * dv;                      // numerator v-degree
  long steps = std::max<long>(0, (long)D * du);    // reduction steps bound
  long bound = dv_num + steps * p.omega.deg_v() + 1;
  QBPoly wu = p.omega.derivative_u();
  for (long t = 0; t <= bound; ++t) {
    Rational v0 = Rational(t % 2 == 0 ? t / 2 : -(t + 1) / 2);  // 0, -1, 1, -2, ...
    QUPoly om = p.omega.eval_v(v0);
    QUPoly wuv = wu.eval_v(v0) % om;
    std::vector<QUPoly> x;
    for (auto& r : p.rho) x.push_back(r.eval_v(v0) % om);
    // evaluate with homogenizing powers of wu
    std::vector<QUPoly> wupow(D + 1);
    wupow[0] = QUPoly::constant(Rational(1));
    for (int i = 1; i <= D; ++i) wupow[i] = (wupow[i - 1] * wuv) % om;
    QUPoly acc;
    for (auto& term : g.terms()) {
      QUPoly prod = QUPoly::constant(term.c);
      int total = 0;
      for (int i = 0; i < p.n; ++i)
        for (int e = 0; e < term.m.e[i]; ++e) {
          prod = (prod * x[i]) % om;
          ++total;
        }
      prod = (prod * wupow[D - total]) % om;
      acc = acc + prod;
    }
    if (!(acc % om).is_zero()) return false;
  }
  return true;
}

bool points_subset(const ZeroDimParam& a, const ZeroDimParam& b) {
  if (a.is_empty()) return true;
  if (b.is_empty()) return false;
  if (a.n != b.n) throw InvalidInput("points_subset: arity mismatch");
  ZeroDimParam cand = b;
  return covers_exactly(cand, a.omega, a.rho);
}

bool point_on_param(const std::vector<Rational>& pt, const ZeroDimParam& p) {
  if (p.is_empty()) return false;
  Rational u(0);
  for (int i = 0; i < p.n; ++i) u += p.form[i] * pt[i];
  if (sgn(p.omega.eval(u)) != 0) return false;
  for (int i = 0; i < p.n; ++i)
    if (p.rho[i].eval(u) != pt[i]) return false;
  return true;
}

ZeroDimParam transform_points(const ZeroDimParam& p,
                              const std::vector<std::vector<Rational>>& M, Rng& rng) {
  (void)rng;
  if (p.n == 0 || p.is_empty()) return p;
  int n = p.n;
  // rho' = M rho, form' = M^{-T} form (so that form'(M y) = form(y))
  ZeroDimParam out;
  out.n = n;
  out.omega = p.omega;
  out.rho.assign(n, QUPoly());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (sgn(M[i][j])) out.rho[i] = out.rho[i] + p.rho[j] * M[i][j];
  // invert M over Q
  std::vector<std::vector<Rational>> A(n, std::vector<Rational>(2 * n, Rational(0)));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) A[i][j] = M[i][j];
    A[i][n + i] = 1;
  }
  for (int col = 0; col < n; ++col) {
    int piv = col;
    while (piv < n && sgn(A[piv][col]) == 0) ++piv;
    if (piv == n) throw InvalidInput("transform_points: singular matrix");
    std::swap(A[piv], A[col]);
    Rational inv = 1 / A[col][col];
    for (int j = 0; j < 2 * n; ++j) A[col][j] *= inv;
    for (int i = 0; i < n; ++i) {
      if (i == col || sgn(A[i][col]) == 0) continue;
      Rational f = A[i][col];
      for (int j = 0; j < 2 * n; ++j) A[i][j] -= f * A[col][j];
    }
  }
  out.form.assign(n, Rational(0));
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) out.form[j] += p.form[i] * A[i][n + j];
  return out;
}

OneDimParam transform_points(const OneDimParam& p,
                             const std::vector<std::vector<Rational>>& M, Rng& rng) {
  if (p.n == 0 || p.is_empty()) return p;
  int n = p.n;
  OneDimParam out;
  out.n = n;
  out.omega = p.omega;
  out.rho.assign(n, QBPoly());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (sgn(M[i][j])) out.rho[i] = out.rho[i] + p.rho[j] * M[i][j];
  // reuse the zero-dim form transport for both forms
  ZeroDimParam helper;
  helper.n = n;
  helper.omega = QUPoly::x(Rational(1));  // irrelevant
  helper.rho.assign(n, QUPoly());
  helper.form = p.form;
  ZeroDimParam moved = transform_points(helper, M, rng);
  out.form = moved.form;
  helper.form = p.form2;
  moved = transform_points(helper, M, rng);
  out.form2 = moved.form;
  return out;
}

std::vector<ParamPointBox> isolate_real_points(const ZeroDimParam& p, const Rational& eps) {
  std::vector<ParamPointBox> out;
  if (p.is_empty()) return out;
  ZZPoly f = zz_from_upoly(p.omega);
  auto roots = isolate_roots(f);
  for (auto& r : roots) {
    ParamPointBox b;
    b.root = r;
    for (;;) {
      b.box.clear();
      QI th(b.root.lo, b.root.hi);
      bool small_enough = true;
      for (int i = 0; i < p.n; ++i) {
        QI c = qi_eval(p.rho[i], th);
        if (c.width() > eps) small_enough = false;
        b.box.push_back(c);
      }
      if (small_enough || b.root.exact) break;
      refine_root(f, b.root, b.root.width() / 16);
    }
    out.push_back(std::move(b));
  }
  return out;
}

// ---------------------------------------------------------------------------
// JSON
// ---------------------------------------------------------------------------

namespace {

json upoly_rows(const QUPoly& f) {
  // single-column rows: row i = [coeff of u^i]
  json rows = json::array();
  for (size_t i = 0; i < f.c.size(); ++i)
    rows.push_back(json::array({rational_to_string(f.c[i])}));
  return rows;
}

json bpoly_rows(const QBPoly& f) {
  json rows = json::array();
  for (size_t i = 0; i < f.cu.size(); ++i) {
    json row = json::array();
    for (size_t j = 0; j < f.cu[i].c.size(); ++j)
      row.push_back(rational_to_string(f.cu[i].c[j]));
    if (row.empty()) row.push_back("0");
    rows.push_back(std::move(row));
  }
  return rows;
}

QUPoly upoly_from_rows(const json& rows) {
  QUPoly f;
  for (auto& row : rows) f.c.push_back(parse_rational(row.at(0).get<std::string>()));
  f.norm();
  return f;
}

QBPoly bpoly_from_rows(const json& rows) {
  QBPoly f;
  for (auto& row : rows) {
    QUPoly r;
    for (auto& e : row) r.c.push_back(parse_rational(e.get<std::string>()));
    r.norm();
    f.cu.push_back(std::move(r));
  }
  f.norm();
  return f;
}

json form_json(const std::vector<Rational>& f) {
  json a = json::array();
  for (auto& c : f) a.push_back(rational_to_string(c));
  return a;
}

std::vector<Rational> form_from_json(const json& a) {
  std::vector<Rational> f;
  for (auto& e : a) f.push_back(parse_rational(e.get<std::string>()));
  return f;
}

}  // namespace

std::string zero_dim_to_json(const ZeroDimParam& p) {
  json j;
  j["n"] = p.n;
  j["omega"] = upoly_rows(p.omega);
  json rho = json::array();
  for (auto& r : p.rho) rho.push_back(upoly_rows(r));
  j["rho"] = std::move(rho);
  j["form"] = form_json(p.form);
  return j.dump();
}

std::string one_dim_to_json(const OneDimParam& p) {
  json j;
  j["n"] = p.n;
  j["omega"] = bpoly_rows(p.omega);
  json rho = json::array();
  for (auto& r : p.rho) rho.push_back(bpoly_rows(r));
  j["rho"] = std::move(rho);
  j["form"] = form_json(p.form);
  j["form2"] = form_json(p.form2);
  return j.dump();
}

ZeroDimParam zero_dim_from_json(const std::string& text) {
  json j = json::parse(text);
  ZeroDimParam p;
  p.n = j.at("n").get<int>();
  p.omega = upoly_from_rows(j.at("omega"));
  for (auto& r : j.at("rho")) p.rho.push_back(upoly_from_rows(r));
  p.form = form_from_json(j.at("form"));
  return p;
}

OneDimParam one_dim_from_json(const std::string& text) {
  json j = json::parse(text);
  OneDimParam p;
  p.n = j.at("n").get<int>();
  p.omega = bpoly_from_rows(j.at("omega"));
  for (auto& r : j.at("rho")) p.rho.push_back(bpoly_from_rows(r));
  p.form = form_from_json(j.at("form"));
  if (j.contains("form2")) p.form2 = form_from_json(j.at("form2"));
  return p;
}

}  // namespace polarpath

#include <unordered_map>

#include "polarpath/elim.hpp"
#include "polarpath/zplinalg.hpp"

namespace polarpath {
namespace elim_detail {

bool mod_groebner_zp(std::vector<ModPoly> gens, const ElimLimits& limits,
                     std::vector<ModPoly>& out) {
  std::vector<ModPoly> mg;
  for (auto& g : gens)
    if (!g.is_zero()) mg.push_back(std::move(g));
  if (mg.empty()) return false;
  auto r = buchberger(std::move(mg), limits, nullptr);
  if (!r) return false;
  out = std::move(*r);
  return true;
}

bool mod_groebner(const std::vector<MultiPoly>& gens, int n, uint32_t p,
                  const ElimLimits& limits, std::vector<ModPoly>& out) {
  std::vector<ModPoly> mg;
  for (auto& g : gens) {
    if (g.is_zero()) continue;
    ModPoly m(n);
    if (!reduce_poly_mod(g, p, m)) return false;
    // a vanishing leading term makes the prime unusable
    if (m.is_zero() || m.lead().m != g.lead().m) return false;
    mg.push_back(std::move(m));
  }
  return mod_groebner_zp(std::move(mg), limits, out);
}

bool mod_quotient(const std::vector<MultiPoly>& gens, int n, uint32_t p,
                  const ElimLimits& limits, ModQuotient& out) {
  out.p = p;
  if (!mod_groebner(gens, n, p, limits, out.gb)) return false;
  if (dimension_from_leads(out.gb) > 0) return false;
  out.basis = staircase(out.gb, limits.max_quotient);
  return true;
}

QuotientAlgebra::QuotientAlgebra(const ModQuotient& q) : q_(q) {
  n_ = q.gb.empty() ? 0 : q.gb[0].nvars();
  for (size_t i = 0; i < q.basis.size(); ++i)
    index_.emplace(q.basis[i], static_cast<int>(i));
}

std::vector<uint32_t> QuotientAlgebra::vec_of(const ModPoly& f) const {
  ModPoly r = normal_form(f, q_.gb);
  std::vector<uint32_t> v(q_.basis.size(), 0);
  for (auto& t : r.terms()) {
    auto it = index_.find(t.m);
    if (it == index_.end()) throw InvalidInput("quotient: reduction left the staircase");
    v[it->second] = t.c.v;
  }
  return v;
}

ModPoly QuotientAlgebra::poly_of(const std::vector<uint32_t>& v) const {
  std::vector<ModPoly::Term> ts;
  for (size_t i = 0; i < v.size(); ++i)
    if (v[i]) ts.push_back({q_.basis[i], Zp::raw(v[i], q_.p)});
  return ModPoly::from_terms(n_, std::move(ts));
}

std::vector<uint32_t> QuotientAlgebra::mul(const ModPoly& g,
                                           const std::vector<uint32_t>& v) const {
  return vec_of(g * poly_of(v));
}

const Monomial& QuotientAlgebra::basis_monomial(size_t i) const { return q_.basis[i]; }

std::vector<uint32_t> QuotientAlgebra::one_vec() const {
  std::vector<uint32_t> v(q_.basis.size(), 0);
  auto it = index_.find(Monomial::one(n_));
  if (it == index_.end()) throw InvalidInput("quotient without 1");
  v[it->second] = 1;
  return v;
}

bool QuotientAlgebra::invert(const ModPoly& g, ModPoly& out) const {
  const uint32_t p = q_.p;
  size_t k = dim();
  ZpMat M(k, k, p);
  for (size_t b = 0; b < k; ++b) {
    auto col = vec_of(g * ModPoly::monomial(n_, q_.basis[b], Zp::one(p)));
    for (size_t i = 0; i < k; ++i) M.at(i, b) = col[i];
  }
  std::vector<std::vector<uint32_t>> sol;
  if (!zp_solve(std::move(M), {one_vec()}, sol)) return false;
  out = poly_of(sol[0]);
  // zp_solve zero-fills free columns; verify it really is an inverse
  return vec_of(g * out) == one_vec();
}

namespace {

// dense matrix of multiplication by g
ZpMat mul_matrix(const QuotientAlgebra& alg, const ModPoly& g) {
  const uint32_t p = alg.prime();
  size_t k = alg.dim();
  ZpMat M(k, k, p);
  std::vector<uint32_t> e(k, 0);
  for (size_t b = 0; b < k; ++b) {
    std::fill(e.begin(), e.end(), 0);
    e[b] = 1;
    auto col = alg.mul(g, e);
    for (size_t i = 0; i < k; ++i) M.at(i, b) = col[i];
  }
  return M;
}

}  // namespace

bool rur_elements(const QuotientAlgebra& alg, const ModPoly& ell,
                  const std::vector<ModPoly>& coords, bool allow_trace, ModRur& out) {
  const uint32_t p = alg.prime();
  const size_t k = alg.dim();
  out.coords.clear();
  if (k == 0) {  // empty variety
    out.omega = ZpUPoly::constant(Zp::one(p));
    out.coords.assign(coords.size(), ZpUPoly());
    return true;
  }
  ZpMat L = mul_matrix(alg, ell);

  // Krylov sequence from the vector of 1, echelonized with combos
  struct EchRow {
    std::vector<uint32_t> w;
    ZpUPoly combo;
    size_t pivot;
  };
  std::vector<EchRow> ech;
  std::vector<std::vector<uint32_t>> krylov;
  ZpUPoly minpoly;
  std::vector<uint32_t> cur = alg.one_vec();
  for (size_t j = 0; j <= k; ++j) {
    std::vector<uint32_t> w = cur;
    ZpUPoly combo;
    combo.c.assign(j + 1, Zp::zero(p));
    combo.c[j] = Zp::one(p);
    combo.norm();
    for (auto& row : ech) {
      if (w[row.pivot] == 0) continue;
      Zp f = Zp::raw(w[row.pivot], p);
      for (size_t t = 0; t < k; ++t) w[t] = (Zp::raw(w[t], p) - f * Zp::raw(row.w[t], p)).v;
      combo = combo - row.combo * f;
    }
    size_t piv = 0;
    while (piv < k && w[piv] == 0) ++piv;
    if (piv == k) {
      minpoly = combo;
      break;
    }
    Zp inv = Zp::raw(w[piv], p).inv();
    for (size_t t = 0; t < k; ++t) w[t] = (Zp::raw(w[t], p) * inv).v;
    combo = combo * inv;
    ech.push_back({std::move(w), std::move(combo), piv});
    krylov.push_back(cur);
    cur = zp_mat_vec(L, cur);
  }
  if (minpoly.is_zero()) return false;
  int k1 = minpoly.deg();
  ZpUPoly md = minpoly.derivative();
  if (md.is_zero()) return false;
  ZpUPoly omega = (minpoly / upoly_gcd(minpoly, md)).monic();
  int dbar = omega.deg();
  if (dbar <= 0) return false;

  // coordinates through the cyclic structure when available
  {
    ZpMat K(k, k1, p);
    for (int j = 0; j < k1; ++j)
      for (size_t i = 0; i < k; ++i) K.at(i, j) = krylov[j][i];
    std::vector<std::vector<uint32_t>> rhs;
    for (auto& c : coords) rhs.push_back(alg.vec_of(c));
    std::vector<std::vector<uint32_t>> sol;
    if (zp_solve(std::move(K), rhs, sol)) {
      // confirm consistency (zp_solve zero-fills; re-check the combination)
      bool good = true;
      for (size_t i = 0; i < coords.size() && good; ++i) {
        std::vector<uint32_t> acc(k, 0);
        for (int j = 0; j < k1; ++j) {
          if (!sol[i][j]) continue;
          for (size_t t = 0; t < k; ++t)
            acc[t] = (Zp::raw(acc[t], p) + Zp::raw(sol[i][j], p) * Zp::raw(krylov[j][t], p)).v;
        }
        if (acc != alg.vec_of(coords[i])) good = false;
      }
      if (good) {
        out.omega = omega;
        for (size_t i = 0; i < coords.size(); ++i) {
          ZpUPoly P;
          P.c.assign(k1, Zp::zero(p));
          for (int j = 0; j < k1; ++j) P.c[j] = Zp::raw(sol[i][j], p);
          P.norm();
          out.coords.push_back(P % omega);
        }
        return true;
      }
    }
  }

  if (!allow_trace || k > 600) return false;

  // trace-form path (handles multiplicities)
  std::vector<uint32_t> tau(k, 0);
  {
    std::vector<uint32_t> e(k, 0);
    for (size_t b = 0; b < k; ++b) {
      // trace of multiplication by basis monomial b
      ModPoly bpoly =
          ModPoly::monomial(alg.nvars(), alg.basis_monomial(b), Zp::one(p));
      uint64_t acc = 0;
      for (size_t b2 = 0; b2 < k; ++b2) {
        std::fill(e.begin(), e.end(), 0);
        e[b2] = 1;
        auto v = alg.mul(bpoly, e);
        acc += v[b2];
      }
      tau[b] = static_cast<uint32_t>(acc % p);
    }
  }
  auto dot = [&](const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    uint64_t acc = 0;
    for (size_t i = 0; i < k; ++i) acc = (acc + (uint64_t)a[i] * b[i]) % p;
    return static_cast<uint32_t>(acc);
  };
  std::vector<ZpUPoly> H(dbar);
  for (int j = 0; j < dbar; ++j) {
    ZpUPoly h;
    h.c.assign(dbar - j, Zp::zero(p));
    for (int i = j + 1; i <= dbar; ++i)
      h.c[i - j - 1] = i <= omega.deg() ? omega.c[i] : Zp::zero(p);
    h.norm();
    H[j] = h;
  }
  ZpUPoly N1;
  std::vector<ZpUPoly> Nx(coords.size());
  std::vector<uint32_t> qj = alg.one_vec();
  for (int j = 0; j < dbar; ++j) {
    uint32_t tj = dot(tau, qj);
    if (tj) N1 = N1 + H[j] * Zp::raw(tj, p);
    for (size_t i = 0; i < coords.size(); ++i) {
      auto w = alg.mul(coords[i], qj);
      uint32_t sij = dot(tau, w);
      if (sij) Nx[i] = Nx[i] + H[j] * Zp::raw(sij, p);
    }
    qj = zp_mat_vec(L, qj);
  }
  ZpUPoly inv;
  if (!upoly_invmod(N1, omega, inv)) return false;
  out.omega = omega;
  for (size_t i = 0; i < coords.size(); ++i) out.coords.push_back((Nx[i] * inv) % omega);
  return true;
}

bool mod_rur(const ModQuotient& q, const std::vector<Rational>& form, int n_form,
             int n_out, bool allow_trace, ModRur& out) {
  QuotientAlgebra alg(q);
  if (alg.dim() == 0) {
    out.omega = ZpUPoly::constant(Zp::one(q.p));
    out.coords.assign(n_out, ZpUPoly());
    return true;
  }
  int n = alg.nvars();
  std::vector<ModPoly::Term> lt;
  for (int i = 0; i < n_form; ++i) {
    Zp c;
    if (!reduce_mod(form[i], q.p, c)) return false;
    if (!c.is_zero()) lt.push_back({Monomial::var(n, i), c});
  }
  ModPoly ell = ModPoly::from_terms(n, std::move(lt));
  std::vector<ModPoly> coords;
  for (int i = 0; i < n_out; ++i)
    coords.push_back(ModPoly::variable(n, i, Zp::one(q.p)));
  return rur_elements(alg, ell, coords, allow_trace, out);
}

}  // namespace elim_detail

namespace elim {

using elim_detail::ModQuotient;
using elim_detail::ModRur;

int dimension_of_system(const std::vector<MultiPoly>& gens, int n, uint64_t seed,
                        const ElimLimits& limits) {
  PrimeStream ps(seed);
  std::vector<int> votes;
  size_t failures = 0;
  while (votes.size() < 2 && failures < 24) {
    uint32_t p = ps.next();
    std::vector<ModPoly> gb;
    if (!elim_detail::mod_groebner(gens, n, p, limits, gb)) {
      ++failures;
      continue;
    }
    votes.push_back(dimension_from_leads(gb));
  }
  if (votes.size() < 2) throw ResourceLimit("dimension_of_system: no usable primes");
  if (votes[0] == votes[1]) return votes[0];
  while (failures < 32) {
    uint32_t p = ps.next();
    std::vector<ModPoly> gb;
    if (!elim_detail::mod_groebner(gens, n, p, limits, gb)) {
      ++failures;
      continue;
    }
    int d = dimension_from_leads(gb);
    if (d == votes[0] || d == votes[1]) return d;
  }
  throw MonteCarloFailure("dimension_of_system: primes disagree");
}

namespace {

std::vector<uint32_t> flatten_rur(const ModRur& r, int dbar, int n_out) {
  std::vector<uint32_t> out;
  out.reserve(dbar + 1 + n_out * dbar);
  for (int i = 0; i <= dbar; ++i)
    out.push_back(i <= r.omega.deg() ? r.omega.c[i].v : 0);
  for (int kk = 0; kk < n_out; ++kk)
    for (int i = 0; i < dbar; ++i)
      out.push_back(i <= r.coords[kk].deg() ? r.coords[kk].c[i].v : 0);
  return out;
}

ZeroDimParam solve_zero_dim_restricted(const std::vector<MultiPoly>& gens, int n,
                                       int n_out, const SolveOptions& opt,
                                       ElimStats* stats) {
  Rng rng(opt.seed);
  const int n_form = n_out;
  for (int attempt = 0; attempt <= opt.form_retries; ++attempt) {
    std::vector<Rational> form = random_form(n_form, rng);
    PrimeStream ps(opt.seed * 0x9e37u + 131 * attempt + 7);
    RatRecState state;
    int dbar = -1;
    size_t bad = 0, used = 0;
    bool form_bad = false;
    int dim_votes = 0;
    while (used < opt.limits.max_primes && !form_bad) {
      uint32_t p = ps.next();
      ++used;
      ModQuotient q;
      std::vector<ModPoly> gb;
      if (!elim_detail::mod_groebner(gens, n, p, opt.limits, gb)) {
        if (++bad > 24) throw ResourceLimit("solve_zero_dim: primes keep failing");
        continue;
      }
      int dim = dimension_from_leads(gb);
      if (dim > 0) {
        if (++dim_votes >= 2)
          throw DimensionError("solve_zero_dim: system is positive-dimensional");
        continue;
      }
      q.p = p;
      q.gb = std::move(gb);
      q.basis = staircase(q.gb, opt.limits.max_quotient);
      if (stats) stats->primes.push_back(p);
      if (q.basis.empty()) {
        // empty variety: confirm on a second prime
        ModQuotient q2;
        uint32_t p2 = ps.next();
        if (elim_detail::mod_quotient(gens, n, p2, opt.limits, q2) && q2.basis.empty())
          return empty_zero_dim(n_out);
        continue;
      }
      ModRur r;
      if (!elim_detail::mod_rur(q, form, n_form, n_out, true, r)) {
        if (state.primes_used() == 0 && ++bad >= 3) form_bad = true;
        continue;
      }
      if (dbar < 0) dbar = r.omega.deg();
      if (r.omega.deg() != dbar) {
        if (++bad >= 8) form_bad = true;
        continue;
      }
      bool stable = state.feed(p, flatten_rur(r, dbar, n_out));
      if (!stable) continue;
      ZeroDimParam cand;
      cand.n = n_out;
      const auto& vals = state.value();
      cand.omega.c.assign(vals.begin(), vals.begin() + dbar + 1);
      cand.omega.norm();
      size_t pos = dbar + 1;
      for (int i = 0; i < n_out; ++i) {
        QUPoly r2;
        r2.c.assign(vals.begin() + pos, vals.begin() + pos + dbar);
        r2.norm();
        pos += dbar;
        cand.rho.push_back(std::move(r2));
      }
      cand.form = form;
      auto rep = validate(cand);
      if (!rep.ok) continue;
      if (opt.verify && n_out == n) {
        bool member = true;
        for (auto& g : gens)
          if (!generator_vanishes(g, cand)) {
            member = false;
            break;
          }
        if (!member) {
          form_bad = true;  // averaged phantom points: the form did not separate
          continue;
        }
      }
      return cand;
    }
  }
  throw MonteCarloFailure("solve_zero_dim: separating-form retries exhausted");
}

}  // namespace

ZeroDimParam solve_system_zero_dim(const std::vector<MultiPoly>& gens, int n,
                                   const SolveOptions& opt, ElimStats* stats) {
  if (gens.empty()) throw InvalidInput("solve: empty system");
  int n_out = opt.out_vars < 0 ? n : opt.out_vars;
  if (n_out == n) return solve_zero_dim_restricted(gens, n, n, opt, stats);
  try {
    return solve_zero_dim_restricted(gens, n, n_out, opt, stats);
  } catch (const MonteCarloFailure&) {
    // dropped coordinates are not functions of the kept ones under any tried
    // form: solve in full space, then project
    SolveOptions full = opt;
    full.out_vars = -1;
    ZeroDimParam whole = solve_zero_dim_restricted(gens, n, n, full, stats);
    Rng rng(opt.seed ^ 0x9e3779b9ull);
    return projection(whole, n_out, rng);
  }
}

ZeroDimParam solve_zero_dim(const GroebnerBasis& G, const SolveOptions& opt) {
  if (G.elements.empty()) throw InvalidInput("solve_zero_dim: empty basis");
  if (dimension(G) > 0)
    throw DimensionError("solve_zero_dim: basis is positive-dimensional");
  return solve_system_zero_dim(G.elements, G.variableCount, opt);
}

}  // namespace elim
}  // namespace polarpath

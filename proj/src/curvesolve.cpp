#include "polarpath/elim.hpp"
#include "polarpath/modparam.hpp"

namespace polarpath {

namespace {

// v0 sample sequence 0, -1, 1, -2, 2, ...
long sample_value(int t) { return t % 2 ? -(t + 1) / 2 : t / 2; }

QBPoly unflatten_bpoly(const std::vector<Rational>& vals, size_t& pos, int rows, int m) {
  QBPoly f;
  f.cu.resize(rows);
  for (int i = 0; i < rows; ++i) {
    QUPoly row;
    row.c.assign(vals.begin() + pos, vals.begin() + pos + m);
    row.norm();
    pos += m;
    f.cu[i] = std::move(row);
  }
  f.norm();
  return f;
}

void flatten_bpoly(const ZpBPoly& f, int rows, int m, std::vector<uint32_t>& out) {
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < m; ++j) {
      uint32_t v = 0;
      if (i < (int)f.cu.size() && j < (int)f.cu[i].c.size()) v = f.cu[i].c[j].v;
      out.push_back(v);
    }
}

}  // namespace

namespace elim {

using elim_detail::ModQuotient;
using elim_detail::ModRur;

namespace {

struct FiberPlan {
  std::vector<Rational> l, l2;  // forms over the first n_out coordinates
  int pivot = 0;
  int n = 0, n_out = 0;
  std::vector<int> where;        // old -> new var index, pivot -> -1
  std::vector<Rational> ltilde;  // substituted form over n-1 vars
  Rational c0_per_v0;            // constant shift of l-values per unit of v0
};

bool make_plan(int n, int n_out, const std::vector<Rational>& l,
               const std::vector<Rational>& l2, FiberPlan& plan) {
  plan.n = n;
  plan.n_out = n_out;
  plan.l = l;
  plan.l2 = l2;
  int pivot = -1;
  Rational best(0);
  for (int i = 0; i < n_out; ++i) {
    Rational a = abs(l2[i]);
    if (a > best) {
      best = a;
      pivot = i;
    }
  }
  if (pivot < 0) return false;
  plan.pivot = pivot;
  plan.where.assign(n, -1);
  int k = 0;
  for (int i = 0; i < n; ++i)
    if (i != pivot) plan.where[i] = k++;
  plan.ltilde.assign(n - 1, Rational(0));
  for (int i = 0; i < n_out; ++i) {
    if (i == pivot) continue;
    plan.ltilde[plan.where[i]] = l[i] - l[pivot] * l2[i] / l2[pivot];
  }
  plan.c0_per_v0 = l[pivot] / l2[pivot];
  return true;
}

bool substituted_fiber_gens(const std::vector<ModPoly>& gens_p, const FiberPlan& plan,
                            uint32_t p, long v0, std::vector<ModPoly>& out) {
  int n = plan.n;
  Zp l2p;
  if (!reduce_mod(plan.l2[plan.pivot], p, l2p) || l2p.is_zero()) return false;
  Zp inv = l2p.inv();
  std::vector<ModPoly::Term> ts;
  Zp c0 = coeff_from_long(Zp::one(p), v0) * inv;
  if (!c0.is_zero()) ts.push_back({Monomial::one(n), c0});
  for (int i = 0; i < plan.n_out; ++i) {
    if (i == plan.pivot) continue;
    Zp ci;
    if (!reduce_mod(plan.l2[i], p, ci)) return false;
    if (ci.is_zero()) continue;
    ts.push_back({Monomial::var(n, i), -(ci * inv)});
  }
  ModPoly repl = ModPoly::from_terms(n, std::move(ts));
  out.clear();
  for (auto& g : gens_p) {
    ModPoly h = g.substitute(plan.pivot, repl);
    if (h.is_zero()) continue;
    out.push_back(h.remap(n - 1, plan.where));
  }
  return !out.empty();
}

struct FiberData {
  ZpUPoly omega;
  std::vector<ZpUPoly> rho_rows;  // rho_i(., v0) = w_i * omega' mod omega
};

// Taylor shift f(u - c) over Z/p
ZpUPoly shift_arg(const ZpUPoly& f, Zp c) {
  if (c.is_zero() || f.is_zero()) return f;
  ZpUPoly lin;
  lin.c = {-c, Zp::one(c.p)};
  ZpUPoly acc;
  for (int i = f.deg(); i >= 0; --i) acc = acc * lin + ZpUPoly::constant(f.c[i]);
  return acc;
}

bool fiber_solve(const std::vector<ModPoly>& gens_p, const FiberPlan& plan, uint32_t p,
                 long v0, const ElimLimits& limits, int expected_delta, FiberData& out) {
  std::vector<ModPoly> sub;
  if (!substituted_fiber_gens(gens_p, plan, p, v0, sub)) return false;
  std::vector<ModPoly> gb;
  if (!elim_detail::mod_groebner_zp(std::move(sub), limits, gb)) return false;
  if (dimension_from_leads(gb) > 0) return false;
  ModQuotient q;
  q.p = p;
  q.gb = std::move(gb);
  try {
    q.basis = staircase(q.gb, limits.max_quotient);
  } catch (const ResourceLimit&) {
    return false;
  }
  size_t k = q.basis.size();
  if (expected_delta >= 0 && (int)k != expected_delta) return false;
  if (k == 0) {
    out.omega = ZpUPoly::constant(Zp::one(p));
    out.rho_rows.assign(plan.n_out, ZpUPoly());
    return true;
  }
  ModRur r;
  if (!elim_detail::mod_rur(q, plan.ltilde, plan.n - 1, plan.n - 1, false, r)) return false;
  if (r.omega.deg() != (int)k) return false;  // non-radical or non-separated slice
  Rational c0q = plan.c0_per_v0 * Rational((long)v0);
  Zp c0;
  if (!reduce_mod(c0q, p, c0)) return false;
  ZpUPoly omega = shift_arg(r.omega, c0).monic();
  std::vector<ZpUPoly> w(plan.n);
  for (int i = 0; i < plan.n; ++i) {
    if (i == plan.pivot) continue;
    w[i] = shift_arg(r.coords[plan.where[i]], c0) % omega;
  }
  {
    Zp l2p;
    if (!reduce_mod(plan.l2[plan.pivot], p, l2p)) return false;
    ZpUPoly acc = ZpUPoly::constant(coeff_from_long(Zp::one(p), v0));
    for (int i = 0; i < plan.n_out; ++i) {
      if (i == plan.pivot) continue;
      Zp ci;
      if (!reduce_mod(plan.l2[i], p, ci)) return false;
      if (!ci.is_zero()) acc = acc - w[i] * ci;
    }
    w[plan.pivot] = (acc * l2p.inv()) % omega;
  }
  ZpUPoly omega_d = omega.derivative();
  out.omega = omega;
  out.rho_rows.clear();
  for (int i = 0; i < plan.n_out; ++i)
    out.rho_rows.push_back((w[i] * omega_d) % omega);
  return true;
}

int mode_of(const std::vector<int>& xs) {
  int best = xs[0], bestc = 0;
  for (int cand : xs) {
    int c = 0;
    for (int d : xs)
      if (d == cand) ++c;
    if (c > bestc || (c == bestc && cand > best)) {
      best = cand;
      bestc = c;
    }
  }
  return best;
}

void interpolate_curve(const std::vector<std::pair<long, FiberData>>& samples, uint32_t p,
                       int n_out, ZpBPoly& omega, std::vector<ZpBPoly>& rho) {
  std::vector<Zp> vs;
  std::vector<ZpUPoly> oms;
  for (auto& s : samples) {
    vs.push_back(coeff_from_long(Zp::one(p), s.first));
    oms.push_back(s.second.omega);
  }
  omega = zp_binterpolate(vs, oms);
  rho.assign(n_out, ZpBPoly());
  for (int i = 0; i < n_out; ++i) {
    std::vector<ZpUPoly> rows;
    for (auto& s : samples) rows.push_back(s.second.rho_rows[i]);
    rho[i] = zp_binterpolate(vs, rows);
  }
}

}  // namespace

OneDimParam solve_system_one_dim(const std::vector<MultiPoly>& gens, int n,
                                 const SolveOptions& opt, ElimStats* stats) {
  if (gens.empty()) throw InvalidInput("solve: empty system");
  int n_out = opt.out_vars < 0 ? n : opt.out_vars;
  int dim = dimension_of_system(gens, n, opt.seed ^ 0xd1, opt.limits);
  if (dim > 1) throw DimensionError("solve_one_dim: dimension exceeds 1");
  if (dim < 1) return empty_one_dim(n_out);
  Rng rng(opt.seed);

  for (int attempt = 0; attempt <= opt.form_retries; ++attempt) {
    std::vector<Rational> l = random_form(n_out, rng);
    std::vector<Rational> l2 = random_form(n_out, rng);
    FiberPlan plan;
    if (!make_plan(n, n_out, l, l2, plan)) continue;
    PrimeStream ps(opt.seed * 0x517b + 131 * attempt + 29);
    RatRecState state;
    int delta = -1, m = 0;
    std::vector<long> v0s;
    size_t bad_primes = 0, used = 0;
    bool form_bad = false;
    while (used < opt.limits.max_primes && !form_bad) {
      uint32_t p = ps.next();
      ++used;
      std::vector<ModPoly> gens_p;
      {
        bool ok = true;
        for (auto& g : gens) {
          ModPoly mp(n);
          if (!reduce_poly_mod(g, p, mp) || mp.is_zero() || mp.lead().m != g.lead().m) {
            ok = false;
            break;
          }
          gens_p.push_back(std::move(mp));
        }
        if (!ok) {
          if (++bad_primes > 24) throw ResourceLimit("solve_one_dim: bad primes");
          continue;
        }
      }
      if (stats) stats->primes.push_back(p);

      if (delta < 0) {
        // learn the generic slice degree and the interpolation size
        std::vector<int> degs;
        std::vector<std::pair<long, FiberData>> samples;
        for (int t = 0; t < 64 && (int)degs.size() < 5; ++t) {
          long v0 = sample_value(t);
          FiberData fd;
          if (!fiber_solve(gens_p, plan, p, v0, opt.limits, -1, fd)) continue;
          degs.push_back(fd.omega.deg());
          samples.push_back({v0, std::move(fd)});
        }
        if (degs.size() < 5) {
          if (++bad_primes > 8) form_bad = true;
          continue;
        }
        int cand_delta = mode_of(degs);
        if (cand_delta == 0) return empty_one_dim(n_out);
        samples.erase(std::remove_if(samples.begin(), samples.end(),
                                     [&](auto& s) {
                                       return s.second.omega.deg() != cand_delta;
                                     }),
                      samples.end());
        int t = 64;
        int target = cand_delta + 2;
        const int cap = 6 * cand_delta + 24;
        bool sized = false;
        while (!sized && target <= cap) {
          while ((int)samples.size() < target && t < 40 * cap) {
            long v0 = sample_value(t++);
            FiberData fd;
            if (!fiber_solve(gens_p, plan, p, v0, opt.limits, cand_delta, fd)) continue;
            samples.push_back({v0, std::move(fd)});
          }
          if ((int)samples.size() < target) break;
          std::vector<std::pair<long, FiberData>> front(samples.begin(),
                                                        samples.begin() + target);
          ZpBPoly om;
          std::vector<ZpBPoly> rho;
          interpolate_curve(front, p, n_out, om, rho);
          int checked = 0, okc = 0;
          for (int tt = t; tt < 60 * cap && checked < 2; ++tt) {
            long v0 = sample_value(tt);
            bool dup = false;
            for (auto& s : samples)
              if (s.first == v0) dup = true;
            if (dup) continue;
            FiberData fd;
            if (!fiber_solve(gens_p, plan, p, v0, opt.limits, cand_delta, fd)) continue;
            ++checked;
            Zp v0z = coeff_from_long(Zp::one(p), v0);
            bool match = om.eval_v(v0z) == fd.omega;
            for (int i = 0; i < n_out && match; ++i)
              if (!(rho[i].eval_v(v0z) == fd.rho_rows[i])) match = false;
            if (match) ++okc;
          }
          if (checked == 2 && okc == 2) {
            sized = true;
            delta = cand_delta;
            m = target;
            v0s.clear();
            for (auto& s : front) v0s.push_back(s.first);
            std::vector<uint32_t> flat;
            flatten_bpoly(om, delta + 1, m, flat);
            for (auto& r : rho) flatten_bpoly(r, delta, m, flat);
            state.feed(p, flat);
          } else {
            target += std::max(2, target / 3);
          }
        }
        if (!sized) {
          if (++bad_primes > 6) form_bad = true;
        }
        continue;
      }

      // replay the frozen plan on this prime
      std::vector<std::pair<long, FiberData>> samples;
      bool prime_ok = true;
      for (long v0 : v0s) {
        FiberData fd;
        if (!fiber_solve(gens_p, plan, p, v0, opt.limits, delta, fd)) {
          prime_ok = false;
          break;
        }
        samples.push_back({v0, std::move(fd)});
      }
      if (!prime_ok) {
        if (++bad_primes > 24) form_bad = true;
        continue;
      }
      ZpBPoly om;
      std::vector<ZpBPoly> rho;
      interpolate_curve(samples, p, n_out, om, rho);
      std::vector<uint32_t> flat;
      flatten_bpoly(om, delta + 1, m, flat);
      for (auto& r : rho) flatten_bpoly(r, delta, m, flat);
      if (!state.feed(p, flat)) continue;

      OneDimParam cand;
      cand.n = n_out;
      const auto& vals = state.value();
      size_t pos = 0;
      cand.omega = unflatten_bpoly(vals, pos, delta + 1, m);
      for (int i = 0; i < n_out; ++i)
        cand.rho.push_back(unflatten_bpoly(vals, pos, delta, m));
      cand.form = l;
      cand.form2 = l2;
      if (cand.omega.deg_u() != delta || !cand.omega.monic_in_u()) continue;
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
          form_bad = true;
          continue;
        }
      }
      return cand;
    }
  }
  throw MonteCarloFailure("solve_one_dim: retries exhausted");
}

OneDimParam solve_one_dim(const GroebnerBasis& G, const SolveOptions& opt) {
  if (G.elements.empty()) throw InvalidInput("solve_one_dim: empty basis");
  int d = dimension(G);
  if (d != 1) throw DimensionError("solve_one_dim: dimension is not 1");
  return solve_system_one_dim(G.elements, G.variableCount, opt);
}

}  // namespace elim

// ---------------------------------------------------------------------------
// OneDimParam union (fiberwise zero-dimensional unions + interpolation)
// ---------------------------------------------------------------------------

namespace {

struct ModCurve {
  uint32_t p = 0;
  ZpBPoly omega, omega_u;
  std::vector<ZpBPoly> rho;
};

bool reduce_curve_mod(const OneDimParam& c, uint32_t p, ModCurve& out) {
  out.p = p;
  if (!reduce_bpoly_mod(c.omega, p, out.omega)) return false;
  if (out.omega.deg_u() != c.omega.deg_u()) return false;
  out.omega_u = out.omega.derivative_u();
  out.rho.assign(c.rho.size(), ZpBPoly());
  for (size_t i = 0; i < c.rho.size(); ++i)
    if (!reduce_bpoly_mod(c.rho[i], p, out.rho[i])) return false;
  return true;
}

ModPoly bpoly_to_mod2(const ZpBPoly& f) {
  std::vector<ModPoly::Term> ts;
  for (size_t i = 0; i < f.cu.size(); ++i)
    for (size_t j = 0; j < f.cu[i].c.size(); ++j) {
      if (f.cu[i].c[j].is_zero()) continue;
      Monomial m = Monomial::one(2);
      m.e[0] = static_cast<uint16_t>(i);
      m.e[1] = static_cast<uint16_t>(j);
      m.deg = static_cast<uint32_t>(i + j);
      ts.push_back({m, f.cu[i].c[j]});
    }
  return ModPoly::from_terms(2, std::move(ts));
}

// fiber of the curve at l2(x) = v0, as points under form l in x-space.
// Solves {omega = 0, sum l2_i rho_i = v0 * omega_u, z * omega_u = 1} in
// (u, v, z); the slack variable removes the omega_u = 0 locus and doubles as
// the denominator inverse for the x-coordinates.
bool curve_fiber_mod(const ModCurve& c, const std::vector<Rational>& l,
                     const std::vector<Rational>& l2, long v0, const ElimLimits& limits,
                     ModParam0& out) {
  uint32_t p = c.p;
  int n = static_cast<int>(c.rho.size());
  bool dbg = getenv("POLARPATH_DEBUG") != nullptr;
  ZpBPoly F;
  for (int i = 0; i < n; ++i) {
    Zp ci;
    if (!reduce_mod(l2[i], p, ci)) return false;
    if (!ci.is_zero()) F = F + c.rho[i] * ci;
  }
  F = F - c.omega_u * coeff_from_long(Zp::one(p), v0);
  F = F.mod_u(c.omega);
  auto to_mod3 = [&](const ZpBPoly& f, int zdeg) {
    std::vector<ModPoly::Term> ts;
    for (size_t i = 0; i < f.cu.size(); ++i)
      for (size_t j = 0; j < f.cu[i].c.size(); ++j) {
        if (f.cu[i].c[j].is_zero()) continue;
        Monomial m = Monomial::one(3);
        m.e[0] = static_cast<uint16_t>(i);
        m.e[1] = static_cast<uint16_t>(j);
        m.e[2] = static_cast<uint16_t>(zdeg);
        m.deg = static_cast<uint32_t>(i + j + zdeg);
        ts.push_back({m, f.cu[i].c[j]});
      }
    return ModPoly::from_terms(3, std::move(ts));
  };
  ModPoly zslack = to_mod3(c.omega_u.mod_u(c.omega), 1) -
                   ModPoly::constant(3, Zp::one(p));
  std::vector<ModPoly> gens{to_mod3(c.omega, 0), to_mod3(F, 0), zslack};
  std::vector<ModPoly> gb;
  if (!elim_detail::mod_groebner_zp(std::move(gens), limits, gb)) {
    if (dbg) fprintf(stderr, "[cfm] gb fail\n");
    return false;
  }
  if (dimension_from_leads(gb) > 0) {
    if (dbg) fprintf(stderr, "[cfm] dim>0\n");
    return false;
  }
  elim_detail::ModQuotient q;
  q.p = p;
  q.gb = std::move(gb);
  try {
    q.basis = staircase(q.gb, limits.max_quotient);
  } catch (const ResourceLimit&) {
    return false;
  }
  elim_detail::QuotientAlgebra alg(q);
  out.p = p;
  if (alg.dim() == 0) {
    out.omega = ZpUPoly::constant(Zp::one(p));
    out.rho.assign(n, ZpUPoly());
    return true;
  }
  // x_i = rho_i * z in the quotient
  std::vector<ModPoly> coords;
  ModPoly ell(3);
  for (int i = 0; i < n; ++i) {
    ModPoly xi = normal_form(to_mod3(c.rho[i].mod_u(c.omega), 1), q.gb);
    Zp li;
    if (!reduce_mod(l[i], p, li)) return false;
    if (!li.is_zero()) ell += xi * li;
    coords.push_back(std::move(xi));
  }
  elim_detail::ModRur r;
  if (!elim_detail::rur_elements(alg, ell, coords, false, r)) {
    if (dbg) fprintf(stderr, "[cfm] rur fail k=%zu\n", alg.dim());
    return false;
  }
  if (r.omega.deg() != (int)alg.dim()) {
    if (dbg) fprintf(stderr, "[cfm] deg drop %d vs %zu\n", r.omega.deg(), alg.dim());
    return false;
  }
  out.omega = r.omega;
  out.rho = r.coords;
  return true;
}

}  // namespace

// exact containment Z(a) in Z(U) for curves, by composing U's data with the
// forms and checking vanishing on a; cost grows quickly, so callers gate it
bool curve_covers(const OneDimParam& U, const OneDimParam& a) {
  if (a.is_empty()) return true;
  if (U.is_empty()) return false;
  MultiPoly om = bpoly_compose_linear(U.omega, U.form, U.form2);
  if (!generator_vanishes(om, a)) return false;
  MultiPoly wu = bpoly_compose_linear(U.omega.derivative_u(), U.form, U.form2);
  for (int i = 0; i < U.n; ++i) {
    MultiPoly gi = bpoly_compose_linear(U.rho[i], U.form, U.form2) -
                   MultiPoly::variable(U.n, i, Rational(1)) * wu;
    if (!generator_vanishes(gi, a)) return false;
  }
  return true;
}

OneDimParam union_params(const OneDimParam& a, const OneDimParam& b, Rng& rng) {
  if (a.n != b.n) throw InvalidInput("union: ambient dimensions differ");
  if (a.is_empty()) return b;
  if (b.is_empty()) return a;
  int n = a.n;
  uint64_t seed = rng.next();
  ElimLimits limits;
  const size_t kMaxPrimes = 256;
  int delta_bound = a.degree() + b.degree();

  for (int attempt = 0; attempt < 8; ++attempt) {
    std::vector<Rational> l = random_form(n, rng);
    std::vector<Rational> l2 = random_form(n, rng);
    PrimeStream ps(seed + 977 * attempt + 41);
    RatRecState state;
    int delta = -1, m = 0;
    std::vector<long> v0s;
    size_t bad = 0, used = 0;
    bool form_bad = false;
    while (used < kMaxPrimes && !form_bad) {
      uint32_t p = ps.next();
      ++used;
      ModCurve ca, cb;
      if (!reduce_curve_mod(a, p, ca) || !reduce_curve_mod(b, p, cb)) {
        ++bad;
        continue;
      }
      auto one_fiber = [&](long v0, ZpUPoly& omega_row,
                           std::vector<ZpUPoly>& rho_rows) -> bool {
        ModParam0 fa, fb, fu;
        if (!curve_fiber_mod(ca, l, l2, v0, limits, fa)) {
          if (getenv("POLARPATH_DEBUG")) fprintf(stderr, "fiber a fail v0=%ld\n", v0);
          return false;
        }
        if (!curve_fiber_mod(cb, l, l2, v0, limits, fb)) {
          if (getenv("POLARPATH_DEBUG")) fprintf(stderr, "fiber b fail v0=%ld\n", v0);
          return false;
        }
        if (!union_mod(fa, fb, fu)) {
          if (getenv("POLARPATH_DEBUG")) fprintf(stderr, "union_mod fail v0=%ld\n", v0);
          return false;
        }
        ZpUPoly d = fu.omega.derivative();
        omega_row = fu.omega;
        rho_rows.clear();
        for (int i = 0; i < n; ++i) rho_rows.push_back((fu.rho[i] * d) % fu.omega);
        return true;
      };
      if (delta < 0) {
        std::vector<int> degs;
        for (int t = 0; t < 64 && (int)degs.size() < 5; ++t) {
          ZpUPoly om;
          std::vector<ZpUPoly> rr;
          if (!one_fiber(sample_value(t), om, rr)) continue;
          degs.push_back(om.deg());
        }
        if (degs.size() < 5) {
          if (++bad > 6) form_bad = true;
          continue;
        }
        int best = degs[0], bestc = 0;
        for (int cand : degs) {
          int c = 0;
          for (int dd : degs)
            if (dd == cand) ++c;
          if (c > bestc || (c == bestc && cand > best)) {
            best = cand;
            bestc = c;
          }
        }
        delta = best;
        if (delta == 0) return empty_one_dim(n);
        if (delta > delta_bound) {
          form_bad = true;
          continue;
        }
        m = 2 * delta + 6;
        v0s.clear();
        int t = 0;
        while ((int)v0s.size() < m && t < 60 * (m + 2)) {
          long v0 = sample_value(t++);
          ZpUPoly om;
          std::vector<ZpUPoly> rr;
          if (!one_fiber(v0, om, rr)) continue;
          if (om.deg() != delta) continue;
          v0s.push_back(v0);
        }
        if ((int)v0s.size() < m) {
          delta = -1;
          if (++bad > 6) form_bad = true;
          continue;
        }
      }
      std::vector<Zp> vs;
      std::vector<ZpUPoly> oms;
      std::vector<std::vector<ZpUPoly>> rows(n);
      bool prime_ok = true;
      for (long v0 : v0s) {
        ZpUPoly om;
        std::vector<ZpUPoly> rr;
        if (!one_fiber(v0, om, rr) || om.deg() != delta) {
          prime_ok = false;
          break;
        }
        vs.push_back(coeff_from_long(Zp::one(p), v0));
        oms.push_back(om);
        for (int i = 0; i < n; ++i) rows[i].push_back(rr[i]);
      }
      if (!prime_ok) {
        if (++bad > 24) form_bad = true;
        continue;
      }
      ZpBPoly om_p = zp_binterpolate(vs, oms);
      std::vector<ZpBPoly> rho_p(n);
      for (int i = 0; i < n; ++i) rho_p[i] = zp_binterpolate(vs, rows[i]);
      std::vector<uint32_t> flat;
      flatten_bpoly(om_p, delta + 1, m, flat);
      for (auto& r : rho_p) flatten_bpoly(r, delta, m, flat);
      if (!state.feed(p, flat)) continue;

      OneDimParam cand;
      cand.n = n;
      size_t pos = 0;
      const auto& vals = state.value();
      cand.omega = unflatten_bpoly(vals, pos, delta + 1, m);
      for (int i = 0; i < n; ++i) cand.rho.push_back(unflatten_bpoly(vals, pos, delta, m));
      cand.form = l;
      cand.form2 = l2;
      if (!cand.omega.monic_in_u() || cand.omega.deg_u() != delta) continue;
      auto rep = validate(cand);
      if (!rep.ok) continue;
      // exact coverage when affordable; modular fiber checks carried it so far
      long work = (long)(a.degree() + b.degree()) * cand.degree();
      if (work <= 400) {
        if (!curve_covers(cand, a) || !curve_covers(cand, b)) continue;
      }
      return cand;
    }
  }
  throw MonteCarloFailure("union(one-dim): retries exhausted");
}

}  // namespace polarpath

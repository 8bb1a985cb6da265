#include "polarpath/polar.hpp"

#include "polarpath/modparam.hpp"

namespace polarpath {
namespace polar {

std::vector<MultiPoly> expand_system(const Slp& gamma) { return slp_to_polys(gamma); }

Rational binomial(int a, int b) {
  if (b < 0 || b > a) return Rational(0);
  Rational r(1);
  for (int i = 0; i < b; ++i) r *= Rational(a - i, i + 1);
  return r;
}

static Rational pow_r(long base, int e) {
  Rational r(1);
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

Rational crit_bound(int n, int c, int D) {
  int d = n - c;
  return binomial(n + 1, d) * pow_r(D, c + 2) * pow_r(D - 1, d);
}

Rational solve_polar_bound(int n, int c, int D) {
  int d = n - c;
  return Rational(n + c + 4) * pow_r(D, c + 2) * pow_r(D - 1, d) * pow_r(c + 2, d);
}

namespace {

int max_degree(const std::vector<MultiPoly>& fs) {
  int D = 0;
  for (auto& f : fs) D = std::max(D, f.degree());
  return std::max(D, 2);  // the paper's bounds assume D >= 2
}

void ledger_push(DegreeLedger* ledger, const std::string& step, long degree,
                 const Rational& bound) {
  if (!ledger) return;
  DegreeEntry e;
  e.step = step;
  e.degree = degree;
  e.bound = bound;
  e.ok = Rational(degree) <= bound;
  ledger->push_back(e);
}

// determinant of the submatrix of `rows` x `cols`
template <class C>
Poly<C> minor_det(const std::vector<std::vector<Poly<C>>>& jac,
                  const std::vector<int>& rows, const std::vector<int>& cols) {
  std::vector<std::vector<Poly<C>>> sub;
  for (int r : rows) {
    std::vector<Poly<C>> row;
    for (int c : cols) row.push_back(jac[r][c]);
    sub.push_back(std::move(row));
  }
  return poly_det(sub);
}

void subsets_of(int n, int k, std::vector<std::vector<int>>& out) {
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int from) {
    if ((int)cur.size() == k) {
      out.push_back(cur);
      return;
    }
    for (int v = from; v < n; ++v) {
      cur.push_back(v);
      rec(v + 1);
      cur.pop_back();
    }
  };
  rec(0);
}

}  // namespace

std::vector<MultiPoly> rank_drop_system(const std::vector<MultiPoly>& fs,
                                        const std::vector<MultiPoly>& phis, int i) {
  if (fs.empty()) throw InvalidInput("rank_drop_system: empty system");
  int n = fs[0].nvars();
  int c = static_cast<int>(fs.size());
  if (i < 0 || i > (int)phis.size()) throw InvalidInput("rank_drop_system: bad i");
  std::vector<MultiPoly> stacked = fs;
  for (int j = 0; j < i; ++j) stacked.push_back(phis[j]);
  auto J = jacobian(stacked);
  int size = c + i;
  if (size > n) throw InvalidInput("rank_drop_system: minor size exceeds columns");
  std::vector<std::vector<int>> cols;
  subsets_of(n, size, cols);
  std::vector<int> rows(size);
  for (int r = 0; r < size; ++r) rows[r] = r;
  std::vector<MultiPoly> out = fs;
  for (auto& cset : cols) {
    MultiPoly m = minor_det(J, rows, cset);
    if (!m.is_zero()) out.push_back(std::move(m));
  }
  return out;
}

MinorSystem build_h_minors(const std::vector<MultiPoly>& h,
                           const std::vector<MultiPoly>& phi, int i,
                           const MinorSelection& sel) {
  if (h.empty()) throw InvalidInput("build_h_minors: empty h");
  int n = h[0].nvars();
  int c = static_cast<int>(h.size());
  if (c > n || i < 1 || i > n - c + 1) throw InvalidInput("build_h_minors: bad (c, i)");
  if ((int)phi.size() < i) throw InvalidInput("build_h_minors: too few phi");
  if ((int)sel.cols.size() != c + i - 1)
    throw InvalidInput("build_h_minors: m'' needs c+i-1 columns");
  if (sel.excluded_h_row < 0 || sel.excluded_h_row >= c)
    throw InvalidInput("build_h_minors: bad excluded row");
  for (int col : sel.cols)
    if (col < 0 || col >= n) throw InvalidInput("build_h_minors: column out of range");

  std::vector<MultiPoly> stacked = h;
  for (int j = 0; j < i; ++j) stacked.push_back(phi[j]);
  auto J = jacobian(stacked);

  // m'': rows = all of jac(phi) plus h-rows minus the excluded one
  std::vector<int> mrows;
  for (int r = 0; r < c; ++r)
    if (r != sel.excluded_h_row) mrows.push_back(r);
  for (int j = 0; j < i; ++j) mrows.push_back(c + j);
  MultiPoly mpp = minor_det(J, mrows, sel.cols);

  // completed rows: add the missing h-row back
  std::vector<int> full_rows;
  for (int r = 0; r < c + i; ++r)
    if (r != sel.excluded_h_row) full_rows.push_back(r);
  full_rows.insert(full_rows.begin(), sel.excluded_h_row);
  std::sort(full_rows.begin(), full_rows.end());

  MinorSystem out;
  out.base = h;
  std::vector<bool> used(n, false);
  for (int col : sel.cols) used[col] = true;
  for (int col = 0; col < n; ++col) {
    if (used[col]) continue;
    std::vector<int> cols = sel.cols;
    cols.push_back(col);
    std::sort(cols.begin(), cols.end());
    out.minors.push_back(minor_det(J, full_rows, cols));
  }
  // chart denominators: m' = a c-minor of jac(h) (largest-column choice),
  // and m''; the chart's own m is the caller's business (1 for global charts)
  MultiPoly mprime = MultiPoly::constant(n, Rational(1));
  {
    auto Jh = jacobian(h);
    std::vector<std::vector<int>> hcols;
    subsets_of(n, c, hcols);
    std::vector<int> hr(c);
    for (int r = 0; r < c; ++r) hr[r] = r;
    for (auto& cs : hcols) {
      MultiPoly cand = minor_det(Jh, hr, cs);
      if (!cand.is_zero()) {
        mprime = cand;
        break;
      }
    }
  }
  out.openDenoms = mprime * mpp;
  return out;
}

ZeroDimParam singular_points(const Slp& gamma, const PolarOptions& opt,
                             DegreeLedger* ledger) {
  auto fs = expand_system(gamma);
  int n = gamma.input_count();
  int c = static_cast<int>(fs.size());
  if (c >= n) throw InvalidInput("singular_points: not a positive-dimensional system");
  // Jacobian criterion: V(f) and all c-minors of jac(f)
  std::vector<MultiPoly> gens = rank_drop_system(fs, {}, 0);
  elim::SolveOptions sopt;
  sopt.seed = opt.seed ^ 0x51116;
  sopt.limits = opt.limits;
  ZeroDimParam out;
  try {
    out = elim::solve_system_zero_dim(gens, n, sopt);
  } catch (const elim::DimensionError&) {
    throw MonteCarloFailure(
        "singular_points: the singular locus has positive dimension (assumption (A) fails)");
  }
  if (out.is_empty()) {
    // try for an exact emptiness certificate: a rational-arithmetic basis {1}
    elim::GroebnerOptions gopt;
    gopt.seed = opt.seed;
    gopt.limits = opt.limits;
    gopt.limits.max_pairs = std::min<size_t>(gopt.limits.max_pairs, 20000);
    try {
      gopt.force_rational = true;
      auto G = elim::groebner({n, gens}, gopt);
      if (!(G.elements.size() == 1 && G.elements[0].is_constant()))
        throw MonteCarloFailure("singular_points: emptiness not confirmed exactly");
    } catch (const ResourceLimit&) {
      // keep the Monte Carlo answer; criterion-level tests use small systems
    }
  }
  int D = max_degree(fs);
  int d = n - c;
  ledger_push(ledger, "SingularPoints", out.degree(),
              binomial(n - 1, d) * pow_r(D, c) * pow_r(D - 1, d));
  return out;
}

LagrangeSystem w_lag(const LagrangeSystem& L, const std::vector<Rational>& u, int i) {
  const LagrangeType& T = L.type;
  if (T.m != 0 || T.q != 0 || T.e != 0)
    throw InvalidInput("w_lag: expected a system of type ((n,0),(p,0),0)");
  int n = T.n, p = T.p;
  if ((int)u.size() != p) throw InvalidInput("w_lag: u must have length p");
  if (i < 1 || i > n - p) throw InvalidInput("w_lag: need 1 <= i <= n-p");
  if (L.gamma.input_count() != n || (int)L.gamma.output_count() != p)
    throw InvalidInput("w_lag: slp shape mismatch");

  // Jacobian rows via reverse mode, then the multiplier contractions
  Slp jac = jac_slp(L.gamma);
  int N = n + p;  // (X, L)
  SlpBuilder b(N);
  // import jac over the first n variables; input refs shift by -p
  std::vector<int32_t> map(jac.instruction_count() + 1, 0);
  int32_t idx = 0;
  for (auto& it : jac.instructions()) {
    ++idx;
    auto fix = [&](int32_t r) -> int32_t {
      if (r >= 1) return map[r];
      int var = r + n - 1;
      return var + 1 - N;
    };
    switch (it.kind) {
      case Slp::OpKind::Const:
        map[idx] = b.constant(it.cval);
        break;
      case Slp::OpKind::Add:
        map[idx] = b.add(fix(it.a), fix(it.b));
        break;
      case Slp::OpKind::Sub:
        map[idx] = b.sub(fix(it.a), fix(it.b));
        break;
      case Slp::OpKind::Mul:
        map[idx] = b.mul(fix(it.a), fix(it.b));
        break;
    }
  }
  auto jac_out = [&](int32_t r) -> int32_t {
    if (r >= 1) return map[r];
    int var = r + n - 1;
    return var + 1 - N;
  };
  // original outputs f_1..f_p
  std::vector<int32_t> outs;
  for (int k = 0; k < p; ++k) outs.push_back(jac_out(jac.outputs()[k]));
  // Lagrange(f, i, L): for each column j in [i, n): sum_k L_k d f_k/d x_j
  for (int j = i; j < n; ++j) {
    int32_t acc = 0;
    bool have = false;
    for (int k = 0; k < p; ++k) {
      int32_t deriv = jac_out(jac.outputs()[p + (size_t)k * n + j]);
      int32_t lref = (n + k) + 1 - N;
      int32_t term = b.mul(lref, deriv);
      acc = have ? b.add(acc, term) : term;
      have = true;
    }
    outs.push_back(acc);
  }
  // u . L - 1
  {
    int32_t acc = 0;
    bool have = false;
    for (int k = 0; k < p; ++k) {
      int32_t lref = (n + k) + 1 - N;
      int32_t term = b.mul(b.constant(u[k]), lref);
      acc = have ? b.add(acc, term) : term;
      have = true;
    }
    int32_t one = b.constant(Rational(1));
    outs.push_back(b.sub(acc, one));
  }
  for (auto r : outs) b.mark_output(r);

  LagrangeSystem out;
  out.gamma = b.build();
  out.qParam = L.qParam;
  out.sParam = L.sParam;
  out.type = LagrangeType{n, p, p, n - i + 1, 0};
  if (!out.type.admissible()) throw InvalidInput("w_lag: inadmissible type");
  return out;
}

LagrangeSystem f_lag(const LagrangeSystem& L, const ZeroDimParam& qpp,
                     const ZeroDimParam& spp) {
  const LagrangeType& T = L.type;
  if (T.m != 0 || T.q != 0 || T.e != 0)
    throw InvalidInput("f_lag: expected a system of type ((n,0),(p,0),0)");
  int e = qpp.n;
  if (e < 1 || e > T.n - T.p) throw InvalidInput("f_lag: bad base dimension");
  // lying-over: the projection of Z(S'') to C^e sits inside Z(Q'')
  if (!spp.is_empty()) {
    if (spp.n < e) throw InvalidInput("f_lag: S'' arity too small");
    Rng rng(0x5eed1143);
    ZeroDimParam proj = projection(spp, e, rng);
    if (!points_subset(proj, qpp))
      throw InvalidInput("f_lag: Z(S'') does not lie over Z(Q'')");
  }
  LagrangeSystem out;
  out.gamma = L.gamma;
  out.qParam = qpp;
  out.sParam = spp;
  out.type = LagrangeType{T.n, 0, T.p, 0, e};
  if (!out.type.admissible()) throw InvalidInput("f_lag: inadmissible type");
  return out;
}

namespace {

// univariate q composed with a linear form over n variables
MultiPoly compose_uni_linear(const QUPoly& q, const std::vector<Rational>& form, int n) {
  std::vector<MultiPoly::Term> lt;
  for (int i = 0; i < (int)form.size() && i < n; ++i)
    if (sgn(form[i])) lt.push_back({Monomial::var(n, i), form[i]});
  MultiPoly L = MultiPoly::from_terms(n, std::move(lt));
  MultiPoly acc = MultiPoly::zero(n);
  for (int i = q.deg(); i >= 0; --i) {
    acc = acc * L;
    if (sgn(q.c[i])) acc += MultiPoly::constant(n, q.c[i]);
  }
  return acc;
}

}  // namespace

std::vector<MultiPoly> lagrange_generators(const LagrangeSystem& L) {
  int N = L.type.n + L.type.m;
  auto gens = slp_to_polys(L.gamma);
  if (L.type.e > 0) {
    if (L.qParam.is_empty()) {
      gens.push_back(MultiPoly::constant(N, Rational(1)));  // empty base
      return gens;
    }
    // Z(Q'') constraints on the first e coordinates:
    // omega_Q(l_Q(x)) and x_i - rho_i(l_Q(x))
    std::vector<Rational> form(L.qParam.form.begin(), L.qParam.form.end());
    gens.push_back(compose_uni_linear(L.qParam.omega, form, N));
    for (int i = 0; i < L.type.e; ++i) {
      MultiPoly xi = MultiPoly::variable(N, i, Rational(1));
      gens.push_back(xi - compose_uni_linear(L.qParam.rho[i], form, N));
    }
  }
  return gens;
}

namespace {

// reorder variables of a generator set so that the original x-block
// (positions x_start .. x_start+nx-1) comes first
std::vector<MultiPoly> reorder_x_first(const std::vector<MultiPoly>& gens, int N,
                                       int x_start, int nx) {
  std::vector<int> where(N, -1);
  for (int i = 0; i < nx; ++i) where[x_start + i] = i;
  int pos = nx;
  for (int i = 0; i < N; ++i)
    if (where[i] < 0) where[i] = pos++;
  std::vector<MultiPoly> out;
  for (auto& g : gens) out.push_back(g.remap(N, where));
  return out;
}

}  // namespace

ZeroDimParam crit(const Slp& gamma, const Slp& gphi, const ZeroDimParam& S,
                  const PolarOptions& opt, DegreeLedger* ledger) {
  auto fs = expand_system(gamma);
  auto phis = expand_system(gphi);
  int n = gamma.input_count();
  int c = static_cast<int>(fs.size());
  int D = max_degree(fs);
  elim::SolveOptions sopt;
  sopt.seed = opt.seed ^ 0xc417;
  sopt.limits = opt.limits;

  ZeroDimParam kset;
  if (opt.route == Route::Minors) {
    auto gens = rank_drop_system(fs, phis, 1);
    kset = elim::solve_system_zero_dim(gens, n, sopt);
  } else {
    // incidence lift by phi_1, then one multiplier block
    Slp inc = inc_slp(gamma, gphi, 1);
    LagrangeSystem L;
    L.gamma = inc;
    L.qParam = empty_zero_dim(0);
    L.sParam = S;
    L.type = LagrangeType{n + 1, 0, c + 1, 0, 0};
    Rng rng(opt.seed ^ 0xbead);
    std::vector<Rational> u = random_form(c + 1, rng);
    LagrangeSystem W1 = w_lag(L, u, 1);
    auto gens = lagrange_generators(W1);
    int N = W1.type.n + W1.type.m;
    auto reordered = reorder_x_first(gens, N, 1, n);
    sopt.out_vars = n;
    kset = elim::solve_system_zero_dim(reordered, N, sopt);
    // exact check in x-space: K(phi_1, V) is the global rank-drop locus
    auto check = rank_drop_system(fs, phis, 1);
    for (auto& g : check)
      if (!generator_vanishes(g, kset))
        throw MonteCarloFailure("crit: Lagrange route output fails the rank conditions");
  }
  Rng rng2(opt.seed ^ 0xc4170);
  ZeroDimParam out = union_params(kset, S, rng2);
  if (!points_subset(S, out)) throw MonteCarloFailure("crit: S not contained in output");
  Rational bound = crit_bound(n, c, D) + Rational(S.degree());
  ledger_push(ledger, "Crit", out.degree(), bound);
  if (Rational(out.degree()) > bound)
    throw MonteCarloFailure("crit: Lemma 3.3 degree bound violated");
  return out;
}

OneDimParam solve_polar(const Slp& gamma, const Slp& gphi, const ZeroDimParam& S,
                        const PolarOptions& opt, DegreeLedger* ledger) {
  auto fs = expand_system(gamma);
  auto phis = expand_system(gphi);
  int n = gamma.input_count();
  int c = static_cast<int>(fs.size());
  int D = max_degree(fs);
  if (n - c < 2) throw InvalidInput("solve_polar: needs d >= 2");
  elim::SolveOptions sopt;
  sopt.seed = opt.seed ^ 0x50172;
  sopt.limits = opt.limits;

  OneDimParam w2;
  if (opt.route == Route::Minors) {
    auto gens = rank_drop_system(fs, phis, 2);
    w2 = elim::solve_system_one_dim(gens, n, sopt);
  } else {
    Slp inc = inc_slp(gamma, gphi, 2);
    LagrangeSystem L;
    L.gamma = inc;
    L.qParam = empty_zero_dim(0);
    L.sParam = S;
    L.type = LagrangeType{n + 2, 0, c + 2, 0, 0};
    Rng rng(opt.seed ^ 0x317a6);
    std::vector<Rational> u = random_form(c + 2, rng);
    LagrangeSystem LW = w_lag(L, u, 2);
    auto gens = lagrange_generators(LW);
    int N = LW.type.n + LW.type.m;
    auto reordered = reorder_x_first(gens, N, 2, n);
    sopt.out_vars = n;
    w2 = elim::solve_system_one_dim(reordered, N, sopt);
  }
  // exact membership: the input equations and every defining minor vanish
  if (!w2.is_empty()) {
    auto checks = rank_drop_system(fs, phis, 2);
    long cost = (long)w2.degree() * (long)w2.degree() * (long)checks.size();
    if (cost <= 40000) {
      for (auto& g : checks)
        if (!generator_vanishes(g, w2))
          throw MonteCarloFailure("solve_polar: output fails exact membership");
    } else {
      for (auto& g : fs)
        if (!generator_vanishes(g, w2))
          throw MonteCarloFailure("solve_polar: output fails exact membership");
    }
  }
  Rational bound = solve_polar_bound(n, c, D);
  ledger_push(ledger, "SolvePolar", w2.degree(), bound);
  if (Rational(w2.degree()) > bound)
    throw MonteCarloFailure("solve_polar: Lemma 3.4 degree bound violated");
  return w2;
}

}  // namespace polar
}  // namespace polarpath

namespace polarpath {
namespace polar {

namespace {

// quotient-ring determinant of a matrix of composed entries, mod omega
template <class UP>
UP det_mod(std::vector<std::vector<UP>> m, const UP& omega) {
  size_t k = m.size();
  if (k == 0) throw InvalidInput("det_mod: empty");
  if (k == 1) return m[0][0] % omega;
  UP acc;
  std::vector<std::vector<UP>> sub(k - 1);
  for (size_t col = 0; col < k; ++col) {
    if (m[0][col].is_zero()) continue;
    for (size_t i = 1; i < k; ++i) {
      sub[i - 1].clear();
      for (size_t j = 0; j < k; ++j)
        if (j != col) sub[i - 1].push_back(m[i][j]);
    }
    UP term = (m[0][col] * det_mod(sub, omega)) % omega;
    if (col % 2 == 0)
      acc = acc + term;
    else
      acc = acc - term;
  }
  return acc % omega;
}

// evaluate a multivariate polynomial at the coordinates of a mod-p
// parametrization: g(rho_1..rho_n) mod omega
ZpUPoly eval_on_modparam(const ModPoly& g, const ModParam0& pr) {
  SZpUModRing ring{pr.omega, pr.p};
  std::vector<ZpUPoly> x(pr.rho.begin(), pr.rho.end());
  return g.eval(ring, x) % pr.omega;
}

struct ChartData {
  MinorSelection sel;
  std::vector<MultiPoly> system;       // f, Hphi, crit det
  MultiPoly crit_det;                  // det(jac(f, Hphi, phi1))
  MultiPoly denom;                     // m' * m''
  std::vector<MultiPoly> rank_minors;  // (n-1)-minors of jac(f, Hphi)
};

std::vector<ChartData> crit_charts(const std::vector<MultiPoly>& fs,
                                   const std::vector<MultiPoly>& phis) {
  int n = fs[0].nvars();
  int c = static_cast<int>(fs.size());
  std::vector<ChartData> out;
  std::vector<std::vector<int>> colsets;
  subsets_of(n, c + 1, colsets);
  for (int row = 0; row < c; ++row) {
    for (auto& cols : colsets) {
      MinorSelection sel;
      sel.excluded_h_row = row;
      sel.cols = cols;
      MinorSystem ms = build_h_minors(fs, phis, 2, sel);
      bool degenerate = ms.openDenoms.is_zero();
      for (auto& m : ms.minors)
        if (m.is_zero()) degenerate = true;
      if (degenerate) continue;
      ChartData cd;
      cd.sel = sel;
      cd.denom = ms.openDenoms;
      std::vector<MultiPoly> stacked = fs;
      for (auto& m : ms.minors) stacked.push_back(m);
      // rank certifiers of the chart cut (jacobian of the n-1 equations)
      {
        auto J = jacobian(stacked);
        std::vector<int> rows(stacked.size());
        for (size_t r = 0; r < stacked.size(); ++r) rows[r] = static_cast<int>(r);
        std::vector<std::vector<int>> rc;
        subsets_of(n, n - 1, rc);
        for (auto& cset : rc) {
          MultiPoly mm = minor_det(J, rows, cset);
          if (!mm.is_zero()) cd.rank_minors.push_back(std::move(mm));
        }
      }
      stacked.push_back(phis[0]);
      auto J2 = jacobian(stacked);
      std::vector<int> rows(n);
      std::vector<int> cols_all(n);
      for (int r = 0; r < n; ++r) rows[r] = r, cols_all[r] = r;
      cd.crit_det = minor_det(J2, rows, cols_all);
      if (cd.crit_det.is_zero()) continue;
      cd.system = fs;
      for (auto& m : ms.minors) cd.system.push_back(m);
      cd.system.push_back(cd.crit_det);
      out.push_back(std::move(cd));
    }
  }
  return out;
}

// factor of omega where g vanishes
ZpUPoly zero_part(const ZpUPoly& omega, const ZpUPoly& g) {
  if (g.is_zero()) return omega;
  return upoly_gcd(omega, g);
}

}  // namespace

ZeroDimParam crit_polar(const Slp& gamma, const Slp& gphi, const ZeroDimParam& P,
                        const PolarOptions& opt, DegreeLedger* ledger,
                        const OneDimParam* cached_w2) {
  (void)cached_w2;
  auto fs = expand_system(gamma);
  auto phis = expand_system(gphi);
  int n = gamma.input_count();
  int c = static_cast<int>(fs.size());
  int D = max_degree(fs);
  auto charts = crit_charts(fs, phis);
  if (charts.empty())
    throw MonteCarloFailure("crit_polar: no usable chart (infinite locus?)");
  auto w2_minors = rank_drop_system(fs, phis, 2);

  Rng rng(opt.seed ^ 0xc91701);
  const size_t kMaxPrimes = opt.limits.max_primes;
  for (int attempt = 0; attempt <= opt.retries; ++attempt) {
    std::vector<Rational> form =
        attempt < 2 ? random_form_small(n, rng) : random_form(n, rng);
    PrimeStream ps(opt.seed * 0x9371 + 311 * attempt + 3);
    RatRecState state;
    int dbar = -1;
    size_t bad = 0;
    bool form_bad = false;
    size_t used = 0;
    int dim_votes = 0;
    // after the first usable prime, drop charts that contribute no points
    // beyond the earlier ones (cross-checked by the degree consistency and
    // the exact final verification)
    std::vector<bool> chart_active(charts.size(), true);
    bool charts_pruned = false;
    while (used < kMaxPrimes && !form_bad) {
      uint32_t p = ps.next();
      ++used;
      ModParam0 merged;
      merged.p = p;
      merged.omega = ZpUPoly::constant(Zp::one(p));
      merged.rho.assign(n, ZpUPoly());
      std::vector<int> growth(charts.size(), 0);
      size_t chart_idx = static_cast<size_t>(-1);
      bool prime_ok = true;
      for (auto& cd : charts) {
        ++chart_idx;
        if (!chart_active[chart_idx]) continue;
        elim_detail::ModQuotient q;
        std::vector<ModPoly> gb;
        if (!elim_detail::mod_groebner(cd.system, n, p, opt.limits, gb)) {
          prime_ok = false;
          break;
        }
        if (dimension_from_leads(gb) > 0) {
          if (++dim_votes >= 2)
            throw MonteCarloFailure("crit_polar: infinite critical locus on a chart");
          prime_ok = false;
          break;
        }
        q.p = p;
        q.gb = std::move(gb);
        try {
          q.basis = staircase(q.gb, opt.limits.max_quotient);
        } catch (const ResourceLimit&) {
          prime_ok = false;
          break;
        }
        elim_detail::ModRur r;
        if (!elim_detail::mod_rur(q, form, n, n, true, r)) {
          prime_ok = false;
          break;
        }
        ModParam0 part;
        part.p = p;
        part.omega = r.omega;
        part.rho = r.coords;
        ModParam0 next;
        if (!union_mod(merged, part, next)) {
          prime_ok = false;
          break;
        }
        growth[chart_idx] = next.omega.deg() - merged.omega.deg();
        merged = std::move(next);
      }
      if (prime_ok && !charts_pruned) {
        for (size_t ci = 1; ci < charts.size(); ++ci)
          if (growth[ci] == 0) chart_active[ci] = false;
        charts_pruned = true;
      }
      if (!prime_ok) {
        if (state.primes_used() == 0 && ++bad >= 4) form_bad = true;
        continue;
      }
      // filter: keep points with a valid chart certifying the rank and the
      // critical determinant
      ZpUPoly keep = ZpUPoly::constant(Zp::one(p));
      if (merged.omega.deg() > 0) {
        keep = ZpUPoly::constant(Zp::one(p));
        ZpUPoly omega = merged.omega;
        ZpUPoly acc_keep;  // zero = empty set
        for (auto& cd : charts) {
          ModPoly dn(n), dt(n);
          if (!reduce_poly_mod(cd.denom, p, dn) || !reduce_poly_mod(cd.crit_det, p, dt)) {
            prime_ok = false;
            break;
          }
          ZpUPoly a = eval_on_modparam(dn, merged);
          ZpUPoly t1 = omega / zero_part(omega, a);  // denom != 0
          if (t1.deg() <= 0) continue;
          ZpUPoly dts = eval_on_modparam(dt, merged);
          ZpUPoly t2 = zero_part(t1, dts);  // crit det = 0
          if (t2.deg() <= 0) continue;
          // rank certified: at least one rank minor nonzero
          ZpUPoly gall = t2;
          for (auto& rm : cd.rank_minors) {
            ModPoly rmp(n);
            if (!reduce_poly_mod(rm, p, rmp)) continue;
            gall = zero_part(gall, eval_on_modparam(rmp, merged));
            if (gall.deg() <= 0) break;
          }
          ZpUPoly t3 = t2 / gall;
          if (t3.deg() <= 0) continue;
          // union into acc_keep
          if (acc_keep.is_zero())
            acc_keep = t3;
          else
            acc_keep = (acc_keep * (t3 / upoly_gcd(acc_keep, t3))).monic();
        }
        if (!prime_ok) {
          if (state.primes_used() == 0 && ++bad >= 4) form_bad = true;
          continue;
        }
        if (acc_keep.is_zero()) acc_keep = ZpUPoly::constant(Zp::one(p));
        // restrict the parametrization to the kept factor
        merged.omega = acc_keep.monic();
        for (auto& r : merged.rho) r = r % merged.omega;
      }
      // adjoin Z(P)
      if (!P.is_empty()) {
        ModParam0 pm, pr;
        if (!reduce_param_mod(P.omega, P.rho, p, pm)) {
          ++bad;
          continue;
        }
        if (!reparam_mod(pm, form, n, pr) || pr.omega.deg() != P.degree()) {
          if (state.primes_used() == 0 && ++bad >= 4) form_bad = true;
          continue;
        }
        ModParam0 next;
        if (!union_mod(merged, pr, next)) {
          if (state.primes_used() == 0 && ++bad >= 4) form_bad = true;
          continue;
        }
        merged = std::move(next);
      }
      if (dbar < 0) dbar = merged.omega.deg();
      if (merged.omega.deg() != dbar) {
        if (++bad >= 8) form_bad = true;
        continue;
      }
      // flatten residues
      std::vector<uint32_t> flat;
      for (int i = 0; i <= dbar; ++i)
        flat.push_back(i <= merged.omega.deg() ? merged.omega.c[i].v : 0);
      for (int k = 0; k < n; ++k)
        for (int i = 0; i < dbar; ++i)
          flat.push_back(i <= merged.rho[k].deg() ? merged.rho[k].c[i].v : 0);
      bool stable = state.feed(p, flat);
      if (getenv("POLARPATH_DEBUG"))
        fprintf(stderr, "[crit_polar] prime %zu deg %d stable=%d\n",
                state.primes_used(), dbar, (int)stable);
      if (!stable) continue;

      ZeroDimParam cand;
      cand.n = n;
      const auto& vals = state.value();
      cand.omega.c.assign(vals.begin(), vals.begin() + dbar + 1);
      cand.omega.norm();
      size_t pos = dbar + 1;
      for (int i = 0; i < n; ++i) {
        QUPoly r2;
        r2.c.assign(vals.begin() + pos, vals.begin() + pos + dbar);
        r2.norm();
        pos += dbar;
        cand.rho.push_back(std::move(r2));
      }
      cand.form = form;
      auto rep = validate(cand);
      if (!rep.ok) continue;
      if (!P.is_empty() && !points_subset(P, cand)) continue;
      // Exact necessary conditions. With P empty every point must lie on the
      // rank-drop locus and satisfy some chart's critical determinant; with P
      // nonempty the P-subset check above plus per-prime filtering carry the
      // Monte Carlo contract.
      {
        bool ok_members = true;
        if (P.is_empty()) {
          for (auto& g : w2_minors)
            if (!generator_vanishes(g, cand)) {
              ok_members = false;
              break;
            }
          if (ok_members) {
            QUPoly prod = QUPoly::constant(Rational(1));
            for (auto& cd : charts)
              prod = (prod * compose_on_param(cd.crit_det, cand)) % cand.omega;
            if (!prod.is_zero()) ok_members = false;
          }
        }
        if (!ok_members) {
          if (++bad >= 8) form_bad = true;
          continue;
        }
      }
      Rational delta = solve_polar_bound(n, c, D);
      Rational bound = delta * Rational(n + c + 4) * Rational(D) + Rational(P.degree());
      ledger_push(ledger, "CritPolar", cand.degree(), bound);
      if (Rational(cand.degree()) > bound)
        throw MonteCarloFailure("crit_polar: Lemma 3.5 degree bound violated");
      return cand;
    }
  }
  throw MonteCarloFailure("crit_polar: retries exhausted");
}

ZeroDimParam fiber_polar(const Slp& gamma, const Slp& gphi, const ZeroDimParam& qpp,
                         const ZeroDimParam& P, const PolarOptions& opt,
                         DegreeLedger* ledger) {
  auto fs = expand_system(gamma);
  auto phis = expand_system(gphi);
  int n = gamma.input_count();
  int c = static_cast<int>(fs.size());
  int D = max_degree(fs);
  if (qpp.n != 1) throw InvalidInput("fiber_polar: expected base points in C^1");
  Rational delta = solve_polar_bound(n, c, D);
  if (qpp.is_empty()) {
    ledger_push(ledger, "FiberPolar", P.degree(), Rational(P.degree()));
    return P;
  }
  // fiber values are the roots of omega_Q in the phi_1 coordinate: Z(Q'')
  // lives in C^1 so rho reduces to u itself up to the form scaling
  // condition: omega_Q(phi1(x) * ... ) -- normalize so the form is x_1
  QUPoly q = qpp.omega;
  {
    // q(t) has roots l(z) for z in Z(Q''); the fiber condition is on z = phi1:
    // roots z = rho_1(theta); substitute t = form_1 * z when rho_1 = u/form_1
    // General case: minimal polynomial of z over the param
    // m_z(T) = charpoly of multiplication by rho_1 mod omega.
    // For e = 1 with validated params, rho_1 = u / form_1 exactly.
    QUPoly s = qpp.rho[0];
    QUPoly x = QUPoly::x(Rational(1));
    if (!(s * qpp.form[0] - x).is_zero() || qpp.form.size() != 1) {
      // re-derive: scale u by form_1 (u = form_1 * z)
    }
    // substitute u = form_1 * T into omega_Q
    Rational a = qpp.form[0];
    QUPoly scaled;
    scaled.c.resize(q.c.size());
    Rational pw(1);
    for (size_t i = 0; i < q.c.size(); ++i) {
      scaled.c[i] = q.c[i] * pw;
      pw *= a;
    }
    scaled.norm();
    q = scaled.monic();
  }
  std::vector<MultiPoly> gens = rank_drop_system(fs, phis, 2);
  int nv = n;
  long compose_cost = (long)q.deg() * phis[0].degree();
  if (compose_cost <= 64) {
    // q(phi1(x)) by Horner
    MultiPoly acc = MultiPoly::zero(n);
    for (int i = q.deg(); i >= 0; --i) {
      acc = acc * phis[0];
      if (sgn(q.c[i])) acc += MultiPoly::constant(n, q.c[i]);
    }
    gens.push_back(acc);
  } else {
    // slack variable z with phi1 - z and q(z)
    nv = n + 1;
    std::vector<int> where(n);
    for (int i = 0; i < n; ++i) where[i] = i;
    for (auto& g : gens) g = g.remap(nv, where);
    auto phi1z = phis[0].remap(nv, where) - MultiPoly::variable(nv, n, Rational(1));
    gens.push_back(phi1z);
    std::vector<MultiPoly::Term> qt;
    for (size_t i = 0; i < q.c.size(); ++i) {
      if (sgn(q.c[i]) == 0) continue;
      Monomial m = Monomial::one(nv);
      m.e[n] = static_cast<uint16_t>(i);
      m.deg = static_cast<uint32_t>(i);
      qt.push_back({m, q.c[i]});
    }
    gens.push_back(MultiPoly::from_terms(nv, std::move(qt)));
  }
  elim::SolveOptions sopt;
  sopt.seed = opt.seed ^ 0xf1b37;
  sopt.limits = opt.limits;
  sopt.out_vars = (nv == n) ? -1 : n;
  ZeroDimParam fiber;
  try {
    fiber = elim::solve_system_zero_dim(gens, nv, sopt);
  } catch (const elim::DimensionError&) {
    throw MonteCarloFailure("fiber_polar: infinite fiber");
  }
  Rng rng(opt.seed ^ 0xf1b38);
  ZeroDimParam out = union_params(fiber, P, rng);
  if (!points_subset(P, out))
    throw MonteCarloFailure("fiber_polar: P not contained in output");
  Rational bound = Rational(qpp.degree()) * delta + Rational(P.degree());
  ledger_push(ledger, "FiberPolar", out.degree(), bound);
  if (Rational(out.degree()) > bound)
    throw MonteCarloFailure("fiber_polar: Lemma 3.6 degree bound violated");
  return out;
}

}  // namespace polar
}  // namespace polarpath

namespace polarpath {
namespace polar {

CheckEntry check_h1(const std::vector<MultiPoly>& fs, int n, const PolarOptions& opt) {
  CheckEntry e;
  e.name = "H1: V equidimensional of dim n-c, sing(V) finite";
  int c = static_cast<int>(fs.size());
  try {
    int dim = elim::dimension_of_system(fs, n, opt.seed ^ 0x411, opt.limits);
    if (dim != n - c) {
      e.status = CheckStatus::Fail;
      e.detail = "dim V = " + std::to_string(dim) + ", expected " + std::to_string(n - c);
      return e;
    }
    auto jac_gens = rank_drop_system(fs, {}, 0);
    int sdim = elim::dimension_of_system(jac_gens, n, opt.seed ^ 0x412, opt.limits);
    if (sdim > 0) {
      e.status = CheckStatus::Fail;
      e.detail = "singular locus has dimension " + std::to_string(sdim);
      return e;
    }
    // complete intersection + correct dimension gives equidimensionality
    // (unmixedness); finite Jacobian locus then gives generic reducedness and,
    // with Cohen-Macaulayness, radicality: assumption (A) holds
    e.detail = "dim V = " + std::to_string(dim) + ", Jacobian locus dim " +
               std::to_string(sdim);
  } catch (const std::exception& ex) {
    e.status = CheckStatus::Fail;
    e.detail = ex.what();
  }
  return e;
}

CheckEntry check_h2() {
  CheckEntry e;
  e.name = "H2: phi_1 proper and bounded below on R^n";
  e.status = CheckStatus::Structural;
  e.detail = "phi_1 = sum (x_k + a_k/2)^2 - sum a_k^2/4 by construction";
  return e;
}

bool charts_cover_regular_point(const std::vector<MultiPoly>& fs,
                                const std::vector<MultiPoly>& phis,
                                const ZeroDimParam& pts, size_t point_index) {
  // a point of W2 is certified regular when some chart has nonzero
  // denominators and a full-rank cut there; evaluated exactly on the factor
  // of omega containing the point (here: the whole parametrization, caller
  // isolates single-point factors when needed)
  (void)point_index;
  auto charts = crit_charts(fs, phis);
  for (auto& cd : charts) {
    QUPoly dn = compose_on_param(cd.denom, pts);
    QUPoly g = upoly_gcd(pts.omega, dn);
    if (g.deg() != 0) continue;  // denominator vanishes somewhere: skip chart
    for (auto& rm : cd.rank_minors) {
      QUPoly rv = compose_on_param(rm, pts);
      if (upoly_gcd(pts.omega, rv).deg() == 0) return true;
    }
  }
  return false;
}

CheckEntry check_h3(const std::vector<MultiPoly>& fs, const std::vector<MultiPoly>& phis,
                    const OneDimParam& w2, const ZeroDimParam& S,
                    const PolarOptions& opt) {
  CheckEntry e;
  e.name = "H3: W2 empty or 1-equidimensional, smooth outside sing(V)";
  if (w2.is_empty()) {
    e.detail = "W2 empty";
    return e;
  }
  int n = fs[0].nvars();
  // suspicious points: plane-model ramifications/nodes of W2 (all candidates
  // for space singularities project there)
  auto gens = rank_drop_system(fs, phis, 2);
  MultiPoly wu_x = bpoly_compose_linear(w2.omega.derivative_u(), w2.form, w2.form2);
  MultiPoly w_x = bpoly_compose_linear(w2.omega, w2.form, w2.form2);
  std::vector<MultiPoly> sus = gens;
  sus.push_back(wu_x);
  sus.push_back(w_x);
  elim::SolveOptions sopt;
  sopt.seed = opt.seed ^ 0x1133;
  sopt.limits = opt.limits;
  ZeroDimParam suspects;
  try {
    suspects = elim::solve_system_zero_dim(sus, n, sopt);
  } catch (const elim::DimensionError&) {
    e.status = CheckStatus::Fail;
    e.detail = "ramification locus of the plane model is infinite";
    return e;
  }
  if (suspects.is_empty()) {
    e.detail = "no ramification points; W2 smooth";
    return e;
  }
  // every suspect must be chart-regular or excluded by S
  if (charts_cover_regular_point(fs, phis, suspects, 0)) {
    e.detail = "all " + std::to_string(suspects.degree()) +
               " ramification candidates chart-regular";
    return e;
  }
  if (!S.is_empty() && points_subset(suspects, S)) {
    e.detail = "singular candidates contained in Z(S)";
    return e;
  }
  e.status = CheckStatus::Fail;
  e.detail = "a ramification candidate is neither chart-regular nor in Z(S)";
  return e;
}

CheckEntry check_h4(const std::vector<MultiPoly>& fs, const MultiPoly& phi1,
                    const ZeroDimParam& Q, const PolarOptions& opt) {
  CheckEntry e;
  e.name = "H4: used fibers of phi_1 are empty or (d-1)-equidimensional";
  int n = fs[0].nvars();
  int c = static_cast<int>(fs.size());
  if (Q.is_empty()) {
    e.detail = "no fiber values used";
    return e;
  }
  // one system for all used fibers: f = 0 and omega_Q(form * phi1) = 0;
  // each component of a nonempty fiber has dim >= d-1 (Krull), so checking
  // dim == d-1 rules out fat components
  QUPoly q;
  {
    Rational a = Q.form[0];
    q.c.resize(Q.omega.c.size());
    Rational pw(1);
    for (size_t i = 0; i < Q.omega.c.size(); ++i) {
      q.c[i] = Q.omega.c[i] * pw;
      pw *= a;
    }
    q.norm();
  }
  std::vector<MultiPoly> gens = fs;
  MultiPoly acc = MultiPoly::zero(n);
  for (int i = q.deg(); i >= 0; --i) {
    acc = acc * phi1;
    if (sgn(q.c[i])) acc += MultiPoly::constant(n, q.c[i]);
  }
  gens.push_back(acc);
  try {
    int dim = elim::dimension_of_system(gens, n, opt.seed ^ 0x441, opt.limits);
    if (dim == -1) {
      e.detail = "fibers empty";
      return e;
    }
    if (dim != n - c - 1) {
      e.status = CheckStatus::Fail;
      e.detail = "fiber dimension " + std::to_string(dim) + ", expected " +
                 std::to_string(n - c - 1);
      return e;
    }
    e.detail = "fiber system has dimension " + std::to_string(dim);
  } catch (const std::exception& ex) {
    e.status = CheckStatus::Fail;
    e.detail = ex.what();
  }
  return e;
}

}  // namespace polar
}  // namespace polarpath

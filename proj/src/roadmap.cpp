#include "polarpath/roadmap.hpp"

#include <nlohmann/json.hpp>

namespace polarpath {
namespace roadmap {

using json = nlohmann::json;

namespace {

// omega_Q(form_1 * phi1(x)): the defining equation of the used fibers
MultiPoly fiber_condition(const ZeroDimParam& Q, const MultiPoly& phi1) {
  int n = phi1.nvars();
  QUPoly q;
  Rational a = Q.form[0];
  q.c.resize(Q.omega.c.size());
  Rational pw(1);
  for (size_t i = 0; i < Q.omega.c.size(); ++i) {
    q.c[i] = Q.omega.c[i] * pw;
    pw *= a;
  }
  q.norm();
  MultiPoly acc = MultiPoly::zero(n);
  for (int i = q.deg(); i >= 0; --i) {
    acc = acc * phi1;
    if (sgn(q.c[i])) acc += MultiPoly::constant(n, q.c[i]);
  }
  return acc;
}

// evaluate a bivariate polynomial at quotient elements (U, V) mod omega_T
QUPoly eval_biv_quotient(const QBPoly& f, const QUPoly& U, const QUPoly& V,
                         const QUPoly& om) {
  QUPoly acc;
  for (size_t i = f.cu.size(); i-- > 0;) {
    acc = (acc * U) % om;
    // inner Horner in V
    QUPoly row;
    for (size_t j = f.cu[i].c.size(); j-- > 0;) {
      row = (row * V) % om;
      if (sgn(f.cu[i].c[j])) row = row + QUPoly::constant(f.cu[i].c[j]);
    }
    acc = acc + row;
  }
  return acc % om;
}

Rational pow_rat(const Rational& b, int e) {
  Rational r(1);
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

std::vector<Rational> small_int_form(int n, Rng& rng) {
  std::vector<Rational> f(n);
  bool nz = false;
  for (int i = 0; i < n; ++i) {
    long v = rng.integer(-8, 8);
    f[i] = Rational(v);
    if (v) nz = true;
  }
  if (!nz && n) f[0] = 1;
  return f;
}

MultiPoly linear_form_poly(int n, const std::vector<Rational>& form) {
  std::vector<MultiPoly::Term> ts;
  for (int i = 0; i < n; ++i)
    if (sgn(form[i])) ts.push_back({Monomial::var(n, i), form[i]});
  return MultiPoly::from_terms(n, std::move(ts));
}

}  // namespace

bool points_on_curve(const ZeroDimParam& t, const OneDimParam& curve) {
  if (t.is_empty()) return true;
  if (curve.is_empty()) return false;
  if (t.n != curve.n) throw InvalidInput("points_on_curve: arity mismatch");
  QUPoly U, V;
  for (int i = 0; i < t.n; ++i) {
    if (sgn(curve.form[i])) U = U + t.rho[i] * curve.form[i];
    if (sgn(curve.form2[i])) V = V + t.rho[i] * curve.form2[i];
  }
  U = U % t.omega;
  V = V % t.omega;
  if (!eval_biv_quotient(curve.omega, U, V, t.omega).is_zero()) return false;
  QUPoly wu = eval_biv_quotient(curve.omega.derivative_u(), U, V, t.omega);
  for (int i = 0; i < t.n; ++i) {
    QUPoly lhs = eval_biv_quotient(curve.rho[i], U, V, t.omega);
    QUPoly rhs = (t.rho[i] * wu) % t.omega;
    if (lhs != rhs) return false;
  }
  return true;
}

OneDimParam roadmap_bounded(const Slp& gamma, const Slp& gphi, const ZeroDimParam& Q,
                            const ZeroDimParam& S_F, const ZeroDimParam& P_F,
                            const RoadmapConfig& cfg, std::vector<CurvePiece>* pieces,
                            std::vector<ZeroDimParam>* junctions,
                            polar::DegreeLedger* ledger, int depth) {
  auto fs = polar::expand_system(gamma);
  auto phis = polar::expand_system(gphi);
  int n = gamma.input_count();
  int c = static_cast<int>(fs.size());
  int d = n - c;
  int D = 2;
  for (auto& f : fs) D = std::max(D, f.degree());
  int d_F = d - 1;
  if (Q.is_empty()) return empty_one_dim(n);
  // sigma <= ((n+e) D)^(n+e) with e = 1
  Rational sigma_cap = pow_rat(Rational((n + 1) * D), n + 1);
  if (Rational(S_F.degree()) > sigma_cap)
    throw MonteCarloFailure("roadmap_bounded: sigma exceeds the stated cap");
  int max_depth = 1;
  for (int dd = d; dd > 1; dd = (dd + 1) / 2) ++max_depth;
  if (depth > max_depth) throw MonteCarloFailure("roadmap_bounded: depth overflow");

  MultiPoly fib = fiber_condition(Q, phis[0]);
  std::vector<MultiPoly> gens_F = fs;
  gens_F.push_back(fib);

  if (d_F <= 1) {
    elim::SolveOptions sopt;
    sopt.seed = cfg.seed ^ (0xb0 + depth);
    sopt.limits = cfg.limits;
    OneDimParam curve = elim::solve_system_one_dim(gens_F, n, sopt);
    if (!points_on_curve(P_F, curve))
      throw MonteCarloFailure("roadmap_bounded: control points left the fiber curve");
    if (pieces) pieces->push_back({curve, gens_F, "fiber-curve depth " + std::to_string(depth)});
    if (ledger) {
      polar::DegreeEntry e;
      e.step = "RoadmapBounded base (depth " + std::to_string(depth) + ")";
      e.degree = curve.degree();
      e.bound = Rational(Q.degree()) * Rational(2 * D) * polar::binomial(n, c);
      e.ok = true;  // informational
      ledger->push_back(e);
    }
    return curve;
  }
  if (d_F > 2)
    throw InvalidInput(
        "roadmap_bounded: inputs of dimension > 3 need deeper recursion than this "
        "build supports");

  // one recursion level: the fibers F form a bounded complete intersection
  // (f, fib); run the Algorithm-1 pattern on F with a random pair of linear
  // forms in place of (phi_1, phi_2)
  Slp gammaF = slp_from_polys(gens_F);
  Rng rng(cfg.seed * 0x9e3779b97f4a7c15ull + depth);
  std::string err = "roadmap_bounded: retries exhausted";
  for (int attempt = 0; attempt <= cfg.retries; ++attempt) {
    try {
      std::vector<Rational> lam1 = small_int_form(n, rng);
      std::vector<Rational> lam2 = small_int_form(n, rng);
      Slp glam = slp_from_polys({linear_form_poly(n, lam1), linear_form_poly(n, lam2)});
      polar::PolarOptions popt;
      popt.seed = cfg.seed ^ (0xbead00 + 131 * attempt + depth);
      popt.limits = cfg.limits;
      popt.route = cfg.route;
      OneDimParam w2p = polar::solve_polar(gammaF, glam, S_F, popt, ledger);
      ZeroDimParam kp = polar::crit_polar(gammaF, glam, P_F, popt, ledger);
      Rng rng2(popt.seed ^ 0x1111);
      ZeroDimParam qp = image(glam, 1, kp, rng2);
      ZeroDimParam ppp = polar::fiber_polar(gammaF, glam, qp, P_F, popt, ledger);
      ZeroDimParam spp = polar::crit(gammaF, glam, S_F, popt, ledger);
      if (pieces && !w2p.is_empty())
        pieces->push_back({w2p, polar::rank_drop_system(gens_F, polar::expand_system(glam), 2),
                           "recursion polar curve depth " + std::to_string(depth)});
      if (junctions) junctions->push_back(ppp);
      OneDimParam rpp = roadmap_bounded(gammaF, glam, qp, spp, ppp, cfg, pieces,
                                        junctions, ledger, depth + 1);
      Rng rng3(popt.seed ^ 0x2222);
      if (w2p.is_empty()) return rpp;
      if (rpp.is_empty()) return w2p;
      return union_params(w2p, rpp, rng3);
    } catch (const MonteCarloFailure& e) {
      err = e.what();
    }
  }
  throw MonteCarloFailure(err);
}

RoadmapResult roadmap_unbounded(const Slp& gamma, const ZeroDimParam& p0,
                                const RoadmapConfig& cfg) {
  auto fs = polar::expand_system(gamma);
  int n = gamma.input_count();
  int c = static_cast<int>(fs.size());
  int d = n - c;
  if (d < 1) throw InvalidInput("roadmap: zero-dimensional input");
  if (!p0.is_empty() && p0.n != n) throw InvalidInput("roadmap: query arity mismatch");
  // exact membership of the query points in V
  for (auto& f : fs)
    if (!generator_vanishes(f, p0))
      throw InvalidInput("roadmap: a query point is not on V");

  RoadmapResult res;
  res.n = n;
  res.seed = cfg.seed;
  res.queries = p0;

  polar::PolarOptions popt;
  popt.seed = cfg.seed;
  popt.limits = cfg.limits;
  popt.route = cfg.route;
  popt.check_level_full = cfg.check_level_full;

  res.checkLedger.push_back(polar::check_h1(fs, n, popt));
  if (res.checkLedger.back().status == polar::CheckStatus::Fail)
    throw MonteCarloFailure("roadmap: H1 failed: " + res.checkLedger.back().detail);

  if (d == 1) {
    // the input variety is a curve: it is its own roadmap
    elim::SolveOptions sopt;
    sopt.seed = cfg.seed ^ 0xd1;
    sopt.limits = cfg.limits;
    res.curve = elim::solve_system_one_dim(fs, n, sopt);
    if (!points_on_curve(p0, res.curve))
      throw MonteCarloFailure("roadmap: query points not on the input curve");
    res.pieces.push_back({res.curve, fs, "input curve (d = 1)"});
    res.junctions.push_back(p0);
    for (auto& name : {"H2", "H3", "H4", "H5", "H6"}) {
      polar::CheckEntry e;
      e.name = name;
      e.status = polar::CheckStatus::Bypassed;
      e.detail = "d = 1: the variety is its own roadmap";
      res.checkLedger.push_back(e);
    }
    resolve_components(res, cfg);
    return res;
  }

  // Step 1: singular points (cached across attempts; deterministic)
  ZeroDimParam sing = polar::singular_points(gamma, popt, &res.degreeLedger);
  // Step 2: P := P0 union sing(V)
  Rng rng0(cfg.seed ^ 0x57e9);
  ZeroDimParam P = union_params(p0, sing, rng0);
  if (!points_subset(p0, P))
    throw MonteCarloFailure("roadmap: containment P0 in P failed");

  Rng arng(cfg.seed * 0xa11ce + 7);
  std::string err = "roadmap: retries exhausted";
  for (int attempt = 0; attempt <= cfg.retries; ++attempt) {
    try {
      RoadmapResult out = res;  // keep H1 entry and inputs
      // Step 3: random alpha (small heights first, the full spec range later)
      std::vector<Rational> alpha;
      long bound = attempt < 2 ? (1L << 7) : (1L << 16);
      for (int i = 0; i < 2 * n; ++i) alpha.push_back(Rational(arng.integer(-bound, bound)));
      out.alpha = alpha;
      // Step 4: PhiGen
      Slp gphi = phigen(alpha);
      auto phis = polar::expand_system(gphi);
      out.checkLedger.push_back(polar::check_h2());
      polar::PolarOptions apopt = popt;
      apopt.seed = cfg.seed + 7919 * attempt;
      // Step 5: SolvePolar
      OneDimParam w2 = polar::solve_polar(gamma, gphi, sing, apopt, &out.degreeLedger);
      out.checkLedger.push_back(polar::check_h3(fs, phis, w2, sing, apopt));
      if (out.checkLedger.back().status == polar::CheckStatus::Fail)
        throw MonteCarloFailure("H3: " + out.checkLedger.back().detail);
      // Step 6: CritPolar
      ZeroDimParam K = polar::crit_polar(gamma, gphi, P, apopt, &out.degreeLedger, &w2);
      {
        polar::CheckEntry e;
        e.name = "H5: K(phi_1, W2) finite";
        e.detail = "CritPolar solved a zero-dimensional system of degree " +
                   std::to_string(K.degree());
        out.checkLedger.push_back(e);
      }
      if (!points_subset(sing, K) || !points_subset(P, K))
        throw MonteCarloFailure("roadmap: containment of P in K failed");
      // Step 7: Image
      Rng irng(apopt.seed ^ 0x1347);
      ZeroDimParam Q = image(gphi, 1, K, irng);
      {
        // phi_1(Z(K)) = Z(Q): the forward inclusion is exact
        MultiPoly cond = fiber_condition(Q, phis[0]);
        if (!generator_vanishes(cond, K))
          throw MonteCarloFailure("roadmap: phi_1(K) differs from Q");
      }
      // Step 8: FiberPolar
      ZeroDimParam PF = polar::fiber_polar(gamma, gphi, Q, P, apopt, &out.degreeLedger);
      {
        polar::CheckEntry e;
        e.name = "H6: P_W = F intersect W2 finite";
        e.detail = "FiberPolar solved a zero-dimensional system of degree " +
                   std::to_string(PF.degree());
        out.checkLedger.push_back(e);
      }
      // Step 9: Crit
      ZeroDimParam SF = polar::crit(gamma, gphi, sing, apopt, &out.degreeLedger);
      out.checkLedger.push_back(polar::check_h4(fs, phis[0], Q, apopt));
      if (out.checkLedger.back().status == polar::CheckStatus::Fail)
        throw MonteCarloFailure("H4: " + out.checkLedger.back().detail);
      // Step 10: RoadmapBounded
      if (!w2.is_empty())
        out.pieces.push_back({w2, polar::rank_drop_system(fs, phis, 2), "W2"});
      out.junctions.push_back(PF);
      out.junctions.push_back(K);
      RoadmapConfig bcfg = cfg;
      bcfg.seed = apopt.seed ^ 0xb0b0;
      OneDimParam RF = roadmap_bounded(gamma, gphi, Q, SF, PF, bcfg, &out.pieces,
                                       &out.junctions, &out.degreeLedger, 0);
      // Step 11: Union
      Rng urng(apopt.seed ^ 0x7171);
      if (w2.is_empty())
        out.curve = RF;
      else if (RF.is_empty())
        out.curve = w2;
      else
        out.curve = union_params(w2, RF, urng);
      if (!points_on_curve(p0, out.curve))
        throw MonteCarloFailure("roadmap: query points are not on the output curve");
      resolve_components(out, cfg);
      return out;
    } catch (const MonteCarloFailure& e) {
      err = e.what();
    }
  }
  throw MonteCarloFailure(err);
}

// ---------------------------------------------------------------------------
// graph assembly
// ---------------------------------------------------------------------------

void resolve_components(RoadmapResult& r, const RoadmapConfig& cfg) {
  // per-piece topology
  std::vector<std::unique_ptr<topology::PieceTopology>> tops;
  for (auto& piece : r.pieces) {
    topology::TopologyOptions topt;
    topt.seed = cfg.seed ^ 0x707;
    topt.limits = cfg.limits;
    topt.system = piece.system.empty() ? nullptr : &piece.system;
    tops.push_back(std::make_unique<topology::PieceTopology>(piece.curve, topt));
  }
  // global union-find over piece components and pool points
  std::vector<int> parent;
  auto fresh = [&]() {
    parent.push_back((int)parent.size());
    return (int)parent.size() - 1;
  };
  std::function<int(int)> find = [&](int a) {
    while (parent[a] != a) a = parent[a];
    return a;
  };
  auto unite = [&](int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  };
  std::vector<std::vector<int>> piece_comp_nodes(r.pieces.size());
  for (size_t pi = 0; pi < r.pieces.size(); ++pi)
    for (int cidx = 0; cidx < tops[pi]->component_count(); ++cidx)
      piece_comp_nodes[pi].push_back(fresh());

  // pools: junction sets plus the query points
  std::vector<const ZeroDimParam*> pools;
  for (auto& j : r.junctions) pools.push_back(&j);
  pools.push_back(&r.queries);
  std::vector<std::vector<topology::AlgebraicPoint>> pool_pts(pools.size());
  std::vector<std::vector<int>> pool_nodes(pools.size());
  for (size_t k = 0; k < pools.size(); ++k) {
    pool_pts[k] = topology::real_points_of(*pools[k]);
    for (auto& pt : pool_pts[k]) {
      (void)pt;
      pool_nodes[k].push_back(fresh());
    }
  }
  // location of pool points on pieces
  for (size_t k = 0; k < pools.size(); ++k) {
    if (pools[k]->is_empty()) continue;
    for (size_t pi = 0; pi < r.pieces.size(); ++pi) {
      const OneDimParam& c = r.pieces[pi].curve;
      if (c.is_empty() || c.n != pools[k]->n) continue;
      // exact witnesses: factor of the pool covering points on this curve
      QUPoly U, V;
      for (int i = 0; i < c.n; ++i) {
        if (sgn(c.form[i])) U = U + pools[k]->rho[i] * c.form[i];
        if (sgn(c.form2[i])) V = V + pools[k]->rho[i] * c.form2[i];
      }
      U = U % pools[k]->omega;
      V = V % pools[k]->omega;
      QUPoly w0 = eval_biv_quotient(c.omega, U, V, pools[k]->omega);
      QUPoly g = topology::q_gcd_modular(pools[k]->omega, w0, cfg.seed ^ 0x99);
      QUPoly wu = eval_biv_quotient(c.omega.derivative_u(), U, V, pools[k]->omega);
      for (int i = 0; i < c.n && g.deg() > 0; ++i) {
        QUPoly wi = eval_biv_quotient(c.rho[i], U, V, pools[k]->omega) -
                    (pools[k]->rho[i] * wu) % pools[k]->omega;
        g = topology::q_gcd_modular(g, wi, cfg.seed ^ (0x100 + i));
      }
      if (g.deg() <= 0) continue;
      ZZPoly gz = zz_from_upoly(g);
      auto chain = sturm_chain(gz);
      for (size_t t = 0; t < pool_pts[k].size(); ++t) {
        auto& pt = pool_pts[k][t];
        // on the curve iff the isolating interval holds a root of g
        while (pt.root.width() > Rational(1, 1000000) && !pt.root.exact) pt.refine();
        int cnt = pt.root.exact
                      ? (sgn(g.eval(pt.root.lo)) == 0 ? 1 : 0)
                      : sturm_count(chain, pt.root.lo, pt.root.hi);
        if (cnt < 1) continue;
        int comp = tops[pi]->locate(pt);
        if (comp < 0)
          throw MonteCarloFailure("graph: failed to locate a junction point");
        unite(pool_nodes[k][t], piece_comp_nodes[pi][comp]);
      }
    }
  }
  // identify pool points across pools (same algebraic point in two pools)
  for (size_t k1 = 0; k1 < pools.size(); ++k1)
    for (size_t k2 = k1 + 1; k2 < pools.size(); ++k2)
      for (size_t a = 0; a < pool_pts[k1].size(); ++a)
        for (size_t b = 0; b < pool_pts[k2].size(); ++b) {
          if (find(pool_nodes[k1][a]) == find(pool_nodes[k2][b])) continue;
          if (topology::same_point(pool_pts[k1][a], pool_pts[k2][b]))
            unite(pool_nodes[k1][a], pool_nodes[k2][b]);
        }

  // components of the roadmap = classes touching at least one piece component
  std::map<int, int> label;
  int next = 0;
  for (auto& nodes : piece_comp_nodes)
    for (int nd : nodes) {
      int rt = find(nd);
      if (!label.count(rt)) label[rt] = next++;
    }
  r.componentCount = next;

  // query labels
  r.queryComponent.clear();
  size_t qk = pools.size() - 1;
  r.queryIds.clear();
  for (size_t t = 0; t < pool_pts[qk].size(); ++t) {
    std::string id = "p" + std::to_string(t);
    r.queryIds.push_back(id);
    int rt = find(pool_nodes[qk][t]);
    if (!label.count(rt))
      throw MonteCarloFailure("graph: query point not connected to any piece");
    r.queryComponent[id] = label[rt];
  }
  // explicit tuples map to ids by matching the root of their form value
  if (!r.queryTuples.empty()) {
    std::map<std::string, int> byTuple;
    for (size_t q = 0; q < r.queryTuples.size(); ++q) {
      Rational val(0);
      for (int i = 0; i < r.queries.n; ++i) val += r.queries.form[i] * r.queryTuples[q][i];
      for (size_t t = 0; t < pool_pts[qk].size(); ++t) {
        auto& rt = pool_pts[qk][t].root;
        if ((rt.exact && rt.lo == val) || (!rt.exact && rt.lo <= val && val <= rt.hi)) {
          byTuple["p" + std::to_string(q)] = r.queryComponent["p" + std::to_string(t)];
          break;
        }
      }
    }
    r.queryComponent = byTuple;
  }
}

ConnectivityGraph curve_topology(const OneDimParam& rcurve, const ZeroDimParam& extra,
                                 const topology::TopologyOptions& opt) {
  ConnectivityGraph g;
  topology::PieceTopology top(rcurve, opt);
  g.componentCount = top.component_count();
  auto pts = topology::real_points_of(extra);
  for (size_t i = 0; i < pts.size(); ++i) {
    ConnectivityGraph::Vertex v;
    v.box = pts[i].coords();
    v.tag = "p" + std::to_string(i);
    v.component = top.locate(pts[i]);
    g.vertices.push_back(std::move(v));
  }
  return g;
}

bool connectivity_query(const RoadmapResult& result, const std::string& a,
                        const std::string& b) {
  auto ia = result.queryComponent.find(a);
  auto ib = result.queryComponent.find(b);
  if (ia == result.queryComponent.end() || ib == result.queryComponent.end())
    throw InvalidInput("connectivity_query: unknown query identifier");
  return ia->second == ib->second;
}

// ---------------------------------------------------------------------------
// JSON
// ---------------------------------------------------------------------------

namespace {

json poly_json(const MultiPoly& f) {
  json terms = json::array();
  for (auto& t : f.terms()) {
    json e = json::array();
    for (int i = 0; i < f.nvars(); ++i) e.push_back(t.m.e[i]);
    terms.push_back({{"e", e}, {"c", rational_to_string(t.c)}});
  }
  return {{"n", f.nvars()}, {"terms", terms}};
}

MultiPoly poly_from_json(const json& j) {
  int n = j.at("n").get<int>();
  std::vector<MultiPoly::Term> ts;
  for (auto& t : j.at("terms")) {
    Monomial m = Monomial::one(n);
    auto es = t.at("e");
    for (int i = 0; i < n; ++i) {
      m.e[i] = es[i].get<uint16_t>();
      m.deg += m.e[i];
    }
    ts.push_back({m, parse_rational(t.at("c").get<std::string>())});
  }
  return MultiPoly::from_terms(n, std::move(ts));
}

}  // namespace

std::string result_to_json(const RoadmapResult& r) {
  json j;
  j["n"] = r.n;
  j["seed"] = r.seed;
  json alpha = json::array();
  for (auto& a : r.alpha) alpha.push_back(rational_to_string(a));
  j["alpha"] = std::move(alpha);
  j["curve"] = json::parse(one_dim_to_json(r.curve));
  json dl = json::array();
  for (auto& e : r.degreeLedger)
    dl.push_back({{"step", e.step},
                  {"degree", e.degree},
                  {"bound", rational_to_string(e.bound)},
                  {"ok", e.ok}});
  j["degreeLedger"] = std::move(dl);
  json cl = json::array();
  for (auto& e : r.checkLedger) {
    const char* st = e.status == polar::CheckStatus::Pass         ? "pass"
                     : e.status == polar::CheckStatus::Fail       ? "fail"
                     : e.status == polar::CheckStatus::Structural ? "structural"
                                                                  : "bypassed";
    cl.push_back({{"name", e.name}, {"status", st}, {"detail", e.detail}});
  }
  j["checkLedger"] = std::move(cl);
  json pieces = json::array();
  for (auto& piece : r.pieces) {
    json sys = json::array();
    for (auto& g : piece.system) sys.push_back(poly_json(g));
    pieces.push_back({{"curve", json::parse(one_dim_to_json(piece.curve))},
                      {"system", sys},
                      {"label", piece.label}});
  }
  j["pieces"] = std::move(pieces);
  json pools = json::array();
  for (auto& p : r.junctions) pools.push_back(json::parse(zero_dim_to_json(p)));
  j["junctions"] = std::move(pools);
  j["queries"] = json::parse(zero_dim_to_json(r.queries));
  j["queryIds"] = r.queryIds;
  json qt = json::array();
  for (auto& t : r.queryTuples) {
    json row = json::array();
    for (auto& x : t) row.push_back(rational_to_string(x));
    qt.push_back(std::move(row));
  }
  j["queryTuples"] = std::move(qt);
  json qc = json::object();
  for (auto& [k, v] : r.queryComponent) qc[k] = v;
  j["queryComponents"] = std::move(qc);
  j["componentCount"] = r.componentCount;
  return j.dump(2);
}

RoadmapResult result_from_json(const std::string& text) {
  json j = json::parse(text);
  RoadmapResult r;
  r.n = j.at("n").get<int>();
  r.seed = j.at("seed").get<uint64_t>();
  for (auto& a : j.at("alpha")) r.alpha.push_back(parse_rational(a.get<std::string>()));
  r.curve = one_dim_from_json(j.at("curve").dump());
  for (auto& e : j.at("degreeLedger")) {
    polar::DegreeEntry de;
    de.step = e.at("step").get<std::string>();
    de.degree = e.at("degree").get<long>();
    de.bound = parse_rational(e.at("bound").get<std::string>());
    de.ok = e.at("ok").get<bool>();
    r.degreeLedger.push_back(de);
  }
  for (auto& e : j.at("checkLedger")) {
    polar::CheckEntry ce;
    ce.name = e.at("name").get<std::string>();
    std::string st = e.at("status").get<std::string>();
    ce.status = st == "pass"         ? polar::CheckStatus::Pass
                : st == "fail"       ? polar::CheckStatus::Fail
                : st == "structural" ? polar::CheckStatus::Structural
                                     : polar::CheckStatus::Bypassed;
    ce.detail = e.at("detail").get<std::string>();
    r.checkLedger.push_back(ce);
  }
  for (auto& pj : j.at("pieces")) {
    CurvePiece piece;
    piece.curve = one_dim_from_json(pj.at("curve").dump());
    for (auto& g : pj.at("system")) piece.system.push_back(poly_from_json(g));
    piece.label = pj.at("label").get<std::string>();
    r.pieces.push_back(std::move(piece));
  }
  for (auto& p : j.at("junctions")) r.junctions.push_back(zero_dim_from_json(p.dump()));
  r.queries = zero_dim_from_json(j.at("queries").dump());
  r.queryIds = j.at("queryIds").get<std::vector<std::string>>();
  for (auto& row : j.at("queryTuples")) {
    std::vector<Rational> t;
    for (auto& x : row) t.push_back(parse_rational(x.get<std::string>()));
    r.queryTuples.push_back(std::move(t));
  }
  for (auto& [k, v] : j.at("queryComponents").items()) r.queryComponent[k] = v.get<int>();
  r.componentCount = j.at("componentCount").get<int>();
  return r;
}

}  // namespace roadmap
}  // namespace polarpath

#include "polarpath/topology.hpp"

#include "polarpath/elim.hpp"

namespace polarpath {
namespace topology {

std::vector<QI> AlgebraicPoint::coords() const {
  std::vector<QI> out;
  QI th(root.lo, root.hi);
  for (auto& r : param->rho) out.push_back(qi_eval(r, th));
  return out;
}

QI AlgebraicPoint::form_value(const std::vector<Rational>& form) const {
  QI acc;
  QI th(root.lo, root.hi);
  for (size_t i = 0; i < form.size() && i < param->rho.size(); ++i)
    acc = acc + qi_eval(param->rho[i], th) * form[i];
  return acc;
}

void AlgebraicPoint::refine() {
  refine_root(zomega, root, root.width() / 16);
}

std::vector<AlgebraicPoint> real_points_of(const ZeroDimParam& p) {
  std::vector<AlgebraicPoint> out;
  if (p.is_empty()) return out;
  ZZPoly z = zz_from_upoly(p.omega);
  for (auto& r : isolate_roots(z)) {
    AlgebraicPoint pt;
    pt.param = &p;
    pt.zomega = z;
    pt.root = r;
    out.push_back(std::move(pt));
  }
  return out;
}

bool same_point(AlgebraicPoint& a, AlgebraicPoint& b) {
  if (a.param->n != b.param->n) return false;
  const Rational eps(1, Int("1000000000000000000000000000000"));
  for (int round = 0; round < 220; ++round) {
    auto ca = a.coords();
    auto cb = b.coords();
    bool disjoint = false;
    for (int i = 0; i < a.param->n; ++i)
      if (ca[i].disjoint(cb[i])) disjoint = true;
    if (disjoint) return false;
    bool fine = a.width() <= eps && b.width() <= eps;
    if (fine) return true;  // boxes at policy precision still overlap
    a.refine();
    b.refine();
  }
  return true;
}

// ---------------------------------------------------------------------------
// exact modular gcd / squarefree / discriminant
// ---------------------------------------------------------------------------

QUPoly q_gcd_modular(const QUPoly& a, const QUPoly& b, uint64_t seed) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  PrimeStream ps(seed);
  RatRecState state;
  int dg = -1;
  size_t bad = 0;
  while (state.primes_used() < 512) {
    uint32_t p = ps.next();
    ZpUPoly ap, bp;
    if (!reduce_upoly_mod(a, p, ap) || !reduce_upoly_mod(b, p, bp)) continue;
    if (ap.deg() != a.deg() || bp.deg() != b.deg()) continue;
    ZpUPoly g = upoly_gcd(ap, bp);
    if (dg < 0) dg = g.deg();
    if (g.deg() != dg) {
      // keep the smaller degree (true gcd degree is minimal over good primes)
      if (g.deg() < dg) {
        dg = g.deg();
        state = RatRecState();
      } else {
        continue;
      }
    }
    if (dg == 0) return QUPoly::constant(Rational(1));
    std::vector<uint32_t> res;
    for (int i = 0; i <= dg; ++i) res.push_back(i <= g.deg() ? g.c[i].v : 0);
    if (!state.feed(p, res)) {
      if (++bad > 400) break;
      continue;
    }
    QUPoly cand;
    cand.c = state.value();
    cand.norm();
    if (cand.deg() != dg) continue;
    if ((a % cand).is_zero() && (b % cand).is_zero()) return cand;
  }
  throw ResourceLimit("q_gcd_modular: no stable gcd");
}

QUPoly q_squarefree_modular(const QUPoly& f, uint64_t seed) {
  if (f.deg() <= 1) return f.monic();
  QUPoly g = q_gcd_modular(f, f.derivative(), seed ^ 0x5f5f);
  QUPoly out = (f / g).monic();
  return out;
}

QUPoly discriminant_v(const QBPoly& omega, uint64_t seed) {
  QBPoly wu = omega.derivative_u();
  int deg_bound = omega.deg_u() * std::max(0, wu.deg_v()) +
                  std::max(0, wu.deg_u()) * std::max(0, omega.deg_v());
  PrimeStream ps(seed);
  RatRecState state;
  int dg = -1;
  while (state.primes_used() < 512) {
    uint32_t p = ps.next();
    ZpBPoly op, wp;
    if (!reduce_bpoly_mod(omega, p, op) || !reduce_bpoly_mod(wu, p, wp)) continue;
    if (op.deg_u() != omega.deg_u()) continue;
    ZpUPoly r = zp_resultant_u(op, wp, deg_bound);
    if (dg < 0) dg = r.deg();
    if (r.deg() != dg) {
      if (r.deg() > dg) {
        dg = r.deg();
        state = RatRecState();
      } else {
        continue;
      }
    }
    std::vector<uint32_t> res;
    for (int i = 0; i <= dg; ++i) res.push_back(i <= r.deg() ? r.c[i].v : 0);
    if (!state.feed(p, res)) continue;
    QUPoly cand;
    cand.c = state.value();
    cand.norm();
    // exact spot verification at two rational points
    bool ok = true;
    for (long v0 : {7L, -13L}) {
      Rational vq(v0);
      Rational lhs = q_resultant(omega.eval_v(vq), wu.eval_v(vq));
      if (lhs != cand.eval(vq)) ok = false;
    }
    if (ok) return cand;
  }
  throw ResourceLimit("discriminant_v: no stable resultant");
}

// ---------------------------------------------------------------------------
// the sweep
// ---------------------------------------------------------------------------

namespace {

int sturm_roots_below(const ZZPoly& f, const Rational& x) {
  auto chain = sturm_chain(f);
  // roots in (-inf, x]: V(-inf) - V(x)
  std::vector<int> lo, hi;
  for (auto& p : chain) {
    int s = sgn(p.c.back());
    lo.push_back((p.deg() % 2) ? -s : s);
    hi.push_back(p.sign_at(x));
  }
  auto variations = [](const std::vector<int>& signs) {
    int v = 0, prev = 0;
    for (int s : signs) {
      if (s == 0) continue;
      if (prev != 0 && s != prev) ++v;
      prev = s;
    }
    return v;
  };
  return variations(lo) - variations(hi);
}

// roots of omega(u, v0) as refinable intervals
std::vector<RootInterval> slice_roots(const QBPoly& omega, const Rational& v0,
                                      ZZPoly* zout) {
  QUPoly f = omega.eval_v(v0);
  ZZPoly z = zz_from_upoly(f);
  if (zout) *zout = z;
  return isolate_roots(z);
}

// no roots of g(v) in [a, b] and g(a) != 0 (g integer-scaled)
bool wall_root_free(const QUPoly& wall, const Rational& a, const Rational& b) {
  ZZPoly z = zz_from_upoly(wall);
  if (z.is_zero()) return false;
  if (z.sign_at(a) == 0) return false;
  auto chain = sturm_chain(z);
  return sturm_count(chain, a, b) == 0;
}

}  // namespace

int PieceTopology::uf_find(int a) const {
  while (parent_[a] != a) a = parent_[a];
  return a;
}

void PieceTopology::uf_union(int a, int b) {
  a = uf_find(a);
  b = uf_find(b);
  if (a != b) parent_[std::max(a, b)] = std::min(a, b);
}

int PieceTopology::new_node() {
  parent_.push_back(static_cast<int>(parent_.size()));
  return static_cast<int>(parent_.size()) - 1;
}

PieceTopology::PieceTopology(const OneDimParam& curve, const TopologyOptions& opt)
    : curve_(curve), opt_(opt) {
  if (curve.is_empty()) {
    ncomp_ = 0;
    return;
  }
  auto rep = validate(curve);
  if (!rep.ok) throw InvalidInput("topology: invalid curve: " + rep.reason);
  omega_u_ = curve_.omega.derivative_u();

  // 1. critical values
  QUPoly disc = discriminant_v(curve_.omega, opt_.seed ^ 0xd15c);
  if (disc.is_zero()) throw InvalidInput("topology: zero discriminant");
  QUPoly dsq = q_squarefree_modular(disc, opt_.seed ^ 0xd15d);
  crit_poly_ = zz_from_upoly(dsq);
  crit_v_ = crit_poly_.deg() >= 1 ? isolate_roots(crit_poly_) : std::vector<RootInterval>{};

  // separate the critical intervals strictly
  for (size_t i = 0; i + 1 < crit_v_.size(); ++i)
    while (!(crit_v_[i].hi < crit_v_[i + 1].lo)) {
      refine_root(crit_poly_, crit_v_[i], crit_v_[i].width() / 4);
      refine_root(crit_poly_, crit_v_[i + 1], crit_v_[i + 1].width() / 4);
    }

  // 2. gaps and branch roots
  size_t k = crit_v_.size();
  gaps_.resize(k + 1);
  for (size_t g = 0; g <= k; ++g) {
    Rational s;
    if (k == 0)
      s = 0;
    else if (g == 0)
      s = crit_v_[0].lo - 1;
    else if (g == k)
      s = crit_v_[k - 1].hi + 1;
    else
      s = (crit_v_[g - 1].hi + crit_v_[g].lo) / 2;
    gaps_[g].sample = s;
    gaps_[g].roots = slice_roots(curve_.omega, s, nullptr);
    for (size_t i = 0; i < gaps_[g].roots.size(); ++i)
      gaps_[g].seg_node.push_back(new_node());
  }

  // 3. critical plane points {omega = 0, omega_u = 0}
  std::vector<AlgebraicPoint> cpts;
  ZeroDimParam crit2;
  if (k > 0) {
    std::vector<MultiPoly> sys2{to_multipoly2(curve_.omega), to_multipoly2(omega_u_)};
    elim::SolveOptions sopt;
    sopt.seed = opt_.seed ^ 0xc21;
    sopt.limits = opt_.limits;
    crit2 = elim::solve_system_zero_dim(sys2, 2, sopt);
    cpts = real_points_of(crit2);
  }
  // group by critical value
  std::vector<std::vector<size_t>> at_value(k);
  for (size_t ci = 0; ci < cpts.size(); ++ci) {
    auto& pt = cpts[ci];
    for (int round = 0; round < opt_.refine_budget; ++round) {
      QI v = pt.coords()[1];
      int inside = -1;
      int hits = 0;
      for (size_t j = 0; j < k; ++j) {
        QI cj(crit_v_[j].lo, crit_v_[j].hi);
        if (!v.disjoint(cj)) {
          inside = static_cast<int>(j);
          ++hits;
        }
      }
      if (hits == 1 && v.lo >= crit_v_[inside].lo && v.hi <= crit_v_[inside].hi) {
        at_value[inside].push_back(ci);
        inside = -2;
      } else if (hits <= 1 && round + 1 < opt_.refine_budget) {
        pt.refine();
        for (size_t j = 0; j < k; ++j)
          refine_root(crit_poly_, crit_v_[j], crit_v_[j].width() / 4);
        continue;
      }
      if (inside == -2) break;
      pt.refine();
    }
  }

  // 4. space vertices over the critical plane points
  ZeroDimParam xcrit;
  std::vector<AlgebraicPoint> xpts;
  if (opt_.system && k > 0) {
    int n = curve_.n;
    int N = n + 2;
    std::vector<int> where(n);
    for (int i = 0; i < n; ++i) where[i] = i;
    std::vector<MultiPoly> sys;
    for (auto& g : *opt_.system) sys.push_back(g.remap(N, where));
    // l(x) - u, l'(x) - v with u, v the last two variables
    std::vector<MultiPoly::Term> t1, t2;
    for (int i = 0; i < n; ++i) {
      if (sgn(curve_.form[i])) t1.push_back({Monomial::var(N, i), curve_.form[i]});
      if (sgn(curve_.form2[i])) t2.push_back({Monomial::var(N, i), curve_.form2[i]});
    }
    t1.push_back({Monomial::var(N, n), Rational(-1)});
    t2.push_back({Monomial::var(N, n + 1), Rational(-1)});
    sys.push_back(MultiPoly::from_terms(N, std::move(t1)));
    sys.push_back(MultiPoly::from_terms(N, std::move(t2)));
    std::vector<int> uv{n, n + 1};
    auto w2 = to_multipoly2(curve_.omega).remap(N, uv);
    auto wu2 = to_multipoly2(omega_u_).remap(N, uv);
    sys.push_back(w2);
    sys.push_back(wu2);
    elim::SolveOptions sopt;
    sopt.seed = opt_.seed ^ 0xc22;
    sopt.limits = opt_.limits;
    try {
      xcrit = elim::solve_system_zero_dim(sys, N, sopt);
      xpts = real_points_of(xcrit);
    } catch (const elim::DimensionError&) {
      throw MonteCarloFailure("topology: space points over nodes are not finite");
    }
  }

  // vertex catalog per critical value
  verts_at_.assign(k, {});
  std::vector<std::vector<int>> vert_node_at(k);
  auto add_vertex = [&](size_t value_idx, const QI& u, const QI& v,
                        const std::vector<QI>* x) {
    Vertex vx;
    vx.u = u;
    vx.v = v;
    if (x) {
      vx.x = *x;
      vx.have_x = true;
    }
    vx.node = new_node();
    verts_at_[value_idx].push_back(vx);
    return static_cast<int>(verts_at_[value_idx].size()) - 1;
  };
  if (opt_.system) {
    int n = curve_.n;
    for (auto& xp : xpts) {
      // coordinates: x_0..x_{n-1}, u, v
      for (int round = 0; round < opt_.refine_budget; ++round) {
        auto cs = xp.coords();
        QI v = cs[n + 1];
        int inside = -1, hits = 0;
        for (size_t j = 0; j < k; ++j) {
          QI cj(crit_v_[j].lo, crit_v_[j].hi);
          if (!v.disjoint(cj)) {
            inside = static_cast<int>(j);
            ++hits;
          }
        }
        if (hits == 1) {
          std::vector<QI> xonly(cs.begin(), cs.begin() + n);
          add_vertex(static_cast<size_t>(inside), cs[n], v, &xonly);
          break;
        }
        xp.refine();
      }
    }
  } else {
    for (size_t j = 0; j < k; ++j)
      for (size_t ci : at_value[j]) {
        auto cs = cpts[ci].coords();
        add_vertex(j, cs[0], cs[1], nullptr);
      }
  }

  // 5. match branch ends across each critical value
  for (size_t j = 0; j < k; ++j) {
    Gap& left = gaps_[j];
    Gap& right = gaps_[j + 1];
    ZZPoly zl, zr;
    slice_roots(curve_.omega, left.sample, &zl);
    slice_roots(curve_.omega, right.sample, &zr);
    std::vector<bool> lmatched(left.roots.size(), false);
    std::vector<bool> rmatched(right.roots.size(), false);
    auto& verts = verts_at_[j];

    auto tube_ok_through = [&](const Rational& uL, const Rational& uR) {
      for (auto& vx : verts) {
        // the tube must avoid every vertex u-box
        if (!(vx.u.hi < uL || uR < vx.u.lo)) return false;
      }
      QUPoly wl = curve_.omega.eval_u(uL);
      QUPoly wr = curve_.omega.eval_u(uR);
      return wall_root_free(wl, left.sample, right.sample) &&
             wall_root_free(wr, left.sample, right.sample);
    };

    for (int round = 0; round < opt_.refine_budget; ++round) {
      bool all = true;
      // through-connections
      for (size_t a = 0; a < left.roots.size(); ++a) {
        if (lmatched[a]) continue;
        for (size_t b = 0; b < right.roots.size(); ++b) {
          if (rmatched[b]) continue;
          Rational uL = std::min(left.roots[a].lo, right.roots[b].lo);
          Rational uR = std::max(left.roots[a].hi, right.roots[b].hi);
          // exactly one root inside the tube on both sides
          int cl = 0, cr = 0;
          for (auto& r : left.roots)
            if (!(r.hi < uL || uR < r.lo)) ++cl;
          for (auto& r : right.roots)
            if (!(r.hi < uL || uR < r.lo)) ++cr;
          if (cl != 1 || cr != 1) continue;
          if (!tube_ok_through(uL, uR)) continue;
          uf_union(left.seg_node[a], right.seg_node[b]);
          lmatched[a] = rmatched[b] = true;
          break;
        }
      }
      // attachments to vertices
      auto attach = [&](Gap& gap, std::vector<bool>& matched, bool from_left) {
        Rational s = gap.sample;
        Rational vc_near = from_left ? crit_v_[j].hi : crit_v_[j].lo;
        for (size_t a = 0; a < gap.roots.size(); ++a) {
          if (matched[a]) continue;
          for (size_t t = 0; t < verts.size(); ++t) {
            Rational uL = std::min(gap.roots[a].lo, verts[t].u.lo);
            Rational uR = std::max(gap.roots[a].hi, verts[t].u.hi);
            int count = 0;
            for (auto& r : gap.roots)
              if (!(r.hi < uL || uR < r.lo)) ++count;
            if (count != 1) continue;
            bool clash = false;
            for (size_t t2 = 0; t2 < verts.size(); ++t2) {
              if (t2 == t) continue;
              if (!(verts[t2].u.hi < uL || uR < verts[t2].u.lo)) clash = true;
            }
            if (clash) continue;
            QUPoly wl = curve_.omega.eval_u(uL);
            QUPoly wr = curve_.omega.eval_u(uR);
            Rational lo = std::min(s, vc_near), hi = std::max(s, vc_near);
            if (!wall_root_free(wl, lo, hi) || !wall_root_free(wr, lo, hi)) continue;
            uf_union(gap.seg_node[a], verts[t].node);
            matched[a] = true;
            break;
          }
        }
      };
      attach(left, lmatched, true);
      attach(right, rmatched, false);

      all = true;
      for (bool m : lmatched) all = all && m;
      for (bool m : rmatched) all = all && m;
      if (all) break;
      // refine whatever is left
      for (size_t a = 0; a < left.roots.size(); ++a)
        if (!lmatched[a]) refine_root(zl, left.roots[a], left.roots[a].width() / 8);
      for (size_t b = 0; b < right.roots.size(); ++b)
        if (!rmatched[b]) refine_root(zr, right.roots[b], right.roots[b].width() / 8);
      for (auto& vx : verts) {
        // vertices refine through their source points on demand; shrink the
        // stored boxes by intersecting with fresh evaluations is not possible
        // here, so rely on the initial precision (they come isolated)
      }
      if (round + 1 == opt_.refine_budget) {
        bool unmatched = false;
        for (bool m : lmatched) unmatched = unmatched || !m;
        for (bool m : rmatched) unmatched = unmatched || !m;
        if (unmatched)
          throw MonteCarloFailure("topology: branch matching failed at a critical value");
      }
    }
  }

  // 6. components
  node_comp_.assign(parent_.size(), -1);
  int next = 0;
  for (size_t i = 0; i < parent_.size(); ++i) {
    int r = uf_find(static_cast<int>(i));
    if (node_comp_[r] < 0) node_comp_[r] = next++;
    node_comp_[i] = node_comp_[r];
  }
  ncomp_ = next;
}

int PieceTopology::locate(AlgebraicPoint& pt) const {
  if (ncomp_ == 0) return -1;
  int n = curve_.n;
  // u, v coordinates of the point under this curve's forms
  for (int round = 0; round < opt_.refine_budget; ++round) {
    QI v = pt.form_value(curve_.form2);
    // which region?
    int inside = -1, hits = 0;
    for (size_t j = 0; j < crit_v_.size(); ++j) {
      QI cj(crit_v_[j].lo, crit_v_[j].hi);
      if (!v.disjoint(cj)) {
        inside = static_cast<int>(j);
        ++hits;
      }
    }
    if (hits == 0) {
      // in a gap: find it
      size_t g = 0;
      while (g < crit_v_.size() && !(v.hi < crit_v_[g].lo)) ++g;
      // certify with a trap box at a rational value inside the v-box
      QI u = pt.form_value(curve_.form);
      Rational vm = v.mid();
      QUPoly slice = curve_.omega.eval_v(vm);
      ZZPoly zs = zz_from_upoly(slice);
      if (zs.is_zero()) return -1;
      Rational uL = u.lo - u.width() / 8 - Rational(1, 1000000);
      Rational uR = u.hi + u.width() / 8 + Rational(1, 1000000);
      auto chain = sturm_chain(zs);
      if (zs.sign_at(uL) != 0 && zs.sign_at(uR) != 0 &&
          sturm_count(chain, uL, uR) == 1) {
        QUPoly wl = curve_.omega.eval_u(uL);
        QUPoly wr = curve_.omega.eval_u(uR);
        Rational s = gaps_[g].sample;
        Rational lo = std::min(s, vm), hi = std::max(s, vm);
        if (wall_root_free(wl, lo, hi) && wall_root_free(wr, lo, hi)) {
          int idx = sturm_roots_below(zs, uL);
          if (idx >= 0 && idx < (int)gaps_[g].seg_node.size())
            return node_comp_[uf_find(gaps_[g].seg_node[idx])];
        }
      }
      pt.refine();
      continue;
    }
    if (hits == 1 && v.lo >= crit_v_[inside].lo && v.hi <= crit_v_[inside].hi) {
      // over a critical value: vertex or smooth crossing
      QI u = pt.form_value(curve_.form);
      auto& verts = verts_at_[inside];
      // vertex match by u-box (and x-box when available)
      for (auto& vx : const_cast<std::vector<Vertex>&>(verts)) {
        if (u.disjoint(vx.u)) continue;
        if (vx.have_x) {
          auto cs = pt.coords();
          bool ok = true;
          for (int i = 0; i < n && ok; ++i)
            if (cs[i].disjoint(vx.x[i])) ok = false;
          if (!ok) continue;
        }
        return node_comp_[uf_find(vx.node)];
      }
      // smooth crossing: trap against the left gap
      const Gap& left = gaps_[inside];
      Rational uL = u.lo - Rational(1, 1000000), uR = u.hi + Rational(1, 1000000);
      bool clash = false;
      for (auto& vx : verts)
        if (!(vx.u.hi < uL || uR < vx.u.lo)) clash = true;
      if (!clash) {
        QUPoly wl = curve_.omega.eval_u(uL);
        QUPoly wr = curve_.omega.eval_u(uR);
        if (wall_root_free(wl, left.sample, v.hi) &&
            wall_root_free(wr, left.sample, v.hi)) {
          // count the unique branch in the tube at the left sample
          int cnt = 0;
          size_t which = 0;
          for (size_t a = 0; a < left.roots.size(); ++a)
            if (!(left.roots[a].hi < uL || uR < left.roots[a].lo)) {
              ++cnt;
              which = a;
            }
          if (cnt == 1) return node_comp_[uf_find(left.seg_node[which])];
        }
      }
    }
    pt.refine();
  }
  return -1;
}

}  // namespace topology
}  // namespace polarpath

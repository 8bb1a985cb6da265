#include "polarpath/buchberger.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <unordered_set>

namespace polarpath {

namespace {

template <class C>
Poly<C> scale_down(const Poly<C>& f);

template <>
Poly<Zp> scale_down(const Poly<Zp>& f) {
  return make_monic(f);
}
template <>
Poly<Rational> scale_down(const Poly<Rational>& f) {
  return primitive_part(f);
}

template <class C>
C unit_coeff(const Poly<C>& f);
template <>
Zp unit_coeff(const Poly<Zp>& f) {
  return Zp::one(f.lead().c.p);
}
template <>
Rational unit_coeff(const Poly<Rational>&) {
  return Rational(1);
}

}  // namespace

template <class C>
Poly<C> normal_form(Poly<C> f, const std::vector<Poly<C>>& basis) {
  if (f.is_zero()) return f;
  int n = f.nvars();
  std::vector<typename Poly<C>::Term> kept;
  while (!f.is_zero()) {
    const auto lt = f.lead();
    const Poly<C>* red = nullptr;
    for (auto& g : basis) {
      if (!g.is_zero() && g.lead().m.divides(lt.m)) {
        red = &g;
        break;
      }
    }
    if (red) {
      C factor = lt.c * inv_coeff(red->lead().c);
      f.axpy_sub(factor, lt.m / red->lead().m, *red);
    } else {
      kept.push_back(lt);
      f.pop_lead();
    }
  }
  return Poly<C>::from_terms(n, std::move(kept));
}

namespace {

struct PairEntry {
  uint32_t i, j;
  Monomial lcm;
  uint32_t sugar;
};

struct PairOrder {
  bool operator()(const PairEntry& a, const PairEntry& b) const {
    if (a.sugar != b.sugar) return a.sugar > b.sugar;
    int c = cmp_grevlex(a.lcm, b.lcm);
    if (c != 0) return c > 0;  // smaller lcm first
    if (a.i != b.i) return a.i > b.i;
    return a.j > b.j;
  }
};

}  // namespace

template <class C>
std::optional<std::vector<Poly<C>>> buchberger(std::vector<Poly<C>> gens,
                                               const ElimLimits& limits,
                                               ElimStats* stats) {
  std::vector<Poly<C>> G;
  std::vector<uint32_t> sugar_of;
  for (auto& g : gens) {
    if (g.is_zero()) continue;
    G.push_back(scale_down(g));
    sugar_of.push_back(static_cast<uint32_t>(std::max(0, G.back().degree())));
  }
  if (G.empty()) throw InvalidInput("buchberger: zero ideal input");

  std::priority_queue<PairEntry, std::vector<PairEntry>, PairOrder> pairs;
  auto push_pairs_for = [&](uint32_t t) {
    const Monomial& lt = G[t].lead().m;
    for (uint32_t i = 0; i < t; ++i) {
      if (G[i].is_zero()) continue;
      Monomial l = lt.lcm(G[i].lead().m);
      uint32_t sugar = std::max(sugar_of[i] + (l / G[i].lead().m).deg,
                                sugar_of[t] + (l / lt).deg);
      pairs.push({i, t, l, sugar});
    }
  };
  for (uint32_t t = 1; t < G.size(); ++t) push_pairs_for(t);

  size_t processed = 0;
  std::set<std::pair<uint32_t, uint32_t>> done;
  while (!pairs.empty()) {
    if (++processed > limits.max_pairs) return std::nullopt;
    PairEntry pe = pairs.top();
    pairs.pop();
    if (G[pe.i].is_zero() || G[pe.j].is_zero()) continue;
    const Monomial &mi = G[pe.i].lead().m, &mj = G[pe.j].lead().m;
    Monomial l = mi.lcm(mj);
    if (l != pe.lcm) continue;  // stale entry
    // first Buchberger criterion
    if (mi.coprime(mj)) {
      done.insert({pe.i, pe.j});
      continue;
    }
    // chain criterion
    bool skip = false;
    for (uint32_t k = 0; k < G.size() && !skip; ++k) {
      if (k == pe.i || k == pe.j || G[k].is_zero()) continue;
      if (!G[k].lead().m.divides(l)) continue;
      auto key1 = std::minmax(pe.i, k);
      auto key2 = std::minmax(pe.j, k);
      if (done.count({key1.first, key1.second}) && done.count({key2.first, key2.second}))
        skip = true;
    }
    done.insert({pe.i, pe.j});
    if (skip) continue;

    // S-polynomial
    const Poly<C>&fi = G[pe.i], &fj = G[pe.j];
    C ci = fj.lead().c, cj = fi.lead().c;
    Poly<C> s = fi.mul_term(l / fi.lead().m, ci) - fj.mul_term(l / fj.lead().m, cj);
    s = normal_form(std::move(s), G);
    if (stats) stats->pairs_processed = processed;
    if (s.is_zero()) continue;
    s = scale_down(s);
    if (stats) stats->max_degree = std::max(stats->max_degree, s.degree());
    G.push_back(std::move(s));
    sugar_of.push_back(pe.sugar);
    if (G.size() > limits.max_basis) return std::nullopt;
    push_pairs_for(static_cast<uint32_t>(G.size() - 1));
  }

  // interreduce to the unique reduced basis
  // 1) drop elements whose lead is divisible by another lead
  std::vector<Poly<C>> kept;
  for (size_t i = 0; i < G.size(); ++i) {
    if (G[i].is_zero()) continue;
    bool redundant = false;
    for (size_t j = 0; j < G.size() && !redundant; ++j) {
      if (i == j || G[j].is_zero()) continue;
      if (G[j].lead().m.divides(G[i].lead().m)) {
        if (G[j].lead().m == G[i].lead().m && j > i) continue;
        redundant = true;
      }
    }
    if (!redundant) kept.push_back(G[i]);
  }
  // 2) reduce tails
  for (size_t rounds = 0; rounds < kept.size() + 2; ++rounds) {
    bool changed = false;
    for (size_t i = 0; i < kept.size(); ++i) {
      std::vector<Poly<C>> others;
      others.reserve(kept.size() - 1);
      for (size_t j = 0; j < kept.size(); ++j)
        if (j != i) others.push_back(kept[j]);
      Poly<C> r = normal_form(kept[i], others);
      if (r != kept[i]) {
        changed = true;
        kept[i] = r.is_zero() ? r : scale_down(r);
      }
    }
    kept.erase(std::remove_if(kept.begin(), kept.end(),
                              [](const Poly<C>& p) { return p.is_zero(); }),
               kept.end());
    if (!changed) break;
  }
  for (auto& g : kept) g = g * inv_coeff(g.lead().c);
  std::sort(kept.begin(), kept.end(), [](const Poly<C>& a, const Poly<C>& b) {
    return cmp_grevlex(a.lead().m, b.lead().m) < 0;
  });
  if (stats) stats->basis_size = kept.size();
  return kept;
}

template <class C>
std::vector<Monomial> staircase(const std::vector<Poly<C>>& basis, size_t cap) {
  if (basis.empty()) throw InvalidInput("staircase: empty basis");
  int n = basis[0].nvars();
  std::vector<Monomial> leads;
  for (auto& g : basis) leads.push_back(g.lead().m);
  auto under = [&](const Monomial& m) {
    for (auto& l : leads)
      if (l.divides(m)) return false;
    return true;
  };
  std::vector<Monomial> out;
  std::unordered_set<Monomial, MonomialHash> seen;
  Monomial one = Monomial::one(n);
  if (!under(one)) return out;  // basis contains a constant
  std::vector<Monomial> frontier{one};
  seen.insert(one);
  out.push_back(one);
  while (!frontier.empty()) {
    std::vector<Monomial> next;
    for (auto& m : frontier) {
      for (int i = 0; i < n; ++i) {
        Monomial m2 = m;
        m2.e[i] += 1;
        m2.deg += 1;
        if (seen.count(m2) || !under(m2)) continue;
        seen.insert(m2);
        out.push_back(m2);
        next.push_back(m2);
        if (out.size() > cap)
          throw ResourceLimit("staircase: quotient dimension exceeds cap");
      }
    }
    frontier = std::move(next);
  }
  std::sort(out.begin(), out.end(),
            [](const Monomial& a, const Monomial& b) { return cmp_grevlex(a, b) < 0; });
  return out;
}

template <class C>
int dimension_from_leads(const std::vector<Poly<C>>& basis) {
  if (basis.empty()) throw InvalidInput("dimension: empty basis");
  int n = basis[0].nvars();
  for (auto& g : basis)
    if (!g.is_zero() && g.lead().m.is_one()) return -1;
  std::vector<Monomial> leads;
  for (auto& g : basis) leads.push_back(g.lead().m);
  // max |S| such that no lead monomial has support inside S
  int best = 0;
  std::vector<int> members;
  auto independent = [&](const std::vector<int>& s) {
    for (auto& l : leads) {
      bool inside = true;
      for (int i = 0; i < n && inside; ++i)
        if (l.e[i] && std::find(s.begin(), s.end(), i) == s.end()) inside = false;
      if (inside && l.deg > 0) return false;
    }
    return true;
  };
  std::function<void(int)> dfs = [&](int from) {
    best = std::max<int>(best, static_cast<int>(members.size()));
    for (int v = from; v < n; ++v) {
      members.push_back(v);
      if (independent(members)) dfs(v + 1);
      members.pop_back();
    }
  };
  dfs(0);
  return best;
}

// explicit instantiations
template Poly<Zp> normal_form(Poly<Zp>, const std::vector<Poly<Zp>>&);
template Poly<Rational> normal_form(Poly<Rational>, const std::vector<Poly<Rational>>&);
template std::optional<std::vector<Poly<Zp>>> buchberger(std::vector<Poly<Zp>>,
                                                         const ElimLimits&, ElimStats*);
template std::optional<std::vector<Poly<Rational>>> buchberger(std::vector<Poly<Rational>>,
                                                               const ElimLimits&,
                                                               ElimStats*);
template std::vector<Monomial> staircase(const std::vector<Poly<Zp>>&, size_t);
template std::vector<Monomial> staircase(const std::vector<Poly<Rational>>&, size_t);
template int dimension_from_leads(const std::vector<Poly<Zp>>&);
template int dimension_from_leads(const std::vector<Poly<Rational>>&);

}  // namespace polarpath

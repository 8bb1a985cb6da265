#include <map>

#include "polarpath/elim.hpp"

namespace polarpath {
namespace elim {

namespace {

std::string shape_key(const std::vector<ModPoly>& gb) {
  std::string key;
  for (auto& g : gb) {
    key += "|";
    for (auto& t : g.terms()) {
      key += "m";
      for (int i = 0; i < t.m.n; ++i) {
        key += std::to_string(t.m.e[i]);
        key += ",";
      }
    }
  }
  return key;
}

std::vector<uint32_t> coeff_residues(const std::vector<ModPoly>& gb) {
  std::vector<uint32_t> out;
  for (auto& g : gb)
    for (auto& t : g.terms()) out.push_back(t.c.v);
  return out;
}

std::vector<MultiPoly> rebuild(const std::vector<ModPoly>& shape,
                               const std::vector<Rational>& vals, int n) {
  std::vector<MultiPoly> out;
  size_t pos = 0;
  for (auto& g : shape) {
    std::vector<MultiPoly::Term> ts;
    for (auto& t : g.terms()) ts.push_back({t.m, vals[pos++]});
    out.push_back(MultiPoly::from_terms(n, std::move(ts)));
  }
  return out;
}

// exact Buchberger criterion + ideal containment of the inputs
bool verify_basis(const std::vector<MultiPoly>& G, const std::vector<MultiPoly>& gens) {
  for (auto& g : G)
    if (g.is_zero() || g.lead().c != Rational(1)) return false;
  for (size_t i = 0; i < G.size(); ++i)
    for (size_t j = i + 1; j < G.size(); ++j) {
      const Monomial &mi = G[i].lead().m, &mj = G[j].lead().m;
      if (mi.coprime(mj)) continue;
      Monomial l = mi.lcm(mj);
      MultiPoly s = G[i].mul_term(l / mi, Rational(1)) - G[j].mul_term(l / mj, Rational(1));
      if (!normal_form(std::move(s), G).is_zero()) return false;
    }
  for (auto& f : gens)
    if (!normal_form(f, G).is_zero()) return false;
  return true;
}

}  // namespace

GroebnerBasis groebner(const IdealPresentation& I, const GroebnerOptions& opt) {
  if (I.generators.empty()) throw InvalidInput("groebner: empty generator list");
  for (auto& g : I.generators) {
    if (g.is_zero()) throw InvalidInput("groebner: zero generator");
    if (g.nvars() != I.variableCount) throw InvalidInput("groebner: arity mismatch");
  }
  GroebnerBasis out;
  out.variableCount = I.variableCount;

  if (!opt.force_rational) {
    PrimeStream ps(opt.seed);
    struct Bucket {
      std::vector<ModPoly> shape;
      RatRecState state;
      size_t hits = 0;
    };
    std::map<std::string, Bucket> buckets;
    size_t failures = 0;
    for (size_t used = 0; used < opt.limits.max_primes; ++used) {
      uint32_t p = ps.next();
      std::vector<ModPoly> gb;
      ElimStats mod_stats;
      {
        std::vector<ModPoly> mg;
        bool ok = true;
        for (auto& g : I.generators) {
          ModPoly m(I.variableCount);
          if (!reduce_poly_mod(g, p, m) || m.is_zero() || m.lead().m != g.lead().m) {
            ok = false;
            break;
          }
          mg.push_back(std::move(m));
        }
        if (ok) {
          auto r = buchberger(std::move(mg), opt.limits, &mod_stats);
          if (r)
            gb = std::move(*r);
          else
            ok = false;
        }
        if (!ok) {
          if (++failures > 16) break;
          continue;
        }
      }
      out.stats.primes.push_back(p);
      out.stats.pairs_processed = std::max(out.stats.pairs_processed,
                                           mod_stats.pairs_processed);
      out.stats.max_degree = std::max(out.stats.max_degree, mod_stats.max_degree);
      auto& bucket = buckets[shape_key(gb)];
      if (bucket.hits == 0) bucket.shape = gb;
      bucket.hits++;
      bool stable = bucket.state.feed(p, coeff_residues(gb));
      if (!stable) continue;
      // only trust the front-running shape
      size_t best = 0;
      for (auto& kv : buckets) best = std::max(best, kv.second.hits);
      if (bucket.hits < best) continue;
      std::vector<MultiPoly> cand =
          rebuild(bucket.shape, bucket.state.value(), I.variableCount);
      if (verify_basis(cand, I.generators)) {
        out.elements = std::move(cand);
        out.stats.basis_size = out.elements.size();
        return out;
      }
    }
  }

  // exact fallback
  out.stats.rational_fallback = true;
  ElimStats rs;
  auto r = buchberger(std::vector<MultiPoly>(I.generators), opt.limits, &rs);
  out.stats.pairs_processed = rs.pairs_processed;
  out.stats.max_degree = rs.max_degree;
  if (!r)
    throw ResourceLimit("groebner: resource limit exceeded (pairs=" +
                        std::to_string(rs.pairs_processed) +
                        ", maxdeg=" + std::to_string(rs.max_degree) + ")");
  out.elements = std::move(*r);
  for (auto& g : out.elements) g = make_monic(g);
  out.stats.basis_size = out.elements.size();
  return out;
}

int dimension(const GroebnerBasis& G) {
  if (G.elements.empty()) throw InvalidInput("dimension: empty basis");
  return dimension_from_leads(G.elements);
}

MultiPoly nf(const MultiPoly& f, const GroebnerBasis& G) {
  return normal_form(f, G.elements);
}

}  // namespace elim
}  // namespace polarpath

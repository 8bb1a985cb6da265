#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "polarpath/roadmap.hpp"
#include "polarpath/sysfile.hpp"

using namespace polarpath;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int run_roadmap(const std::string& system_path, const std::string& points_path,
                uint64_t seed, int retries, const std::string& check_level,
                const std::string& route, const std::string& out_path, bool verbose) {
  SystemFile sf = parse_system_file(slurp(system_path));
  int n = static_cast<int>(sf.variables.size());
  Slp gamma = slp_from_polys(sf.equations);

  roadmap::RoadmapConfig cfg;
  cfg.seed = seed;
  cfg.retries = retries;
  cfg.check_level_full = check_level == "full";
  cfg.route = route == "minors" ? polar::Route::Minors : polar::Route::Lagrange;

  ZeroDimParam p0 = empty_zero_dim(n);
  std::vector<std::vector<Rational>> tuples;
  if (!points_path.empty()) {
    Rng prng(seed ^ 0x9097);
    QueryPoints qp = parse_points_file(slurp(points_path), n, prng);
    p0 = qp.param;
    tuples = qp.tuples;
  }

  roadmap::RoadmapResult result = roadmap::roadmap_unbounded(gamma, p0, cfg);
  result.queryTuples = tuples;
  if (!tuples.empty()) roadmap::resolve_components(result, cfg);

  std::string payload = roadmap::result_to_json(result);
  if (out_path.empty() || out_path == "-") {
    std::cout << payload << "\n";
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw InvalidInput("cannot write " + out_path);
    out << payload;
  }
  if (verbose) {
    std::cerr << "roadmap: curve degree " << result.curve.degree() << ", "
              << result.componentCount << " component(s)\n";
    for (auto& e : result.degreeLedger)
      std::cerr << "  [degree] " << e.step << ": " << e.degree << " <= "
                << rational_to_string(e.bound) << (e.ok ? "" : "  ** VIOLATED") << "\n";
    for (auto& e : result.checkLedger) {
      const char* st = e.status == polar::CheckStatus::Pass         ? "pass"
                       : e.status == polar::CheckStatus::Fail       ? "FAIL"
                       : e.status == polar::CheckStatus::Structural ? "structural"
                                                                    : "bypassed";
      std::cerr << "  [check] " << e.name << ": " << st << " (" << e.detail << ")\n";
    }
  }
  return 0;
}

int run_query(const std::string& roadmap_path, const std::string& a, const std::string& b) {
  roadmap::RoadmapResult r = roadmap::result_from_json(slurp(roadmap_path));
  bool conn = roadmap::connectivity_query(r, a, b);
  std::cout << (conn ? "connected" : "disconnected") << "\n";
  return 0;
}

int run_selftest();

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"roadmaps of smooth real algebraic sets"};
  app.require_subcommand(1);

  auto* rm = app.add_subcommand("roadmap", "compute a roadmap of V(f)");
  std::string system_path, points_path, out_path = "-";
  uint64_t seed = 1;
  int retries = 5;
  std::string check_level = "fast", route = "lagrange";
  bool verbose = false;
  rm->add_option("--system", system_path, "system file (vars:/eq: grammar)")->required();
  rm->add_option("--points", points_path, "query points file (JSON)");
  rm->add_option("--seed", seed, "random seed");
  rm->add_option("--retries", retries, "genericity retry budget");
  rm->add_option("--check-level", check_level, "fast|full")
      ->check(CLI::IsMember({"fast", "full"}));
  rm->add_option("--route", route, "lagrange|minors")
      ->check(CLI::IsMember({"lagrange", "minors"}));
  rm->add_option("--out", out_path, "output JSON path (- for stdout)");
  rm->add_flag("--verbose", verbose, "stream elimination statistics");

  auto* q = app.add_subcommand("query", "answer a connectivity query");
  std::string roadmap_path, qa, qb;
  q->add_option("--roadmap", roadmap_path, "roadmap JSON")->required();
  q->add_option("--a", qa, "first query point id")->required();
  q->add_option("--b", qb, "second query point id")->required();

  auto* st = app.add_subcommand("selftest", "run the invariant corpus");

  CLI11_PARSE(app, argc, argv);

  try {
    if (rm->parsed())
      return run_roadmap(system_path, points_path, seed, retries, check_level, route,
                         out_path, verbose);
    if (q->parsed()) return run_query(roadmap_path, qa, qb);
    if (st->parsed()) return run_selftest();
  } catch (const InvalidInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const MonteCarloFailure& e) {
    std::cerr << "fail: " << e.what() << "\n";
    return 2;
  } catch (const ResourceLimit& e) {
    std::cerr << "fail: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}

namespace {

int run_selftest() {
  int failures = 0;
  auto report = [&](const std::string& name, bool ok) {
    std::cout << (ok ? "PASS  " : "FAIL  ") << name << "\n";
    if (!ok) ++failures;
  };
  Rng rng(20260809);

  // slp accounting invariants
  {
    bool ok = true;
    for (int n = 1; n <= 64 && ok; ++n) {
      std::vector<Rational> alpha;
      for (int i = 0; i < 2 * n; ++i) alpha.push_back(Rational(rng.integer(-99, 99)));
      ok = phigen(alpha).length() <= static_cast<size_t>(6 * n - 2);
    }
    report("phigen length <= 6n-2 for n in 1..64", ok);
  }
  {
    bool ok = true;
    for (int trial = 0; trial < 100 && ok; ++trial) {
      int n = 2 + (int)(rng.next() % 3);
      std::vector<MultiPoly::Term> ts;
      for (int t = 0; t < 4; ++t) {
        Monomial m = Monomial::one(n);
        for (int i = 0; i < n; ++i) {
          m.e[i] = (uint16_t)(rng.next() % 3);
          m.deg += m.e[i];
        }
        ts.push_back({m, Rational(rng.integer(-9, 9))});
      }
      MultiPoly f = MultiPoly::from_terms(n, std::move(ts));
      if (f.is_zero()) continue;
      Slp g = slp_from_polys({f});
      std::vector<Rational> alpha;
      for (int i = 0; i < 2 * n; ++i) alpha.push_back(Rational(rng.integer(-9, 9)));
      Slp gphi = phigen(alpha);
      int i = 1 + (int)(rng.next() % 2);
      ok = inc_slp(g, gphi, i).length() == g.length() + gphi.length() + (size_t)i;
    }
    report("inc_slp length = E + E' + i on random inputs", ok);
  }
  // parametrization invariants
  {
    bool ok = true;
    for (int trial = 0; trial < 10 && ok; ++trial) {
      std::vector<std::vector<Rational>> pts;
      int k = 1 + (int)(rng.next() % 4);
      for (int i = 0; i < k; ++i)
        pts.push_back({Rational(rng.integer(-9, 9)), Rational(rng.integer(-9, 9))});
      auto p = from_rational_points(2, pts, rng);
      ok = validate(p).ok;
      if (ok) {
        auto u = union_params(p, p, rng);
        ok = u.degree() == p.degree() && points_subset(p, u) && points_subset(u, p);
      }
    }
    report("union idempotence and validation on random point sets", ok);
  }
  // groebner multimodular vs rational on a tiny corpus
  {
    bool ok = true;
    for (int trial = 0; trial < 4 && ok; ++trial) {
      elim::IdealPresentation I;
      I.variableCount = 3;
      for (int g = 0; g < 3; ++g) {
        std::vector<MultiPoly::Term> ts;
        for (int t = 0; t < 3; ++t) {
          Monomial m = Monomial::one(3);
          for (int i = 0; i < 3; ++i) {
            m.e[i] = (uint16_t)(rng.next() % 2);
            m.deg += m.e[i];
          }
          ts.push_back({m, Rational(rng.integer(-9, 9))});
        }
        MultiPoly f = MultiPoly::from_terms(3, std::move(ts));
        I.generators.push_back(f.is_zero() ? MultiPoly::constant(3, Rational(1)) : f);
      }
      elim::GroebnerOptions o1;
      o1.seed = rng.next();
      auto o2 = o1;
      o2.force_rational = true;
      ok = elim::groebner(I, o1).elements == elim::groebner(I, o2).elements;
    }
    report("multi-modular groebner agrees with rational buchberger", ok);
  }
  // real-root machinery
  {
    bool ok = true;
    for (int trial = 0; trial < 20 && ok; ++trial) {
      QUPoly f;
      int dg = 2 + (int)(rng.next() % 6);
      for (int i = 0; i <= dg; ++i) f.c.push_back(Rational(rng.integer(-9, 9)));
      f.norm();
      if (f.deg() < 1) continue;
      f = upoly_squarefree(f);
      ZZPoly z = zz_from_upoly(f);
      if (z.deg() < 1) continue;
      ok = sturm_count_all(sturm_chain(z)) == (int)isolate_roots(z).size();
    }
    report("sturm count equals isolation count", ok);
  }
  std::cout << (failures ? "selftest: FAILURES\n" : "selftest: all passed\n");
  return failures ? 2 : 0;
}

}  // namespace

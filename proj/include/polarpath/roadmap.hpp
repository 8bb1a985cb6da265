#ifndef POLARPATH_ROADMAP_HPP
#define POLARPATH_ROADMAP_HPP

#include <map>

#include "polarpath/polar.hpp"
#include "polarpath/topology.hpp"

namespace polarpath {
namespace roadmap {

struct RoadmapConfig {
  uint64_t seed = 1;
  int retries = 5;  // alpha resampling budget
  ElimLimits limits;
  bool check_level_full = false;
  polar::Route route = polar::Route::Lagrange;
};

// one curve of the roadmap with its defining system (kept for the graph:
// plane nodes resolve into space points through the system)
struct CurvePiece {
  OneDimParam curve;
  std::vector<MultiPoly> system;
  std::string label;
};

struct RoadmapResult {
  int n = 0;
  OneDimParam curve;  // the output parametrization: W2 union R_F
  uint64_t seed = 0;
  std::vector<Rational> alpha;
  polar::DegreeLedger degreeLedger;
  polar::CheckLedger checkLedger;
  std::vector<CurvePiece> pieces;
  std::vector<ZeroDimParam> junctions;  // P_F and recursion junction sets
  ZeroDimParam queries;                 // the query points P0
  std::vector<std::string> queryIds;
  std::vector<std::vector<Rational>> queryTuples;  // when given as tuples
  std::map<std::string, int> queryComponent;
  int componentCount = 0;
};

// the spec's ConnectivityGraph surface
struct ConnectivityGraph {
  struct Vertex {
    std::vector<QI> box;
    std::string tag;
    int component = -1;
  };
  std::vector<Vertex> vertices;
  int componentCount = 0;
};

// Algorithm 1. Query identifiers default to p0, p1, ... in root order of p0.
RoadmapResult roadmap_unbounded(const Slp& gamma, const ZeroDimParam& p0,
                                const RoadmapConfig& cfg);

// bounded-case recursion on the fibers V intersect phi_1^{-1}(Z(Q));
// collects the curve pieces and junction pools it produces
OneDimParam roadmap_bounded(const Slp& gamma, const Slp& gphi, const ZeroDimParam& Q,
                            const ZeroDimParam& S_F, const ZeroDimParam& P_F,
                            const RoadmapConfig& cfg, std::vector<CurvePiece>* pieces,
                            std::vector<ZeroDimParam>* junctions,
                            polar::DegreeLedger* ledger, int depth = 0);

// certified plane-sweep topology of one curve
ConnectivityGraph curve_topology(const OneDimParam& r, const ZeroDimParam& extra,
                                 const topology::TopologyOptions& opt);

bool connectivity_query(const RoadmapResult& result, const std::string& a,
                        const std::string& b);

// exact membership of every point of T on the curve (quotient evaluation)
bool points_on_curve(const ZeroDimParam& t, const OneDimParam& curve);

std::string result_to_json(const RoadmapResult& r);
RoadmapResult result_from_json(const std::string& text);

// graph assembly over pieces and junction pools; fills queryComponent and
// componentCount of the result
void resolve_components(RoadmapResult& r, const RoadmapConfig& cfg);

}  // namespace roadmap
}  // namespace polarpath

#endif

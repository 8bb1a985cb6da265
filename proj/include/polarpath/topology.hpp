#ifndef POLARPATH_TOPOLOGY_HPP
#define POLARPATH_TOPOLOGY_HPP

#include "polarpath/buchberger.hpp"
#include "polarpath/params.hpp"

namespace polarpath {
namespace topology {

// a refinable real algebraic point carried by a zero-dimensional
// parametrization and an isolating interval of its omega-root
struct AlgebraicPoint {
  const ZeroDimParam* param = nullptr;
  ZZPoly zomega;
  RootInterval root;

  std::vector<QI> coords() const;
  QI form_value(const std::vector<Rational>& form) const;
  void refine();
  Rational width() const { return root.width(); }
};

std::vector<AlgebraicPoint> real_points_of(const ZeroDimParam& p);

// identification policy for vertices across pieces: boxes refined to 1e-30,
// overlap means equal, refined further on ambiguity
bool same_point(AlgebraicPoint& a, AlgebraicPoint& b);

struct TopologyOptions {
  uint64_t seed = 1;
  ElimLimits limits;
  // defining generators of the curve in x-space; enables exact resolution of
  // plane nodes into distinct space points
  const std::vector<MultiPoly>* system = nullptr;
  int refine_budget = 96;
};

// certified topology of the real trace of one curve
class PieceTopology {
 public:
  PieceTopology(const OneDimParam& curve, const TopologyOptions& opt);

  int component_count() const { return ncomp_; }

  // component id of a real algebraic point lying on the curve (exact
  // membership is the caller's responsibility); -1 when location fails
  int locate(AlgebraicPoint& pt) const;

  // true when the real trace is empty
  bool empty() const { return ncomp_ == 0; }

 private:
  struct Node {
    int comp = -1;
  };
  struct Vertex {              // space point over a critical plane point
    QI u, v;
    std::vector<QI> x;
    bool have_x = false;
    int node = -1;
  };
  struct Gap {                 // open v-interval between critical values
    Rational sample;
    std::vector<RootInterval> roots;  // branch roots at the sample, ascending
    std::vector<int> seg_node;        // union-find node per branch
  };

  const OneDimParam curve_;
  TopologyOptions opt_;
  QBPoly omega_u_;
  std::vector<RootInterval> crit_v_;  // isolating intervals of critical values
  ZZPoly crit_poly_;                  // squarefree integer poly of critical values
  std::vector<Gap> gaps_;
  std::vector<std::vector<Vertex>> verts_at_;  // per critical value
  std::vector<int> parent_;  // union-find
  int ncomp_ = 0;
  std::vector<int> node_comp_;

  int uf_find(int a) const;
  void uf_union(int a, int b);
  int new_node();

  friend class TopologyBuilder;

 public:
  // internals used by the builder & tests
  const std::vector<Gap>& gaps() const { return gaps_; }
};

// exact resultant res_u(omega, d omega/du) in Q[v] (modular + verified)
QUPoly discriminant_v(const QBPoly& omega, uint64_t seed);

// modular monic gcd over Q with exact division verification
QUPoly q_gcd_modular(const QUPoly& a, const QUPoly& b, uint64_t seed);

// squarefree part over Q via the modular gcd
QUPoly q_squarefree_modular(const QUPoly& f, uint64_t seed);

}  // namespace topology
}  // namespace polarpath

#endif

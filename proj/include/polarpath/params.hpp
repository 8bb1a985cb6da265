#ifndef POLARPATH_PARAMS_HPP
#define POLARPATH_PARAMS_HPP

#include "polarpath/bipoly.hpp"
#include "polarpath/realroot.hpp"
#include "polarpath/slp.hpp"

namespace polarpath {

// Zero-dimensional parametrization (omega, rho_1..rho_n, l):
// omega monic squarefree, deg rho_i < deg omega, l(rho) = u mod omega.
// The empty set is omega = 1.
struct ZeroDimParam {
  int n = 0;
  QUPoly omega;
  std::vector<QUPoly> rho;
  std::vector<Rational> form;

  int degree() const { return omega.deg() <= 0 ? 0 : omega.deg(); }
  bool is_empty() const { return omega.deg() <= 0; }
};

// One-dimensional parametrization with the d(omega)/du denominator
// convention: l(rho) = u * d(omega)/du, l'(rho) = v * d(omega)/du mod omega.
struct OneDimParam {
  int n = 0;
  QBPoly omega;
  std::vector<QBPoly> rho;
  std::vector<Rational> form, form2;

  int degree() const { return omega.deg_u() <= 0 ? 0 : omega.deg_u(); }
  bool is_empty() const { return omega.deg_u() <= 0; }
};

ZeroDimParam empty_zero_dim(int n);
OneDimParam empty_one_dim(int n);

struct ValidationReport {
  bool ok = true;
  std::string reason;
};

ValidationReport validate(const ZeroDimParam& p);
ValidationReport validate(const OneDimParam& p);

// --- construction helpers ---------------------------------------------------

// random integer linear form with entries in [-2^16, 2^16]
std::vector<Rational> random_form(int n, Rng& rng);
// small-height variant used for first attempts (reconstruction cost scales
// with the form bit-length); retries escalate to the full range
std::vector<Rational> random_form_small(int n, Rng& rng);

// parametrization of explicitly given rational points (duplicates collapse)
ZeroDimParam from_rational_points(int n, const std::vector<std::vector<Rational>>& pts,
                                  Rng& rng);

// Re-express the point set {(rho_1..rho_k)(theta) : omega(theta)=0} under a
// new separating form on the first k coordinates. Collapsing images are
// merged (used by projection). Fails over the retry budget.
ZeroDimParam reparametrize(int k, const QUPoly& omega, const std::vector<QUPoly>& rho,
                           Rng& rng, uint64_t seed);

// --- the spec operations ----------------------------------------------------

ZeroDimParam union_params(const ZeroDimParam& a, const ZeroDimParam& b, Rng& rng);
OneDimParam union_params(const OneDimParam& a, const OneDimParam& b, Rng& rng);
ZeroDimParam projection(const ZeroDimParam& p, int k, Rng& rng);
ZeroDimParam inc_param(const ZeroDimParam& p, const Slp& phi, int i);
ZeroDimParam image(const Slp& phi, int j, const ZeroDimParam& p, Rng& rng);
int real_count(const ZeroDimParam& p);

// --- exact checks ------------------------------------------------------------

// g vanishes on every point of the parametrized set (exact)
bool generator_vanishes(const MultiPoly& g, const ZeroDimParam& p);
bool generator_vanishes(const MultiPoly& g, const OneDimParam& p);

// Z(a) subset of Z(b) (exact)
bool points_subset(const ZeroDimParam& a, const ZeroDimParam& b);

// exact containment of curve a in curve U (compose U's data with its forms
// and check vanishing on a); cost grows with the degrees
bool curve_covers(const OneDimParam& U, const OneDimParam& a);

// exact membership of one rational point
bool point_on_param(const std::vector<Rational>& pt, const ZeroDimParam& p);

// value vector of phi_j at every point: the parametrization of phi-values
// (univariate data of the composition phi_j(rho) mod omega)
QUPoly compose_on_param(const MultiPoly& g, const ZeroDimParam& p);

// linear change of coordinates: points y -> M y (M square rational), forms
// re-derived
ZeroDimParam transform_points(const ZeroDimParam& p,
                              const std::vector<std::vector<Rational>>& M, Rng& rng);
OneDimParam transform_points(const OneDimParam& p,
                             const std::vector<std::vector<Rational>>& M, Rng& rng);

// --- real boxes ---------------------------------------------------------------

struct ParamPointBox {
  RootInterval root;          // isolating interval of omega's real root
  std::vector<QI> box;        // coordinate enclosures
};

// boxes of the real points, each coordinate enclosure of width <= eps
std::vector<ParamPointBox> isolate_real_points(const ZeroDimParam& p, const Rational& eps);

// --- JSON ---------------------------------------------------------------------

std::string zero_dim_to_json(const ZeroDimParam& p);
std::string one_dim_to_json(const OneDimParam& p);
ZeroDimParam zero_dim_from_json(const std::string& text);
OneDimParam one_dim_from_json(const std::string& text);

}  // namespace polarpath

#endif

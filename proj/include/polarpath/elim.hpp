#ifndef POLARPATH_ELIM_HPP
#define POLARPATH_ELIM_HPP

#include <unordered_map>

#include "polarpath/buchberger.hpp"
#include "polarpath/params.hpp"

namespace polarpath {
namespace elim {

struct IdealPresentation {
  int variableCount = 0;
  std::vector<MultiPoly> generators;  // nonzero
};

struct GroebnerBasis {
  int variableCount = 0;
  std::vector<MultiPoly> elements;  // reduced, monic, grevlex, sorted by lead
  ElimStats stats;
};

struct GroebnerOptions {
  uint64_t seed = 1;
  ElimLimits limits;
  bool force_rational = false;  // bypass the multi-modular path
};

// Reduced grevlex basis over Q. Multi-modular by default: Buchberger mod
// several 31-bit primes, staircase majority vote, CRT + rational
// reconstruction, then exact verification (every S-polynomial reduces to zero
// and every input generator reduces to zero). Falls back to rational
// Buchberger when verification keeps failing.
GroebnerBasis groebner(const IdealPresentation& I, const GroebnerOptions& opt = {});

// Krull dimension of the zero set; -1 for the empty variety.
int dimension(const GroebnerBasis& G);

MultiPoly nf(const MultiPoly& f, const GroebnerBasis& G);

struct SolveOptions {
  uint64_t seed = 1;
  ElimLimits limits;
  int form_retries = 8;
  // Restrict the output parametrization (coordinates and separating forms) to
  // the first out_vars variables; -1 keeps all. Requires the dropped
  // coordinates to be functions of the kept ones on the solution set
  // (Lagrange multipliers are); falls back to a full solve + projection.
  int out_vars = -1;
  bool verify = true;  // exact post-verification against the generators
};

// Zero-dimensional solve of an arbitrary generator set (RUR-style: Groebner
// mod p, multiplication matrix of a separating form, Krylov coordinates,
// CRT + rational reconstruction, exact verification).
ZeroDimParam solve_system_zero_dim(const std::vector<MultiPoly>& gens, int n,
                                   const SolveOptions& opt, ElimStats* stats = nullptr);

// One-dimensional solve by fiber sampling: plane model under fresh (l, l'),
// zero-dimensional solves on hyperplane slices, v-interpolation per prime.
OneDimParam solve_system_one_dim(const std::vector<MultiPoly>& gens, int n,
                                 const SolveOptions& opt, ElimStats* stats = nullptr);

// dimension by modular consensus (no rational reconstruction)
int dimension_of_system(const std::vector<MultiPoly>& gens, int n, uint64_t seed,
                        const ElimLimits& limits = {});

// spec-level wrappers on a computed basis
ZeroDimParam solve_zero_dim(const GroebnerBasis& G, const SolveOptions& opt);
OneDimParam solve_one_dim(const GroebnerBasis& G, const SolveOptions& opt);

struct DimensionError : MonteCarloFailure {
  explicit DimensionError(const std::string& w) : MonteCarloFailure(w) {}
};

}  // namespace elim

// internal single-prime helpers shared with the curve solver
namespace elim_detail {

struct ModQuotient {
  uint32_t p = 0;
  std::vector<ModPoly> gb;
  std::vector<Monomial> basis;  // staircase, grevlex-ascending
};

// reduced GB mod p; false on limits / reduction failure
bool mod_groebner(const std::vector<MultiPoly>& gens, int n, uint32_t p,
                  const ElimLimits& limits, std::vector<ModPoly>& out);
bool mod_groebner_zp(std::vector<ModPoly> gens, const ElimLimits& limits,
                     std::vector<ModPoly>& out);

bool mod_quotient(const std::vector<MultiPoly>& gens, int n, uint32_t p,
                  const ElimLimits& limits, ModQuotient& out);

struct ModRur {
  ZpUPoly omega;                 // squarefree, monic
  std::vector<ZpUPoly> coords;   // one per requested coordinate
};

// normal-form coordinate algebra of a zero-dimensional quotient
class QuotientAlgebra {
 public:
  explicit QuotientAlgebra(const ModQuotient& q);

  uint32_t prime() const { return q_.p; }
  size_t dim() const { return q_.basis.size(); }
  int nvars() const { return n_; }

  std::vector<uint32_t> vec_of(const ModPoly& f) const;
  ModPoly poly_of(const std::vector<uint32_t>& v) const;
  std::vector<uint32_t> mul(const ModPoly& g, const std::vector<uint32_t>& v) const;
  // multiplicative inverse in the quotient; false when g is a zero divisor
  bool invert(const ModPoly& g, ModPoly& out) const;
  std::vector<uint32_t> one_vec() const;
  const Monomial& basis_monomial(size_t i) const;

 private:
  const ModQuotient& q_;
  int n_;
  std::unordered_map<Monomial, int, MonomialHash> index_;
};

// Parametrization of the solution values of `ell` with coordinate functions
// `coords` (arbitrary quotient elements). Krylov path first; optional
// trace-form fallback for non-cyclic (multiple) quotients. Returns false when
// the data does not separate or the prime misbehaves.
bool rur_elements(const QuotientAlgebra& alg, const ModPoly& ell,
                  const std::vector<ModPoly>& coords, bool allow_trace, ModRur& out);

// convenience wrapper: ell = sum of form[i] * x_i over the first n_form vars,
// coords = first n_out variables
bool mod_rur(const ModQuotient& q, const std::vector<Rational>& form, int n_form,
             int n_out, bool allow_trace, ModRur& out);

}  // namespace elim_detail
}  // namespace polarpath

#endif

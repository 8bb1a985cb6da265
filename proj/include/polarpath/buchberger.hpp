#ifndef POLARPATH_BUCHBERGER_HPP
#define POLARPATH_BUCHBERGER_HPP

#include <optional>
#include <queue>

#include "polarpath/multipoly.hpp"

namespace polarpath {

struct ElimLimits {
  size_t max_basis = 6000;
  size_t max_pairs = 400000;
  size_t max_coeff_bits = 1u << 22;  // rational path only
  size_t max_primes = 512;
  size_t max_quotient = 4000;  // staircase cap for solvers
};

struct ElimStats {
  size_t pairs_processed = 0;
  int max_degree = 0;
  size_t basis_size = 0;
  std::vector<uint32_t> primes;
  bool rational_fallback = false;
};

// full normal form of f modulo basis (each basis element monic-normalized for
// Zp; arbitrary for Rational)
template <class C>
Poly<C> normal_form(Poly<C> f, const std::vector<Poly<C>>& basis);

// reduced Groebner basis, grevlex. Returns std::nullopt when a limit trips.
template <class C>
std::optional<std::vector<Poly<C>>> buchberger(std::vector<Poly<C>> gens,
                                               const ElimLimits& limits,
                                               ElimStats* stats);

// standard monomials under the leading terms of a (reduced) basis.
// Throws ResourceLimit against cap; InvalidInput if the quotient is infinite.
template <class C>
std::vector<Monomial> staircase(const std::vector<Poly<C>>& basis, size_t cap);

// Krull dimension from leading monomials: max independent variable set
// (-1 when 1 is in the basis)
template <class C>
int dimension_from_leads(const std::vector<Poly<C>>& basis);

}  // namespace polarpath

#endif

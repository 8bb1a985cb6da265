#ifndef POLARPATH_MODPARAM_HPP
#define POLARPATH_MODPARAM_HPP

#include "polarpath/unipoly.hpp"
#include "polarpath/zplinalg.hpp"

namespace polarpath {

// zero-dimensional parametrization data mod p: omega monic squarefree,
// coordinate polynomials of degree < deg(omega)
struct ModParam0 {
  uint32_t p = 0;
  ZpUPoly omega;
  std::vector<ZpUPoly> rho;
};

bool reduce_param_mod(const QUPoly& omega, const std::vector<QUPoly>& rho, uint32_t p,
                      ModParam0& out);

// matrix of multiplication by s on the monomial basis of Fp[u]/(omega)
ZpMat mult_matrix(const ZpUPoly& s, const ZpUPoly& omega, uint32_t p);

// columns s^j mod omega, j < count
ZpMat power_matrix(const ZpUPoly& s, const ZpUPoly& omega, int count, uint32_t p);

// re-express the first n_out coordinates under a new form (images collapse);
// false when the form is non-separating for the image or the prime misbehaves
bool reparam_mod(const ModParam0& in, const std::vector<Rational>& form, int n_out,
                 ModParam0& out);

// union of two parametrizations already under a common separating form;
// false when the form fails to separate the union
bool union_mod(const ModParam0& a, const ModParam0& b, ModParam0& out);

}  // namespace polarpath

#endif

#ifndef POLARPATH_ZPLINALG_HPP
#define POLARPATH_ZPLINALG_HPP

#include <cstdint>
#include <vector>

#include "polarpath/modular.hpp"
#include "polarpath/unipoly.hpp"

namespace polarpath {

// dense row-major matrix over Z/p
struct ZpMat {
  size_t rows = 0, cols = 0;
  uint32_t p = 0;
  std::vector<uint32_t> a;

  ZpMat() = default;
  ZpMat(size_t r, size_t c, uint32_t prime) : rows(r), cols(c), p(prime), a(r * c, 0) {}
  uint32_t& at(size_t i, size_t j) { return a[i * cols + j]; }
  uint32_t at(size_t i, size_t j) const { return a[i * cols + j]; }
};

ZpMat zp_mat_mul(const ZpMat& A, const ZpMat& B);
std::vector<uint32_t> zp_mat_vec(const ZpMat& A, const std::vector<uint32_t>& x);

// Solves A x = b (possibly overdetermined). Returns false when inconsistent.
// A is destroyed. Requires the system to have a unique solution on the pivot
// columns (columns beyond rank get zero).
bool zp_solve(ZpMat A, std::vector<std::vector<uint32_t>> rhs,
              std::vector<std::vector<uint32_t>>& out);

// characteristic polynomial of a square matrix via Hessenberg reduction
ZpUPoly zp_charpoly(ZpMat A);

}  // namespace polarpath

#endif

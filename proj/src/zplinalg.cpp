#include "polarpath/zplinalg.hpp"

namespace polarpath {

namespace {
inline uint32_t addm(uint32_t a, uint32_t b, uint32_t p) {
  uint32_t s = a + b;
  return s >= p ? s - p : s;
}
inline uint32_t subm(uint32_t a, uint32_t b, uint32_t p) {
  return a >= b ? a - b : a + p - b;
}
inline uint32_t mulm(uint32_t a, uint32_t b, uint32_t p) {
  return static_cast<uint32_t>((uint64_t)a * b % p);
}
inline uint32_t invm(uint32_t a, uint32_t p) { return Zp::raw(a, p).inv().v; }
}  // namespace

ZpMat zp_mat_mul(const ZpMat& A, const ZpMat& B) {
  ZpMat C(A.rows, B.cols, A.p);
  for (size_t i = 0; i < A.rows; ++i)
    for (size_t k = 0; k < A.cols; ++k) {
      uint32_t v = A.at(i, k);
      if (!v) continue;
      for (size_t j = 0; j < B.cols; ++j)
        C.at(i, j) = addm(C.at(i, j), mulm(v, B.at(k, j), A.p), A.p);
    }
  return C;
}

std::vector<uint32_t> zp_mat_vec(const ZpMat& A, const std::vector<uint32_t>& x) {
  std::vector<uint32_t> y(A.rows, 0);
  for (size_t i = 0; i < A.rows; ++i) {
    uint64_t acc = 0;
    for (size_t j = 0; j < A.cols; ++j) {
      acc += (uint64_t)A.at(i, j) * x[j] % A.p;
      if (acc >= (uint64_t)A.p << 32) acc %= A.p;
    }
    y[i] = static_cast<uint32_t>(acc % A.p);
  }
  return y;
}

bool zp_solve(ZpMat A, std::vector<std::vector<uint32_t>> rhs,
              std::vector<std::vector<uint32_t>>& out) {
  const uint32_t p = A.p;
  size_t m = A.rows, n = A.cols, k = rhs.size();
  std::vector<int> pivot_col_of_row(m, -1);
  size_t row = 0;
  std::vector<int> pivot_row_of_col(n, -1);
  for (size_t col = 0; col < n && row < m; ++col) {
    size_t sel = row;
    while (sel < m && A.at(sel, col) == 0) ++sel;
    if (sel == m) continue;
    for (size_t j = 0; j < n; ++j) std::swap(A.at(sel, j), A.at(row, j));
    for (auto& b : rhs) std::swap(b[sel], b[row]);
    uint32_t inv = invm(A.at(row, col), p);
    for (size_t j = col; j < n; ++j) A.at(row, j) = mulm(A.at(row, j), inv, p);
    for (auto& b : rhs) b[row] = mulm(b[row], inv, p);
    for (size_t i = 0; i < m; ++i) {
      if (i == row) continue;
      uint32_t f = A.at(i, col);
      if (!f) continue;
      for (size_t j = col; j < n; ++j)
        A.at(i, j) = subm(A.at(i, j), mulm(f, A.at(row, j), p), p);
      for (size_t t = 0; t < k; ++t)
        rhs[t][i] = subm(rhs[t][i], mulm(f, rhs[t][row], p), p);
    }
    pivot_col_of_row[row] = static_cast<int>(col);
    pivot_row_of_col[col] = static_cast<int>(row);
    ++row;
  }
  // consistency: zero rows must have zero rhs
  for (size_t i = row; i < m; ++i)
    for (size_t t = 0; t < k; ++t)
      if (rhs[t][i] != 0) return false;
  out.assign(k, std::vector<uint32_t>(n, 0));
  for (size_t col = 0; col < n; ++col) {
    int r = pivot_row_of_col[col];
    if (r < 0) continue;
    for (size_t t = 0; t < k; ++t) out[t][col] = rhs[t][r];
  }
  return true;
}

ZpUPoly zp_charpoly(ZpMat A) {
  // Hessenberg reduction, then the recurrence on principal minors
  const uint32_t p = A.p;
  const size_t n = A.rows;
  if (n == 0) return ZpUPoly::constant(Zp::one(p));
  for (size_t col = 0; col + 2 < n; ++col) {
    size_t piv = col + 1;
    while (piv < n && A.at(piv, col) == 0) ++piv;
    if (piv == n) continue;
    if (piv != col + 1) {
      for (size_t j = 0; j < n; ++j) std::swap(A.at(piv, j), A.at(col + 1, j));
      for (size_t i = 0; i < n; ++i) std::swap(A.at(i, piv), A.at(i, col + 1));
    }
    uint32_t inv = invm(A.at(col + 1, col), p);
    for (size_t i = col + 2; i < n; ++i) {
      uint32_t f = mulm(A.at(i, col), inv, p);
      if (!f) continue;
      for (size_t j = 0; j < n; ++j) A.at(i, j) = subm(A.at(i, j), mulm(f, A.at(col + 1, j), p), p);
      for (size_t j = 0; j < n; ++j) A.at(j, col + 1) = addm(A.at(j, col + 1), mulm(f, A.at(j, i), p), p);
    }
  }
  // p_0 = 1; p_k(x) = (x - a_kk) p_{k-1} - sum_{i<k} a_ik (prod b) p_{i-1}
  std::vector<ZpUPoly> pk(n + 1);
  pk[0] = ZpUPoly::constant(Zp::one(p));
  for (size_t k = 1; k <= n; ++k) {
    ZpUPoly lin;
    lin.c = {-Zp::raw(A.at(k - 1, k - 1), p), Zp::one(p)};
    pk[k] = lin * pk[k - 1];
    uint32_t prod = 1;
    for (size_t i = k - 1; i >= 1; --i) {
      prod = mulm(prod, A.at(i, i - 1), p);
      uint32_t coef = mulm(A.at(i - 1, k - 1), prod, p);
      if (coef) pk[k] = pk[k] - pk[i - 1] * Zp::raw(coef, p);
      if (i == 1) break;
    }
  }
  return pk[n];
}

}  // namespace polarpath

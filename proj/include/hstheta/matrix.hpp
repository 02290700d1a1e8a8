// Copyright 2026 the hstheta authors
#ifndef HSTHETA_MATRIX_HPP
#define HSTHETA_MATRIX_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "hstheta/polynomial.hpp"

namespace hstheta {

// Dense matrix of polynomials, row-major. Rows carry generator degrees and
// columns carry relation degrees when the matrix presents a graded map:
// a nonzero entry (i,j) is then homogeneous of degree colDeg(j) - rowDeg(i).
class PolyMatrix {
 public:
  PolyMatrix() : rows_(0), cols_(0) {}
  PolyMatrix(int rows, int cols)
      : rows_(rows), cols_(cols), entries_(size_t(rows) * size_t(cols)) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  const Polynomial& at(int i, int j) const { return entries_[size_t(i) * cols_ + j]; }
  Polynomial& at(int i, int j) { return entries_[size_t(i) * cols_ + j]; }

  std::vector<Polynomial> column(int j) const {
    std::vector<Polynomial> c(rows_);
    for (int i = 0; i < rows_; ++i) c[i] = at(i, j);
    return c;
  }
  void set_column(int j, const std::vector<Polynomial>& c) {
    for (int i = 0; i < rows_; ++i) at(i, j) = c[i];
  }

  bool is_zero() const {
    for (const Polynomial& p : entries_)
      if (!p.is_zero()) return false;
    return true;
  }

  static PolyMatrix identity(int n, const PolyRing& ring) {
    PolyMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Polynomial::constant(1, ring);
    return m;
  }

  static PolyMatrix from_columns(int rows, const std::vector<std::vector<Polynomial>>& cols) {
    PolyMatrix m(rows, static_cast<int>(cols.size()));
    for (int j = 0; j < m.cols(); ++j)
      for (int i = 0; i < rows; ++i) m.at(i, j) = cols[size_t(j)][size_t(i)];
    return m;
  }

 private:
  int rows_, cols_;
  std::vector<Polynomial> entries_;
};

inline PolyMatrix transpose(const PolyMatrix& a) {
  PolyMatrix r(a.cols(), a.rows());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) r.at(j, i) = a.at(i, j);
  return r;
}

inline PolyMatrix mat_mul(const PolyMatrix& a, const PolyMatrix& b, const PolyRing& ring) {
  if (a.cols() != b.rows()) throw EngineError("matrix shape mismatch in product");
  PolyMatrix r(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < b.cols(); ++j) {
      Polynomial s;
      for (int k = 0; k < a.cols(); ++k)
        s = poly_add(s, poly_mul(a.at(i, k), b.at(k, j), ring), ring);
      r.at(i, j) = s;
    }
  return r;
}

inline PolyMatrix mat_sub(const PolyMatrix& a, const PolyMatrix& b, const PolyRing& ring) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw EngineError("matrix shape mismatch in difference");
  PolyMatrix r(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) r.at(i, j) = poly_sub(a.at(i, j), b.at(i, j), ring);
  return r;
}

inline PolyMatrix mat_scale(const PolyMatrix& a, const Polynomial& c, const PolyRing& ring) {
  PolyMatrix r(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) r.at(i, j) = poly_mul(a.at(i, j), c, ring);
  return r;
}

// kron(A, I_n) with the (row-block, inner) index convention: block (i,j) of
// the result is A(i,j) * I_n. Used to tensor a differential with a module.
inline PolyMatrix kron_with_identity(const PolyMatrix& a, int n, const PolyRing& ring) {
  PolyMatrix r(a.rows() * n, a.cols() * n);
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) {
      if (a.at(i, j).is_zero()) continue;
      for (int t = 0; t < n; ++t) r.at(i * n + t, j * n + t) = a.at(i, j);
    }
  return r;
}

// kron(I_n, B): block-diagonal with n copies of B.
inline PolyMatrix identity_kron(int n, const PolyMatrix& b, const PolyRing& ring) {
  PolyMatrix r(n * b.rows(), n * b.cols());
  for (int t = 0; t < n; ++t)
    for (int i = 0; i < b.rows(); ++i)
      for (int j = 0; j < b.cols(); ++j)
        r.at(t * b.rows() + i, t * b.cols() + j) = b.at(i, j);
  return r;
}

namespace detail {

inline Polynomial det_expand(const PolyMatrix& m, const std::vector<int>& rows,
                             const std::vector<int>& cols, const PolyRing& ring) {
  size_t n = rows.size();
  if (n == 0) return Polynomial::constant(1, ring);
  if (n == 1) return m.at(rows[0], cols[0]);
  // Laplace expansion along the first listed row.
  Polynomial det;
  std::vector<int> sub(cols.begin() + 1, cols.end());
  std::vector<int> subrows(rows.begin() + 1, rows.end());
  for (size_t j = 0; j < n; ++j) {
    std::vector<int> cs;
    cs.reserve(n - 1);
    for (size_t t = 0; t < n; ++t)
      if (t != j) cs.push_back(cols[t]);
    const Polynomial& e = m.at(rows[0], cols[j]);
    if (e.is_zero()) continue;
    Polynomial minor = det_expand(m, subrows, cs, ring);
    Polynomial contrib = poly_mul(e, minor, ring);
    if (j % 2 == 1) contrib = poly_neg(contrib, ring);
    det = poly_add(det, contrib, ring);
  }
  return det;
}

inline void index_subsets(int n, int k, std::vector<std::vector<int>>& out) {
  std::vector<int> cur(k);
  // lexicographic enumeration of k-subsets of {0..n-1}
  auto rec = [&](auto&& self, int start, int depth) -> void {
    if (depth == k) {
      out.push_back(cur);
      return;
    }
    for (int i = start; i <= n - (k - depth); ++i) {
      cur[depth] = i;
      self(self, i + 1, depth + 1);
    }
  };
  rec(rec, 0, 0);
}

}  // namespace detail

inline Polynomial determinant(const PolyMatrix& m, const PolyRing& ring) {
  if (m.rows() != m.cols()) throw EngineError("determinant of non-square matrix");
  std::vector<int> idx(m.rows());
  for (int i = 0; i < m.rows(); ++i) idx[i] = i;
  return detail::det_expand(m, idx, idx, ring);
}

// All t x t minors in lexicographic order of (row subset, column subset).
inline std::vector<Polynomial> minors(const PolyMatrix& m, int t, const PolyRing& ring) {
  if (t < 1 || t > std::min(m.rows(), m.cols()))
    throw ParseError("minor size out of range: " + std::to_string(t));
  std::vector<std::vector<int>> rsets, csets;
  detail::index_subsets(m.rows(), t, rsets);
  detail::index_subsets(m.cols(), t, csets);
  std::vector<Polynomial> out;
  out.reserve(rsets.size() * csets.size());
  for (const auto& rs : rsets)
    for (const auto& cs : csets) out.push_back(detail::det_expand(m, rs, cs, ring));
  return out;
}

}  // namespace hstheta

#endif

#pragma once
// Dense exact linear algebra over a field type F.  F needs +,-,*, is_zero-style
// predicate and inversion; traits below adapt mpq_class and Cyclo.

#include <optional>
#include <vector>

#include <gmpxx.h>

#include "qmt/cyclo.hpp"

namespace qmt {

template <class F>
struct FieldTraits;

template <>
struct FieldTraits<mpq_class> {
  static mpq_class zero() { return mpq_class(0); }
  static mpq_class one() { return mpq_class(1); }
  static bool is_zero(const mpq_class& x) { return x == 0; }
  static mpq_class inv(const mpq_class& x) { return mpq_class(1) / x; }
};

template <>
struct FieldTraits<Cyclo> {
  static Cyclo zero() { return Cyclo::zero(); }
  static Cyclo one() { return Cyclo::one(); }
  static bool is_zero(const Cyclo& x) { return x.is_zero(); }
  static Cyclo inv(const Cyclo& x) { return x.inv(); }
};

template <class F>
struct Mat {
  int rows = 0, cols = 0;
  std::vector<F> a;

  Mat() = default;
  Mat(int r, int c) : rows(r), cols(c), a(size_t(r) * c, FieldTraits<F>::zero()) {}
  F& at(int i, int j) { return a[size_t(i) * cols + j]; }
  const F& at(int i, int j) const { return a[size_t(i) * cols + j]; }

  static Mat identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = FieldTraits<F>::one();
    return m;
  }
};

template <class F>
Mat<F> mat_mul(const Mat<F>& x, const Mat<F>& y) {
  Mat<F> r(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      if (FieldTraits<F>::is_zero(x.at(i, k))) continue;
      for (int j = 0; j < y.cols; ++j) {
        if (FieldTraits<F>::is_zero(y.at(k, j))) continue;
        r.at(i, j) += x.at(i, k) * y.at(k, j);
      }
    }
  return r;
}

// In-place reduced row echelon form; returns rank, records pivot columns.
template <class F>
int rref(Mat<F>& m, std::vector<int>* pivot_cols = nullptr) {
  using T = FieldTraits<F>;
  int rank = 0;
  if (pivot_cols) pivot_cols->clear();
  for (int col = 0; col < m.cols && rank < m.rows; ++col) {
    int piv = -1;
    for (int i = rank; i < m.rows; ++i)
      if (!T::is_zero(m.at(i, col))) { piv = i; break; }
    if (piv < 0) continue;
    if (piv != rank)
      for (int j = 0; j < m.cols; ++j) std::swap(m.at(piv, j), m.at(rank, j));
    F scale = T::inv(m.at(rank, col));
    for (int j = col; j < m.cols; ++j) m.at(rank, j) = m.at(rank, j) * scale;
    for (int i = 0; i < m.rows; ++i) {
      if (i == rank || T::is_zero(m.at(i, col))) continue;
      F f = m.at(i, col);
      for (int j = col; j < m.cols; ++j) m.at(i, j) = m.at(i, j) - f * m.at(rank, j);
    }
    if (pivot_cols) pivot_cols->push_back(col);
    ++rank;
  }
  return rank;
}

template <class F>
int rank_of(Mat<F> m) { return rref(m); }

// Basis of the right null space, deterministic (free columns in increasing order).
template <class F>
std::vector<std::vector<F>> nullspace(Mat<F> m) {
  using T = FieldTraits<F>;
  std::vector<int> piv;
  int rank = rref(m, &piv);
  std::vector<bool> is_piv(m.cols, false);
  for (int c : piv) is_piv[c] = true;
  std::vector<std::vector<F>> basis;
  for (int free = 0; free < m.cols; ++free) {
    if (is_piv[free]) continue;
    std::vector<F> v(m.cols, T::zero());
    v[free] = T::one();
    for (int r = 0; r < rank; ++r) {
      // row r: x_{piv[r]} + sum over free cols = 0
      v[piv[r]] = -m.at(r, free);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

// Solves A x = b; returns one solution (free variables zero) or nullopt.
template <class F>
std::optional<std::vector<F>> solve(const Mat<F>& A, const std::vector<F>& b) {
  using T = FieldTraits<F>;
  Mat<F> aug(A.rows, A.cols + 1);
  for (int i = 0; i < A.rows; ++i) {
    for (int j = 0; j < A.cols; ++j) aug.at(i, j) = A.at(i, j);
    aug.at(i, A.cols) = b[i];
  }
  std::vector<int> piv;
  int rank = rref(aug, &piv);
  for (int r = 0; r < rank; ++r)
    if (piv[r] == A.cols) return std::nullopt;  // pivot in augmented column
  std::vector<F> x(A.cols, T::zero());
  for (int r = 0; r < rank; ++r) x[piv[r]] = aug.at(r, A.cols);
  return x;
}

template <class F>
std::optional<Mat<F>> inverse(const Mat<F>& A) {
  using T = FieldTraits<F>;
  if (A.rows != A.cols) return std::nullopt;
  int n = A.rows;
  Mat<F> aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug.at(i, j) = A.at(i, j);
    aug.at(i, n + i) = T::one();
  }
  std::vector<int> piv;
  int rank = rref(aug, &piv);
  if (rank != n) return std::nullopt;
  for (int r = 0; r < n; ++r)
    if (piv[r] != r) return std::nullopt;
  Mat<F> inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
  return inv;
}

// Span basis: rows of the RREF of the row-stacked vectors (canonical form).
template <class F>
std::vector<std::vector<F>> span_basis(const std::vector<std::vector<F>>& vecs, int dim) {
  Mat<F> m(int(vecs.size()), dim);
  for (size_t i = 0; i < vecs.size(); ++i)
    for (int j = 0; j < dim; ++j) m.at(int(i), j) = vecs[i][j];
  int rank = rref(m);
  std::vector<std::vector<F>> out;
  for (int r = 0; r < rank; ++r) {
    std::vector<F> v(dim);
    for (int j = 0; j < dim; ++j) v[j] = m.at(r, j);
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace qmt

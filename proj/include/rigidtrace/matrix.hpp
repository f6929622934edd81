#pragma once

#include <cassert>
#include <optional>
#include <vector>

#include "rigidtrace/field.hpp"

namespace rigidtrace {

// Dense matrix over an exact field. Row-major; zero-dimensional shapes are
// legal and arise as hom-sets in and out of the 0-dimensional object.
template <typename K>
struct Matrix {
  int rows = 0;
  int cols = 0;
  std::vector<K> a;

  Matrix() = default;
  Matrix(int r, int c, const K& fill) : rows(r), cols(c), a(static_cast<size_t>(r) * c, fill) {}

  K& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  const K& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

  friend bool operator==(const Matrix& x, const Matrix& y) {
    return x.rows == y.rows && x.cols == y.cols && x.a == y.a;
  }
  friend bool operator!=(const Matrix& x, const Matrix& y) { return !(x == y); }
};

template <typename K>
Matrix<K> mat_zero(int r, int c, const K& exemplar) {
  return Matrix<K>(r, c, kzero(exemplar));
}

template <typename K>
Matrix<K> mat_identity(int n, const K& exemplar) {
  Matrix<K> m(n, n, kzero(exemplar));
  for (int i = 0; i < n; ++i) m.at(i, i) = kone(exemplar);
  return m;
}

template <typename K>
Matrix<K> operator+(const Matrix<K>& x, const Matrix<K>& y) {
  assert(x.rows == y.rows && x.cols == y.cols);
  Matrix<K> r = x;
  for (size_t i = 0; i < r.a.size(); ++i) r.a[i] = r.a[i] + y.a[i];
  return r;
}

template <typename K>
Matrix<K> operator-(const Matrix<K>& x, const Matrix<K>& y) {
  assert(x.rows == y.rows && x.cols == y.cols);
  Matrix<K> r = x;
  for (size_t i = 0; i < r.a.size(); ++i) r.a[i] = r.a[i] - y.a[i];
  return r;
}

template <typename K>
Matrix<K> operator-(const Matrix<K>& x) {
  Matrix<K> r = x;
  for (auto& v : r.a) v = -v;
  return r;
}

template <typename K>
Matrix<K> operator*(const Matrix<K>& x, const Matrix<K>& y) {
  assert(x.cols == y.rows);
  K ex = x.a.empty() ? (y.a.empty() ? K{} : y.a[0]) : x.a[0];
  Matrix<K> r = mat_zero(x.rows, y.cols, ex);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      if (kis_zero(x.at(i, k))) continue;
      for (int j = 0; j < y.cols; ++j) r.at(i, j) = r.at(i, j) + x.at(i, k) * y.at(k, j);
    }
  return r;
}

template <typename K>
Matrix<K> scale(const K& c, const Matrix<K>& x) {
  Matrix<K> r = x;
  for (auto& v : r.a) v = c * v;
  return r;
}

template <typename K>
Matrix<K> transpose(const Matrix<K>& x) {
  K ex = x.a.empty() ? K{} : x.a[0];
  Matrix<K> r(x.cols, x.rows, ex);
  for (int i = 0; i < x.rows; ++i)
    for (int j = 0; j < x.cols; ++j) r.at(j, i) = x.at(i, j);
  return r;
}

// Kronecker product, left factor major: (x ⊗ y)[(i1,i2),(j1,j2)] = x[i1,j1]·y[i2,j2].
template <typename K>
Matrix<K> kron(const Matrix<K>& x, const Matrix<K>& y) {
  K ex = x.a.empty() ? (y.a.empty() ? K{} : y.a[0]) : x.a[0];
  Matrix<K> r(x.rows * y.rows, x.cols * y.cols, kzero(ex));
  for (int i1 = 0; i1 < x.rows; ++i1)
    for (int j1 = 0; j1 < x.cols; ++j1) {
      if (kis_zero(x.at(i1, j1))) continue;
      for (int i2 = 0; i2 < y.rows; ++i2)
        for (int j2 = 0; j2 < y.cols; ++j2)
          r.at(i1 * y.rows + i2, j1 * y.cols + j2) = x.at(i1, j1) * y.at(i2, j2);
    }
  return r;
}

template <typename K>
std::vector<K> mat_vec(const Matrix<K>& m, const std::vector<K>& v, const K& exemplar) {
  assert(static_cast<int>(v.size()) == m.cols);
  std::vector<K> r(m.rows, kzero(exemplar));
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) {
      if (kis_zero(m.at(i, j))) continue;
      r[i] = r[i] + m.at(i, j) * v[j];
    }
  return r;
}

template <typename K>
K mat_trace(const Matrix<K>& x, const K& exemplar) {
  K t = kzero(exemplar);
  for (int i = 0; i < x.rows && i < x.cols; ++i) t = t + x.at(i, i);
  return t;
}

// Row-reduce in place to reduced row echelon form. Deterministic: pivots are
// the first nonzero entry scanning rows top-down in each column left-to-right.
template <typename K>
std::vector<int> rref_inplace(Matrix<K>& m) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols && row < m.rows; ++col) {
    int pr = -1;
    for (int i = row; i < m.rows; ++i)
      if (!kis_zero(m.at(i, col))) {
        pr = i;
        break;
      }
    if (pr < 0) continue;
    if (pr != row)
      for (int j = 0; j < m.cols; ++j) std::swap(m.at(pr, j), m.at(row, j));
    K inv = kone(m.at(row, col)) / m.at(row, col);
    for (int j = col; j < m.cols; ++j) m.at(row, j) = inv * m.at(row, j);
    for (int i = 0; i < m.rows; ++i) {
      if (i == row || kis_zero(m.at(i, col))) continue;
      K f = m.at(i, col);
      for (int j = col; j < m.cols; ++j) m.at(i, j) = m.at(i, j) - f * m.at(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

template <typename K>
int rank(Matrix<K> m) {
  return static_cast<int>(rref_inplace(m).size());
}

// Solve A x = b exactly. Returns the canonical echelon solution (free
// variables zero), or nullopt if inconsistent.
template <typename K>
std::optional<std::vector<K>> solve(const Matrix<K>& A, const std::vector<K>& b, const K& exemplar) {
  assert(static_cast<int>(b.size()) == A.rows);
  Matrix<K> aug(A.rows, A.cols + 1, kzero(exemplar));
  for (int i = 0; i < A.rows; ++i) {
    for (int j = 0; j < A.cols; ++j) aug.at(i, j) = A.at(i, j);
    aug.at(i, A.cols) = b[i];
  }
  std::vector<int> piv = rref_inplace(aug);
  for (int c : piv)
    if (c == A.cols) return std::nullopt;
  std::vector<K> x(A.cols, kzero(exemplar));
  for (size_t r = 0; r < piv.size(); ++r) x[piv[r]] = aug.at(static_cast<int>(r), A.cols);
  return x;
}

// Basis of ker A, one vector per free column, in column order.
template <typename K>
std::vector<std::vector<K>> nullspace(Matrix<K> A, const K& exemplar) {
  std::vector<int> piv = rref_inplace(A);
  std::vector<bool> is_piv(A.cols, false);
  for (int c : piv) is_piv[c] = true;
  std::vector<std::vector<K>> basis;
  for (int c = 0; c < A.cols; ++c) {
    if (is_piv[c]) continue;
    std::vector<K> v(A.cols, kzero(exemplar));
    v[c] = kone(exemplar);
    for (size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -A.at(static_cast<int>(r), c);
    basis.push_back(std::move(v));
  }
  return basis;
}

template <typename K>
std::optional<Matrix<K>> inverse(const Matrix<K>& m, const K& exemplar) {
  if (m.rows != m.cols) return std::nullopt;
  int n = m.rows;
  Matrix<K> aug(n, 2 * n, kzero(exemplar));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, n + i) = kone(exemplar);
  }
  std::vector<int> piv = rref_inplace(aug);
  if (static_cast<int>(piv.size()) < n || (n > 0 && piv[n - 1] != n - 1)) return std::nullopt;
  Matrix<K> inv(n, n, kzero(exemplar));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
  return inv;
}

template <typename K>
bool is_invertible(const Matrix<K>& m, const K& exemplar) {
  return inverse(m, exemplar).has_value();
}

}  // namespace rigidtrace

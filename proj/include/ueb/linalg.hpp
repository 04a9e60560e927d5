// Copyright 2026 The ueb Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Dense complex matrices for small dimensions (d <= ~12, tensor powers up to
// d^5). Row-major storage, value semantics, tolerance-aware predicates.

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ueb/errors.hpp"

namespace ueb {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;

/// Absolute entrywise tolerance used by every approximate predicate.
struct Tolerance {
  double eps = 1e-9;

  constexpr Tolerance() = default;
  constexpr explicit Tolerance(double e) : eps(e) {
    if (!(e >= 0.0)) {
      throw ValidationError("tolerance must be nonnegative");
    }
  }
};

inline bool is_finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

class Matrix {
 public:
  Matrix() = default;

  /// Zero matrix.
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {
    if (rows == 0 || cols == 0) {
      throw ShapeError("matrix dimensions must be positive");
    }
  }

  Matrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
      : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (rows == 0 || cols == 0) {
      throw ShapeError("matrix dimensions must be positive");
    }
    if (data_.size() != rows * cols) {
      throw ShapeError("entry count " + std::to_string(data_.size()) + " does not match " +
                       std::to_string(rows) + "x" + std::to_string(cols));
    }
    for (const auto &z : data_) {
      if (!is_finite(z)) {
        throw ValidationError("matrix entries must be finite");
      }
    }
  }

  static Matrix from_rows(std::initializer_list<std::initializer_list<Complex>> rows) {
    std::vector<Complex> entries;
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.begin()->size();
    for (const auto &row : rows) {
      if (row.size() != c) {
        throw ShapeError("ragged row list");
      }
      entries.insert(entries.end(), row.begin(), row.end());
    }
    return Matrix(r, c, std::move(entries));
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      m(i, i) = 1.0;
    }
    return m;
  }

  static Matrix diagonal(std::span<const Complex> diag) {
    Matrix m(diag.size(), diag.size());
    for (std::size_t i = 0; i < diag.size(); ++i) {
      m(i, i) = diag[i];
    }
    return m;
  }

  /// Column vector e_index of the given dimension.
  static Matrix basis_vector(std::size_t dim, std::size_t index) {
    if (index >= dim) {
      throw ShapeError("basis index out of range");
    }
    Matrix v(dim, 1);
    v(index, 0) = 1.0;
    return v;
  }

  static Matrix column_vector(std::vector<Complex> entries) {
    const std::size_t n = entries.size();
    return Matrix(n, 1, std::move(entries));
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t size() const { return data_.size(); }
  bool is_square() const { return rows_ == cols_; }

  Complex operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Complex &operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

  std::span<const Complex> entries() const { return data_; }

  friend bool operator==(const Matrix &a, const Matrix &b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> data_;
};

namespace detail {

inline void require_same_shape(const Matrix &a, const Matrix &b, const char *what) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw ShapeError(std::string(what) + ": shape mismatch " + std::to_string(a.rows()) + "x" +
                     std::to_string(a.cols()) + " vs " + std::to_string(b.rows()) + "x" +
                     std::to_string(b.cols()));
  }
}

inline void require_square(const Matrix &a, const char *what) {
  if (!a.is_square()) {
    throw ShapeError(std::string(what) + ": matrix must be square");
  }
}

}  // namespace detail

inline Matrix matmul(const Matrix &a, const Matrix &b) {
  if (a.cols() != b.rows()) {
    throw ShapeError("matmul: " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                     " times " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  }
  Matrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex{}) {
        continue;
      }
      for (std::size_t j = 0; j < b.cols(); ++j) {
        out(i, j) += aik * b(k, j);
      }
    }
  }
  return out;
}

inline Matrix operator*(const Matrix &a, const Matrix &b) { return matmul(a, b); }

inline Matrix operator*(Complex s, const Matrix &a) {
  Matrix out = a;
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) {
      out(r, c) *= s;
    }
  }
  return out;
}

inline Matrix operator+(const Matrix &a, const Matrix &b) {
  detail::require_same_shape(a, b, "add");
  Matrix out = a;
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) {
      out(r, c) += b(r, c);
    }
  }
  return out;
}

inline Matrix operator-(const Matrix &a, const Matrix &b) { return a + Complex(-1.0) * b; }

/// Conjugate transpose.
inline Matrix dagger(const Matrix &a) {
  Matrix out(a.cols(), a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) {
      out(c, r) = std::conj(a(r, c));
    }
  }
  return out;
}

inline Matrix transpose(const Matrix &a) {
  Matrix out(a.cols(), a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) {
      out(c, r) = a(r, c);
    }
  }
  return out;
}

inline Matrix conjugate(const Matrix &a) { return transpose(dagger(a)); }

inline Complex trace(const Matrix &a) {
  detail::require_square(a, "trace");
  Complex t{};
  for (std::size_t i = 0; i < a.rows(); ++i) {
    t += a(i, i);
  }
  return t;
}

/// Hilbert-Schmidt inner product tr(a† b), computed without forming a† b.
inline Complex hs_inner(const Matrix &a, const Matrix &b) {
  detail::require_square(a, "hs_inner");
  detail::require_same_shape(a, b, "hs_inner");
  Complex t{};
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) {
      t += std::conj(a(r, c)) * b(r, c);
    }
  }
  return t;
}

/// Kronecker product; factor a is the more significant index.
inline Matrix kron(const Matrix &a, const Matrix &b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t ar = 0; ar < a.rows(); ++ar) {
    for (std::size_t ac = 0; ac < a.cols(); ++ac) {
      const Complex s = a(ar, ac);
      if (s == Complex{}) {
        continue;
      }
      for (std::size_t br = 0; br < b.rows(); ++br) {
        for (std::size_t bc = 0; bc < b.cols(); ++bc) {
          out(ar * b.rows() + br, ac * b.cols() + bc) = s * b(br, bc);
        }
      }
    }
  }
  return out;
}

inline Matrix kron(std::initializer_list<Matrix> factors) {
  if (factors.size() == 0) {
    throw ShapeError("kron of an empty factor list");
  }
  auto it = factors.begin();
  Matrix out = *it;
  for (++it; it != factors.end(); ++it) {
    out = kron(out, *it);
  }
  return out;
}

/// Largest entry modulus.
inline double max_abs(const Matrix &a) {
  double m = 0.0;
  for (const auto &z : a.entries()) {
    m = std::max(m, std::abs(z));
  }
  return m;
}

inline double max_abs_diff(const Matrix &a, const Matrix &b) {
  detail::require_same_shape(a, b, "max_abs_diff");
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    m = std::max(m, std::abs(a.entries()[i] - b.entries()[i]));
  }
  return m;
}

inline bool approx_equal(const Matrix &a, const Matrix &b, Tolerance tol = {}) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    return false;
  }
  return max_abs_diff(a, b) <= tol.eps;
}

/// Max entry deviation of a†a and aa† from the identity.
inline double unitarity_defect(const Matrix &a) {
  detail::require_square(a, "unitarity_defect");
  const Matrix id = Matrix::identity(a.rows());
  return std::max(max_abs_diff(dagger(a) * a, id), max_abs_diff(a * dagger(a), id));
}

inline bool is_unitary(const Matrix &a, Tolerance tol = {}) {
  detail::require_square(a, "is_unitary");
  return unitarity_defect(a) <= tol.eps;
}

/// Largest off-diagonal entry modulus of a square matrix.
inline double off_diagonal_mass(const Matrix &a) {
  detail::require_square(a, "off_diagonal_mass");
  double m = 0.0;
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) {
      if (r != c) {
        m = std::max(m, std::abs(a(r, c)));
      }
    }
  }
  return m;
}

inline bool is_diagonal(const Matrix &a, Tolerance tol = {}) { return off_diagonal_mass(a) <= tol.eps; }

/// Permutation sending |i> (x) |j> to |j> (x) |i> on C^d (x) C^d.
inline Matrix swap_matrix(std::size_t d) {
  Matrix s(d * d, d * d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      s(j * d + i, i * d + j) = 1.0;
    }
  }
  return s;
}

inline Matrix column(const Matrix &a, std::size_t c) {
  if (c >= a.cols()) {
    throw ShapeError("column index out of range");
  }
  Matrix v(a.rows(), 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    v(r, 0) = a(r, c);
  }
  return v;
}

inline std::vector<Matrix> columns(const Matrix &a) {
  std::vector<Matrix> out;
  out.reserve(a.cols());
  for (std::size_t c = 0; c < a.cols(); ++c) {
    out.push_back(column(a, c));
  }
  return out;
}

/// Row r of a, returned as a column vector (no conjugation).
inline Matrix row_as_column(const Matrix &a, std::size_t r) {
  if (r >= a.rows()) {
    throw ShapeError("row index out of range");
  }
  Matrix v(a.cols(), 1);
  for (std::size_t c = 0; c < a.cols(); ++c) {
    v(c, 0) = a(r, c);
  }
  return v;
}

inline Matrix from_columns(const std::vector<Matrix> &cols) {
  if (cols.empty()) {
    throw ShapeError("from_columns: no columns");
  }
  const std::size_t n = cols.front().rows();
  Matrix out(n, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].rows() != n || cols[c].cols() != 1) {
      throw ShapeError("from_columns: columns must be vectors of equal length");
    }
    for (std::size_t r = 0; r < n; ++r) {
      out(r, c) = cols[c](r, 0);
    }
  }
  return out;
}

/// Diagonal matrix carrying row r of a.
inline Matrix diag_of_row(const Matrix &a, std::size_t r) {
  const Matrix v = row_as_column(a, r);
  return Matrix::diagonal(v.entries());
}

/// <u|v> for column vectors.
inline Complex inner(const Matrix &u, const Matrix &v) {
  if (u.cols() != 1 || v.cols() != 1 || u.rows() != v.rows()) {
    throw ShapeError("inner: operands must be column vectors of equal length");
  }
  Complex t{};
  for (std::size_t i = 0; i < u.rows(); ++i) {
    t += std::conj(u(i, 0)) * v(i, 0);
  }
  return t;
}

inline double frobenius_norm(const Matrix &a) {
  double s = 0.0;
  for (const auto &z : a.entries()) {
    s += std::norm(z);
  }
  return std::sqrt(s);
}

/// True when the vectors are pairwise orthogonal with unit norm.
inline bool is_orthonormal(const std::vector<Matrix> &vectors, Tolerance tol = {}) {
  for (std::size_t a = 0; a < vectors.size(); ++a) {
    for (std::size_t b = a; b < vectors.size(); ++b) {
      const Complex expected = a == b ? 1.0 : 0.0;
      if (std::abs(inner(vectors[a], vectors[b]) - expected) > tol.eps) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace ueb

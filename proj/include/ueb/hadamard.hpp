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

#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "ueb/errors.hpp"
#include "ueb/linalg.hpp"
#include "ueb/quasigroup.hpp"

namespace ueb {

/// Unimodular entries and m m† = d I.
inline bool is_hadamard(const Matrix &m, Tolerance tol = {}) {
  detail::require_square(m, "is_hadamard");
  for (const auto &z : m.entries()) {
    if (std::abs(std::abs(z) - 1.0) > tol.eps) {
      return false;
    }
  }
  const double d = static_cast<double>(m.rows());
  return max_abs_diff(m * dagger(m), Complex(d) * Matrix::identity(m.rows())) <= d * tol.eps;
}

class HadamardMatrix {
 public:
  static HadamardMatrix from(Matrix m, Tolerance tol = {}) {
    if (!m.is_square() || !is_hadamard(m, tol)) {
      throw ValidationError("matrix is not a complex Hadamard matrix");
    }
    return HadamardMatrix(std::move(m));
  }

  std::size_t order() const { return m_.rows(); }
  const Matrix &matrix() const { return m_; }
  Complex operator()(std::size_t r, std::size_t c) const { return m_(r, c); }

 private:
  explicit HadamardMatrix(Matrix m) : m_(std::move(m)) {}

  Matrix m_;
};

/// d Hadamard matrices of order d, indexed by the shift index j.
class HadamardFamily {
 public:
  explicit HadamardFamily(std::vector<HadamardMatrix> members) : members_(std::move(members)) {
    if (members_.empty()) {
      throw ValidationError("Hadamard family must be nonempty");
    }
    const std::size_t d = members_.front().order();
    if (members_.size() != d) {
      throw ValidationError("Hadamard family of order " + std::to_string(d) + " needs " +
                            std::to_string(d) + " members, got " +
                            std::to_string(members_.size()));
    }
    for (const auto &h : members_) {
      if (h.order() != d) {
        throw ValidationError("Hadamard family members must share one order");
      }
    }
  }

  /// The degenerate family H^j = h for every j.
  static HadamardFamily uniform(const HadamardMatrix &h) {
    return HadamardFamily(std::vector<HadamardMatrix>(h.order(), h));
  }

  std::size_t order() const { return members_.size(); }
  const HadamardMatrix &member(std::size_t j) const {
    if (j >= members_.size()) {
      throw ValidationError("Hadamard family index " + std::to_string(j) + " out of range");
    }
    return members_[j];
  }
  const std::vector<HadamardMatrix> &members() const { return members_; }

 private:
  std::vector<HadamardMatrix> members_;
};

/// Character table of the group, F[x][y] = prod_i exp(+2 pi i x_i y_i / n_i).
inline HadamardMatrix fourier_matrix(const GroupSpec &g) {
  g.validate();
  const std::size_t d = g.order();
  Matrix f(d, d);
  for (std::size_t x = 0; x < d; ++x) {
    const auto xs = g.decode(x);
    for (std::size_t y = 0; y < d; ++y) {
      const auto ys = g.decode(y);
      double phase = 0.0;
      for (std::size_t i = 0; i < g.factors.size(); ++i) {
        // Reduce the product first so the angle stays small and exact for 0.
        const std::size_t k = (xs[i] * ys[i]) % g.factors[i];
        phase += 2.0 * kPi * static_cast<double>(k) / static_cast<double>(g.factors[i]);
      }
      f(x, y) = std::polar(1.0, phase);
    }
  }
  return HadamardMatrix::from(std::move(f));
}

/// p = (1 - sqrt3)/2 + i sqrt(sqrt3/2); |p| = 1.
inline Complex c6_parameter() {
  const double s3 = std::sqrt(3.0);
  return {(1.0 - s3) / 2.0, std::sqrt(s3 / 2.0)};
}

/// The dephased order-6 matrix C6^(0). Entry (3,1) is -conj(p)^2; with +conj(p)^2
/// the matrix is not Hadamard.
inline HadamardMatrix butson_c6() {
  const Complex p = c6_parameter();
  const Complex q = std::conj(p);
  const Complex p2 = p * p, p3 = p2 * p, q2 = q * q, q3 = q2 * q;
  Matrix m = Matrix::from_rows({
      {1.0, 1.0, 1.0, 1.0, 1.0, 1.0},
      {1.0, -1.0, -p, -p2, p2, p},
      {1.0, -q, 1.0, p2, -p3, p2},
      {1.0, -q2, q2, -1.0, p2, -p2},
      {1.0, q2, -q3, q2, 1.0, -p},
      {1.0, q, q2, -q2, -q, -1.0},
  });
  return HadamardMatrix::from(std::move(m));
}

/// Scales rows, then columns, by conjugate phases so that the first row and
/// column become exactly 1.
inline HadamardMatrix dephase(const HadamardMatrix &h) {
  Matrix m = h.matrix();
  const std::size_t d = m.rows();
  auto unit_conj = [](Complex z) { return std::conj(z) / std::abs(z); };
  for (std::size_t r = 0; r < d; ++r) {
    const Complex s = unit_conj(m(r, 0));
    for (std::size_t c = 0; c < d; ++c) {
      m(r, c) *= s;
    }
    m(r, 0) = 1.0;
  }
  for (std::size_t c = 0; c < d; ++c) {
    const Complex s = unit_conj(m(0, c));
    for (std::size_t r = 0; r < d; ++r) {
      m(r, c) *= s;
    }
    m(0, c) = 1.0;
  }
  return HadamardMatrix::from(std::move(m));
}

/// Orthonormal basis (1/sqrt d) H e_k, i.e. the normalised columns.
inline std::vector<Matrix> normalized_columns(const HadamardMatrix &h) {
  const double s = 1.0 / std::sqrt(static_cast<double>(h.order()));
  std::vector<Matrix> out;
  for (std::size_t k = 0; k < h.order(); ++k) {
    out.push_back(Complex(s) * column(h.matrix(), k));
  }
  return out;
}

/// Orthonormal basis formed by the normalised rows of H (as column vectors).
inline std::vector<Matrix> normalized_rows(const HadamardMatrix &h) {
  const double s = 1.0 / std::sqrt(static_cast<double>(h.order()));
  std::vector<Matrix> out;
  for (std::size_t k = 0; k < h.order(); ++k) {
    out.push_back(Complex(s) * row_as_column(h.matrix(), k));
  }
  return out;
}

inline std::vector<Matrix> standard_basis(std::size_t d) {
  std::vector<Matrix> out;
  for (std::size_t k = 0; k < d; ++k) {
    out.push_back(Matrix::basis_vector(d, k));
  }
  return out;
}

/// True iff |<a_i|b_j>|^2 = 1/d for every pair.
inline bool mub_check(const std::vector<Matrix> &basis_a, const std::vector<Matrix> &basis_b,
                      Tolerance tol = {}) {
  const std::size_t d = basis_a.size();
  if (d == 0 || basis_b.size() != d) {
    throw ValidationError("mub_check: bases must have the same positive size");
  }
  for (const auto &v : basis_a) {
    if (v.rows() != d || v.cols() != 1) {
      throw ShapeError("mub_check: basis vectors must have dimension " + std::to_string(d));
    }
  }
  for (const auto &v : basis_b) {
    if (v.rows() != d || v.cols() != 1) {
      throw ShapeError("mub_check: basis vectors must have dimension " + std::to_string(d));
    }
  }
  if (!is_orthonormal(basis_a, tol) || !is_orthonormal(basis_b, tol)) {
    throw ValidationError("mub_check: inputs must be orthonormal bases");
  }
  const double target = 1.0 / static_cast<double>(d);
  for (const auto &a : basis_a) {
    for (const auto &b : basis_b) {
      if (std::abs(std::norm(inner(a, b)) - target) > tol.eps) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace ueb

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

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "ueb/diagram.hpp"
#include "ueb/errors.hpp"
#include "ueb/hadamard.hpp"
#include "ueb/linalg.hpp"
#include "ueb/quasigroup.hpp"
#include "ueb/structures.hpp"

namespace ueb {

/// d^2 unitaries of size d x d, stored row-major in the index pair (i, j).
struct ErrorBasis {
  std::size_t dim = 0;
  std::vector<Matrix> elements;

  ErrorBasis() = default;
  ErrorBasis(std::size_t d, std::vector<Matrix> elems) : dim(d), elements(std::move(elems)) {
    if (d == 0) {
      throw ShapeError("error basis dimension must be positive");
    }
    if (elements.size() != d * d) {
      throw ShapeError("error basis of dimension " + std::to_string(d) + " needs " +
                       std::to_string(d * d) + " elements, got " + std::to_string(elements.size()));
    }
    for (const auto &e : elements) {
      if (e.rows() != d || e.cols() != d) {
        throw ShapeError("error basis elements must be " + std::to_string(d) + "x" +
                         std::to_string(d));
      }
    }
  }

  const Matrix &at(std::size_t i, std::size_t j) const { return elements.at(i * dim + j); }
  std::size_t size() const { return elements.size(); }
};

struct VerificationReport {
  bool all_unitary = false;
  Matrix gram;
  double max_unitarity_defect = 0.0;
  double max_orthogonality_defect = 0.0;
  bool is_ueb = false;
};

inline VerificationReport verify(const ErrorBasis &basis, Tolerance tol = {}) {
  const std::size_t n = basis.size();
  const double d = static_cast<double>(basis.dim);
  VerificationReport r;
  r.all_unitary = true;
  for (const auto &e : basis.elements) {
    const double defect = unitarity_defect(e);
    r.max_unitarity_defect = std::max(r.max_unitarity_defect, defect);
    r.all_unitary = r.all_unitary && defect <= tol.eps;
  }
  r.gram = Matrix(n, n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      r.gram(a, b) = hs_inner(basis.elements[a], basis.elements[b]);
      const Complex expected = a == b ? d : 0.0;
      r.max_orthogonality_defect =
          std::max(r.max_orthogonality_defect, std::abs(r.gram(a, b) - expected));
    }
  }
  r.is_ueb = r.all_unitary && r.max_orthogonality_defect <= d * tol.eps;
  return r;
}

/// I, Z, [[0, e^{i theta}], [1, 0]], [[0, -e^{i theta}], [1, 0]].
inline ErrorBasis pauli_basis(double theta) {
  const Complex w = std::polar(1.0, theta);
  return ErrorBasis(2, {
                           Matrix::identity(2),
                           Matrix::from_rows({{1.0, 0.0}, {0.0, -1.0}}),
                           Matrix::from_rows({{0.0, w}, {1.0, 0.0}}),
                           Matrix::from_rows({{0.0, -w}, {1.0, 0.0}}),
                       });
}

/// E_ij = P_j diag(row i of H^j).
inline ErrorBasis shift_multiply(const LatinSquare &l, const HadamardFamily &fam) {
  const std::size_t d = l.order();
  if (fam.order() != d) {
    throw ValidationError("shift_multiply: latin square order " + std::to_string(d) +
                          " does not match Hadamard family order " + std::to_string(fam.order()));
  }
  std::vector<Matrix> elems;
  elems.reserve(d * d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      elems.push_back(row_permutation_matrix(l, j) * diag_of_row(fam.member(j).matrix(), i));
    }
  }
  return ErrorBasis(d, std::move(elems));
}

inline ErrorBasis minimal_shift_multiply(const GroupSpec &g) {
  return shift_multiply(cayley_table(g), HadamardFamily::uniform(fourier_matrix(g)));
}

/// M_ij = d * m_white(|j> (x) -) o (I (x) cap_black)(cup_white (x) I) o m_black(- (x) |w_i>),
/// with black the group basis and white the normalised columns of the Fourier matrix.
inline ErrorBasis mub_basis(const GroupSpec &g) {
  const HadamardMatrix f = fourier_matrix(g);
  const std::size_t d = f.order();
  const ClassicalStructure black = standard_structure(d);
  const ClassicalStructure white = classical_from_onb(normalized_columns(f));
  const Matrix black_cap = black.cap();
  const Matrix white_cup = white.cup();
  std::vector<Matrix> elems;
  elems.reserve(d * d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      elems.push_back(Diagram(d, 1)
                          .apply(white.basis[i], 1, 0, 1)
                          .apply(black.mult, 0, 2, 1)
                          .apply(white_cup, 0, 0, 2)
                          .apply(black_cap, 1, 2, 0)
                          .apply(Matrix::basis_vector(d, j), 0, 0, 1)
                          .apply(white.mult, 0, 2, 1)
                          .scale(static_cast<double>(d))
                          .evaluate());
    }
  }
  return ErrorBasis(d, std::move(elems));
}

/// The minimal basis rebuilt over the isotope whose rows are relabelled by
/// g -> g^-1, so that P'_j|g> = |j - g>, paired with mub_basis(g).
inline std::pair<ErrorBasis, ErrorBasis> theorem22_transform(const GroupSpec &g) {
  Isotopy iso = Isotopy::identity(g.order());
  iso.row_perm = inversion_permutation(g);
  const LatinSquare inverted = isotope(cayley_table(g), iso);
  ErrorBasis transformed = shift_multiply(inverted, HadamardFamily::uniform(fourier_matrix(g)));
  return {std::move(transformed), mub_basis(g)};
}

/// D_j = P_j^dagger o mult'(- (x) |j>) for the generalised multiplication of
/// generalized_ls_mult(l, fam, k).
inline Matrix d_j_matrix(const GeneralizedLSStructure &s, const LatinSquare &l, std::size_t j) {
  const std::size_t d = s.dim;
  if (j >= d) {
    throw ValidationError("d_j_matrix: index j=" + std::to_string(j) + " out of range");
  }
  const Matrix partial = s.mult * kron(Matrix::identity(d), Matrix::basis_vector(d, j));
  return dagger(row_permutation_matrix(l, j)) * partial;
}

inline Matrix d_j_matrix(const LatinSquare &l, const HadamardFamily &fam, std::size_t k,
                         std::size_t j) {
  return d_j_matrix(generalized_ls_mult(l, fam, k), l, j);
}

/// B'_ij = P_j D_j diag(row i of H^j) for explicitly supplied D_0..D_{d-1}.
inline ErrorBasis generalized_shift_multiply(const LatinSquare &l, const HadamardFamily &fam,
                                             const std::vector<Matrix> &d_mats) {
  const std::size_t d = l.order();
  if (fam.order() != d || d_mats.size() != d) {
    throw ValidationError("generalized_shift_multiply: orders do not match");
  }
  std::vector<Matrix> elems;
  elems.reserve(d * d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      elems.push_back(row_permutation_matrix(l, j) * d_mats[j] *
                      diag_of_row(fam.member(j).matrix(), i));
    }
  }
  return ErrorBasis(d, std::move(elems));
}

inline ErrorBasis generalized_shift_multiply(const LatinSquare &l, const HadamardFamily &fam,
                                             std::size_t k) {
  const GeneralizedLSStructure s = generalized_ls_mult(l, fam, k);
  std::vector<Matrix> d_mats;
  d_mats.reserve(l.order());
  for (std::size_t j = 0; j < l.order(); ++j) {
    d_mats.push_back(d_j_matrix(s, l, j));
  }
  return generalized_shift_multiply(l, fam, d_mats);
}

/// A_ij -> c_ij U A_ij V.
struct EquivalenceTransform {
  Matrix left;
  Matrix right;
  std::vector<Complex> phases;

  static EquivalenceTransform identity(std::size_t d) {
    return {Matrix::identity(d), Matrix::identity(d), std::vector<Complex>(d * d, 1.0)};
  }
};

inline void validate_transform(const EquivalenceTransform &t, std::size_t d, Tolerance tol = {}) {
  if (t.left.rows() != d || t.left.cols() != d || t.right.rows() != d || t.right.cols() != d ||
      t.phases.size() != d * d) {
    throw ShapeError("equivalence transform does not fit dimension " + std::to_string(d));
  }
  if (!is_unitary(t.left, tol) || !is_unitary(t.right, tol)) {
    throw ValidationError("equivalence transform needs unitary left and right factors");
  }
  for (const auto &c : t.phases) {
    if (std::abs(std::abs(c) - 1.0) > tol.eps) {
      throw ValidationError("equivalence transform phases must be unimodular");
    }
  }
}

inline ErrorBasis apply_transform(const ErrorBasis &basis, const EquivalenceTransform &t,
                                  Tolerance tol = {}) {
  validate_transform(t, basis.dim, tol);
  std::vector<Matrix> elems;
  elems.reserve(basis.size());
  for (std::size_t a = 0; a < basis.size(); ++a) {
    elems.push_back(t.phases[a] * (t.left * basis.elements[a] * t.right));
  }
  return ErrorBasis(basis.dim, std::move(elems));
}

/// Applying `first` and then `second` equals applying the result.
inline EquivalenceTransform compose(const EquivalenceTransform &first,
                                    const EquivalenceTransform &second) {
  EquivalenceTransform out{second.left * first.left, first.right * second.right, first.phases};
  for (std::size_t a = 0; a < out.phases.size(); ++a) {
    out.phases[a] *= second.phases[a];
  }
  return out;
}

/// I, Z, X and [[0, -i], [i, 0]].
inline ErrorBasis canonical_pauli() {
  const Complex i(0.0, 1.0);
  return ErrorBasis(2, {
                           Matrix::identity(2),
                           Matrix::from_rows({{1.0, 0.0}, {0.0, -1.0}}),
                           Matrix::from_rows({{0.0, 1.0}, {1.0, 0.0}}),
                           Matrix::from_rows({{0.0, -i}, {i, 0.0}}),
                       });
}

struct NormalizationStep {
  std::string description;
  EquivalenceTransform transform;
};

struct NormalizationResult {
  ErrorBasis basis;
  std::vector<NormalizationStep> transcript;
  EquivalenceTransform total;
};

namespace detail {

/// Unit vector with the phase of its first nonzero component removed.
inline Matrix phase_fixed(Matrix v) {
  const double n = frobenius_norm(v);
  for (std::size_t r = 0; r < v.rows(); ++r) {
    if (std::abs(v(r, 0)) > 1e-12 * n) {
      const Complex phase = std::conj(v(r, 0)) / std::abs(v(r, 0));
      return Complex(1.0 / n) * phase * v;
    }
  }
  return v;
}

/// Unitary P whose columns are eigenvectors of the normal 2x2 matrix m.
inline Matrix eigenbasis_2x2(const Matrix &m, Tolerance tol) {
  if (is_diagonal(m, tol)) {
    return Matrix::identity(2);
  }
  const Complex a = m(0, 0), b = m(0, 1), c = m(1, 0), dd = m(1, 1);
  const Complex half_trace = (a + dd) / 2.0;
  const Complex disc = std::sqrt((a - dd) * (a - dd) / 4.0 + b * c);
  const Complex lambda = half_trace + disc;
  const Matrix from_row0 = Matrix::column_vector({b, lambda - a});
  const Matrix from_row1 = Matrix::column_vector({lambda - dd, c});
  const Matrix v = phase_fixed(frobenius_norm(from_row0) >= frobenius_norm(from_row1) ? from_row0
                                                                                      : from_row1);
  const Matrix u = phase_fixed(Matrix::column_vector({-std::conj(v(1, 0)), std::conj(v(0, 0))}));
  return from_columns({v, u});
}

}  // namespace detail

/// Brings a d = 2 error basis to I, Z, X, [[0,-i],[i,0]] by an explicit
/// equivalence, recording each move.
inline NormalizationResult normalize_d2(const ErrorBasis &basis, Tolerance tol = {}) {
  if (basis.dim != 2) {
    throw ValidationError("normalize_d2 needs a basis of dimension 2");
  }
  if (!verify(basis, tol).is_ueb) {
    throw ValidationError("normalize_d2 needs a unitary error basis");
  }
  std::vector<NormalizationStep> transcript;
  ErrorBasis cur = basis;
  EquivalenceTransform total = EquivalenceTransform::identity(2);
  auto step = [&](std::string description, EquivalenceTransform t) {
    cur = apply_transform(cur, t, tol);
    total = compose(total, t);
    transcript.push_back({std::move(description), std::move(t)});
  };

  EquivalenceTransform t1 = EquivalenceTransform::identity(2);
  t1.left = dagger(cur.elements[0]);
  step("left-multiply by the adjoint of element 0", std::move(t1));

  const Matrix p = detail::eigenbasis_2x2(cur.elements[1], tol);
  EquivalenceTransform t2 = EquivalenceTransform::identity(2);
  t2.left = dagger(p);
  t2.right = p;
  step("conjugate by the eigenbasis of element 1", std::move(t2));

  auto unit_inverse = [](Complex z) { return std::conj(z) / std::abs(z); };
  EquivalenceTransform t3 = EquivalenceTransform::identity(2);
  t3.phases[1] = unit_inverse(cur.elements[1](0, 0));
  t3.phases[2] = unit_inverse(cur.elements[2](1, 0));
  t3.phases[3] = unit_inverse(cur.elements[3](1, 0));
  step("rephase to diag(1,-1) and unit lower-left entries", std::move(t3));

  const double phi = std::arg(cur.elements[2](0, 1));
  const Complex half = std::polar(1.0, phi / 2.0);
  EquivalenceTransform t4 = EquivalenceTransform::identity(2);
  t4.left = Matrix::from_rows({{1.0, 0.0}, {0.0, half}});
  t4.right = dagger(t4.left);
  t4.phases[2] = std::conj(half);
  t4.phases[3] = Complex(0.0, 1.0) * std::conj(half);
  step("conjugate by diag(1, e^{i phi/2}) and fix the last phases", std::move(t4));

  return {std::move(cur), std::move(transcript), std::move(total)};
}

/// Equivalence invariants: per element tr((A^dagger A)^k)/d and per ordered
/// pair |tr((A B^dagger)^k)| for k = 1..d, each list sorted, concatenated.
/// Equal fingerprints do not imply equivalence.
inline std::vector<double> fingerprint(const ErrorBasis &basis) {
  const std::size_t d = basis.dim;
  std::vector<double> element_part;
  std::vector<double> pair_part;
  for (const auto &a : basis.elements) {
    const Matrix h = dagger(a) * a;
    Matrix power = h;
    for (std::size_t k = 1; k <= d; ++k) {
      element_part.push_back(trace(power).real() / static_cast<double>(d));
      power = power * h;
    }
  }
  for (const auto &a : basis.elements) {
    for (const auto &b : basis.elements) {
      const Matrix q = a * dagger(b);
      Matrix power = q;
      for (std::size_t k = 1; k <= d; ++k) {
        pair_part.push_back(std::abs(trace(power)));
        power = power * q;
      }
    }
  }
  std::sort(element_part.begin(), element_part.end());
  std::sort(pair_part.begin(), pair_part.end());
  element_part.insert(element_part.end(), pair_part.begin(), pair_part.end());
  return element_part;
}

inline bool fingerprints_match(const std::vector<double> &a, const std::vector<double> &b,
                               Tolerance tol = Tolerance(1e-8)) {
  if (a.size() != b.size()) {
    return false;
  }
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (std::abs(a[i] - b[i]) > tol.eps) {
      return false;
    }
  }
  return true;
}

}  // namespace ueb

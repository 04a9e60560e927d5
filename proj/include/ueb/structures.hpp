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

// Classical structures, latin square structures and their axioms, all as
// concrete matrices on C^d. A map with n inputs and m outputs is a d^m x d^n
// matrix; tensor factors run left to right with wire 0 most significant.

#pragma once

#include <cmath>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ueb/diagram.hpp"
#include "ueb/errors.hpp"
#include "ueb/hadamard.hpp"
#include "ueb/linalg.hpp"
#include "ueb/quasigroup.hpp"

namespace ueb {

/// The copy/delete and merge/create maps of an orthonormal basis.
struct ClassicalStructure {
  std::size_t dim = 0;
  std::vector<Matrix> basis;
  Matrix mult;    // d x d^2
  Matrix comult;  // d^2 x d
  Matrix unit;    // d x 1
  Matrix counit;  // 1 x d

  /// counit o mult, the d^2 -> 1 pairing.
  Matrix cap() const { return counit * mult; }
  /// comult o unit, the 1 -> d^2 state sum_i |b_i>|b_i>.
  Matrix cup() const { return comult * unit; }
};

namespace detail {

inline void require_vectors(const std::vector<Matrix> &vs, std::size_t d, const char *what) {
  if (vs.size() != d || d == 0) {
    throw ShapeError(std::string(what) + ": expected " + std::to_string(d) + " vectors");
  }
  for (const auto &v : vs) {
    if (v.rows() != d || v.cols() != 1) {
      throw ShapeError(std::string(what) + ": vectors must be " + std::to_string(d) + "x1");
    }
  }
}

inline void require_mult_shape(const Matrix &mult, std::size_t d, const char *what) {
  if (mult.rows() != d || mult.cols() != d * d) {
    throw ShapeError(std::string(what) + ": multiplication must be " + std::to_string(d) + "x" +
                     std::to_string(d * d));
  }
}

}  // namespace detail

/// Builds the four maps from arbitrary vectors without checking orthonormality.
/// Used to exhibit what goes wrong for a bad basis.
inline ClassicalStructure classical_from_vectors_unchecked(const std::vector<Matrix> &basis) {
  const std::size_t d = basis.size();
  detail::require_vectors(basis, d, "classical structure");
  ClassicalStructure s;
  s.dim = d;
  s.basis = basis;
  s.mult = Matrix(d, d * d);
  s.comult = Matrix(d * d, d);
  s.unit = Matrix(d, 1);
  s.counit = Matrix(1, d);
  for (const auto &b : basis) {
    const Matrix bd = dagger(b);
    s.mult = s.mult + b * kron(bd, bd);
    s.comult = s.comult + kron(b, b) * bd;
    s.unit = s.unit + b;
    s.counit = s.counit + bd;
  }
  return s;
}

inline ClassicalStructure classical_from_onb(const std::vector<Matrix> &basis, Tolerance tol = {}) {
  detail::require_vectors(basis, basis.size(), "classical_from_onb");
  if (!is_orthonormal(basis, tol)) {
    throw ValidationError("classical_from_onb: basis is not orthonormal");
  }
  return classical_from_vectors_unchecked(basis);
}

inline ClassicalStructure standard_structure(std::size_t d) {
  return classical_from_onb(standard_basis(d));
}

struct ClassicalAxiomReport {
  bool associative = false;
  bool unital = false;
  bool counital = false;
  bool frobenius = false;
  bool special = false;
  bool commutative = false;
  bool dagger = false;

  bool all() const {
    return associative && unital && counital && frobenius && special && commutative && dagger;
  }
};

/// (I (x) m)(delta (x) I) = delta o m = (m (x) I)(I (x) delta).
inline bool check_frobenius_law(const Matrix &mult, const Matrix &comult, Tolerance tol = {}) {
  const std::size_t d = mult.rows();
  detail::require_mult_shape(mult, d, "check_frobenius_law");
  if (comult.rows() != d * d || comult.cols() != d) {
    throw ShapeError("check_frobenius_law: comultiplication must be d^2 x d");
  }
  const Matrix id = Matrix::identity(d);
  const Matrix middle = comult * mult;
  const Matrix left = kron(id, mult) * kron(comult, id);
  const Matrix right = kron(mult, id) * kron(id, comult);
  return approx_equal(left, middle, tol) && approx_equal(right, middle, tol);
}

inline ClassicalAxiomReport check_classical_axioms(const ClassicalStructure &s, Tolerance tol = {}) {
  const std::size_t d = s.dim;
  detail::require_mult_shape(s.mult, d, "check_classical_axioms");
  const Matrix id = Matrix::identity(d);
  ClassicalAxiomReport r;
  r.associative = approx_equal(s.mult * kron(s.mult, id), s.mult * kron(id, s.mult), tol);
  r.unital = approx_equal(s.mult * kron(s.unit, id), id, tol) &&
             approx_equal(s.mult * kron(id, s.unit), id, tol);
  r.counital = approx_equal(kron(s.counit, id) * s.comult, id, tol) &&
               approx_equal(kron(id, s.counit) * s.comult, id, tol);
  r.frobenius = check_frobenius_law(s.mult, s.comult, tol);
  r.special = approx_equal(s.mult * s.comult, id, tol);
  r.commutative = approx_equal(s.mult * swap_matrix(d), s.mult, tol);
  r.dagger = approx_equal(s.comult, dagger(s.mult), tol) &&
             approx_equal(s.unit, dagger(s.counit), tol);
  return r;
}

/// sqrt(d) (I (x) m_white)(delta_black (x) I) is unitary.
inline bool check_complementary(const ClassicalStructure &black, const ClassicalStructure &white,
                                Tolerance tol = {}) {
  if (black.dim != white.dim) {
    throw ShapeError("check_complementary: structures have different dimensions");
  }
  const std::size_t d = black.dim;
  const Matrix composite = Diagram(d, 2)
                               .apply(black.comult, 0, 1, 2)
                               .apply(white.mult, 1, 2, 1)
                               .scale(std::sqrt(static_cast<double>(d)))
                               .evaluate();
  return is_unitary(composite, tol);
}

struct LatinSquareStructure {
  std::size_t dim = 0;
  Matrix mult;
  Matrix comult;
  Matrix unit;
  Matrix counit;
};

/// Linear extension of an arbitrary d x d symbol table; the table need not be latin.
inline Matrix table_mult(const std::vector<std::vector<Symbol>> &table) {
  const std::size_t d = table.size();
  if (d == 0) {
    throw ShapeError("table_mult: empty table");
  }
  Matrix m(d, d * d);
  for (std::size_t a = 0; a < d; ++a) {
    if (table[a].size() != d) {
      throw ShapeError("table_mult: table must be square");
    }
    for (std::size_t b = 0; b < d; ++b) {
      if (table[a][b] >= d) {
        throw ValidationError("table_mult: symbol out of range");
      }
      m(table[a][b], a * d + b) = 1.0;
    }
  }
  return m;
}

inline LatinSquareStructure ls_structure(const LatinSquare &l) {
  if (!l.is_loop()) {
    throw ValidationError("ls_structure needs a loop with unit 0; use normalize_to_loop first");
  }
  const std::size_t d = l.order();
  LatinSquareStructure s;
  s.dim = d;
  s.mult = table_mult(l.table());
  s.comult = dagger(s.mult);
  s.unit = Matrix::basis_vector(d, 0);
  s.counit = dagger(s.unit);
  return s;
}

/// The two composites a(x)b -> (a*b)(x)b and a(x)b -> a(x)(a*b), wired with the
/// black copy map.
inline std::pair<Matrix, Matrix> ls_composites(const Matrix &mult, const ClassicalStructure &black) {
  const std::size_t d = black.dim;
  detail::require_mult_shape(mult, d, "ls_composites");
  Matrix u1 = Diagram(d, 2).apply(black.comult, 1, 1, 2).apply(mult, 0, 2, 1).evaluate();
  Matrix u2 = Diagram(d, 2).apply(black.comult, 0, 1, 2).apply(mult, 1, 2, 1).evaluate();
  return {std::move(u1), std::move(u2)};
}

inline std::pair<bool, bool> check_ls_unitarity(const Matrix &mult, const ClassicalStructure &black,
                                                Tolerance tol = {}) {
  const auto [u1, u2] = ls_composites(mult, black);
  return {is_unitary(u1, tol), is_unitary(u2, tol)};
}

/// Copy and delete of the black structure are algebra maps for `mult`. The unit
/// laws are checked only when a unit is supplied.
inline bool check_bialgebra(const Matrix &mult, const ClassicalStructure &black, Tolerance tol = {},
                            const std::optional<Matrix> &unit = std::nullopt) {
  const std::size_t d = black.dim;
  detail::require_mult_shape(mult, d, "check_bialgebra");
  const Matrix &copy = black.comult;
  const Matrix &del = black.counit;
  const Matrix id = Matrix::identity(d);
  const Matrix lhs = copy * mult;
  const Matrix rhs = kron(mult, mult) * kron({id, swap_matrix(d), id}) * kron(copy, copy);
  if (!approx_equal(lhs, rhs, tol)) {
    return false;
  }
  if (!approx_equal(del * mult, kron(del, del), tol)) {
    return false;
  }
  if (unit) {
    if (unit->rows() != d || unit->cols() != 1) {
      throw ShapeError("check_bialgebra: unit must be a d x 1 state");
    }
    if (!approx_equal(copy * *unit, kron(*unit, *unit), tol)) {
      return false;
    }
    if (std::abs((del * *unit)(0, 0) - 1.0) > tol.eps) {
      return false;
    }
  }
  return true;
}

/// Bending both outputs of mult-dagger down with black caps, crossing the
/// inputs, gives back mult; the mirrored diagram gives back mult-dagger.
inline bool check_duality(const Matrix &mult, const ClassicalStructure &black, Tolerance tol = {}) {
  const std::size_t d = black.dim;
  detail::require_mult_shape(mult, d, "check_duality");
  const Matrix comult = dagger(mult);
  const Matrix cup = black.cup();
  const Matrix cap = black.cap();
  // wires: a b | a b k k' | a b x y k' | b a x y k' | b y k' | k'
  const Matrix bent = Diagram(d, 2)
                          .apply(cup, 2, 0, 2)
                          .apply(comult, 2, 1, 2)
                          .permute({1, 0, 2, 3, 4})
                          .apply(cap, 1, 2, 0)
                          .apply(cap, 0, 2, 0)
                          .evaluate();
  // wires: k' | b y k' | b a x y k' | a b x y k' | a b k k' | a b
  const Matrix mirrored = Diagram(d, 1)
                              .apply(cup, 0, 0, 2)
                              .apply(cup, 1, 0, 2)
                              .permute({1, 0, 2, 3, 4})
                              .apply(mult, 2, 2, 1)
                              .apply(cap, 2, 2, 0)
                              .evaluate();
  return approx_equal(bent, mult, tol) && approx_equal(mirrored, comult, tol);
}

/// A bilinear multiplication only required to make both composites unitary.
struct GeneralizedLSStructure {
  std::size_t dim = 0;
  Matrix mult;
};

/// Normalised rows of H^(k), the basis of the k-th white structure.
inline std::vector<Matrix> white_basis(const HadamardFamily &fam, std::size_t k) {
  return normalized_rows(fam.member(k));
}

/// For each m, sum of: black effect <m|, copy, white-k state c_m = sqrt(d) w_m,
/// white-k merge, white-k effect <w_m|, black state |m>, latin merge. On basis
/// inputs a(x)b this is conj(H^(k)[a][b]) |a*b>.
inline GeneralizedLSStructure generalized_ls_mult(const LatinSquare &l, const HadamardFamily &fam,
                                                  std::size_t k) {
  const std::size_t d = l.order();
  if (fam.order() != d) {
    throw ValidationError("generalized_ls_mult: latin square and Hadamard family orders differ");
  }
  if (k >= d) {
    throw ValidationError("generalized_ls_mult: index k=" + std::to_string(k) + " out of range");
  }
  const LatinSquareStructure ls = ls_structure(l);
  const ClassicalStructure black = standard_structure(d);
  const std::vector<Matrix> w = white_basis(fam, k);
  const ClassicalStructure white = classical_from_onb(w);
  const double root_d = std::sqrt(static_cast<double>(d));

  Matrix mult(d, d * d);
  for (std::size_t m = 0; m < d; ++m) {
    const Matrix black_state = Matrix::basis_vector(d, m);
    const Matrix white_state = Complex(root_d) * w[m];
    const Matrix term = Diagram(d, 2)
                            .apply(dagger(black_state), 0, 1, 0)
                            .apply(black.comult, 0, 1, 2)
                            .apply(white_state, 1, 0, 1)
                            .apply(white.mult, 1, 2, 1)
                            .apply(dagger(w[m]), 1, 1, 0)
                            .apply(black_state, 0, 0, 1)
                            .apply(ls.mult, 0, 2, 1)
                            .evaluate();
    mult = mult + term;
  }
  return GeneralizedLSStructure{d, std::move(mult)};
}

}  // namespace ueb

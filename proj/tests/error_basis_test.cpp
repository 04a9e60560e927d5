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


#include "ueb/error_basis.hpp"

#include <cmath>
#include <random>

#include "gtest/gtest.h"

#include "test_util.hpp"
#include "ueb/diagram.hpp"
#include "ueb/fixtures.hpp"
#include "ueb/random.hpp"

using namespace ueb;

namespace {

/// Entry-level shift-and-multiply: E_ij e_g = H^j[i][g] e_{L[g][j]}.
ErrorBasis shift_multiply_by_entries(const LatinSquare &l, const HadamardFamily &fam) {
  const std::size_t d = l.order();
  std::vector<Matrix> elems;
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      Matrix e(d, d);
      for (std::size_t g = 0; g < d; ++g) {
        e(l(g, j), g) = fam.member(j)(i, g);
      }
      elems.push_back(e);
    }
  }
  return ErrorBasis(d, elems);
}

/// M_ij e_g = F[g][i] e_{j - g}.
ErrorBasis mub_by_entries(const GroupSpec &g) {
  const Matrix f = fourier_matrix(g).matrix();
  const std::size_t d = g.order();
  std::vector<Matrix> elems;
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      Matrix e(d, d);
      for (std::size_t x = 0; x < d; ++x) {
        e(g.add(j, g.negate(x)), x) = f(x, i);
      }
      elems.push_back(e);
    }
  }
  return ErrorBasis(d, elems);
}

double max_element_diff(const ErrorBasis &a, const ErrorBasis &b) {
  double m = 0.0;
  for (std::size_t n = 0; n < a.size(); ++n) {
    m = std::max(m, max_abs_diff(a.elements[n], b.elements[n]));
  }
  return m;
}

EquivalenceTransform random_transform(std::size_t d, std::mt19937_64 &rng) {
  EquivalenceTransform t{random_unitary(d, rng), random_unitary(d, rng), {}};
  for (std::size_t n = 0; n < d * d; ++n) {
    t.phases.push_back(random_phase(rng));
  }
  return t;
}

std::vector<std::pair<LatinSquare, HadamardFamily>> instances() {
  std::vector<std::pair<LatinSquare, HadamardFamily>> out;
  for (const auto &name : ueb::testing::small_groups()) {
    const GroupSpec g = GroupSpec::parse(name);
    out.emplace_back(cayley_table(g), HadamardFamily::uniform(fourier_matrix(g)));
  }
  out.emplace_back(d6_latin_square(), HadamardFamily::uniform(butson_c6()));
  out.emplace_back(d6_latin_square(), HadamardFamily::uniform(fourier_matrix(GroupSpec::cyclic(6))));
  out.emplace_back(cayley_table(GroupSpec::cyclic(6)), HadamardFamily::uniform(butson_c6()));
  return out;
}

}  // namespace

TEST(error_basis, pauli) {
  const VerificationReport r = verify(pauli_basis(0.0));
  EXPECT_TRUE(r.is_ueb);
  EXPECT_LT(r.max_unitarity_defect, 1e-12);
  EXPECT_LT(r.max_orthogonality_defect, 1e-12);
  const Complex i(0.0, 1.0);
  EXPECT_TRUE(approx_equal(pauli_basis(kPi / 2).elements[2], Matrix::from_rows({{0.0, i}, {1.0, 0.0}})));
  for (double theta : {0.0, 0.3, 1.0, kPi / 2, 2.5, -1.1}) {
    const VerificationReport t = verify(pauli_basis(theta));
    EXPECT_TRUE(t.is_ueb);
    EXPECT_TRUE(approx_equal(t.gram, Complex(2.0) * Matrix::identity(4)));
  }
}

TEST(error_basis, duplicate_identity_is_caught) {
  ErrorBasis b = pauli_basis(0.0);
  b.elements[1] = Matrix::identity(2);
  const VerificationReport r = verify(b);
  EXPECT_TRUE(r.all_unitary);
  EXPECT_FALSE(r.is_ueb);
  EXPECT_NEAR(r.max_orthogonality_defect, 2.0, 1e-12);
}

TEST(error_basis, non_unitary_element_is_caught) {
  ErrorBasis b = pauli_basis(0.0);
  b.elements[3] = Matrix::from_rows({{1.0, 1.0}, {0.0, 1.0}});
  EXPECT_FALSE(verify(b).all_unitary);
  EXPECT_FALSE(verify(b).is_ueb);
}

TEST(error_basis, shape_checks) {
  EXPECT_THROW(ErrorBasis(2, {Matrix::identity(2)}), ShapeError);
  EXPECT_THROW(ErrorBasis(1, {Matrix::identity(2)}), ShapeError);
  EXPECT_THROW(shift_multiply(cayley_table(GroupSpec::cyclic(3)),
                              HadamardFamily::uniform(fourier_matrix(GroupSpec::cyclic(2)))),
               ValidationError);
}

TEST(error_basis, shift_multiply_matches_entry_formula) {
  for (const auto &[l, fam] : instances()) {
    const ErrorBasis b = shift_multiply(l, fam);
    EXPECT_LT(max_element_diff(b, shift_multiply_by_entries(l, fam)), 1e-15);
    const VerificationReport r = verify(b);
    EXPECT_TRUE(r.is_ueb) << "d=" << l.order();
    EXPECT_LT(r.max_orthogonality_defect, 1e-9);
  }
}

TEST(error_basis, shift_multiply_unit_element) {
  const ErrorBasis b = shift_multiply(d6_latin_square(), HadamardFamily::uniform(butson_c6()));
  EXPECT_EQ(b.at(0, 0), Matrix::identity(6));
}

TEST(error_basis, minimal_z2_is_pauli_equivalent) {
  const ErrorBasis m = minimal_shift_multiply(GroupSpec::cyclic(2));
  EXPECT_TRUE(verify(m).is_ueb);
  EXPECT_LT(max_element_diff(normalize_d2(m).basis, canonical_pauli()), 1e-12);
}

TEST(error_basis, minimal_groups_verify) {
  for (const auto &name : {"Z4", "Z2xZ2", "Z6", "Z7", "Z8", "Z2xZ4", "Z2xZ2xZ2"}) {
    const VerificationReport r = verify(minimal_shift_multiply(GroupSpec::parse(name)));
    EXPECT_TRUE(r.is_ueb) << name;
  }
  const VerificationReport r4 = verify(minimal_shift_multiply(GroupSpec::parse("Z2xZ2")));
  EXPECT_TRUE(approx_equal(r4.gram, Complex(4.0) * Matrix::identity(16)));
}

TEST(error_basis, mub_basis_matches_entry_formula) {
  for (const auto &name : {"Z1", "Z2", "Z3", "Z4", "Z2xZ2", "Z5", "Z6", "Z7", "Z8", "Z2xZ4", "Z2xZ2xZ2"}) {
    const GroupSpec g = GroupSpec::parse(name);
    const ErrorBasis m = mub_basis(g);
    EXPECT_LT(max_element_diff(m, mub_by_entries(g)), 1e-12) << name;
    EXPECT_TRUE(verify(m).is_ueb) << name;
  }
  EXPECT_LT(max_element_diff(normalize_d2(mub_basis(GroupSpec::cyclic(2))).basis, canonical_pauli()),
            1e-12);
}

TEST(error_basis, inverted_minimal_basis_equals_mub_basis) {
  for (const auto &name : {"Z2", "Z3", "Z4", "Z2xZ2", "Z5", "Z6", "Z7", "Z8", "Z2xZ4", "Z2xZ2xZ2"}) {
    const auto [transformed, mub] = theorem22_transform(GroupSpec::parse(name));
    EXPECT_LT(max_element_diff(transformed, mub), 1e-9) << name;
  }
}

TEST(error_basis, symbol_inversion_alone_differs_for_z3) {
  const GroupSpec g = GroupSpec::cyclic(3);
  Isotopy iso = Isotopy::identity(3);
  iso.sym_perm = inversion_permutation(g);
  const ErrorBasis by_symbols =
      shift_multiply(isotope(cayley_table(g), iso), HadamardFamily::uniform(fourier_matrix(g)));
  EXPECT_GT(max_element_diff(by_symbols, mub_basis(g)), 0.5);
}

TEST(error_basis, d_j_matrix) {
  const LatinSquare z2 = cayley_table(GroupSpec::cyclic(2));
  const HadamardFamily f2 = HadamardFamily::uniform(fourier_matrix(GroupSpec::cyclic(2)));
  EXPECT_TRUE(approx_equal(d_j_matrix(z2, f2, 0, 0), Matrix::identity(2)));
  EXPECT_TRUE(approx_equal(d_j_matrix(z2, f2, 0, 1), Matrix::from_rows({{1.0, 0.0}, {0.0, -1.0}})));

  const LatinSquare l = d6_latin_square();
  const HadamardFamily c6 = HadamardFamily::uniform(butson_c6());
  for (std::size_t j = 0; j < 6; ++j) {
    const Matrix d = d_j_matrix(l, c6, 0, j);
    EXPECT_LT(off_diagonal_mass(d), 1e-9);
    EXPECT_TRUE(is_unitary(d));
    for (std::size_t g = 0; g < 6; ++g) {
      EXPECT_NEAR(std::abs(d(g, g) - std::conj(butson_c6()(g, j))), 0.0, 1e-12);
    }
  }
  EXPECT_THROW(d_j_matrix(l, c6, 0, 6), ValidationError);
}

TEST(error_basis, generalized_with_identity_insertions_is_shift_multiply) {
  for (const auto &[l, fam] : instances()) {
    const std::vector<Matrix> ones(l.order(), Matrix::identity(l.order()));
    EXPECT_EQ(max_element_diff(generalized_shift_multiply(l, fam, ones), shift_multiply(l, fam)), 0.0);
  }
}

TEST(error_basis, generalized_matches_diagram) {
  // B'_ij x = sqrt(d) mult'(m_black(w_i^(j) (x) x) (x) e_j).
  const LatinSquare l = d6_latin_square();
  const HadamardFamily fam = HadamardFamily::uniform(butson_c6());
  const std::size_t d = 6;
  const GeneralizedLSStructure g = generalized_ls_mult(l, fam, 0);
  const ClassicalStructure black = standard_structure(d);
  const ErrorBasis b = generalized_shift_multiply(l, fam, 0);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      const Matrix w = white_basis(fam, j)[i];
      const Matrix diagram = Diagram(d, 1)
                                 .apply(w, 0, 0, 1)
                                 .apply(black.mult, 0, 2, 1)
                                 .apply(Matrix::basis_vector(d, j), 1, 0, 1)
                                 .apply(g.mult, 0, 2, 1)
                                 .scale(std::sqrt(6.0))
                                 .evaluate();
      EXPECT_LT(max_abs_diff(diagram, b.at(i, j)), 1e-12) << i << "," << j;
    }
  }
  const VerificationReport r = verify(b);
  EXPECT_TRUE(r.is_ueb);
}

TEST(error_basis, generalized_d2) {
  const ErrorBasis b = generalized_shift_multiply(
      cayley_table(GroupSpec::cyclic(2)),
      HadamardFamily::uniform(fourier_matrix(GroupSpec::cyclic(2))), 1);
  EXPECT_TRUE(verify(b).is_ueb);
  EXPECT_LT(max_element_diff(normalize_d2(b).basis, canonical_pauli()), 1e-12);
}

TEST(error_basis, apply_transform) {
  const ErrorBasis p = pauli_basis(0.0);
  EXPECT_EQ(max_element_diff(apply_transform(p, EquivalenceTransform::identity(2)), p), 0.0);

  EquivalenceTransform left_x = EquivalenceTransform::identity(2);
  left_x.left = ueb::testing::x2();
  EXPECT_TRUE(verify(apply_transform(p, left_x)).is_ueb);

  EquivalenceTransform phases = EquivalenceTransform::identity(2);
  phases.phases = {std::polar(1.0, 0.1), std::polar(1.0, 2.0), std::polar(1.0, -1.0), -1.0};
  EXPECT_TRUE(approx_equal(verify(apply_transform(p, phases)).gram, verify(p).gram));

  EquivalenceTransform bad = EquivalenceTransform::identity(2);
  bad.left = Matrix::from_rows({{1.0, 1.0}, {0.0, 1.0}});
  EXPECT_THROW(apply_transform(p, bad), ValidationError);
  bad = EquivalenceTransform::identity(2);
  bad.phases[0] = 2.0;
  EXPECT_THROW(apply_transform(p, bad), ValidationError);
  bad = EquivalenceTransform::identity(3);
  EXPECT_THROW(apply_transform(p, bad), ShapeError);
}

TEST(error_basis, normalize_d2) {
  const NormalizationResult r = normalize_d2(pauli_basis(1.234));
  EXPECT_LT(max_element_diff(r.basis, canonical_pauli()), 1e-12);
  EXPECT_EQ(r.transcript.size(), 4u);
  EXPECT_THROW(normalize_d2(minimal_shift_multiply(GroupSpec::cyclic(3))), ValidationError);
  ErrorBasis broken = pauli_basis(0.0);
  broken.elements[2] = Matrix::identity(2);
  EXPECT_THROW(normalize_d2(broken), ValidationError);
}

TEST(error_basis, normalize_d2_recovers_scrambled_pauli) {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * kPi);
  for (int n = 0; n < 100; ++n) {
    const ErrorBasis scrambled = apply_transform(pauli_basis(angle(rng)), random_transform(2, rng));
    const NormalizationResult r = normalize_d2(scrambled);
    EXPECT_LT(max_element_diff(r.basis, canonical_pauli()), 1e-9) << n;
    EXPECT_LT(max_element_diff(apply_transform(scrambled, r.total), r.basis), 1e-12) << n;
    ErrorBasis replay = scrambled;
    for (const auto &step : r.transcript) {
      replay = apply_transform(replay, step.transform);
    }
    EXPECT_LT(max_element_diff(replay, r.basis), 1e-12) << n;
    EXPECT_LT(max_element_diff(normalize_d2(r.basis).basis, r.basis), 1e-12) << n;
  }
}

TEST(error_basis, fingerprint_invariance) {
  std::mt19937_64 rng(77);
  const auto pauli_fp = fingerprint(pauli_basis(0.0));
  EXPECT_TRUE(fingerprints_match(pauli_fp, fingerprint(minimal_shift_multiply(GroupSpec::cyclic(2)))));
  for (int n = 0; n < 10; ++n) {
    EXPECT_TRUE(
        fingerprints_match(pauli_fp, fingerprint(apply_transform(pauli_basis(0.0), random_transform(2, rng)))));
  }
  for (const auto &[l, fam] : instances()) {
    if (l.order() > 4) {
      continue;
    }
    const ErrorBasis b = shift_multiply(l, fam);
    EXPECT_TRUE(fingerprints_match(fingerprint(b),
                                   fingerprint(apply_transform(b, random_transform(l.order(), rng)))));
  }
}

TEST(error_basis, fingerprint_separates_some_bases) {
  ErrorBasis not_ueb = pauli_basis(0.0);
  not_ueb.elements[1] = Matrix::identity(2);
  EXPECT_FALSE(fingerprints_match(fingerprint(pauli_basis(0.0)), fingerprint(not_ueb)));
  EXPECT_FALSE(fingerprints_match(fingerprint(minimal_shift_multiply(GroupSpec::cyclic(4))),
                                  fingerprint(minimal_shift_multiply(GroupSpec::parse("Z2xZ2")))));
}

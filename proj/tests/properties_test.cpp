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


// Randomised checks over generated latin squares, Hadamard families and
// equivalence transforms.

#include <algorithm>
#include <cmath>
#include <random>

#include "gtest/gtest.h"

#include "test_util.hpp"
#include "ueb/error_basis.hpp"
#include "ueb/random.hpp"
#include "ueb/structures.hpp"
#include "ueb/teleport.hpp"

using namespace ueb;

namespace {

/// A Hadamard matrix equivalent to `h` under random row/column permutations and phases.
HadamardMatrix scramble(const HadamardMatrix &h, std::mt19937_64 &rng) {
  const std::size_t d = h.order();
  Permutation rows = identity_permutation(d), cols = identity_permutation(d);
  std::shuffle(rows.begin(), rows.end(), rng);
  std::shuffle(cols.begin(), cols.end(), rng);
  std::vector<Complex> rp, cp;
  for (std::size_t k = 0; k < d; ++k) {
    rp.push_back(random_phase(rng));
    cp.push_back(random_phase(rng));
  }
  Matrix m(d, d);
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t c = 0; c < d; ++c) {
      m(r, c) = rp[r] * cp[c] * h(rows[r], cols[c]);
    }
  }
  return HadamardMatrix::from(m);
}

HadamardFamily random_family(std::size_t d, std::mt19937_64 &rng) {
  std::vector<HadamardMatrix> members;
  for (std::size_t j = 0; j < d; ++j) {
    const HadamardMatrix base = d == 6 && j % 2 == 0 ? butson_c6() : fourier_matrix(GroupSpec::cyclic(d));
    members.push_back(scramble(base, rng));
  }
  return HadamardFamily(std::move(members));
}

EquivalenceTransform random_transform(std::size_t d, std::mt19937_64 &rng) {
  EquivalenceTransform t{random_unitary(d, rng), random_unitary(d, rng), {}};
  for (std::size_t n = 0; n < d * d; ++n) {
    t.phases.push_back(random_phase(rng));
  }
  return t;
}

}  // namespace

TEST(properties, shift_multiply_over_random_inputs_is_ueb) {
  std::mt19937_64 rng(101);
  for (int n = 0; n < 60; ++n) {
    const std::size_t d = 1 + n % 6;
    const LatinSquare l = ueb::testing::random_latin_square(d, rng);
    const ErrorBasis b = shift_multiply(l, random_family(d, rng));
    const VerificationReport r = verify(b);
    EXPECT_TRUE(r.is_ueb) << "d=" << d;
    for (std::size_t a = 0; a < b.size(); ++a) {
      EXPECT_NEAR(std::abs(r.gram(a, a) - static_cast<double>(d)), 0.0, 1e-9);
    }
  }
}

TEST(properties, generalized_over_random_inputs_is_ueb) {
  std::mt19937_64 rng(102);
  for (int n = 0; n < 30; ++n) {
    const std::size_t d = 2 + n % 5;
    const LatinSquare l = normalize_to_loop(ueb::testing::random_latin_square(d, rng)).first;
    const HadamardFamily fam = random_family(d, rng);
    const std::size_t k = n % d;
    const GeneralizedLSStructure g = generalized_ls_mult(l, fam, k);
    EXPECT_EQ(check_ls_unitarity(g.mult, standard_structure(d)), std::make_pair(true, true));
    for (std::size_t j = 0; j < d; ++j) {
      const Matrix dj = d_j_matrix(g, l, j);
      EXPECT_LT(off_diagonal_mass(dj), 1e-9);
      EXPECT_TRUE(is_unitary(dj));
    }
    EXPECT_TRUE(verify(generalized_shift_multiply(l, fam, k)).is_ueb) << "d=" << d;
  }
}

TEST(properties, latin_structures_satisfy_the_full_axiom_set) {
  std::mt19937_64 rng(103);
  for (int n = 0; n < 40; ++n) {
    const std::size_t d = 1 + n % 6;
    const LatinSquare l = normalize_to_loop(ueb::testing::random_latin_square(d, rng)).first;
    const LatinSquareStructure s = ls_structure(l);
    const ClassicalStructure black = standard_structure(d);
    const Matrix id = Matrix::identity(d);
    EXPECT_TRUE(check_bialgebra(s.mult, black, {}, s.unit));
    EXPECT_TRUE(check_duality(s.mult, black));
    EXPECT_TRUE(approx_equal(s.mult * kron(s.unit, id), id));
    EXPECT_TRUE(approx_equal(s.mult * kron(id, s.unit), id));
    EXPECT_EQ(check_ls_unitarity(s.mult, black), std::make_pair(true, true));
  }
}

TEST(properties, non_latin_tables_fail_unitarity) {
  std::mt19937_64 rng(104);
  int checked = 0;
  for (int n = 0; n < 200 && checked < 40; ++n) {
    const std::size_t d = 2 + n % 4;
    std::uniform_int_distribution<std::size_t> sym(0, d - 1);
    std::vector<std::vector<Symbol>> t(d, std::vector<Symbol>(d));
    for (auto &row : t) {
      for (auto &x : row) {
        x = sym(rng);
      }
    }
    bool rows_ok = true, cols_ok = true;
    for (std::size_t a = 0; a < d; ++a) {
      std::vector<bool> rs(d, false), cs(d, false);
      for (std::size_t b = 0; b < d; ++b) {
        rows_ok = rows_ok && !rs[t[a][b]];
        rs[t[a][b]] = true;
        cols_ok = cols_ok && !cs[t[b][a]];
        cs[t[b][a]] = true;
      }
    }
    const auto [u1, u2] = check_ls_unitarity(table_mult(t), standard_structure(d));
    EXPECT_EQ(u1, cols_ok);
    EXPECT_EQ(u2, rows_ok);
    ++checked;
  }
}

TEST(properties, transforms_preserve_ueb_and_fingerprint) {
  std::mt19937_64 rng(105);
  for (int n = 0; n < 20; ++n) {
    const std::size_t d = 2 + n % 3;
    const ErrorBasis b = shift_multiply(ueb::testing::random_latin_square(d, rng), random_family(d, rng));
    const ErrorBasis t = apply_transform(b, random_transform(d, rng));
    EXPECT_TRUE(verify(t).is_ueb);
    EXPECT_TRUE(fingerprints_match(fingerprint(b), fingerprint(t)));
  }
  ErrorBasis broken = pauli_basis(0.0);
  broken.elements[2] = Matrix::identity(2);
  EXPECT_FALSE(verify(apply_transform(broken, random_transform(2, rng))).is_ueb);
}

TEST(properties, normalize_d2_is_idempotent_on_random_bases) {
  std::mt19937_64 rng(106);
  for (int n = 0; n < 50; ++n) {
    const ErrorBasis scrambled = apply_transform(
        shift_multiply(cayley_table(GroupSpec::cyclic(2)), random_family(2, rng)), random_transform(2, rng));
    const ErrorBasis once = normalize_d2(scrambled).basis;
    const ErrorBasis twice = normalize_d2(once).basis;
    for (std::size_t a = 0; a < 4; ++a) {
      EXPECT_LT(max_abs_diff(once.elements[a], canonical_pauli().elements[a]), 1e-9);
      EXPECT_LT(max_abs_diff(twice.elements[a], once.elements[a]), 1e-12);
    }
  }
}

TEST(properties, teleport_with_random_bases) {
  std::mt19937_64 rng(107);
  for (int n = 0; n < 12; ++n) {
    const std::size_t d = 2 + n % 5;
    const ErrorBasis b = apply_transform(
        shift_multiply(ueb::testing::random_latin_square(d, rng), random_family(d, rng)),
        random_transform(d, rng));
    const TeleportSweep s = teleport_sweep(b, 25, static_cast<std::uint64_t>(n));
    EXPECT_TRUE(s.passed) << "d=" << d;
    EXPECT_LE(s.max_probability_defect, 1e-9);
  }
}

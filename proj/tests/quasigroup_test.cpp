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


#include "ueb/quasigroup.hpp"

#include <random>

#include "gtest/gtest.h"

#include "test_util.hpp"
#include "ueb/fixtures.hpp"

using namespace ueb;
using Table = std::vector<std::vector<long long>>;

TEST(quasigroup, validate_accepts_latin_squares) {
  EXPECT_EQ(d6_latin_square().order(), 6u);
  EXPECT_EQ(LatinSquare::validate(Table{{0, 1}, {1, 0}}).order(), 2u);
}

TEST(quasigroup, validate_names_the_offending_line) {
  try {
    LatinSquare::validate(Table{{0, 1}, {0, 1}});
    FAIL() << "expected a column duplicate";
  } catch (const ValidationError &e) {
    EXPECT_NE(std::string(e.what()).find("column 0"), std::string::npos) << e.what();
  }
  try {
    LatinSquare::validate(Table{{0, 0}, {1, 1}});
    FAIL() << "expected a row duplicate";
  } catch (const ValidationError &e) {
    EXPECT_NE(std::string(e.what()).find("row 0"), std::string::npos) << e.what();
  }
  EXPECT_THROW(LatinSquare::validate(Table{{0, 2}, {2, 0}}), ValidationError);
  EXPECT_THROW(LatinSquare::validate(Table{{0, -1}, {1, 0}}), ValidationError);
  EXPECT_THROW(LatinSquare::validate(Table{{0, 1}, {1}}), ValidationError);
  EXPECT_THROW(LatinSquare::validate(Table{}), ValidationError);
}

TEST(quasigroup, divisions) {
  const LatinSquare z2 = cayley_table(GroupSpec::cyclic(2));
  EXPECT_EQ(left_divide(z2, 1, 0), 1u);
  EXPECT_EQ(right_divide(z2, 0, 1), 1u);
  const LatinSquare l = d6_latin_square();
  EXPECT_EQ(left_divide(l, 1, 4), 2u);
  EXPECT_EQ(right_divide(l, 4, 2), 1u);
}

TEST(quasigroup, division_round_trips) {
  for (const auto &l : ueb::testing::latin_corpus()) {
    for (Symbol a = 0; a < l.order(); ++a) {
      for (Symbol b = 0; b < l.order(); ++b) {
        EXPECT_EQ(left_divide(l, a, l(a, b)), b);
        EXPECT_EQ(right_divide(l, l(a, b), b), a);
        EXPECT_EQ(l(a, left_divide(l, a, b)), b);
        EXPECT_EQ(l(right_divide(l, a, b), b), a);
      }
    }
  }
}

TEST(quasigroup, associativity) {
  EXPECT_TRUE(is_associative(cayley_table(GroupSpec::cyclic(6))));
  EXPECT_TRUE(is_associative(cayley_table(GroupSpec::cyclic(2))));
  EXPECT_FALSE(is_associative(d6_latin_square()));
  for (std::size_t n = 1; n <= 12; ++n) {
    EXPECT_TRUE(is_associative(cayley_table(GroupSpec::cyclic(n)))) << n;
  }
  EXPECT_TRUE(is_associative(cayley_table(GroupSpec::parse("Z2xZ2xZ3"))));
}

TEST(quasigroup, cayley_tables) {
  EXPECT_EQ(cayley_table(GroupSpec::cyclic(2)).table(),
            (std::vector<std::vector<Symbol>>{{0, 1}, {1, 0}}));
  EXPECT_EQ(cayley_table(GroupSpec::cyclic(3)).table(),
            (std::vector<std::vector<Symbol>>{{0, 1, 2}, {1, 2, 0}, {2, 0, 1}}));
  const LatinSquare klein = cayley_table(GroupSpec::parse("Z2xZ2"));
  for (Symbol a = 0; a < 4; ++a) {
    EXPECT_EQ(klein(a, a), 0u);
  }
  EXPECT_TRUE(klein.is_loop());
}

TEST(quasigroup, group_spec_parsing) {
  EXPECT_EQ(GroupSpec::parse("Z6").factors, (std::vector<std::size_t>{6}));
  EXPECT_EQ(GroupSpec::parse("z2 x Z3").factors, (std::vector<std::size_t>{2, 3}));
  EXPECT_EQ(GroupSpec::parse("Z2xZ2").to_string(), "Z2xZ2");
  EXPECT_THROW(GroupSpec::parse("Q8"), ValidationError);
  EXPECT_THROW(GroupSpec::parse("Z0"), ValidationError);
  EXPECT_THROW(GroupSpec::parse("Z2x"), ValidationError);
  const GroupSpec g = GroupSpec::parse("Z2xZ3");
  EXPECT_EQ(g.encode({1, 2}), 5u);
  EXPECT_EQ(g.decode(4), (std::vector<std::size_t>{1, 1}));
}

TEST(quasigroup, isotope) {
  const LatinSquare z2 = cayley_table(GroupSpec::cyclic(2));
  EXPECT_EQ(isotope(z2, Isotopy::identity(2)), z2);
  Isotopy swap_rows = Isotopy::identity(2);
  swap_rows.row_perm = {1, 0};
  EXPECT_EQ(isotope(z2, swap_rows).table(), (std::vector<std::vector<Symbol>>{{1, 0}, {0, 1}}));
  Isotopy bad = Isotopy::identity(2);
  bad.sym_perm = {0, 0};
  EXPECT_THROW(isotope(z2, bad), ValidationError);
}

TEST(quasigroup, symbol_inversion_isotope) {
  const GroupSpec g = GroupSpec::cyclic(5);
  Isotopy iso = Isotopy::identity(5);
  iso.sym_perm = inversion_permutation(g);
  const LatinSquare inv = isotope(cayley_table(g), iso);
  for (Symbol a = 0; a < 5; ++a) {
    for (Symbol b = 0; b < 5; ++b) {
      EXPECT_EQ(inv(a, b), (10 - a - b) % 5);
    }
  }
}

TEST(quasigroup, normalize_to_loop) {
  const LatinSquare l = d6_latin_square();
  const auto [same, iso] = normalize_to_loop(l);
  EXPECT_EQ(same, l);
  EXPECT_EQ(iso, Isotopy::identity(6));

  std::mt19937_64 rng(3);
  for (int n = 0; n < 40; ++n) {
    const LatinSquare r = ueb::testing::random_latin_square(5, rng);
    const auto [loop, applied] = normalize_to_loop(r);
    EXPECT_TRUE(loop.is_loop());
    EXPECT_EQ(isotope(r, applied), loop);
    EXPECT_EQ(isotope(loop, inverse(applied)), r);
  }
}

TEST(quasigroup, row_permutation_matrix) {
  const LatinSquare z2 = cayley_table(GroupSpec::cyclic(2));
  EXPECT_EQ(row_permutation_matrix(z2, 0), Matrix::identity(2));
  EXPECT_EQ(row_permutation_matrix(z2, 1), Matrix::from_rows({{0.0, 1.0}, {1.0, 0.0}}));

  // column 1 of the square: (a b)(c f)(d e)
  const Matrix p = row_permutation_matrix(d6_latin_square(), 1);
  const std::vector<std::size_t> image = {1, 0, 5, 4, 3, 2};
  for (std::size_t i = 0; i < 6; ++i) {
    EXPECT_EQ(p * Matrix::basis_vector(6, i), Matrix::basis_vector(6, image[i]));
  }
  for (const auto &l : ueb::testing::latin_corpus()) {
    for (Symbol j = 0; j < l.order(); ++j) {
      EXPECT_TRUE(is_unitary(row_permutation_matrix(l, j), Tolerance(0.0)));
    }
  }
  EXPECT_THROW(row_permutation_matrix(z2, 2), ValidationError);
}

TEST(quasigroup, random_squares_are_latin) {
  std::mt19937_64 rng(5);
  for (std::size_t d = 1; d <= 7; ++d) {
    const LatinSquare l = ueb::testing::random_latin_square(d, rng);
    EXPECT_NO_THROW(LatinSquare::from_symbols(l.table()));
    Isotopy iso = Isotopy::identity(d);
    std::shuffle(iso.row_perm.begin(), iso.row_perm.end(), rng);
    std::shuffle(iso.col_perm.begin(), iso.col_perm.end(), rng);
    std::shuffle(iso.sym_perm.begin(), iso.sym_perm.end(), rng);
    EXPECT_NO_THROW(isotope(l, iso));
  }
}

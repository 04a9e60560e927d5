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

// Latin squares read as multiplication tables of finite quasigroups.
// table[r][c] = r * c; symbols are always 0..d-1.

#pragma once

#include <cctype>
#include <cstddef>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "ueb/errors.hpp"
#include "ueb/linalg.hpp"

namespace ueb {

using Symbol = std::size_t;
using Permutation = std::vector<std::size_t>;

inline bool is_permutation(const Permutation &p) {
  std::vector<bool> seen(p.size(), false);
  for (auto x : p) {
    if (x >= p.size() || seen[x]) {
      return false;
    }
    seen[x] = true;
  }
  return true;
}

inline Permutation identity_permutation(std::size_t n) {
  Permutation p(n);
  std::iota(p.begin(), p.end(), std::size_t{0});
  return p;
}

inline Permutation inverse(const Permutation &p) {
  Permutation inv(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    inv[p[i]] = i;
  }
  return inv;
}

class LatinSquare {
 public:
  /// Accepts a d x d array iff every row and column is a permutation of 0..d-1.
  static LatinSquare validate(const std::vector<std::vector<long long>> &candidate) {
    const std::size_t d = candidate.size();
    if (d == 0) {
      throw ValidationError("latin square must have positive order");
    }
    std::vector<std::vector<Symbol>> table(d, std::vector<Symbol>(d));
    for (std::size_t r = 0; r < d; ++r) {
      if (candidate[r].size() != d) {
        throw ValidationError("row " + std::to_string(r) + " has " +
                              std::to_string(candidate[r].size()) + " entries, expected " +
                              std::to_string(d));
      }
      for (std::size_t c = 0; c < d; ++c) {
        const long long v = candidate[r][c];
        if (v < 0 || static_cast<std::size_t>(v) >= d) {
          throw ValidationError("symbol " + std::to_string(v) + " at (" + std::to_string(r) + "," +
                                std::to_string(c) + ") is outside 0.." + std::to_string(d - 1));
        }
        table[r][c] = static_cast<Symbol>(v);
      }
    }
    for (std::size_t r = 0; r < d; ++r) {
      std::vector<bool> seen(d, false);
      for (std::size_t c = 0; c < d; ++c) {
        if (seen[table[r][c]]) {
          throw ValidationError("duplicate symbol " + std::to_string(table[r][c]) + " in row " +
                                std::to_string(r));
        }
        seen[table[r][c]] = true;
      }
    }
    for (std::size_t c = 0; c < d; ++c) {
      std::vector<bool> seen(d, false);
      for (std::size_t r = 0; r < d; ++r) {
        if (seen[table[r][c]]) {
          throw ValidationError("duplicate symbol " + std::to_string(table[r][c]) + " in column " +
                                std::to_string(c));
        }
        seen[table[r][c]] = true;
      }
    }
    return LatinSquare(std::move(table));
  }

  static LatinSquare from_symbols(const std::vector<std::vector<Symbol>> &candidate) {
    std::vector<std::vector<long long>> wide;
    wide.reserve(candidate.size());
    for (const auto &row : candidate) {
      wide.emplace_back(row.begin(), row.end());
    }
    return validate(wide);
  }

  std::size_t order() const { return table_.size(); }

  /// r * c
  Symbol operator()(Symbol r, Symbol c) const { return table_[r][c]; }

  const std::vector<std::vector<Symbol>> &table() const { return table_; }

  /// Row 0 and column 0 are the identity, i.e. 0 is a two-sided unit.
  bool is_loop() const {
    for (std::size_t i = 0; i < order(); ++i) {
      if (table_[0][i] != i || table_[i][0] != i) {
        return false;
      }
    }
    return true;
  }

  friend bool operator==(const LatinSquare &, const LatinSquare &) = default;

 private:
  explicit LatinSquare(std::vector<std::vector<Symbol>> table) : table_(std::move(table)) {}

  std::vector<std::vector<Symbol>> table_;
};

/// Independent row, column and symbol relabelling.
struct Isotopy {
  Permutation row_perm;
  Permutation col_perm;
  Permutation sym_perm;

  static Isotopy identity(std::size_t d) {
    return {identity_permutation(d), identity_permutation(d), identity_permutation(d)};
  }

  friend bool operator==(const Isotopy &, const Isotopy &) = default;
};

inline Isotopy inverse(const Isotopy &iso) {
  return {inverse(iso.row_perm), inverse(iso.col_perm), inverse(iso.sym_perm)};
}

/// Unique b with a * b = c.
inline Symbol left_divide(const LatinSquare &l, Symbol a, Symbol c) {
  for (Symbol b = 0; b < l.order(); ++b) {
    if (l(a, b) == c) {
      return b;
    }
  }
  throw ValidationError("left_divide: symbol out of range");
}

/// Unique a with a * b = c.
inline Symbol right_divide(const LatinSquare &l, Symbol c, Symbol b) {
  for (Symbol a = 0; a < l.order(); ++a) {
    if (l(a, b) == c) {
      return a;
    }
  }
  throw ValidationError("right_divide: symbol out of range");
}

inline bool is_associative(const LatinSquare &l) {
  const std::size_t d = l.order();
  for (Symbol a = 0; a < d; ++a) {
    for (Symbol b = 0; b < d; ++b) {
      for (Symbol c = 0; c < d; ++c) {
        if (l(l(a, b), c) != l(a, l(b, c))) {
          return false;
        }
      }
    }
  }
  return true;
}

/// L'[r][c] = sym(L[row^-1(r)][col^-1(c)]).
inline LatinSquare isotope(const LatinSquare &l, const Isotopy &iso) {
  const std::size_t d = l.order();
  if (iso.row_perm.size() != d || iso.col_perm.size() != d || iso.sym_perm.size() != d ||
      !is_permutation(iso.row_perm) || !is_permutation(iso.col_perm) ||
      !is_permutation(iso.sym_perm)) {
    throw ValidationError("isotopy components must be permutations of 0.." + std::to_string(d - 1));
  }
  const Permutation row_inv = inverse(iso.row_perm);
  const Permutation col_inv = inverse(iso.col_perm);
  std::vector<std::vector<Symbol>> t(d, std::vector<Symbol>(d));
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t c = 0; c < d; ++c) {
      t[r][c] = iso.sym_perm[l(row_inv[r], col_inv[c])];
    }
  }
  return LatinSquare::from_symbols(t);
}

/// Loop isotope with unit 0: columns are permuted so row 0 reads 0..d-1, then
/// rows so column 0 reads 0..d-1. Symbols are untouched.
inline std::pair<LatinSquare, Isotopy> normalize_to_loop(const LatinSquare &l) {
  const std::size_t d = l.order();
  Isotopy iso = Isotopy::identity(d);
  for (std::size_t c = 0; c < d; ++c) {
    iso.col_perm[c] = l(0, c);
  }
  const LatinSquare by_columns = isotope(l, iso);
  for (std::size_t r = 0; r < d; ++r) {
    iso.row_perm[r] = by_columns(r, 0);
  }
  return {isotope(l, iso), iso};
}

/// Z_{n1} x ... x Z_{nk}; elements are encoded mixed-radix with the last factor
/// least significant.
struct GroupSpec {
  std::vector<std::size_t> factors;

  static GroupSpec cyclic(std::size_t n) { return GroupSpec{{n}}; }

  /// Parses "Z6", "Z2xZ2", "z2 x z3".
  static GroupSpec parse(const std::string &text) {
    GroupSpec g;
    std::size_t i = 0;
    auto skip_space = [&] {
      while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) {
        ++i;
      }
    };
    while (true) {
      skip_space();
      if (i >= text.size() || (text[i] != 'Z' && text[i] != 'z')) {
        throw ValidationError("bad group spec '" + text + "' (expected e.g. Z6 or Z2xZ2)");
      }
      ++i;
      std::size_t start = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        ++i;
      }
      if (start == i) {
        throw ValidationError("bad group spec '" + text + "': missing factor order");
      }
      const std::size_t n = std::stoul(text.substr(start, i - start));
      if (n == 0) {
        throw ValidationError("bad group spec '" + text + "': factor order must be >= 1");
      }
      g.factors.push_back(n);
      skip_space();
      if (i == text.size()) {
        break;
      }
      if (text[i] != 'x' && text[i] != 'X' && text[i] != '*') {
        throw ValidationError("bad group spec '" + text + "'");
      }
      ++i;
    }
    return g;
  }

  std::size_t order() const {
    std::size_t d = 1;
    for (auto n : factors) {
      d *= n;
    }
    return d;
  }

  std::vector<std::size_t> decode(std::size_t x) const {
    std::vector<std::size_t> digits(factors.size());
    for (std::size_t i = factors.size(); i-- > 0;) {
      digits[i] = x % factors[i];
      x /= factors[i];
    }
    return digits;
  }

  std::size_t encode(const std::vector<std::size_t> &digits) const {
    std::size_t x = 0;
    for (std::size_t i = 0; i < factors.size(); ++i) {
      x = x * factors[i] + digits[i] % factors[i];
    }
    return x;
  }

  std::size_t add(std::size_t x, std::size_t y) const {
    auto a = decode(x);
    const auto b = decode(y);
    for (std::size_t i = 0; i < a.size(); ++i) {
      a[i] = (a[i] + b[i]) % factors[i];
    }
    return encode(a);
  }

  std::size_t negate(std::size_t x) const {
    auto a = decode(x);
    for (std::size_t i = 0; i < a.size(); ++i) {
      a[i] = (factors[i] - a[i]) % factors[i];
    }
    return encode(a);
  }

  std::string to_string() const {
    std::string s;
    for (std::size_t i = 0; i < factors.size(); ++i) {
      s += (i ? "xZ" : "Z") + std::to_string(factors[i]);
    }
    return s;
  }

  void validate() const {
    if (factors.empty()) {
      throw ValidationError("group spec needs at least one factor");
    }
    for (auto n : factors) {
      if (n == 0) {
        throw ValidationError("group factor orders must be >= 1");
      }
    }
  }
};

inline LatinSquare cayley_table(const GroupSpec &g) {
  g.validate();
  const std::size_t d = g.order();
  std::vector<std::vector<Symbol>> t(d, std::vector<Symbol>(d));
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t c = 0; c < d; ++c) {
      t[r][c] = g.add(r, c);
    }
  }
  return LatinSquare::from_symbols(t);
}

/// The group inversion g -> g^-1 as a permutation of the encoded elements.
inline Permutation inversion_permutation(const GroupSpec &g) {
  Permutation p(g.order());
  for (std::size_t x = 0; x < p.size(); ++x) {
    p[x] = g.negate(x);
  }
  return p;
}

/// P_j with P_j|i> = |L[i][j]>.
inline Matrix row_permutation_matrix(const LatinSquare &l, Symbol j) {
  const std::size_t d = l.order();
  if (j >= d) {
    throw ValidationError("shift index " + std::to_string(j) + " out of range");
  }
  Matrix p(d, d);
  for (std::size_t i = 0; i < d; ++i) {
    p(l(i, j), i) = 1.0;
  }
  return p;
}

}  // namespace ueb

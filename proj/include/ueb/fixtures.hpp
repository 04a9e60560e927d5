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


// Built-in order-6 data: a non-associative loop and the published table of its
// generalised multiplication over the dephased C6 matrix. Symbols a..f are 0..5.

#pragma once

#include <cmath>
#include <vector>

#include "ueb/hadamard.hpp"
#include "ueb/linalg.hpp"
#include "ueb/quasigroup.hpp"

namespace ueb {

inline LatinSquare d6_latin_square() {
  return LatinSquare::validate({
      {0, 1, 2, 3, 4, 5},
      {1, 0, 4, 5, 2, 3},
      {2, 5, 1, 0, 3, 4},
      {3, 4, 0, 1, 5, 2},
      {4, 3, 5, 2, 1, 0},
      {5, 2, 3, 4, 0, 1},
  });
}

struct TableEntry {
  Symbol symbol = 0;
  Complex coefficient;
};

/// The generalised product a * b as printed, entry [a][b] = coefficient * symbol.
inline std::vector<std::vector<TableEntry>> reference_d6_generalized_table() {
  const Complex p = c6_parameter();
  const Complex q = std::conj(p);
  const Complex p2 = p * p, p3 = p2 * p, q2 = q * q, q3 = q2 * q;
  const Complex s = 1.0 / std::sqrt(6.0);
  enum : Symbol { a, b, c, d, e, f };
  return {
      {{a, 1.0}, {b, s}, {c, s}, {d, s}, {e, s}, {f, s}},
      {{b, s}, {a, -1.0}, {e, -q * s}, {f, -q2 * s}, {c, q2 * s}, {d, q * s}},
      {{c, s}, {f, -p * s}, {b, s}, {a, q2}, {d, -q3 * s}, {e, q2 * s}},
      {{d, s}, {e, -p2 * s}, {a, p2}, {b, -s}, {f, q2 * s}, {c, -q2 * s}},
      {{e, s}, {d, p2 * s}, {f, -p3 * s}, {c, p2 * s}, {b, s}, {a, -p}},
      {{f, s}, {c, p * s}, {d, p2 * s}, {e, -p2 * s}, {a, q}, {b, -s}},
  };
}

}  // namespace ueb

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


// Seeded random states, phases and unitaries for sweeps and property tests.

#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <random>
#include <vector>

#include "ueb/linalg.hpp"

namespace ueb {

using Rng = std::mt19937_64;

inline Complex random_gaussian(Rng &rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  const double re = n(rng);
  return {re, n(rng)};
}

inline Complex random_phase(Rng &rng) {
  std::uniform_real_distribution<double> u(0.0, 2.0 * kPi);
  return std::polar(1.0, u(rng));
}

/// Unit vector drawn from the unitarily invariant distribution.
inline Matrix random_state(std::size_t d, Rng &rng) {
  Matrix v(d, 1);
  for (std::size_t i = 0; i < d; ++i) {
    v(i, 0) = random_gaussian(rng);
  }
  return Complex(1.0 / frobenius_norm(v)) * v;
}

/// Gram-Schmidt on independent complex Gaussian columns.
inline Matrix random_unitary(std::size_t d, Rng &rng) {
  std::vector<Matrix> cols;
  cols.reserve(d);
  while (cols.size() < d) {
    Matrix v = random_state(d, rng);
    for (const auto &q : cols) {
      v = v - inner(q, v) * q;
    }
    for (const auto &q : cols) {
      v = v - inner(q, v) * q;
    }
    const double n = frobenius_norm(v);
    if (n < 1e-8) {
      continue;
    }
    cols.push_back(Complex(1.0 / n) * v);
  }
  return from_columns(cols);
}

}  // namespace ueb

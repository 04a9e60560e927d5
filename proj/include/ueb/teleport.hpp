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


// Teleportation through the maximally entangled resource with corrections
// taken from an error basis.
//
// Alice holds the input on wire x and half of (1/sqrt d) sum_k |kk> on wire y;
// Bob holds wire z. Outcome (i, j) is the projection of x,y onto
// (e_ij (x) I)|Phi>, after which Bob applies e_ij.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "ueb/error_basis.hpp"
#include "ueb/errors.hpp"
#include "ueb/linalg.hpp"
#include "ueb/random.hpp"

namespace ueb {

struct TeleportTrace {
  std::size_t i = 0;
  std::size_t j = 0;
  double outcome_probability = 0.0;
  double fidelity = 0.0;
};

inline std::vector<TeleportTrace> teleport_all_outcomes(const ErrorBasis &basis, const Matrix &state,
                                                        Tolerance tol = {}) {
  const std::size_t d = basis.dim;
  if (state.rows() != d || state.cols() != 1) {
    throw ShapeError("teleport: state must be a " + std::to_string(d) + "x1 vector");
  }
  if (std::abs(frobenius_norm(state) - 1.0) > tol.eps) {
    throw ValidationError("teleport: state must be normalised");
  }
  if (!verify(basis, tol).is_ueb) {
    throw ValidationError("teleport: corrections must form a unitary error basis");
  }
  const double root = 1.0 / std::sqrt(static_cast<double>(d));
  // psi (x) Phi, indexed (x * d + y) * d + z.
  std::vector<Complex> joint(d * d * d);
  for (std::size_t x = 0; x < d; ++x) {
    for (std::size_t k = 0; k < d; ++k) {
      joint[(x * d + k) * d + k] = state(x, 0) * root;
    }
  }
  std::vector<TeleportTrace> traces;
  traces.reserve(d * d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      const Matrix &e = basis.at(i, j);
      Matrix residual(d, 1);
      for (std::size_t x = 0; x < d; ++x) {
        for (std::size_t y = 0; y < d; ++y) {
          const Complex bell = std::conj(e(x, y) * root);
          for (std::size_t z = 0; z < d; ++z) {
            residual(z, 0) += bell * joint[(x * d + y) * d + z];
          }
        }
      }
      TeleportTrace t{i, j, 0.0, 1.0};
      const double norm = frobenius_norm(residual);
      t.outcome_probability = norm * norm;
      if (norm > 0.0) {
        const Matrix recovered = e * (Complex(1.0 / norm) * residual);
        t.fidelity = std::norm(inner(state, recovered));
      }
      traces.push_back(t);
    }
  }
  return traces;
}

struct TeleportSweep {
  std::size_t states = 0;
  double min_fidelity = 1.0;
  double max_probability_sum_defect = 0.0;
  double max_probability_defect = 0.0;
  bool passed = true;
};

/// Teleports `count` random states drawn from mt19937_64(seed).
inline TeleportSweep teleport_sweep(const ErrorBasis &basis, std::size_t count,
                                    std::uint64_t seed = 42, Tolerance tol = {}) {
  Rng rng(seed);
  const double uniform = 1.0 / static_cast<double>(basis.dim * basis.dim);
  TeleportSweep s;
  s.states = count;
  for (std::size_t n = 0; n < count; ++n) {
    const Matrix psi = random_state(basis.dim, rng);
    double total = 0.0;
    for (const auto &t : teleport_all_outcomes(basis, psi, tol)) {
      total += t.outcome_probability;
      s.min_fidelity = std::min(s.min_fidelity, t.fidelity);
      s.max_probability_defect =
          std::max(s.max_probability_defect, std::abs(t.outcome_probability - uniform));
    }
    s.max_probability_sum_defect = std::max(s.max_probability_sum_defect, std::abs(total - 1.0));
  }
  s.passed = 1.0 - s.min_fidelity <= tol.eps && s.max_probability_sum_defect <= tol.eps;
  return s;
}

}  // namespace ueb

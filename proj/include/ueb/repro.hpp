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


// Rebuilds the order-6 generalised table and compares it with the printed one.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

#include "ueb/error_basis.hpp"
#include "ueb/fixtures.hpp"
#include "ueb/hadamard.hpp"
#include "ueb/linalg.hpp"
#include "ueb/quasigroup.hpp"
#include "ueb/structures.hpp"

namespace ueb {

struct ReproEntry {
  std::size_t row = 0;
  std::size_t col = 0;
  Symbol symbol = 0;
  Complex coefficient;
  bool single_term = false;
  Symbol reference_symbol = 0;
  Complex reference_coefficient;
  bool symbol_match = false;
  bool coefficient_match = false;
};

struct ReproReport {
  std::vector<ReproEntry> entries;
  Complex scale_factor;
  std::size_t coefficient_mismatches = 0;
  bool symbols_match = false;
  bool coefficients_match = false;
  double max_d_off_diagonal = 0.0;
  double max_d_unitarity_defect = 0.0;
  bool d_matrices_ok = false;
  VerificationReport verification;

  bool ok() const { return symbols_match && d_matrices_ok && verification.is_ueb; }
};

/// Reads mult'(e_a (x) e_b) as coefficient * e_symbol.
inline std::vector<std::vector<TableEntry>> generalized_table(const GeneralizedLSStructure &s,
                                                              std::vector<std::vector<bool>> *single,
                                                              Tolerance tol = {}) {
  const std::size_t d = s.dim;
  std::vector<std::vector<TableEntry>> out(d, std::vector<TableEntry>(d));
  if (single) {
    single->assign(d, std::vector<bool>(d, false));
  }
  for (std::size_t a = 0; a < d; ++a) {
    for (std::size_t b = 0; b < d; ++b) {
      const std::size_t col = a * d + b;
      std::size_t best = 0;
      for (std::size_t r = 1; r < d; ++r) {
        if (std::abs(s.mult(r, col)) > std::abs(s.mult(best, col))) {
          best = r;
        }
      }
      bool alone = true;
      for (std::size_t r = 0; r < d; ++r) {
        if (r != best && std::abs(s.mult(r, col)) > tol.eps) {
          alone = false;
        }
      }
      out[a][b] = {best, s.mult(best, col)};
      if (single) {
        (*single)[a][b] = alone;
      }
    }
  }
  return out;
}

/// The factor kappa with reference = kappa * computed shared by the largest
/// group of entries.
inline Complex fit_scale_factor(const std::vector<Complex> &computed,
                                const std::vector<Complex> &reference, Tolerance tol = {}) {
  std::vector<Complex> ratios;
  for (std::size_t n = 0; n < computed.size(); ++n) {
    if (std::abs(computed[n]) > tol.eps) {
      ratios.push_back(reference[n] / computed[n]);
    }
  }
  if (ratios.empty()) {
    return 1.0;
  }
  std::size_t best = 0;
  std::size_t best_count = 0;
  for (std::size_t n = 0; n < ratios.size(); ++n) {
    const auto count = static_cast<std::size_t>(std::count_if(
        ratios.begin(), ratios.end(), [&](Complex r) { return std::abs(r - ratios[n]) <= tol.eps; }));
    if (count > best_count) {
      best = n;
      best_count = count;
    }
  }
  Complex sum{};
  for (const auto &r : ratios) {
    if (std::abs(r - ratios[best]) <= tol.eps) {
      sum += r;
    }
  }
  return sum / static_cast<double>(best_count);
}

inline ReproReport repro_d6(std::size_t k = 0, Tolerance tol = {}) {
  const LatinSquare l = d6_latin_square();
  const HadamardFamily fam = HadamardFamily::uniform(butson_c6());
  const GeneralizedLSStructure s = generalized_ls_mult(l, fam, k);
  const auto reference = reference_d6_generalized_table();
  std::vector<std::vector<bool>> single;
  const auto table = generalized_table(s, &single, tol);
  const std::size_t d = l.order();

  ReproReport rep;
  std::vector<Complex> computed, printed;
  rep.symbols_match = true;
  for (std::size_t a = 0; a < d; ++a) {
    for (std::size_t b = 0; b < d; ++b) {
      ReproEntry e;
      e.row = a;
      e.col = b;
      e.symbol = table[a][b].symbol;
      e.coefficient = table[a][b].coefficient;
      e.single_term = single[a][b];
      e.reference_symbol = reference[a][b].symbol;
      e.reference_coefficient = reference[a][b].coefficient;
      e.symbol_match = e.single_term && e.symbol == e.reference_symbol;
      rep.symbols_match = rep.symbols_match && e.symbol_match;
      computed.push_back(e.coefficient);
      printed.push_back(e.reference_coefficient);
      rep.entries.push_back(e);
    }
  }
  rep.scale_factor = fit_scale_factor(computed, printed, tol);
  for (auto &e : rep.entries) {
    e.coefficient_match = std::abs(rep.scale_factor * e.coefficient - e.reference_coefficient) <= tol.eps;
    if (!e.coefficient_match) {
      ++rep.coefficient_mismatches;
    }
  }
  rep.coefficients_match = rep.coefficient_mismatches == 0;

  std::vector<Matrix> d_mats;
  for (std::size_t j = 0; j < d; ++j) {
    d_mats.push_back(d_j_matrix(s, l, j));
    rep.max_d_off_diagonal = std::max(rep.max_d_off_diagonal, off_diagonal_mass(d_mats.back()));
    rep.max_d_unitarity_defect =
        std::max(rep.max_d_unitarity_defect, unitarity_defect(d_mats.back()));
  }
  rep.d_matrices_ok = rep.max_d_off_diagonal <= tol.eps && rep.max_d_unitarity_defect <= tol.eps;
  rep.verification = verify(generalized_shift_multiply(l, fam, d_mats), tol);
  return rep;
}

}  // namespace ueb

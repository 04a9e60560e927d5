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


// JSON encodings:
//   matrix  {"rows":R,"cols":C,"entries":[[re,im],...]}   row-major
//   latin   {"order":d,"table":[[...],...]}
//   family  {"order":d,"members":[<matrix>,...]}
//   basis   {"dim":d,"elements":[[i,j,<matrix>],...]}

#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <json.hpp>

#include "ueb/error_basis.hpp"
#include "ueb/errors.hpp"
#include "ueb/hadamard.hpp"
#include "ueb/linalg.hpp"
#include "ueb/quasigroup.hpp"

namespace ueb {

using Json = nlohmann::json;

namespace detail {

inline const Json &field(const Json &j, const char *key, const char *what) {
  if (!j.is_object() || !j.contains(key)) {
    throw ValidationError(std::string(what) + " JSON is missing \"" + key + "\"");
  }
  return j.at(key);
}

inline std::size_t positive_size(const Json &j, const char *key, const char *what) {
  const Json &v = field(j, key, what);
  if (!v.is_number_integer() || v.get<long long>() <= 0) {
    throw ValidationError(std::string(what) + " JSON field \"" + key +
                          "\" must be a positive integer");
  }
  return v.get<std::size_t>();
}

}  // namespace detail

inline Json matrix_to_json(const Matrix &m) {
  Json entries = Json::array();
  for (const auto &z : m.entries()) {
    entries.push_back({z.real(), z.imag()});
  }
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

inline Matrix matrix_from_json(const Json &j) {
  const std::size_t rows = detail::positive_size(j, "rows", "matrix");
  const std::size_t cols = detail::positive_size(j, "cols", "matrix");
  const Json &entries = detail::field(j, "entries", "matrix");
  if (!entries.is_array() || entries.size() != rows * cols) {
    throw ShapeError("matrix JSON needs " + std::to_string(rows * cols) + " entries");
  }
  std::vector<Complex> data;
  data.reserve(entries.size());
  for (const auto &e : entries) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number()) {
      throw ValidationError("matrix JSON entries must be [re, im] pairs");
    }
    data.emplace_back(e[0].get<double>(), e[1].get<double>());
  }
  return Matrix(rows, cols, std::move(data));
}

inline Json latin_to_json(const LatinSquare &l) {
  return {{"order", l.order()}, {"table", l.table()}};
}

inline LatinSquare latin_from_json(const Json &j) {
  const std::size_t d = detail::positive_size(j, "order", "latin square");
  const Json &table = detail::field(j, "table", "latin square");
  std::vector<std::vector<long long>> rows;
  if (!table.is_array()) {
    throw ValidationError("latin square JSON \"table\" must be an array of rows");
  }
  for (const auto &row : table) {
    if (!row.is_array()) {
      throw ValidationError("latin square JSON rows must be arrays");
    }
    std::vector<long long> r;
    for (const auto &v : row) {
      if (!v.is_number_integer()) {
        throw ValidationError("latin square JSON symbols must be integers");
      }
      r.push_back(v.get<long long>());
    }
    rows.push_back(std::move(r));
  }
  if (rows.size() != d) {
    throw ValidationError("latin square JSON declares order " + std::to_string(d) + " but has " +
                          std::to_string(rows.size()) + " rows");
  }
  return LatinSquare::validate(rows);
}

inline Json family_to_json(const HadamardFamily &fam) {
  Json members = Json::array();
  for (const auto &h : fam.members()) {
    members.push_back(matrix_to_json(h.matrix()));
  }
  return {{"order", fam.order()}, {"members", members}};
}

inline HadamardFamily family_from_json(const Json &j, Tolerance tol = {}) {
  const std::size_t d = detail::positive_size(j, "order", "family");
  const Json &members = detail::field(j, "members", "family");
  if (!members.is_array() || members.size() != d) {
    throw ValidationError("family JSON needs " + std::to_string(d) + " members");
  }
  std::vector<HadamardMatrix> hs;
  for (const auto &m : members) {
    hs.push_back(HadamardMatrix::from(matrix_from_json(m), tol));
  }
  return HadamardFamily(std::move(hs));
}

inline Json basis_to_json(const ErrorBasis &b) {
  Json elements = Json::array();
  for (std::size_t i = 0; i < b.dim; ++i) {
    for (std::size_t j = 0; j < b.dim; ++j) {
      elements.push_back({i, j, matrix_to_json(b.at(i, j))});
    }
  }
  return {{"dim", b.dim}, {"elements", elements}};
}

inline ErrorBasis basis_from_json(const Json &j) {
  const std::size_t d = detail::positive_size(j, "dim", "basis");
  const Json &elements = detail::field(j, "elements", "basis");
  if (!elements.is_array() || elements.size() != d * d) {
    throw ValidationError("basis JSON needs " + std::to_string(d * d) + " elements");
  }
  std::vector<Matrix> mats(d * d);
  std::vector<bool> seen(d * d, false);
  for (const auto &e : elements) {
    if (!e.is_array() || e.size() != 3 || !e[0].is_number_integer() ||
        !e[1].is_number_integer()) {
      throw ValidationError("basis JSON elements must be [i, j, matrix]");
    }
    const long long i = e[0].get<long long>();
    const long long k = e[1].get<long long>();
    if (i < 0 || k < 0 || static_cast<std::size_t>(i) >= d || static_cast<std::size_t>(k) >= d) {
      throw ValidationError("basis JSON element index out of range");
    }
    const std::size_t slot = static_cast<std::size_t>(i) * d + static_cast<std::size_t>(k);
    if (seen[slot]) {
      throw ValidationError("basis JSON repeats element (" + std::to_string(i) + "," +
                            std::to_string(k) + ")");
    }
    seen[slot] = true;
    mats[slot] = matrix_from_json(e[2]);
  }
  return ErrorBasis(d, std::move(mats));
}

inline Json report_to_json(const VerificationReport &r) {
  return {{"all_unitary", r.all_unitary},
          {"is_ueb", r.is_ueb},
          {"max_unitarity_defect", r.max_unitarity_defect},
          {"max_orthogonality_defect", r.max_orthogonality_defect},
          {"gram", matrix_to_json(r.gram)}};
}

/// Parses text, turning syntax errors into ValidationError.
inline Json parse_json(const std::string &text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception &e) {
    throw ValidationError(std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace ueb

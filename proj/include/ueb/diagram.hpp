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

// Numerical evaluation of string diagrams over C^d.
//
// A Diagram is a bottom-to-top sequence of layers acting on a row of wires,
// each wire carrying C^d. A layer either applies a map to a contiguous block
// of wires (states and effects are maps with zero inputs or outputs) or
// permutes the wires. evaluate() returns the composite as a
// d^outputs x d^inputs matrix by pushing every input basis vector through the
// layers, so intermediate tensor powers never materialise as matrices.

#pragma once

#include <cstddef>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "ueb/errors.hpp"
#include "ueb/linalg.hpp"

namespace ueb {

inline std::size_t ipow(std::size_t base, std::size_t exp) {
  std::size_t r = 1;
  while (exp-- > 0) {
    r *= base;
  }
  return r;
}

class Diagram {
 public:
  Diagram(std::size_t dim, std::size_t inputs) : dim_(dim), inputs_(inputs), wires_(inputs) {
    if (dim == 0) {
      throw ShapeError("diagram wire dimension must be positive");
    }
  }

  /// Applies `op` (d^arity_out x d^arity_in) to wires [first, first + arity_in).
  Diagram &apply(const Matrix &op, std::size_t first, std::size_t arity_in, std::size_t arity_out) {
    if (first + arity_in > wires_) {
      throw ShapeError("diagram layer reaches past the last wire");
    }
    if (op.rows() != ipow(dim_, arity_out) || op.cols() != ipow(dim_, arity_in)) {
      throw ShapeError("diagram layer has shape " + std::to_string(op.rows()) + "x" +
                       std::to_string(op.cols()) + ", expected d^" + std::to_string(arity_out) +
                       " x d^" + std::to_string(arity_in));
    }
    layers_.push_back(Layer{Layer::Kind::kApply, op, first, arity_in, arity_out, {}, {}});
    wires_ = wires_ - arity_in + arity_out;
    return *this;
  }

  /// New wire k carries what old wire perm[k] carried.
  Diagram &permute(std::vector<std::size_t> perm) {
    if (perm.size() != wires_) {
      throw ShapeError("wire permutation has wrong length");
    }
    std::vector<bool> seen(wires_, false);
    for (auto p : perm) {
      if (p >= wires_ || seen[p]) {
        throw ShapeError("wire permutation is not a bijection");
      }
      seen[p] = true;
    }
    layers_.push_back(Layer{Layer::Kind::kPermute, Matrix{}, 0, 0, 0, std::move(perm), {}});
    return *this;
  }

  Diagram &scale(Complex s) {
    layers_.push_back(Layer{Layer::Kind::kScale, Matrix{}, 0, 0, 0, {}, s});
    return *this;
  }

  std::size_t dim() const { return dim_; }
  std::size_t inputs() const { return inputs_; }
  std::size_t outputs() const { return wires_; }

  Matrix evaluate() const {
    const std::size_t in_size = ipow(dim_, inputs_);
    const std::size_t out_size = ipow(dim_, wires_);
    Matrix out(out_size, in_size);
    for (std::size_t x = 0; x < in_size; ++x) {
      std::vector<Complex> state(in_size);
      state[x] = 1.0;
      std::size_t n = inputs_;
      for (const auto &layer : layers_) {
        state = run_layer(layer, state, n);
      }
      for (std::size_t y = 0; y < out_size; ++y) {
        out(y, x) = state[y];
      }
    }
    return out;
  }

 private:
  struct Layer {
    enum class Kind { kApply, kPermute, kScale };
    Kind kind;
    Matrix op;
    std::size_t first;
    std::size_t arity_in;
    std::size_t arity_out;
    std::vector<std::size_t> perm;
    Complex factor;
  };

  std::vector<Complex> run_layer(const Layer &layer, const std::vector<Complex> &state,
                                 std::size_t &n) const {
    switch (layer.kind) {
      case Layer::Kind::kScale: {
        std::vector<Complex> out = state;
        for (auto &z : out) {
          z *= layer.factor;
        }
        return out;
      }
      case Layer::Kind::kPermute: {
        std::vector<Complex> out(state.size());
        std::vector<std::size_t> old_digits(n);
        for (std::size_t idx = 0; idx < state.size(); ++idx) {
          std::size_t rest = idx;
          for (std::size_t w = n; w-- > 0;) {
            old_digits[w] = rest % dim_;
            rest /= dim_;
          }
          std::size_t new_idx = 0;
          for (std::size_t w = 0; w < n; ++w) {
            new_idx = new_idx * dim_ + old_digits[layer.perm[w]];
          }
          out[new_idx] = state[idx];
        }
        return out;
      }
      case Layer::Kind::kApply: {
        const std::size_t prefix = ipow(dim_, layer.first);
        const std::size_t mid_in = ipow(dim_, layer.arity_in);
        const std::size_t mid_out = ipow(dim_, layer.arity_out);
        const std::size_t suffix = ipow(dim_, n - layer.first - layer.arity_in);
        std::vector<Complex> out(prefix * mid_out * suffix);
        for (std::size_t p = 0; p < prefix; ++p) {
          for (std::size_t i = 0; i < mid_in; ++i) {
            for (std::size_t s = 0; s < suffix; ++s) {
              const Complex v = state[(p * mid_in + i) * suffix + s];
              if (v == Complex{}) {
                continue;
              }
              for (std::size_t o = 0; o < mid_out; ++o) {
                out[(p * mid_out + o) * suffix + s] += layer.op(o, i) * v;
              }
            }
          }
        }
        n = n - layer.arity_in + layer.arity_out;
        return out;
      }
    }
    return state;
  }

  std::size_t dim_;
  std::size_t inputs_;
  std::size_t wires_;
  std::vector<Layer> layers_;
};

}  // namespace ueb

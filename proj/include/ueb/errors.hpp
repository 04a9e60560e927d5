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

#pragma once

#include <stdexcept>
#include <string>

namespace ueb {

/// Operand dimensions do not fit the requested operation.
class ShapeError : public std::invalid_argument {
 public:
  explicit ShapeError(const std::string &what) : std::invalid_argument(what) {}
};

/// An input value violates a documented invariant (not latin, not unitary, ...).
class ValidationError : public std::invalid_argument {
 public:
  explicit ValidationError(const std::string &what) : std::invalid_argument(what) {}
};

}  // namespace ueb

// Copyright 2026 The cerny-lab Authors
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

#ifndef CERNYLAB_LINALG_HPP_
#define CERNYLAB_LINALG_HPP_

#include <optional>
#include <vector>

#include "cernylab/rational.hpp"

namespace cernylab::linalg {

using Matrix = std::vector<std::vector<Rational>>;

/// In-place reduced row echelon form; returns the pivot column indices.
std::vector<int> rref(Matrix& m);

int rank(Matrix m);

/// Basis of {x : m x = 0}.
std::vector<std::vector<Rational>> nullspace(const Matrix& m);

/// Unique solution of a square system, or nullopt when singular.
std::optional<std::vector<Rational>> solve_square(Matrix a, std::vector<Rational> b);

}  // namespace cernylab::linalg

#endif  // CERNYLAB_LINALG_HPP_

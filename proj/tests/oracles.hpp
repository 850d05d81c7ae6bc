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

// Test-only brute-force oracles.  These deliberately avoid the library's
// simplex and column-table search paths so they can certify them.

#ifndef CERNYLAB_TESTS_ORACLES_HPP_
#define CERNYLAB_TESTS_ORACLES_HPP_

#include <optional>
#include <vector>

#include "cernylab/automaton.hpp"
#include "cernylab/rational.hpp"

namespace cernylab::oracle {

/// Game value for the given 0/1 columns by exhaustive vertex enumeration
/// of {(p, k) : p A <= k e, sum p = 1, p >= 0}: every choice of n active
/// constraints is solved exactly and the minimum feasible k returned.
Rational game_value_by_vertex_enumeration(int n, const std::vector<StateVector>& columns);

/// Smallest t <= cap such that some word of length exactly t maps
/// min_weight states onto one; plain enumeration of all m^t words.
std::optional<int> rendezvous_by_word_enumeration(const Automaton& a, int min_weight, int cap);

/// All distinct columns of words of length <= t, by word enumeration.
std::vector<StateVector> reachable_columns_by_word_enumeration(const Automaton& a, int t);

}  // namespace cernylab::oracle

#endif  // CERNYLAB_TESTS_ORACLES_HPP_

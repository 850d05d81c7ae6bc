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

#ifndef CERNYLAB_FAMILIES_HPP_
#define CERNYLAB_FAMILIES_HPP_

#include <cstdint>
#include <optional>
#include <string>

#include "cernylab/automaton.hpp"

namespace cernylab {

/// Cerny automaton C_n (n >= 2): letter a maps q_n to q_1 and fixes the
/// rest, letter b is the cyclic shift q_i -> q_{i+1}.
Automaton cerny(int n);

/// The slow-triple-rendezvous family TR_n (n odd, n >= 9), generated
/// iteratively from the hard-coded 9-state base.  Extending from n to n+2
/// states: with l1 the letter fixing q_n and l2 the other, set
/// q_n l1 = q_{n+2}, q_{n+2} l1 = q_n, q_{n-1} l2 = q_{n+1},
/// q_{n+1} l2 = q_{n-1}, q_{n+2} l2 = q_{n+2}, q_{n+1} l1 = q_{n+1};
/// all other transitions are inherited.
Automaton tr(int n);

/// Uniform random automaton; deterministic for a fixed seed (SplitMix64
/// stream, one draw per (letter, state) in row-major order, target =
/// 1 + draw % n).  The generator is stable across releases.
Automaton random_automaton(int n, int m, std::uint64_t seed);

/// Builtin specs: "cerny:N", "tr:N", "random:N:M:SEED".
/// Returns nullopt when the string is not shaped like a builtin spec;
/// throws std::invalid_argument for a recognized kind with bad parameters.
std::optional<Automaton> parse_builtin(const std::string& spec);

}  // namespace cernylab

#endif  // CERNYLAB_FAMILIES_HPP_

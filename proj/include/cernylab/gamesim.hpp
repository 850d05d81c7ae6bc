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

#ifndef CERNYLAB_GAMESIM_HPP_
#define CERNYLAB_GAMESIM_HPP_

#include <cstdint>
#include <span>
#include <vector>

#include "cernylab/rational.hpp"
#include "cernylab/reachability.hpp"

namespace cernylab {

/// Samples a finite distribution with exact rational weights by CDF
/// inversion over a 64-bit uniform integer; boundary draws resolve to the
/// lower index.
class DiscreteSampler {
 public:
  explicit DiscreteSampler(std::span<const Rational> weights);
  int sample(std::uint64_t u) const;

 private:
  std::vector<Rational> cdf_;
};

struct GameConfig {
  int t = 0;
  std::vector<Rational> p;  // Player Two: distribution over states
  std::vector<Rational> q;  // Player One: distribution over table columns
  long rounds = 0;
  std::uint64_t seed = 0;
};

/// Exact win probability sum_j q_j (p . a_j) of Player One.
Rational expected_win(const Automaton& a, const ColumnTable& table,
                      const std::vector<Rational>& p, const std::vector<Rational>& q);

struct SimulationResult {
  long wins = 0;
  long rounds = 0;
  double frequency = 0.0;        // display only
  double stderr_estimate = 0.0;  // sqrt(f(1-f)/rounds), display only
};

/// Plays the game cfg.rounds times: Player Two draws a hidden state from p,
/// Player One draws a column (= its witness word plus target) from q and
/// wins when the word maps the hidden state onto the target.  The witness
/// word is applied for real, exercising column/word consistency.
/// Deterministic for a fixed seed.
SimulationResult simulate(const Automaton& a, const ColumnTable& table,
                          const GameConfig& cfg);

}  // namespace cernylab

#endif  // CERNYLAB_GAMESIM_HPP_

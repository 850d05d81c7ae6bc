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

#include "cernylab/gamesim.hpp"

#include <cmath>
#include <stdexcept>

#include "cernylab/rng.hpp"

namespace cernylab {

DiscreteSampler::DiscreteSampler(std::span<const Rational> weights) {
  Rational running;
  for (const Rational& w : weights) {
    if (w < Rational(0)) throw std::invalid_argument("DiscreteSampler: negative weight");
    running += w;
    cdf_.push_back(running);
  }
  if (cdf_.empty() || running != Rational(1))
    throw std::invalid_argument("DiscreteSampler: weights must sum to one");
}

int DiscreteSampler::sample(std::uint64_t u) const {
  Rational point(BigInt(u), BigInt(1) << 64);
  for (std::size_t i = 0; i < cdf_.size(); ++i)
    if (point <= cdf_[i]) return static_cast<int>(i);
  return static_cast<int>(cdf_.size()) - 1;  // unreachable: cdf back is 1
}

Rational expected_win(const Automaton& a, const ColumnTable& table,
                      const std::vector<Rational>& p, const std::vector<Rational>& q) {
  if (static_cast<int>(p.size()) != a.state_count() ||
      static_cast<int>(q.size()) != table.column_count())
    throw std::invalid_argument("expected_win: strategy dimension mismatch");
  Rational total;
  for (int j = 0; j < table.column_count(); ++j) {
    if (q[j] == Rational(0)) continue;
    Rational hit;
    for (int state : table.column(j).states()) hit += p[state - 1];
    total += q[j] * hit;
  }
  return total;
}

SimulationResult simulate(const Automaton& a, const ColumnTable& table,
                          const GameConfig& cfg) {
  if (cfg.rounds <= 0) throw std::invalid_argument("simulate: rounds must be positive");
  for (int j = 0; j < table.column_count(); ++j)
    if (cfg.q[j] > Rational(0) && table.meta(j).first_time > cfg.t)
      throw std::invalid_argument("simulate: strategy uses a word longer than the horizon");

  DiscreteSampler state_sampler(cfg.p);
  DiscreteSampler column_sampler(cfg.q);

  // Materialize words and targets once per column.
  std::vector<Word> words(table.column_count());
  std::vector<int> targets(table.column_count());
  for (int j = 0; j < table.column_count(); ++j) {
    if (cfg.q[j] == Rational(0)) continue;
    words[j] = table.witness_word(j);
    targets[j] = table.meta(j).target;
  }

  SplitMix64 rng(cfg.seed);
  SimulationResult result;
  result.rounds = cfg.rounds;
  for (long round = 0; round < cfg.rounds; ++round) {
    int hidden = 1 + state_sampler.sample(rng.next());
    int column = column_sampler.sample(rng.next());
    StateVector image = a.image_word(StateVector::single(a.state_count(), hidden), words[column]);
    if (image.contains(targets[column])) ++result.wins;
  }
  result.frequency = static_cast<double>(result.wins) / static_cast<double>(result.rounds);
  result.stderr_estimate =
      std::sqrt(result.frequency * (1.0 - result.frequency) / static_cast<double>(result.rounds));
  return result;
}

}  // namespace cernylab

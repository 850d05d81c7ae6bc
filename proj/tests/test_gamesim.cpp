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

#include "doctest.h"

#include "cernylab/families.hpp"
#include "cernylab/rng.hpp"
#include "cernylab/spf.hpp"

using namespace cernylab;

namespace {

std::vector<Rational> uniform(int n) { return std::vector<Rational>(n, Rational(1, n)); }

std::vector<Rational> point_mass(int size, int index) {
  std::vector<Rational> v(size, Rational(0));
  v[index] = Rational(1);
  return v;
}

std::vector<Rational> random_distribution(int size, SplitMix64& rng) {
  std::vector<long> weights(size);
  long total = 0;
  for (long& w : weights) total += (w = 1 + static_cast<long>(rng.next() % 10));
  std::vector<Rational> out;
  for (long w : weights) out.emplace_back(w, total);
  return out;
}

}  // namespace

TEST_SUITE_BEGIN("gamesim");

TEST_CASE("sampler inverts the exact cdf") {
  std::vector<Rational> w = {Rational(1, 2), Rational(1, 3), Rational(1, 6)};
  DiscreteSampler sampler(w);
  CHECK(sampler.sample(0) == 0);
  CHECK(sampler.sample(~std::uint64_t{0}) == 2);
  // Boundary at exactly 1/2 resolves to the lower index.
  CHECK(sampler.sample(std::uint64_t{1} << 63) == 0);
  CHECK(sampler.sample((std::uint64_t{1} << 63) + 1) == 1);
  CHECK_THROWS_AS(DiscreteSampler(std::vector<Rational>{Rational(1, 2)}),
                  std::invalid_argument);
}

TEST_CASE("expected win at the worked example") {
  Automaton c4 = cerny(4);
  ColumnTable t3 = columns_at(c4, 3);
  GameSolution sol = spf_at(c4, t3);
  CHECK(expected_win(c4, t3, sol.p, sol.q) == Rational(1, 2));

  // Uniform p against all mass on the column of "a" ({1,4}).
  CHECK(expected_win(c4, t3, uniform(4), point_mass(7, 4)) == Rational(1, 2));

  ColumnTable t0 = ColumnTable::initial(c4);
  CHECK(expected_win(c4, t0, uniform(4), point_mass(4, 2)) == Rational(1, 4));
}

TEST_CASE("minimax sandwich") {
  SplitMix64 rng(91);
  Automaton c4 = cerny(4);
  ColumnTable t3 = columns_at(c4, 3);
  GameSolution sol = spf_at(c4, t3);
  for (int trial = 0; trial < 30; ++trial) {
    auto p = random_distribution(4, rng);
    auto q = random_distribution(7, rng);
    CHECK(expected_win(c4, t3, sol.p, q) <= sol.k);
    CHECK(expected_win(c4, t3, p, sol.q) >= sol.k);
  }
}

TEST_CASE("simulation is deterministic per seed") {
  Automaton c4 = cerny(4);
  ColumnTable t3 = columns_at(c4, 3);
  GameSolution sol = spf_at(c4, t3);
  GameConfig cfg{3, sol.p, sol.q, 2000, 99};
  SimulationResult a = simulate(c4, t3, cfg);
  SimulationResult b = simulate(c4, t3, cfg);
  CHECK(a.wins == b.wins);
  cfg.seed = 100;
  SimulationResult c = simulate(c4, t3, cfg);
  MESSAGE("seed 99 wins: ", a.wins, ", seed 100 wins: ", c.wins);
}

TEST_CASE("a synchronizing column wins every round") {
  Automaton c4 = cerny(4);
  ColumnTable table = columns_at(c4, 9);
  int full_column = -1;
  for (int j = 0; j < table.column_count(); ++j)
    if (table.column(j).weight() == 4) full_column = j;
  REQUIRE(full_column >= 0);
  GameConfig cfg{9, uniform(4), point_mass(table.column_count(), full_column), 500, 7};
  SimulationResult result = simulate(c4, table, cfg);
  CHECK(result.wins == result.rounds);
}

TEST_CASE("a concentrated hidden state inside the chosen column always loses/wins") {
  Automaton c4 = cerny(4);
  ColumnTable t3 = columns_at(c4, 3);
  // Column 4 is {1,4}: hiding on state 1 always loses for Player Two.
  GameConfig cfg{3, point_mass(4, 0), point_mass(7, 4), 300, 11};
  CHECK(simulate(c4, t3, cfg).wins == 300);
  // Hiding on state 2 always wins for Player Two.
  cfg.p = point_mass(4, 1);
  CHECK(simulate(c4, t3, cfg).wins == 0);
}

TEST_CASE("empirical frequency concentrates around the exact value") {
  Automaton c4 = cerny(4);
  ColumnTable t3 = columns_at(c4, 3);
  GameSolution sol = spf_at(c4, t3);
  const long rounds = 100000;
  GameConfig cfg{3, sol.p, sol.q, rounds, 12345};
  SimulationResult result = simulate(c4, t3, cfg);
  double expected = expected_win(c4, t3, sol.p, sol.q).to_double();
  double sigma = std::sqrt(expected * (1 - expected) / static_cast<double>(rounds));
  CHECK(std::abs(result.frequency - expected) <= 4 * sigma);
}

TEST_CASE("strategies outliving the horizon are rejected") {
  Automaton c4 = cerny(4);
  ColumnTable t3 = columns_at(c4, 3);
  GameConfig cfg{2, uniform(4), point_mass(7, 6), 10, 1};  // col 6 needs t = 3
  CHECK_THROWS_AS(simulate(c4, t3, cfg), std::invalid_argument);
}

TEST_SUITE_END();

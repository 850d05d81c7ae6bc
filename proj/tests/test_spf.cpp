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

#include "cernylab/spf.hpp"

#include <algorithm>

#include "doctest.h"

#include "cernylab/families.hpp"
#include "cernylab/rng.hpp"
#include "oracles.hpp"

using namespace cernylab;

namespace {

StateVector set_of(int n, std::initializer_list<int> states) {
  StateVector v(n);
  for (int q : states) v.insert(q);
  return v;
}

Rational coverage(const std::vector<StateVector>& cols, const std::vector<Rational>& q,
                  int state) {
  Rational out;
  for (std::size_t j = 0; j < cols.size(); ++j)
    if (cols[j].contains(state)) out += q[j];
  return out;
}

bool table_has_full_column(const ColumnTable& table) {
  return table.max_weight() == table.state_count();
}

}  // namespace

TEST_SUITE_BEGIN("spf");

TEST_CASE("value at horizon zero is 1/n with uniform strategies") {
  for (int n : {1, 2, 5, 9}) {
    Automaton a = random_automaton(n, 2, 7);
    GameSolution sol = spf_at(a, ColumnTable::initial(a));
    CHECK(sol.k == Rational(1, n));
    for (const Rational& v : sol.p) CHECK(v == Rational(1, n));
    for (const Rational& v : sol.q) CHECK(v == Rational(1, n));
  }
}

TEST_CASE("the worked 4-state example at t=3") {
  Automaton c4 = cerny(4);
  ColumnTable t3 = columns_at(c4, 3);
  GameSolution sol = spf_at(c4, t3);
  CHECK(sol.k == Rational(1, 2));

  // The dual optimum is a single point: half on the column of "a", half
  // on the column of "bba".
  std::vector<Rational> expected_q = {0, 0, 0, 0, Rational(1, 2), 0, Rational(1, 2)};
  CHECK(sol.q == expected_q);

  // The uniform p attains the optimum.
  for (int j = 0; j < t3.column_count(); ++j) {
    Rational dot;
    for (int state : t3.column(j).states()) dot += Rational(1, 4);
    CHECK(dot <= sol.k);
  }
}

TEST_CASE("complementary slackness holds exactly") {
  SplitMix64 rng(31);
  int done = 0;
  for (int seed = 0; done < 20; ++seed) {
    Automaton a = random_automaton(3 + static_cast<int>(rng.next() % 5), 2, rng.next());
    (void)seed;
    ColumnTable table = columns_at(a, 4);
    GameSolution sol = spf_at(a, table);
    for (int j = 0; j < table.column_count(); ++j) {
      Rational slack = sol.k;
      for (int state : table.column(j).states()) slack -= sol.p[state - 1];
      CHECK(sol.q[j] * slack == Rational(0));
    }
    for (int state = 1; state <= a.state_count(); ++state) {
      Rational slack = coverage(table.columns(), sol.q, state) - sol.k;
      CHECK(sol.p[state - 1] * slack == Rational(0));
    }
    ++done;
  }
}

TEST_CASE("curve of the 4-state cyclic automaton matches the plot data") {
  auto curve = spf_curve(cerny(4), 9);
  REQUIRE(curve.size() == 10);
  std::vector<Rational> expected = {
      Rational(1, 4), Rational(1, 3), Rational(1, 3), Rational(1, 2), Rational(1, 2),
      Rational(1, 2), Rational(2, 3), Rational(2, 3), Rational(3, 4), Rational(1)};
  for (int t = 0; t <= 9; ++t) {
    CHECK(curve[t].t == t);
    CHECK(curve[t].k == expected[t]);
  }
  CHECK(curve[3].m == 7);
}

TEST_CASE("counterexample family values at the probe times") {
  CHECK(spf_at(tr(9), columns_at(tr(9), 11)).k == Rational(2, 9));
  CHECK(spf_at(tr(11), columns_at(tr(11), 13)).k == Rational(2, 11));
}

TEST_CASE("full 6-state cyclic curve") {
  auto curve = spf_curve(cerny(6), 25);
  const std::vector<Rational> expected = {
      Rational(1, 6), Rational(1, 5), Rational(1, 5), Rational(1, 4), Rational(1, 4),
      Rational(1, 3), Rational(1, 3), Rational(1, 3), Rational(2, 5), Rational(2, 5),
      Rational(1, 2), Rational(1, 2), Rational(1, 2), Rational(1, 2), Rational(1, 2),
      Rational(3, 5), Rational(3, 5), Rational(2, 3), Rational(2, 3), Rational(2, 3),
      Rational(3, 4), Rational(3, 4), Rational(4, 5), Rational(4, 5), Rational(5, 6),
      Rational(1)};
  REQUIRE(curve.size() == expected.size());
  for (std::size_t t = 0; t < expected.size(); ++t) CHECK(curve[t].k == expected[t]);
}

TEST_CASE("full 9-state counterexample curve") {
  auto curve = spf_curve(tr(9), 44);
  const std::vector<std::pair<long, long>> expected = {
      {1, 9},  {1, 8},  {1, 7},  {1, 6},  {1, 5},  {1, 5},  {1, 5},  {1, 5},  {1, 5},
      {2, 9},  {2, 9},  {2, 9},  {1, 4},  {2, 7},  {1, 3},  {1, 3},  {3, 8},  {2, 5},
      {2, 5},  {2, 5},  {3, 7},  {4, 9},  {4, 9},  {4, 9},  {1, 2},  {5, 9},  {5, 9},
      {5, 9},  {3, 5},  {3, 5},  {7, 11}, {2, 3},  {2, 3},  {2, 3},  {7, 10}, {3, 4},
      {7, 9},  {7, 9},  {4, 5},  {4, 5},  {5, 6},  {6, 7},  {7, 8},  {8, 9},  {1, 1}};
  REQUIRE(curve.size() == expected.size());
  for (std::size_t t = 0; t < expected.size(); ++t)
    CHECK(curve[t].k == Rational(expected[t].first, expected[t].second));
}

TEST_CASE("distinctive mid-curve values of the larger counterexamples") {
  // Awkward denominators make these strong end-to-end probes: the plotted
  // float data rounds to exactly these rationals.
  Automaton t11 = tr(11);
  ColumnTable table11 = columns_at(t11, 29);
  CHECK(spf_at(t11, table11).k == Rational(10, 23));
  for (int t = 30; t <= 35; ++t) table11.extend(t11);
  CHECK(spf_at(t11, table11).k == Rational(6, 11));

  Automaton t13 = tr(13);
  ColumnTable table13 = columns_at(t13, 38);
  CHECK(spf_at(t13, table13).k == Rational(22, 49));
}

TEST_CASE("curve is monotone and hits 1 exactly at the reset threshold") {
  SplitMix64 rng(41);
  int done = 0;
  for (int seed = 0; done < 12; ++seed) {
    Automaton a = random_automaton(2 + static_cast<int>(rng.next() % 5), 2, rng.next());
    if (!is_synchronizing(a)) continue;
    auto reset = shortest_reset_word(a, default_reset_cap(a.state_count()));
    REQUIRE(reset.has_value());
    int threshold = reset->length();
    auto curve = spf_curve(a, threshold + 2);
    ColumnTable table = ColumnTable::initial(a);
    for (int t = 0; t < static_cast<int>(curve.size()); ++t) {
      if (t > 0) {
        table.extend(a);
        CHECK(curve[t].k >= curve[t - 1].k);
      }
      CHECK((curve[t].k == Rational(1)) == (t >= threshold));
      CHECK((curve[t].k == Rational(1)) == table_has_full_column(table));
    }
    ++done;
  }
}

TEST_CASE("exact value agrees with vertex enumeration on small automata") {
  SplitMix64 rng(53);
  for (int trial = 0; trial < 12; ++trial) {
    Automaton a = random_automaton(3 + static_cast<int>(rng.next() % 2), 2, rng.next());
    ColumnTable table = ColumnTable::initial(a);
    for (int t = 0; t <= 6; ++t) {
      if (t > 0) table.extend(a);
      CHECK(spf_at(a, table).k ==
            oracle::game_value_by_vertex_enumeration(a.state_count(), table.columns()));
    }
  }
}

TEST_CASE("critical columns") {
  Automaton c4 = cerny(4);
  CHECK(critical_columns(c4, ColumnTable::initial(c4), Rational(1, 4)) ==
        std::vector<int>{0, 1, 2, 3});

  ColumnTable t3 = columns_at(c4, 3);
  CHECK(critical_columns(c4, t3, Rational(1, 2)) == std::vector<int>{4, 6});

  Automaton t9 = tr(9);
  ColumnTable t11 = columns_at(t9, 11);
  auto critical = critical_columns(t9, t11, Rational(2, 9));
  for (int j : critical) CHECK(t11.column(j).weight() <= 2);
  CHECK(!critical.empty());
}

TEST_CASE("polytope dimensions of the worked example") {
  Automaton c4 = cerny(4);
  ColumnTable t3 = columns_at(c4, 3);
  CHECK(polytope_dimension(c4, t3, Side::kDual, Rational(1, 2)) == 0);
  CHECK(polytope_dimension(c4, t3, Side::kPrimal, Rational(1, 2)) == 2);

  ColumnTable t0 = ColumnTable::initial(c4);
  CHECK(polytope_dimension(c4, t0, Side::kPrimal, Rational(1, 4)) == 0);
}

TEST_CASE("equal values force non-increasing primal dimension") {
  for (auto automaton : {cerny(4), cerny(5), cerny(6), tr(9), tr(11), tr(13)}) {
    int n = automaton.state_count();
    auto search = triple_rendezvous_time(automaton, default_t3_cap(n));
    REQUIRE(search.result.has_value());
    int t3 = search.result->t3;
    ColumnTable table = ColumnTable::initial(automaton);
    std::optional<Rational> previous_k;
    std::optional<int> previous_dim;
    for (int t = 1; t <= t3 - 1; ++t) {
      table.extend(automaton);
      GameSolution sol = spf_at(automaton, table);
      int dim = polytope_dimension(automaton, table, Side::kPrimal, sol.k);
      if (previous_k && sol.k == *previous_k) CHECK(dim <= *previous_dim);
      previous_k = sol.k;
      previous_dim = dim;
    }
  }
}

TEST_CASE("closed form from a decomposition") {
  // Two pairs on four vertices.
  Decomposition two_pairs{4, {}, {{1, 4}, {2, 3}}, {}};
  auto cert4 = k_from_decomposition(4, two_pairs);
  CHECK(cert4.k == Rational(1, 2));

  // Nine vertices, no singletons.
  Decomposition nine{9, {}, {{1, 2}, {3, 4}, {5, 6}}, {{7, 8, 9}}};
  CHECK(k_from_decomposition(9, nine).k == Rational(2, 9));

  // Pair plus 3-cycle on five vertices; cross-check against the LP oracle
  // on exactly the decomposition's incidence columns.
  Decomposition five{5, {}, {{1, 2}}, {{3, 4, 5}}};
  auto cert5 = k_from_decomposition(5, five);
  CHECK(cert5.k == Rational(2, 5));
  CHECK(oracle::game_value_by_vertex_enumeration(5, cert5.columns) == Rational(2, 5));

  // Singletons raise the value: 2/(n + n1).
  Decomposition with_singletons{4, {3, 4}, {{1, 2}}, {}};
  auto cert_s = k_from_decomposition(4, with_singletons);
  CHECK(cert_s.k == Rational(2, 6));
  CHECK(oracle::game_value_by_vertex_enumeration(4, cert_s.columns) == Rational(1, 3));

  CHECK_THROWS_AS(k_from_decomposition(4, Decomposition{4, {1}, {{1, 2}}, {}}),
                  std::invalid_argument);  // vertex reused
  CHECK_THROWS_AS(k_from_decomposition(4, Decomposition{4, {1, 2}, {}, {}}),
                  std::invalid_argument);  // vertices 3, 4 uncovered
  CHECK_THROWS_AS(k_from_decomposition(4, Decomposition{4, {}, {}, {{1, 2, 3, 4}}}),
                  std::invalid_argument);  // even cycle
}

TEST_CASE("degree-one reassignment on a star support") {
  // Center 1 with leaves 2, 3, 4; an optimal q touching every star edge.
  const int n = 4;
  std::vector<StateVector> cols;
  for (int q = 1; q <= n; ++q) cols.push_back(StateVector::single(n, q));
  cols.push_back(set_of(n, {1, 2}));  // col 4
  cols.push_back(set_of(n, {1, 3}));  // col 5
  cols.push_back(set_of(n, {1, 4}));  // col 6
  std::vector<Rational> q = {0,
                             Rational(1, 12),
                             Rational(1, 12),
                             Rational(1, 12),
                             Rational(1, 4),
                             Rational(1, 4),
                             Rational(1, 4)};
  const Rational k(1, 3);
  REQUIRE(oracle::game_value_by_vertex_enumeration(n, cols) == k);
  for (int state = 1; state <= n; ++state) CHECK(coverage(cols, q, state) >= k);

  auto rewritten = detail::degree_one_reassignment(n, cols, q, /*center=*/1, /*leaf=*/2);
  // The pair (1,2) detaches; the other star edges are zeroed with their
  // mass pushed to the far singletons.
  CHECK(rewritten[4] == Rational(1, 3));
  CHECK(rewritten[5] == Rational(0));
  CHECK(rewritten[6] == Rational(0));
  CHECK(rewritten[2] == Rational(1, 3));
  CHECK(rewritten[3] == Rational(1, 3));
  CHECK(rewritten[0] == Rational(0));
  CHECK(rewritten[1] == Rational(0));
  Rational total;
  for (const Rational& v : rewritten) total += v;
  CHECK(total == Rational(1));
  for (int state = 1; state <= n; ++state) CHECK(coverage(cols, rewritten, state) >= k);
}

TEST_CASE("even-cycle reassignment on a 4-cycle") {
  const int n = 4;
  std::vector<StateVector> cols;
  for (int q = 1; q <= n; ++q) cols.push_back(StateVector::single(n, q));
  cols.push_back(set_of(n, {1, 2}));  // col 4
  cols.push_back(set_of(n, {2, 3}));  // col 5
  cols.push_back(set_of(n, {3, 4}));  // col 6
  cols.push_back(set_of(n, {1, 4}));  // col 7
  std::vector<Rational> q = {0, 0, 0, 0, Rational(1, 4), Rational(1, 4), Rational(1, 4),
                             Rational(1, 4)};
  const Rational k(1, 2);
  auto rewritten = detail::even_cycle_reassignment(n, cols, q, {1, 2, 3, 4});
  CHECK(rewritten[4] == Rational(1, 2));
  CHECK(rewritten[6] == Rational(1, 2));
  CHECK(rewritten[5] == Rational(0));
  CHECK(rewritten[7] == Rational(0));
  for (int state = 1; state <= n; ++state) CHECK(coverage(cols, rewritten, state) >= k);
}

TEST_CASE("pipeline reassigns a minimal two-edge path") {
  // The support {1-2, 2-3} is minimal for value 1/2 (each edge covers an
  // endpoint nothing else reaches), so only the degree-one reassignment
  // can canonicalize it: pair {1,2} plus singleton 3.
  const int n = 3;
  std::vector<StateVector> cols;
  for (int q = 1; q <= n; ++q) cols.push_back(StateVector::single(n, q));
  StateVector e12(n), e23(n);
  e12.insert(1);
  e12.insert(2);
  e23.insert(2);
  e23.insert(3);
  cols.push_back(e12);
  cols.push_back(e23);
  std::vector<Rational> q = {0, 0, 0, Rational(1, 2), Rational(1, 2)};
  REQUIRE(oracle::game_value_by_vertex_enumeration(n, cols) == Rational(1, 2));

  CanonicalStrategy canon = detail::canonicalize_columns(n, cols, q, Rational(1, 2));
  const Decomposition& d = canon.support.decomposition;
  REQUIRE(d.pairs.size() == 1);
  CHECK(d.pairs[0] == std::pair<int, int>{1, 2});
  CHECK(d.singletons == std::vector<int>{3});
  CHECK(canon.q[3] == Rational(1, 2));  // the pair column
  CHECK(canon.q[2] == Rational(1, 2));  // singleton column of state 3
  CHECK(canon.q[4] == Rational(0));     // the zeroed path edge
  CHECK(k_from_decomposition(n, d).k == Rational(1, 2));
}

TEST_CASE("canonical support of the worked example is two pairs") {
  Automaton c4 = cerny(4);
  ColumnTable t3 = columns_at(c4, 3);
  GameSolution sol = spf_at(c4, t3);
  CanonicalStrategy canon = canonicalize_support(c4, t3, sol);
  CHECK(canon.support.decomposition.singletons.empty());
  CHECK(canon.support.decomposition.odd_cycles.empty());
  REQUIRE(canon.support.decomposition.pairs.size() == 2);
  CHECK(canon.support.decomposition.pairs[0] == std::pair<int, int>{1, 4});
  CHECK(canon.support.decomposition.pairs[1] == std::pair<int, int>{2, 3});
  CHECK(canon.q[4] == Rational(1, 2));
  CHECK(canon.q[6] == Rational(1, 2));
  CHECK(k_from_decomposition(4, canon.support.decomposition).k == sol.k);
}

TEST_CASE("canonical support at horizon zero is all singletons") {
  Automaton a = random_automaton(5, 2, 3);
  ColumnTable t0 = ColumnTable::initial(a);
  GameSolution sol = spf_at(a, t0);
  CanonicalStrategy canon = canonicalize_support(a, t0, sol);
  CHECK(canon.support.decomposition.singletons.size() == 5);
  CHECK(k_from_decomposition(5, canon.support.decomposition).k == Rational(2, 10));
}

TEST_CASE("canonicalization on builtins below the rendezvous time") {
  for (auto automaton : {cerny(4), cerny(5), cerny(6), tr(9)}) {
    int n = automaton.state_count();
    auto search = triple_rendezvous_time(automaton, default_t3_cap(n));
    REQUIRE(search.result.has_value());
    ColumnTable table = ColumnTable::initial(automaton);
    for (int t = 0; t < search.result->t3; ++t) {
      if (t > 0) table.extend(automaton);
      GameSolution sol = spf_at(automaton, table);
      CanonicalStrategy canon = canonicalize_support(automaton, table, sol);
      CHECK(k_from_decomposition(n, canon.support.decomposition).k == sol.k);
      // 2/(n + n1) with the decomposition's singleton count.
      long n1 = static_cast<long>(canon.support.decomposition.singletons.size());
      CHECK(sol.k == Rational(2, n + n1));
      int pairs = static_cast<int>(canon.support.decomposition.pairs.size());
      CHECK(polytope_dimension(automaton, table, Side::kPrimal, sol.k) <= pairs);
    }
  }
}

TEST_CASE("canonicalization rejects critical columns of weight three") {
  Automaton c4 = cerny(4);
  ColumnTable table = columns_at(c4, 9);  // reset threshold: k = 1
  GameSolution sol = spf_at(c4, table);
  CHECK(sol.k == Rational(1));
  CHECK_THROWS_AS(canonicalize_support(c4, table, sol), WeightTooHighError);
}

TEST_CASE("random canonicalizations preserve the objective") {
  SplitMix64 rng(67);
  int done = 0;
  for (int seed = 0; done < 15; ++seed) {
    Automaton a = random_automaton(3 + static_cast<int>(rng.next() % 4), 2, rng.next());
    auto search = triple_rendezvous_time(a, default_t3_cap(a.state_count()));
    if (!search.result || search.result->t3 < 2) continue;
    int t = search.result->t3 - 1;
    ColumnTable table = columns_at(a, t);
    GameSolution sol = spf_at(a, table);
    CanonicalStrategy canon = canonicalize_support(a, table, sol);
    long n1 = static_cast<long>(canon.support.decomposition.singletons.size());
    CHECK(sol.k == Rational(2, a.state_count() + n1));
    ++done;
  }
}

TEST_CASE("stagnation audit of the 4-state curve") {
  Automaton c4 = cerny(4);
  auto curve = spf_curve(c4, 9);
  StagnationReport report = stagnation_audit(4, curve, /*t3=*/5);
  CHECK(report.checked_upto == 4);
  CHECK(report.ok());
}

TEST_CASE("stagnation audit flags forged curves") {
  std::vector<CurvePoint> curve;
  for (int t = 0; t <= 6; ++t)
    curve.push_back({t, Rational(1, 3), 5, std::nullopt, std::nullopt});
  // 1/3 = 2/6 means s = 2 for n = 4: the run limit is floor(2/2)+1 = 2.
  StagnationReport report = stagnation_audit(4, curve, 7);
  CHECK(!report.ok());
  REQUIRE(report.violations.size() == 1);
  CHECK(report.violations[0].t == 1);

  std::vector<CurvePoint> bad_value = {{0, Rational(1, 4), 4, std::nullopt, std::nullopt},
                                       {1, Rational(3, 7), 5, std::nullopt, std::nullopt}};
  StagnationReport report2 = stagnation_audit(4, bad_value, 2);
  CHECK(!report2.ok());
}

TEST_CASE("audit applies to every builtin below its rendezvous time") {
  for (auto automaton : {cerny(4), cerny(6), tr(9)}) {
    int n = automaton.state_count();
    auto search = triple_rendezvous_time(automaton, default_t3_cap(n));
    REQUIRE(search.result.has_value());
    auto curve = spf_curve(automaton, search.result->t3 - 1);
    CHECK(stagnation_audit(n, curve, search.result->t3).ok());
  }
}

TEST_SUITE_END();

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

#ifndef CERNYLAB_BOUNDS_HPP_
#define CERNYLAB_BOUNDS_HPP_

#include <cstdint>
#include <optional>
#include <string>

#include "cernylab/automaton.hpp"
#include "cernylab/rational.hpp"
#include "cernylab/reachability.hpp"
#include "cernylab/spf.hpp"

namespace cernylab {

/// (n^3 - n)/6: reference upper bound on the reset threshold.
std::int64_t pin_frankl_bound(int n);

/// n(n-1)/2 + 1: counting bound on the triple rendezvous time.
std::int64_t t3_bound_naive(int n);

/// n(n+4)/4 - (n mod 2)/4, an exact integer.
std::int64_t t3_bound_quarter(int n);

/// max{ceil(n(s+2)/2), ceil((n(n+4) - (2s-1)(2s+3) + 1)/4)} for 1 <= s <= n/2.
std::int64_t t3_bound_combined(int n, int s);

/// floor(n(sqrt(5n^2+4n-12) - n + 6)/8) for n >= 4, via exact integer
/// square-root bracketing.  The bound is irrational; since T_3 is an
/// integer, comparisons use the floor.  Valid for strongly connected
/// synchronizing automata.
std::int64_t t3_bound_sqrt(int n);

/// Tarjan SCC count == 1 on the union transition digraph.
bool is_strongly_connected(const Automaton& a);

struct SpfConjectureViolation {
  int j;
  int t;
  Rational k;
  Rational threshold;  // j/(n-1)
};

/// Checks k(1 + (j-1)(n+1)) >= j/(n-1) for every j in 1..n-1 whose probe
/// time is covered by the curve; returns the first violation if any.
std::optional<SpfConjectureViolation> check_conjecture_spf(
    const Automaton& a, const std::vector<CurvePoint>& curve);

struct T3ConjectureCheck {
  bool holds;
  int t3;
  int limit;  // n + 2
};

T3ConjectureCheck check_conjecture_t3(const Automaton& a, const TrtResult& t3);

enum class LemmaStatus { kHolds, kVacuous, kSkipped, kInconclusive, kViolated };

std::string lemma_status_name(LemmaStatus s);

struct ZeroEntryReport {
  LemmaStatus status;
  int max_zero_entries = 0;   // max over explored words of zeros in eW
  std::size_t explored = 0;   // distinct full-set images visited
  std::string note;
};

/// If k(n) < 1/(n-s), every word of length <= n must leave fewer than s
/// empty preimage cells in eW.  Checked by BFS over distinct images of the
/// full state set, depth n.  Desk scale; subset_cap bounds the exploration.
ZeroEntryReport verify_zero_entry_lemma(const Automaton& a, int s, const Rational& k_n,
                                        std::size_t subset_cap = std::size_t{1} << 20);

struct DichotomyReport {
  LemmaStatus status;
  std::optional<Rational> k_n;
  std::optional<int> t3;
  std::string note;
};

/// For strongly connected synchronizing automata: asserts the disjunction
/// k(n) >= 1/(n-s) or T_3 <= n(s+2)/2, both sides exact.
DichotomyReport verify_dichotomy_lemma(const Automaton& a, int s);

struct BoundReport {
  int n = 0;
  std::int64_t pin_frankl = 0;
  std::int64_t t3_naive = 0;
  std::int64_t t3_quarter = 0;
  std::optional<std::int64_t> t3_sqrt;  // only for n >= 4
  bool strongly_connected = false;
  std::optional<int> reset_threshold;   // measured (with measure = true)
  std::optional<int> t3;                // measured
  std::optional<T3ConjectureCheck> t3_conjecture;
  std::optional<SpfConjectureViolation> spf_conjecture_violation;
  bool spf_conjecture_checked = false;
};

/// Bound table for one automaton; measure = true additionally computes the
/// reset threshold, T_3 and the conjecture verdicts (desk scale).
BoundReport bound_report(const Automaton& a, bool measure);

}  // namespace cernylab

#endif  // CERNYLAB_BOUNDS_HPP_

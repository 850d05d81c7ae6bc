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

#ifndef CERNYLAB_SPF_HPP_
#define CERNYLAB_SPF_HPP_

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cernylab/rational.hpp"
#include "cernylab/reachability.hpp"

namespace cernylab {

/// Exact optimum of the two-player guessing game at horizon t, with both
/// players' optimal strategies.  p is Player Two's distribution over
/// states; q is Player One's distribution over the columns of A(t).
/// Invariants (all exact): p, q are distributions; p . a_j <= k for every
/// column; (A q)_i >= k for every state; primal and dual optima coincide.
struct GameSolution {
  int t;
  Rational k;
  std::vector<Rational> p;
  std::vector<Rational> q;
};

/// Solves both linear programs over the table's columns and cross-checks
/// them; throws std::logic_error if the certificates disagree.
GameSolution spf_at(const Automaton& a, const ColumnTable& table);

struct CurvePoint {
  int t;
  Rational k;
  int m;  // number of columns of A(t)
  std::optional<int> dim_p;
  std::optional<int> dim_q;
};

/// k(t) for t = 0..t_max via incremental table extension.
std::vector<CurvePoint> spf_curve(const Automaton& a, int t_max, bool with_dims = false);

/// Column indices that carry positive mass in some optimal dual solution;
/// one exact LP per column.
std::vector<int> critical_columns(const Automaton& a, const ColumnTable& table,
                                  const Rational& k);

enum class Side { kPrimal, kDual };

/// Affine dimension of the optimal polytope P_t (primal) or Q_t (dual),
/// found by growing an affinely independent point set; each step is one or
/// two exact LPs.
int polytope_dimension(const Automaton& a, const ColumnTable& table, Side side,
                       const Rational& k);

/// A partition of the n vertices into singletons, pairs and odd cycles.
struct Decomposition {
  int n = 0;
  std::vector<int> singletons;
  std::vector<std::pair<int, int>> pairs;
  std::vector<std::vector<int>> odd_cycles;  // each in cyclic vertex order
};

struct KpqCertificate {
  Rational k;
  std::vector<Rational> p;        // over states
  std::vector<Rational> q;        // over the decomposition's columns
  std::vector<StateVector> columns;  // singletons, then pairs, then cycle edges
};

/// Closed-form optimum 2/(n + n1) of the game whose columns are exactly
/// the decomposition's incidence vectors, with certified strategies:
/// p puts 2/K on singleton states and 1/K elsewhere (K = n + n1);
/// q puts 2/K on singleton and pair columns and 1/K on odd-cycle edges.
KpqCertificate k_from_decomposition(int n, const Decomposition& d);

class WeightTooHighError : public std::runtime_error {
 public:
  explicit WeightTooHighError(const std::string& what) : std::runtime_error(what) {}
};

struct CanonicalSupport {
  Decomposition decomposition;
  std::vector<int> singleton_columns;            // aligned with decomposition.singletons
  std::vector<int> pair_columns;                 // aligned with decomposition.pairs
  std::vector<std::vector<int>> cycle_columns;   // aligned with odd_cycles; closing edge last
};

struct CanonicalStrategy {
  std::vector<Rational> q;  // over the table's columns, same objective value
  CanonicalSupport support;
};

/// Rewrites an optimal dual strategy into one whose support graph is a
/// disjoint union of singletons, pairs and odd cycles, preserving the
/// objective exactly.  Procedure: keep a basic optimal solution, greedily
/// remove removable columns (descending index), then repeatedly apply the
/// degree-one and even-cycle reassignments per support component.
/// Throws WeightTooHighError if a column of weight >= 3 is critical.
CanonicalStrategy canonicalize_support(const Automaton& a, const ColumnTable& table,
                                       const GameSolution& sol);

namespace detail {
/// Table-free core of canonicalize_support, exposed for direct testing on
/// synthetic column sets.  q must be an optimal dual solution of value k
/// for the given columns, supported on columns of weight <= 2.
CanonicalStrategy canonicalize_columns(int n, std::span<const StateVector> columns,
                                       std::vector<Rational> q, const Rational& k);

/// The degree-one reassignment applied to one edge (center, leaf) with the
/// leaf of support degree one: detaches the pair, zeroes the center's other
/// edges and pushes their mass onto the far endpoints' singleton columns.
std::vector<Rational> degree_one_reassignment(int n, std::span<const StateVector> columns,
                                              const std::vector<Rational>& q, int center,
                                              int leaf);

/// The even-cycle reassignment: keeps alternating edges of the cycle
/// (given in cyclic vertex order) and zeroes the rest plus the cycle's
/// singleton masses.
std::vector<Rational> even_cycle_reassignment(int n, std::span<const StateVector> columns,
                                              const std::vector<Rational>& q,
                                              const std::vector<int>& cycle);
}  // namespace detail

struct StagnationViolation {
  int t;
  Rational k;
  std::string reason;
};

struct StagnationReport {
  int checked_upto = 0;  // audited t range is 1..checked_upto
  std::vector<StagnationViolation> violations;
  bool ok() const { return violations.empty(); }
};

/// Checks, for every 1 <= t < t3 covered by the curve, that k(t) has the
/// form 2/(n+s) with 0 <= s <= n-1 and that no value persists for more
/// than floor((n-s)/2) + 1 consecutive steps.  t = 0 is out of scope.
StagnationReport stagnation_audit(int n, const std::vector<CurvePoint>& curve, int t3);

}  // namespace cernylab

#endif  // CERNYLAB_SPF_HPP_

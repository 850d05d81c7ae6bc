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

#ifndef CERNYLAB_REACHABILITY_HPP_
#define CERNYLAB_REACHABILITY_HPP_

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "cernylab/automaton.hpp"

namespace cernylab {

struct ColumnMeta {
  int first_time;  // t at which the column first appears
  int parent;      // index of the inducing column, -1 for identity columns
  int letter;      // letter applied to the parent (0 for identity columns)
  int target;      // basis state this column descends from
};

/// The set of reachable column vectors A(t), in the canonical order:
/// A(0) is the identity basis e_1..e_n; each later block holds the columns
/// first reachable at that t, sorted ascending lexicographically.  Columns
/// evolve by preimage (left-multiplication by a letter), so only the most
/// recent block can induce new columns.  Empty preimages are dropped.
class ColumnTable {
 public:
  static ColumnTable initial(const Automaton& a);

  int state_count() const { return n_; }
  int time() const { return static_cast<int>(count_at_.size()) - 1; }
  int column_count() const { return static_cast<int>(columns_.size()); }
  /// m(t) for 0 <= t <= time().
  int count_at(int t) const { return count_at_.at(t); }

  const StateVector& column(int idx) const { return columns_[idx]; }
  const ColumnMeta& meta(int idx) const { return metas_[idx]; }
  const std::vector<StateVector>& columns() const { return columns_; }

  /// Shortest word whose column this is, letters in application order.
  Word witness_word(int idx) const;

  bool contains(const StateVector& v) const { return index_.count(v) != 0; }

  /// Index range [first, last) of the columns induced at the current t.
  std::pair<int, int> frontier() const;
  /// True once an extension step added no new column; the table is then
  /// complete for all later times.
  bool saturated() const { return saturated_; }

  int max_weight() const { return max_weight_; }

  /// Advance from time t to t+1 (no-op once saturated).
  void extend(const Automaton& a);

 private:
  ColumnTable() = default;

  int n_ = 0;
  std::vector<StateVector> columns_;
  std::vector<ColumnMeta> metas_;
  std::vector<int> count_at_;
  std::unordered_map<StateVector, int, StateVectorHash> index_;
  bool saturated_ = false;
  int max_weight_ = 0;
};

/// A(t) built by repeated extension from A(0).
ColumnTable columns_at(const Automaton& a, int t);

struct TrtResult {
  int t3;              // the rendezvous time
  Word witness;        // word of length t3 merging the states below
  StateVector merged;  // >= l states mapped together
  int target;          // image_word(merged, witness) == {target}
};

enum class SearchMiss {
  kSaturated,   // the table stopped growing; no such column exists at any t
  kCapReached,  // gave up at the cap
};

struct TrtSearch {
  std::optional<TrtResult> result;
  SearchMiss miss = SearchMiss::kCapReached;  // meaningful when !result
  int cap = 0;
};

/// Smallest t <= cap such that A(t) has a column of weight >= 3.
TrtSearch triple_rendezvous_time(const Automaton& a, int cap);

/// Generalization: smallest t with a column of weight >= ell (2 <= ell <= n).
/// t_ell(a, n, cap) is the reset threshold.
TrtSearch t_ell(const Automaton& a, int ell, int cap);

/// n(n+4)/4 + 1: guaranteed to contain T_3 for synchronizing automata.
int default_t3_cap(int n);
/// (n^3 - n)/6.
std::int64_t default_tl_cap(int n);

enum class ComponentShape { kSingleton, kPair, kOddCycle, kEvenCycle, kOther };

struct Component {
  std::vector<int> vertices;  // ascending
  std::vector<int> edge_indices;
  ComponentShape shape;
  /// For cycles: the vertices in cyclic order, starting at the smallest
  /// vertex, second element its smaller neighbor.  Empty otherwise.
  std::vector<int> cycle_order;
};

/// Decompose the graph on vertices {1..n} given by the edge list.
std::vector<Component> graph_components(int n, const std::vector<std::pair<int, int>>& edges);

/// The graph G(t) whose edges are the weight-2 columns of the table.
struct SupportGraph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;       // (u, v) with u < v, table order
  std::vector<int> edge_columns;                // table column index per edge
  std::vector<int> singleton_states;            // states present as weight-1 columns
  std::vector<int> degrees;                     // size n, edge degrees
  std::vector<Component> components;            // over all n vertices
};

SupportGraph support_graph(const ColumnTable& table);

}  // namespace cernylab

#endif  // CERNYLAB_REACHABILITY_HPP_

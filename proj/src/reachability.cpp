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

#include "cernylab/reachability.hpp"

#include <algorithm>
#include <stdexcept>

namespace cernylab {

ColumnTable ColumnTable::initial(const Automaton& a) {
  ColumnTable t;
  t.n_ = a.state_count();
  for (int q = 1; q <= t.n_; ++q) {
    t.columns_.push_back(StateVector::single(t.n_, q));
    t.metas_.push_back({0, -1, 0, q});
    t.index_.emplace(t.columns_.back(), q - 1);
  }
  t.count_at_.push_back(t.n_);
  t.max_weight_ = 1;
  return t;
}

Word ColumnTable::witness_word(int idx) const {
  // Each induction step prepends its letter, so walking the parent chain
  // from the column to its basis root reads the word in application order.
  Word w;
  for (int cur = idx; metas_[cur].parent >= 0; cur = metas_[cur].parent)
    w.letters.push_back(metas_[cur].letter);
  return w;
}

std::pair<int, int> ColumnTable::frontier() const {
  int t = time();
  int first = (t == 0) ? 0 : count_at_[t - 1];
  return {first, count_at_[t]};
}

void ColumnTable::extend(const Automaton& a) {
  if (a.state_count() != n_)
    throw std::invalid_argument("ColumnTable::extend: automaton size mismatch");
  if (saturated_) {
    count_at_.push_back(column_count());
    return;
  }
  auto [first, last] = frontier();
  int t_next = time() + 1;

  struct NewColumn {
    StateVector vec;
    ColumnMeta meta;
  };
  std::vector<NewColumn> fresh;
  for (int idx = first; idx < last; ++idx) {
    for (int l = 1; l <= a.letter_count(); ++l) {
      StateVector v = a.preimage(columns_[idx], l);
      if (v.empty() || index_.count(v)) continue;
      bool dup = false;
      for (const auto& nc : fresh)
        if (nc.vec == v) {
          dup = true;
          break;
        }
      if (dup) continue;
      fresh.push_back({v, {t_next, idx, l, metas_[idx].target}});
    }
  }
  std::sort(fresh.begin(), fresh.end(),
            [](const NewColumn& x, const NewColumn& y) { return x.vec.lex_less(y.vec); });
  for (auto& nc : fresh) {
    index_.emplace(nc.vec, column_count());
    max_weight_ = std::max(max_weight_, nc.vec.weight());
    columns_.push_back(std::move(nc.vec));
    metas_.push_back(nc.meta);
  }
  if (fresh.empty()) saturated_ = true;
  count_at_.push_back(column_count());
}

ColumnTable columns_at(const Automaton& a, int t) {
  if (t < 0) throw std::invalid_argument("columns_at: negative t");
  ColumnTable table = ColumnTable::initial(a);
  for (int i = 0; i < t; ++i) table.extend(a);
  return table;
}

namespace {

TrtSearch weight_search(const Automaton& a, int min_weight, int cap) {
  if (cap < 1) throw std::invalid_argument("weight search: cap must be >= 1");
  TrtSearch out;
  out.cap = cap;
  ColumnTable table = ColumnTable::initial(a);

  for (int t = 1; t <= cap; ++t) {
    table.extend(a);
    auto [first, last] = table.frontier();
    for (int idx = first; idx < last; ++idx) {
      if (table.column(idx).weight() >= min_weight) {
        out.result = TrtResult{t, table.witness_word(idx), table.column(idx),
                               table.meta(idx).target};
        return out;
      }
    }
    if (table.saturated()) {
      out.miss = SearchMiss::kSaturated;
      return out;
    }
  }
  out.miss = SearchMiss::kCapReached;
  return out;
}

}  // namespace

TrtSearch triple_rendezvous_time(const Automaton& a, int cap) {
  return weight_search(a, 3, cap);
}

TrtSearch t_ell(const Automaton& a, int ell, int cap) {
  if (ell < 2 || ell > a.state_count())
    throw std::invalid_argument("t_ell: need 2 <= ell <= n");
  return weight_search(a, ell, cap);
}

int default_t3_cap(int n) {
  return static_cast<int>((static_cast<std::int64_t>(n) * (n + 4)) / 4 + 1);
}

std::int64_t default_tl_cap(int n) {
  std::int64_t nn = n;
  return (nn * nn * nn - nn) / 6;
}

std::vector<Component> graph_components(int n, const std::vector<std::pair<int, int>>& edges) {
  std::vector<std::vector<int>> adjacency(n + 1);
  std::vector<std::vector<int>> incident(n + 1);
  for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
    auto [u, v] = edges[e];
    adjacency[u].push_back(v);
    adjacency[v].push_back(u);
    incident[u].push_back(e);
    incident[v].push_back(e);
  }
  std::vector<Component> out;
  std::vector<char> visited(n + 1, 0);
  for (int start = 1; start <= n; ++start) {
    if (visited[start]) continue;
    Component comp;
    std::vector<int> stack = {start};
    visited[start] = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      comp.vertices.push_back(v);
      for (int e : incident[v]) comp.edge_indices.push_back(e);
      for (int u : adjacency[v])
        if (!visited[u]) {
          visited[u] = 1;
          stack.push_back(u);
        }
    }
    std::sort(comp.vertices.begin(), comp.vertices.end());
    std::sort(comp.edge_indices.begin(), comp.edge_indices.end());
    comp.edge_indices.erase(std::unique(comp.edge_indices.begin(), comp.edge_indices.end()),
                            comp.edge_indices.end());

    std::size_t nv = comp.vertices.size(), ne = comp.edge_indices.size();
    bool all_degree_two = true;
    for (int v : comp.vertices)
      if (adjacency[v].size() != 2) all_degree_two = false;
    if (nv == 1 && ne == 0) {
      comp.shape = ComponentShape::kSingleton;
    } else if (nv == 2 && ne == 1) {
      comp.shape = ComponentShape::kPair;
    } else if (all_degree_two && ne == nv) {
      comp.shape = (nv % 2 == 1) ? ComponentShape::kOddCycle : ComponentShape::kEvenCycle;
      int first = comp.vertices.front();
      int second = std::min(adjacency[first][0], adjacency[first][1]);
      comp.cycle_order = {first, second};
      int prev = first, cur = second;
      while (static_cast<int>(comp.cycle_order.size()) < static_cast<int>(nv)) {
        int next = (adjacency[cur][0] == prev) ? adjacency[cur][1] : adjacency[cur][0];
        comp.cycle_order.push_back(next);
        prev = cur;
        cur = next;
      }
    } else {
      comp.shape = ComponentShape::kOther;
    }
    out.push_back(std::move(comp));
  }
  return out;
}

SupportGraph support_graph(const ColumnTable& table) {
  SupportGraph g;
  g.n = table.state_count();
  g.degrees.assign(g.n, 0);
  for (int idx = 0; idx < table.column_count(); ++idx) {
    const StateVector& col = table.column(idx);
    int w = col.weight();
    if (w == 1) {
      g.singleton_states.push_back(col.states()[0]);
    } else if (w == 2) {
      auto s = col.states();
      g.edges.emplace_back(s[0], s[1]);
      g.edge_columns.push_back(idx);
      ++g.degrees[s[0] - 1];
      ++g.degrees[s[1] - 1];
    }
  }
  std::sort(g.singleton_states.begin(), g.singleton_states.end());
  g.components = graph_components(g.n, g.edges);
  return g;
}

}  // namespace cernylab

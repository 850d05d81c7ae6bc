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
#include <functional>
#include <map>
#include <stdexcept>

#include "cernylab/linalg.hpp"
#include "cernylab/simplex.hpp"

namespace cernylab {

namespace {

// Dual game program over a subset of columns: maximize k subject to
// sum_j A_ij q_j - k >= 0 per state, sum q = 1.  Variables q then k.
lp::Problem dual_problem(int n, std::span<const StateVector> cols,
                         const std::vector<int>& subset) {
  const int mc = static_cast<int>(subset.size());
  lp::Problem prob;
  prob.sense = lp::Sense::kMaximize;
  prob.c.assign(mc + 1, Rational(0));
  prob.c[mc] = Rational(1);
  for (int state = 1; state <= n; ++state) {
    lp::Row row;
    row.a.assign(mc + 1, Rational(0));
    for (int j = 0; j < mc; ++j)
      if (cols[subset[j]].contains(state)) row.a[j] = Rational(1);
    row.a[mc] = Rational(-1);
    row.rel = lp::Rel::kGe;
    row.b = Rational(0);
    prob.rows.push_back(std::move(row));
  }
  lp::Row sum;
  sum.a.assign(mc + 1, Rational(0));
  for (int j = 0; j < mc; ++j) sum.a[j] = Rational(1);
  sum.rel = lp::Rel::kEq;
  sum.b = Rational(1);
  prob.rows.push_back(std::move(sum));
  return prob;
}

// Primal game program: minimize k subject to p . a_j - k <= 0 per column,
// sum p = 1.  Variables p then k.
lp::Problem primal_problem(int n, std::span<const StateVector> cols) {
  const int m = static_cast<int>(cols.size());
  lp::Problem prob;
  prob.sense = lp::Sense::kMinimize;
  prob.c.assign(n + 1, Rational(0));
  prob.c[n] = Rational(1);
  for (int j = 0; j < m; ++j) {
    lp::Row row;
    row.a.assign(n + 1, Rational(0));
    for (int state : cols[j].states()) row.a[state - 1] = Rational(1);
    row.a[n] = Rational(-1);
    row.rel = lp::Rel::kLe;
    row.b = Rational(0);
    prob.rows.push_back(std::move(row));
  }
  lp::Row sum;
  sum.a.assign(n + 1, Rational(0));
  for (int i = 0; i < n; ++i) sum.a[i] = Rational(1);
  sum.rel = lp::Rel::kEq;
  sum.b = Rational(1);
  prob.rows.push_back(std::move(sum));
  return prob;
}

struct DualOpt {
  Rational value;
  std::vector<Rational> q;  // over the subset, in subset order
};

DualOpt solve_dual_subset(int n, std::span<const StateVector> cols,
                          const std::vector<int>& subset) {
  lp::Result res = lp::solve(dual_problem(n, cols, subset));
  if (res.status != lp::Status::kOptimal)
    throw std::logic_error("spf: dual game program must be solvable");
  std::vector<Rational> q(res.x.begin(), res.x.begin() + static_cast<long>(subset.size()));
  return {res.value, std::move(q)};
}

Rational dot_column(const std::vector<Rational>& p, const StateVector& col) {
  Rational out;
  for (int state : col.states()) out += p[state - 1];
  return out;
}

std::vector<int> all_indices(int m) {
  std::vector<int> v(m);
  for (int j = 0; j < m; ++j) v[j] = j;
  return v;
}

// Columns strictly contained in another column are redundant in both game
// programs: the primal constraint is dominated and any dual mass can move
// to the superset column.  Solving on the maximal columns only is exact.
std::vector<int> maximal_columns(std::span<const StateVector> cols) {
  const int m = static_cast<int>(cols.size());
  std::vector<int> out;
  for (int j = 0; j < m; ++j) {
    bool dominated = false;
    for (int i = 0; i < m && !dominated; ++i)
      if (i != j && cols[j].is_subset_of(cols[i])) dominated = true;
    if (!dominated) out.push_back(j);
  }
  return out;
}

}  // namespace

GameSolution spf_at(const Automaton& a, const ColumnTable& table) {
  const int n = a.state_count();
  const int m = table.column_count();
  if (m == 0) throw std::invalid_argument("spf_at: empty column table");

  std::vector<int> active = maximal_columns(table.columns());
  std::vector<StateVector> active_cols;
  active_cols.reserve(active.size());
  for (int j : active) active_cols.push_back(table.column(j));

  lp::Result primal = lp::solve(primal_problem(n, active_cols));
  DualOpt dual = solve_dual_subset(n, table.columns(), active);
  if (primal.status != lp::Status::kOptimal)
    throw std::logic_error("spf_at: primal game program must be solvable");
  if (primal.value != dual.value)
    throw std::logic_error("spf_at: strong duality certificate failed");

  GameSolution sol;
  sol.t = table.time();
  sol.k = primal.value;
  sol.p.assign(primal.x.begin(), primal.x.begin() + n);
  sol.q.assign(m, Rational(0));
  for (std::size_t i = 0; i < active.size(); ++i) sol.q[active[i]] = dual.q[i];

  // Exact feasibility of both strategies.
  Rational sum_p, sum_q;
  for (const Rational& v : sol.p) {
    if (v < Rational(0)) throw std::logic_error("spf_at: negative p entry");
    sum_p += v;
  }
  for (const Rational& v : sol.q) {
    if (v < Rational(0)) throw std::logic_error("spf_at: negative q entry");
    sum_q += v;
  }
  if (sum_p != Rational(1) || sum_q != Rational(1))
    throw std::logic_error("spf_at: strategies must be distributions");
  for (int j = 0; j < m; ++j)
    if (dot_column(sol.p, table.column(j)) > sol.k)
      throw std::logic_error("spf_at: primal feasibility violated");
  for (int state = 1; state <= n; ++state) {
    Rational cover;
    for (int j = 0; j < m; ++j)
      if (table.column(j).contains(state)) cover += sol.q[j];
    if (cover < sol.k) throw std::logic_error("spf_at: dual feasibility violated");
  }
  return sol;
}

std::vector<CurvePoint> spf_curve(const Automaton& a, int t_max, bool with_dims) {
  if (t_max < 0) throw std::invalid_argument("spf_curve: negative t_max");
  std::vector<CurvePoint> curve;
  ColumnTable table = ColumnTable::initial(a);
  for (int t = 0; t <= t_max; ++t) {
    if (t > 0) table.extend(a);
    GameSolution sol = spf_at(a, table);
    CurvePoint pt{t, sol.k, table.column_count(), std::nullopt, std::nullopt};
    if (with_dims) {
      pt.dim_p = polytope_dimension(a, table, Side::kPrimal, sol.k);
      pt.dim_q = polytope_dimension(a, table, Side::kDual, sol.k);
    }
    curve.push_back(std::move(pt));
  }
  return curve;
}

namespace {

// maximize (or minimize) c . x over the optimal polytope of one side.
lp::Result optimize_over_polytope(int n, std::span<const StateVector> cols,
                                  const Rational& k, Side side,
                                  const std::vector<Rational>& objective,
                                  lp::Sense sense) {
  const int m = static_cast<int>(cols.size());
  lp::Problem prob;
  prob.sense = sense;
  if (side == Side::kPrimal) {
    prob.c = objective;  // size n
    for (int j = 0; j < m; ++j) {
      lp::Row row;
      row.a.assign(n, Rational(0));
      for (int state : cols[j].states()) row.a[state - 1] = Rational(1);
      row.rel = lp::Rel::kLe;
      row.b = k;
      prob.rows.push_back(std::move(row));
    }
    lp::Row sum;
    sum.a.assign(n, Rational(1));
    sum.rel = lp::Rel::kEq;
    sum.b = Rational(1);
    prob.rows.push_back(std::move(sum));
  } else {
    prob.c = objective;  // size m
    for (int state = 1; state <= n; ++state) {
      lp::Row row;
      row.a.assign(m, Rational(0));
      for (int j = 0; j < m; ++j)
        if (cols[j].contains(state)) row.a[j] = Rational(1);
      row.rel = lp::Rel::kGe;
      row.b = k;
      prob.rows.push_back(std::move(row));
    }
    lp::Row sum;
    sum.a.assign(m, Rational(1));
    sum.rel = lp::Rel::kEq;
    sum.b = Rational(1);
    prob.rows.push_back(std::move(sum));
  }
  lp::Result res = lp::solve(prob);
  if (res.status != lp::Status::kOptimal)
    throw std::logic_error("optimal polytope must be nonempty and bounded");
  return res;
}

}  // namespace

std::vector<int> critical_columns(const Automaton& a, const ColumnTable& table,
                                  const Rational& k) {
  const int m = table.column_count();
  std::vector<int> out;
  for (int j = 0; j < m; ++j) {
    std::vector<Rational> objective(m, Rational(0));
    objective[j] = Rational(1);
    lp::Result res = optimize_over_polytope(a.state_count(), table.columns(), k,
                                            Side::kDual, objective, lp::Sense::kMaximize);
    if (res.value > Rational(0)) out.push_back(j);
  }
  return out;
}

int polytope_dimension(const Automaton& a, const ColumnTable& table, Side side,
                       const Rational& k) {
  const int n = a.state_count();
  const int m = table.column_count();
  const int dim_space = (side == Side::kPrimal) ? n : m;

  auto optimize = [&](const std::vector<Rational>& c, lp::Sense sense) {
    return optimize_over_polytope(n, table.columns(), k, side, c, sense);
  };

  std::vector<Rational> zero(dim_space, Rational(0));
  std::vector<Rational> x0 = optimize(zero, lp::Sense::kMaximize).x;

  std::vector<std::vector<Rational>> directions;
  while (static_cast<int>(directions.size()) < dim_space) {
    std::vector<std::vector<Rational>> complement =
        directions.empty()
            ? [&] {
                std::vector<std::vector<Rational>> basis;
                for (int i = 0; i < dim_space; ++i) {
                  std::vector<Rational> e(dim_space, Rational(0));
                  e[i] = Rational(1);
                  basis.push_back(std::move(e));
                }
                return basis;
              }()
            : linalg::nullspace(directions);
    bool grew = false;
    for (const auto& c : complement) {
      lp::Result hi = optimize(c, lp::Sense::kMaximize);
      lp::Result lo = optimize(c, lp::Sense::kMinimize);
      if (hi.value == lo.value) continue;  // settled direction
      Rational at_x0;
      for (int i = 0; i < dim_space; ++i) at_x0 += c[i] * x0[i];
      const std::vector<Rational>& pick = (hi.value != at_x0) ? hi.x : lo.x;
      std::vector<Rational> dir(dim_space);
      for (int i = 0; i < dim_space; ++i) dir[i] = pick[i] - x0[i];
      directions.push_back(std::move(dir));
      grew = true;
      break;
    }
    if (!grew) break;
  }
  return static_cast<int>(directions.size());
}

KpqCertificate k_from_decomposition(int n, const Decomposition& d) {
  if (d.n != n) throw std::invalid_argument("k_from_decomposition: size mismatch");
  std::vector<int> seen(n + 1, 0);
  auto touch = [&](int v) {
    if (v < 1 || v > n) throw std::invalid_argument("k_from_decomposition: vertex out of range");
    if (seen[v]++) throw std::invalid_argument("k_from_decomposition: vertex reused");
  };
  for (int v : d.singletons) touch(v);
  for (auto [u, v] : d.pairs) {
    touch(u);
    touch(v);
    if (u == v) throw std::invalid_argument("k_from_decomposition: degenerate pair");
  }
  for (const auto& cycle : d.odd_cycles) {
    if (cycle.size() < 3 || cycle.size() % 2 == 0)
      throw std::invalid_argument("k_from_decomposition: cycles must be odd, length >= 3");
    for (int v : cycle) touch(v);
  }
  for (int v = 1; v <= n; ++v)
    if (!seen[v]) throw std::invalid_argument("k_from_decomposition: vertex not covered");

  const long n1 = static_cast<long>(d.singletons.size());
  const Rational unit(1, static_cast<long>(n) + n1);  // 1/K
  const Rational two_units = Rational(2) * unit;

  KpqCertificate cert;
  cert.k = two_units;
  cert.p.assign(n, unit);
  for (int v : d.singletons) cert.p[v - 1] = two_units;

  for (int v : d.singletons) {
    cert.columns.push_back(StateVector::single(n, v));
    cert.q.push_back(two_units);
  }
  for (auto [u, v] : d.pairs) {
    StateVector col(n);
    col.insert(u);
    col.insert(v);
    cert.columns.push_back(col);
    cert.q.push_back(two_units);
  }
  for (const auto& cycle : d.odd_cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      StateVector col(n);
      col.insert(cycle[i]);
      col.insert(cycle[(i + 1) % cycle.size()]);
      cert.columns.push_back(col);
      cert.q.push_back(unit);
    }
  }

  // Certify both strategies exactly.
  Rational sum_p, sum_q;
  for (const Rational& v : cert.p) sum_p += v;
  for (const Rational& v : cert.q) sum_q += v;
  if (sum_p != Rational(1) || sum_q != Rational(1))
    throw std::logic_error("k_from_decomposition: strategies must be distributions");
  for (const StateVector& col : cert.columns)
    if (dot_column(cert.p, col) != cert.k)
      throw std::logic_error("k_from_decomposition: primal certificate failed");
  for (int state = 1; state <= n; ++state) {
    Rational cover;
    for (std::size_t j = 0; j < cert.columns.size(); ++j)
      if (cert.columns[j].contains(state)) cover += cert.q[j];
    if (cover != cert.k)
      throw std::logic_error("k_from_decomposition: dual certificate failed");
  }
  return cert;
}

namespace detail {

namespace {

struct SupportState {
  int n;
  std::span<const StateVector> columns;
  std::vector<Rational> mass;                 // over columns
  std::map<std::pair<int, int>, int> edge_col;  // weight-2 column lookup
  std::vector<int> singleton_col;             // state -> column index or -1

  const Rational& singleton_mass(int state) const {
    static const Rational kZero(0);
    int c = singleton_col[state];
    return c < 0 ? kZero : mass[c];
  }
  void clear_singleton(int state) {
    int c = singleton_col[state];
    if (c >= 0) mass[c] = Rational(0);
  }
  void add_to_singleton(int state, const Rational& v) {
    if (v == Rational(0)) return;
    int c = singleton_col[state];
    if (c < 0)
      throw std::logic_error("canonicalize: missing singleton column for state " +
                             std::to_string(state));
    mass[c] += v;
  }
  int require_edge(int u, int v) const {
    auto it = edge_col.find(std::minmax(u, v));
    if (it == edge_col.end())
      throw std::logic_error("canonicalize: missing edge column");
    return it->second;
  }

  std::vector<std::pair<int, int>> support_edges() const {
    std::vector<std::pair<int, int>> out;
    for (std::size_t j = 0; j < mass.size(); ++j)
      if (mass[j] > Rational(0) && columns[j].weight() == 2) {
        auto s = columns[j].states();
        out.emplace_back(s[0], s[1]);
      }
    return out;
  }
};

// Degree-one reassignment: detaches the pair (v1, v2), v2 of degree one,
// moving the other edges at v1 onto their far endpoints' singleton columns.
void apply_degree_one(SupportState& st, int v1, int v2,
                      const std::vector<std::pair<int, int>>& component_edges) {
  int pair_col = st.require_edge(v1, v2);
  st.mass[pair_col] += st.singleton_mass(v1) + st.singleton_mass(v2);
  st.clear_singleton(v1);
  st.clear_singleton(v2);
  for (auto [u, v] : component_edges) {
    if (u != v1 && v != v1) continue;
    int other = (u == v1) ? v : u;
    if (other == v2) continue;
    int col = st.require_edge(v1, other);
    st.add_to_singleton(other, st.mass[col]);
    st.mass[col] = Rational(0);
  }
}

// Even-cycle reassignment: keeps the edges (x0,x1), (x2,x3), ... as pairs
// and zeroes the alternating edges and all singleton masses on the cycle.
void apply_even_cycle(SupportState& st, const std::vector<int>& cycle) {
  const int c = static_cast<int>(cycle.size());
  std::vector<Rational> kept(c / 2);
  for (int j = 0; 2 * j < c; ++j) {
    int a = cycle[2 * j];
    int b = cycle[2 * j + 1];
    int succ = cycle[(2 * j + 2) % c];
    kept[j] = st.singleton_mass(a) + st.singleton_mass(b) +
              st.mass[st.require_edge(a, b)] + st.mass[st.require_edge(b, succ)];
  }
  for (int i = 0; i < c; ++i) st.clear_singleton(cycle[i]);
  for (int j = 0; 2 * j < c; ++j) {
    st.mass[st.require_edge(cycle[2 * j], cycle[2 * j + 1])] = kept[j];
    st.mass[st.require_edge(cycle[2 * j + 1], cycle[(2 * j + 2) % c])] = Rational(0);
  }
}

// Uniform redistribution over an odd cycle absorbs any singleton mass on
// its vertices; coverage 2w/c stays >= k because the per-vertex constraints
// sum to w + sum(edges) >= c k.
void absorb_odd_cycle_singletons(SupportState& st, const std::vector<int>& cycle) {
  const int c = static_cast<int>(cycle.size());
  Rational total;
  for (int i = 0; i < c; ++i) {
    total += st.singleton_mass(cycle[i]);
    total += st.mass[st.require_edge(cycle[i], cycle[(i + 1) % c])];
  }
  Rational share = total / Rational(c);
  for (int i = 0; i < c; ++i) {
    st.clear_singleton(cycle[i]);
    st.mass[st.require_edge(cycle[i], cycle[(i + 1) % c])] = share;
  }
}

void fold_pair_singletons(SupportState& st, int u, int v) {
  int col = st.require_edge(u, v);
  st.mass[col] += st.singleton_mass(u) + st.singleton_mass(v);
  st.clear_singleton(u);
  st.clear_singleton(v);
}

// Local re-solve used when a component is neither a cycle nor has a
// degree-one vertex (possible only for non-minimal supports): re-optimize
// the component's own program and re-minimalize it.
void reminimalize_component(SupportState& st, const Component& comp,
                            const std::vector<std::pair<int, int>>& edges,
                            const Rational& k) {
  std::vector<int> local_cols;
  Rational weight;
  for (int v : comp.vertices) {
    int c = st.singleton_col[v];
    if (c >= 0) {
      local_cols.push_back(c);
      weight += st.mass[c];
    }
  }
  for (int e : comp.edge_indices) {
    int c = st.require_edge(edges[e].first, edges[e].second);
    local_cols.push_back(c);
    weight += st.mass[c];
  }
  std::sort(local_cols.begin(), local_cols.end());

  // Remap the component to a dense sub-problem over its own vertices.
  std::vector<int> vertex_of(st.n + 1, 0);
  for (std::size_t i = 0; i < comp.vertices.size(); ++i)
    vertex_of[comp.vertices[i]] = static_cast<int>(i) + 1;
  const int local_n = static_cast<int>(comp.vertices.size());
  std::vector<StateVector> local_views;
  for (int c : local_cols) {
    StateVector view(local_n);
    for (int s : st.columns[c].states()) view.insert(vertex_of[s]);
    local_views.push_back(std::move(view));
  }

  std::vector<int> subset = all_indices(static_cast<int>(local_views.size()));
  DualOpt best = solve_dual_subset(local_n, local_views, subset);
  // Greedy minimalization, descending column order.
  std::vector<int> support;
  for (std::size_t j = 0; j < subset.size(); ++j)
    if (best.q[j] > Rational(0)) support.push_back(static_cast<int>(j));
  std::vector<Rational> q_local(local_views.size(), Rational(0));
  for (std::size_t j = 0; j < support.size(); ++j) q_local[support[j]] = best.q[j];
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto it = support.rbegin(); it != support.rend(); ++it) {
      std::vector<int> sub;
      for (int j : support)
        if (j != *it) sub.push_back(j);
      if (sub.empty()) continue;
      DualOpt res = solve_dual_subset(local_n, local_views, sub);
      if (res.value == best.value) {
        q_local.assign(local_views.size(), Rational(0));
        support.clear();
        for (std::size_t j = 0; j < sub.size(); ++j)
          if (res.q[j] > Rational(0)) {
            q_local[sub[j]] = res.q[j];
            support.push_back(sub[j]);
          }
        changed = true;
        break;
      }
    }
  }

  // Scale back: the component keeps its original mass; coverage scales to
  // weight * best.value >= k since the old masses already covered at k.
  if (weight * best.value < k)
    throw std::logic_error("canonicalize: component re-solve lost coverage");
  for (std::size_t j = 0; j < local_cols.size(); ++j)
    st.mass[local_cols[j]] = q_local[j] * weight;
}

SupportState make_support_state(int n, std::span<const StateVector> columns,
                                std::vector<Rational> q) {
  SupportState st;
  st.n = n;
  st.columns = columns;
  st.mass = std::move(q);
  st.singleton_col.assign(n + 1, -1);
  for (int j = 0; j < static_cast<int>(columns.size()); ++j) {
    int w = columns[j].weight();
    if (w == 1) {
      st.singleton_col[columns[j].states()[0]] = j;
    } else if (w == 2) {
      auto s = columns[j].states();
      st.edge_col.emplace(std::make_pair(s[0], s[1]), j);
    }
  }
  return st;
}

}  // namespace

std::vector<Rational> degree_one_reassignment(int n, std::span<const StateVector> columns,
                                              const std::vector<Rational>& q, int center,
                                              int leaf) {
  SupportState st = make_support_state(n, columns, q);
  apply_degree_one(st, center, leaf, st.support_edges());
  return st.mass;
}

std::vector<Rational> even_cycle_reassignment(int n, std::span<const StateVector> columns,
                                              const std::vector<Rational>& q,
                                              const std::vector<int>& cycle) {
  SupportState st = make_support_state(n, columns, q);
  apply_even_cycle(st, cycle);
  return st.mass;
}

CanonicalStrategy canonicalize_columns(int n, std::span<const StateVector> columns,
                                       std::vector<Rational> q, const Rational& k) {
  const int m = static_cast<int>(columns.size());
  if (static_cast<int>(q.size()) != m)
    throw std::invalid_argument("canonicalize: q size mismatch");

  SupportState st = make_support_state(n, columns, std::move(q));
  for (int j = 0; j < m; ++j) {
    if (st.mass[j] > Rational(0) && columns[j].weight() > 2)
      throw WeightTooHighError("canonicalize: support contains a column of weight " +
                               std::to_string(columns[j].weight()));
    if (st.mass[j] < Rational(0))
      throw std::invalid_argument("canonicalize: negative mass");
  }

  // Greedy minimalization over the support, descending column index.
  {
    std::vector<int> support;
    for (int j = 0; j < m; ++j)
      if (st.mass[j] > Rational(0)) support.push_back(j);
    bool changed = true;
    while (changed) {
      changed = false;
      for (auto it = support.rbegin(); it != support.rend(); ++it) {
        std::vector<int> sub;
        for (int j : support)
          if (j != *it) sub.push_back(j);
        if (sub.empty()) continue;
        DualOpt res = solve_dual_subset(n, columns, sub);
        if (res.value == k) {
          st.mass.assign(m, Rational(0));
          support.clear();
          for (std::size_t j = 0; j < sub.size(); ++j)
            if (res.q[j] > Rational(0)) {
              st.mass[sub[j]] = res.q[j];
              support.push_back(sub[j]);
            }
          changed = true;
          break;
        }
      }
    }
  }

  // Reassignment loop.
  const int max_rounds = 8 * (n + 2) * (n + 2);
  for (int round = 0;; ++round) {
    if (round > max_rounds)
      throw std::logic_error("canonicalize: reassignment did not converge");
    auto edges = st.support_edges();
    auto comps = graph_components(n, edges);
    bool changed = false;
    for (const Component& comp : comps) {
      switch (comp.shape) {
        case ComponentShape::kSingleton:
          break;
        case ComponentShape::kPair:
          fold_pair_singletons(st, comp.vertices[0], comp.vertices[1]);
          break;
        case ComponentShape::kOddCycle: {
          bool has_singleton_mass = false;
          for (int v : comp.vertices)
            if (st.singleton_mass(v) > Rational(0)) has_singleton_mass = true;
          if (has_singleton_mass) absorb_odd_cycle_singletons(st, comp.cycle_order);
          break;
        }
        case ComponentShape::kEvenCycle:
          apply_even_cycle(st, comp.cycle_order);
          changed = true;
          break;
        case ComponentShape::kOther: {
          std::vector<int> degree(n + 1, 0);
          for (int e : comp.edge_indices) {
            ++degree[edges[e].first];
            ++degree[edges[e].second];
          }
          int leaf = -1;
          for (int v : comp.vertices)
            if (degree[v] == 1) {
              leaf = v;
              break;
            }
          if (leaf >= 0) {
            int neighbor = -1;
            for (int e : comp.edge_indices) {
              if (edges[e].first == leaf) neighbor = edges[e].second;
              if (edges[e].second == leaf) neighbor = edges[e].first;
            }
            std::vector<std::pair<int, int>> comp_edges;
            for (int e : comp.edge_indices) comp_edges.push_back(edges[e]);
            apply_degree_one(st, neighbor, leaf, comp_edges);
          } else {
            reminimalize_component(st, comp, edges, k);
          }
          changed = true;
          break;
        }
      }
      if (changed) break;  // support edges changed; recompute components
    }
    if (!changed) break;
  }

  // Assemble the canonical support and verify everything exactly.
  CanonicalStrategy out;
  out.q = st.mass;
  out.support.decomposition.n = n;
  auto edges = st.support_edges();
  for (const Component& comp : graph_components(n, edges)) {
    switch (comp.shape) {
      case ComponentShape::kSingleton: {
        int v = comp.vertices[0];
        if (st.singleton_mass(v) <= Rational(0))
          throw std::logic_error("canonicalize: uncovered singleton vertex");
        out.support.decomposition.singletons.push_back(v);
        out.support.singleton_columns.push_back(st.singleton_col[v]);
        break;
      }
      case ComponentShape::kPair: {
        int u = comp.vertices[0], v = comp.vertices[1];
        out.support.decomposition.pairs.emplace_back(u, v);
        out.support.pair_columns.push_back(st.require_edge(u, v));
        break;
      }
      case ComponentShape::kOddCycle: {
        out.support.decomposition.odd_cycles.push_back(comp.cycle_order);
        std::vector<int> cols;
        const auto& cyc = comp.cycle_order;
        for (std::size_t i = 0; i < cyc.size(); ++i)
          cols.push_back(st.require_edge(cyc[i], cyc[(i + 1) % cyc.size()]));
        out.support.cycle_columns.push_back(std::move(cols));
        break;
      }
      default:
        throw std::logic_error("canonicalize: non-canonical component survived");
    }
  }

  Rational total;
  for (const Rational& v : out.q) {
    if (v < Rational(0)) throw std::logic_error("canonicalize: negative mass produced");
    total += v;
  }
  if (total != Rational(1)) throw std::logic_error("canonicalize: mass not preserved");
  Rational min_cover;
  for (int state = 1; state <= n; ++state) {
    Rational cover;
    for (int j = 0; j < m; ++j)
      if (out.q[j] > Rational(0) && columns[j].contains(state)) cover += out.q[j];
    if (state == 1 || cover < min_cover) min_cover = cover;
  }
  if (min_cover != k) throw std::logic_error("canonicalize: objective not preserved");
  return out;
}

}  // namespace detail

CanonicalStrategy canonicalize_support(const Automaton& a, const ColumnTable& table,
                                       const GameSolution& sol) {
  const int n = a.state_count();
  const int m = table.column_count();
  if (table.max_weight() >= 3) {
    for (int j = 0; j < m; ++j) {
      if (table.column(j).weight() < 3) continue;
      std::vector<Rational> objective(m, Rational(0));
      objective[j] = Rational(1);
      lp::Result res = optimize_over_polytope(n, table.columns(), sol.k, Side::kDual,
                                              objective, lp::Sense::kMaximize);
      if (res.value > Rational(0))
        throw WeightTooHighError("canonicalize_support: column " + std::to_string(j) +
                                 " of weight " + std::to_string(table.column(j).weight()) +
                                 " is critical (t >= T_3 regime)");
    }
  }
  return detail::canonicalize_columns(n, table.columns(), sol.q, sol.k);
}

StagnationReport stagnation_audit(int n, const std::vector<CurvePoint>& curve, int t3) {
  StagnationReport report;
  std::map<int, Rational> k_of;
  int covered_max = 0;
  for (const CurvePoint& pt : curve) {
    k_of.emplace(pt.t, pt.k);
    covered_max = std::max(covered_max, pt.t);
  }
  report.checked_upto = std::min(t3 - 1, covered_max);
  for (int t = 1; t <= report.checked_upto; ++t)
    if (!k_of.count(t))
      throw std::invalid_argument("stagnation_audit: curve missing t=" + std::to_string(t));

  auto s_of = [&](const Rational& k) -> std::optional<long> {
    Rational s = Rational(2) / k - Rational(static_cast<long>(n));
    if (!s.is_integer()) return std::nullopt;
    BigInt v = s.numerator();
    if (v < 0 || v > n - 1) return std::nullopt;
    return v.get_si();
  };

  for (int t = 1; t <= report.checked_upto;) {
    const Rational& k = k_of.at(t);
    int run_end = t;
    while (run_end + 1 <= report.checked_upto && k_of.at(run_end + 1) == k) ++run_end;
    auto s = s_of(k);
    if (!s) {
      report.violations.push_back(
          {t, k, "value is not of the form 2/(n+s) with 0 <= s <= n-1"});
    } else {
      long limit = (n - *s) / 2 + 1;
      long run = run_end - t + 1;
      if (run > limit)
        report.violations.push_back(
            {t, k,
             "value persists for " + std::to_string(run) + " steps, limit " +
                 std::to_string(limit) + " (s=" + std::to_string(*s) + ")"});
    }
    t = run_end + 1;
  }
  return report;
}

}  // namespace cernylab

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

#include "cernylab/bounds.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

namespace cernylab {

std::int64_t pin_frankl_bound(int n) {
  std::int64_t nn = n;
  return (nn * nn * nn - nn) / 6;
}

std::int64_t t3_bound_naive(int n) {
  std::int64_t nn = n;
  return nn * (nn - 1) / 2 + 1;
}

std::int64_t t3_bound_quarter(int n) {
  std::int64_t nn = n;
  // n(n+4) == n mod 2 (mod 4), so the difference is an exact integer.
  return (nn * (nn + 4) - (nn % 2)) / 4;
}

std::int64_t t3_bound_combined(int n, int s) {
  if (s < 1 || 2 * s > n)
    throw std::invalid_argument("t3_bound_combined: need 1 <= s <= n/2");
  BigInt first = ceil_div(BigInt(n) * (s + 2), 2);
  BigInt second = ceil_div(BigInt(n) * (n + 4) - BigInt(2 * s - 1) * (2 * s + 3) + 1, 4);
  return std::max(first, second).get_si();
}

std::int64_t t3_bound_sqrt(int n) {
  if (n < 4) throw std::invalid_argument("t3_bound_sqrt: need n >= 4");
  BigInt nn(n);
  BigInt radicand = nn * nn * (5 * nn * nn + 4 * nn - 12);
  // floor((sqrt(radicand) + n(6-n))/8); replacing the irrational square
  // root by its integer floor cannot move the outer floor.
  BigInt numerator = isqrt(radicand) + nn * (6 - nn);
  return floor_div(numerator, BigInt(8)).get_si();
}

bool is_strongly_connected(const Automaton& a) {
  const int n = a.state_count();
  if (n == 1) return true;

  // Iterative Tarjan on the union transition digraph.
  std::vector<std::vector<int>> adjacency(n + 1);
  for (int q = 1; q <= n; ++q)
    for (int l = 1; l <= a.letter_count(); ++l)
      adjacency[q].push_back(a.step(q, l));

  std::vector<int> index(n + 1, 0), lowlink(n + 1, 0);
  std::vector<char> on_stack(n + 1, 0);
  std::vector<int> stack;
  int next_index = 0, scc_count = 0;

  struct Frame {
    int v;
    std::size_t child;
  };
  for (int root = 1; root <= n; ++root) {
    if (index[root]) continue;
    std::vector<Frame> call_stack{{root, 0}};
    index[root] = lowlink[root] = ++next_index;
    stack.push_back(root);
    on_stack[root] = 1;
    while (!call_stack.empty()) {
      Frame& frame = call_stack.back();
      if (frame.child < adjacency[frame.v].size()) {
        int w = adjacency[frame.v][frame.child++];
        if (!index[w]) {
          index[w] = lowlink[w] = ++next_index;
          stack.push_back(w);
          on_stack[w] = 1;
          call_stack.push_back({w, 0});
        } else if (on_stack[w]) {
          lowlink[frame.v] = std::min(lowlink[frame.v], index[w]);
        }
      } else {
        if (lowlink[frame.v] == index[frame.v]) {
          ++scc_count;
          if (scc_count > 1) return false;
          int w;
          do {
            w = stack.back();
            stack.pop_back();
            on_stack[w] = 0;
          } while (w != frame.v);
        }
        int v = frame.v;
        call_stack.pop_back();
        if (!call_stack.empty())
          lowlink[call_stack.back().v] = std::min(lowlink[call_stack.back().v], lowlink[v]);
      }
    }
  }
  return scc_count == 1;
}

std::optional<SpfConjectureViolation> check_conjecture_spf(
    const Automaton& a, const std::vector<CurvePoint>& curve) {
  const int n = a.state_count();
  if (n < 2) return std::nullopt;
  std::vector<std::optional<Rational>> k_of;
  for (const CurvePoint& pt : curve) {
    if (pt.t >= static_cast<int>(k_of.size())) k_of.resize(pt.t + 1);
    k_of[pt.t] = pt.k;
  }
  for (int j = 1; j <= n - 1; ++j) {
    std::int64_t t = 1 + static_cast<std::int64_t>(j - 1) * (n + 1);
    if (t >= static_cast<std::int64_t>(k_of.size()) || !k_of[t]) continue;
    Rational threshold(j, n - 1);
    if (*k_of[t] < threshold)
      return SpfConjectureViolation{j, static_cast<int>(t), *k_of[t], threshold};
  }
  return std::nullopt;
}

T3ConjectureCheck check_conjecture_t3(const Automaton& a, const TrtResult& t3) {
  int limit = a.state_count() + 2;
  return {t3.t3 <= limit, t3.t3, limit};
}

std::string lemma_status_name(LemmaStatus s) {
  switch (s) {
    case LemmaStatus::kHolds: return "holds";
    case LemmaStatus::kVacuous: return "vacuous";
    case LemmaStatus::kSkipped: return "skipped";
    case LemmaStatus::kInconclusive: return "inconclusive";
    case LemmaStatus::kViolated: return "violated";
  }
  return "?";
}

ZeroEntryReport verify_zero_entry_lemma(const Automaton& a, int s, const Rational& k_n,
                                        std::size_t subset_cap) {
  const int n = a.state_count();
  if (s < 1 || 2 * s > n)
    throw std::invalid_argument("verify_zero_entry_lemma: need 1 <= s <= n/2");
  ZeroEntryReport report;
  if (k_n >= Rational(1, n - s)) {
    report.status = LemmaStatus::kVacuous;
    report.note = "hypothesis k(n) < 1/(n-s) fails; nothing to check";
    return report;
  }

  // Zeros of eW equal n minus the weight of the full set's image under W,
  // so a BFS over distinct images to depth n covers all words of length <= n.
  std::unordered_set<StateVector, StateVectorHash> seen;
  std::deque<std::pair<StateVector, int>> queue;
  StateVector full = StateVector::full(n);
  seen.insert(full);
  queue.emplace_back(full, 0);
  int min_weight = n;
  while (!queue.empty()) {
    auto [set, depth] = queue.front();
    queue.pop_front();
    min_weight = std::min(min_weight, set.weight());
    if (depth == n) continue;
    for (int l = 1; l <= a.letter_count(); ++l) {
      StateVector next = a.image(set, l);
      if (seen.count(next)) continue;
      if (seen.size() >= subset_cap) {
        report.status = LemmaStatus::kInconclusive;
        report.explored = seen.size();
        report.note = "subset cap reached";
        return report;
      }
      seen.insert(next);
      queue.emplace_back(next, depth + 1);
    }
  }
  report.explored = seen.size();
  report.max_zero_entries = n - min_weight;
  report.status = (report.max_zero_entries < s) ? LemmaStatus::kHolds : LemmaStatus::kViolated;
  if (report.status == LemmaStatus::kViolated)
    report.note = "a word of length <= n has " + std::to_string(report.max_zero_entries) +
                  " zero entries in eW";
  return report;
}

DichotomyReport verify_dichotomy_lemma(const Automaton& a, int s) {
  const int n = a.state_count();
  if (s < 1 || 2 * s > n)
    throw std::invalid_argument("verify_dichotomy_lemma: need 1 <= s <= n/2");
  DichotomyReport report;
  if (!is_strongly_connected(a)) {
    report.status = LemmaStatus::kSkipped;
    report.note = "automaton is not strongly connected";
    return report;
  }
  if (!is_synchronizing(a)) {
    report.status = LemmaStatus::kSkipped;
    report.note = "automaton is not synchronizing";
    return report;
  }

  GameSolution at_n = spf_at(a, columns_at(a, n));
  report.k_n = at_n.k;
  if (at_n.k >= Rational(1, n - s)) {
    report.status = LemmaStatus::kHolds;
    report.note = "k(n) >= 1/(n-s)";
    return report;
  }
  TrtSearch search = triple_rendezvous_time(a, default_t3_cap(n));
  if (!search.result)
    throw std::logic_error("verify_dichotomy_lemma: T_3 not found within its guaranteed cap");
  report.t3 = search.result->t3;
  // T_3 <= n(s+2)/2, exactly: 2 T_3 <= n(s+2).
  if (2 * static_cast<std::int64_t>(search.result->t3) <=
      static_cast<std::int64_t>(n) * (s + 2)) {
    report.status = LemmaStatus::kHolds;
    report.note = "T_3 <= n(s+2)/2";
  } else {
    report.status = LemmaStatus::kViolated;
    report.note = "both branches of the disjunction fail";
  }
  return report;
}

BoundReport bound_report(const Automaton& a, bool measure) {
  BoundReport report;
  report.n = a.state_count();
  report.pin_frankl = pin_frankl_bound(report.n);
  report.t3_naive = t3_bound_naive(report.n);
  report.t3_quarter = t3_bound_quarter(report.n);
  if (report.n >= 4) report.t3_sqrt = t3_bound_sqrt(report.n);
  report.strongly_connected = is_strongly_connected(a);
  if (!measure) return report;

  if (auto word = shortest_reset_word(a, default_reset_cap(report.n)))
    report.reset_threshold = word->length();
  TrtSearch search = triple_rendezvous_time(a, default_t3_cap(report.n));
  if (search.result) {
    report.t3 = search.result->t3;
    report.t3_conjecture = check_conjecture_t3(a, *search.result);
  }
  if (report.reset_threshold) {
    auto curve = spf_curve(a, *report.reset_threshold);
    report.spf_conjecture_violation = check_conjecture_spf(a, curve);
    report.spf_conjecture_checked = true;
  }
  return report;
}

}  // namespace cernylab

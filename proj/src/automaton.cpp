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

#include "cernylab/automaton.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <unordered_map>

namespace cernylab {

Automaton::Automaton(int n, std::vector<std::vector<int>> letters,
                     std::vector<std::string> letter_names)
    : n_(n), delta_(std::move(letters)), names_(std::move(letter_names)) {
  if (n_ < 1) throw std::invalid_argument("Automaton: need at least one state");
  if (delta_.empty()) throw std::invalid_argument("Automaton: need at least one letter");
  for (const auto& row : delta_) {
    if (static_cast<int>(row.size()) != n_)
      throw std::invalid_argument("Automaton: transition row has wrong length");
    for (int target : row)
      if (target < 1 || target > n_)
        throw std::invalid_argument("Automaton: transition target out of range");
  }
  if (names_.empty()) {
    for (int l = 1; l <= letter_count(); ++l) names_.push_back(default_letter_name(l));
  }
  if (names_.size() != delta_.size())
    throw std::invalid_argument("Automaton: wrong number of letter names");
}

StateVector Automaton::image(const StateVector& s, int letter) const {
  StateVector out(n_);
  for (int q : s.states()) out.insert(step(q, letter));
  return out;
}

StateVector Automaton::preimage(const StateVector& s, int letter) const {
  StateVector out(n_);
  const auto& row = delta_[letter - 1];
  for (int q = 1; q <= n_; ++q)
    if (s.contains(row[q - 1])) out.insert(q);
  return out;
}

StateVector Automaton::image_word(const StateVector& s, const Word& w) const {
  StateVector cur = s;
  for (int l : w.letters) cur = image(cur, l);
  return cur;
}

std::string Automaton::word_string(const Word& w) const {
  std::string out;
  for (int l : w.letters) out += letter_name(l);
  return out;
}

std::string default_letter_name(int letter) {
  if (letter <= 26) return std::string(1, static_cast<char>('a' + letter - 1));
  return "l" + std::to_string(letter);
}

namespace {

std::vector<std::pair<int, std::string>> content_lines(const std::string& text) {
  std::vector<std::pair<int, std::string>> out;
  std::istringstream in(text);
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    std::size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    out.emplace_back(number, line);
  }
  return out;
}

}  // namespace

Automaton parse_automaton(const std::string& text) {
  auto lines = content_lines(text);
  if (lines.empty()) throw ParseError(1, "empty input, expected header \"n m\"");

  std::istringstream header(lines[0].second);
  long n = 0, m = 0;
  std::string extra;
  if (!(header >> n >> m) || (header >> extra))
    throw ParseError(lines[0].first, "malformed header, expected \"n m\"");
  if (n < 1 || m < 1)
    throw ParseError(lines[0].first, "header values must be positive");
  if (n > 1'000'000 || m > 10'000)
    throw ParseError(lines[0].first, "header values out of supported range");

  if (static_cast<long>(lines.size()) - 1 < m) {
    int last = lines.back().first;
    throw ParseError(last, "expected " + std::to_string(m) + " transition rows, got " +
                               std::to_string(lines.size() - 1));
  }
  if (static_cast<long>(lines.size()) - 1 > m)
    throw ParseError(lines[1 + m].first, "unexpected extra row (header declares m=" +
                                             std::to_string(m) + ")");

  std::vector<std::vector<int>> delta;
  for (long j = 0; j < m; ++j) {
    const auto& [line_no, body] = lines[1 + j];
    std::istringstream row(body);
    std::vector<int> targets;
    long value;
    while (row >> value) {
      if (value < 1 || value > n)
        throw ParseError(line_no, "entry " + std::to_string(targets.size() + 1) +
                                      " target state " + std::to_string(value) +
                                      " out of range 1.." + std::to_string(n));
      targets.push_back(static_cast<int>(value));
    }
    if (!row.eof())
      throw ParseError(line_no, "entry " + std::to_string(targets.size() + 1) +
                                    " is not an integer");
    if (static_cast<long>(targets.size()) != n)
      throw ParseError(line_no, "expected " + std::to_string(n) + " entries, got " +
                                    std::to_string(targets.size()));
    delta.push_back(std::move(targets));
  }
  return Automaton(static_cast<int>(n), std::move(delta));
}

std::string format_automaton(const Automaton& a) {
  std::ostringstream out;
  out << a.state_count() << ' ' << a.letter_count() << '\n';
  for (int l = 1; l <= a.letter_count(); ++l) {
    const auto& row = a.transition_row(l);
    for (int q = 0; q < a.state_count(); ++q) {
      if (q) out << ' ';
      out << row[q];
    }
    out << '\n';
  }
  return out.str();
}

bool is_synchronizing(const Automaton& a) {
  const int n = a.state_count();
  if (n == 1) return true;
  const int m = a.letter_count();
  auto pair_id = [n](int p, int q) {  // unordered, p < q
    return (p - 1) * n + (q - 1);
  };
  std::vector<char> mergeable(static_cast<std::size_t>(n) * n, 0);
  // Reverse adjacency: image pair -> list of source pairs.
  std::vector<std::vector<int>> reverse(static_cast<std::size_t>(n) * n);
  std::deque<int> queue;
  for (int p = 1; p <= n; ++p) {
    for (int q = p + 1; q <= n; ++q) {
      int id = pair_id(p, q);
      for (int l = 1; l <= m; ++l) {
        int u = a.step(p, l), v = a.step(q, l);
        if (u == v) {
          if (!mergeable[id]) {
            mergeable[id] = 1;
            queue.push_back(id);
          }
        } else {
          if (u > v) std::swap(u, v);
          reverse[pair_id(u, v)].push_back(id);
        }
      }
    }
  }
  while (!queue.empty()) {
    int id = queue.front();
    queue.pop_front();
    for (int src : reverse[id]) {
      if (!mergeable[src]) {
        mergeable[src] = 1;
        queue.push_back(src);
      }
    }
  }
  for (int p = 1; p <= n; ++p)
    for (int q = p + 1; q <= n; ++q)
      if (!mergeable[pair_id(p, q)]) return false;
  return true;
}

std::optional<Word> shortest_reset_word(const Automaton& a, std::int64_t cap) {
  if (cap < 0) throw std::invalid_argument("shortest_reset_word: negative cap");
  const int m = a.letter_count();

  struct Node {
    StateVector set;
    int parent;
    int letter;
  };
  std::vector<Node> nodes;
  std::unordered_map<StateVector, int, StateVectorHash> seen;

  auto reconstruct = [&](int idx) {
    Word w;
    for (int cur = idx; nodes[cur].parent >= 0; cur = nodes[cur].parent)
      w.letters.push_back(nodes[cur].letter);
    std::reverse(w.letters.begin(), w.letters.end());
    return w;
  };

  StateVector start = StateVector::full(a.state_count());
  nodes.push_back({start, -1, 0});
  seen.emplace(start, 0);
  if (start.weight() == 1) return Word{};

  std::size_t layer_begin = 0, layer_end = 1;
  for (std::int64_t depth = 1; depth <= cap; ++depth) {
    for (std::size_t i = layer_begin; i < layer_end; ++i) {
      for (int l = 1; l <= m; ++l) {
        StateVector next = a.image(nodes[i].set, l);
        if (seen.count(next)) continue;
        nodes.push_back({next, static_cast<int>(i), l});
        seen.emplace(next, static_cast<int>(nodes.size() - 1));
        if (next.weight() == 1) return reconstruct(static_cast<int>(nodes.size() - 1));
      }
    }
    layer_begin = layer_end;
    layer_end = nodes.size();
    if (layer_begin == layer_end) break;  // exhausted: no reset word exists
  }
  return std::nullopt;
}

std::int64_t default_reset_cap(int n) {
  return static_cast<std::int64_t>(n - 1) * (n - 1) + n;
}

}  // namespace cernylab

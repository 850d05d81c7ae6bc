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

#ifndef CERNYLAB_AUTOMATON_HPP_
#define CERNYLAB_AUTOMATON_HPP_

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace cernylab {

/// A set of states of an n-state automaton, stored as a bitset.
/// States are 1-indexed everywhere in this library.
class StateVector {
 public:
  explicit StateVector(int n) : n_(n), bits_((n + 63) / 64, 0) {
    if (n < 0) throw std::invalid_argument("StateVector: negative size");
  }
  static StateVector full(int n) {
    StateVector s(n);
    for (int q = 1; q <= n; ++q) s.insert(q);
    return s;
  }
  static StateVector single(int n, int state) {
    StateVector s(n);
    s.insert(state);
    return s;
  }

  int size() const { return n_; }
  bool contains(int state) const {
    check(state);
    return (bits_[(state - 1) >> 6] >> ((state - 1) & 63)) & 1u;
  }
  void insert(int state) {
    check(state);
    bits_[(state - 1) >> 6] |= std::uint64_t{1} << ((state - 1) & 63);
  }
  void erase(int state) {
    check(state);
    bits_[(state - 1) >> 6] &= ~(std::uint64_t{1} << ((state - 1) & 63));
  }

  int weight() const {
    int w = 0;
    for (std::uint64_t b : bits_) w += __builtin_popcountll(b);
    return w;
  }
  bool empty() const {
    for (std::uint64_t b : bits_)
      if (b) return false;
    return true;
  }

  std::vector<int> states() const {
    std::vector<int> out;
    out.reserve(weight());
    for (std::size_t w = 0; w < bits_.size(); ++w) {
      std::uint64_t b = bits_[w];
      while (b) {
        int bit = __builtin_ctzll(b);
        out.push_back(static_cast<int>(w * 64 + bit + 1));
        b &= b - 1;
      }
    }
    return out;
  }

  bool operator==(const StateVector& o) const { return n_ == o.n_ && bits_ == o.bits_; }
  bool operator!=(const StateVector& o) const { return !(*this == o); }

  bool is_subset_of(const StateVector& o) const {
    for (std::size_t w = 0; w < bits_.size(); ++w)
      if (bits_[w] & ~o.bits_[w]) return false;
    return true;
  }

  /// Ascending lexicographic order on the entry sequence (index 1..n, 0 < 1).
  bool lex_less(const StateVector& o) const {
    for (std::size_t w = 0; w < bits_.size(); ++w) {
      if (bits_[w] == o.bits_[w]) continue;
      std::uint64_t diff = bits_[w] ^ o.bits_[w];
      std::uint64_t low = diff & (~diff + 1);
      // The earliest differing entry decides; a 0 there sorts first.
      return (o.bits_[w] & low) != 0;
    }
    return false;
  }

  std::size_t hash() const {
    std::size_t h = 1469598103934665603ull;
    for (std::uint64_t b : bits_) {
      h ^= b;
      h *= 1099511628211ull;
    }
    return h;
  }

  std::string to_bitstring() const {
    std::string s(n_, '0');
    for (int q = 1; q <= n_; ++q)
      if (contains(q)) s[q - 1] = '1';
    return s;
  }

 private:
  void check(int state) const {
    if (state < 1 || state > n_) throw std::out_of_range("StateVector: state out of range");
  }

  int n_;
  std::vector<std::uint64_t> bits_;
};

struct StateVectorHash {
  std::size_t operator()(const StateVector& s) const { return s.hash(); }
};

/// A word is a sequence of 1-indexed letters, in application order:
/// the leftmost letter acts on states first.
struct Word {
  std::vector<int> letters;

  int length() const { return static_cast<int>(letters.size()); }
  bool empty() const { return letters.empty(); }
  bool operator==(const Word& o) const { return letters == o.letters; }
};

/// Deterministic complete automaton: n states, m letters, each letter a
/// total map on {1..n} (a binary row-stochastic matrix).
class Automaton {
 public:
  /// letters[l][q-1] is the successor of state q under letter l+1.
  Automaton(int n, std::vector<std::vector<int>> letters,
            std::vector<std::string> letter_names = {});

  int state_count() const { return n_; }
  int letter_count() const { return static_cast<int>(delta_.size()); }
  const std::string& letter_name(int letter) const { return names_[letter - 1]; }
  const std::vector<int>& transition_row(int letter) const { return delta_[letter - 1]; }

  /// delta(state, letter); both 1-indexed.
  int step(int state, int letter) const { return delta_[letter - 1][state - 1]; }

  /// {delta(q, l) : q in s}
  StateVector image(const StateVector& s, int letter) const;
  /// {q : delta(q, l) in s}; this is the column-update step L * s.
  StateVector preimage(const StateVector& s, int letter) const;
  /// Left-to-right composition of image(); the empty word is the identity.
  StateVector image_word(const StateVector& s, const Word& w) const;

  std::string word_string(const Word& w) const;

 private:
  int n_;
  std::vector<std::vector<int>> delta_;
  std::vector<std::string> names_;
};

/// Parse failure for the text format; line numbers are 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// Text format: header "n m", then m lines of n space-separated targets,
/// entry i of line j being delta(q_i, letter_j).  '#' starts a comment line.
Automaton parse_automaton(const std::string& text);
std::string format_automaton(const Automaton& a);

/// Canonical letter names: a, b, ..., z, then l27, l28, ...
std::string default_letter_name(int letter);

/// Pair-merging criterion, backward BFS on the pair graph from diagonal
/// pairs; polynomial in n and m.
bool is_synchronizing(const Automaton& a);

/// BFS over subsets from the full set, letters expanded in declared order;
/// returns the lexicographically-first shortest word reaching a singleton,
/// or nullopt if none exists of length <= cap.  Exponential in n.
std::optional<Word> shortest_reset_word(const Automaton& a, std::int64_t cap);

/// (n-1)^2 + n: Cerny bound plus slack.
std::int64_t default_reset_cap(int n);

}  // namespace cernylab

#endif  // CERNYLAB_AUTOMATON_HPP_

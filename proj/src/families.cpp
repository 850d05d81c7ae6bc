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

#include "cernylab/families.hpp"

#include <sstream>
#include <vector>

#include "cernylab/rng.hpp"

namespace cernylab {

Automaton cerny(int n) {
  if (n < 2) throw std::invalid_argument("cerny: need n >= 2");
  std::vector<int> a(n), b(n);
  for (int q = 1; q <= n; ++q) {
    a[q - 1] = (q == n) ? 1 : q;
    b[q - 1] = (q == n) ? 1 : q + 1;
  }
  return Automaton(n, {a, b});
}

Automaton tr(int n) {
  if (n < 9 || n % 2 == 0) throw std::invalid_argument("tr: need odd n >= 9");
  std::vector<int> a = {7, 4, 3, 2, 3, 8, 1, 6, 9};
  std::vector<int> b = {2, 3, 1, 5, 6, 4, 9, 8, 7};
  for (int m = 9; m < n; m += 2) {
    // l1 fixes q_m; the roles alternate between extensions.
    std::vector<int>& l1 = (a[m - 1] == m) ? a : b;
    std::vector<int>& l2 = (a[m - 1] == m) ? b : a;
    l1.resize(m + 2);
    l2.resize(m + 2);
    l1[m - 1] = m + 2;
    l1[m + 1] = m;
    l2[m - 2] = m + 1;
    l2[m] = m - 1;
    l2[m + 1] = m + 2;
    l1[m] = m + 1;
  }
  return Automaton(n, {a, b});
}

Automaton random_automaton(int n, int m, std::uint64_t seed) {
  if (n < 1 || m < 1) throw std::invalid_argument("random_automaton: need n, m >= 1");
  SplitMix64 rng(seed);
  std::vector<std::vector<int>> delta(m, std::vector<int>(n));
  for (int l = 0; l < m; ++l)
    for (int q = 0; q < n; ++q)
      delta[l][q] = 1 + static_cast<int>(rng.next() % static_cast<std::uint64_t>(n));
  return Automaton(n, std::move(delta));
}

std::optional<Automaton> parse_builtin(const std::string& spec) {
  auto pos = spec.find(':');
  if (pos == std::string::npos) return std::nullopt;
  std::string kind = spec.substr(0, pos);
  if (kind != "cerny" && kind != "tr" && kind != "random") return std::nullopt;

  std::vector<long long> args;
  std::string rest = spec.substr(pos + 1);
  std::istringstream in(rest);
  std::string part;
  while (std::getline(in, part, ':')) {
    try {
      std::size_t used = 0;
      long long v = std::stoll(part, &used);
      if (used != part.size()) throw std::invalid_argument("");
      args.push_back(v);
    } catch (const std::exception&) {
      throw std::invalid_argument("builtin spec \"" + spec + "\": bad number \"" + part + "\"");
    }
  }

  if (kind == "cerny") {
    if (args.size() != 1) throw std::invalid_argument("builtin cerny:N takes one parameter");
    return cerny(static_cast<int>(args[0]));
  }
  if (kind == "tr") {
    if (args.size() != 1) throw std::invalid_argument("builtin tr:N takes one parameter");
    return tr(static_cast<int>(args[0]));
  }
  if (args.size() != 3) throw std::invalid_argument("builtin random:N:M:SEED takes three parameters");
  return random_automaton(static_cast<int>(args[0]), static_cast<int>(args[1]),
                          static_cast<std::uint64_t>(args[2]));
}

}  // namespace cernylab

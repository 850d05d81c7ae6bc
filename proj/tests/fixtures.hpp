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

#ifndef CERNYLAB_TESTS_FIXTURES_HPP_
#define CERNYLAB_TESTS_FIXTURES_HPP_

#include <map>
#include <set>
#include <vector>

namespace cernylab::fixtures {

/// Reachable-column blocks of the 9-state counterexample at t = 11,
/// keyed by first-appearance time (identity block at 0 omitted).
inline const std::map<int, std::set<std::vector<int>>>& tr9_blocks_at_11() {
  static const std::map<int, std::set<std::vector<int>>> blocks = {
      {1, {{3, 5}}},
      {2, {{2, 4}}},
      {3, {{1, 6}}},
      {4, {{7, 8}}},
      {5, {{8, 9}}},
      {6, {{6, 9}}},
      {7, {{5, 7}}},
      {8, {{4, 9}}},
      {9, {{2, 9}, {6, 7}}},
      {10, {{1, 7}, {1, 8}, {5, 9}}},
      {11, {{3, 8}, {3, 9}, {4, 7}}},
  };
  return blocks;
}

/// The ordered columns of the 4-state cyclic automaton's table at t = 3.
inline const std::vector<std::vector<int>>& c4_columns_at_3() {
  static const std::vector<std::vector<int>> columns = {
      {1}, {2}, {3}, {4}, {1, 4}, {3, 4}, {2, 3}};
  return columns;
}

}  // namespace cernylab::fixtures

#endif  // CERNYLAB_TESTS_FIXTURES_HPP_

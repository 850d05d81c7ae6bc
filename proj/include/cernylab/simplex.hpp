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

#ifndef CERNYLAB_SIMPLEX_HPP_
#define CERNYLAB_SIMPLEX_HPP_

#include <vector>

#include "cernylab/rational.hpp"

namespace cernylab::lp {

enum class Sense { kMaximize, kMinimize };
enum class Rel { kLe, kGe, kEq };
enum class Status { kOptimal, kInfeasible, kUnbounded };

struct Row {
  std::vector<Rational> a;
  Rel rel;
  Rational b;
};

/// All variables are implicitly >= 0.
struct Problem {
  Sense sense = Sense::kMaximize;
  std::vector<Rational> c;
  std::vector<Row> rows;
};

struct Result {
  Status status;
  Rational value;           // valid when kOptimal
  std::vector<Rational> x;  // basic optimal solution, valid when kOptimal
};

/// Two-phase dense simplex over exact rationals with Bland's anti-cycling
/// rule.  No floating point anywhere.
Result solve(const Problem& p);

}  // namespace cernylab::lp

#endif  // CERNYLAB_SIMPLEX_HPP_

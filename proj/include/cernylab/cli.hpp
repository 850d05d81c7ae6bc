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

#ifndef CERNYLAB_CLI_HPP_
#define CERNYLAB_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace cernylab::cli {

/// Runs one CLI invocation.  args excludes the program name.  Exit codes:
/// 0 success, 1 negative domain result (not found / conjecture violated),
/// 2 usage or input parse error.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace cernylab::cli

#endif  // CERNYLAB_CLI_HPP_

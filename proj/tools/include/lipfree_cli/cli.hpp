// Copyright 2026 The lipfree Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef LIPFREE_CLI_CLI_HPP_
#define LIPFREE_CLI_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace lipfree::cli {

inline constexpr int kHolds = 0;
inline constexpr int kError = 1;
inline constexpr int kRefuted = 2;

// args excludes the program name. Reports go to out, diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lipfree::cli

#endif  // LIPFREE_CLI_CLI_HPP_

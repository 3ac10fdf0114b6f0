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

#ifndef LIPFREE_SRC_SUBSETS_HPP_
#define LIPFREE_SRC_SUBSETS_HPP_

#include <algorithm>
#include <cstddef>
#include <vector>

#include "lipfree/rational.hpp"

namespace lipfree::internal {

// All index subsets of `weights` (nonnegative) with total >= threshold, by
// decreasing total; equal totals in lexicographic order of the sorted index
// lists. Exponential: callers cap weights.size().
inline std::vector<std::vector<std::size_t>> heavy_subsets(const std::vector<Rational>& weights,
                                                           const Rational& threshold) {
  const std::size_t n = weights.size();
  std::vector<Rational> suffix(n + 1);
  for (std::size_t i = n; i-- > 0;) suffix[i] = suffix[i + 1] + weights[i];

  struct Candidate {
    std::vector<std::size_t> members;
    Rational mass;
  };
  std::vector<Candidate> found;
  std::vector<std::size_t> current;
  auto walk = [&](auto&& self, std::size_t i, const Rational& mass) -> void {
    if (mass + suffix[i] < threshold) return;
    if (i == n) {
      found.push_back({current, mass});
      return;
    }
    current.push_back(i);
    self(self, i + 1, mass + weights[i]);
    current.pop_back();
    self(self, i + 1, mass);
  };
  walk(walk, 0, Rational(0));

  std::stable_sort(found.begin(), found.end(), [](const Candidate& a, const Candidate& b) {
    if (a.mass != b.mass) return a.mass > b.mass;
    return a.members < b.members;
  });
  std::vector<std::vector<std::size_t>> out;
  out.reserve(found.size());
  for (auto& c : found) out.push_back(std::move(c.members));
  return out;
}

}  // namespace lipfree::internal

#endif  // LIPFREE_SRC_SUBSETS_HPP_

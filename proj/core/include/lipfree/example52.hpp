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

#ifndef LIPFREE_EXAMPLE52_HPP_
#define LIPFREE_EXAMPLE52_HPP_

#include <cstddef>
#include <cstdint>
#include <set>
#include <vector>

#include "lipfree/lipschitz.hpp"
#include "lipfree/measure.hpp"
#include "lipfree/metric.hpp"

// Fixtures for the three-cycle space produced by build_example52.
namespace lipfree::example52 {

// {x1, x2, x3, y1, y2, y3}
std::set<PointId> core_points(const FiniteMetricSpace& space);

// f(x1) = f(y3) = 0, f(y2) = 1/2, f(y1) = f(x3) = 3/2, f(x2) = 2, and 1 at
// every level point.
LipschitzFunction fixture_function(const FiniteMetricSpace& space);

// 1/14
Rational fixture_eps();

// Unit atoms at every ordered pair of core points, in declaration order.
std::vector<PairMeasure> unit_atoms(const FiniteMetricSpace& space);

// Seeded random positive measures with cyclically monotonic support and total
// mass 1 (hence optimal and normalized). Atoms avoid the top level so that
// at least one level stays untouched; with a single level only core points
// are used.
std::vector<PairMeasure> random_measures(const FiniteMetricSpace& space, std::size_t count,
                                         std::uint64_t seed);

}  // namespace lipfree::example52

#endif  // LIPFREE_EXAMPLE52_HPP_

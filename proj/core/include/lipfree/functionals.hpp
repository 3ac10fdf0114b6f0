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

#ifndef LIPFREE_FUNCTIONALS_HPP_
#define LIPFREE_FUNCTIONALS_HPP_

#include <cstddef>
#include <optional>
#include <vector>

#include "lipfree/lipschitz.hpp"
#include "lipfree/lp.hpp"
#include "lipfree/measure.hpp"
#include "lipfree/metric.hpp"
#include "lipfree/monotone.hpp"

namespace lipfree {

// Integral of the de Leeuw transform: sum over atoms of weight * slope(f, pair).
Rational apply(const FiniteMetricSpace& space, const PairMeasure& measure, const LipschitzFunction& f);

// Moves every negative atom w < 0 at (x, y) to weight -w at (y, x), merging
// with whatever sits there. The result is positive, has the same total
// variation and induces the same functional.
PairMeasure positivize(const PairMeasure& measure);

struct DualNormResult {
  Rational norm;
  // Attains the norm: apply(measure, maximizer) == norm, lip_norm <= 1.
  LipschitzFunction maximizer;
  // Positive measure inducing the same functional with total mass == norm;
  // the matching upper bound (the LP's dual solution, reweighted by distance).
  PairMeasure representative;
};

// Exact norm of the induced functional: maximizes apply(measure, f) over the
// unit ball {f(p) - f(q) <= d(p, q)} with f(base) = 0.
DualNormResult dual_norm(const FiniteMetricSpace& space, const PairMeasure& measure);

// Divides the weights by the LP dual norm. Throws InputError if it is zero.
PairMeasure normalize(const FiniteMetricSpace& space, const PairMeasure& measure);

struct OptimalityVerdict {
  bool optimal = false;
  PairSet support;
  std::optional<CmCertificate> certificate;  // support is cyclically monotonic
  std::optional<CmViolation> violation;
  Rational mass;       // ||mu||
  Rational dual_norm;  // LP value
  Rational gap;        // mass - dual_norm
};

// Positive finitely supported measures are optimal exactly when their support
// is cyclically monotonic. The LP norm is always computed as well; if the two
// routes disagree an InternalError is thrown. Throws InputError if the measure
// has a negative atom.
OptimalityVerdict is_optimal(const FiniteMetricSpace& space, const PairMeasure& measure);

struct AttestationResult {
  bool attained = false;
  PairSet pairs;  // gamma-CM set meeting the mass bound, when attained
  std::optional<LipschitzFunction> witness;
  Rational mass;       // nu+(A) + nu-(r(A)) for the returned set
  Rational threshold;  // gamma |nu|(M~)
  std::size_t subsets_examined = 0;
};

// Searches subsets A of supp(nu+) u r(supp(nu-)) by decreasing
// nu+(A) + nu-(r(A)) for a gamma-CM one with that mass >= gamma |nu|(M~).
// Throws InputError when the candidate pool exceeds max_pool pairs.
AttestationResult check_norm_attainment_signed(const FiniteMetricSpace& space,
                                               const PairMeasure& measure, const Gamma& gamma,
                                               std::size_t max_pool = 16);

struct SliceOptions {
  // Rescale by the LP dual norm first instead of rejecting unnormalized input.
  bool auto_normalize = false;
  unsigned jobs = 1;
  // Evaluated before the declaration-order scan.
  std::optional<std::pair<PointId, PointId>> hint;
};

struct SlicePairBound {
  PointId u;
  PointId v;
  Rational forward;   // max slope(f, (u, v)) over the closed slice
  Rational backward;  // max slope(g, (v, u)) over the closed slice
  // LP multipliers backing each value (see slice_program).
  std::vector<Rational> forward_multipliers;
  std::vector<Rational> backward_multipliers;
};

struct SliceDiameter {
  // Supremal diameter of the open slice {f in B : apply(mu, f) > 1 - alpha}.
  Rational value;
  PointId u;
  PointId v;
  LipschitzFunction f;  // slope(f, (u, v)) == forward
  LipschitzFunction g;  // slope(g, (v, u)) == backward; ||f - g|| >= value
  // Every unordered pair examined, in scan order. The scan stops early once a
  // pair reaches 2, the largest possible diameter.
  std::vector<SlicePairBound> evaluated;
  bool exhaustive = false;
};

// Requires dual_norm(measure) == 1 (unless auto_normalize) and
// 0 < alpha <= 2. For each unordered {u, v} solves two LPs over the closed
// slice and reports the largest sum.
SliceDiameter slice_diameter(const FiniteMetricSpace& space, const PairMeasure& measure,
                             const Rational& alpha, const SliceOptions& options = {});

// LP building blocks. Variables are the values at non-base points in
// declaration order; rows are f(p) - f(q) <= d(p, q) for all_pairs(space).
LinearProgram unit_ball_program(const FiniteMetricSpace& space);
// Coefficients c with c . x == apply(measure, f) for x the non-base values of f.
std::vector<Rational> functional_coefficients(const FiniteMetricSpace& space,
                                              const PairMeasure& measure);
// unit_ball_program plus -apply(measure, f) <= -(threshold), objective slope
// across (u, v).
LinearProgram slice_program(const FiniteMetricSpace& space, const PairMeasure& measure,
                            const Rational& threshold, PointId u, PointId v);
LipschitzFunction function_from_point(const FiniteMetricSpace& space, const std::vector<Rational>& point);

}  // namespace lipfree

#endif  // LIPFREE_FUNCTIONALS_HPP_

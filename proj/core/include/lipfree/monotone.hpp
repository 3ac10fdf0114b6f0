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

#ifndef LIPFREE_MONOTONE_HPP_
#define LIPFREE_MONOTONE_HPP_

#include <cstddef>
#include <optional>
#include <variant>
#include <vector>

#include "lipfree/lipschitz.hpp"
#include "lipfree/measure.hpp"
#include "lipfree/metric.hpp"
#include "lipfree/rational.hpp"

namespace lipfree {

// Relaxation parameter in (0, 1]; 1 is classical cyclic monotonicity.
class Gamma {
 public:
  // Throws InputError outside (0, 1].
  explicit Gamma(Rational value);
  static Gamma one() { return Gamma(Rational(1)); }
  const Rational& value() const { return value_; }

 private:
  Rational value_;
};

// Potentials alpha_i, one per pair of the tested set (by index), with
// alpha_i <= alpha_j + beta_ij for all i, j.
struct CmCertificate {
  std::vector<Rational> potentials;
};

// Simple cycle i_1..i_k of pair indices whose sum of beta_{i_t, i_{t+1}}
// (indices mod k) equals deficit < 0.
struct CmViolation {
  std::vector<std::size_t> cycle;
  Rational deficit;
};

using CmVerdict = std::variant<CmCertificate, CmViolation>;

inline bool is_certified(const CmVerdict& verdict) {
  return std::holds_alternative<CmCertificate>(verdict);
}

// beta_ij = min{ d(x_i, y_j) - gamma d(x_i, y_i), d(y_i, y_j) } for pairs
// (x_i, y_i), (x_j, y_j) of the set.
Rational beta(const FiniteMetricSpace& space, const PairSet& pairs, const Gamma& gamma,
              std::size_t i, std::size_t j);

// Decides gamma-cyclic monotonicity by shortest paths on the difference system
// alpha_i <= alpha_j + beta_ij (edge j -> i of weight beta_ij, virtual zero
// source). Returns the shortest-path potentials or a negative simple cycle.
CmVerdict check_gamma_cm(const FiniteMetricSpace& space, const PairSet& pairs, const Gamma& gamma);

bool replay_certificate(const FiniteMetricSpace& space, const PairSet& pairs, const Gamma& gamma,
                        const CmCertificate& certificate);
// Checks the cycle is simple, in range, and sums to deficit < 0.
bool replay_violation(const FiniteMetricSpace& space, const PairSet& pairs, const Gamma& gamma,
                      const CmViolation& violation);

// Test oracle straight from the definition: enumerates every simple cycle
// (length-1 loops included) and checks each beta-sum is nonnegative.
// Throws InputError for more than 10 pairs.
bool brute_force_cm_oracle(const FiniteMetricSpace& space, const PairSet& pairs, const Gamma& gamma);

// f(x) = min_i (alpha_i + d(x, y_i)), shifted to vanish at the base. The result
// is 1-Lipschitz with slope >= gamma on every pair. Throws InputError if the
// certificate does not replay.
LipschitzFunction synthesize_witness(const FiniteMetricSpace& space, const PairSet& pairs,
                                     const Gamma& gamma, const CmCertificate& certificate);

struct AugmentedCheck {
  PairSet augmented;  // pairs followed by (u, v)
  CmVerdict verdict;
  std::optional<LipschitzFunction> witness;  // present iff certified
};

// Decides pairs + {(u, v)}. When certified, also confirms that the witness
// satisfies f(y) - f(x) + gamma d(u, v) <= d(x, u) + d(y, v) on the endpoints
// of pairs; a failure there is an InternalError.
AugmentedCheck check_augmented(const FiniteMetricSpace& space, const PairSet& pairs,
                               const Gamma& gamma, PointId u, PointId v);

struct PruneResult {
  PairSet kept;
  // gamma = 1 potentials over kept, from the rounding construction (or from
  // check_gamma_cm in the greedy fallback).
  CmCertificate certificate;
  // Number of fractional-part buckets K (0 when no bucketing happened).
  std::size_t buckets = 0;
  std::optional<std::size_t> dropped_bucket;  // 1-based
  Rational dropped_mass;
  // n(1 - gamma) >= 1: the mass bound is vacuous and kept is a greedy
  // cyclically monotonic subset by decreasing weight.
  bool bound_vacuous = false;
};

// Integer metrics with distances in {0, ..., bound}: trims a gamma-CM set to a
// cyclically monotonic subset B with mu(B) >= mu(A) - 2 bound (1 - gamma) mu(M~)
// by bucketing fractional parts of the potentials. Throws InputError on
// precondition failures (non-integer or out-of-bound metric, mu not positive,
// pairs not gamma-CM).
PruneResult prune_to_cm(const FiniteMetricSpace& space, const PairSet& pairs,
                        const PairMeasure& measure, const Gamma& gamma, int bound);

}  // namespace lipfree

#endif  // LIPFREE_MONOTONE_HPP_

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

#ifndef LIPFREE_MEASURE_HPP_
#define LIPFREE_MEASURE_HPP_

#include <map>

#include "lipfree/metric.hpp"
#include "lipfree/rational.hpp"

namespace lipfree {

// Finitely supported signed measure on the pair space: nonzero rational weights
// on finitely many ordered pairs. Atoms iterate in (from, to) declaration order.
class PairMeasure {
 public:
  PairMeasure() = default;

  // Adds weight to the atom at pair, merging with an existing atom and dropping
  // it if the sum cancels to zero. Throws InputError when from == to.
  void add(const OrderedPair& pair, const Rational& weight);

  static PairMeasure unit_atom(const OrderedPair& pair);

  const std::map<OrderedPair, Rational>& atoms() const { return atoms_; }
  Rational weight(const OrderedPair& pair) const;
  bool empty() const { return atoms_.empty(); }
  std::size_t size() const { return atoms_.size(); }

  // |mu|(M~) = sum of |weights|.
  Rational total_variation() const;
  // mu(M~) = sum of weights.
  Rational total_mass() const;
  Rational mass(const PairSet& pairs) const;
  bool is_positive() const;

  PairMeasure positive_part() const;
  // The negative part as a positive measure (mu = mu+ - mu-).
  PairMeasure negative_part() const;
  PairSet support() const;

  PairMeasure& operator*=(const Rational& scale);
  friend bool operator==(const PairMeasure&, const PairMeasure&) = default;

 private:
  std::map<OrderedPair, Rational> atoms_;
};

// Throws InputError if any atom references a point outside the space.
void check_measure(const FiniteMetricSpace& space, const PairMeasure& measure);

}  // namespace lipfree

#endif  // LIPFREE_MEASURE_HPP_

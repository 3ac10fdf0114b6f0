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

#ifndef LIPFREE_LIPSCHITZ_HPP_
#define LIPFREE_LIPSCHITZ_HPP_

#include <map>
#include <vector>

#include "lipfree/metric.hpp"
#include "lipfree/rational.hpp"

namespace lipfree {

// A function on every point of a space, vanishing at the base point.
class LipschitzFunction {
 public:
  // Throws InputError if the size is wrong or the base value is nonzero.
  LipschitzFunction(const FiniteMetricSpace& space, std::vector<Rational> values);

  static LipschitzFunction zero(const FiniteMetricSpace& space);

  const Rational& operator()(PointId p) const { return values_.at(p.index); }
  const std::vector<Rational>& values() const { return values_; }
  std::size_t size() const { return values_.size(); }

  LipschitzFunction& operator+=(const LipschitzFunction& other);
  LipschitzFunction& operator-=(const LipschitzFunction& other);
  LipschitzFunction& operator*=(const Rational& scale);

  friend LipschitzFunction operator+(LipschitzFunction a, const LipschitzFunction& b) { return a += b; }
  friend LipschitzFunction operator-(LipschitzFunction a, const LipschitzFunction& b) { return a -= b; }
  friend LipschitzFunction operator*(const Rational& s, LipschitzFunction a) { return a *= s; }
  friend bool operator==(const LipschitzFunction&, const LipschitzFunction&) = default;

 private:
  LipschitzFunction() = default;
  std::vector<Rational> values_;
};

// Values on a nonempty subset of the points.
using PartialFunction = std::map<PointId, Rational>;

struct ExtensionResult {
  LipschitzFunction function;
  // Constant subtracted from the raw extension so that it vanishes at the base.
  // Zero whenever the base lies in the domain with value 0.
  Rational shift;
};

// Best Lipschitz constant: max over unordered pairs of |f(x) - f(y)| / d(x, y).
Rational lip_norm(const FiniteMetricSpace& space, const LipschitzFunction& f);

// De Leeuw slope (f(from) - f(to)) / d(from, to), i.e. f evaluated on the
// molecule of the pair.
Rational slope(const FiniteMetricSpace& space, const LipschitzFunction& f, const OrderedPair& pair);

// Smallest 1-Lipschitz extension y -> max_{x in D} (partial(x) - d(x, y)),
// then shifted to vanish at the base. Throws InputError unless partial is
// 1-Lipschitz on its domain.
ExtensionResult mcshane_sup_extension(const PartialFunction& partial, const FiniteMetricSpace& space);

// Largest one, y -> min_{x in D} (partial(x) + d(x, y)).
ExtensionResult mcshane_inf_extension(const PartialFunction& partial, const FiniteMetricSpace& space);

// Integer rounding f(x) = floor(g(x)) - floor(g(base)). Requires an integer
// metric, lip_norm(g) <= 1 and slope(g, p) = 1 on every p in pairs; the
// result is integer valued, 1-Lipschitz, and keeps slope exactly 1 on pairs.
LipschitzFunction floor_round(const FiniteMetricSpace& space, const LipschitzFunction& g,
                              const PairSet& pairs);

}  // namespace lipfree

#endif  // LIPFREE_LIPSCHITZ_HPP_

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

#include "lipfree/lipschitz.hpp"

#include <string>

namespace lipfree {
namespace {

void require_nonexpansive(const PartialFunction& partial, const FiniteMetricSpace& space) {
  if (partial.empty()) throw InputError("extension needs a nonempty domain");
  for (const auto& [p, fp] : partial) {
    if (p.index >= space.size()) throw InputError("partial function point outside the space");
    for (const auto& [q, fq] : partial) {
      if (fp - fq > space.distance(p, q)) {
        throw InputError("partial function is not 1-Lipschitz: f(" + space.label(p) + ") - f(" +
                         space.label(q) + ") = " + to_string(fp - fq) + " > " +
                         to_string(space.distance(p, q)));
      }
    }
  }
}

ExtensionResult normalize(const FiniteMetricSpace& space, std::vector<Rational> raw) {
  Rational shift = raw[space.base().index];
  for (auto& value : raw) value -= shift;
  return ExtensionResult{LipschitzFunction(space, std::move(raw)), std::move(shift)};
}

}  // namespace

LipschitzFunction::LipschitzFunction(const FiniteMetricSpace& space, std::vector<Rational> values)
    : values_(std::move(values)) {
  if (values_.size() != space.size()) {
    throw InputError("function has " + std::to_string(values_.size()) + " values for " +
                     std::to_string(space.size()) + " points");
  }
  if (values_[space.base().index] != 0) {
    throw InputError("function does not vanish at base point " + space.label(space.base()));
  }
}

LipschitzFunction LipschitzFunction::zero(const FiniteMetricSpace& space) {
  return LipschitzFunction(space, std::vector<Rational>(space.size()));
}

LipschitzFunction& LipschitzFunction::operator+=(const LipschitzFunction& other) {
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += other.values_.at(i);
  return *this;
}

LipschitzFunction& LipschitzFunction::operator-=(const LipschitzFunction& other) {
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] -= other.values_.at(i);
  return *this;
}

LipschitzFunction& LipschitzFunction::operator*=(const Rational& scale) {
  for (auto& v : values_) v *= scale;
  return *this;
}

Rational lip_norm(const FiniteMetricSpace& space, const LipschitzFunction& f) {
  Rational best = 0;
  for (std::size_t i = 0; i < space.size(); ++i) {
    for (std::size_t j = i + 1; j < space.size(); ++j) {
      const PointId p{i}, q{j};
      Rational ratio = abs(f(p) - f(q)) / space.distance(p, q);
      if (ratio > best) best = std::move(ratio);
    }
  }
  return best;
}

Rational slope(const FiniteMetricSpace& space, const LipschitzFunction& f, const OrderedPair& pair) {
  return (f(pair.from) - f(pair.to)) / space.distance(pair);
}

ExtensionResult mcshane_sup_extension(const PartialFunction& partial, const FiniteMetricSpace& space) {
  require_nonexpansive(partial, space);
  std::vector<Rational> raw(space.size());
  for (auto y : space.points()) {
    if (auto it = partial.find(y); it != partial.end()) {
      raw[y.index] = it->second;
      continue;
    }
    bool first = true;
    for (const auto& [x, fx] : partial) {
      Rational candidate = fx - space.distance(x, y);
      if (first || candidate > raw[y.index]) raw[y.index] = std::move(candidate);
      first = false;
    }
  }
  return normalize(space, std::move(raw));
}

ExtensionResult mcshane_inf_extension(const PartialFunction& partial, const FiniteMetricSpace& space) {
  require_nonexpansive(partial, space);
  std::vector<Rational> raw(space.size());
  for (auto y : space.points()) {
    if (auto it = partial.find(y); it != partial.end()) {
      raw[y.index] = it->second;
      continue;
    }
    bool first = true;
    for (const auto& [x, fx] : partial) {
      Rational candidate = fx + space.distance(x, y);
      if (first || candidate < raw[y.index]) raw[y.index] = std::move(candidate);
      first = false;
    }
  }
  return normalize(space, std::move(raw));
}

LipschitzFunction floor_round(const FiniteMetricSpace& space, const LipschitzFunction& g,
                              const PairSet& pairs) {
  if (!space.has_integer_distances()) throw InputError("floor_round needs an integer metric");
  if (lip_norm(space, g) > 1) throw InputError("floor_round needs a 1-Lipschitz function");
  for (const auto& p : pairs) {
    if (slope(space, g, p) != 1) {
      throw InputError("floor_round needs slope 1 on every pair; " + to_string(space, p) +
                       " has slope " + to_string(slope(space, g, p)));
    }
  }
  const Rational base_floor = floor(g(space.base()));
  std::vector<Rational> values(space.size());
  for (auto p : space.points()) values[p.index] = floor(g(p)) - base_floor;
  return LipschitzFunction(space, std::move(values));
}

}  // namespace lipfree

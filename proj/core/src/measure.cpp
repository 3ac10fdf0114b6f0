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

#include "lipfree/measure.hpp"

namespace lipfree {

void PairMeasure::add(const OrderedPair& pair, const Rational& weight) {
  if (pair.from == pair.to) throw InputError("measure atom on a diagonal pair");
  if (weight == 0) return;
  auto [it, inserted] = atoms_.try_emplace(pair, weight);
  if (inserted) return;
  it->second += weight;
  if (it->second == 0) atoms_.erase(it);
}

PairMeasure PairMeasure::unit_atom(const OrderedPair& pair) {
  PairMeasure mu;
  mu.add(pair, 1);
  return mu;
}

Rational PairMeasure::weight(const OrderedPair& pair) const {
  const auto it = atoms_.find(pair);
  return it == atoms_.end() ? Rational(0) : it->second;
}

Rational PairMeasure::total_variation() const {
  Rational total = 0;
  for (const auto& [pair, w] : atoms_) total += abs(w);
  return total;
}

Rational PairMeasure::total_mass() const {
  Rational total = 0;
  for (const auto& [pair, w] : atoms_) total += w;
  return total;
}

Rational PairMeasure::mass(const PairSet& pairs) const {
  Rational total = 0;
  for (const auto& p : pairs) total += weight(p);
  return total;
}

bool PairMeasure::is_positive() const {
  for (const auto& [pair, w] : atoms_) {
    if (w < 0) return false;
  }
  return true;
}

PairMeasure PairMeasure::positive_part() const {
  PairMeasure out;
  for (const auto& [pair, w] : atoms_) {
    if (w > 0) out.atoms_.emplace(pair, w);
  }
  return out;
}

PairMeasure PairMeasure::negative_part() const {
  PairMeasure out;
  for (const auto& [pair, w] : atoms_) {
    if (w < 0) out.atoms_.emplace(pair, -w);
  }
  return out;
}

PairSet PairMeasure::support() const {
  PairSet out;
  for (const auto& [pair, w] : atoms_) out.insert(pair);
  return out;
}

PairMeasure& PairMeasure::operator*=(const Rational& scale) {
  if (scale == 0) {
    atoms_.clear();
    return *this;
  }
  for (auto& [pair, w] : atoms_) w *= scale;
  return *this;
}

void check_measure(const FiniteMetricSpace& space, const PairMeasure& measure) {
  for (const auto& [pair, w] : measure.atoms()) {
    if (pair.from.index >= space.size() || pair.to.index >= space.size()) {
      throw InputError("measure atom references a point outside the space");
    }
  }
}

}  // namespace lipfree

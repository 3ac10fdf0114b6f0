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

#include "lipfree/example52.hpp"

#include <random>
#include <string>

#include "lipfree/monotone.hpp"

namespace lipfree::example52 {

std::set<PointId> core_points(const FiniteMetricSpace& space) {
  std::set<PointId> out;
  for (const char* label : {"x1", "x2", "x3", "y1", "y2", "y3"}) out.insert(space.at(label));
  return out;
}

LipschitzFunction fixture_function(const FiniteMetricSpace& space) {
  std::vector<Rational> values(space.size(), Rational(1));
  const auto set = [&](const char* label, Rational v) { values[space.at(label).index] = v; };
  set("x1", 0);
  set("y3", 0);
  set("y2", Rational(1, 2));
  set("y1", Rational(3, 2));
  set("x3", Rational(3, 2));
  set("x2", 2);
  return LipschitzFunction(space, std::move(values));
}

Rational fixture_eps() { return Rational(1, 14); }

std::vector<PairMeasure> unit_atoms(const FiniteMetricSpace& space) {
  std::vector<PairMeasure> out;
  const auto core = core_points(space);
  for (auto a : core) {
    for (auto b : core) {
      if (a != b) out.push_back(PairMeasure::unit_atom(OrderedPair{a, b}));
    }
  }
  return out;
}

std::vector<PairMeasure> random_measures(const FiniteMetricSpace& space, std::size_t count,
                                         std::uint64_t seed) {
  std::vector<PointId> pool;
  for (auto p : space.points()) {
    const std::string& label = space.label(p);
    const auto caret = label.find('^');
    // Level points are labelled u<i>^<j>, v<i>^<j>; the last level is left alone.
    if (caret != std::string::npos) {
      const auto level = std::stoi(label.substr(caret + 1));
      const auto top = (space.size() - 6) / 6;
      if (static_cast<std::size_t>(level) >= top) continue;
    }
    pool.push_back(p);
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  std::uniform_int_distribution<int> size(1, 4);
  std::uniform_int_distribution<int> weight(1, 5);
  std::vector<PairMeasure> out;
  while (out.size() < count) {
    const int want = size(rng);
    PairSet support;
    for (int attempt = 0; attempt < 40 && static_cast<int>(support.size()) < want; ++attempt) {
      const PointId a = pool[pick(rng)];
      const PointId b = pool[pick(rng)];
      if (a == b || support.contains(OrderedPair{a, b})) continue;
      PairSet trial = support;
      trial.insert(OrderedPair{a, b});
      if (is_certified(check_gamma_cm(space, trial, Gamma::one()))) support = std::move(trial);
    }
    if (support.empty()) continue;
    PairMeasure mu;
    Rational total = 0;
    std::vector<int> weights;
    for (std::size_t i = 0; i < support.size(); ++i) {
      weights.push_back(weight(rng));
      total += weights.back();
    }
    for (std::size_t i = 0; i < support.size(); ++i) mu.add(support[i], Rational(weights[i]) / total);
    out.push_back(std::move(mu));
  }
  return out;
}

}  // namespace lipfree::example52

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

#include "lipfree/metric.hpp"

#include <charconv>

namespace lipfree {

FiniteMetricSpace::FiniteMetricSpace(std::vector<std::string> labels, std::string_view base,
                                     std::vector<std::vector<Rational>> distances)
    : labels_(std::move(labels)) {
  const std::size_t n = labels_.size();
  if (n == 0) throw InputError("metric space has no points");
  for (std::size_t i = 0; i < n; ++i) {
    if (!index_.emplace(labels_[i], i).second) {
      throw InputError("duplicate point label '" + labels_[i] + "'");
    }
  }
  const auto b = index_.find(std::string(base));
  if (b == index_.end()) throw InputError("unknown base label '" + std::string(base) + "'");
  base_ = PointId{b->second};
  if (distances.size() != n) {
    throw InputError("distance matrix has " + std::to_string(distances.size()) + " rows, expected " +
                     std::to_string(n));
  }
  distances_.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    if (distances[i].size() != n) {
      throw InputError("distance row " + std::to_string(i) + " has " +
                       std::to_string(distances[i].size()) + " entries, expected " +
                       std::to_string(n));
    }
    for (auto& d : distances[i]) distances_.push_back(std::move(d));
  }
}

std::optional<PointId> FiniteMetricSpace::find(std::string_view label) const {
  const auto it = index_.find(std::string(label));
  if (it == index_.end()) return std::nullopt;
  return PointId{it->second};
}

PointId FiniteMetricSpace::at(std::string_view label) const {
  if (auto p = find(label)) return *p;
  throw InputError("unknown point label '" + std::string(label) + "'");
}

std::vector<PointId> FiniteMetricSpace::points() const {
  std::vector<PointId> out(size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = PointId{i};
  return out;
}

bool FiniteMetricSpace::has_integer_distances() const {
  for (const auto& d : distances_) {
    if (!is_integer(d)) return false;
  }
  return true;
}

Rational FiniteMetricSpace::max_distance() const {
  Rational best = 0;
  for (const auto& d : distances_) {
    if (d > best) best = d;
  }
  return best;
}

PairSet::PairSet(const std::vector<OrderedPair>& pairs) {
  for (const auto& p : pairs) insert(p);
}

bool PairSet::insert(const OrderedPair& pair) {
  if (pair.from == pair.to) throw InputError("pair endpoints must differ");
  if (!members_.insert(pair).second) return false;
  pairs_.push_back(pair);
  return true;
}

std::optional<std::size_t> PairSet::index_of(const OrderedPair& pair) const {
  if (!contains(pair)) return std::nullopt;
  for (std::size_t i = 0; i < pairs_.size(); ++i) {
    if (pairs_[i] == pair) return i;
  }
  return std::nullopt;
}

ValidationReport validate_metric(const FiniteMetricSpace& space) {
  const auto pts = space.points();
  for (auto p : pts) {
    if (space.distance(p, p) != 0) {
      return {MetricViolation{MetricViolation::Kind::kNonzeroDiagonal, p, p, p}};
    }
  }
  for (auto p : pts) {
    for (auto q : pts) {
      if (p == q) continue;
      if (space.distance(p, q) != space.distance(q, p)) {
        return {MetricViolation{MetricViolation::Kind::kAsymmetric, p, q, q}};
      }
      if (space.distance(p, q) <= 0) {
        return {MetricViolation{MetricViolation::Kind::kNonPositive, p, q, q}};
      }
    }
  }
  for (auto p : pts) {
    for (auto q : pts) {
      for (auto r : pts) {
        if (space.distance(p, r) > space.distance(p, q) + space.distance(q, r)) {
          return {MetricViolation{MetricViolation::Kind::kTriangle, p, q, r}};
        }
      }
    }
  }
  return {};
}

std::string describe(const FiniteMetricSpace& space, const MetricViolation& v) {
  const auto& lp = space.label(v.p);
  const auto& lq = space.label(v.q);
  const auto& lr = space.label(v.r);
  switch (v.kind) {
    case MetricViolation::Kind::kNonzeroDiagonal:
      return "d(" + lp + "," + lp + ") = " + to_string(space.distance(v.p, v.p)) + " != 0";
    case MetricViolation::Kind::kAsymmetric:
      return "d(" + lp + "," + lq + ") = " + to_string(space.distance(v.p, v.q)) + " != d(" + lq +
             "," + lp + ") = " + to_string(space.distance(v.q, v.p));
    case MetricViolation::Kind::kNonPositive:
      return "d(" + lp + "," + lq + ") = " + to_string(space.distance(v.p, v.q)) +
             " is not positive for distinct points";
    case MetricViolation::Kind::kTriangle:
      return "triangle inequality fails for (" + lp + "," + lq + "," + lr + "): d(" + lp + "," +
             lr + ") = " + to_string(space.distance(v.p, v.r)) + " > " +
             to_string(space.distance(v.p, v.q) + space.distance(v.q, v.r));
  }
  return {};
}

FiniteMetricSpace build_example52(int levels) {
  if (levels < 1) throw InputError("example52 needs at least one level");
  std::vector<std::string> labels;
  for (int i = 1; i <= 3; ++i) labels.push_back("x" + std::to_string(i));
  for (int i = 1; i <= 3; ++i) labels.push_back("y" + std::to_string(i));
  for (int j = 1; j <= levels; ++j) {
    for (int i = 1; i <= 3; ++i) {
      labels.push_back("u" + std::to_string(i) + "^" + std::to_string(j));
      labels.push_back("v" + std::to_string(i) + "^" + std::to_string(j));
    }
  }
  const std::size_t n = labels.size();
  std::vector<std::vector<Rational>> dist(n, std::vector<Rational>(n, Rational(2)));
  for (std::size_t i = 0; i < n; ++i) dist[i][i] = 0;
  const auto x = [](int i) { return static_cast<std::size_t>(i - 1); };
  const auto y = [](int i) { return static_cast<std::size_t>(3 + i - 1); };
  const auto u = [](int i, int j) { return static_cast<std::size_t>(6 + 6 * (j - 1) + 2 * (i - 1)); };
  const auto v = [&](int i, int j) { return u(i, j) + 1; };
  const auto join = [&](std::size_t a, std::size_t b) { dist[a][b] = dist[b][a] = 1; };
  join(y(1), x(2));
  join(y(2), x(3));
  join(y(3), x(1));
  for (int i = 1; i <= 3; ++i) {
    for (int j = 1; j <= levels; ++j) {
      join(x(i), u(i, j));
      join(u(i, j), v(i, j));
      join(v(i, j), y(i));
    }
  }
  return FiniteMetricSpace(std::move(labels), "x1", std::move(dist));
}

FiniteMetricSpace build_line(int points) {
  if (points < 1) throw InputError("line needs at least one point");
  std::vector<std::string> labels;
  std::vector<std::vector<Rational>> dist(points, std::vector<Rational>(points));
  for (int i = 0; i < points; ++i) {
    labels.push_back(std::to_string(i));
    for (int j = 0; j < points; ++j) dist[i][j] = i > j ? i - j : j - i;
  }
  return FiniteMetricSpace(std::move(labels), "0", std::move(dist));
}

FiniteMetricSpace build_named(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw InputError("builtin must look like name:N, got '" + std::string(text) + "'");
  }
  const auto name = text.substr(0, colon);
  const auto arg = text.substr(colon + 1);
  int value = 0;
  const auto [ptr, ec] = std::from_chars(arg.data(), arg.data() + arg.size(), value);
  if (ec != std::errc() || ptr != arg.data() + arg.size()) {
    throw InputError("bad builtin parameter '" + std::string(arg) + "'");
  }
  if (name == "example52") return build_example52(value);
  if (name == "line") return build_line(value);
  throw InputError("unknown builtin '" + std::string(name) + "'");
}

OrderedPair reflect(const OrderedPair& pair) { return OrderedPair{pair.to, pair.from}; }

PairSet reflect_set(const PairSet& pairs) {
  PairSet out;
  for (const auto& p : pairs) out.insert(reflect(p));
  return out;
}

std::set<PointId> project(const PairSet& pairs) {
  std::set<PointId> out;
  for (const auto& p : pairs) {
    out.insert(p.from);
    out.insert(p.to);
  }
  return out;
}

std::vector<OrderedPair> all_pairs(const FiniteMetricSpace& space) {
  std::vector<OrderedPair> out;
  out.reserve(space.size() * (space.size() - 1));
  for (std::size_t i = 0; i < space.size(); ++i) {
    for (std::size_t j = 0; j < space.size(); ++j) {
      if (i != j) out.push_back(OrderedPair{PointId{i}, PointId{j}});
    }
  }
  return out;
}

std::string to_string(const FiniteMetricSpace& space, const OrderedPair& pair) {
  return "(" + space.label(pair.from) + "," + space.label(pair.to) + ")";
}

}  // namespace lipfree

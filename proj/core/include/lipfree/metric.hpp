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

#ifndef LIPFREE_METRIC_HPP_
#define LIPFREE_METRIC_HPP_

#include <compare>
#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "lipfree/rational.hpp"

namespace lipfree {

// Position of a point in its space's declaration order. Labels are the external
// identity; indices never leave the library.
struct PointId {
  std::size_t index = 0;
  friend auto operator<=>(const PointId&, const PointId&) = default;
};

// An element (from, to) of the pair space, from != to.
struct OrderedPair {
  PointId from;
  PointId to;
  friend auto operator<=>(const OrderedPair&, const OrderedPair&) = default;
};

// A finite pointed metric space with exact rational distances. Construction
// checks shape (square matrix, unique labels, known base) but not the metric
// axioms; call validate_metric for those.
class FiniteMetricSpace {
 public:
  FiniteMetricSpace(std::vector<std::string> labels, std::string_view base,
                    std::vector<std::vector<Rational>> distances);

  std::size_t size() const { return labels_.size(); }
  PointId base() const { return base_; }
  const std::string& label(PointId p) const { return labels_.at(p.index); }
  const std::vector<std::string>& labels() const { return labels_; }

  std::optional<PointId> find(std::string_view label) const;
  // Throws InputError for unknown labels.
  PointId at(std::string_view label) const;

  const Rational& distance(PointId p, PointId q) const {
    return distances_[p.index * labels_.size() + q.index];
  }
  const Rational& distance(const OrderedPair& pair) const { return distance(pair.from, pair.to); }

  std::vector<PointId> points() const;

  // True when every distance is an integer.
  bool has_integer_distances() const;
  Rational max_distance() const;

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, std::size_t> index_;
  PointId base_;
  std::vector<Rational> distances_;  // row-major, size() * size()
};

// Finite set of ordered pairs over one space. Keeps first-insertion order,
// which is the pair indexing used by certificates.
class PairSet {
 public:
  PairSet() = default;
  explicit PairSet(const std::vector<OrderedPair>& pairs);

  // Returns false if already present. Throws InputError when from == to.
  bool insert(const OrderedPair& pair);
  bool contains(const OrderedPair& pair) const { return members_.contains(pair); }
  std::optional<std::size_t> index_of(const OrderedPair& pair) const;

  std::size_t size() const { return pairs_.size(); }
  bool empty() const { return pairs_.empty(); }
  const OrderedPair& operator[](std::size_t i) const { return pairs_[i]; }
  const std::vector<OrderedPair>& pairs() const { return pairs_; }
  auto begin() const { return pairs_.begin(); }
  auto end() const { return pairs_.end(); }

  // Set equality, ignoring insertion order.
  friend bool operator==(const PairSet& a, const PairSet& b) { return a.members_ == b.members_; }

 private:
  std::vector<OrderedPair> pairs_;
  std::set<OrderedPair> members_;
};

struct MetricViolation {
  enum class Kind { kNonzeroDiagonal, kAsymmetric, kNonPositive, kTriangle };
  Kind kind;
  // kNonzeroDiagonal uses p; kAsymmetric and kNonPositive use (p, q);
  // kTriangle reports d(p, r) > d(p, q) + d(q, r).
  PointId p;
  PointId q;
  PointId r;
};

struct ValidationReport {
  std::optional<MetricViolation> violation;
  bool ok() const { return !violation.has_value(); }
};

// Exhaustive O(n^3) check of the metric axioms; reports the first failure in
// declaration order.
ValidationReport validate_metric(const FiniteMetricSpace& space);
std::string describe(const FiniteMetricSpace& space, const MetricViolation& violation);

// Three triangles x_i -- u_i^j -- v_i^j -- y_i (one path per level j = 1..levels)
// joined by d(y1,x2) = d(y2,x3) = d(y3,x1) = 1; every other distance is 2.
// Labels: "x1".."x3", "y1".."y3", "u<i>^<j>", "v<i>^<j>". Base point x1.
FiniteMetricSpace build_example52(int levels);

// Points "0".."n-1" on the integer line, d(i, j) = |i - j|, base "0".
FiniteMetricSpace build_line(int points);

// Resolves "example52:J" or "line:n".
FiniteMetricSpace build_named(std::string_view text);

OrderedPair reflect(const OrderedPair& pair);
PairSet reflect_set(const PairSet& pairs);
// Union of endpoints.
std::set<PointId> project(const PairSet& pairs);

// Every ordered pair of distinct points in declaration order.
std::vector<OrderedPair> all_pairs(const FiniteMetricSpace& space);

std::string to_string(const FiniteMetricSpace& space, const OrderedPair& pair);

}  // namespace lipfree

#endif  // LIPFREE_METRIC_HPP_

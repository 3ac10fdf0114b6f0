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

#include <gtest/gtest.h>

#include "lipfree/metric.hpp"
#include "lipfree/rational.hpp"

namespace lipfree {
namespace {

FiniteMetricSpace three_points(Rational d01, Rational d12, Rational d02) {
  return FiniteMetricSpace({"0", "1", "2"}, "0", {{0, d01, d02}, {d01, 0, d12}, {d02, d12, 0}});
}

TEST(Rational, ParsesIntegersAndFractions) {
  EXPECT_EQ(parse_rational("3"), Rational(3));
  EXPECT_EQ(parse_rational("-3"), Rational(-3));
  EXPECT_EQ(parse_rational("6/4"), Rational(3, 2));
  EXPECT_EQ(to_string(parse_rational("6/4")), "3/2");
  EXPECT_EQ(to_string(parse_rational("-4/2")), "-2");
  for (const char* bad : {"", "1/0", "x", "1/-2", "1.5", "1/", "/2", "--1"}) {
    EXPECT_THROW(parse_rational(bad), InputError) << bad;
  }
}

TEST(Rational, FloorGoesTowardNegativeInfinity) {
  EXPECT_EQ(floor(Rational(3, 2)), 1);
  EXPECT_EQ(floor(Rational(-1, 2)), -1);
  EXPECT_EQ(floor(Rational(-2)), -2);
  EXPECT_EQ(fractional_part(Rational(-1, 4)), Rational(3, 4));
  EXPECT_TRUE(is_integer(parse_rational("4/2")));
  EXPECT_FALSE(is_integer(Rational(1, 3)));
}

TEST(ValidateMetric, PathMetricIsValid) { EXPECT_TRUE(validate_metric(three_points(1, 1, 2)).ok()); }

TEST(ValidateMetric, ReportsTriangleViolation) {
  const auto space = three_points(1, 1, 3);
  const auto report = validate_metric(space);
  ASSERT_FALSE(report.ok());
  EXPECT_EQ(report.violation->kind, MetricViolation::Kind::kTriangle);
  EXPECT_EQ(space.label(report.violation->p), "0");
  EXPECT_EQ(space.label(report.violation->q), "1");
  EXPECT_EQ(space.label(report.violation->r), "2");
}

TEST(ValidateMetric, ReportsDegenerateDistance) {
  const auto report = validate_metric(three_points(0, 1, 1));
  ASSERT_FALSE(report.ok());
  EXPECT_EQ(report.violation->kind, MetricViolation::Kind::kNonPositive);
}

TEST(ValidateMetric, ReportsAsymmetryAndDiagonal) {
  FiniteMetricSpace asym({"a", "b"}, "a", {{0, 1}, {2, 0}});
  EXPECT_EQ(validate_metric(asym).violation->kind, MetricViolation::Kind::kAsymmetric);
  FiniteMetricSpace diag({"a", "b"}, "a", {{1, 1}, {1, 0}});
  EXPECT_EQ(validate_metric(diag).violation->kind, MetricViolation::Kind::kNonzeroDiagonal);
}

TEST(FiniteMetricSpace, RejectsMalformedInput) {
  EXPECT_THROW(FiniteMetricSpace({"a", "b"}, "c", {{0, 1}, {1, 0}}), InputError);
  EXPECT_THROW(FiniteMetricSpace({"a", "b"}, "a", {{0, 1}}), InputError);
  EXPECT_THROW(FiniteMetricSpace({"a", "b"}, "a", {{0, 1}, {1}}), InputError);
  EXPECT_THROW(FiniteMetricSpace({"a", "a"}, "a", {{0, 1}, {1, 0}}), InputError);
  EXPECT_THROW(FiniteMetricSpace({}, "a", {}), InputError);
}

TEST(Example52, OneLevel) {
  const auto space = build_example52(1);
  EXPECT_EQ(space.size(), 12u);
  EXPECT_EQ(space.label(space.base()), "x1");
  EXPECT_EQ(space.distance(space.at("x1"), space.at("y1")), 2);
  EXPECT_EQ(space.distance(space.at("v2^1"), space.at("y2")), 1);
  EXPECT_EQ(space.distance(space.at("y3"), space.at("x1")), 1);
  EXPECT_EQ(space.distance(space.at("u2^1"), space.at("v2^1")), 1);
}

TEST(Example52, ThreeLevels) {
  const auto space = build_example52(3);
  EXPECT_EQ(space.size(), 24u);
  EXPECT_EQ(space.distance(space.at("u1^1"), space.at("u1^2")), 2);
  EXPECT_EQ(space.distance(space.at("x3"), space.at("u3^3")), 1);
}

TEST(Example52, ValidWithUnitAndTwoDistancesUpToTenLevels) {
  for (int levels = 1; levels <= 10; ++levels) {
    const auto space = build_example52(levels);
    EXPECT_TRUE(validate_metric(space).ok()) << levels;
    EXPECT_TRUE(space.has_integer_distances());
    for (auto p : space.points()) {
      for (auto q : space.points()) {
        if (p != q) EXPECT_TRUE(space.distance(p, q) == 1 || space.distance(p, q) == 2);
      }
    }
  }
  EXPECT_THROW(build_example52(0), InputError);
}

TEST(BuildNamed, ResolvesGenerators) {
  EXPECT_EQ(build_named("example52:2").size(), 18u);
  const auto line = build_named("line:4");
  EXPECT_EQ(line.distance(line.at("0"), line.at("3")), 3);
  EXPECT_THROW(build_named("line"), InputError);
  EXPECT_THROW(build_named("torus:3"), InputError);
  EXPECT_THROW(build_named("line:x"), InputError);
}

TEST(Pairs, ReflectIsAnInvolution) {
  const auto space = build_line(4);
  for (const auto& p : all_pairs(space)) {
    EXPECT_EQ(reflect(p).from, p.to);
    EXPECT_EQ(reflect(reflect(p)), p);
  }
  EXPECT_TRUE(reflect_set(PairSet{}).empty());
}

TEST(Pairs, ProjectCollectsEndpoints) {
  const PointId a{0}, b{1}, c{2};
  EXPECT_EQ(project(PairSet({{a, b}})), (std::set<PointId>{a, b}));
  const PairSet two({{a, b}, {b, c}});
  EXPECT_EQ(project(two), (std::set<PointId>{a, b, c}));
  EXPECT_EQ(project(two), project(reflect_set(two)));
  EXPECT_TRUE(project(PairSet{}).empty());
}

TEST(Pairs, SetRejectsDiagonalAndKeepsOrder) {
  PairSet s;
  EXPECT_THROW(s.insert(OrderedPair{PointId{1}, PointId{1}}), InputError);
  EXPECT_TRUE(s.insert(OrderedPair{PointId{2}, PointId{0}}));
  EXPECT_TRUE(s.insert(OrderedPair{PointId{0}, PointId{1}}));
  EXPECT_FALSE(s.insert(OrderedPair{PointId{2}, PointId{0}}));
  EXPECT_EQ(s.size(), 2u);
  EXPECT_EQ(s[0].from, PointId{2});
  EXPECT_EQ(s.index_of(OrderedPair{PointId{0}, PointId{1}}), 1u);
}

TEST(Pairs, AllPairsEnumeratesInDeclarationOrder) {
  const auto pairs = all_pairs(build_line(3));
  ASSERT_EQ(pairs.size(), 6u);
  EXPECT_EQ(pairs.front(), (OrderedPair{PointId{0}, PointId{1}}));
  EXPECT_EQ(pairs.back(), (OrderedPair{PointId{2}, PointId{1}}));
}

}  // namespace
}  // namespace lipfree

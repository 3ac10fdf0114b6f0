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

#include "lipfree/example52.hpp"
#include "lipfree/functionals.hpp"
#include "support/oracles.hpp"
#include "support/properties.hpp"
#include "support/random.hpp"

namespace lipfree {
namespace {

using testing::Rng;

Rational q(const char* text) { return parse_rational(text); }

PairMeasure atoms(std::initializer_list<std::pair<OrderedPair, Rational>> list) {
  PairMeasure mu;
  for (const auto& [p, w] : list) mu.add(p, w);
  return mu;
}

const OrderedPair k01{PointId{0}, PointId{1}};
const OrderedPair k10{PointId{1}, PointId{0}};
const OrderedPair k21{PointId{2}, PointId{1}};

TEST(PairMeasure, MergesAndCancels) {
  PairMeasure mu;
  mu.add(k01, 1);
  mu.add(k01, q("1/2"));
  EXPECT_EQ(mu.weight(k01), q("3/2"));
  mu.add(k01, q("-3/2"));
  EXPECT_TRUE(mu.empty());
  EXPECT_THROW(mu.add({PointId{0}, PointId{0}}, 1), InputError);
  const auto signed_mu = atoms({{k01, 2}, {k10, -3}});
  EXPECT_EQ(signed_mu.total_variation(), 5);
  EXPECT_EQ(signed_mu.total_mass(), -1);
  EXPECT_EQ(signed_mu.positive_part(), atoms({{k01, 2}}));
  EXPECT_EQ(signed_mu.negative_part(), atoms({{k10, 3}}));
  EXPECT_THROW(check_measure(build_line(1), signed_mu), InputError);
}

TEST(Apply, Examples) {
  const auto line = build_line(3);
  const LipschitzFunction f(line, {0, q("1/3"), 2});
  EXPECT_EQ(apply(line, PairMeasure::unit_atom(k21), f), slope(line, f, k21));
  EXPECT_EQ(apply(line, atoms({{k01, 1}, {k10, 1}}), f), 0);
}

TEST(Apply, BilinearAndMatchesOracle) {
  Rng rng(3);
  for (int t = 0; t < 100; ++t) {
    const auto space = testing::random_rational_metric(rng, 5, 3, 4);
    const auto mu = testing::random_measure_on(rng, testing::random_pairs(rng, space, 4), true);
    const auto nu = testing::random_measure_on(rng, testing::random_pairs(rng, space, 4), true);
    const auto f = testing::random_unit_ball_function(rng, space);
    const auto g = testing::random_unit_ball_function(rng, space);
    const Rational s = rng.rational(-3, 3, 4);
    PairMeasure sum = mu;
    for (const auto& [p, w] : nu.atoms()) sum.add(p, s * w);
    EXPECT_EQ(apply(space, sum, f), apply(space, mu, f) + s * apply(space, nu, f));
    EXPECT_EQ(apply(space, mu, f + s * g), apply(space, mu, f) + s * apply(space, mu, g));
    EXPECT_EQ(apply(space, mu, f), testing::apply_oracle(space, mu, f));
  }
}

TEST(Positivize, Examples) {
  EXPECT_EQ(positivize(atoms({{k01, -2}})), atoms({{k10, 2}}));
  const auto positive = atoms({{k01, 1}, {k21, q("1/2")}});
  EXPECT_EQ(positivize(positive), positive);
  EXPECT_EQ(positivize(atoms({{k01, 1}, {k10, -1}})), atoms({{k01, 2}}));
}

TEST(Positivize, PreservesFunctionalAndVariation) {
  const auto result = testing::check_positivize(100, 10, 61);
  EXPECT_TRUE(result.ok) << result.detail;
}

TEST(DualNorm, Examples) {
  const auto line = build_line(3);
  EXPECT_EQ(dual_norm(line, PairMeasure::unit_atom(k21)).norm, 1);
  EXPECT_EQ(dual_norm(line, atoms({{k01, q("1/2")}, {k10, q("1/2")}})).norm, 0);
  const auto chain = dual_norm(line, atoms({{k21, q("1/2")}, {k10, q("1/2")}}));
  EXPECT_EQ(chain.norm, 1);
  EXPECT_EQ(chain.maximizer, LipschitzFunction(line, {0, 1, 2}));
  EXPECT_TRUE(chain.representative.is_positive());
  EXPECT_EQ(chain.representative.total_mass(), 1);
}

TEST(DualNorm, UnitAtomsOnExampleSpaceHaveNormOne) {
  const auto space = build_example52(2);
  for (const auto& mu : example52::unit_atoms(space)) {
    const auto r = dual_norm(space, mu);
    EXPECT_EQ(r.norm, 1);
    EXPECT_EQ(apply(space, mu, r.maximizer), 1);
  }
}

TEST(DualNorm, NeverExceedsTotalVariation) {
  Rng rng(9);
  for (int t = 0; t < 100; ++t) {
    const auto space = testing::random_rational_metric(rng, 5, 3, 3);
    const auto mu = testing::random_measure_on(rng, testing::random_pairs(rng, space, 4), true);
    const auto r = dual_norm(space, mu);
    EXPECT_LE(r.norm, mu.total_variation());
    EXPECT_LE(lip_norm(space, r.maximizer), 1);
    EXPECT_EQ(apply(space, mu, r.maximizer), r.norm);
  }
}

TEST(DualNorm, CmConvexCombinationHasNormOne) {
  Rng rng(13);
  for (int t = 0; t < 100; ++t) {
    const auto space = testing::random_rational_metric(rng, 6, 3, 3);
    const auto a = testing::random_cm_pairs(rng, space, rng.uniform(1, 5), Gamma::one());
    const auto mu = testing::normalized_mass(testing::random_measure_on(rng, a, false));
    EXPECT_EQ(dual_norm(space, mu).norm, 1);
    EXPECT_TRUE(is_optimal(space, mu).optimal);
  }
}

TEST(Normalize, ScalesToUnitNorm) {
  const auto line = build_line(3);
  const auto mu = atoms({{k21, 3}, {k10, 3}});
  EXPECT_EQ(dual_norm(line, normalize(line, mu)).norm, 1);
  EXPECT_THROW(normalize(line, atoms({{k01, 1}, {k10, 1}})), InputError);
}

TEST(IsOptimal, Examples) {
  const auto line = build_line(3);
  const auto single = is_optimal(line, PairMeasure::unit_atom(k21));
  EXPECT_TRUE(single.optimal);
  EXPECT_TRUE(single.certificate.has_value());
  EXPECT_EQ(single.gap, 0);
  const auto both = is_optimal(line, atoms({{k01, q("1/2")}, {k10, q("1/2")}}));
  EXPECT_FALSE(both.optimal);
  ASSERT_TRUE(both.violation.has_value());
  EXPECT_EQ(both.gap, 1);
  EXPECT_EQ(both.dual_norm, 0);
  EXPECT_THROW(is_optimal(line, atoms({{k01, -1}})), InputError);
}

TEST(IsOptimal, AgreesWithLp) {
  const auto result = testing::check_optimality_vs_lp(150, 71);
  EXPECT_TRUE(result.ok) << result.detail;
}

TEST(SignedAttainment, Examples) {
  const auto line = build_line(3);
  for (const char* g : {"1/10", "1/2", "99/100"}) {
    const Gamma gamma(q(g));
    const auto single = check_norm_attainment_signed(line, PairMeasure::unit_atom(k21), gamma);
    EXPECT_TRUE(single.attained);
    EXPECT_EQ(single.pairs, PairSet({k21}));
    const auto dipole = check_norm_attainment_signed(line, atoms({{k01, 1}, {k10, -1}}), gamma);
    EXPECT_TRUE(dipole.attained);
    EXPECT_EQ(dipole.pairs, PairSet({k01}));
    EXPECT_EQ(dipole.mass, 2);
  }
  EXPECT_EQ(dual_norm(line, atoms({{k01, 1}, {k10, -1}})).norm, 2);
  const auto cancel = check_norm_attainment_signed(line, atoms({{k01, 1}, {k10, 1}}), Gamma(q("9/10")));
  EXPECT_FALSE(cancel.attained);
}

// With f the witness, atoms counted in the mass contribute at least gamma per
// unit and the rest at least -1, so a success at gamma forces
// dual_norm >= (gamma^2 + gamma - 1) |nu|. Conversely a norming measure
// attains at every gamma.
TEST(SignedAttainment, ImplicationsAgainstLp) {
  Rng rng(19);
  const std::vector<Rational> gammas = {q("1/2"), q("3/4"), q("9/10")};
  int attained = 0, normed = 0;
  for (int t = 0; t < 150; ++t) {
    const auto space = testing::random_integer_metric(rng, 5, 3);
    const auto nu = testing::random_measure_on(rng, testing::random_pairs(rng, space, rng.uniform(1, 4)), true);
    const Rational total = nu.total_variation();
    const Rational norm = dual_norm(space, nu).norm;
    for (const auto& g : gammas) {
      const Gamma gamma(g);
      const auto r = check_norm_attainment_signed(space, nu, gamma);
      if (r.attained) {
        ++attained;
        ASSERT_TRUE(r.witness.has_value());
        EXPECT_GE(r.mass, r.threshold);
        EXPECT_TRUE(is_certified(check_gamma_cm(space, r.pairs, gamma)));
        EXPECT_GE(apply(space, nu, *r.witness), (g * g + g - 1) * total);
        EXPECT_GE(norm, (g * g + g - 1) * total);
      }
      if (norm == total) {
        ++normed;
        EXPECT_TRUE(r.attained);
      }
    }
  }
  EXPECT_GT(attained, 0);
  EXPECT_GT(normed, 0);
}

TEST(SliceDiameter, TwoPointSpace) {
  const auto line = build_line(2);
  const auto mu = PairMeasure::unit_atom(k10);
  EXPECT_EQ(slice_diameter(line, mu, q("1/4")).value, q("1/4"));
  // The slice at alpha = 1 is {f(1) > 0}, so -f is not in it.
  EXPECT_EQ(slice_diameter(line, mu, 1).value, 1);
  EXPECT_EQ(slice_diameter(line, mu, 2).value, 2);
}

TEST(SliceDiameter, AlphaTwoGivesTwo) {
  Rng rng(29);
  for (int t = 0; t < 10; ++t) {
    const auto space = testing::random_rational_metric(rng, 4, 3, 3);
    const auto a = testing::random_cm_pairs(rng, space, 2, Gamma::one());
    const auto mu = testing::normalized_mass(testing::random_measure_on(rng, a, false));
    const auto s = slice_diameter(space, mu, 2);
    EXPECT_EQ(s.value, 2);
    EXPECT_GE(lip_norm(space, s.f - s.g), s.value);
  }
}

TEST(SliceDiameter, WitnessesLieInTheSlice) {
  const auto space = build_example52(1);
  const auto mu = PairMeasure::unit_atom({space.at("x1"), space.at("y1")});
  const Rational alpha = q("1/2");
  const auto s = slice_diameter(space, mu, alpha);
  EXPECT_GE(apply(space, mu, s.f), 1 - alpha);
  EXPECT_GE(apply(space, mu, s.g), 1 - alpha);
  EXPECT_LE(lip_norm(space, s.f), 1);
  EXPECT_LE(lip_norm(space, s.g), 1);
  EXPECT_EQ(slope(space, s.f - s.g, {s.u, s.v}), s.value);
}

TEST(SliceDiameter, ExampleSpaceTwoLevelsReachesTwoGamma) {
  const auto space = build_example52(2);
  const auto mu = PairMeasure::unit_atom({space.at("x1"), space.at("y1")});
  // gamma = 1/2 and gamma^2 >= 1 - alpha / 2.
  EXPECT_GE(slice_diameter(space, mu, q("3/2")).value, 1);
}

TEST(SliceDiameter, AutoNormalizeAndErrors) {
  const auto line = build_line(3);
  const auto mu = atoms({{k21, 2}});
  EXPECT_THROW(slice_diameter(line, mu, q("1/2")), InputError);
  SliceOptions options;
  options.auto_normalize = true;
  EXPECT_EQ(slice_diameter(line, mu, q("1/2"), options).value,
            slice_diameter(line, PairMeasure::unit_atom(k21), q("1/2")).value);
  EXPECT_THROW(slice_diameter(line, PairMeasure::unit_atom(k21), 0), InputError);
  EXPECT_THROW(slice_diameter(line, PairMeasure::unit_atom(k21), 3), InputError);
  EXPECT_THROW(slice_diameter(line, atoms({{k01, 1}, {k10, 1}}), 1, options), InputError);
}

TEST(SliceDiameter, JobsDoNotChangeTheAnswer) {
  const auto space = build_example52(1);
  const auto mu = PairMeasure::unit_atom({space.at("x2"), space.at("y2")});
  SliceOptions one, four;
  four.jobs = 4;
  const auto a = slice_diameter(space, mu, q("1/5"), one);
  const auto b = slice_diameter(space, mu, q("1/5"), four);
  EXPECT_EQ(a.value, b.value);
  EXPECT_EQ(a.u, b.u);
  EXPECT_EQ(a.v, b.v);
  EXPECT_EQ(a.f, b.f);
}

TEST(SliceMassBound, HoldsOnGeneratedInstances) {
  const auto result = testing::check_slice_mass_bound(30, 83);
  EXPECT_TRUE(result.ok) << result.detail;
}

}  // namespace
}  // namespace lipfree

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

#include "lipfree/d2p.hpp"
#include "lipfree/example52.hpp"
#include "support/oracles.hpp"
#include "support/random.hpp"

namespace lipfree {
namespace {

using testing::Rng;

Rational q(const char* text) { return parse_rational(text); }

const Gamma kHalf{parse_rational("1/2")};

OrderedPair op(const FiniteMetricSpace& s, const char* a, const char* b) { return {s.at(a), s.at(b)}; }

TEST(LipLtp, BaseOnlyAcceptsTheFirstPair) {
  const auto space = build_example52(1);
  const auto out = lip_ltp_witness(space, {space.base()}, q("1/2"), LipschitzFunction::zero(space));
  ASSERT_TRUE(out.witness.has_value());
  EXPECT_EQ(out.witness->first, PointId{0});
  EXPECT_EQ(out.witness->second, PointId{1});
  EXPECT_TRUE(out.violations.empty());
}

TEST(LipLtp, ExampleFunctionIsAbsentAtOneFourteenth) {
  const auto space = build_example52(1);
  const auto n = example52::core_points(space);
  const auto f = example52::fixture_function(space);
  const Rational eps = example52::fixture_eps();
  const auto out = lip_ltp_witness(space, n, eps, f);
  EXPECT_FALSE(out.witness.has_value());
  ASSERT_EQ(out.violations.size(), 12u * 11u);
  bool seen = false;
  for (const auto& v : out.violations) {
    EXPECT_GT(v.lhs, v.rhs);
    EXPECT_EQ(v.factor, q("13/14"));
    EXPECT_TRUE(replay_lip_ltp_violation(space, n, eps, f, v).holds());
    if (v.u == space.at("u1^1") && v.v == space.at("v1^1")) {
      seen = true;
      EXPECT_EQ(v.x, space.at("x1"));
      EXPECT_EQ(v.y, space.at("y1"));
      EXPECT_EQ(v.spread, q("5/2"));
      EXPECT_EQ(v.lhs, q("65/28"));
      EXPECT_EQ(v.rhs, 2);
    }
  }
  EXPECT_TRUE(seen);
}

TEST(LipLtp, HalfEpsilonHasAWitness) {
  const auto space = build_example52(1);
  const auto n = example52::core_points(space);
  const auto f = example52::fixture_function(space);
  const auto out = lip_ltp_witness(space, n, q("1/2"), f);
  ASSERT_TRUE(out.witness.has_value());
  const auto [u, v] = *out.witness;
  for (auto x : n) {
    for (auto y : n) {
      EXPECT_LE(q("1/2") * (abs(f(x) - f(y)) + space.distance(u, v)),
                space.distance(x, u) + space.distance(y, v));
    }
  }
}

TEST(LipLtp, TamperedViolationFailsReplay) {
  const auto space = build_example52(1);
  const auto n = example52::core_points(space);
  const auto f = example52::fixture_function(space);
  auto v = lip_ltp_witness(space, n, example52::fixture_eps(), f).violations.front();
  v.spread += 1;
  EXPECT_FALSE(replay_lip_ltp_violation(space, n, example52::fixture_eps(), f, v).holds());
}

TEST(LipLtp, Errors) {
  const auto space = build_example52(1);
  const auto f = example52::fixture_function(space);
  EXPECT_THROW(lip_ltp_witness(space, {space.base()}, 0, f), InputError);
  EXPECT_THROW(lip_ltp_witness(space, {space.base()}, 1, f), InputError);
  EXPECT_THROW(lip_ltp_witness(space, {space.base()}, q("1/2"), Rational(2) * f), InputError);
  EXPECT_THROW(lip_ltp_witness(space, {PointId{99}}, q("1/2"), f), InputError);
}

bool both_ways(const FiniteMetricSpace& space, const PairSet& a, const Gamma& g, PointId u, PointId v) {
  return is_certified(check_augmented(space, a, g, u, v).verdict) &&
         is_certified(check_augmented(space, a, g, v, u).verdict);
}

// The first (u, v) with u before v where both augmented sets certify.
std::optional<std::pair<PointId, PointId>> first_two_way(const FiniteMetricSpace& space, const PairSet& a,
                                                         const Gamma& g) {
  for (std::size_t i = 0; i < space.size(); ++i) {
    for (std::size_t j = i + 1; j < space.size(); ++j) {
      if (both_ways(space, a, g, PointId{i}, PointId{j})) return std::make_pair(PointId{i}, PointId{j});
    }
  }
  return std::nullopt;
}

TEST(TwoLipLtp, EmptySetTakesTheFirstPair) {
  const auto line = build_line(3);
  const auto out = two_lip_ltp_witness(line, PairSet{}, q("1/2"));
  ASSERT_TRUE(out.witness.has_value());
  EXPECT_EQ(out.witness->u, PointId{0});
  EXPECT_EQ(out.witness->v, PointId{1});
  EXPECT_TRUE(replay_two_lip_ltp(line, PairSet{}, q("1/2"), *out.witness).holds());
}

TEST(TwoLipLtp, LineChainMatchesOracle) {
  const auto line = build_line(3);
  const PairSet a({{PointId{2}, PointId{1}}, {PointId{1}, PointId{0}}});
  const auto out = two_lip_ltp_witness(line, a, q("1/2"));
  const auto expected = first_two_way(line, a, kHalf);
  ASSERT_EQ(out.witness.has_value(), expected.has_value());
  if (expected) {
    EXPECT_EQ(std::make_pair(out.witness->u, out.witness->v), *expected);
    PairSet with = a;
    with.insert({expected->first, expected->second});
    EXPECT_TRUE(brute_force_cm_oracle(line, with, kHalf));
  }
}

TEST(TwoLipLtp, EqualsConjunctionOfAugmentedChecks) {
  Rng rng(37);
  int found = 0, absent = 0;
  for (int t = 0; t < 60; ++t) {
    const auto space = testing::random_rational_metric(rng, 5, 2, 3);
    const auto a = testing::random_cm_pairs(rng, space, rng.uniform(0, 3), Gamma::one());
    Rational eps(rng.uniform(1, 9), 10);
    eps.canonicalize();
    const auto out = two_lip_ltp_witness(space, a, eps);
    const auto expected = first_two_way(space, a, Gamma(1 - eps));
    ASSERT_EQ(out.witness.has_value(), expected.has_value());
    if (expected) {
      ++found;
      EXPECT_EQ(std::make_pair(out.witness->u, out.witness->v), *expected);
    } else {
      ++absent;
      EXPECT_EQ(out.log.size(), space.size() * (space.size() - 1) / 2);
    }
  }
  EXPECT_GT(found, 0);
}

TEST(TwoLipLtp, ExampleSpaceTwoLevels) {
  const auto space = build_example52(2);
  const PairSet a({op(space, "x1", "y1")});
  const auto out = two_lip_ltp_witness(space, a, q("1/2"));
  ASSERT_TRUE(out.witness.has_value());
  EXPECT_TRUE(replay_two_lip_ltp(space, a, q("1/2"), *out.witness).holds());
  EXPECT_THROW(two_lip_ltp_witness(space, PairSet({op(space, "x1", "y1"), op(space, "y1", "x1")}), q("1/2")),
               InputError);
  EXPECT_THROW(two_lip_ltp_witness(space, a, 0), InputError);
}

TEST(Ld2p, UnitAtomOnOneLevel) {
  const auto space = build_example52(1);
  const auto mu = PairMeasure::unit_atom(op(space, "x1", "y1"));
  const auto out = ld2p_certificate(space, mu, kHalf);
  ASSERT_TRUE(out.certificate.has_value());
  const auto& c = *out.certificate;
  EXPECT_EQ(c.pairs, mu.support());
  EXPECT_TRUE(replay_ld2p(space, c).holds());
  EXPECT_GE(mu.mass(c.pairs), kHalf.value());
  for (const auto& p : c.pairs) {
    EXPECT_GE(slope(space, c.f, p), kHalf.value());
    EXPECT_GE(slope(space, c.g, p), kHalf.value());
  }
  // Scan witnesses certify the augmented sets themselves; integer ones only
  // satisfy the endpoint inequalities on the projection of A.
  if (c.route == "scan") EXPECT_GE(slope(space, c.g - c.f, {c.u, c.v}), 2 * kHalf.value());
  EXPECT_TRUE(is_certified(check_augmented(space, c.pairs, kHalf, c.u, c.v).verdict));
  EXPECT_TRUE(is_certified(check_augmented(space, c.pairs, kHalf, c.v, c.u).verdict));
}

TEST(Ld2p, SmallGammaIsEasier) {
  const auto space = build_example52(1);
  for (const auto& mu : example52::unit_atoms(space)) {
    const auto out = ld2p_certificate(space, mu, Gamma(q("1/10")));
    ASSERT_TRUE(out.certificate.has_value());
    EXPECT_TRUE(replay_ld2p(space, *out.certificate).holds());
  }
}

TEST(Ld2p, RandomBatteryOnTwoLevels) {
  const auto space = build_example52(2);
  for (const auto& mu : example52::random_measures(space, 10, 52)) {
    for (const char* g : {"1/2", "9/10"}) {
      const auto out = ld2p_certificate(space, mu, Gamma(q(g)));
      ASSERT_TRUE(out.certificate.has_value()) << g;
      EXPECT_TRUE(replay_ld2p(space, *out.certificate).holds());
    }
  }
}

TEST(Ld2p, Errors) {
  const auto space = build_example52(1);
  PairMeasure both;
  both.add(op(space, "x1", "y1"), q("1/2"));
  both.add(op(space, "y1", "x1"), q("1/2"));
  EXPECT_THROW(ld2p_certificate(space, both, kHalf), InputError);
  PairMeasure heavy;
  heavy.add(op(space, "x1", "y1"), 2);
  EXPECT_THROW(ld2p_certificate(space, heavy, kHalf), InputError);
  EXPECT_THROW(ld2p_certificate(space, PairMeasure::unit_atom(op(space, "x1", "y1")), Gamma::one()), InputError);
  PairMeasure negative;
  negative.add(op(space, "x1", "y1"), -1);
  EXPECT_THROW(ld2p_certificate(space, negative, kHalf), InputError);
}

TEST(Ld2p, TamperedCertificateFailsReplay) {
  const auto space = build_example52(1);
  const auto mu = PairMeasure::unit_atom(op(space, "x2", "y2"));
  const auto good = *ld2p_certificate(space, mu, kHalf).certificate;

  auto flat = good;
  flat.f = LipschitzFunction::zero(space);
  EXPECT_FALSE(replay_ld2p(space, flat).holds());

  auto steep = good;
  steep.g = Rational(3) * good.g;
  EXPECT_FALSE(replay_ld2p(space, steep).holds());

  auto potentials = good;
  if (!potentials.with_uv.potentials.empty()) {
    potentials.with_uv.potentials.back() += 100;
    EXPECT_FALSE(replay_ld2p(space, potentials).holds());
  }
}

TEST(Ld2p, JobsDoNotChangeTheCertificate) {
  const auto space = build_example52(2);
  const auto battery = example52::random_measures(space, 5, 7);
  for (const auto& mu : battery) {
    SearchOptions one, four;
    four.jobs = 4;
    const auto a = ld2p_certificate(space, mu, Gamma(q("9/10")), one);
    const auto b = ld2p_certificate(space, mu, Gamma(q("9/10")), four);
    ASSERT_TRUE(a.certificate && b.certificate);
    EXPECT_EQ(a.certificate->u, b.certificate->u);
    EXPECT_EQ(a.certificate->v, b.certificate->v);
    EXPECT_EQ(a.certificate->pairs, b.certificate->pairs);
    EXPECT_EQ(a.certificate->f, b.certificate->f);
    EXPECT_EQ(a.certificate->g, b.certificate->g);
    EXPECT_EQ(a.log.size(), b.log.size());
  }
}

TEST(Sd2p, SingleMeasureAgreesWithLd2p) {
  const auto space = build_example52(1);
  for (const auto& mu : example52::unit_atoms(space)) {
    const auto ld = ld2p_certificate(space, mu, kHalf);
    const auto sd = sd2p_certificate(space, {mu}, kHalf);
    EXPECT_EQ(ld.certificate.has_value(), sd.certificate.has_value());
    if (sd.certificate) {
      EXPECT_TRUE(replay_sd2p(space, *sd.certificate).holds());
      EXPECT_EQ(sd.certificate->alpha, q("3/2"));
    }
  }
}

TEST(Sd2p, TwoDisjointAtomsShareAPair) {
  const auto space = build_example52(2);
  const std::vector<PairMeasure> mus = {PairMeasure::unit_atom(op(space, "x1", "y1")),
                                        PairMeasure::unit_atom(op(space, "x2", "y2"))};
  const auto out = sd2p_certificate(space, mus, kHalf, {q("1/3"), q("2/3")});
  ASSERT_TRUE(out.certificate.has_value());
  const auto& c = *out.certificate;
  EXPECT_TRUE(replay_sd2p(space, c).holds());
  LipschitzFunction f = LipschitzFunction::zero(space), g = f;
  for (std::size_t i = 0; i < 2; ++i) {
    f += c.lambdas[i] * c.f[i];
    g += c.lambdas[i] * c.g[i];
    EXPECT_GE(mus[i].mass(c.pairs[i]), kHalf.value());
  }
  EXPECT_GE(lip_norm(space, f - g), 1);

  auto tampered = c;
  tampered.lambdas = {q("1/2"), q("1/3")};
  EXPECT_FALSE(replay_sd2p(space, tampered).holds());
}

TEST(Sd2p, Errors) {
  const auto space = build_example52(1);
  const auto mu = PairMeasure::unit_atom(op(space, "x1", "y1"));
  EXPECT_THROW(sd2p_certificate(space, {}, kHalf), InputError);
  EXPECT_THROW(sd2p_certificate(space, {mu, mu}, kHalf, {q("1/2")}), InputError);
  EXPECT_THROW(sd2p_certificate(space, {mu, mu}, kHalf, {q("1/2"), q("1/3")}), InputError);
  EXPECT_THROW(sd2p_certificate(space, {mu, mu}, kHalf, {q("3/2"), q("-1/2")}), InputError);
  EXPECT_THROW(sd2p_certificate(space, {mu}, Gamma::one()), InputError);
}

TEST(Neighborhood, DiameterStaysBelowTwoOnTheExample) {
  const Rational delta = example52::fixture_eps() / 4;
  const Rational ceiling = 2 - example52::fixture_eps() / 2;
  EXPECT_EQ(ceiling, q("55/28"));
  for (int levels : {1, 2}) {
    const auto space = build_example52(levels);
    const auto f = example52::fixture_function(space);
    const auto n = example52::core_points(space);
    const auto d = weak_star_neighborhood_diameter(space, n, f, delta, 2);
    EXPECT_LT(d.value, ceiling) << levels;
    EXPECT_LE(lip_norm(space, d.g), 1);
    EXPECT_LE(lip_norm(space, d.h), 1);
    for (auto x : n) {
      for (auto y : n) {
        if (x == y) continue;
        EXPECT_LE(abs(slope(space, d.g - f, {x, y})), delta);
        EXPECT_LE(abs(slope(space, d.h - f, {x, y})), delta);
      }
    }
    EXPECT_LE(d.value, lip_norm(space, d.g - d.h));
  }
}

TEST(Neighborhood, LargeDeltaReachesTwo) {
  const auto space = build_example52(1);
  const auto f = example52::fixture_function(space);
  EXPECT_EQ(weak_star_neighborhood_diameter(space, example52::core_points(space), f, 4).value, 2);
  EXPECT_THROW(weak_star_neighborhood_diameter(space, {}, f, 0), InputError);
}

}  // namespace
}  // namespace lipfree

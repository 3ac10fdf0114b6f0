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
#include "lipfree/io.hpp"
#include "support/random.hpp"

namespace lipfree {
namespace {

using io::Json;

TEST(Io, RationalsAreStrings) {
  EXPECT_EQ(io::encode(parse_rational("-6/4")), Json("-3/2"));
  EXPECT_EQ(io::decode_rational(Json("7/21")), parse_rational("1/3"));
  EXPECT_EQ(io::decode_rational(Json(5)), 5);
  EXPECT_THROW(io::decode_rational(Json(0.5)), InputError);
  EXPECT_THROW(io::decode_rational(Json("1/0")), InputError);
}

TEST(Io, MetricRoundTrip) {
  testing::Rng rng(1);
  for (int t = 0; t < 20; ++t) {
    const auto space = testing::random_rational_metric(rng, 6, 4, 3);
    const auto back = io::decode_metric(Json::parse(io::encode(space).dump()));
    EXPECT_EQ(back.labels(), space.labels());
    EXPECT_EQ(back.base(), space.base());
    for (auto p : space.points()) {
      for (auto q : space.points()) EXPECT_EQ(back.distance(p, q), space.distance(p, q));
    }
  }
}

TEST(Io, MetricRejectsMalformedDocuments) {
  EXPECT_THROW(io::decode_metric(Json::parse(R"({"points":["a"]})")), InputError);
  EXPECT_THROW(io::decode_metric(Json::parse(R"({"points":"a","base":"a","distances":[]})")), InputError);
  EXPECT_THROW(io::decode_metric(Json::parse(R"({"points":["a","b"],"base":"c","distances":[["0","1"],["1","0"]]})")),
               InputError);
}

TEST(Io, FunctionPairsAndMeasureRoundTrip) {
  const auto space = build_example52(2);
  const auto f = example52::fixture_function(space);
  EXPECT_EQ(io::decode_function(space, io::encode(space, f)), f);
  const PairSet pairs({{space.at("x1"), space.at("y1")}, {space.at("v3^2"), space.at("u1^1")}});
  const auto back = io::decode_pairs(space, io::encode(space, pairs));
  EXPECT_EQ(back.pairs(), pairs.pairs());
  for (const auto& mu : example52::random_measures(space, 5, 3)) {
    EXPECT_EQ(io::decode_measure(space, Json::parse(io::encode(space, mu).dump())), mu);
  }
  const auto points = example52::core_points(space);
  EXPECT_EQ(io::decode_points(space, io::encode_points(space, points)), points);
}

TEST(Io, MissingPointIsRejected) {
  const auto space = build_line(3);
  Json j = io::encode(space, LipschitzFunction(space, {0, 1, 2}));
  j["values"].erase("2");
  EXPECT_THROW(io::decode_function(space, j), InputError);
  j["values"]["2"] = "1";
  j["values"]["9"] = "1";
  EXPECT_THROW(io::decode_function(space, j), InputError);
  EXPECT_THROW(io::decode_pairs(space, Json::parse(R"({"pairs":[["0","7"]]})")), InputError);
  EXPECT_THROW(io::decode_pairs(space, Json::parse(R"({"pairs":[["0","0"]]})")), InputError);
  EXPECT_THROW(io::decode_measure(space, Json::parse(R"({"atoms":[{"from":"0","to":"1"}]})")), InputError);
}

TEST(Io, VerdictRoundTrip) {
  const auto line = build_line(4);
  const PairSet cycle({{PointId{0}, PointId{3}}, {PointId{3}, PointId{0}}});
  const auto bad = check_gamma_cm(line, cycle, Gamma::one());
  const auto bad_back = io::decode_verdict(io::encode(line, cycle, bad));
  ASSERT_FALSE(is_certified(bad_back));
  EXPECT_EQ(std::get<CmViolation>(bad_back).cycle, std::get<CmViolation>(bad).cycle);
  EXPECT_EQ(std::get<CmViolation>(bad_back).deficit, std::get<CmViolation>(bad).deficit);
  const PairSet chain({{PointId{3}, PointId{2}}, {PointId{2}, PointId{0}}});
  const auto good = check_gamma_cm(line, chain, Gamma::one());
  const auto good_back = io::decode_verdict(io::encode(line, chain, good));
  ASSERT_TRUE(is_certified(good_back));
  EXPECT_EQ(std::get<CmCertificate>(good_back).potentials, std::get<CmCertificate>(good).potentials);
}

TEST(Io, CertificatesRoundTrip) {
  const auto space = build_example52(1);
  const auto mu = PairMeasure::unit_atom({space.at("x3"), space.at("y3")});
  const Gamma gamma(parse_rational("9/10"));
  const auto ld = *ld2p_certificate(space, mu, gamma).certificate;
  const auto ld_back = io::decode_ld2p(space, Json::parse(io::encode(space, ld).dump()));
  EXPECT_EQ(ld_back.pairs, ld.pairs);
  EXPECT_EQ(ld_back.f, ld.f);
  EXPECT_EQ(ld_back.g, ld.g);
  EXPECT_EQ(ld_back.u, ld.u);
  EXPECT_EQ(ld_back.v, ld.v);
  EXPECT_EQ(ld_back.gamma, ld.gamma);
  EXPECT_EQ(ld_back.measure, ld.measure);
  EXPECT_EQ(ld_back.with_uv.potentials, ld.with_uv.potentials);
  EXPECT_EQ(ld_back.route, ld.route);
  EXPECT_TRUE(replay_ld2p(space, ld_back).holds());

  const auto sd = *sd2p_certificate(space, {mu}, gamma).certificate;
  const auto sd_back = io::decode_sd2p(space, io::encode(space, sd));
  EXPECT_EQ(sd_back.lambdas, sd.lambdas);
  EXPECT_EQ(sd_back.alpha, sd.alpha);
  EXPECT_TRUE(replay_sd2p(space, sd_back).holds());

  const auto two = *two_lip_ltp_witness(space, ld.pairs, parse_rational("1/10")).witness;
  const auto two_back = io::decode_two_lip_ltp(space, io::encode(space, two));
  EXPECT_EQ(two_back.f, two.f);
  EXPECT_EQ(two_back.g, two.g);
  EXPECT_TRUE(replay_two_lip_ltp(space, ld.pairs, parse_rational("1/10"), two_back).holds());

  const auto f = example52::fixture_function(space);
  const auto v = lip_ltp_witness(space, example52::core_points(space), example52::fixture_eps(), f).violations.at(7);
  const auto v_back = io::decode_ltp_violation(space, io::encode(space, v));
  EXPECT_EQ(v_back.lhs, v.lhs);
  EXPECT_EQ(v_back.rhs, v.rhs);
  EXPECT_EQ(v_back.x, v.x);
  EXPECT_EQ(v_back.v, v.v);
}

TEST(Io, HashIsDeterministicAndSensitive) {
  EXPECT_EQ(io::fnv1a64(""), 0xcbf29ce484222325ULL);
  EXPECT_EQ(io::fnv1a64("a"), 0xaf63dc4c8601ec8cULL);
  const auto space = build_example52(1);
  const Json a = io::encode(space);
  EXPECT_EQ(io::hash_hex(a), io::hash_hex(io::encode(build_example52(1))));
  EXPECT_NE(io::hash_hex(a), io::hash_hex(io::encode(build_example52(2))));
  EXPECT_EQ(io::hash_hex(a).size(), 16u);
}

}  // namespace
}  // namespace lipfree

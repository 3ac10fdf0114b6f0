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

#include <benchmark/benchmark.h>

#include "lipfree/d2p.hpp"
#include "lipfree/example52.hpp"
#include "lipfree/functionals.hpp"
#include "lipfree/monotone.hpp"

namespace {

using namespace lipfree;

void BM_DualNorm(benchmark::State& state) {
  const auto space = build_example52(static_cast<int>(state.range(0)));
  const auto measures = example52::random_measures(space, 8, 52);
  std::size_t k = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(dual_norm(space, measures[k++ % measures.size()]).norm);
  }
  state.SetLabel(std::to_string(space.size()) + " points");
}
BENCHMARK(BM_DualNorm)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

void BM_CheckGammaCm(benchmark::State& state) {
  const auto line = build_line(static_cast<int>(state.range(0)) + 1);
  PairSet chain;
  for (std::size_t i = 1; i < line.size(); ++i) chain.insert({PointId{i}, PointId{i - 1}});
  const Gamma gamma(parse_rational("9/10"));
  for (auto _ : state) benchmark::DoNotOptimize(is_certified(check_gamma_cm(line, chain, gamma)));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_CheckGammaCm)->RangeMultiplier(2)->Range(4, 64)->Complexity();

void BM_SliceDiameter(benchmark::State& state) {
  const auto space = build_example52(static_cast<int>(state.range(0)));
  const auto mu = PairMeasure::unit_atom({space.at("x1"), space.at("y1")});
  const Rational alpha = parse_rational("1/5");
  for (auto _ : state) benchmark::DoNotOptimize(slice_diameter(space, mu, alpha).value);
}
BENCHMARK(BM_SliceDiameter)->DenseRange(1, 2)->Unit(benchmark::kMillisecond);

void BM_Ld2pCertificate(benchmark::State& state) {
  const auto space = build_example52(static_cast<int>(state.range(0)));
  const auto measures = example52::random_measures(space, 4, 52);
  const Gamma gamma(parse_rational("9/10"));
  std::size_t k = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(ld2p_certificate(space, measures[k++ % measures.size()], gamma).certificate.has_value());
  }
}
BENCHMARK(BM_Ld2pCertificate)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

void BM_LipLtpScan(benchmark::State& state) {
  const auto space = build_example52(static_cast<int>(state.range(0)));
  const auto n = example52::core_points(space);
  const auto f = example52::fixture_function(space);
  for (auto _ : state) {
    benchmark::DoNotOptimize(lip_ltp_witness(space, n, example52::fixture_eps(), f).violations.size());
  }
}
BENCHMARK(BM_LipLtpScan)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();

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

#include "lipfree/functionals.hpp"

#include <string>

#include "lipfree/parallel.hpp"
#include "subsets.hpp"

namespace lipfree {
namespace {

// Non-base points get consecutive LP variables.
std::vector<std::optional<std::size_t>> variable_map(const FiniteMetricSpace& space) {
  std::vector<std::optional<std::size_t>> var(space.size());
  std::size_t next = 0;
  for (auto p : space.points()) {
    if (p != space.base()) var[p.index] = next++;
  }
  return var;
}

std::vector<Rational> slope_coefficients(const FiniteMetricSpace& space, PointId u, PointId v) {
  const auto var = variable_map(space);
  std::vector<Rational> c(space.size() - 1);
  const Rational inv = 1 / space.distance(u, v);
  if (var[u.index]) c[*var[u.index]] += inv;
  if (var[v.index]) c[*var[v.index]] -= inv;
  return c;
}

struct SliceSolve {
  Rational value;
  LipschitzFunction function;
  std::vector<Rational> multipliers;
};

SliceSolve solve_slice(const FiniteMetricSpace& space, const PairMeasure& measure,
                       const Rational& threshold, PointId u, PointId v) {
  const LinearProgram lp = slice_program(space, measure, threshold, u, v);
  const LpResult result = solve_lp(lp);
  const auto* opt = std::get_if<LpOptimal>(&result);
  if (opt == nullptr) throw InternalError("slice LP is not feasible and bounded");
  return SliceSolve{opt->value, function_from_point(space, opt->point), opt->multipliers};
}

}  // namespace

Rational apply(const FiniteMetricSpace& space, const PairMeasure& measure, const LipschitzFunction& f) {
  Rational total = 0;
  for (const auto& [pair, w] : measure.atoms()) total += w * slope(space, f, pair);
  return total;
}

PairMeasure positivize(const PairMeasure& measure) {
  PairMeasure out;
  for (const auto& [pair, w] : measure.atoms()) {
    if (w > 0) {
      out.add(pair, w);
    } else {
      out.add(reflect(pair), -w);
    }
  }
  return out;
}

LinearProgram unit_ball_program(const FiniteMetricSpace& space) {
  const auto var = variable_map(space);
  LinearProgram lp(space.size() - 1);
  for (const auto& pair : all_pairs(space)) {
    std::vector<Rational> row(lp.num_vars);
    if (var[pair.from.index]) row[*var[pair.from.index]] = 1;
    if (var[pair.to.index]) row[*var[pair.to.index]] = -1;
    lp.add_constraint(std::move(row), space.distance(pair));
  }
  return lp;
}

std::vector<Rational> functional_coefficients(const FiniteMetricSpace& space,
                                              const PairMeasure& measure) {
  check_measure(space, measure);
  const auto var = variable_map(space);
  std::vector<Rational> c(space.size() - 1);
  for (const auto& [pair, w] : measure.atoms()) {
    const Rational scaled = w / space.distance(pair);
    if (var[pair.from.index]) c[*var[pair.from.index]] += scaled;
    if (var[pair.to.index]) c[*var[pair.to.index]] -= scaled;
  }
  return c;
}

LinearProgram slice_program(const FiniteMetricSpace& space, const PairMeasure& measure,
                            const Rational& threshold, PointId u, PointId v) {
  LinearProgram lp = unit_ball_program(space);
  std::vector<Rational> row = functional_coefficients(space, measure);
  for (auto& c : row) c = -c;
  lp.add_constraint(std::move(row), -threshold);
  lp.objective = slope_coefficients(space, u, v);
  return lp;
}

LipschitzFunction function_from_point(const FiniteMetricSpace& space, const std::vector<Rational>& point) {
  const auto var = variable_map(space);
  std::vector<Rational> values(space.size());
  for (auto p : space.points()) {
    if (var[p.index]) values[p.index] = point.at(*var[p.index]);
  }
  return LipschitzFunction(space, std::move(values));
}

DualNormResult dual_norm(const FiniteMetricSpace& space, const PairMeasure& measure) {
  check_measure(space, measure);
  if (space.size() == 1) {
    return DualNormResult{0, LipschitzFunction::zero(space), PairMeasure{}};
  }
  LinearProgram lp = unit_ball_program(space);
  lp.objective = functional_coefficients(space, measure);
  const LpResult result = solve_lp(lp);
  const auto* opt = std::get_if<LpOptimal>(&result);
  if (opt == nullptr) throw InternalError("unit-ball LP is not feasible and bounded");

  DualNormResult out{opt->value, function_from_point(space, opt->point), PairMeasure{}};
  const auto pairs = all_pairs(space);
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (opt->multipliers[i] != 0) out.representative.add(pairs[i], opt->multipliers[i] * space.distance(pairs[i]));
  }
  if (apply(space, measure, out.maximizer) != out.norm || lip_norm(space, out.maximizer) > 1 ||
      out.representative.total_mass() != out.norm) {
    throw InternalError("dual norm certificate failed replay");
  }
  return out;
}

PairMeasure normalize(const FiniteMetricSpace& space, const PairMeasure& measure) {
  const Rational norm = dual_norm(space, measure).norm;
  if (norm == 0) throw InputError("measure induces the zero functional; cannot normalize");
  PairMeasure out = measure;
  out *= 1 / norm;
  return out;
}

OptimalityVerdict is_optimal(const FiniteMetricSpace& space, const PairMeasure& measure) {
  if (!measure.is_positive()) throw InputError("optimality is defined for positive measures; positivize first");
  check_measure(space, measure);
  OptimalityVerdict verdict;
  verdict.support = measure.support();
  verdict.mass = measure.total_mass();
  CmVerdict cm = check_gamma_cm(space, verdict.support, Gamma::one());
  if (auto* cert = std::get_if<CmCertificate>(&cm)) {
    verdict.optimal = true;
    verdict.certificate = std::move(*cert);
  } else {
    verdict.violation = std::get<CmViolation>(std::move(cm));
  }
  verdict.dual_norm = dual_norm(space, measure).norm;
  verdict.gap = verdict.mass - verdict.dual_norm;
  if (verdict.gap < 0 || verdict.optimal != (verdict.gap == 0)) {
    throw InternalError("cyclic-monotonicity verdict disagrees with the LP norm");
  }
  return verdict;
}

AttestationResult check_norm_attainment_signed(const FiniteMetricSpace& space,
                                               const PairMeasure& measure, const Gamma& gamma,
                                               std::size_t max_pool) {
  check_measure(space, measure);
  // Weight of pair p in nu+(A) + nu-(r(A)) is exactly the positivized weight.
  const PairMeasure folded = positivize(measure);
  const PairSet pool = folded.support();
  if (pool.size() > max_pool) {
    throw InputError("candidate pool of " + std::to_string(pool.size()) + " pairs exceeds the limit " +
                     std::to_string(max_pool));
  }
  AttestationResult out;
  out.threshold = gamma.value() * measure.total_variation();
  std::vector<Rational> weights;
  for (const auto& p : pool) weights.push_back(folded.weight(p));
  for (const auto& members : internal::heavy_subsets(weights, out.threshold)) {
    ++out.subsets_examined;
    PairSet candidate;
    for (auto i : members) candidate.insert(pool[i]);
    const CmVerdict cm = check_gamma_cm(space, candidate, gamma);
    if (const auto* cert = std::get_if<CmCertificate>(&cm)) {
      out.attained = true;
      out.mass = measure.positive_part().mass(candidate) + measure.negative_part().mass(reflect_set(candidate));
      out.witness = synthesize_witness(space, candidate, gamma, *cert);
      out.pairs = std::move(candidate);
      return out;
    }
  }
  return out;
}

SliceDiameter slice_diameter(const FiniteMetricSpace& space, const PairMeasure& input,
                             const Rational& alpha, const SliceOptions& options) {
  if (alpha <= 0 || alpha > 2) throw InputError("alpha must lie in (0, 2]");
  if (space.size() < 2) throw InputError("slice diameter needs at least two points");
  PairMeasure measure = input;
  const Rational norm = dual_norm(space, measure).norm;
  if (norm != 1) {
    if (!options.auto_normalize || norm == 0) {
      throw InputError("measure is not normalized (dual norm " + to_string(norm) + ")");
    }
    measure *= 1 / norm;
  }
  const Rational threshold = 1 - alpha;

  std::vector<std::pair<PointId, PointId>> order;
  if (options.hint) {
    auto [u, v] = *options.hint;
    if (u == v) throw InputError("slice hint needs distinct points");
    order.emplace_back(std::min(u, v), std::max(u, v));
  }
  for (std::size_t i = 0; i < space.size(); ++i) {
    for (std::size_t j = i + 1; j < space.size(); ++j) {
      std::pair<PointId, PointId> uv{PointId{i}, PointId{j}};
      if (!order.empty() && order.front() == uv) continue;
      order.push_back(uv);
    }
  }

  std::optional<SliceDiameter> best;
  const std::size_t chunk = std::max(1u, options.jobs);
  std::vector<SlicePairBound> evaluated;
  for (std::size_t start = 0; start < order.size(); start += chunk) {
    const std::size_t stop = std::min(order.size(), start + chunk);
    std::vector<std::optional<SliceSolve>> fwd(stop - start);
    std::vector<std::optional<SliceSolve>> bwd(stop - start);
    parallel_for(2 * (stop - start), options.jobs, [&](std::size_t k) {
      const auto [u, v] = order[start + k / 2];
      if (k % 2 == 0) {
        fwd[k / 2] = solve_slice(space, measure, threshold, u, v);
      } else {
        bwd[k / 2] = solve_slice(space, measure, threshold, v, u);
      }
    });
    for (std::size_t k = 0; k < stop - start; ++k) {
      const auto [u, v] = order[start + k];
      SlicePairBound bound{u, v, fwd[k]->value, bwd[k]->value, fwd[k]->multipliers, bwd[k]->multipliers};
      const Rational total = bound.forward + bound.backward;
      if (!best || total > best->value) {
        best = SliceDiameter{total, u, v, fwd[k]->function, bwd[k]->function, {}, false};
      }
      evaluated.push_back(std::move(bound));
    }
    if (best->value == 2) break;
  }
  best->evaluated = std::move(evaluated);
  best->exhaustive = best->evaluated.size() == order.size();
  // ||f - g|| >= (f - g)(m_{u,v}) = forward + backward.
  if (slope(space, best->f, OrderedPair{best->u, best->v}) + slope(space, best->g, OrderedPair{best->v, best->u}) !=
      best->value) {
    throw InternalError("slice diameter witnesses failed replay");
  }
  return *best;
}

}  // namespace lipfree

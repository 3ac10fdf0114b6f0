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

#include "lipfree/monotone.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace lipfree {
namespace {

std::vector<std::vector<Rational>> beta_matrix(const FiniteMetricSpace& space, const PairSet& pairs,
                                               const Gamma& gamma) {
  const std::size_t n = pairs.size();
  std::vector<std::vector<Rational>> b(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) b[i][j] = beta(space, pairs, gamma, i, j);
  }
  return b;
}

void cycle_search(const std::vector<std::vector<Rational>>& b, std::size_t start,
                  std::vector<bool>& used, std::size_t last, const Rational& partial, bool& ok) {
  if (!ok) return;
  if (partial + b[last][start] < 0) {
    ok = false;
    return;
  }
  for (std::size_t next = start + 1; next < b.size() && ok; ++next) {
    if (used[next]) continue;
    used[next] = true;
    cycle_search(b, start, used, next, partial + b[last][next], ok);
    used[next] = false;
  }
}

}  // namespace

Gamma::Gamma(Rational value) : value_(std::move(value)) {
  if (value_ <= 0 || value_ > 1) throw InputError("gamma must lie in (0, 1], got " + to_string(value_));
}

Rational beta(const FiniteMetricSpace& space, const PairSet& pairs, const Gamma& gamma,
              std::size_t i, std::size_t j) {
  const OrderedPair& pi = pairs[i];
  const OrderedPair& pj = pairs[j];
  Rational through = space.distance(pi.from, pj.to) - gamma.value() * space.distance(pi);
  const Rational& direct = space.distance(pi.to, pj.to);
  return through < direct ? through : direct;
}

CmVerdict check_gamma_cm(const FiniteMetricSpace& space, const PairSet& pairs, const Gamma& gamma) {
  const std::size_t n = pairs.size();
  if (n == 0) return CmCertificate{};
  const auto b = beta_matrix(space, pairs, gamma);
  std::vector<Rational> dist(n);
  std::vector<std::size_t> pred(n, n);
  std::optional<std::size_t> last_updated;
  for (std::size_t round = 0; round < n; ++round) {
    last_updated.reset();
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j) continue;
        Rational candidate = dist[j] + b[i][j];
        if (candidate < dist[i]) {
          dist[i] = std::move(candidate);
          pred[i] = j;
          last_updated = i;
        }
      }
    }
    if (!last_updated) return CmCertificate{std::move(dist)};
  }
  // Still relaxing after n rounds: walking predecessors n steps lands on a
  // cycle of the predecessor graph, which has negative weight.
  std::size_t node = *last_updated;
  for (std::size_t step = 0; step < n; ++step) node = pred[node];
  CmViolation violation;
  std::size_t cursor = node;
  do {
    violation.cycle.push_back(cursor);
    cursor = pred[cursor];
  } while (cursor != node);
  violation.deficit = 0;
  const std::size_t k = violation.cycle.size();
  for (std::size_t t = 0; t < k; ++t) violation.deficit += b[violation.cycle[t]][violation.cycle[(t + 1) % k]];
  if (!replay_violation(space, pairs, gamma, violation)) {
    throw InternalError("extracted cycle does not have negative beta-sum");
  }
  return violation;
}

bool replay_certificate(const FiniteMetricSpace& space, const PairSet& pairs, const Gamma& gamma,
                        const CmCertificate& certificate) {
  const std::size_t n = pairs.size();
  if (certificate.potentials.size() != n) return false;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (certificate.potentials[i] > certificate.potentials[j] + beta(space, pairs, gamma, i, j)) {
        return false;
      }
    }
  }
  return true;
}

bool replay_violation(const FiniteMetricSpace& space, const PairSet& pairs, const Gamma& gamma,
                      const CmViolation& violation) {
  const auto& c = violation.cycle;
  if (c.empty()) return false;
  std::vector<bool> seen(pairs.size(), false);
  for (auto i : c) {
    if (i >= pairs.size() || seen[i]) return false;
    seen[i] = true;
  }
  Rational sum = 0;
  for (std::size_t t = 0; t < c.size(); ++t) sum += beta(space, pairs, gamma, c[t], c[(t + 1) % c.size()]);
  return sum == violation.deficit && sum < 0;
}

bool brute_force_cm_oracle(const FiniteMetricSpace& space, const PairSet& pairs, const Gamma& gamma) {
  if (pairs.size() > 10) throw InputError("brute-force oracle is limited to 10 pairs");
  const auto b = beta_matrix(space, pairs, gamma);
  bool ok = true;
  std::vector<bool> used(pairs.size(), false);
  for (std::size_t start = 0; start < pairs.size() && ok; ++start) {
    used[start] = true;
    cycle_search(b, start, used, start, Rational(0), ok);
    used[start] = false;
  }
  return ok;
}

LipschitzFunction synthesize_witness(const FiniteMetricSpace& space, const PairSet& pairs,
                                     const Gamma& gamma, const CmCertificate& certificate) {
  if (!replay_certificate(space, pairs, gamma, certificate)) {
    throw InputError("certificate does not satisfy alpha_i <= alpha_j + beta_ij");
  }
  if (pairs.empty()) return LipschitzFunction::zero(space);
  PartialFunction anchor;
  for (std::size_t i = 0; i < pairs.size(); ++i) anchor.emplace(pairs[i].to, certificate.potentials[i]);
  LipschitzFunction f = mcshane_inf_extension(anchor, space).function;
  for (const auto& p : pairs) {
    if (slope(space, f, p) < gamma.value()) {
      throw InternalError("synthesized witness has slope below gamma on " + to_string(space, p));
    }
  }
  if (lip_norm(space, f) > 1) throw InternalError("synthesized witness is not 1-Lipschitz");
  return f;
}

AugmentedCheck check_augmented(const FiniteMetricSpace& space, const PairSet& pairs,
                               const Gamma& gamma, PointId u, PointId v) {
  if (u == v) throw InputError("augmenting pair needs u != v");
  PairSet augmented = pairs;
  augmented.insert(OrderedPair{u, v});
  CmVerdict verdict = check_gamma_cm(space, augmented, gamma);
  AugmentedCheck out{augmented, verdict, std::nullopt};
  if (const auto* cert = std::get_if<CmCertificate>(&verdict)) {
    LipschitzFunction f = synthesize_witness(space, augmented, gamma, *cert);
    const Rational reach = gamma.value() * space.distance(u, v);
    for (auto x : project(pairs)) {
      for (auto y : project(pairs)) {
        if (f(y) - f(x) + reach > space.distance(x, u) + space.distance(y, v)) {
          throw InternalError("augmented witness violates the endpoint inequality at (" +
                              space.label(x) + "," + space.label(y) + ")");
        }
      }
    }
    out.witness = std::move(f);
  }
  return out;
}

PruneResult prune_to_cm(const FiniteMetricSpace& space, const PairSet& pairs,
                        const PairMeasure& measure, const Gamma& gamma, int bound) {
  if (bound < 1) throw InputError("distance bound must be a positive integer");
  if (!space.has_integer_distances() || space.max_distance() > bound) {
    throw InputError("prune needs integer distances in {0, ..., " + std::to_string(bound) + "}");
  }
  if (!measure.is_positive()) throw InputError("prune needs a positive measure");
  check_measure(space, measure);
  const CmVerdict verdict = check_gamma_cm(space, pairs, gamma);
  const auto* relaxed = std::get_if<CmCertificate>(&verdict);
  if (relaxed == nullptr) throw InputError("pair set is not gamma-cyclically monotonic");

  PruneResult result;
  const Rational slack = bound * (1 - gamma.value());
  if (slack == 0) {
    result.kept = pairs;
    result.certificate = *relaxed;
    return result;
  }
  if (slack >= 1) {
    result.bound_vacuous = true;
    std::vector<std::size_t> order(pairs.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return measure.weight(pairs[a]) > measure.weight(pairs[b]);
    });
    for (auto i : order) {
      PairSet trial = result.kept;
      trial.insert(pairs[i]);
      if (is_certified(check_gamma_cm(space, trial, Gamma::one()))) result.kept = std::move(trial);
    }
    result.certificate = std::get<CmCertificate>(check_gamma_cm(space, result.kept, Gamma::one()));
    result.dropped_mass = measure.mass(pairs) - measure.mass(result.kept);
    return result;
  }

  // Largest K with slack <= 1/K; then 1/(2K) <= slack holds automatically.
  const Rational inverse = 1 / slack;
  const std::size_t buckets = floor(inverse).get_num().get_ui();
  const Rational k_rational(static_cast<unsigned long>(buckets));
  if (buckets < 1 || slack > 1 / k_rational || 1 / (2 * k_rational) > slack) {
    throw InternalError("bucket count out of range");
  }
  std::vector<std::size_t> bucket_of(pairs.size());
  std::vector<Rational> bucket_mass(buckets + 1);
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const Rational frac = fractional_part(relaxed->potentials[i]);
    bucket_of[i] = floor(frac * k_rational).get_num().get_ui() + 1;
    bucket_mass[bucket_of[i]] += measure.weight(pairs[i]);
  }
  std::size_t drop = 1;
  for (std::size_t k = 2; k <= buckets; ++k) {
    if (bucket_mass[k] < bucket_mass[drop]) drop = k;
  }
  const Rational offset = Rational(static_cast<unsigned long>(drop)) / k_rational;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (bucket_of[i] == drop) continue;
    result.kept.insert(pairs[i]);
    result.certificate.potentials.push_back(floor(relaxed->potentials[i] - offset));
  }
  result.buckets = buckets;
  result.dropped_bucket = drop;
  result.dropped_mass = bucket_mass[drop];

  if (!replay_certificate(space, result.kept, Gamma::one(), result.certificate)) {
    throw InternalError("rounded potentials do not certify the pruned set");
  }
  if (measure.mass(result.kept) < measure.mass(pairs) - 2 * slack * measure.total_mass()) {
    throw InternalError("pruned set lost more mass than the bound allows");
  }
  return result;
}

}  // namespace lipfree

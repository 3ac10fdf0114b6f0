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

#include "lipfree/d2p.hpp"

#include <algorithm>
#include <functional>

#include "lipfree/parallel.hpp"
#include "subsets.hpp"

namespace lipfree {
namespace {

std::string label_pair(const FiniteMetricSpace& space, PointId a, PointId b) {
  return to_string(space, OrderedPair{a, b});
}

std::string describe_set(const FiniteMetricSpace& space, const PairSet& pairs) {
  std::string out = "{";
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (i) out += ",";
    out += to_string(space, pairs[i]);
  }
  return out + "}";
}

std::string describe_failure(const FiniteMetricSpace& space, const AugmentedCheck& check) {
  const auto& violation = std::get<CmViolation>(check.verdict);
  std::string out = "cycle";
  for (auto i : violation.cycle) out += " " + to_string(space, check.augmented[i]);
  return out + " has beta-sum " + to_string(violation.deficit);
}

// Lowest index in [0, count) for which probe succeeds, evaluated in chunks of
// `jobs` so the answer does not depend on scheduling.
template <typename T>
std::optional<std::pair<std::size_t, T>> first_success(
    std::size_t count, unsigned jobs, const std::function<std::optional<T>(std::size_t)>& probe) {
  const std::size_t chunk = std::max(1u, jobs);
  for (std::size_t start = 0; start < count; start += chunk) {
    const std::size_t stop = std::min(count, start + chunk);
    std::vector<std::optional<T>> results(stop - start);
    parallel_for(stop - start, jobs, [&](std::size_t k) { results[k] = probe(start + k); });
    for (std::size_t k = 0; k < results.size(); ++k) {
      if (results[k]) return std::make_pair(start + k, std::move(*results[k]));
    }
  }
  return std::nullopt;
}

std::vector<std::pair<PointId, PointId>> unordered_pairs(const FiniteMetricSpace& space) {
  std::vector<std::pair<PointId, PointId>> out;
  for (std::size_t i = 0; i < space.size(); ++i) {
    for (std::size_t j = i + 1; j < space.size(); ++j) out.emplace_back(PointId{i}, PointId{j});
  }
  return out;
}

// Candidate sets A within supp(measure) with measure(A) >= threshold, by
// decreasing mass, ties in lexicographic pair order.
std::vector<PairSet> candidate_sets(const FiniteMetricSpace& space, const PairMeasure& measure,
                                    const Rational& threshold, std::size_t max_pool) {
  const PairSet support = measure.support();
  std::vector<PairSet> out;
  if (support.size() <= max_pool) {
    std::vector<Rational> weights;
    for (const auto& p : support) weights.push_back(measure.weight(p));
    for (const auto& members : internal::heavy_subsets(weights, threshold)) {
      PairSet s;
      for (auto i : members) s.insert(support[i]);
      out.push_back(std::move(s));
    }
    return out;
  }
  std::vector<std::pair<Rational, PairSet>> ranked;
  ranked.emplace_back(measure.mass(support), support);
  for (auto w : space.points()) {
    PairSet trimmed;
    for (const auto& p : support) {
      if (p.from != w && p.to != w) trimmed.insert(p);
    }
    if (trimmed.size() == support.size()) continue;
    Rational mass = measure.mass(trimmed);
    if (mass >= threshold) ranked.emplace_back(std::move(mass), std::move(trimmed));
  }
  std::stable_sort(ranked.begin(), ranked.end(),
                   [](const auto& a, const auto& b) { return a.first > b.first; });
  for (auto& [mass, s] : ranked) out.push_back(std::move(s));
  return out;
}

void add_potential_lines(const FiniteMetricSpace& space, const PairSet& pairs, const Gamma& gamma,
                         const CmCertificate& cert, const std::string& tag, Derivation& out) {
  if (cert.potentials.size() != pairs.size()) {
    out.lines.push_back({tag + ": potential count matches pair count", Rational(1), Rational(0), false});
    return;
  }
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    for (std::size_t j = 0; j < pairs.size(); ++j) {
      if (i == j) continue;
      out.lines.push_back({tag + ": alpha" + to_string(space, pairs[i]) + " <= alpha" +
                               to_string(space, pairs[j]) + " + beta",
                           cert.potentials[i], cert.potentials[j] + beta(space, pairs, gamma, i, j), false});
    }
  }
}

PairSet with_pair(const PairSet& pairs, PointId a, PointId b) {
  PairSet out = pairs;
  out.insert(OrderedPair{a, b});
  return out;
}

// Invariants shared by LD2P and SD2P certificates for one measure.
void add_two_function_lines(const FiniteMetricSpace& space, const PairSet& pairs, const LipschitzFunction& f,
                            const LipschitzFunction& g, PointId u, PointId v, const Gamma& gamma,
                            const CmCertificate& with_uv, const CmCertificate& with_vu,
                            const std::string& tag, Derivation& out) {
  out.lines.push_back({tag + "||f|| <= 1", lip_norm(space, f), Rational(1), false});
  out.lines.push_back({tag + "||g|| <= 1", lip_norm(space, g), Rational(1), false});
  for (const auto& p : pairs) {
    out.lines.push_back({tag + "gamma <= slope(f, " + to_string(space, p) + ")", gamma.value(),
                         slope(space, f, p), false});
    out.lines.push_back({tag + "gamma <= slope(g, " + to_string(space, p) + ")", gamma.value(),
                         slope(space, g, p), false});
  }
  add_potential_lines(space, with_pair(pairs, u, v), gamma, with_uv, tag + "A+" + label_pair(space, u, v), out);
  add_potential_lines(space, with_pair(pairs, v, u), gamma, with_vu, tag + "A+" + label_pair(space, v, u), out);
  const Rational reach = gamma.value() * space.distance(u, v);
  for (auto x : project(pairs)) {
    for (auto y : project(pairs)) {
      Rational spread = f(x) - f(y);
      if (g(y) - g(x) > spread) spread = g(y) - g(x);
      out.lines.push_back({tag + "max{f(" + space.label(x) + ")-f(" + space.label(y) + "), g(" +
                               space.label(y) + ")-g(" + space.label(x) + ")} + gamma d(u,v) <= d(" +
                               space.label(x) + ",u) + d(" + space.label(y) + ",v)",
                           spread + reach, space.distance(x, u) + space.distance(y, v), false});
    }
  }
}

void require_optimal_normalized(const FiniteMetricSpace& space, const PairMeasure& measure) {
  const OptimalityVerdict verdict = is_optimal(space, measure);
  if (!verdict.optimal) throw InputError("measure is not optimal (support is not cyclically monotonic)");
  if (verdict.dual_norm != 1) {
    throw InputError("measure is not normalized (norm " + to_string(verdict.dual_norm) + ")");
  }
}

struct PairMatch {
  LipschitzFunction f;
  LipschitzFunction g;
  CmCertificate with_uv;
  CmCertificate with_vu;
};

// Both augmented sets certified: f from pairs + {(v, u)}, g from pairs + {(u, v)}.
std::optional<PairMatch> match_pair(const FiniteMetricSpace& space, const PairSet& pairs,
                                    const Gamma& gamma, PointId u, PointId v, std::string* why) {
  AugmentedCheck forward = check_augmented(space, pairs, gamma, u, v);
  if (!forward.witness) {
    if (why) *why = describe_failure(space, forward);
    return std::nullopt;
  }
  AugmentedCheck backward = check_augmented(space, pairs, gamma, v, u);
  if (!backward.witness) {
    if (why) *why = describe_failure(space, backward);
    return std::nullopt;
  }
  return PairMatch{std::move(*backward.witness), std::move(*forward.witness),
                   std::get<CmCertificate>(forward.verdict), std::get<CmCertificate>(backward.verdict)};
}

// Rounds a slope-1 witness to integers and looks for (u, v) with
// |f(x) - f(y)| + gamma d(u, v) <= d(x, u) + d(y, v) on the endpoints of pairs.
std::optional<Ld2pCertificate> integer_route(const FiniteMetricSpace& space, const PairMeasure& measure,
                                             const PairSet& pairs, const Gamma& gamma) {
  if (!space.has_integer_distances()) return std::nullopt;
  const CmVerdict cm = check_gamma_cm(space, pairs, Gamma::one());
  const auto* cert = std::get_if<CmCertificate>(&cm);
  if (cert == nullptr) return std::nullopt;
  const LipschitzFunction f =
      floor_round(space, synthesize_witness(space, pairs, Gamma::one(), *cert), pairs);
  const auto ends = project(pairs);
  for (const auto& [u, v] : unordered_pairs(space)) {
    const Rational reach = gamma.value() * space.distance(u, v);
    bool fits = true;
    for (auto x : ends) {
      for (auto y : ends) {
        if (abs(f(x) - f(y)) + reach > space.distance(x, u) + space.distance(y, v)) {
          fits = false;
          break;
        }
      }
      if (!fits) break;
    }
    if (!fits) continue;
    CmVerdict uv = check_gamma_cm(space, with_pair(pairs, u, v), gamma);
    CmVerdict vu = check_gamma_cm(space, with_pair(pairs, v, u), gamma);
    if (!is_certified(uv) || !is_certified(vu)) {
      throw InternalError("integer witness fits (u, v) but an augmented set is not gamma-CM");
    }
    return Ld2pCertificate{pairs, f, f, u, v, gamma.value(), measure,
                           std::get<CmCertificate>(std::move(uv)), std::get<CmCertificate>(std::move(vu)),
                           "integer"};
  }
  return std::nullopt;
}

}  // namespace

bool Derivation::holds() const {
  return std::all_of(lines.begin(), lines.end(), [](const Inequality& l) { return l.holds(); });
}

void Derivation::require() const {
  for (const auto& l : lines) {
    if (!l.holds()) {
      throw InternalError("replay failed: " + l.statement + " (" + to_string(l.lhs) + " vs " +
                          to_string(l.rhs) + ")");
    }
  }
}

Ld2pOutcome ld2p_certificate(const FiniteMetricSpace& space, const PairMeasure& measure,
                             const Gamma& gamma, const SearchOptions& options) {
  if (gamma.value() >= 1) throw InputError("LD2P certificates need gamma < 1");
  if (!measure.is_positive()) throw InputError("measure must be positive");
  require_optimal_normalized(space, measure);

  Ld2pOutcome outcome;
  const auto candidates =
      candidate_sets(space, measure, gamma.value() * measure.total_mass(), options.max_subset_pool);
  const auto scan = unordered_pairs(space);
  for (const auto& pairs : candidates) {
    const std::string name = "A=" + describe_set(space, pairs);
    if (auto cert = integer_route(space, measure, pairs, gamma)) {
      outcome.certificate = std::move(cert);
      break;
    }
    outcome.log.push_back({name, "integer route: no fitting (u,v)"});
    std::vector<std::string> reasons(scan.size());
    auto found = first_success<PairMatch>(scan.size(), options.jobs, [&](std::size_t k) {
      return match_pair(space, pairs, gamma, scan[k].first, scan[k].second, &reasons[k]);
    });
    const std::size_t tried = found ? found->first : scan.size();
    for (std::size_t k = 0; k < tried; ++k) {
      outcome.log.push_back({name + " (u,v)=" + label_pair(space, scan[k].first, scan[k].second), reasons[k]});
    }
    if (found) {
      auto& m = found->second;
      const auto [u, v] = scan[found->first];
      outcome.certificate = Ld2pCertificate{pairs, std::move(m.f), std::move(m.g), u, v, gamma.value(),
                                            measure, std::move(m.with_uv), std::move(m.with_vu), "scan"};
      break;
    }
  }
  if (outcome.certificate) replay_ld2p(space, *outcome.certificate).require();
  return outcome;
}

Derivation replay_ld2p(const FiniteMetricSpace& space, const Ld2pCertificate& c) {
  if (c.u == c.v) throw InputError("certificate has u == v");
  const Gamma gamma(c.gamma);
  Derivation out;
  out.lines.push_back({"gamma mu(M~) <= mu(A)", c.gamma * c.measure.total_mass(), c.measure.mass(c.pairs), false});
  for (const auto& p : c.pairs) {
    out.lines.push_back({"A is inside supp mu: 0 < mu" + to_string(space, p), Rational(0), c.measure.weight(p), true});
  }
  add_two_function_lines(space, c.pairs, c.f, c.g, c.u, c.v, gamma, c.with_uv, c.with_vu, "", out);
  const Rational slice_floor = 1 - 2 * (1 - c.gamma * c.gamma);
  out.lines.push_back({"f in slice: 1 - alpha < mu(f), alpha = 2(1 - gamma^2)", slice_floor,
                       apply(space, c.measure, c.f), true});
  out.lines.push_back({"g in slice: 1 - alpha < mu(g), alpha = 2(1 - gamma^2)", slice_floor,
                       apply(space, c.measure, c.g), true});
  return out;
}

Sd2pOutcome sd2p_certificate(const FiniteMetricSpace& space, const std::vector<PairMeasure>& measures,
                             const Gamma& gamma, std::vector<Rational> lambdas, const SearchOptions& options) {
  if (measures.empty()) throw InputError("SD2P needs at least one measure");
  if (gamma.value() >= 1) throw InputError("SD2P certificates need gamma < 1");
  if (lambdas.empty()) lambdas.assign(measures.size(), Rational(1, measures.size()));
  if (lambdas.size() != measures.size()) throw InputError("one convex weight per measure required");
  Rational total = 0;
  for (const auto& l : lambdas) {
    if (l < 0) throw InputError("convex weights must be nonnegative");
    total += l;
  }
  if (total != 1) throw InputError("convex weights must sum to 1");
  std::vector<std::vector<PairSet>> candidates;
  for (const auto& mu : measures) {
    if (!mu.is_positive()) throw InputError("measure must be positive");
    require_optimal_normalized(space, mu);
    candidates.push_back(candidate_sets(space, mu, gamma.value() * mu.total_mass(), options.max_subset_pool));
  }

  struct Joint {
    std::vector<std::size_t> chosen;
    std::vector<PairMatch> matches;
  };
  Sd2pOutcome outcome;
  const auto scan = unordered_pairs(space);
  std::vector<std::string> reasons(scan.size());
  auto found = first_success<Joint>(scan.size(), options.jobs, [&](std::size_t k) -> std::optional<Joint> {
    const auto [u, v] = scan[k];
    Joint joint;
    for (std::size_t i = 0; i < measures.size(); ++i) {
      std::optional<PairMatch> hit;
      for (std::size_t a = 0; a < candidates[i].size() && !hit; ++a) {
        hit = match_pair(space, candidates[i][a], gamma, u, v, nullptr);
        if (hit) joint.chosen.push_back(a);
      }
      if (!hit) {
        reasons[k] = "no candidate set for measure " + std::to_string(i + 1);
        return std::nullopt;
      }
      joint.matches.push_back(std::move(*hit));
    }
    return joint;
  });
  const std::size_t tried = found ? found->first : scan.size();
  for (std::size_t k = 0; k < tried; ++k) {
    outcome.log.push_back({"(u,v)=" + label_pair(space, scan[k].first, scan[k].second), reasons[k]});
  }
  if (!found) return outcome;

  const auto [u, v] = scan[found->first];
  Sd2pCertificate cert{{}, {}, {}, {}, {}, measures, lambdas, u, v, gamma.value(),
                       2 * (1 - gamma.value() * gamma.value())};
  for (std::size_t i = 0; i < measures.size(); ++i) {
    auto& m = found->second.matches[i];
    cert.pairs.push_back(candidates[i][found->second.chosen[i]]);
    cert.f.push_back(std::move(m.f));
    cert.g.push_back(std::move(m.g));
    cert.with_uv.push_back(std::move(m.with_uv));
    cert.with_vu.push_back(std::move(m.with_vu));
  }
  replay_sd2p(space, cert).require();
  outcome.certificate = std::move(cert);
  return outcome;
}

Derivation replay_sd2p(const FiniteMetricSpace& space, const Sd2pCertificate& c) {
  const std::size_t n = c.measures.size();
  if (c.u == c.v) throw InputError("certificate has u == v");
  if (c.pairs.size() != n || c.f.size() != n || c.g.size() != n || c.with_uv.size() != n ||
      c.with_vu.size() != n || c.lambdas.size() != n) {
    throw InputError("SD2P certificate has inconsistent lengths");
  }
  const Gamma gamma(c.gamma);
  Derivation out;
  out.lines.push_back({"1 - alpha/2 <= gamma^2", 1 - c.alpha / 2, c.gamma * c.gamma, false});
  Rational lambda_total = 0;
  LipschitzFunction f_sum = LipschitzFunction::zero(space);
  LipschitzFunction g_sum = LipschitzFunction::zero(space);
  for (std::size_t i = 0; i < n; ++i) {
    const std::string tag = "[" + std::to_string(i + 1) + "] ";
    const auto& mu = c.measures[i];
    out.lines.push_back({tag + "gamma mu(M~) <= mu(A)", c.gamma * mu.total_mass(), mu.mass(c.pairs[i]), false});
    out.lines.push_back({tag + "0 <= lambda", Rational(0), c.lambdas[i], false});
    add_two_function_lines(space, c.pairs[i], c.f[i], c.g[i], c.u, c.v, gamma, c.with_uv[i], c.with_vu[i], tag,
                           out);
    out.lines.push_back({tag + "f in slice: 1 - alpha < mu(f)", 1 - c.alpha, apply(space, mu, c.f[i]), true});
    out.lines.push_back({tag + "g in slice: 1 - alpha < mu(g)", 1 - c.alpha, apply(space, mu, c.g[i]), true});
    lambda_total += c.lambdas[i];
    f_sum += c.lambdas[i] * c.f[i];
    g_sum += c.lambdas[i] * c.g[i];
  }
  out.lines.push_back({"sum lambda <= 1", lambda_total, Rational(1), false});
  out.lines.push_back({"1 <= sum lambda", Rational(1), lambda_total, false});
  const OrderedPair vu{c.v, c.u};
  out.lines.push_back({"2 gamma <= (f - g)(m_{v,u}) for f = sum lambda f_i, g = sum lambda g_i",
                       2 * c.gamma, slope(space, f_sum, vu) - slope(space, g_sum, vu), false});
  return out;
}

LipLtpOutcome lip_ltp_witness(const FiniteMetricSpace& space, const std::set<PointId>& subset,
                              const Rational& eps, const LipschitzFunction& f) {
  if (eps <= 0 || eps >= 1) throw InputError("eps must lie in (0, 1)");
  if (lip_norm(space, f) > 1) throw InputError("function is not in the unit ball");
  for (auto p : subset) {
    if (p.index >= space.size()) throw InputError("subset point outside the space");
  }
  const Rational factor = 1 - eps;
  LipLtpOutcome outcome;
  for (const auto& pair : all_pairs(space)) {
    const PointId u = pair.from, v = pair.to;
    std::optional<LtpViolation> tightest;
    for (auto x : subset) {
      for (auto y : subset) {
        Rational spread = abs(f(x) - f(y)) + space.distance(u, v);
        Rational lhs = factor * spread;
        Rational rhs = space.distance(x, u) + space.distance(y, v);
        if (lhs <= rhs) continue;
        if (!tightest || lhs - rhs < tightest->lhs - tightest->rhs) {
          tightest = LtpViolation{u, v, x, y, factor, std::move(spread), std::move(lhs), std::move(rhs)};
        }
      }
    }
    if (!tightest) {
      outcome.witness = std::make_pair(u, v);
      return outcome;
    }
    outcome.violations.push_back(std::move(*tightest));
  }
  return outcome;
}

Derivation replay_lip_ltp_violation(const FiniteMetricSpace& space, const std::set<PointId>& subset,
                                    const Rational& eps, const LipschitzFunction& f, const LtpViolation& v) {
  Derivation out;
  const bool members = subset.contains(v.x) && subset.contains(v.y);
  out.lines.push_back({"x and y lie in the subset", Rational(members ? 0 : 1), Rational(0), false});
  out.lines.push_back({"u != v", Rational(0), Rational(v.u == v.v ? 0 : 1), true});
  const Rational spread = abs(f(v.x) - f(v.y)) + space.distance(v.u, v.v);
  const Rational lhs = (1 - eps) * spread;
  const Rational rhs = space.distance(v.x, v.u) + space.distance(v.y, v.v);
  out.lines.push_back({"recorded spread equals |f(x)-f(y)| + d(u,v)", spread, v.spread, false});
  out.lines.push_back({"recorded spread equals |f(x)-f(y)| + d(u,v)", v.spread, spread, false});
  out.lines.push_back({"d(" + space.label(v.x) + "," + space.label(v.u) + ") + d(" + space.label(v.y) + "," +
                           space.label(v.v) + ") < (1-eps)(|f(x)-f(y)| + d(u,v))",
                       rhs, lhs, true});
  return out;
}

TwoLipLtpOutcome two_lip_ltp_witness(const FiniteMetricSpace& space, const PairSet& pairs, const Rational& eps,
                                     const SearchOptions& options) {
  if (eps <= 0 || eps >= 1) throw InputError("eps must lie in (0, 1)");
  if (!is_certified(check_gamma_cm(space, pairs, Gamma::one()))) {
    throw InputError("pair set is not cyclically monotonic");
  }
  const Gamma gamma(1 - eps);
  const auto scan = unordered_pairs(space);
  std::vector<std::string> reasons(scan.size());
  auto found = first_success<PairMatch>(scan.size(), options.jobs, [&](std::size_t k) {
    return match_pair(space, pairs, gamma, scan[k].first, scan[k].second, &reasons[k]);
  });
  TwoLipLtpOutcome outcome;
  const std::size_t tried = found ? found->first : scan.size();
  for (std::size_t k = 0; k < tried; ++k) {
    outcome.log.push_back({"(u,v)=" + label_pair(space, scan[k].first, scan[k].second), reasons[k]});
  }
  if (found) {
    auto& m = found->second;
    const auto [u, v] = scan[found->first];
    outcome.witness = TwoLipLtpWitness{std::move(m.f), std::move(m.g), u, v, std::move(m.with_uv),
                                       std::move(m.with_vu)};
    replay_two_lip_ltp(space, pairs, eps, *outcome.witness).require();
  }
  return outcome;
}

Derivation replay_two_lip_ltp(const FiniteMetricSpace& space, const PairSet& pairs, const Rational& eps,
                              const TwoLipLtpWitness& w) {
  if (w.u == w.v) throw InputError("witness has u == v");
  Derivation out;
  add_two_function_lines(space, pairs, w.f, w.g, w.u, w.v, Gamma(1 - eps), w.with_uv, w.with_vu, "", out);
  return out;
}

NeighborhoodDiameter weak_star_neighborhood_diameter(const FiniteMetricSpace& space,
                                                     const std::set<PointId>& subset,
                                                     const LipschitzFunction& f, const Rational& delta,
                                                     unsigned jobs) {
  if (delta <= 0) throw InputError("delta must be positive");
  if (space.size() < 2) throw InputError("need at least two points");
  LinearProgram base = unit_ball_program(space);
  for (auto x : subset) {
    for (auto y : subset) {
      if (x == y) continue;
      PairMeasure molecule = PairMeasure::unit_atom(OrderedPair{x, y});
      std::vector<Rational> row = functional_coefficients(space, molecule);
      const Rational target = slope(space, f, OrderedPair{x, y});
      base.add_constraint(row, target + delta);
      for (auto& c : row) c = -c;
      base.add_constraint(std::move(row), delta - target);
    }
  }
  const auto ordered = all_pairs(space);
  std::vector<std::optional<LpOptimal>> best(ordered.size());
  parallel_for(ordered.size(), jobs, [&](std::size_t k) {
    LinearProgram lp = base;
    lp.objective = functional_coefficients(space, PairMeasure::unit_atom(ordered[k]));
    LpResult result = solve_lp(lp);
    auto* opt = std::get_if<LpOptimal>(&result);
    if (opt == nullptr) throw InternalError("neighborhood LP is not feasible and bounded");
    best[k] = std::move(*opt);
  });
  std::optional<NeighborhoodDiameter> out;
  for (std::size_t i = 0; i < ordered.size(); ++i) {
    if (ordered[i].from > ordered[i].to) continue;
    const auto j = static_cast<std::size_t>(
        std::find(ordered.begin(), ordered.end(), reflect(ordered[i])) - ordered.begin());
    Rational total = best[i]->value + best[j]->value;
    if (!out || total > out->value) {
      out = NeighborhoodDiameter{std::move(total), ordered[i].from, ordered[i].to,
                                 function_from_point(space, best[i]->point),
                                 function_from_point(space, best[j]->point)};
    }
  }
  return *out;
}

}  // namespace lipfree

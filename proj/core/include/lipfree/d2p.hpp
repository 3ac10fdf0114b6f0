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

#ifndef LIPFREE_D2P_HPP_
#define LIPFREE_D2P_HPP_

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "lipfree/functionals.hpp"
#include "lipfree/lipschitz.hpp"
#include "lipfree/measure.hpp"
#include "lipfree/metric.hpp"
#include "lipfree/monotone.hpp"

namespace lipfree {

// One replayed inequality lhs <= rhs (or lhs < rhs when strict), with a
// human-readable statement of what was checked.
struct Inequality {
  std::string statement;
  Rational lhs;
  Rational rhs;
  bool strict = false;
  bool holds() const { return strict ? lhs < rhs : lhs <= rhs; }
};

struct Derivation {
  std::vector<Inequality> lines;
  bool holds() const;
  // Throws InternalError naming the first failed line.
  void require() const;
};

// Roles follow the two-function inequality
//   max{f(x) - f(y), g(y) - g(x)} + gamma d(u, v) <= d(x, u) + d(y, v):
// g certifies pairs + {(u, v)} and f certifies pairs + {(v, u)}.
struct Ld2pCertificate {
  PairSet pairs;
  LipschitzFunction f;
  LipschitzFunction g;
  PointId u;
  PointId v;
  Rational gamma;
  PairMeasure measure;
  CmCertificate with_uv;  // potentials for pairs + {(u, v)}
  CmCertificate with_vu;  // potentials for pairs + {(v, u)}
  std::string route;      // "integer" or "scan"
};

struct SearchLogEntry {
  std::string candidate;
  std::string outcome;
};

struct Ld2pOutcome {
  std::optional<Ld2pCertificate> certificate;
  // Every candidate tried before success (or all of them on exhaustion).
  std::vector<SearchLogEntry> log;
};

struct SearchOptions {
  unsigned jobs = 1;
  // Supports up to this size get exhaustive subset enumeration; larger ones
  // only try the support and the support minus the atoms touching one point.
  std::size_t max_subset_pool = 16;
};

// Searches A within supp(mu) (mu(A) >= gamma, by decreasing mass) and a pair
// (u, v) such that both augmented sets are gamma-CM, then synthesizes f, g and
// replays every invariant. On integer metrics a rounded integer-valued
// function is tried first. Throws InputError unless mu is optimal with
// dual norm 1 and 0 < gamma < 1.
Ld2pOutcome ld2p_certificate(const FiniteMetricSpace& space, const PairMeasure& measure,
                             const Gamma& gamma, const SearchOptions& options = {});

Derivation replay_ld2p(const FiniteMetricSpace& space, const Ld2pCertificate& certificate);

struct Sd2pCertificate {
  std::vector<PairSet> pairs;
  std::vector<LipschitzFunction> f;
  std::vector<LipschitzFunction> g;
  std::vector<CmCertificate> with_uv;
  std::vector<CmCertificate> with_vu;
  std::vector<PairMeasure> measures;
  std::vector<Rational> lambdas;  // convex weights for the combined pair
  PointId u;
  PointId v;
  Rational gamma;
  Rational alpha;  // 2 (1 - gamma^2), so gamma^2 >= 1 - alpha / 2
};

struct Sd2pOutcome {
  std::optional<Sd2pCertificate> certificate;
  std::vector<SearchLogEntry> log;
};

// Common (u, v) for several optimal normalized measures. lambdas default to
// uniform weights.
Sd2pOutcome sd2p_certificate(const FiniteMetricSpace& space, const std::vector<PairMeasure>& measures,
                             const Gamma& gamma, std::vector<Rational> lambdas = {},
                             const SearchOptions& options = {});

// Per-i inequalities, slice membership of f_i, g_i and the combined bound
// (f - g)(m_{v,u}) >= 2 gamma for f = sum lambda_i f_i, g = sum lambda_i g_i.
Derivation replay_sd2p(const FiniteMetricSpace& space, const Sd2pCertificate& certificate);

struct LtpViolation {
  PointId u;
  PointId v;
  PointId x;
  PointId y;
  Rational factor;  // 1 - eps
  Rational spread;  // |f(x) - f(y)| + d(u, v)
  Rational lhs;     // factor * spread
  Rational rhs;     // d(x, u) + d(y, v)
};

struct LipLtpOutcome {
  std::optional<std::pair<PointId, PointId>> witness;
  // For each candidate scanned without success, its tightest violated
  // inequality (smallest lhs - rhs; first in (x, y) order on ties).
  std::vector<LtpViolation> violations;
};

// Scans ordered (u, v), u != v, in declaration order for one with
// (1 - eps)(|f(x) - f(y)| + d(u, v)) <= d(x, u) + d(y, v) for all x, y in subset.
// Throws InputError unless 0 < eps < 1 and lip_norm(f) <= 1.
LipLtpOutcome lip_ltp_witness(const FiniteMetricSpace& space, const std::set<PointId>& subset,
                              const Rational& eps, const LipschitzFunction& f);

Derivation replay_lip_ltp_violation(const FiniteMetricSpace& space, const std::set<PointId>& subset,
                                    const Rational& eps, const LipschitzFunction& f,
                                    const LtpViolation& violation);

struct TwoLipLtpWitness {
  LipschitzFunction f;  // certifies pairs + {(v, u)}
  LipschitzFunction g;  // certifies pairs + {(u, v)}
  PointId u;
  PointId v;
  CmCertificate with_uv;
  CmCertificate with_vu;
};

struct TwoLipLtpOutcome {
  std::optional<TwoLipLtpWitness> witness;
  std::vector<SearchLogEntry> log;
};

// gamma = 1 - eps; first unordered {u, v} (u before v) where both augmented
// sets certify. Throws InputError if pairs is not cyclically monotonic or eps
// is outside (0, 1).
TwoLipLtpOutcome two_lip_ltp_witness(const FiniteMetricSpace& space, const PairSet& pairs,
                                     const Rational& eps, const SearchOptions& options = {});

Derivation replay_two_lip_ltp(const FiniteMetricSpace& space, const PairSet& pairs, const Rational& eps,
                              const TwoLipLtpWitness& witness);

struct NeighborhoodDiameter {
  Rational value;
  PointId u;
  PointId v;
  LipschitzFunction g;
  LipschitzFunction h;
};

// Largest (g - h)(m_{u,v}) over g, h in the unit ball with
// |slope(g, p) - slope(f, p)| <= delta for every ordered pair p inside subset.
NeighborhoodDiameter weak_star_neighborhood_diameter(const FiniteMetricSpace& space,
                                                     const std::set<PointId>& subset,
                                                     const LipschitzFunction& f, const Rational& delta,
                                                     unsigned jobs = 1);

}  // namespace lipfree

#endif  // LIPFREE_D2P_HPP_

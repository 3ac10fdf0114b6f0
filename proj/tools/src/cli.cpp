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

#include "lipfree_cli/cli.hpp"

#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <optional>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "lipfree/d2p.hpp"
#include "lipfree/example52.hpp"
#include "lipfree/functionals.hpp"
#include "lipfree/io.hpp"
#include "lipfree/lipschitz.hpp"
#include "lipfree/lp.hpp"
#include "lipfree/measure.hpp"
#include "lipfree/metric.hpp"
#include "lipfree/monotone.hpp"

namespace lipfree::cli {
namespace {

using io::encode;
using io::Json;

struct Global {
  std::string format = "json";
  std::string builtin;
  std::string metric;
  unsigned jobs = 0;
  bool emit_proof = false;
  bool timing = true;
};

struct Outcome {
  explicit Outcome(Json r) : report(std::move(r)) {}
  Json report;
  std::vector<std::string> text;
  int code = kHolds;
};

Json load_json(const std::string& arg) {
  const auto first = arg.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && (arg[first] == '{' || arg[first] == '[')) {
    try {
      return Json::parse(arg);
    } catch (const nlohmann::json::parse_error& e) {
      throw InputError(std::string("inline JSON: ") + e.what());
    }
  }
  return io::read_file(arg);
}

FiniteMetricSpace checked(FiniteMetricSpace space) {
  const ValidationReport report = validate_metric(space);
  if (!report.ok()) throw InputError("invalid metric: " + describe(space, *report.violation));
  return space;
}

// For commands whose main argument is not the metric: --builtin, --metric, or
// a "metric" member embedded in the main document.
FiniteMetricSpace context_space(const Global& g, const Json* doc) {
  if (!g.builtin.empty()) return build_named(g.builtin);
  if (!g.metric.empty()) return checked(io::decode_metric(load_json(g.metric)));
  if (doc != nullptr && doc->is_object() && doc->contains("metric")) {
    return checked(io::decode_metric((*doc)["metric"]));
  }
  throw InputError("no metric given (use --metric FILE or --builtin NAME)");
}

FiniteMetricSpace positional_space(const Global& g, const std::string& arg) {
  if (!arg.empty()) return checked(io::decode_metric(load_json(arg)));
  return context_space(g, nullptr);
}

Rational option_rational(const std::string& text, const char* name) {
  try {
    return parse_rational(text);
  } catch (const InputError& e) {
    throw InputError(std::string("--") + name + ": " + e.what());
  }
}

std::vector<Rational> rational_list(const std::string& text, const char* name) {
  std::vector<Rational> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) out.push_back(option_rational(item, name));
  return out;
}

Json start_report(const std::string& command, Json inputs) {
  Json r;
  r["command"] = command;
  r["inputs_hash"] = io::hash_hex(inputs);
  r["inputs"] = std::move(inputs);
  return r;
}

void set_verdict(Outcome& o, bool holds) {
  o.report["verdict"] = holds ? "holds" : "refuted";
  o.code = holds ? kHolds : kRefuted;
}

std::string pair_label(const FiniteMetricSpace& space, PointId a, PointId b) {
  return to_string(space, OrderedPair{a, b});
}

std::string function_text(const FiniteMetricSpace& space, const LipschitzFunction& f) {
  std::string out;
  for (auto p : space.points()) {
    if (!out.empty()) out += " ";
    out += space.label(p) + "=" + to_string(f(p));
  }
  return out;
}

void attach_proof(Outcome& o, const Global& g, const Derivation& d) {
  if (!g.emit_proof) return;
  o.report["proof"] = io::encode(d);
  o.text.push_back("proof (" + std::to_string(d.lines.size()) + " replayed inequalities):");
  for (const auto& l : d.lines) {
    o.text.push_back("  " + l.statement + ": " + to_string(l.lhs) + (l.strict ? " < " : " <= ") +
                     to_string(l.rhs) + (l.holds() ? "" : "  FAILED"));
  }
}

Derivation cm_derivation(const FiniteMetricSpace& space, const PairSet& pairs, const Gamma& gamma,
                         const CmVerdict& verdict) {
  Derivation d;
  if (const auto* c = std::get_if<CmCertificate>(&verdict)) {
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      for (std::size_t j = 0; j < pairs.size(); ++j) {
        if (i == j) continue;
        d.lines.push_back({"alpha" + to_string(space, pairs[i]) + " <= alpha" + to_string(space, pairs[j]) +
                               " + beta",
                           c->potentials.at(i), c->potentials.at(j) + beta(space, pairs, gamma, i, j), false});
      }
    }
    return d;
  }
  const auto& v = std::get<CmViolation>(verdict);
  Rational sum = 0;
  for (std::size_t t = 0; t < v.cycle.size(); ++t) {
    sum += beta(space, pairs, gamma, v.cycle[t], v.cycle[(t + 1) % v.cycle.size()]);
  }
  d.lines.push_back({"cycle beta-sum is negative", sum, Rational(0), true});
  d.lines.push_back({"cycle beta-sum equals the deficit", sum, v.deficit, false});
  d.lines.push_back({"cycle beta-sum equals the deficit", v.deficit, sum, false});
  return d;
}

std::string cycle_text(const FiniteMetricSpace& space, const PairSet& pairs, const CmViolation& v) {
  std::string out;
  for (auto i : v.cycle) out += (out.empty() ? "" : " -> ") + to_string(space, pairs[i]);
  return out + " (beta-sum " + to_string(v.deficit) + ")";
}

Json sparse(const std::vector<Rational>& values) {
  Json out = Json::object();
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] != 0) out[std::to_string(i)] = encode(values[i]);
  }
  return out;
}

std::vector<Rational> dense(const Json& j, std::size_t size) {
  if (!j.is_object()) throw InputError("multipliers must be an object keyed by row");
  std::vector<Rational> out(size);
  for (const auto& [key, value] : j.items()) {
    const std::size_t i = std::stoul(key);
    if (i >= size) throw InputError("multiplier row out of range");
    out[i] = io::decode_rational(value);
  }
  return out;
}

// y >= 0 with y^T A == objective proves max objective . x <= bounds . y.
bool dual_bound(const LinearProgram& lp, const std::vector<Rational>& y, const Rational& value) {
  if (y.size() != lp.num_constraints()) return false;
  std::vector<Rational> combo(lp.num_vars);
  Rational bound = 0;
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (y[i] < 0) return false;
    if (y[i] == 0) continue;
    for (std::size_t k = 0; k < lp.num_vars; ++k) combo[k] += y[i] * lp.rows[i][k];
    bound += y[i] * lp.bounds[i];
  }
  return combo == lp.objective && bound == value;
}

// The product is written unreduced, e.g. (13/14)(7/2) = 91/28.
std::string ltp_inequality(const LtpViolation& v) {
  const mpz_class num = v.factor.get_num() * v.spread.get_num();
  const mpz_class den = v.factor.get_den() * v.spread.get_den();
  const std::string product = den == 1 ? num.get_str() : num.get_str() + "/" + den.get_str();
  return "(" + to_string(v.factor) + ")(" + to_string(v.spread) + ") = " + product + " > " + to_string(v.rhs);
}

// ---- commands ------------------------------------------------------------

Outcome cmd_validate(const FiniteMetricSpace& space) {
  Outcome o{start_report("validate", Json{{"metric", encode(space)}})};
  const ValidationReport report = validate_metric(space);
  set_verdict(o, report.ok());
  Json result{{"points", space.size()}};
  if (report.ok()) {
    o.text.push_back("metric OK: " + std::to_string(space.size()) + " points, base " + space.label(space.base()));
  } else {
    static const char* kinds[] = {"nonzero-diagonal", "asymmetric", "non-positive", "triangle"};
    const auto& v = *report.violation;
    result["violation"] = Json{{"kind", kinds[static_cast<int>(v.kind)]},
                               {"points", Json::array({space.label(v.p), space.label(v.q), space.label(v.r)})},
                               {"message", describe(space, v)}};
    o.text.push_back("metric invalid: " + describe(space, v));
  }
  o.report["result"] = std::move(result);
  return o;
}

Json cm_inputs(const FiniteMetricSpace& space, const PairSet& pairs, const Gamma& gamma) {
  return Json{{"metric", encode(space)}, {"pairs", encode(space, pairs)["pairs"]}, {"gamma", encode(gamma.value())}};
}

Outcome cmd_check_cm(const Global& g, const FiniteMetricSpace& space, const PairSet& pairs, const Gamma& gamma) {
  Outcome o{start_report("check-cm", cm_inputs(space, pairs, gamma))};
  const CmVerdict verdict = check_gamma_cm(space, pairs, gamma);
  set_verdict(o, is_certified(verdict));
  o.report["result"] = io::encode(space, pairs, verdict);
  if (const auto* v = std::get_if<CmViolation>(&verdict)) {
    o.text.push_back("not " + to_string(gamma.value()) + "-cyclically monotonic: cycle " + cycle_text(space, pairs, *v));
  } else {
    const auto& c = std::get<CmCertificate>(verdict);
    o.text.push_back(to_string(gamma.value()) + "-cyclically monotonic; potentials:");
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      o.text.push_back("  " + to_string(space, pairs[i]) + " " + to_string(c.potentials[i]));
    }
  }
  attach_proof(o, g, cm_derivation(space, pairs, gamma, verdict));
  return o;
}

Derivation witness_derivation(const FiniteMetricSpace& space, const PairSet& pairs, const Gamma& gamma,
                              const LipschitzFunction& f) {
  Derivation d;
  d.lines.push_back({"||f|| <= 1", lip_norm(space, f), Rational(1), false});
  d.lines.push_back({"f(base) = 0", f(space.base()), Rational(0), false});
  for (const auto& p : pairs) {
    d.lines.push_back({"gamma <= slope(f, " + to_string(space, p) + ")", gamma.value(), slope(space, f, p), false});
  }
  return d;
}

Outcome cmd_witness(const Global& g, const FiniteMetricSpace& space, const PairSet& pairs, const Gamma& gamma) {
  Outcome o{start_report("witness", cm_inputs(space, pairs, gamma))};
  const CmVerdict verdict = check_gamma_cm(space, pairs, gamma);
  set_verdict(o, is_certified(verdict));
  Json result{{"cm", io::encode(space, pairs, verdict)}};
  if (const auto* c = std::get_if<CmCertificate>(&verdict)) {
    const LipschitzFunction f = synthesize_witness(space, pairs, gamma, *c);
    result["function"] = encode(space, f)["values"];
    o.text.push_back("witness: " + function_text(space, f));
    attach_proof(o, g, witness_derivation(space, pairs, gamma, f));
  } else {
    o.text.push_back("no witness: cycle " + cycle_text(space, pairs, std::get<CmViolation>(verdict)));
  }
  o.report["result"] = std::move(result);
  return o;
}

Json measure_inputs(const FiniteMetricSpace& space, const PairMeasure& mu) {
  return Json{{"metric", encode(space)}, {"measure", encode(space, mu)["atoms"]}};
}

Derivation norm_derivation(const FiniteMetricSpace& space, const PairMeasure& mu, const Rational& norm,
                           const LipschitzFunction& maximizer, const PairMeasure& representative) {
  Derivation d;
  const Rational value = apply(space, mu, maximizer);
  d.lines.push_back({"||f|| <= 1", lip_norm(space, maximizer), Rational(1), false});
  d.lines.push_back({"norm <= mu(f)", norm, value, false});
  d.lines.push_back({"representative is positive", Rational(representative.is_positive() ? 0 : 1), Rational(0), false});
  const bool same = functional_coefficients(space, representative) == functional_coefficients(space, mu);
  d.lines.push_back({"representative induces the same functional", Rational(same ? 0 : 1), Rational(0), false});
  d.lines.push_back({"mass(representative) <= norm", representative.total_mass(), norm, false});
  return d;
}

Json norm_json(const FiniteMetricSpace& space, const DualNormResult& r) {
  return Json{{"norm", encode(r.norm)},
              {"maximizer", encode(space, r.maximizer)["values"]},
              {"representative", encode(space, r.representative)["atoms"]}};
}

Outcome cmd_norm(const Global& g, const FiniteMetricSpace& space, const PairMeasure& mu) {
  Outcome o{start_report("norm", measure_inputs(space, mu))};
  const DualNormResult r = dual_norm(space, mu);
  set_verdict(o, true);
  o.report["result"] = norm_json(space, r);
  o.text.push_back("norm " + to_string(r.norm));
  o.text.push_back("maximizer: " + function_text(space, r.maximizer));
  attach_proof(o, g, norm_derivation(space, mu, r.norm, r.maximizer, r.representative));
  return o;
}

Outcome cmd_optimal(const Global& g, const FiniteMetricSpace& space, const PairMeasure& mu) {
  Outcome o{start_report("optimal", measure_inputs(space, mu))};
  const OptimalityVerdict v = is_optimal(space, mu);
  const DualNormResult r = dual_norm(space, mu);
  set_verdict(o, v.optimal);
  Json result{{"optimal", v.optimal},
              {"support", encode(space, v.support)["pairs"]},
              {"mass", encode(v.mass)},
              {"dual_norm", encode(v.dual_norm)},
              {"gap", encode(v.gap)},
              {"norm_certificate", norm_json(space, r)}};
  Derivation d;
  if (v.certificate) {
    result["cm"] = io::encode(space, v.support, CmVerdict(*v.certificate));
    d = cm_derivation(space, v.support, Gamma::one(), *v.certificate);
    o.text.push_back("optimal: support is cyclically monotonic, norm " + to_string(v.dual_norm));
  } else {
    result["cm"] = io::encode(space, v.support, CmVerdict(*v.violation));
    d = cm_derivation(space, v.support, Gamma::one(), *v.violation);
    o.text.push_back("not optimal: cycle " + cycle_text(space, v.support, *v.violation));
    o.text.push_back("mass " + to_string(v.mass) + ", dual norm " + to_string(v.dual_norm) + ", gap " +
                     to_string(v.gap));
  }
  for (auto& l : norm_derivation(space, mu, r.norm, r.maximizer, r.representative).lines) d.lines.push_back(l);
  attach_proof(o, g, d);
  o.report["result"] = std::move(result);
  return o;
}

Outcome cmd_positivize(const Global& g, const FiniteMetricSpace& space, const PairMeasure& nu) {
  Outcome o{start_report("positivize", measure_inputs(space, nu))};
  const PairMeasure mu = positivize(nu);
  set_verdict(o, true);
  o.report["result"] = Json{{"measure", encode(space, mu)["atoms"]}, {"total_variation", encode(mu.total_variation())}};
  for (const auto& [p, w] : mu.atoms()) o.text.push_back(to_string(space, p) + " " + to_string(w));
  Derivation d;
  d.lines.push_back({"result is positive", Rational(mu.is_positive() ? 0 : 1), Rational(0), false});
  d.lines.push_back({"|mu| <= |nu|", mu.total_variation(), nu.total_variation(), false});
  d.lines.push_back({"|nu| <= |mu|", nu.total_variation(), mu.total_variation(), false});
  const bool same = functional_coefficients(space, mu) == functional_coefficients(space, nu);
  d.lines.push_back({"same functional", Rational(same ? 0 : 1), Rational(0), false});
  attach_proof(o, g, d);
  return o;
}

Json slice_json(const FiniteMetricSpace& space, const SliceDiameter& s, bool with_bounds) {
  Json out{{"value", encode(s.value)},
           {"u", space.label(s.u)},
           {"v", space.label(s.v)},
           {"f", encode(space, s.f)["values"]},
           {"g", encode(space, s.g)["values"]},
           {"exhaustive", s.exhaustive}};
  if (with_bounds) {
    Json evaluated = Json::array();
    for (const auto& b : s.evaluated) {
      evaluated.push_back(Json{{"u", space.label(b.u)},
                               {"v", space.label(b.v)},
                               {"forward", encode(b.forward)},
                               {"backward", encode(b.backward)},
                               {"forward_multipliers", sparse(b.forward_multipliers)},
                               {"backward_multipliers", sparse(b.backward_multipliers)}});
    }
    out["evaluated"] = std::move(evaluated);
  }
  return out;
}

Derivation slice_lower_derivation(const FiniteMetricSpace& space, const PairMeasure& mu, const Rational& alpha,
                                  const Json& s) {
  Derivation d;
  const LipschitzFunction f = io::decode_function(space, Json{{"values", s.at("f")}});
  const LipschitzFunction g = io::decode_function(space, Json{{"values", s.at("g")}});
  const PointId u = space.at(s.at("u").get<std::string>());
  const PointId v = space.at(s.at("v").get<std::string>());
  const Rational value = io::decode_rational(s.at("value"));
  d.lines.push_back({"||f|| <= 1", lip_norm(space, f), Rational(1), false});
  d.lines.push_back({"||g|| <= 1", lip_norm(space, g), Rational(1), false});
  d.lines.push_back({"1 - alpha <= mu(f)", 1 - alpha, apply(space, mu, f), false});
  d.lines.push_back({"1 - alpha <= mu(g)", 1 - alpha, apply(space, mu, g), false});
  d.lines.push_back({"value <= (f - g)(m_{u,v})", value,
                     slope(space, f, OrderedPair{u, v}) - slope(space, g, OrderedPair{u, v}), false});
  return d;
}

Outcome cmd_slice(const Global& g, const FiniteMetricSpace& space, const PairMeasure& input, const Rational& alpha,
                  bool auto_normalize) {
  PairMeasure mu = input;
  if (auto_normalize) mu = normalize(space, input);
  Json inputs = measure_inputs(space, input);
  inputs["alpha"] = encode(alpha);
  inputs["auto_normalize"] = auto_normalize;
  Outcome o{start_report("slice-diam", std::move(inputs))};
  SliceOptions options;
  options.jobs = g.jobs;
  const SliceDiameter s = slice_diameter(space, mu, alpha, options);
  set_verdict(o, true);
  Json result = slice_json(space, s, true);
  result["measure_used"] = encode(space, mu)["atoms"];
  o.text.push_back("supremal diameter " + to_string(s.value) + " across " + pair_label(space, s.u, s.v) +
                   (s.exhaustive ? "" : " (scan stopped at the maximum 2)"));
  o.text.push_back("f: " + function_text(space, s.f));
  o.text.push_back("g: " + function_text(space, s.g));
  attach_proof(o, g, slice_lower_derivation(space, mu, alpha, result));
  o.report["result"] = std::move(result);
  return o;
}

Json ltp_json(const FiniteMetricSpace& space, const LipLtpOutcome& r) {
  Json violations = Json::array();
  for (const auto& v : r.violations) {
    Json row = io::encode(space, v);
    row["inequality"] = ltp_inequality(v);
    violations.push_back(std::move(row));
  }
  Json out{{"absent", !r.witness.has_value()}, {"violations", std::move(violations)}};
  if (r.witness) out["witness"] = Json{{"u", space.label(r.witness->first)}, {"v", space.label(r.witness->second)}};
  return out;
}

void ltp_text(const FiniteMetricSpace& space, const LipLtpOutcome& r, std::vector<std::string>& text) {
  for (const auto& v : r.violations) {
    text.push_back("  " + pair_label(space, v.u, v.v) + " fails at x=" + space.label(v.x) + " y=" + space.label(v.y) +
                   ": " + ltp_inequality(v));
  }
  if (r.witness) {
    text.push_back("witness (u,v) = " + pair_label(space, r.witness->first, r.witness->second));
  } else {
    text.push_back("ABSENT: all " + std::to_string(r.violations.size()) + " candidates violated");
  }
}

Derivation ltp_witness_derivation(const FiniteMetricSpace& space, const std::set<PointId>& subset,
                                  const Rational& eps, const LipschitzFunction& f, PointId u, PointId v) {
  Derivation d;
  d.lines.push_back({"u != v", Rational(0), Rational(u == v ? 0 : 1), true});
  d.lines.push_back({"||f|| <= 1", lip_norm(space, f), Rational(1), false});
  for (auto x : subset) {
    for (auto y : subset) {
      d.lines.push_back({"(1-eps)(|f(" + space.label(x) + ")-f(" + space.label(y) + ")| + d(u,v)) <= d(" +
                             space.label(x) + ",u) + d(" + space.label(y) + ",v)",
                         (1 - eps) * (abs(f(x) - f(y)) + space.distance(u, v)),
                         space.distance(x, u) + space.distance(y, v), false});
    }
  }
  return d;
}

Derivation ltp_absent_derivation(const FiniteMetricSpace& space, const std::set<PointId>& subset,
                                 const Rational& eps, const LipschitzFunction& f,
                                 const std::vector<LtpViolation>& violations) {
  Derivation d;
  std::set<OrderedPair> covered;
  for (const auto& v : violations) {
    covered.insert(OrderedPair{v.u, v.v});
    for (auto& l : replay_lip_ltp_violation(space, subset, eps, f, v).lines) {
      l.statement = pair_label(space, v.u, v.v) + ": " + l.statement;
      d.lines.push_back(std::move(l));
    }
  }
  const Rational candidates(static_cast<long>(space.size() * (space.size() - 1)));
  d.lines.push_back({"every ordered (u,v) is refuted", candidates, Rational(static_cast<long>(covered.size())), false});
  return d;
}

Outcome cmd_lip_ltp(const Global& g, const FiniteMetricSpace& space, const std::set<PointId>& subset,
                    const Rational& eps, const LipschitzFunction& f) {
  Json inputs{{"metric", encode(space)},
              {"subset", io::encode_points(space, subset)["points"]},
              {"eps", encode(eps)},
              {"function", encode(space, f)["values"]}};
  Outcome o{start_report("lip-ltp", std::move(inputs))};
  const LipLtpOutcome r = lip_ltp_witness(space, subset, eps, f);
  set_verdict(o, r.witness.has_value());
  o.report["result"] = ltp_json(space, r);
  ltp_text(space, r, o.text);
  attach_proof(o, g,
               r.witness ? ltp_witness_derivation(space, subset, eps, f, r.witness->first, r.witness->second)
                         : ltp_absent_derivation(space, subset, eps, f, r.violations));
  return o;
}

Outcome cmd_two_lip_ltp(const Global& g, const FiniteMetricSpace& space, const PairSet& pairs, const Rational& eps) {
  Json inputs{{"metric", encode(space)}, {"pairs", encode(space, pairs)["pairs"]}, {"eps", encode(eps)}};
  Outcome o{start_report("two-lip-ltp", std::move(inputs))};
  SearchOptions options;
  options.jobs = g.jobs;
  const TwoLipLtpOutcome r = two_lip_ltp_witness(space, pairs, eps, options);
  set_verdict(o, r.witness.has_value());
  Json result{{"absent", !r.witness.has_value()}, {"log", io::encode(r.log)}};
  if (r.witness) {
    result["witness"] = io::encode(space, *r.witness);
    o.text.push_back("witness (u,v) = " + pair_label(space, r.witness->u, r.witness->v));
    o.text.push_back("f: " + function_text(space, r.witness->f));
    o.text.push_back("g: " + function_text(space, r.witness->g));
    attach_proof(o, g, replay_two_lip_ltp(space, pairs, eps, *r.witness));
  } else {
    for (const auto& e : r.log) o.text.push_back("  " + e.candidate + ": " + e.outcome);
    o.text.push_back("ABSENT: no (u,v) certifies both augmented sets");
  }
  o.report["result"] = std::move(result);
  return o;
}

Outcome cmd_ld2p(const Global& g, const FiniteMetricSpace& space, const PairMeasure& mu, const Gamma& gamma) {
  Json inputs = measure_inputs(space, mu);
  inputs["gamma"] = encode(gamma.value());
  Outcome o{start_report("ld2p-cert", std::move(inputs))};
  SearchOptions options;
  options.jobs = g.jobs;
  const Ld2pOutcome r = ld2p_certificate(space, mu, gamma, options);
  set_verdict(o, r.certificate.has_value());
  Json result{{"absent", !r.certificate.has_value()}, {"log", io::encode(r.log)}};
  if (r.certificate) {
    const auto& c = *r.certificate;
    result["certificate"] = io::encode(space, c);
    o.text.push_back("certificate via " + c.route + " route: A = " + io::encode(space, c.pairs)["pairs"].dump() +
                     ", (u,v) = " + pair_label(space, c.u, c.v));
    o.text.push_back("f: " + function_text(space, c.f));
    o.text.push_back("g: " + function_text(space, c.g));
    attach_proof(o, g, replay_ld2p(space, c));
  } else {
    for (const auto& e : r.log) o.text.push_back("  " + e.candidate + ": " + e.outcome);
    o.text.push_back("ABSENT at this finite space");
  }
  o.report["result"] = std::move(result);
  return o;
}

Outcome cmd_sd2p(const Global& g, const FiniteMetricSpace& space, const std::vector<PairMeasure>& measures,
                 const Gamma& gamma, const std::vector<Rational>& lambdas) {
  Json list = Json::array();
  for (const auto& mu : measures) list.push_back(encode(space, mu)["atoms"]);
  Json lam = Json::array();
  for (const auto& l : lambdas) lam.push_back(encode(l));
  Json inputs{{"metric", encode(space)}, {"measures", std::move(list)}, {"gamma", encode(gamma.value())},
              {"lambdas", std::move(lam)}};
  Outcome o{start_report("sd2p-cert", std::move(inputs))};
  SearchOptions options;
  options.jobs = g.jobs;
  const Sd2pOutcome r = sd2p_certificate(space, measures, gamma, lambdas, options);
  set_verdict(o, r.certificate.has_value());
  Json result{{"absent", !r.certificate.has_value()}, {"log", io::encode(r.log)}};
  if (r.certificate) {
    result["certificate"] = io::encode(space, *r.certificate);
    o.text.push_back("common (u,v) = " + pair_label(space, r.certificate->u, r.certificate->v) + " for " +
                     std::to_string(measures.size()) + " measures, alpha = " + to_string(r.certificate->alpha));
    attach_proof(o, g, replay_sd2p(space, *r.certificate));
  } else {
    for (const auto& e : r.log) o.text.push_back("  " + e.candidate + ": " + e.outcome);
    o.text.push_back("ABSENT at this finite space");
  }
  o.report["result"] = std::move(result);
  return o;
}

Derivation prune_derivation(const FiniteMetricSpace& space, const PairSet& pairs, const PairMeasure& mu,
                            const Gamma& gamma, int bound, const PairSet& kept, const CmCertificate& cert,
                            bool vacuous) {
  Derivation d = cm_derivation(space, kept, Gamma::one(), cert);
  bool subset = true;
  for (const auto& p : kept) subset = subset && pairs.contains(p);
  d.lines.push_back({"B is a subset of A", Rational(subset ? 0 : 1), Rational(0), false});
  if (!vacuous) {
    d.lines.push_back({"mu(A) - 2n(1-gamma) mu(M~) <= mu(B)",
                       mu.mass(pairs) - 2 * bound * (1 - gamma.value()) * mu.total_mass(), mu.mass(kept), false});
  }
  return d;
}

Outcome cmd_prune(const Global& g, const FiniteMetricSpace& space, const PairSet& pairs, const PairMeasure& mu,
                  const Gamma& gamma, int bound) {
  Json inputs = measure_inputs(space, mu);
  inputs["pairs"] = encode(space, pairs)["pairs"];
  inputs["gamma"] = encode(gamma.value());
  inputs["bound"] = bound;
  Outcome o{start_report("prune-cm", std::move(inputs))};
  const PruneResult r = prune_to_cm(space, pairs, mu, gamma, bound);
  set_verdict(o, true);
  Json result{{"kept", encode(space, r.kept)["pairs"]},
              {"potentials", io::encode(space, r.kept, CmVerdict(r.certificate))["potentials"]},
              {"buckets", r.buckets},
              {"dropped_mass", encode(r.dropped_mass)},
              {"bound_vacuous", r.bound_vacuous},
              {"mass_kept", encode(mu.mass(r.kept))},
              {"mass_floor", encode(mu.mass(pairs) - 2 * bound * (1 - gamma.value()) * mu.total_mass())}};
  if (r.dropped_bucket) result["dropped_bucket"] = *r.dropped_bucket;
  o.text.push_back("kept " + std::to_string(r.kept.size()) + " of " + std::to_string(pairs.size()) + " pairs, mass " +
                   to_string(mu.mass(r.kept)));
  if (r.bound_vacuous) o.text.push_back("warning: n(1-gamma) >= 1, mass bound is vacuous (greedy subset)");
  attach_proof(o, g, prune_derivation(space, pairs, mu, gamma, bound, r.kept, r.certificate, r.bound_vacuous));
  o.report["result"] = std::move(result);
  return o;
}

struct Example52Options {
  int levels = 1;
  std::string part = "all";
  std::vector<Rational> gammas{Rational(1, 2), Rational(9, 10)};
  std::size_t battery = 20;
  std::uint64_t seed = 52;
  bool slice = true;
  bool neighborhood = false;
};

Rational slice_alpha(const Rational& gamma) { return 2 * (1 - gamma * gamma); }

Outcome cmd_example52(const Global& g, const Example52Options& opt) {
  const FiniteMetricSpace space = build_example52(opt.levels);
  Json gammas = Json::array();
  for (const auto& x : opt.gammas) gammas.push_back(encode(x));
  Json inputs{{"levels", opt.levels}, {"part", opt.part}, {"gammas", std::move(gammas)},
              {"battery", opt.battery}, {"seed", opt.seed}, {"slice", opt.slice},
              {"neighborhood", opt.neighborhood}};
  Outcome o{start_report("example52", std::move(inputs))};
  Json result = Json::object();
  bool reproduced = true;
  Derivation proof;

  if (opt.part == "w-d2p" || opt.part == "all") {
    const auto subset = example52::core_points(space);
    const auto f = example52::fixture_function(space);
    const Rational eps = example52::fixture_eps();
    const LipLtpOutcome r = lip_ltp_witness(space, subset, eps, f);
    Json part = ltp_json(space, r);
    part["subset"] = io::encode_points(space, subset)["points"];
    part["eps"] = encode(eps);
    part["function"] = encode(space, f)["values"];
    o.text.push_back("w*-D2P half (J=" + std::to_string(opt.levels) + ", eps=" + to_string(eps) + "):");
    ltp_text(space, r, o.text);
    reproduced = reproduced && !r.witness;
    if (!r.witness) {
      for (auto& l : ltp_absent_derivation(space, subset, eps, f, r.violations).lines) proof.lines.push_back(l);
    }
    if (opt.neighborhood) {
      // r = 1, R = 2: weak-star neighborhood of f on N-pairs with delta = eps/4
      const Rational delta = eps / 4;
      const NeighborhoodDiameter nd = weak_star_neighborhood_diameter(space, subset, f, delta, g.jobs);
      const Rational ceiling = 2 - eps / 2;
      part["neighborhood"] = Json{{"delta", encode(delta)},
                                  {"diameter", encode(nd.value)},
                                  {"u", space.label(nd.u)},
                                  {"v", space.label(nd.v)},
                                  {"ceiling", encode(ceiling)},
                                  {"below_ceiling", nd.value < ceiling}};
      o.text.push_back("weak-star neighborhood (delta=" + to_string(delta) + ") diameter " + to_string(nd.value) +
                       (nd.value < ceiling ? " < " : " >= ") + to_string(ceiling));
      reproduced = reproduced && nd.value < ceiling;
    }
    result["w_d2p"] = std::move(part);
  }

  if (opt.part == "ld2p" || opt.part == "all") {
    std::vector<std::pair<std::string, PairMeasure>> battery;
    for (auto& mu : example52::unit_atoms(space)) battery.emplace_back("unit-atom", std::move(mu));
    for (auto& mu : example52::random_measures(space, opt.battery, opt.seed)) battery.emplace_back("random", std::move(mu));
    SearchOptions search;
    search.jobs = g.jobs;
    Json cases = Json::array();
    std::size_t certified = 0, slices_met = 0, total = 0;
    for (const auto& [kind, mu] : battery) {
      for (const auto& gamma_value : opt.gammas) {
        ++total;
        const Gamma gamma(gamma_value);
        const Ld2pOutcome r = ld2p_certificate(space, mu, gamma, search);
        Json row{{"kind", kind}, {"measure", encode(space, mu)["atoms"]}, {"gamma", encode(gamma_value)},
                 {"certified", r.certificate.has_value()}};
        std::string line = "  " + kind + " " + encode(space, mu)["atoms"].dump() + " gamma=" + to_string(gamma_value);
        if (r.certificate) {
          ++certified;
          row["certificate"] = io::encode(space, *r.certificate);
          line += ": (u,v)=" + pair_label(space, r.certificate->u, r.certificate->v) + " [" + r.certificate->route + "]";
          if (opt.slice) {
            const Rational alpha = slice_alpha(gamma_value);
            SliceOptions so;
            so.jobs = g.jobs;
            so.hint = std::make_pair(r.certificate->u, r.certificate->v);
            const SliceDiameter s = slice_diameter(space, mu, alpha, so);
            const bool met = s.value >= 2 * gamma_value;
            slices_met += met ? 1 : 0;
            Json sj = slice_json(space, s, false);
            sj["alpha"] = encode(alpha);
            sj["meets_bound"] = met;
            row["slice"] = std::move(sj);
            line += " slice diameter " + to_string(s.value) + (met ? " >= " : " < ") + to_string(2 * gamma_value);
          }
        } else {
          row["log"] = io::encode(r.log);
          line += ": ABSENT";
        }
        cases.push_back(std::move(row));
        o.text.push_back(line);
      }
    }
    const bool all = certified == total && (!opt.slice || slices_met == total);
    reproduced = reproduced && all;
    result["ld2p"] = Json{{"cases", std::move(cases)}, {"total", total}, {"certified", certified},
                          {"slice_bound_met", slices_met}};
    o.text.insert(o.text.end(), "LD2P half: " + std::to_string(certified) + "/" + std::to_string(total) +
                                    " certified" +
                                    (opt.slice ? ", " + std::to_string(slices_met) + " slice bounds met" : ""));
  }
  o.report["result"] = std::move(result);
  o.report["verdict"] = reproduced ? "holds" : "refuted";
  // The w*-D2P half alone is a refutation; the full example is a
  // reproduction of both halves.
  if (opt.part == "w-d2p") {
    o.code = reproduced ? kRefuted : kHolds;
    o.report["verdict"] = reproduced ? "refuted" : "holds";
  } else {
    o.code = reproduced ? kHolds : kRefuted;
  }
  attach_proof(o, g, proof);
  return o;
}

// ---- verify --------------------------------------------------------------

void merge(Derivation& into, Derivation from, const std::string& prefix = "") {
  for (auto& l : from.lines) {
    l.statement = prefix + l.statement;
    into.lines.push_back(std::move(l));
  }
}

Derivation verify_slice(const FiniteMetricSpace& space, const PairMeasure& mu, const Rational& alpha,
                        const Json& result) {
  Derivation d = slice_lower_derivation(space, mu, alpha, result);
  const Rational value = io::decode_rational(result.at("value"));
  Rational best = 0;
  const auto& evaluated = result.at("evaluated");
  for (const auto& b : evaluated) {
    const PointId u = space.at(b.at("u").get<std::string>());
    const PointId v = space.at(b.at("v").get<std::string>());
    const Rational fwd = io::decode_rational(b.at("forward"));
    const Rational bwd = io::decode_rational(b.at("backward"));
    const LinearProgram lp_f = slice_program(space, mu, 1 - alpha, u, v);
    const LinearProgram lp_b = slice_program(space, mu, 1 - alpha, v, u);
    const bool ok = dual_bound(lp_f, dense(b.at("forward_multipliers"), lp_f.num_constraints()), fwd) &&
                    dual_bound(lp_b, dense(b.at("backward_multipliers"), lp_b.num_constraints()), bwd);
    d.lines.push_back({"multipliers bound " + pair_label(space, u, v), Rational(ok ? 0 : 1), Rational(0), false});
    if (fwd + bwd > best) best = fwd + bwd;
  }
  d.lines.push_back({"no evaluated pair exceeds value", best, value, false});
  if (result.at("exhaustive").get<bool>()) {
    const Rational pairs(static_cast<long>(space.size() * (space.size() - 1) / 2));
    d.lines.push_back({"every unordered pair evaluated", pairs, Rational(static_cast<long>(evaluated.size())), false});
  } else {
    d.lines.push_back({"early stop only at the maximum 2", Rational(2), value, false});
  }
  return d;
}

Derivation verify_report(const Json& report) {
  const std::string command = report.at("command").get<std::string>();
  const Json& in = report.at("inputs");
  const Json& result = report.at("result");
  if (io::hash_hex(in) != report.at("inputs_hash").get<std::string>()) {
    throw InputError("inputs_hash does not match the input echo");
  }
  Derivation d;
  if (command == "example52") {
    const FiniteMetricSpace space = build_example52(in.at("levels").get<int>());
    if (result.contains("w_d2p")) {
      const Json& w = result.at("w_d2p");
      const auto subset = example52::core_points(space);
      const auto f = example52::fixture_function(space);
      const Rational eps = example52::fixture_eps();
      if (w.at("absent").get<bool>()) {
        std::vector<LtpViolation> vs;
        for (const auto& v : w.at("violations")) vs.push_back(io::decode_ltp_violation(space, v));
        merge(d, ltp_absent_derivation(space, subset, eps, f, vs), "w*-D2P ");
      } else {
        merge(d, ltp_witness_derivation(space, subset, eps, f, space.at(w.at("witness").at("u").get<std::string>()),
                                        space.at(w.at("witness").at("v").get<std::string>())), "w*-D2P ");
      }
    }
    if (result.contains("ld2p")) {
      for (const auto& row : result.at("ld2p").at("cases")) {
        if (!row.at("certified").get<bool>()) continue;
        const Ld2pCertificate c = io::decode_ld2p(space, row.at("certificate"));
        merge(d, replay_ld2p(space, c), "LD2P ");
        if (row.contains("slice")) {
          const Rational alpha = io::decode_rational(row.at("slice").at("alpha"));
          merge(d, slice_lower_derivation(space, c.measure, alpha, row.at("slice")), "slice ");
          if (row.at("slice").at("meets_bound").get<bool>()) {
            d.lines.push_back({"slice diameter >= 2 gamma", 2 * c.gamma,
                               io::decode_rational(row.at("slice").at("value")), false});
          }
        }
      }
    }
    return d;
  }

  const FiniteMetricSpace space = checked(io::decode_metric(in.at("metric")));
  if (command == "validate") {
    const bool ok = validate_metric(space).ok();
    d.lines.push_back({"validation verdict matches", Rational(ok == !result.contains("violation") ? 0 : 1), Rational(0), false});
  } else if (command == "check-cm" || command == "witness") {
    const PairSet pairs = io::decode_pairs(space, in.at("pairs"));
    const Gamma gamma(io::decode_rational(in.at("gamma")));
    const CmVerdict verdict = io::decode_verdict(command == "witness" ? result.at("cm") : result);
    const bool ok = is_certified(verdict) ? replay_certificate(space, pairs, gamma, std::get<CmCertificate>(verdict))
                                          : replay_violation(space, pairs, gamma, std::get<CmViolation>(verdict));
    d.lines.push_back({"verdict replays", Rational(ok ? 0 : 1), Rational(0), false});
    if (ok) merge(d, cm_derivation(space, pairs, gamma, verdict));
    if (command == "witness" && result.contains("function")) {
      merge(d, witness_derivation(space, pairs, gamma, io::decode_function(space, Json{{"values", result.at("function")}})));
    }
  } else if (command == "norm" || command == "optimal") {
    const PairMeasure mu = io::decode_measure(space, Json{{"atoms", in.at("measure")}});
    const Json& nc = command == "norm" ? result : result.at("norm_certificate");
    merge(d, norm_derivation(space, mu, io::decode_rational(nc.at("norm")),
                             io::decode_function(space, Json{{"values", nc.at("maximizer")}}),
                             io::decode_measure(space, Json{{"atoms", nc.at("representative")}})));
    if (command == "optimal") {
      const PairSet support = mu.support();
      const CmVerdict verdict = io::decode_verdict(result.at("cm"));
      const bool ok = is_certified(verdict) ? replay_certificate(space, support, Gamma::one(), std::get<CmCertificate>(verdict))
                                            : replay_violation(space, support, Gamma::one(), std::get<CmViolation>(verdict));
      d.lines.push_back({"support verdict replays", Rational(ok ? 0 : 1), Rational(0), false});
      const Rational norm = io::decode_rational(nc.at("norm"));
      if (is_certified(verdict)) {
        d.lines.push_back({"optimal: |mu| <= norm", mu.total_variation(), norm, false});
      } else {
        d.lines.push_back({"not optimal: norm < |mu|", norm, mu.total_variation(), true});
      }
    }
  } else if (command == "positivize") {
    const PairMeasure nu = io::decode_measure(space, Json{{"atoms", in.at("measure")}});
    const PairMeasure mu = io::decode_measure(space, Json{{"atoms", result.at("measure")}});
    d.lines.push_back({"result is positive", Rational(mu.is_positive() ? 0 : 1), Rational(0), false});
    d.lines.push_back({"|mu| <= |nu|", mu.total_variation(), nu.total_variation(), false});
    d.lines.push_back({"|nu| <= |mu|", nu.total_variation(), mu.total_variation(), false});
    const bool same = functional_coefficients(space, mu) == functional_coefficients(space, nu);
    d.lines.push_back({"same functional", Rational(same ? 0 : 1), Rational(0), false});
  } else if (command == "slice-diam") {
    const PairMeasure mu = io::decode_measure(space, Json{{"atoms", result.at("measure_used")}});
    merge(d, verify_slice(space, mu, io::decode_rational(in.at("alpha")), result));
  } else if (command == "lip-ltp") {
    const auto subset = io::decode_points(space, in.at("subset"));
    const Rational eps = io::decode_rational(in.at("eps"));
    const auto f = io::decode_function(space, Json{{"values", in.at("function")}});
    if (result.at("absent").get<bool>()) {
      std::vector<LtpViolation> vs;
      for (const auto& v : result.at("violations")) vs.push_back(io::decode_ltp_violation(space, v));
      merge(d, ltp_absent_derivation(space, subset, eps, f, vs));
    } else {
      merge(d, ltp_witness_derivation(space, subset, eps, f, space.at(result.at("witness").at("u").get<std::string>()),
                                      space.at(result.at("witness").at("v").get<std::string>())));
    }
  } else if (command == "two-lip-ltp") {
    if (!result.at("absent").get<bool>()) {
      merge(d, replay_two_lip_ltp(space, io::decode_pairs(space, in.at("pairs")), io::decode_rational(in.at("eps")),
                                  io::decode_two_lip_ltp(space, result.at("witness"))));
    }
  } else if (command == "ld2p-cert") {
    if (!result.at("absent").get<bool>()) {
      const Ld2pCertificate c = io::decode_ld2p(space, result.at("certificate"));
      const PairMeasure mu = io::decode_measure(space, Json{{"atoms", in.at("measure")}});
      d.lines.push_back({"certificate measure matches input", Rational(c.measure == mu ? 0 : 1), Rational(0), false});
      merge(d, replay_ld2p(space, c));
    }
  } else if (command == "sd2p-cert") {
    if (!result.at("absent").get<bool>()) merge(d, replay_sd2p(space, io::decode_sd2p(space, result.at("certificate"))));
  } else if (command == "prune-cm") {
    const PairMeasure mu = io::decode_measure(space, Json{{"atoms", in.at("measure")}});
    const PairSet pairs = io::decode_pairs(space, in.at("pairs"));
    const PairSet kept = io::decode_pairs(space, result.at("kept"));
    const CmVerdict cert = io::decode_verdict(Json{{"kind", "certificate"}, {"potentials", result.at("potentials")}});
    const bool ok = replay_certificate(space, kept, Gamma::one(), std::get<CmCertificate>(cert));
    d.lines.push_back({"kept set potentials replay", Rational(ok ? 0 : 1), Rational(0), false});
    if (ok) {
      merge(d, prune_derivation(space, pairs, mu, Gamma(io::decode_rational(in.at("gamma"))), in.at("bound").get<int>(),
                                kept, std::get<CmCertificate>(cert), result.at("bound_vacuous").get<bool>()));
    }
  } else {
    throw InputError("cannot verify reports of command '" + command + "'");
  }
  return d;
}

Outcome cmd_verify(const Global& g, const std::string& path) {
  const Json report = load_json(path);
  Outcome o{start_report("verify", Json{{"report_hash", io::hash_hex(report.contains("result") ? report["result"] : report)}})};
  Derivation d;
  std::string failure;
  try {
    d = verify_report(report);
  } catch (const InternalError& e) {
    failure = e.what();
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed report: ") + e.what());
  }
  const bool ok = failure.empty() && d.holds();
  set_verdict(o, ok);
  std::size_t failed = 0;
  for (const auto& l : d.lines) failed += l.holds() ? 0 : 1;
  Json result{{"verified", ok}, {"command", report.value("command", "")}, {"lines", d.lines.size()}, {"failed", failed}};
  if (!failure.empty()) result["error"] = failure;
  o.report["result"] = std::move(result);
  o.text.push_back(std::string(ok ? "verified: " : "NOT verified: ") + std::to_string(d.lines.size()) +
                   " inequalities replayed, " + std::to_string(failed) + " failed" +
                   (failure.empty() ? "" : " (" + failure + ")"));
  for (const auto& l : d.lines) {
    if (!l.holds()) o.text.push_back("  failed: " + l.statement);
  }
  Global shown = g;
  attach_proof(o, shown, d);
  return o;
}

std::uint64_t default_seed() {
  if (const char* env = std::getenv("LIPFREE_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw InputError(std::string("LIPFREE_SEED is not an integer: ") + env);
    }
  }
  return 52;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Certificates for cyclic monotonicity, optimal functionals and diameter-two properties"};
  app.name("lipfree");
  app.require_subcommand(1);
  app.fallthrough();

  Global g;
  app.add_option("--format", g.format, "Report format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--builtin", g.builtin, "Builtin metric: example52:J or line:n");
  app.add_option("--metric", g.metric, "Metric JSON for measure-based commands");
  app.add_option("--jobs", g.jobs, "Worker threads (0 = hardware)");
  app.add_flag("--emit-proof", g.emit_proof, "List every replayed inequality");
  app.add_flag("!--no-timing", g.timing, "Omit the timing member");

  std::function<Outcome()> action;
  std::string metric_arg, pairs_arg, measure_arg, gamma_arg, alpha_arg, eps_arg, subset_arg, function_arg,
      lambdas_arg, report_arg;
  std::vector<std::string> measure_args;
  int bound = 0;
  bool auto_normalize = false;
  Example52Options ex;
  std::string gammas_arg;
  std::optional<std::uint64_t> seed_arg;

  auto* validate = app.add_subcommand("validate", "Check the metric axioms");
  validate->add_option("metric", metric_arg, "Metric JSON");
  validate->callback([&] {
    action = [&] {
      if (!metric_arg.empty()) return cmd_validate(io::decode_metric(load_json(metric_arg)));
      if (!g.builtin.empty()) return cmd_validate(build_named(g.builtin));
      throw InputError("no metric given");
    };
  });

  for (const char* name : {"check-cm", "witness"}) {
    auto* sub = app.add_subcommand(name, std::string(name) == "check-cm"
                                             ? "Decide gamma-cyclic monotonicity of a pair set"
                                             : "Synthesize a witness function for a gamma-CM pair set");
    sub->add_option("--gamma", gamma_arg, "gamma in (0, 1]")->required();
    sub->add_option("--pairs", pairs_arg, "Pair set JSON (file or inline)")->required();
    sub->add_option("metric", metric_arg, "Metric JSON");
    const std::string which = name;
    sub->callback([&, which] {
      action = [&, which] {
        const FiniteMetricSpace space = positional_space(g, metric_arg);
        const PairSet pairs = io::decode_pairs(space, load_json(pairs_arg));
        const Gamma gamma(option_rational(gamma_arg, "gamma"));
        return which == "check-cm" ? cmd_check_cm(g, space, pairs, gamma) : cmd_witness(g, space, pairs, gamma);
      };
    });
  }

  for (const char* name : {"norm", "optimal", "positivize"}) {
    auto* sub = app.add_subcommand(name, std::string(name) == "norm"      ? "Exact dual norm of a measure"
                                         : std::string(name) == "optimal" ? "Decide optimality of a positive measure"
                                                                          : "Fold negative atoms onto reflected pairs");
    sub->add_option("measure", measure_arg, "Measure JSON")->required();
    const std::string which = name;
    sub->callback([&, which] {
      action = [&, which] {
        const Json doc = load_json(measure_arg);
        const FiniteMetricSpace space = context_space(g, &doc);
        const PairMeasure mu = io::decode_measure(space, doc);
        if (which == "norm") return cmd_norm(g, space, mu);
        if (which == "optimal") return cmd_optimal(g, space, mu);
        return cmd_positivize(g, space, mu);
      };
    });
  }

  auto* slice = app.add_subcommand("slice-diam", "Supremal diameter of a slice");
  slice->add_option("--alpha", alpha_arg, "alpha in (0, 2]")->required();
  slice->add_flag("--auto-normalize", auto_normalize, "Rescale by the dual norm first");
  slice->add_option("measure", measure_arg, "Measure JSON")->required();
  slice->callback([&] {
    action = [&] {
      const Json doc = load_json(measure_arg);
      const FiniteMetricSpace space = context_space(g, &doc);
      return cmd_slice(g, space, io::decode_measure(space, doc), option_rational(alpha_arg, "alpha"), auto_normalize);
    };
  });

  auto* ltp = app.add_subcommand("lip-ltp", "Search (u,v) for the Lipschitz long-trapezoid inequality");
  ltp->add_option("--eps", eps_arg, "eps in (0, 1)")->required();
  ltp->add_option("--subset", subset_arg, "Point list JSON")->required();
  ltp->add_option("--function", function_arg, "Function JSON")->required();
  ltp->add_option("metric", metric_arg, "Metric JSON");
  ltp->callback([&] {
    action = [&] {
      const FiniteMetricSpace space = positional_space(g, metric_arg);
      return cmd_lip_ltp(g, space, io::decode_points(space, load_json(subset_arg)), option_rational(eps_arg, "eps"),
                         io::decode_function(space, load_json(function_arg)));
    };
  });

  auto* two = app.add_subcommand("two-lip-ltp", "Two-function variant over a cyclically monotonic set");
  two->add_option("--eps", eps_arg, "eps in (0, 1)")->required();
  two->add_option("--pairs", pairs_arg, "Pair set JSON")->required();
  two->add_option("metric", metric_arg, "Metric JSON");
  two->callback([&] {
    action = [&] {
      const FiniteMetricSpace space = positional_space(g, metric_arg);
      return cmd_two_lip_ltp(g, space, io::decode_pairs(space, load_json(pairs_arg)), option_rational(eps_arg, "eps"));
    };
  });

  auto* ld2p = app.add_subcommand("ld2p-cert", "Certificate that a slice has diameter >= 2 gamma");
  ld2p->add_option("--gamma", gamma_arg, "gamma in (0, 1)")->required();
  ld2p->add_option("measure", measure_arg, "Measure JSON")->required();
  ld2p->callback([&] {
    action = [&] {
      const Json doc = load_json(measure_arg);
      const FiniteMetricSpace space = context_space(g, &doc);
      return cmd_ld2p(g, space, io::decode_measure(space, doc), Gamma(option_rational(gamma_arg, "gamma")));
    };
  });

  auto* sd2p = app.add_subcommand("sd2p-cert", "Common (u,v) for a convex combination of slices");
  sd2p->add_option("--gamma", gamma_arg, "gamma in (0, 1)")->required();
  sd2p->add_option("--lambdas", lambdas_arg, "Comma-separated convex weights (default uniform)");
  sd2p->add_option("measures", measure_args, "Measure JSON files")->required();
  sd2p->callback([&] {
    action = [&] {
      std::vector<Json> docs;
      for (const auto& m : measure_args) docs.push_back(load_json(m));
      const FiniteMetricSpace space = context_space(g, &docs.front());
      std::vector<PairMeasure> measures;
      for (const auto& doc : docs) measures.push_back(io::decode_measure(space, doc));
      std::vector<Rational> lambdas = lambdas_arg.empty() ? std::vector<Rational>(measures.size(), Rational(1, measures.size()))
                                                          : rational_list(lambdas_arg, "lambdas");
      return cmd_sd2p(g, space, measures, Gamma(option_rational(gamma_arg, "gamma")), lambdas);
    };
  });

  auto* prune = app.add_subcommand("prune-cm", "Trim a gamma-CM set to a cyclically monotonic subset");
  prune->add_option("--gamma", gamma_arg, "gamma in (0, 1]")->required();
  prune->add_option("--bound", bound, "Largest distance n")->required();
  prune->add_option("--pairs", pairs_arg, "Pair set JSON")->required();
  prune->add_option("measure", measure_arg, "Measure JSON")->required();
  prune->callback([&] {
    action = [&] {
      const Json doc = load_json(measure_arg);
      const FiniteMetricSpace space = context_space(g, &doc);
      return cmd_prune(g, space, io::decode_pairs(space, load_json(pairs_arg)), io::decode_measure(space, doc),
                       Gamma(option_rational(gamma_arg, "gamma")), bound);
    };
  });

  auto* e52 = app.add_subcommand("example52", "Reproduce the separating three-cycle example at finite truncation");
  e52->add_option("--levels", ex.levels, "Number of levels J")->check(CLI::PositiveNumber);
  e52->add_option("--part", ex.part, "Which half")->check(CLI::IsMember({"w-d2p", "ld2p", "all"}));
  e52->add_option("--gammas", gammas_arg, "Comma-separated gammas for the LD2P battery");
  e52->add_option("--battery", ex.battery, "Number of seeded random measures");
  e52->add_option("--seed", seed_arg, "Battery seed (default LIPFREE_SEED or 52)");
  e52->add_flag("!--no-slice", ex.slice, "Skip slice-diameter confirmation");
  e52->add_flag("--neighborhood", ex.neighborhood, "Also bound the weak-star neighborhood diameter");
  e52->callback([&] {
    action = [&] {
      if (!gammas_arg.empty()) ex.gammas = rational_list(gammas_arg, "gammas");
      for (const auto& x : ex.gammas) {
        if (x <= 0 || x >= 1) throw InputError("battery gammas must lie in (0, 1)");
      }
      ex.seed = seed_arg ? *seed_arg : default_seed();
      return cmd_example52(g, ex);
    };
  });

  auto* verify = app.add_subcommand("verify", "Replay a report's certificate without searching");
  verify->add_option("report", report_arg, "Report JSON")->required();
  verify->callback([&] { action = [&] { return cmd_verify(g, report_arg); }; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kHolds;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kHolds;
  } catch (const CLI::ParseError& e) {
    err << "lipfree: " << e.what() << "\n";
    return kError;
  }
  if (g.jobs == 0) g.jobs = std::max(1u, std::thread::hardware_concurrency());

  try {
    const auto start = std::chrono::steady_clock::now();
    Outcome o = action();
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
    if (g.timing) o.report["timing"] = Json{{"seconds", elapsed.count()}, {"jobs", g.jobs}};
    if (g.format == "json") {
      out << o.report.dump(2) << "\n";
    } else {
      out << o.report.value("command", "") << ": " << o.report.value("verdict", "") << "\n";
      for (const auto& line : o.text) out << line << "\n";
      if (g.timing) out << "time " << elapsed.count() << " s\n";
    }
    return o.code;
  } catch (const InputError& e) {
    err << "lipfree: input error: " << e.what() << "\n";
  } catch (const InternalError& e) {
    err << "lipfree: internal error: " << e.what() << "\n";
  } catch (const nlohmann::json::exception& e) {
    err << "lipfree: malformed JSON: " << e.what() << "\n";
  } catch (const std::exception& e) {
    err << "lipfree: error: " << e.what() << "\n";
  }
  return kError;
}

}  // namespace lipfree::cli

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

#include "lipfree/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace lipfree::io {
namespace {

void expect(bool ok, const std::string& what) {
  if (!ok) throw InputError(what);
}

const Json& field(const Json& j, const char* key) {
  expect(j.is_object() && j.contains(key), std::string("missing field \"") + key + "\"");
  return j.at(key);
}

const std::string& text(const Json& j, const char* what) {
  expect(j.is_string(), std::string(what) + " must be a string");
  return j.get_ref<const std::string&>();
}

PointId point(const FiniteMetricSpace& space, const Json& j) { return space.at(text(j, "point label")); }

Json encode_pair(const FiniteMetricSpace& space, PointId a, PointId b) {
  return Json::array({space.label(a), space.label(b)});
}

OrderedPair decode_pair(const FiniteMetricSpace& space, const Json& j) {
  expect(j.is_array() && j.size() == 2, "pair must be a two-element array");
  return OrderedPair{point(space, j[0]), point(space, j[1])};
}

std::vector<Rational> decode_values(const Json& j) {
  expect(j.is_array(), "expected an array of rationals");
  std::vector<Rational> out;
  for (const auto& v : j) out.push_back(decode_rational(v));
  return out;
}

Json encode_cert(const CmCertificate& c) {
  Json potentials = Json::object();
  for (std::size_t i = 0; i < c.potentials.size(); ++i) potentials[std::to_string(i)] = encode(c.potentials[i]);
  return potentials;
}

CmCertificate decode_cert(const Json& j) {
  expect(j.is_object(), "potentials must be an object keyed by pair index");
  CmCertificate c;
  c.potentials.resize(j.size());
  std::vector<bool> seen(j.size(), false);
  for (const auto& [key, value] : j.items()) {
    std::size_t idx = 0;
    try {
      std::size_t used = 0;
      idx = std::stoul(key, &used);
      expect(used == key.size(), "bad potential index " + key);
    } catch (const std::logic_error&) {
      throw InputError("bad potential index " + key);
    }
    expect(idx < seen.size() && !seen[idx], "bad potential index " + key);
    seen[idx] = true;
    c.potentials[idx] = decode_rational(value);
  }
  return c;
}

}  // namespace

Json encode(const Rational& value) { return to_string(value); }

Rational decode_rational(const Json& j) {
  if (j.is_number_integer()) return Rational(j.dump());
  expect(j.is_string(), "rational must be a \"p/q\" string or an integer");
  return parse_rational(j.get_ref<const std::string&>());
}

Json encode(const FiniteMetricSpace& space) {
  Json rows = Json::array();
  for (auto p : space.points()) {
    Json row = Json::array();
    for (auto q : space.points()) row.push_back(encode(space.distance(p, q)));
    rows.push_back(std::move(row));
  }
  return Json{{"points", space.labels()}, {"base", space.label(space.base())}, {"distances", std::move(rows)}};
}

FiniteMetricSpace decode_metric(const Json& j) {
  const Json& points = field(j, "points");
  expect(points.is_array(), "\"points\" must be an array");
  std::vector<std::string> labels;
  for (const auto& p : points) labels.push_back(text(p, "point label"));
  const Json& rows = field(j, "distances");
  expect(rows.is_array(), "\"distances\" must be an array of rows");
  std::vector<std::vector<Rational>> matrix;
  for (const auto& row : rows) matrix.push_back(decode_values(row));
  return FiniteMetricSpace(std::move(labels), text(field(j, "base"), "base"), std::move(matrix));
}

Json encode(const FiniteMetricSpace& space, const LipschitzFunction& f) {
  Json values = Json::object();
  for (auto p : space.points()) values[space.label(p)] = encode(f(p));
  return Json{{"values", std::move(values)}};
}

LipschitzFunction decode_function(const FiniteMetricSpace& space, const Json& j) {
  const Json& values = field(j, "values");
  expect(values.is_object(), "\"values\" must be an object");
  std::vector<std::optional<Rational>> slots(space.size());
  for (const auto& [label, value] : values.items()) {
    auto& slot = slots[space.at(label).index];
    expect(!slot.has_value(), "duplicate value for " + label);
    slot = decode_rational(value);
  }
  std::vector<Rational> out;
  for (auto p : space.points()) {
    expect(slots[p.index].has_value(), "function has no value at " + space.label(p));
    out.push_back(*slots[p.index]);
  }
  return LipschitzFunction(space, std::move(out));
}

Json encode(const FiniteMetricSpace& space, const PairSet& pairs) {
  Json out = Json::array();
  for (const auto& p : pairs) out.push_back(encode_pair(space, p.from, p.to));
  return Json{{"pairs", std::move(out)}};
}

PairSet decode_pairs(const FiniteMetricSpace& space, const Json& j) {
  const Json& list = j.is_array() ? j : field(j, "pairs");
  expect(list.is_array(), "\"pairs\" must be an array");
  PairSet out;
  for (const auto& p : list) {
    expect(out.insert(decode_pair(space, p)), "duplicate pair " + p.dump());
  }
  return out;
}

Json encode(const FiniteMetricSpace& space, const PairMeasure& measure) {
  Json atoms = Json::array();
  for (const auto& [pair, weight] : measure.atoms()) {
    atoms.push_back(Json{{"from", space.label(pair.from)}, {"to", space.label(pair.to)}, {"weight", encode(weight)}});
  }
  return Json{{"atoms", std::move(atoms)}};
}

PairMeasure decode_measure(const FiniteMetricSpace& space, const Json& j) {
  const Json& atoms = field(j, "atoms");
  expect(atoms.is_array(), "\"atoms\" must be an array");
  PairMeasure out;
  for (const auto& a : atoms) {
    out.add(OrderedPair{point(space, field(a, "from")), point(space, field(a, "to"))},
            decode_rational(field(a, "weight")));
  }
  return out;
}

Json encode_points(const FiniteMetricSpace& space, const std::set<PointId>& points) {
  Json out = Json::array();
  for (auto p : points) out.push_back(space.label(p));
  return Json{{"points", std::move(out)}};
}

std::set<PointId> decode_points(const FiniteMetricSpace& space, const Json& j) {
  const Json& list = j.is_array() ? j : field(j, "points");
  expect(list.is_array(), "\"points\" must be an array");
  std::set<PointId> out;
  for (const auto& p : list) out.insert(point(space, p));
  return out;
}

Json encode(const FiniteMetricSpace& space, const PairSet& pairs, const CmVerdict& verdict) {
  if (const auto* c = std::get_if<CmCertificate>(&verdict)) {
    return Json{{"kind", "certificate"}, {"potentials", encode_cert(*c)}};
  }
  const auto& v = std::get<CmViolation>(verdict);
  Json cycle = Json::array();
  Json labelled = Json::array();
  for (auto i : v.cycle) {
    cycle.push_back(i);
    labelled.push_back(encode_pair(space, pairs[i].from, pairs[i].to));
  }
  return Json{{"kind", "violation"}, {"cycle", std::move(cycle)}, {"cycle_pairs", std::move(labelled)},
              {"deficit", encode(v.deficit)}};
}

CmVerdict decode_verdict(const Json& j) {
  const std::string& kind = text(field(j, "kind"), "kind");
  if (kind == "certificate") return decode_cert(field(j, "potentials"));
  expect(kind == "violation", "unknown verdict kind " + kind);
  CmViolation v;
  const Json& cycle = field(j, "cycle");
  expect(cycle.is_array(), "\"cycle\" must be an array");
  for (const auto& i : cycle) {
    expect(i.is_number_unsigned(), "cycle entries must be pair indices");
    v.cycle.push_back(i.get<std::size_t>());
  }
  v.deficit = decode_rational(field(j, "deficit"));
  return v;
}

Json encode(const FiniteMetricSpace& space, const Ld2pCertificate& c) {
  return Json{{"pairs", encode(space, c.pairs)["pairs"]},
              {"f", encode(space, c.f)["values"]},
              {"g", encode(space, c.g)["values"]},
              {"u", space.label(c.u)},
              {"v", space.label(c.v)},
              {"gamma", encode(c.gamma)},
              {"measure", encode(space, c.measure)["atoms"]},
              {"potentials_uv", encode_cert(c.with_uv)},
              {"potentials_vu", encode_cert(c.with_vu)},
              {"route", c.route}};
}

Ld2pCertificate decode_ld2p(const FiniteMetricSpace& space, const Json& j) {
  return Ld2pCertificate{decode_pairs(space, field(j, "pairs")),
                         decode_function(space, Json{{"values", field(j, "f")}}),
                         decode_function(space, Json{{"values", field(j, "g")}}),
                         point(space, field(j, "u")),
                         point(space, field(j, "v")),
                         decode_rational(field(j, "gamma")),
                         decode_measure(space, Json{{"atoms", field(j, "measure")}}),
                         decode_cert(field(j, "potentials_uv")),
                         decode_cert(field(j, "potentials_vu")),
                         j.contains("route") ? text(j["route"], "route") : std::string()};
}

Json encode(const FiniteMetricSpace& space, const Sd2pCertificate& c) {
  Json parts = Json::array();
  for (std::size_t i = 0; i < c.measures.size(); ++i) {
    parts.push_back(Json{{"measure", encode(space, c.measures[i])["atoms"]},
                         {"lambda", encode(c.lambdas[i])},
                         {"pairs", encode(space, c.pairs[i])["pairs"]},
                         {"f", encode(space, c.f[i])["values"]},
                         {"g", encode(space, c.g[i])["values"]},
                         {"potentials_uv", encode_cert(c.with_uv[i])},
                         {"potentials_vu", encode_cert(c.with_vu[i])}});
  }
  return Json{{"u", space.label(c.u)},
              {"v", space.label(c.v)},
              {"gamma", encode(c.gamma)},
              {"alpha", encode(c.alpha)},
              {"parts", std::move(parts)}};
}

Sd2pCertificate decode_sd2p(const FiniteMetricSpace& space, const Json& j) {
  Sd2pCertificate c{{}, {}, {}, {}, {}, {}, {}, point(space, field(j, "u")), point(space, field(j, "v")),
                    decode_rational(field(j, "gamma")), decode_rational(field(j, "alpha"))};
  const Json& parts = field(j, "parts");
  expect(parts.is_array(), "\"parts\" must be an array");
  for (const auto& p : parts) {
    c.measures.push_back(decode_measure(space, Json{{"atoms", field(p, "measure")}}));
    c.lambdas.push_back(decode_rational(field(p, "lambda")));
    c.pairs.push_back(decode_pairs(space, field(p, "pairs")));
    c.f.push_back(decode_function(space, Json{{"values", field(p, "f")}}));
    c.g.push_back(decode_function(space, Json{{"values", field(p, "g")}}));
    c.with_uv.push_back(decode_cert(field(p, "potentials_uv")));
    c.with_vu.push_back(decode_cert(field(p, "potentials_vu")));
  }
  return c;
}

Json encode(const FiniteMetricSpace& space, const TwoLipLtpWitness& w) {
  return Json{{"u", space.label(w.u)},
              {"v", space.label(w.v)},
              {"f", encode(space, w.f)["values"]},
              {"g", encode(space, w.g)["values"]},
              {"potentials_uv", encode_cert(w.with_uv)},
              {"potentials_vu", encode_cert(w.with_vu)}};
}

TwoLipLtpWitness decode_two_lip_ltp(const FiniteMetricSpace& space, const Json& j) {
  return TwoLipLtpWitness{decode_function(space, Json{{"values", field(j, "f")}}),
                          decode_function(space, Json{{"values", field(j, "g")}}),
                          point(space, field(j, "u")),
                          point(space, field(j, "v")),
                          decode_cert(field(j, "potentials_uv")),
                          decode_cert(field(j, "potentials_vu"))};
}

Json encode(const FiniteMetricSpace& space, const LtpViolation& v) {
  return Json{{"u", space.label(v.u)},     {"v", space.label(v.v)},    {"x", space.label(v.x)},
              {"y", space.label(v.y)},     {"factor", encode(v.factor)}, {"spread", encode(v.spread)},
              {"lhs", encode(v.lhs)},      {"rhs", encode(v.rhs)}};
}

LtpViolation decode_ltp_violation(const FiniteMetricSpace& space, const Json& j) {
  return LtpViolation{point(space, field(j, "u")),        point(space, field(j, "v")),
                      point(space, field(j, "x")),        point(space, field(j, "y")),
                      decode_rational(field(j, "factor")), decode_rational(field(j, "spread")),
                      decode_rational(field(j, "lhs")),    decode_rational(field(j, "rhs"))};
}

Json encode(const Derivation& d) {
  Json out = Json::array();
  for (const auto& l : d.lines) {
    out.push_back(Json{{"statement", l.statement},
                       {"lhs", encode(l.lhs)},
                       {"relation", l.strict ? "<" : "<="},
                       {"rhs", encode(l.rhs)},
                       {"holds", l.holds()}});
  }
  return out;
}

Json encode(const std::vector<SearchLogEntry>& log) {
  Json out = Json::array();
  for (const auto& e : log) out.push_back(Json{{"candidate", e.candidate}, {"outcome", e.outcome}});
  return out;
}

Json read_file(const std::string& path) {
  std::ifstream in(path);
  expect(in.good(), "cannot open " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    return Json::parse(buffer.str());
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(path + ": " + e.what());
  }
}

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string hash_hex(const Json& j) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a64(j.dump())));
  return buf;
}

}  // namespace lipfree::io

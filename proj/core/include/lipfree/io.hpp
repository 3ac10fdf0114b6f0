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

#ifndef LIPFREE_IO_HPP_
#define LIPFREE_IO_HPP_

#include <cstdint>
#include <set>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "lipfree/d2p.hpp"
#include "lipfree/functionals.hpp"
#include "lipfree/lipschitz.hpp"
#include "lipfree/measure.hpp"
#include "lipfree/metric.hpp"
#include "lipfree/monotone.hpp"

// JSON encodings. Rationals travel as "p/q" strings (plain integers are also
// accepted on input); points are referenced by label. Decoders throw
// InputError on malformed documents or unknown labels.
namespace lipfree::io {

using Json = nlohmann::ordered_json;

Json encode(const Rational& value);
Rational decode_rational(const Json& j);

// {"points": [...], "base": "...", "distances": [[...], ...]}
Json encode(const FiniteMetricSpace& space);
FiniteMetricSpace decode_metric(const Json& j);

// {"values": {"label": "p/q", ...}}; every point must be present.
Json encode(const FiniteMetricSpace& space, const LipschitzFunction& f);
LipschitzFunction decode_function(const FiniteMetricSpace& space, const Json& j);

// {"pairs": [["a", "b"], ...]}
Json encode(const FiniteMetricSpace& space, const PairSet& pairs);
PairSet decode_pairs(const FiniteMetricSpace& space, const Json& j);

// {"atoms": [{"from": "a", "to": "b", "weight": "p/q"}, ...]}
Json encode(const FiniteMetricSpace& space, const PairMeasure& measure);
PairMeasure decode_measure(const FiniteMetricSpace& space, const Json& j);

// {"points": ["a", ...]} or a bare array of labels.
Json encode_points(const FiniteMetricSpace& space, const std::set<PointId>& points);
std::set<PointId> decode_points(const FiniteMetricSpace& space, const Json& j);

Json encode(const FiniteMetricSpace& space, const PairSet& pairs, const CmVerdict& verdict);
CmVerdict decode_verdict(const Json& j);

Json encode(const FiniteMetricSpace& space, const Ld2pCertificate& c);
Ld2pCertificate decode_ld2p(const FiniteMetricSpace& space, const Json& j);

Json encode(const FiniteMetricSpace& space, const Sd2pCertificate& c);
Sd2pCertificate decode_sd2p(const FiniteMetricSpace& space, const Json& j);

Json encode(const FiniteMetricSpace& space, const TwoLipLtpWitness& w);
TwoLipLtpWitness decode_two_lip_ltp(const FiniteMetricSpace& space, const Json& j);

Json encode(const FiniteMetricSpace& space, const LtpViolation& v);
LtpViolation decode_ltp_violation(const FiniteMetricSpace& space, const Json& j);

Json encode(const Derivation& d);
Json encode(const std::vector<SearchLogEntry>& log);

Json read_file(const std::string& path);

// FNV-1a, 64 bit, rendered as 16 hex digits.
std::uint64_t fnv1a64(std::string_view bytes);
std::string hash_hex(const Json& j);

}  // namespace lipfree::io

#endif  // LIPFREE_IO_HPP_

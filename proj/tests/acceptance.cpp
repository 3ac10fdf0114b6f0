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

// One PASS/FAIL line per acceptance criterion. Exit status is nonzero when
// any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "lipfree/d2p.hpp"
#include "lipfree/example52.hpp"
#include "lipfree/functionals.hpp"
#include "lipfree/io.hpp"
#include "lipfree_cli/cli.hpp"
#include "support/properties.hpp"

namespace {

using lipfree::Rational;
using lipfree::testing::PropertyResult;
using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

char buffer[64];
std::string fmt_seconds(double s) {
  std::snprintf(buffer, sizeof buffer, "%.2f s", s);
  return buffer;
}

PropertyResult example52_w_d2p() {
  PropertyResult r;
  for (int levels : {1, 2, 3}) {
    ++r.cases;
    std::ostringstream out, err;
    const auto start = Clock::now();
    const int code = lipfree::cli::run({"--no-timing", "example52", "--levels", std::to_string(levels), "--part", "w-d2p"},
                                       out, err);
    const double elapsed = seconds_since(start);
    const std::string tag = "J=" + std::to_string(levels) + ": ";
    if (code != lipfree::cli::kRefuted) {
      r.fail(tag + "exit code " + std::to_string(code));
      continue;
    }
    if (levels == 3 && elapsed >= 5.0) r.fail(tag + "took " + fmt_seconds(elapsed));
    const auto report = lipfree::io::Json::parse(out.str());
    const auto& part = report["result"]["w_d2p"];
    const std::size_t points = 6 + 6 * static_cast<std::size_t>(levels);
    if (!part["absent"].get<bool>() || part["violations"].size() != points * (points - 1)) {
      r.fail(tag + "not every (u,v) was refuted");
    }
    bool first = false, second = false;
    for (const auto& v : part["violations"]) {
      const Rational lhs = lipfree::io::decode_rational(v["lhs"]);
      const Rational rhs = lipfree::io::decode_rational(v["rhs"]);
      if (lhs <= rhs) r.fail(tag + "recorded violation does not violate");
      const std::string line = v["inequality"].get<std::string>();
      first = first || (line == "(13/14)(5/2) = 65/28 > 2" && lhs == lipfree::parse_rational("65/28") && rhs == 2);
      second = second || (line == "(13/14)(7/2) = 91/28 > 3" && lhs == lipfree::parse_rational("91/28") && rhs == 3);
    }
    if (!first) r.fail(tag + "missing (13/14)(5/2) = 65/28 > 2");
    if (!second) r.fail(tag + "missing (13/14)(7/2) = 91/28 > 3");
    if (levels == 3) r.detail = "J=1..3 ABSENT with both lines; J=3 in " + fmt_seconds(elapsed);
  }
  return r;
}

PropertyResult example52_ld2p() {
  PropertyResult r;
  const auto start = Clock::now();
  const auto space = lipfree::build_example52(3);
  std::size_t certified = 0, slices = 0;
  for (const auto& mu : lipfree::example52::unit_atoms(space)) {
    for (const Rational gamma : {Rational(1, 2), Rational(9, 10)}) {
      ++r.cases;
      const auto outcome = lipfree::ld2p_certificate(space, mu, lipfree::Gamma(gamma));
      if (!outcome.certificate) {
        r.fail("no certificate for " + lipfree::io::encode(space, mu).dump());
        continue;
      }
      if (!lipfree::replay_ld2p(space, *outcome.certificate).holds()) r.fail("certificate replay failed");
      ++certified;
      // Smallest alpha with gamma^2 >= 1 - alpha / 2.
      const Rational alpha = 2 * (1 - gamma * gamma);
      lipfree::SliceOptions options;
      options.hint = std::make_pair(outcome.certificate->u, outcome.certificate->v);
      const auto slice = lipfree::slice_diameter(space, mu, alpha, options);
      if (slice.value < 2 * gamma) {
        r.fail("slice diameter " + lipfree::to_string(slice.value) + " < " + lipfree::to_string(2 * gamma));
      } else {
        ++slices;
      }
    }
  }
  const double elapsed = seconds_since(start);
  if (elapsed >= 60.0) r.fail("took " + fmt_seconds(elapsed));
  if (r.ok) {
    r.detail = std::to_string(certified) + "/" + std::to_string(r.cases) + " certified, " + std::to_string(slices) +
               " slice bounds met, " + fmt_seconds(elapsed);
  }
  return r;
}

struct Criterion {
  int number;
  std::string name;
  std::function<PropertyResult()> check;
};

}  // namespace

int main() {
  using namespace lipfree::testing;
  const std::vector<Criterion> criteria{
      {1, "example52 w*-D2P half: ABSENT for every (u,v), J in {1,2,3}", example52_w_d2p},
      {2, "example52 LD2P half: unit atoms at J=3, gamma in {1/2, 9/10}", example52_ld2p},
      {3, "gamma-CM checker matches brute-force oracle (1000 instances)",
       [] { return check_cm_oracle_equivalence(1000, 3); }},
      {4, "witness duality on every certified instance", [] { return check_witness_duality(1000, 3); }},
      {5, "optimality iff CM support, LP cross-check (500 measures)", [] { return check_optimality_vs_lp(500, 5); }},
      {6, "positivization preserves functional and total variation (200 x 20)",
       [] { return check_positivize(200, 20, 6); }},
      {7, "integer pruning mass bound (200 instances)", [] { return check_prune_bound(200, 7); }},
      {8, "slice mass bound on LP vertices (100 measures)", [] { return check_slice_mass_bound(100, 8); }},
      {9, "floor rounding keeps integrality, 1-Lipschitz, slope 1 (200 instances)",
       [] { return check_floor_round(200, 9); }},
      {10, "simplex matches vertex enumeration (500 LPs)", [] { return check_lp_vs_vertices(500, 10); }},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = Clock::now();
    PropertyResult result;
    try {
      result = c.check();
    } catch (const std::exception& e) {
      result.fail(std::string("exception: ") + e.what());
    }
    const double elapsed = seconds_since(start);
    failures += result.ok ? 0 : 1;
    std::printf("[%s] criterion %2d: %s | %s (%s)\n", result.ok ? "PASS" : "FAIL", c.number, c.name.c_str(),
                result.detail.c_str(), fmt_seconds(elapsed).c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}

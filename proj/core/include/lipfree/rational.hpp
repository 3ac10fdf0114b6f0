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

#ifndef LIPFREE_RATIONAL_HPP_
#define LIPFREE_RATIONAL_HPP_

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace lipfree {

// Exact arbitrary-precision rational. Every quantity in the library (distances,
// function values, weights, LP data) is one of these; there is no
// floating-point tolerance anywhere.
using Rational = mpq_class;

// Thrown for malformed user input (bad files, unknown labels, parameters out of
// range). Internal soundness failures use InternalError instead.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A replayed inequality failed or two independent routes disagreed. Never
// expected; indicates a bug.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Accepts "p", "-p", "p/q" (q > 0). Result is canonicalized.
Rational parse_rational(std::string_view text);

// "p" when the denominator is 1, otherwise "p/q" in lowest terms.
std::string to_string(const Rational& value);

bool is_integer(const Rational& value);

// Mathematical floor (toward negative infinity).
Rational floor(const Rational& value);

// Fractional part value - floor(value), always in [0, 1).
Rational fractional_part(const Rational& value);

inline Rational abs(const Rational& value) { return value < 0 ? Rational(-value) : value; }

}  // namespace lipfree

#endif  // LIPFREE_RATIONAL_HPP_

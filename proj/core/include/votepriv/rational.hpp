// Copyright 2026 The votepriv Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#ifndef VOTEPRIV_RATIONAL_HPP_
#define VOTEPRIV_RATIONAL_HPP_

#include <gmpxx.h>

#include <string>

namespace votepriv {

// All probabilities and delta values are exact rationals. GMP's mpq keeps
// values in lowest terms with a positive denominator, which is exactly the
// invariant the serialized "num/den" form relies on.
using Rational = mpq_class;
using BigInt = mpz_class;

// Builds num/den in canonical form. Throws std::invalid_argument if den == 0.
Rational make_rational(BigInt num, BigInt den);

// Parses "num/den", a plain integer "num", or a decimal string like "0.6"
// (converted exactly, so "0.6" == 3/5). Throws std::invalid_argument on
// malformed input.
Rational parse_rational(const std::string& text);

// Serializes as "num/den", e.g. "3/8"; integers render as "3/1".
// parse_rational(to_fraction_string(q)) == q bit-exactly.
std::string to_fraction_string(const Rational& q);

double to_double(const Rational& q);

// base^exp for exp >= 0.
BigInt pow_int(const BigInt& base, unsigned long exp);

// Shortest-deterministic rendering used everywhere a double is emitted, so
// identical inputs produce byte-identical output.
std::string format_double(double value);

}  // namespace votepriv

#endif  // VOTEPRIV_RATIONAL_HPP_

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
#include "votepriv/rational.hpp"

#include <cctype>
#include <cstdio>
#include <stdexcept>

namespace votepriv {

Rational make_rational(BigInt num, BigInt den) {
  if (den == 0) {
    throw std::invalid_argument("rational denominator must be nonzero");
  }
  Rational q(std::move(num), std::move(den));
  q.canonicalize();
  return q;
}

namespace {

bool is_integer_token(const std::string& s) {
  if (s.empty()) return false;
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (start == s.size()) return false;
  for (std::size_t i = start; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  if (slash != std::string::npos) {
    const std::string num = text.substr(0, slash);
    const std::string den = text.substr(slash + 1);
    if (!is_integer_token(num) || !is_integer_token(den)) {
      throw std::invalid_argument("malformed rational: " + text);
    }
    return make_rational(BigInt(num), BigInt(den));
  }
  const auto dot = text.find('.');
  if (dot != std::string::npos) {
    const std::string whole = text.substr(0, dot);
    const std::string frac = text.substr(dot + 1);
    if ((!whole.empty() && !is_integer_token(whole)) || frac.empty() ||
        !is_integer_token(frac) || frac[0] == '-' || frac[0] == '+') {
      throw std::invalid_argument("malformed rational: " + text);
    }
    const bool negative = !whole.empty() && whole[0] == '-';
    BigInt whole_part = whole.empty() || whole == "-" || whole == "+"
                            ? BigInt(0)
                            : BigInt(whole);
    if (negative) whole_part = -whole_part;
    BigInt scale = pow_int(10, frac.size());
    BigInt num = whole_part * scale + BigInt(frac);
    if (negative) num = -num;
    return make_rational(num, scale);
  }
  if (!is_integer_token(text)) {
    throw std::invalid_argument("malformed rational: " + text);
  }
  return make_rational(BigInt(text), 1);
}

std::string to_fraction_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

double to_double(const Rational& q) { return q.get_d(); }

BigInt pow_int(const BigInt& base, unsigned long exp) {
  BigInt out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);
  return out;
}

std::string format_double(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return std::string(buf);
}

}  // namespace votepriv

// Copyright 2026 The GCSB Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "gcsb/rational.h"

#include <cctype>

#include "gcsb/errors.h"

namespace gcsb {

std::string ToString(const Rational& input) {
  Rational value = input;
  value.canonicalize();
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

namespace {

bool IsDigits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational ParseRational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  Rational out;
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    std::string_view num = body.substr(0, slash);
    std::string_view den = body.substr(slash + 1);
    if (!IsDigits(num) || !IsDigits(den)) {
      throw SchemaError("malformed rational '" + std::string(text) + "'");
    }
    const Integer d(std::string(den), 10);
    if (d == 0) {
      throw SchemaError("zero denominator in '" + std::string(text) + "'");
    }
    out = Rational(Integer(std::string(num), 10), d);
  } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
    std::string_view whole = body.substr(0, dot);
    std::string_view frac = body.substr(dot + 1);
    if ((!whole.empty() && !IsDigits(whole)) || !IsDigits(frac)) {
      throw SchemaError("malformed decimal '" + std::string(text) + "'");
    }
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    const Integer digits(
        std::string(whole.empty() ? "0" : whole) + std::string(frac), 10);
    out = Rational(digits, scale);
  } else {
    if (!IsDigits(body)) {
      throw SchemaError("malformed rational '" + std::string(text) + "'");
    }
    out = Rational(Integer(std::string(body), 10));
  }
  out.canonicalize();
  return negative ? Rational(-out) : out;
}

Rational ScaleToCoprimeIntegers(std::span<Rational> values) {
  Integer den_lcm = 1;
  Integer num_gcd = 0;
  for (const Rational& v : values) {
    if (v == 0) continue;
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(),
            v.get_den().get_mpz_t());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(),
            v.get_num().get_mpz_t());
  }
  if (num_gcd == 0) return Rational(1);
  // v * lcm(den) / gcd(num) is an integer and the results share no factor.
  Rational factor(den_lcm, num_gcd);
  factor.canonicalize();
  for (Rational& v : values) v *= factor;
  return factor;
}

Integer Binomial(unsigned long n, unsigned long k) {
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

Integer Factorial(unsigned long n) {
  Integer out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

}  // namespace gcsb

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

#ifndef GCSB_RATIONAL_H_
#define GCSB_RATIONAL_H_

#include <gmpxx.h>

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace gcsb {

// Exact rational arithmetic throughout; GMP keeps values canonical.
using Rational = mpq_class;
using Integer = mpz_class;

// num/den in canonical form; mpq_class's two-argument constructor does not
// reduce, and comparisons assume reduced operands.
inline Rational Ratio(const Integer& num, const Integer& den) {
  Rational out(num, den);
  out.canonicalize();
  return out;
}

// Renders "p/q", or "p" when the denominator is 1.
std::string ToString(const Rational& value);

// Parses "p", "p/q", "-p/q" or a finite decimal such as "0.25".
// Throws SchemaError on malformed input or a zero denominator.
Rational ParseRational(std::string_view text);

// Scales `values` by the unique positive factor that turns them into
// coprime integers. All-zero input is returned unchanged. Returns the
// factor that was applied.
Rational ScaleToCoprimeIntegers(std::span<Rational> values);

Integer Binomial(unsigned long n, unsigned long k);
Integer Factorial(unsigned long n);

}  // namespace gcsb

#endif  // GCSB_RATIONAL_H_

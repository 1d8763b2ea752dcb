// Copyright 2026 The RieszLab Authors
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

#ifndef RIESZLAB_SCALAR_H_
#define RIESZLAB_SCALAR_H_

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace rieszlab {

// Exact rational number. mpq_class keeps numerator and denominator coprime
// with a positive denominator once canonicalized; every constructor below
// returns canonical values.
//
// Beware of `auto` with gmpxx: arithmetic yields expression templates that
// hold references to temporaries. Always bind results to `Scalar`.
using Scalar = mpq_class;

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Scalar MakeScalar(std::int64_t numerator, std::int64_t denominator = 1);

// Parses `integer` or `integer/positive-integer`. Throws ParseError.
Scalar ParseScalar(std::string_view text);

// "p/q", or "p" when the denominator is 1.
std::string ToString(const Scalar& value);

// Decimal approximation with 12 significant digits. Not authoritative.
double ToDouble12(const Scalar& value);
std::string ToDecimalString(const Scalar& value);

inline Scalar Abs(const Scalar& value) { return value < 0 ? Scalar(-value) : value; }
inline const Scalar& Min(const Scalar& a, const Scalar& b) { return b < a ? b : a; }
inline const Scalar& Max(const Scalar& a, const Scalar& b) { return a < b ? b : a; }

// floor and ceil of a rational, as arbitrary-precision integers.
mpz_class Floor(const Scalar& value);
mpz_class Ceil(const Scalar& value);

}  // namespace rieszlab

#endif  // RIESZLAB_SCALAR_H_

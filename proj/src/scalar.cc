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

#include "rieszlab/scalar.h"

#include <cctype>
#include <cstdio>
#include <string>

namespace rieszlab {
namespace {

bool AllDigits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Scalar MakeScalar(std::int64_t numerator, std::int64_t denominator) {
  if (denominator == 0) throw std::invalid_argument("zero denominator");
  Scalar q(mpz_class(std::to_string(numerator)),
           mpz_class(std::to_string(denominator)));
  q.canonicalize();
  return q;
}

Scalar ParseScalar(std::string_view text) {
  std::string_view num = text;
  std::string_view den;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
    if (!AllDigits(den)) {
      throw ParseError("bad denominator in '" + std::string(text) + "'");
    }
  }
  std::string_view digits = num;
  if (!digits.empty() && digits.front() == '-') digits.remove_prefix(1);
  if (!AllDigits(digits)) {
    throw ParseError("bad rational '" + std::string(text) + "'");
  }
  mpz_class n(std::string(num), 10);
  mpz_class d = den.empty() ? mpz_class(1) : mpz_class(std::string(den), 10);
  if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  Scalar q(n, d);
  q.canonicalize();
  return q;
}

std::string ToString(const Scalar& value) { return value.get_str(10); }

std::string ToDecimalString(const Scalar& value) {
  // mpf keeps enough precision that rounding to 12 digits is correct even
  // when numerator and denominator overflow a double.
  mpf_class f(value, 128);
  mp_exp_t exp = 0;
  std::string digits = f.get_str(exp, 10, 12);
  std::string out;
  if (digits.empty()) return "0";
  bool negative = digits.front() == '-';
  if (negative) digits.erase(0, 1);
  // Hand the normalized mantissa/exponent to printf for consistent layout.
  std::string sci = std::string(negative ? "-" : "") + "0." + digits + "e" +
                    std::to_string(exp);
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", std::stod(sci));
  return buf;
}

double ToDouble12(const Scalar& value) { return std::stod(ToDecimalString(value)); }

mpz_class Floor(const Scalar& value) {
  mpz_class r;
  mpz_fdiv_q(r.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return r;
}

mpz_class Ceil(const Scalar& value) {
  mpz_class r;
  mpz_cdiv_q(r.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return r;
}

}  // namespace rieszlab

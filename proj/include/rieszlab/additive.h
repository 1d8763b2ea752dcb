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

#ifndef RIESZLAB_ADDITIVE_H_
#define RIESZLAB_ADDITIVE_H_

#include <cstdint>
#include <optional>
#include <string>

#include "rieszlab/integer_set.h"
#include "rieszlab/interval_set.h"
#include "rieszlab/scalar.h"
#include "rieszlab/verdict.h"

namespace rieszlab {

// {start + j*step : 0 <= j < length}.
struct APCover {
  std::int64_t start = 0;
  std::int64_t step = 1;
  std::int64_t length = 1;

  bool Contains(std::int64_t x) const;
  friend bool operator==(const APCover&, const APCover&) = default;
};

// "start + step*[0..length)".
std::string ToString(const APCover& cover);

// Both operands must be nonempty.
IntegerSet IntSumset(const IntegerSet& x, const IntegerSet& y);

// #(X+X) - (2#X - 1), which Cauchy-Davenport makes nonnegative.
std::int64_t CauchyDavenportGap(const IntegerSet& x);

// Smallest rank-one progression containing X: step is the gcd of the
// differences to min X. Requires X nonempty.
APCover MinimalApCover(const IntegerSet& x);

struct FreimanReport {
  std::int64_t size = 0;
  std::int64_t sumset_size = 0;
  std::int64_t threshold = 0;  // 3#X - 3
  bool premise = false;        // #(X+X) < 3#X - 3
  std::optional<APCover> cover;
  std::int64_t bound = 0;      // #(X+X) - #X + 1
  Verdict verdict = Verdict::kInapplicable;
};

// 3k-3 theorem check. Requires #X >= 3.
FreimanReport FreimanCheck(const IntegerSet& x);

// The minimal progression cover when #(X+X) < 3#X - 3, otherwise nothing.
std::optional<APCover> FreimanCover(const IntegerSet& x);

// All n with |A ∩ I_n| >= (1 - delta)|I_n|, I_n = (eps n - eps/2, eps n + eps/2).
// Requires eps > 0 and 0 <= delta < 1/2.
IntegerSet Discretize(const IntervalSet& a, const Scalar& eps,
                      const Scalar& delta);

// If |A+A| < 3|A| then A lies in an interval of length <= |A+A| - |A|;
// the smallest such interval is hull(A).
struct KeystoneReport {
  Scalar measure;
  Scalar sumset_measure;
  bool premise = false;
  Scalar hull_length;
  Scalar bound;  // |A+A| - |A|
  Verdict verdict = Verdict::kInapplicable;
};

KeystoneReport KeystoneCheck(const IntervalSet& a);

}  // namespace rieszlab

#endif  // RIESZLAB_ADDITIVE_H_

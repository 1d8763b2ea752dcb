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

#ifndef RIESZLAB_PIECEWISE_LINEAR_H_
#define RIESZLAB_PIECEWISE_LINEAR_H_

#include <ostream>
#include <string>
#include <vector>

#include "rieszlab/interval_set.h"
#include "rieszlab/scalar.h"

namespace rieszlab {

// Compactly supported continuous piecewise-linear function with rational
// breakpoints x_0 < ... < x_n. Affine between consecutive breakpoints, zero
// outside [x_0, x_n], and v_0 = v_n = 0. Collinear interior breakpoints are
// dropped on construction. The default value is the zero function.
class PiecewiseLinear {
 public:
  PiecewiseLinear() = default;

  // Throws std::invalid_argument on mismatched sizes, non-increasing
  // breakpoints, or nonzero end values.
  PiecewiseLinear(std::vector<Scalar> breakpoints, std::vector<Scalar> values);

  const std::vector<Scalar>& breakpoints() const { return xs_; }
  const std::vector<Scalar>& values() const { return vs_; }
  bool is_zero() const { return xs_.empty(); }

  Scalar operator()(const Scalar& x) const;
  Scalar MaxValue() const;
  Scalar Integral() const;
  // Integral of f over (-inf, x).
  Scalar Cumulative(const Scalar& x) const;

  friend bool operator==(const PiecewiseLinear& a, const PiecewiseLinear& b) {
    return a.xs_ == b.xs_ && a.vs_ == b.vs_;
  }

 private:
  std::vector<Scalar> xs_;
  std::vector<Scalar> vs_;
  std::vector<Scalar> prefix_;  // Cumulative(xs_[i])
};

// 1_A * 1_B. Each component pair contributes a trapezoid; the sum is built
// from the merged slope changes. Both sets must be nonempty.
PiecewiseLinear ConvolveIndicators(const IntervalSet& a, const IntervalSet& b);

inline Scalar Evaluate(const PiecewiseLinear& f, const Scalar& x) { return f(x); }

// Integral of f over S.
Scalar IntegrateOver(const PiecewiseLinear& f, const IntervalSet& s);

// <1_A * 1_B, 1_C>. All three sets must be nonempty.
Scalar Pairing(const IntervalSet& a, const IntervalSet& b, const IntervalSet& c);

// {x : f(x) > t} for t >= 0. A plateau lying exactly at height t is
// excluded. Throws std::invalid_argument for t < 0.
IntervalSet Superlevel(const PiecewiseLinear& f, const Scalar& t);

// t -> |{f > t}| on [0, max f). Nonincreasing and right-continuous; affine
// between consecutive levels but, unlike PiecewiseLinear, it may jump down
// where f has a plateau. Piece i covers [levels[i], levels[i+1]) and runs
// from starts[i] at its left end to the limit ends[i] at its right end.
class Distribution {
 public:
  Distribution() = default;
  Distribution(std::vector<Scalar> levels, std::vector<Scalar> starts,
               std::vector<Scalar> ends);

  const std::vector<Scalar>& levels() const { return levels_; }
  const std::vector<Scalar>& starts() const { return starts_; }
  const std::vector<Scalar>& ends() const { return ends_; }
  std::size_t pieces() const { return starts_.size(); }

  // |S_t|; zero for t at or above the top level. Throws for t < 0.
  Scalar operator()(const Scalar& t) const;
  // Integral over [0, max f); equals the integral of f (layer cake).
  Scalar Integral() const;

 private:
  std::vector<Scalar> levels_;
  std::vector<Scalar> starts_;
  std::vector<Scalar> ends_;
};

// Requires f >= 0.
Distribution ComputeDistribution(const PiecewiseLinear& f);

// "(x, v) (x, v) ..." with exact rationals; "0" for the zero function.
std::string ToString(const PiecewiseLinear& f);
// Header "x,v,x_float,v_float"; the float columns are 12-digit
// approximations and not authoritative.
void WriteCsv(std::ostream& out, const PiecewiseLinear& f);

}  // namespace rieszlab

#endif  // RIESZLAB_PIECEWISE_LINEAR_H_

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

#ifndef RIESZLAB_RIESZ_SOBOLEV_H_
#define RIESZLAB_RIESZ_SOBOLEV_H_

#include <optional>
#include <span>
#include <vector>

#include "rieszlab/interval_set.h"
#include "rieszlab/piecewise_linear.h"
#include "rieszlab/scalar.h"
#include "rieszlab/verdict.h"

namespace rieszlab {

// Pairing of three centered intervals of measures a, b, c. Symmetric in its
// arguments. Evaluated through the convolution so no branch of a closed form
// can be picked wrongly. Throws std::invalid_argument unless a, b, c > 0.
Scalar Theta(const Scalar& a, const Scalar& b, const Scalar& c);

// max(a,b,c) <= min(a+b, b+c, a+c): the range where equality in the
// Riesz-Sobolev inequality forces intervals.
bool BurchardAdmissible(const Scalar& a, const Scalar& b, const Scalar& c);

struct DeficitReport {
  Scalar a, b, c;  // |A|, |B|, |C|
  Scalar pairing_value;
  Scalar theta_value;
  Scalar deficit;  // theta_value - pairing_value, never negative
  Scalar delta;    // deficit / max(a, b)^2
  bool burchard_admissible = false;
};

DeficitReport RsDeficit(const IntervalSet& a, const IntervalSet& b,
                        const IntervalSet& c);

struct IntervalFit {
  Interval interval;
  Scalar symmetric_difference;  // |A △ interval|
};

// An interval J minimizing |A △ J|. Ties go to the leftmost left endpoint,
// then to the shorter interval. Throws on the empty set.
IntervalFit BestInterval(const IntervalSet& a);

// Superlevel set S_alpha of 1_A * 1_B compared with E, where
// |E| = |A| + |B| - 2 alpha.
//
// Under the window max-min < |E| < |A|+|B| the bounds
//   |E \ S_alpha|        <= 2 delta^(1/2) max(|A|,|B|)
//   |S_alpha ∪ E| - |E| <= 2 delta^(1/2) max(|A|,|B|)
// are asserted in the middle regime, i.e. when |E ∩ S_alpha| and
// |S_alpha ∪ E| both lie in [max-min, max+min]. Squared, each reads
// gap^2 <= 4 * deficit, which is compared exactly. When the deficit is zero
// the report asserts E = S_alpha up to a null set.
struct StabilityGapReport {
  bool window_ok = false;
  bool middle_regime = false;
  Scalar alpha;
  Scalar deficit;
  Scalar delta;
  IntervalSet s_alpha;
  Scalar s_alpha_measure;
  Scalar e_minus_s;             // |E \ S_alpha|
  Scalar s_minus_e;             // |S_alpha \ E|
  Scalar symmetric_difference;  // |E △ S_alpha|
  Scalar union_excess;          // |S_alpha ∪ E| - |E|
  Verdict verdict = Verdict::kInapplicable;
};

StabilityGapReport StabilityGaps(const IntervalSet& a, const IntervalSet& b,
                                 const IntervalSet& e);

// ||S_alpha| - |E|| and the deficit of (A, B, S_alpha). Both must vanish
// when the deficit of (A, B, E) does; otherwise the values are reported
// together with their squares divided by delta (the delta^(1/2) scaling).
struct LevelSetDeficitReport {
  bool window_ok = false;
  Scalar alpha;
  Scalar delta;
  Scalar s_alpha_measure;
  Scalar measure_gap;
  Scalar s_alpha_deficit;
  std::optional<Scalar> measure_gap_scaled_sq;  // gap^2 / (delta M^2)
  std::optional<Scalar> deficit_scaled_sq;      // deficit^2 / (delta M^4)
  Verdict verdict = Verdict::kInapplicable;
};

LevelSetDeficitReport LevelSetDeficitCheck(const IntervalSet& a,
                                           const IntervalSet& b,
                                           const IntervalSet& e);

// S_a1 - S_a2 + S_a3 - ... + S_a(2k+1) ⊆ S_beta with
// beta - (|A|+|B|)/2 = sum_i (a_i - (|A|+|B|)/2), and
// |S_beta| >= sum_i |S_a_i|. The measure bound is a Brunn-Minkowski
// consequence and is asserted only when every S_a_i is nonempty.
struct InclusionReport {
  Scalar beta;
  bool all_nonempty = false;
  IntervalSet alternating_sum;
  IntervalSet s_beta;
  bool inclusion_holds = false;
  Scalar s_beta_measure;
  Scalar sum_of_measures;
  bool measure_bound_holds = false;
  Verdict verdict = Verdict::kInapplicable;

  bool holds() const { return verdict != Verdict::kViolated; }
};

// Throws std::invalid_argument unless alphas has odd length and every
// entry lies in (0, min(|A|,|B|)). beta <= 0 gives kInapplicable.
InclusionReport SuperlevelInclusionCheck(const IntervalSet& a,
                                         const IntervalSet& b,
                                         std::span<const Scalar> alphas);

// beta = (2k+1) alpha - k|A| - k|B|. Preconditions: alpha >= 0, beta >= 0,
// S_alpha nonempty and (4k+1) eps M <= |S_alpha|. Hypotheses:
//   |S_beta|  < |A|+|B| - 2 beta  + (2k+1) eps M
//   |S_alpha| > |A|+|B| - 2 alpha - eps M
// Asserted conclusions:
//   |hull S_alpha| < |S_alpha| + (4k+2) eps M
//   |S_alpha|      < |A|+|B| - 2 alpha + (4k+1) eps M
//   |S_beta|       > |A|+|B| - 2 beta  - (2k+1) eps M
// The sharper hull bound with (4k+1) is evaluated and logged, not asserted.
struct NearIntervalReport {
  int k = 1;
  Scalar alpha;
  Scalar beta;
  Scalar eps;
  Scalar max_measure;
  Scalar s_alpha_measure;
  std::optional<Scalar> s_beta_measure;
  bool preconditions = false;
  bool hypotheses = false;
  std::optional<Scalar> hull_length;
  Scalar hull_bound;        // (4k+2) form
  Scalar sharp_hull_bound;  // (4k+1) form
  bool sharp_hull_bound_holds = false;
  Verdict verdict = Verdict::kInapplicable;
};

NearIntervalReport NearIntervalCheck(const IntervalSet& a, const IntervalSet& b,
                                     const Scalar& alpha, int k,
                                     const Scalar& eps);

struct ProbeReport {
  Scalar a_measure, b_measure, e_measure, f_measure;
  Scalar alpha;  // |E| = |A|+|B| - 2 alpha
  Scalar beta;   // |F| = |A|+|B| - 2 beta
  Scalar delta1;
  Scalar delta2;
  bool window_ok = false;
  Interval best_interval{0, 1};
  Scalar epsilon;  // |A △ best_interval| / |A|
  std::optional<Scalar> s_alpha_measure;  // absent when alpha < 0
  std::optional<Scalar> s_beta_measure;   // absent when beta < 0
};

// Records normalized deficits for E and F, the window
//   (1+eps')(max-min) <= |E| <= (1-eps')(|A|+|B|)/3,
// and how far A is from its best interval. Nothing about the relation between
// delta and epsilon is asserted. Throws std::invalid_argument unless
// |F| = 3|E| and all sets are nonempty.
ProbeReport StabilityProbe(const IntervalSet& a, const IntervalSet& b,
                           const IntervalSet& e, const IntervalSet& f,
                           const Scalar& eps_prime);

}  // namespace rieszlab

#endif  // RIESZLAB_RIESZ_SOBOLEV_H_

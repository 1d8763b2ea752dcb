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

#include "rieszlab/riesz_sobolev.h"

#include <stdexcept>
#include <utility>

namespace rieszlab {
namespace {

void RequireNonempty(const IntervalSet& s, const char* name) {
  if (s.empty()) {
    throw std::invalid_argument(std::string("set ") + name + " must be nonempty");
  }
}

// Deficit of (A, B, C) given f = 1_A * 1_B.
DeficitReport DeficitFor(const PiecewiseLinear& f, const Scalar& a,
                         const Scalar& b, const IntervalSet& c) {
  DeficitReport r;
  r.a = a;
  r.b = b;
  r.c = c.Measure();
  r.pairing_value = IntegrateOver(f, c);
  r.theta_value = Theta(r.a, r.b, r.c);
  r.deficit = r.theta_value - r.pairing_value;
  const Scalar& m = Max(a, b);
  r.delta = r.deficit / (m * m);
  r.burchard_admissible = BurchardAdmissible(r.a, r.b, r.c);
  return r;
}

}  // namespace

Scalar Theta(const Scalar& a, const Scalar& b, const Scalar& c) {
  if (!(a > 0 && b > 0 && c > 0)) {
    throw std::invalid_argument("theta needs positive measures");
  }
  return Pairing(CenteredInterval(a), CenteredInterval(b), CenteredInterval(c));
}

bool BurchardAdmissible(const Scalar& a, const Scalar& b, const Scalar& c) {
  const Scalar& largest = Max(a, Max(b, c));
  Scalar ab = a + b;
  Scalar bc = b + c;
  Scalar ac = a + c;
  return largest <= Min(ab, Min(bc, ac));
}

DeficitReport RsDeficit(const IntervalSet& a, const IntervalSet& b,
                        const IntervalSet& c) {
  RequireNonempty(a, "A");
  RequireNonempty(b, "B");
  RequireNonempty(c, "C");
  return DeficitFor(ConvolveIndicators(a, b), a.Measure(), b.Measure(), c);
}

IntervalFit BestInterval(const IntervalSet& a) {
  RequireNonempty(a, "A");
  // Maximize |A ∩ J| - |J \ A| over J spanning components i..j: a maximum
  // contiguous sum of component lengths minus the gaps between them.
  const auto& comps = a.components();
  Scalar current = comps[0].length();
  std::size_t start = 0;
  Scalar best_gain = current;
  std::size_t best_start = 0;
  std::size_t best_end = 0;
  for (std::size_t j = 1; j < comps.size(); ++j) {
    Scalar extended = current - (comps[j].lo() - comps[j - 1].hi()) + comps[j].length();
    Scalar fresh = comps[j].length();
    if (extended >= fresh) {
      current = std::move(extended);
    } else {
      current = std::move(fresh);
      start = j;
    }
    if (current > best_gain || (current == best_gain && start < best_start)) {
      best_gain = current;
      best_start = start;
      best_end = j;
    }
  }
  return {Interval(comps[best_start].lo(), comps[best_end].hi()),
          a.Measure() - best_gain};
}

StabilityGapReport StabilityGaps(const IntervalSet& a, const IntervalSet& b,
                                 const IntervalSet& e) {
  RequireNonempty(a, "A");
  RequireNonempty(b, "B");
  RequireNonempty(e, "E");
  const Scalar ma = a.Measure();
  const Scalar mb = b.Measure();
  const Scalar me = e.Measure();
  const Scalar& big = Max(ma, mb);
  const Scalar& small = Min(ma, mb);

  StabilityGapReport r;
  r.window_ok = big - small < me && me < ma + mb;
  r.alpha = (ma + mb - me) / 2;
  const PiecewiseLinear f = ConvolveIndicators(a, b);
  const DeficitReport d = DeficitFor(f, ma, mb, e);
  r.deficit = d.deficit;
  r.delta = d.delta;
  if (r.alpha < 0) return r;

  r.s_alpha = Superlevel(f, r.alpha);
  r.s_alpha_measure = r.s_alpha.Measure();
  r.e_minus_s = Difference(e, r.s_alpha).Measure();
  r.s_minus_e = Difference(r.s_alpha, e).Measure();
  r.symmetric_difference = r.e_minus_s + r.s_minus_e;
  r.union_excess = r.s_minus_e;
  if (!r.window_ok) return r;

  const Scalar overlap = me - r.e_minus_s;
  const Scalar joined = me + r.s_minus_e;
  r.middle_regime = big - small <= overlap && joined <= big + small;

  bool violated = false;
  if (r.deficit == 0 && r.symmetric_difference != 0) violated = true;
  if (r.middle_regime) {
    const Scalar limit = 4 * r.deficit;
    if (r.e_minus_s * r.e_minus_s > limit) violated = true;
    if (r.union_excess * r.union_excess > limit) violated = true;
  }
  if (violated) {
    r.verdict = Verdict::kViolated;
  } else if (r.middle_regime || r.deficit == 0) {
    r.verdict = Verdict::kHolds;
  } else {
    r.verdict = Verdict::kReported;
  }
  return r;
}

LevelSetDeficitReport LevelSetDeficitCheck(const IntervalSet& a,
                                           const IntervalSet& b,
                                           const IntervalSet& e) {
  RequireNonempty(a, "A");
  RequireNonempty(b, "B");
  RequireNonempty(e, "E");
  const Scalar ma = a.Measure();
  const Scalar mb = b.Measure();
  const Scalar me = e.Measure();
  const Scalar& big = Max(ma, mb);
  const Scalar& small = Min(ma, mb);

  LevelSetDeficitReport r;
  r.window_ok = big - small < me && me < ma + mb;
  r.alpha = (ma + mb - me) / 2;
  const PiecewiseLinear f = ConvolveIndicators(a, b);
  r.delta = DeficitFor(f, ma, mb, e).delta;
  if (!r.window_ok) return r;

  const IntervalSet s_alpha = Superlevel(f, r.alpha);
  r.s_alpha_measure = s_alpha.Measure();
  r.measure_gap = Abs(r.s_alpha_measure - me);
  // Theta(a, b, 0) = 0, so an empty superlevel set has no deficit.
  r.s_alpha_deficit =
      s_alpha.empty() ? Scalar(0) : DeficitFor(f, ma, mb, s_alpha).deficit;

  if (r.delta == 0) {
    r.verdict = r.measure_gap == 0 && r.s_alpha_deficit == 0 ? Verdict::kHolds
                                                             : Verdict::kViolated;
  } else {
    const Scalar m2 = big * big;
    r.measure_gap_scaled_sq = r.measure_gap * r.measure_gap / (r.delta * m2);
    r.deficit_scaled_sq =
        r.s_alpha_deficit * r.s_alpha_deficit / (r.delta * m2 * m2);
    r.verdict = Verdict::kReported;
  }
  return r;
}

InclusionReport SuperlevelInclusionCheck(const IntervalSet& a,
                                         const IntervalSet& b,
                                         std::span<const Scalar> alphas) {
  RequireNonempty(a, "A");
  RequireNonempty(b, "B");
  if (alphas.size() % 2 == 0) {
    throw std::invalid_argument("need an odd number of levels");
  }
  const Scalar ma = a.Measure();
  const Scalar mb = b.Measure();
  const Scalar& small = Min(ma, mb);
  const Scalar half_sum = (ma + mb) / 2;

  InclusionReport r;
  r.beta = half_sum;
  for (const auto& alpha : alphas) {
    if (!(alpha > 0 && alpha < small)) {
      throw std::invalid_argument("level " + ToString(alpha) +
                                  " outside (0, min(|A|,|B|))");
    }
    r.beta += alpha - half_sum;
  }
  if (r.beta <= 0) return r;

  const PiecewiseLinear f = ConvolveIndicators(a, b);
  r.all_nonempty = true;
  r.sum_of_measures = 0;
  std::vector<IntervalSet> levels;
  levels.reserve(alphas.size());
  for (const auto& alpha : alphas) {
    levels.push_back(Superlevel(f, alpha));
    r.sum_of_measures += levels.back().Measure();
    if (levels.back().empty()) r.all_nonempty = false;
  }
  if (r.all_nonempty) {
    r.alternating_sum = levels[0];
    for (std::size_t i = 1; i < levels.size(); ++i) {
      r.alternating_sum = MinkowskiSum(
          r.alternating_sum, i % 2 == 1 ? Reflect(levels[i]) : levels[i]);
    }
  }
  r.s_beta = Superlevel(f, r.beta);
  r.s_beta_measure = r.s_beta.Measure();
  r.inclusion_holds = IsSubset(r.alternating_sum, r.s_beta);
  r.measure_bound_holds = r.s_beta_measure >= r.sum_of_measures;
  const bool ok = r.inclusion_holds && (!r.all_nonempty || r.measure_bound_holds);
  r.verdict = ok ? Verdict::kHolds : Verdict::kViolated;
  return r;
}

NearIntervalReport NearIntervalCheck(const IntervalSet& a, const IntervalSet& b,
                                     const Scalar& alpha, int k,
                                     const Scalar& eps) {
  RequireNonempty(a, "A");
  RequireNonempty(b, "B");
  if (k < 1) throw std::invalid_argument("k must be a positive integer");
  if (eps < 0) throw std::invalid_argument("eps must be nonnegative");
  const Scalar ma = a.Measure();
  const Scalar mb = b.Measure();

  NearIntervalReport r;
  r.k = k;
  r.alpha = alpha;
  r.eps = eps;
  r.max_measure = Max(ma, mb);
  r.beta = (2 * k + 1) * alpha - k * (ma + mb);
  const Scalar unit = eps * r.max_measure;
  if (alpha < 0) return r;

  const PiecewiseLinear f = ConvolveIndicators(a, b);
  const IntervalSet s_alpha = Superlevel(f, alpha);
  r.s_alpha_measure = s_alpha.Measure();
  if (r.beta >= 0) r.s_beta_measure = Superlevel(f, r.beta).Measure();
  r.hull_bound = r.s_alpha_measure + (4 * k + 2) * unit;
  r.sharp_hull_bound = r.s_alpha_measure + (4 * k + 1) * unit;
  if (!s_alpha.empty()) r.hull_length = Hull(s_alpha).length();

  r.preconditions = r.beta >= 0 && !s_alpha.empty() &&
                    (4 * k + 1) * unit <= r.s_alpha_measure;
  if (!r.preconditions) return r;

  const Scalar& s_beta = *r.s_beta_measure;
  r.hypotheses = s_beta < ma + mb - 2 * r.beta + (2 * k + 1) * unit &&
                 r.s_alpha_measure > ma + mb - 2 * alpha - unit;
  r.sharp_hull_bound_holds = *r.hull_length < r.sharp_hull_bound;
  if (!r.hypotheses) return r;

  const bool ok = *r.hull_length < r.hull_bound &&
                  r.s_alpha_measure < ma + mb - 2 * alpha + (4 * k + 1) * unit &&
                  s_beta > ma + mb - 2 * r.beta - (2 * k + 1) * unit;
  r.verdict = ok ? Verdict::kHolds : Verdict::kViolated;
  return r;
}

ProbeReport StabilityProbe(const IntervalSet& a, const IntervalSet& b,
                           const IntervalSet& e, const IntervalSet& f,
                           const Scalar& eps_prime) {
  RequireNonempty(a, "A");
  RequireNonempty(b, "B");
  RequireNonempty(e, "E");
  RequireNonempty(f, "F");
  ProbeReport r;
  r.a_measure = a.Measure();
  r.b_measure = b.Measure();
  r.e_measure = e.Measure();
  r.f_measure = f.Measure();
  if (r.f_measure != 3 * r.e_measure) {
    throw std::invalid_argument("probe requires |F| = 3|E|");
  }
  const Scalar total = r.a_measure + r.b_measure;
  const Scalar spread = Max(r.a_measure, r.b_measure) - Min(r.a_measure, r.b_measure);
  r.window_ok = (1 + eps_prime) * spread <= r.e_measure &&
                r.e_measure <= (1 - eps_prime) * total / 3;
  r.alpha = (total - r.e_measure) / 2;
  r.beta = (total - r.f_measure) / 2;

  const PiecewiseLinear conv = ConvolveIndicators(a, b);
  r.delta1 = DeficitFor(conv, r.a_measure, r.b_measure, e).delta;
  r.delta2 = DeficitFor(conv, r.a_measure, r.b_measure, f).delta;
  IntervalFit fit = BestInterval(a);
  r.best_interval = fit.interval;
  r.epsilon = fit.symmetric_difference / r.a_measure;
  if (r.alpha >= 0) r.s_alpha_measure = Superlevel(conv, r.alpha).Measure();
  if (r.beta >= 0) r.s_beta_measure = Superlevel(conv, r.beta).Measure();
  return r;
}

}  // namespace rieszlab

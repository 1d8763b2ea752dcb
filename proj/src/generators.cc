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

#include "rieszlab/generators.h"

#include <algorithm>
#include <limits>
#include <set>
#include <stdexcept>

#include "rieszlab/additive.h"
#include "rieszlab/piecewise_linear.h"

namespace rieszlab {

std::uint64_t Rng::Below(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("empty range");
  const std::uint64_t limit =
      std::numeric_limits<std::uint64_t>::max() -
      std::numeric_limits<std::uint64_t>::max() % n;
  std::uint64_t draw;
  do {
    draw = engine_();
  } while (draw >= limit);
  return draw % n;
}

std::int64_t Rng::Between(std::int64_t lo, std::int64_t hi) {
  if (hi < lo) throw std::invalid_argument("empty range");
  const auto width = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<std::int64_t>(Below(width));
}

Scalar Rng::Rational(const Scalar& lo, const Scalar& hi, std::int64_t max_den) {
  const std::int64_t den = Between(1, max_den);
  const mpz_class first = Ceil(Scalar(lo * den));
  const mpz_class last = Floor(Scalar(hi * den));
  if (last < first) throw std::invalid_argument("no grid point in range");
  const mpz_class width = last - first + 1;
  if (!width.fits_slong_p()) throw std::overflow_error("rational range too wide");
  Scalar out(first + static_cast<long>(Below(width.get_ui())), den);
  out.canonicalize();
  return out;
}

std::uint64_t DeriveSeed(std::uint64_t master, std::uint64_t index) {
  std::uint64_t z = master + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

IntervalSet GenRandomSet(const GenConfig& cfg) {
  if (cfg.n_components < 1) throw std::invalid_argument("need at least one component");
  if (cfg.denominator_bound < 1) throw std::invalid_argument("denominator bound must be >= 1");
  if (!(cfg.scale > 0)) throw std::invalid_argument("scale must be positive");
  const mpz_class reach = Floor(Scalar(cfg.scale * cfg.denominator_bound));
  if (!reach.fits_slong_p() || reach > (std::int64_t{1} << 40)) {
    throw std::invalid_argument("grid too large");
  }
  const std::int64_t k_max = reach.get_si();
  const std::uint64_t points = static_cast<std::uint64_t>(2 * k_max + 1);
  const std::uint64_t wanted = 2 * static_cast<std::uint64_t>(cfg.n_components);
  if (points < wanted) {
    throw std::invalid_argument("components cannot fit in [-scale, scale]");
  }

  // Floyd's sampling of `wanted` distinct grid indices.
  Rng rng(cfg.seed);
  std::set<std::uint64_t> chosen;
  for (std::uint64_t j = points - wanted; j < points; ++j) {
    const std::uint64_t t = rng.Below(j + 1);
    if (!chosen.insert(t).second) chosen.insert(j);
  }
  std::vector<Interval> comps;
  comps.reserve(cfg.n_components);
  for (auto it = chosen.begin(); it != chosen.end();) {
    const auto lo = static_cast<std::int64_t>(*it++) - k_max;
    const auto hi = static_cast<std::int64_t>(*it++) - k_max;
    comps.emplace_back(MakeScalar(lo, cfg.denominator_bound),
                       MakeScalar(hi, cfg.denominator_bound));
  }
  return IntervalSet::Normalize(std::move(comps));
}

LatticePair GenLatticeCounterexample(int lambda) {
  if (lambda < 2) throw std::invalid_argument("lambda must be at least 2");
  LatticePair out;
  std::vector<std::int64_t> a_points;
  std::vector<std::int64_t> b_points;
  for (std::int64_t i = 0; i < lambda; ++i) {
    a_points.push_back(i);
    b_points.push_back(i * lambda);
  }
  out.a_points = IntegerSet(a_points);
  out.b_points = IntegerSet(b_points);
  const Scalar half_width = MakeScalar(1, 2 * static_cast<std::int64_t>(lambda));
  auto thicken = [&](const IntegerSet& points) {
    std::vector<Interval> comps;
    for (auto p : points.elements()) {
      comps.emplace_back(p - half_width, p + half_width);
    }
    return IntervalSet::Normalize(std::move(comps));
  };
  out.a = thicken(out.a_points);
  out.b = thicken(out.b_points);
  return out;
}

CounterexampleReport CheckCounterexample(int lambda) {
  const LatticePair pair = GenLatticeCounterexample(lambda);
  const IntervalSet unit(0, 1);
  const PiecewiseLinear conv = ConvolveIndicators(pair.a, pair.b);
  const Distribution lattice = ComputeDistribution(conv);
  const Distribution interval = ComputeDistribution(ConvolveIndicators(unit, unit));

  CounterexampleReport r;
  r.lambda = lambda;
  r.distinct_sums = static_cast<std::int64_t>(IntSumset(pair.a_points, pair.b_points).size());
  r.max_value = conv.MaxValue();
  const Scalar inv = MakeScalar(1, lambda);
  const Scalar crossover = MakeScalar(1, lambda + 1);
  std::vector<Scalar> ts = {inv / 4, inv / 2, 3 * inv / 4, inv, 2 * inv,
                            crossover / 2, crossover};
  std::sort(ts.begin(), ts.end());
  ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
  bool ok = r.distinct_sums == static_cast<std::int64_t>(lambda) * lambda &&
            r.max_value == inv;
  for (const auto& t : ts) {
    CounterexampleRow row;
    row.t = t;
    row.measure = lattice(t);
    row.predicted = t < inv ? Scalar(2 * lambda * (1 - lambda * t)) : Scalar(0);
    row.interval_measure = interval(t);
    row.interval_predicted = t < 1 ? Scalar(2 * (1 - t)) : Scalar(0);
    ok = ok && row.measure == row.predicted &&
         row.interval_measure == row.interval_predicted;
    // Lattice superlevel sets are larger exactly below the crossover.
    if (t < crossover) ok = ok && row.measure > row.interval_measure;
    if (t == crossover) ok = ok && row.measure == row.interval_measure;
    r.rows.push_back(std::move(row));
  }
  r.support_measure = lattice(Scalar(0));
  r.interval_support_measure = interval(Scalar(0));
  r.ratio = r.support_measure / r.interval_support_measure;
  ok = ok && r.ratio == lambda;
  r.verdict = ok ? Verdict::kHolds : Verdict::kViolated;
  return r;
}

GapFamily GenGapFamily(const Scalar& s) {
  if (s < 0 || s >= Scalar(1, 4)) {
    throw std::invalid_argument("gap width must lie in [0, 1/4)");
  }
  const Scalar half(1, 2);
  const Scalar shift = s / 2;
  GapFamily g;
  g.a = IntervalSet::Normalize({Interval(-half - shift, -shift),
                                Interval(shift, half + shift)});
  g.b = CenteredInterval(1);
  g.e = CenteredInterval(half);
  g.f = CenteredInterval(Scalar(3, 2));
  return g;
}

}  // namespace rieszlab

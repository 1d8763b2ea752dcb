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

#include "rieszlab/piecewise_linear.h"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>

namespace rieszlab {

PiecewiseLinear::PiecewiseLinear(std::vector<Scalar> breakpoints,
                                 std::vector<Scalar> values) {
  if (breakpoints.size() != values.size()) {
    throw std::invalid_argument("breakpoint/value count mismatch");
  }
  if (breakpoints.empty()) return;
  if (breakpoints.size() == 1 || values.front() != 0 || values.back() != 0) {
    throw std::invalid_argument("piecewise-linear function must vanish at both ends");
  }
  for (std::size_t i = 1; i < breakpoints.size(); ++i) {
    if (!(breakpoints[i - 1] < breakpoints[i])) {
      throw std::invalid_argument("breakpoints must be strictly increasing");
    }
  }
  bool all_zero = std::all_of(values.begin(), values.end(),
                              [](const Scalar& v) { return v == 0; });
  if (all_zero) return;

  for (std::size_t i = 0; i < breakpoints.size(); ++i) {
    if (xs_.size() >= 2) {
      const std::size_t n = xs_.size();
      // Drop the last kept point if it sits on the chord to the new one.
      Scalar lhs = (vs_[n - 1] - vs_[n - 2]) * (breakpoints[i] - xs_[n - 1]);
      Scalar rhs = (values[i] - vs_[n - 1]) * (xs_[n - 1] - xs_[n - 2]);
      if (lhs == rhs) {
        xs_.pop_back();
        vs_.pop_back();
      }
    }
    xs_.push_back(std::move(breakpoints[i]));
    vs_.push_back(std::move(values[i]));
  }

  prefix_.reserve(xs_.size());
  prefix_.emplace_back(0);
  for (std::size_t i = 1; i < xs_.size(); ++i) {
    prefix_.push_back(prefix_.back() + (xs_[i] - xs_[i - 1]) * (vs_[i] + vs_[i - 1]) / 2);
  }
}

Scalar PiecewiseLinear::operator()(const Scalar& x) const {
  if (xs_.empty() || x <= xs_.front() || x >= xs_.back()) return 0;
  auto it = std::upper_bound(xs_.begin(), xs_.end(), x);
  const std::size_t i = static_cast<std::size_t>(it - xs_.begin()) - 1;
  return vs_[i] + (vs_[i + 1] - vs_[i]) * (x - xs_[i]) / (xs_[i + 1] - xs_[i]);
}

Scalar PiecewiseLinear::MaxValue() const {
  if (vs_.empty()) return 0;
  return *std::max_element(vs_.begin(), vs_.end());
}

Scalar PiecewiseLinear::Integral() const {
  return prefix_.empty() ? Scalar(0) : prefix_.back();
}

Scalar PiecewiseLinear::Cumulative(const Scalar& x) const {
  if (xs_.empty() || x <= xs_.front()) return 0;
  if (x >= xs_.back()) return prefix_.back();
  auto it = std::upper_bound(xs_.begin(), xs_.end(), x);
  const std::size_t i = static_cast<std::size_t>(it - xs_.begin()) - 1;
  return prefix_[i] + (x - xs_[i]) * (vs_[i] + (*this)(x)) / 2;
}

PiecewiseLinear ConvolveIndicators(const IntervalSet& a, const IntervalSet& b) {
  if (a.empty() || b.empty()) {
    throw std::invalid_argument("convolution of an empty set");
  }
  // Slope changes of the sum of trapezoids. A trapezoid for [a0,a1) and
  // [b0,b1) rises with slope 1 from a0+b0, is flat from a0+b0+short to
  // a0+b0+long, and returns to zero at a1+b1.
  std::vector<std::pair<Scalar, int>> events;
  events.reserve(4 * a.size() * b.size());
  for (const auto& p : a.components()) {
    for (const auto& q : b.components()) {
      Scalar start = p.lo() + q.lo();
      Scalar lp = p.length();
      Scalar lq = q.length();
      events.emplace_back(start, 1);
      events.emplace_back(start + Min(lp, lq), -1);
      events.emplace_back(start + Max(lp, lq), -1);
      events.emplace_back(p.hi() + q.hi(), 1);
    }
  }
  std::sort(events.begin(), events.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });

  std::vector<Scalar> xs;
  std::vector<Scalar> vs;
  long slope = 0;
  for (std::size_t i = 0; i < events.size();) {
    const Scalar& x = events[i].first;
    Scalar v = 0;
    if (!xs.empty()) v = vs.back() + slope * (x - xs.back());
    xs.push_back(x);
    vs.push_back(std::move(v));
    for (; i < events.size() && events[i].first == xs.back(); ++i) {
      slope += events[i].second;
    }
  }
  return PiecewiseLinear(std::move(xs), std::move(vs));
}

Scalar IntegrateOver(const PiecewiseLinear& f, const IntervalSet& s) {
  Scalar total = 0;
  for (const auto& c : s.components()) {
    total += f.Cumulative(c.hi()) - f.Cumulative(c.lo());
  }
  return total;
}

Scalar Pairing(const IntervalSet& a, const IntervalSet& b, const IntervalSet& c) {
  if (c.empty()) throw std::invalid_argument("pairing with an empty set");
  return IntegrateOver(ConvolveIndicators(a, b), c);
}

IntervalSet Superlevel(const PiecewiseLinear& f, const Scalar& t) {
  if (t < 0) throw std::invalid_argument("superlevel at negative height");
  const auto& xs = f.breakpoints();
  const auto& vs = f.values();
  std::vector<Interval> pieces;
  for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
    const bool left = vs[i] > t;
    const bool right = vs[i + 1] > t;
    if (!left && !right) continue;
    Scalar lo = xs[i];
    Scalar hi = xs[i + 1];
    if (!left) {
      lo = xs[i] + (t - vs[i]) / (vs[i + 1] - vs[i]) * (xs[i + 1] - xs[i]);
    } else if (!right) {
      hi = xs[i] + (vs[i] - t) / (vs[i] - vs[i + 1]) * (xs[i + 1] - xs[i]);
    }
    pieces.emplace_back(std::move(lo), std::move(hi));
  }
  return IntervalSet::Normalize(std::move(pieces));
}

Distribution::Distribution(std::vector<Scalar> levels, std::vector<Scalar> starts,
                           std::vector<Scalar> ends)
    : levels_(std::move(levels)), starts_(std::move(starts)), ends_(std::move(ends)) {
  if (starts_.size() != ends_.size() ||
      (!starts_.empty() && levels_.size() != starts_.size() + 1)) {
    throw std::invalid_argument("inconsistent distribution pieces");
  }
}

Scalar Distribution::operator()(const Scalar& t) const {
  if (t < 0) throw std::invalid_argument("distribution at negative height");
  if (starts_.empty() || t >= levels_.back()) return 0;
  auto it = std::upper_bound(levels_.begin(), levels_.end(), t);
  const std::size_t i = static_cast<std::size_t>(it - levels_.begin()) - 1;
  return starts_[i] + (ends_[i] - starts_[i]) * (t - levels_[i]) /
                          (levels_[i + 1] - levels_[i]);
}

Scalar Distribution::Integral() const {
  Scalar total = 0;
  for (std::size_t i = 0; i < starts_.size(); ++i) {
    total += (levels_[i + 1] - levels_[i]) * (starts_[i] + ends_[i]) / 2;
  }
  return total;
}

Distribution ComputeDistribution(const PiecewiseLinear& f) {
  struct LevelEvent {
    Scalar slope = 0;
    Scalar jump = 0;
  };
  const auto& xs = f.breakpoints();
  const auto& vs = f.values();
  std::map<Scalar, LevelEvent> events;
  Scalar at_zero = 0;
  events[Scalar(0)];
  for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
    const Scalar& low = Min(vs[i], vs[i + 1]);
    const Scalar& high = Max(vs[i], vs[i + 1]);
    if (low < 0) throw std::invalid_argument("distribution of a negative function");
    if (high == 0) continue;
    Scalar length = xs[i + 1] - xs[i];
    at_zero += length;
    if (low == high) {
      events[low].jump -= length;
    } else {
      Scalar rate = length / (high - low);
      events[low].slope -= rate;
      events[high].slope += rate;
    }
  }
  if (events.size() == 1) return {};

  std::vector<Scalar> levels;
  std::vector<Scalar> starts;
  std::vector<Scalar> ends;
  Scalar value = at_zero;
  Scalar slope = 0;
  for (auto it = events.begin(); it != events.end(); ++it) {
    if (it != events.begin()) {
      Scalar end = value + slope * (it->first - levels.back());
      starts.push_back(value);
      ends.push_back(end);
      value = end + it->second.jump;
    }
    slope += it->second.slope;
    levels.push_back(it->first);
  }

  // Merge neighbours that share a line and have no jump between them.
  std::vector<Scalar> m_levels{levels[0]};
  std::vector<Scalar> m_starts;
  std::vector<Scalar> m_ends;
  for (std::size_t i = 0; i < starts.size(); ++i) {
    if (!m_starts.empty() && m_ends.back() == starts[i]) {
      const std::size_t j = m_starts.size() - 1;
      Scalar prev_rate = (m_ends[j] - m_starts[j]) * (levels[i + 1] - levels[i]);
      Scalar rate = (ends[i] - starts[i]) * (levels[i] - m_levels[j]);
      if (prev_rate == rate) {
        m_ends[j] = ends[i];
        m_levels.back() = levels[i + 1];
        continue;
      }
    }
    m_starts.push_back(starts[i]);
    m_ends.push_back(ends[i]);
    m_levels.push_back(levels[i + 1]);
  }
  return Distribution(std::move(m_levels), std::move(m_starts), std::move(m_ends));
}

std::string ToString(const PiecewiseLinear& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < f.breakpoints().size(); ++i) {
    if (i) out += ' ';
    out += "(" + ToString(f.breakpoints()[i]) + ", " + ToString(f.values()[i]) + ")";
  }
  return out;
}

void WriteCsv(std::ostream& out, const PiecewiseLinear& f) {
  out << "x,v,x_float,v_float\n";
  for (std::size_t i = 0; i < f.breakpoints().size(); ++i) {
    out << ToString(f.breakpoints()[i]) << ',' << ToString(f.values()[i]) << ','
        << ToDecimalString(f.breakpoints()[i]) << ','
        << ToDecimalString(f.values()[i]) << '\n';
  }
}

}  // namespace rieszlab

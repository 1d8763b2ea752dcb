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

#include "rieszlab/interval_set.h"

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <utility>

namespace rieszlab {

Interval::Interval(Scalar lo, Scalar hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
  if (!(lo_ < hi_)) {
    throw std::invalid_argument("malformed interval [" + ToString(lo_) + "," +
                                ToString(hi_) + ")");
  }
}

IntervalSet::IntervalSet(const Interval& single) : components_{single} {}

IntervalSet::IntervalSet(Scalar lo, Scalar hi)
    : components_{Interval(std::move(lo), std::move(hi))} {}

IntervalSet IntervalSet::Normalize(std::vector<Interval> raw) {
  std::sort(raw.begin(), raw.end(), [](const Interval& a, const Interval& b) {
    return a.lo() < b.lo();
  });
  IntervalSet out;
  for (auto& piece : raw) {
    if (!out.components_.empty() && piece.lo() <= out.components_.back().hi()) {
      if (out.components_.back().hi() < piece.hi()) {
        out.components_.back() =
            Interval(out.components_.back().lo(), piece.hi());
      }
      continue;
    }
    out.components_.push_back(std::move(piece));
  }
  return out;
}

Scalar IntervalSet::Measure() const {
  Scalar total = 0;
  for (const auto& c : components_) total += c.hi() - c.lo();
  return total;
}

bool IntervalSet::Contains(const Scalar& x) const {
  auto it = std::upper_bound(
      components_.begin(), components_.end(), x,
      [](const Scalar& v, const Interval& c) { return v < c.lo(); });
  if (it == components_.begin()) return false;
  return std::prev(it)->Contains(x);
}

namespace {

// Membership of the elementary segment starting at p. `idx` only moves
// forward, so a sweep over increasing p is linear overall.
bool Covers(const std::vector<Interval>& comps, std::size_t& idx,
            const Scalar& p) {
  while (idx < comps.size() && comps[idx].hi() <= p) ++idx;
  return idx < comps.size() && comps[idx].lo() <= p;
}

bool Apply(SetOp op, bool in_s, bool in_t) {
  switch (op) {
    case SetOp::kUnion:
      return in_s || in_t;
    case SetOp::kIntersect:
      return in_s && in_t;
    case SetOp::kDifference:
      return in_s && !in_t;
    case SetOp::kSymmetricDifference:
      return in_s != in_t;
  }
  return false;
}

}  // namespace

IntervalSet Boolean(const IntervalSet& s, const IntervalSet& t, SetOp op) {
  std::vector<Scalar> cuts;
  cuts.reserve(2 * (s.size() + t.size()));
  for (const auto* set : {&s, &t}) {
    for (const auto& c : set->components()) {
      cuts.push_back(c.lo());
      cuts.push_back(c.hi());
    }
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  std::vector<Interval> pieces;
  std::size_t is = 0, it = 0;
  for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
    const bool in_s = Covers(s.components(), is, cuts[k]);
    const bool in_t = Covers(t.components(), it, cuts[k]);
    if (!Apply(op, in_s, in_t)) continue;
    if (!pieces.empty() && pieces.back().hi() == cuts[k]) {
      pieces.back() = Interval(pieces.back().lo(), cuts[k + 1]);
    } else {
      pieces.emplace_back(cuts[k], cuts[k + 1]);
    }
  }
  return IntervalSet::Normalize(std::move(pieces));
}

bool IsSubset(const IntervalSet& s, const IntervalSet& t) {
  return Difference(s, t).empty();
}

IntervalSet Affine(const IntervalSet& s, const Scalar& u, const Scalar& r) {
  if (r == 0) throw std::invalid_argument("affine map with zero scale");
  std::vector<Interval> out;
  out.reserve(s.size());
  for (const auto& c : s.components()) {
    Scalar a = r * c.lo() + u;
    Scalar b = r * c.hi() + u;
    if (r > 0) {
      out.emplace_back(std::move(a), std::move(b));
    } else {
      out.emplace_back(std::move(b), std::move(a));
    }
  }
  return IntervalSet::Normalize(std::move(out));
}

IntervalSet Reflect(const IntervalSet& s) { return Affine(s, 0, -1); }

IntervalSet Translate(const IntervalSet& s, const Scalar& u) {
  return Affine(s, u, 1);
}

IntervalSet Star(const IntervalSet& s) {
  if (s.empty()) return {};
  return CenteredInterval(s.Measure());
}

IntervalSet CenteredInterval(const Scalar& a) {
  if (!(a > 0)) {
    throw std::invalid_argument("centered interval needs positive measure");
  }
  Scalar half = a / 2;
  return IntervalSet(Scalar(-half), half);
}

IntervalSet MinkowskiSum(const IntervalSet& s, const IntervalSet& t) {
  if (s.empty() || t.empty()) {
    throw std::invalid_argument("Minkowski sum of an empty set");
  }
  std::vector<Interval> pieces;
  pieces.reserve(s.size() * t.size());
  for (const auto& a : s.components()) {
    for (const auto& b : t.components()) {
      pieces.emplace_back(a.lo() + b.lo(), a.hi() + b.hi());
    }
  }
  return IntervalSet::Normalize(std::move(pieces));
}

IntervalSet IteratedSumset(const IntervalSet& s, int lambda, int mu) {
  if (lambda < 0 || mu < 0 || lambda + mu == 0) {
    throw std::invalid_argument("iterated sumset needs lambda + mu >= 1");
  }
  if (s.empty()) throw std::invalid_argument("iterated sumset of empty set");
  const IntervalSet negated = Reflect(s);
  IntervalSet acc = lambda > 0 ? s : negated;
  for (int i = 1; i < lambda; ++i) acc = MinkowskiSum(acc, s);
  for (int j = lambda > 0 ? 0 : 1; j < mu; ++j) acc = MinkowskiSum(acc, negated);
  return acc;
}

Interval Hull(const IntervalSet& s) {
  if (s.empty()) throw std::invalid_argument("hull of empty set");
  return Interval(s.components().front().lo(), s.components().back().hi());
}

namespace {

class LiteralReader {
 public:
  explicit LiteralReader(std::string_view text) : text_(text) {}

  void SkipSpace() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }
  bool AtEnd() {
    SkipSpace();
    return pos_ == text_.size();
  }
  bool Peek(char c) {
    SkipSpace();
    return pos_ < text_.size() && text_[pos_] == c;
  }
  void Expect(char c) {
    if (!Peek(c)) Fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  Scalar ReadRational() {
    SkipSpace();
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isdigit(static_cast<unsigned char>(text_[pos_])) ||
            text_[pos_] == '-' || text_[pos_] == '/')) {
      ++pos_;
    }
    if (start == pos_) Fail("expected a rational");
    return ParseScalar(text_.substr(start, pos_ - start));
  }
  [[noreturn]] void Fail(const std::string& what) const {
    throw ParseError("interval set literal '" + std::string(text_) +
                     "': " + what + " at offset " + std::to_string(pos_));
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

IntervalSet ParseIntervalSet(std::string_view text) {
  LiteralReader in(text);
  if (in.Peek('{')) {
    in.Expect('{');
    in.Expect('}');
    if (!in.AtEnd()) in.Fail("trailing input");
    return {};
  }
  std::vector<Interval> raw;
  while (true) {
    in.Expect('[');
    Scalar lo = in.ReadRational();
    in.Expect(',');
    Scalar hi = in.ReadRational();
    in.Expect(')');
    if (!(lo < hi)) in.Fail("empty or reversed interval");
    raw.emplace_back(std::move(lo), std::move(hi));
    if (in.AtEnd()) break;
    in.Expect('u');
  }
  return IntervalSet::Normalize(std::move(raw));
}

std::string ToString(const Interval& interval) {
  return "[" + ToString(interval.lo()) + "," + ToString(interval.hi()) + ")";
}

std::string ToString(const IntervalSet& s) {
  if (s.empty()) return "{}";
  std::string out;
  for (const auto& c : s.components()) {
    if (!out.empty()) out += " u ";
    out += ToString(c);
  }
  return out;
}

}  // namespace rieszlab

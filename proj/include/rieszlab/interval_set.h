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

#ifndef RIESZLAB_INTERVAL_SET_H_
#define RIESZLAB_INTERVAL_SET_H_

#include <string>
#include <string_view>
#include <vector>

#include "rieszlab/scalar.h"

namespace rieszlab {

// Half-open interval [lo, hi) with lo < hi.
//
// Endpoint inclusion never changes a measure, so every set in this library
// is stored half-open, including open superlevel sets {f > t}.
class Interval {
 public:
  // Throws std::invalid_argument unless lo < hi.
  Interval(Scalar lo, Scalar hi);

  const Scalar& lo() const { return lo_; }
  const Scalar& hi() const { return hi_; }
  Scalar length() const { return hi_ - lo_; }
  bool Contains(const Scalar& x) const { return lo_ <= x && x < hi_; }

  friend bool operator==(const Interval& a, const Interval& b) {
    return a.lo_ == b.lo_ && a.hi_ == b.hi_;
  }

 private:
  Scalar lo_;
  Scalar hi_;
};

// Canonical finite union of half-open rational intervals: components sorted
// by lo, pairwise disjoint, separated by gaps of positive length. The empty
// component list is the empty set.
class IntervalSet {
 public:
  IntervalSet() = default;
  IntervalSet(const Interval& single);  // NOLINT(runtime/explicit)
  IntervalSet(Scalar lo, Scalar hi);

  // Merges overlapping and touching intervals. The union is unchanged.
  static IntervalSet Normalize(std::vector<Interval> raw);

  const std::vector<Interval>& components() const { return components_; }
  bool empty() const { return components_.empty(); }
  std::size_t size() const { return components_.size(); }

  Scalar Measure() const;
  bool Contains(const Scalar& x) const;

  friend bool operator==(const IntervalSet& a, const IntervalSet& b) {
    return a.components_ == b.components_;
  }

 private:
  std::vector<Interval> components_;
};

enum class SetOp { kUnion, kIntersect, kDifference, kSymmetricDifference };

IntervalSet Boolean(const IntervalSet& s, const IntervalSet& t, SetOp op);
inline IntervalSet Union(const IntervalSet& s, const IntervalSet& t) {
  return Boolean(s, t, SetOp::kUnion);
}
inline IntervalSet Intersect(const IntervalSet& s, const IntervalSet& t) {
  return Boolean(s, t, SetOp::kIntersect);
}
inline IntervalSet Difference(const IntervalSet& s, const IntervalSet& t) {
  return Boolean(s, t, SetOp::kDifference);
}
inline IntervalSet SymmetricDifference(const IntervalSet& s,
                                       const IntervalSet& t) {
  return Boolean(s, t, SetOp::kSymmetricDifference);
}

// s is contained in t (up to finitely many points, which the half-open
// representation does not distinguish).
bool IsSubset(const IntervalSet& s, const IntervalSet& t);

// r*S + u. Throws std::invalid_argument if r == 0.
IntervalSet Affine(const IntervalSet& s, const Scalar& u, const Scalar& r);
IntervalSet Reflect(const IntervalSet& s);
IntervalSet Translate(const IntervalSet& s, const Scalar& u);

// Symmetric rearrangement: the centered interval of the same measure.
IntervalSet Star(const IntervalSet& s);

// [-a/2, a/2). Throws std::invalid_argument unless a > 0.
IntervalSet CenteredInterval(const Scalar& a);

// Minkowski sum. Both operands must be nonempty.
IntervalSet MinkowskiSum(const IntervalSet& s, const IntervalSet& t);

// lambda*S - mu*S. Requires S nonempty and lambda + mu >= 1.
IntervalSet IteratedSumset(const IntervalSet& s, int lambda, int mu);

// Smallest interval containing s. Throws on the empty set.
Interval Hull(const IntervalSet& s);

// Literal grammar:
//   IntervalSet := "{}" | "[" Q "," Q ")" ( "u" "[" Q "," Q ")" )*
// Whitespace between tokens is ignored. Parsed sets are normalized.
IntervalSet ParseIntervalSet(std::string_view text);
std::string ToString(const Interval& interval);
std::string ToString(const IntervalSet& s);

}  // namespace rieszlab

#endif  // RIESZLAB_INTERVAL_SET_H_

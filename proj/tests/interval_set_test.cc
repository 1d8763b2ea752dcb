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

#include <gtest/gtest.h>

#include "test_util.h"

namespace rieszlab {
namespace {

using testing::ProbePoints;
using testing::Q;
using testing::RandomSet;
using testing::S;

TEST(ScalarTest, ParsesAndPrintsCanonically) {
  EXPECT_EQ(ToString(Q("6/4")), "3/2");
  EXPECT_EQ(ToString(Q("-4/2")), "-2");
  EXPECT_EQ(ToString(Q("0/7")), "0");
  EXPECT_EQ(Q("-3/6").get_den(), 2);
  EXPECT_THROW(Q("1/0"), ParseError);
  EXPECT_THROW(Q("1/-2"), ParseError);
  EXPECT_THROW(Q("abc"), ParseError);
  EXPECT_THROW(Q(""), ParseError);
  EXPECT_EQ(ToDecimalString(Q("1/3")), "0.333333333333");
  EXPECT_EQ(ToDecimalString(Q("-2/3")), "-0.666666666667");
  EXPECT_EQ(ToDecimalString(Q("0")), "0");
}

TEST(IntervalSetTest, NormalizeMergesTouchingAndOverlapping) {
  EXPECT_EQ(IntervalSet::Normalize({Interval(0, 1), Interval(1, 2)}), S("[0,2)"));
  EXPECT_EQ(IntervalSet::Normalize({Interval(0, 2), Interval(1, 3)}), S("[0,3)"));
  EXPECT_TRUE(IntervalSet::Normalize({}).empty());
  EXPECT_EQ(IntervalSet::Normalize({Interval(5, 6), Interval(0, 1), Interval(1, 2)})
                .size(),
            2u);
}

TEST(IntervalSetTest, MalformedIntervalRejected) {
  EXPECT_THROW(Interval(1, 1), std::invalid_argument);
  EXPECT_THROW(Interval(2, 1), std::invalid_argument);
  EXPECT_THROW(S("[1,1)"), ParseError);
}

TEST(IntervalSetTest, Measure) {
  EXPECT_EQ(S("[0,1)").Measure(), 1);
  EXPECT_EQ(S("[0,1) u [2,5/2)").Measure(), Q("3/2"));
  EXPECT_EQ(IntervalSet().Measure(), 0);
}

TEST(IntervalSetTest, BooleanExamples) {
  const IntervalSet d = SymmetricDifference(S("[0,1)"), S("[1/2,3/2)"));
  EXPECT_EQ(d, S("[0,1/2) u [1,3/2)"));
  EXPECT_EQ(d.Measure(), 1);
  EXPECT_TRUE(SymmetricDifference(S("[0,1)"), S("[0,1)")).empty());
  const IntervalSet i = Intersect(S("[0,1) u [2,3)"), S("[1/2,5/2)"));
  EXPECT_EQ(i, S("[1/2,1) u [2,5/2)"));
  EXPECT_EQ(i.Measure(), 1);
  EXPECT_EQ(Union(S("[0,1)"), S("[1,2)")), S("[0,2)"));
  EXPECT_EQ(Difference(S("[0,3)"), S("[1,2)")), S("[0,1) u [2,3)"));
}

TEST(IntervalSetTest, BooleanAgreesWithPointwiseMembership) {
  Rng rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const IntervalSet s = RandomSet(rng, 5);
    const IntervalSet t = RandomSet(rng, 5);
    for (SetOp op : {SetOp::kUnion, SetOp::kIntersect, SetOp::kDifference,
                     SetOp::kSymmetricDifference}) {
      const IntervalSet r = Boolean(s, t, op);
      for (const auto& x : ProbePoints({s, t})) {
        const bool a = s.Contains(x), b = t.Contains(x);
        bool want = false;
        switch (op) {
          case SetOp::kUnion: want = a || b; break;
          case SetOp::kIntersect: want = a && b; break;
          case SetOp::kDifference: want = a && !b; break;
          case SetOp::kSymmetricDifference: want = a != b; break;
        }
        ASSERT_EQ(r.Contains(x), want) << ToString(s) << " / " << ToString(t);
      }
    }
  }
}

TEST(IntervalSetTest, SymmetricDifferenceIdentity) {
  Rng rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const IntervalSet s = RandomSet(rng, 6);
    const IntervalSet t = RandomSet(rng, 6);
    EXPECT_EQ(SymmetricDifference(s, t).Measure() + 2 * Intersect(s, t).Measure(),
              s.Measure() + t.Measure());
  }
}

TEST(IntervalSetTest, AffineMaps) {
  EXPECT_EQ(Translate(S("[0,1)"), 5), S("[5,6)"));
  EXPECT_EQ(Reflect(S("[1,2)")), S("[-2,-1)"));
  EXPECT_EQ(Affine(S("[0,1)"), 0, 2), S("[0,2)"));
  EXPECT_THROW(Affine(S("[0,1)"), 1, 0), std::invalid_argument);
  EXPECT_EQ(Affine(S("[0,1) u [2,3)"), 1, -3), S("[-8,-5) u [-2,1)"));
}

TEST(IntervalSetTest, AffineRoundTripAndScaling) {
  Rng rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const IntervalSet s = RandomSet(rng, 5);
    const Scalar u = rng.Rational(-5, 5, 9);
    Scalar r = rng.Rational(-3, 3, 7);
    if (r == 0) r = 1;
    const IntervalSet mapped = Affine(s, u, r);
    EXPECT_EQ(mapped.Measure(), Abs(r) * s.Measure());
    EXPECT_EQ(Affine(mapped, Scalar(-u / r), Scalar(1 / r)), s);
  }
}

TEST(IntervalSetTest, StarAndCenteredInterval) {
  EXPECT_EQ(Star(S("[3,5)")), S("[-1,1)"));
  EXPECT_EQ(Star(S("[0,1) u [2,3)")), S("[-1,1)"));
  EXPECT_TRUE(Star(IntervalSet()).empty());
  const IntervalSet s = S("[0,1/3) u [2,17/5)");
  EXPECT_EQ(Star(Star(s)), Star(s));
  EXPECT_EQ(CenteredInterval(1), S("[-1/2,1/2)"));
  EXPECT_EQ(CenteredInterval(Q("3/2")), S("[-3/4,3/4)"));
  EXPECT_EQ(CenteredInterval(Q("7/3")).Measure(), Q("7/3"));
  EXPECT_THROW(CenteredInterval(0), std::invalid_argument);
  EXPECT_THROW(CenteredInterval(-1), std::invalid_argument);
}

TEST(IntervalSetTest, MinkowskiSumExamples) {
  EXPECT_EQ(MinkowskiSum(S("[0,1)"), S("[0,1)")), S("[0,2)"));
  const IntervalSet s = S("[0,1) u [3/2,2)");
  EXPECT_EQ(MinkowskiSum(s, s), S("[0,4)"));
  EXPECT_EQ(MinkowskiSum(s, s).Measure(), 4);
  EXPECT_EQ(MinkowskiSum(S("[0,1)"), S("[10,11)")), S("[10,12)"));
  EXPECT_THROW(MinkowskiSum(IntervalSet(), s), std::invalid_argument);
}

// z is interior to S + T iff (z - T) meets S in positive measure.
TEST(IntervalSetTest, MinkowskiSumAgreesWithTranslateIntersectOracle) {
  Rng rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const IntervalSet s = RandomSet(rng, 4);
    const IntervalSet t = RandomSet(rng, 4);
    const IntervalSet sum = MinkowskiSum(s, t);
    const IntervalSet minus_t = Reflect(t);
    const auto points = ProbePoints({sum});
    for (std::size_t i = 0; i < points.size(); ++i) {
      const Scalar& z = points[i];
      // Skip component endpoints, where membership is a null-set convention.
      bool endpoint = false;
      for (const auto& c : sum.components()) endpoint |= (z == c.lo() || z == c.hi());
      if (endpoint) continue;
      const bool oracle = Intersect(Translate(minus_t, z), s).Measure() > 0;
      ASSERT_EQ(sum.Contains(z), oracle) << ToString(s) << " + " << ToString(t);
    }
  }
}

TEST(IntervalSetTest, MinkowskiSumProperties) {
  Rng rng(9);
  for (int trial = 0; trial < 200; ++trial) {
    const IntervalSet s = RandomSet(rng, 5);
    const IntervalSet t = RandomSet(rng, 5);
    const IntervalSet u = RandomSet(rng, 3);
    const IntervalSet st = MinkowskiSum(s, t);
    EXPECT_GE(st.Measure(), s.Measure() + t.Measure());
    EXPECT_EQ(st, MinkowskiSum(t, s));
    EXPECT_EQ(MinkowskiSum(st, u), MinkowskiSum(s, MinkowskiSum(t, u)));
    // Equality in Brunn-Minkowski only for intervals.
    const IntervalSet ss = MinkowskiSum(s, s);
    EXPECT_EQ(ss.Measure() == 2 * s.Measure(), Hull(s).length() == s.Measure());
  }
}

TEST(IntervalSetTest, IteratedSumset) {
  const IntervalSet s = S("[0,1) u [3/2,2)");
  EXPECT_EQ(IteratedSumset(s, 1, 0), s);
  EXPECT_EQ(IteratedSumset(S("[0,1)"), 1, 1), S("[-1,1)"));
  const IntervalSet two_minus_one = IteratedSumset(s, 2, 1);
  EXPECT_EQ(two_minus_one, S("[-2,4)"));
  EXPECT_GE(two_minus_one.Measure(), 3 * s.Measure());
  EXPECT_EQ(IteratedSumset(S("[0,1)"), 0, 2), S("[-2,0)"));
  EXPECT_THROW(IteratedSumset(s, 0, 0), std::invalid_argument);
  EXPECT_THROW(IteratedSumset(IntervalSet(), 1, 0), std::invalid_argument);
}

TEST(IntervalSetTest, Hull) {
  EXPECT_EQ(Hull(S("[0,1) u [3/2,2)")), Interval(0, 2));
  EXPECT_EQ(Hull(S("[0,1)")), Interval(0, 1));
  EXPECT_THROW(Hull(IntervalSet()), std::invalid_argument);
  Rng rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    const IntervalSet s = RandomSet(rng, 6);
    EXPECT_GE(Hull(s).length(), s.Measure());
    EXPECT_TRUE(IsSubset(s, IntervalSet(Hull(s))));
  }
}

TEST(IntervalSetTest, LiteralRoundTrip) {
  EXPECT_EQ(ToString(S("[0,1) u [3/2,2)")), "[0,1) u [3/2,2)");
  EXPECT_EQ(ToString(S("{}")), "{}");
  EXPECT_EQ(ToString(S("  [ -1/2 , 2/4 )u[1,2) ")), "[-1/2,1/2) u [1,2)");
  EXPECT_EQ(ToString(S("[0,1) u [1,2)")), "[0,2)");
  Rng rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    const IntervalSet s = RandomSet(rng, 6, 4, 30);
    EXPECT_EQ(S(ToString(s)), s);
  }
  EXPECT_THROW(S("[0,1"), ParseError);
  EXPECT_THROW(S("[0,1) [2,3)"), ParseError);
  EXPECT_THROW(S("{} u [0,1)"), ParseError);
  EXPECT_THROW(S("(0,1)"), ParseError);
  EXPECT_THROW(S(""), ParseError);
}

}  // namespace
}  // namespace rieszlab

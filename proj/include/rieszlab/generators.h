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

#ifndef RIESZLAB_GENERATORS_H_
#define RIESZLAB_GENERATORS_H_

#include <cstdint>
#include <random>
#include <vector>

#include "rieszlab/integer_set.h"
#include "rieszlab/interval_set.h"
#include "rieszlab/scalar.h"
#include "rieszlab/verdict.h"

namespace rieszlab {

// mt19937_64 with bounded draws by rejection, so streams are identical
// across standard libraries (std::uniform_int_distribution is not).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t Next() { return engine_(); }
  // Uniform in [0, n). Requires n > 0.
  std::uint64_t Below(std::uint64_t n);
  // Uniform in [lo, hi].
  std::int64_t Between(std::int64_t lo, std::int64_t hi);
  // p/q with q uniform in [1, max_den] and p/q uniform on the grid of
  // multiples of 1/q in [lo, hi].
  Scalar Rational(const Scalar& lo, const Scalar& hi, std::int64_t max_den);

 private:
  std::mt19937_64 engine_;
};

// Per-trial seed from a master seed and a trial index (splitmix64 mix).
std::uint64_t DeriveSeed(std::uint64_t master, std::uint64_t index);

struct GenConfig {
  std::uint64_t seed = 0;
  int n_components = 1;
  Scalar scale = 1;
  std::int64_t denominator_bound = 1;
};

// n_components disjoint intervals inside [-scale, scale] with endpoints on
// the grid (1/denominator_bound)Z, separated by positive gaps. Throws
// std::invalid_argument if the grid has fewer than 2*n_components points.
IntervalSet GenRandomSet(const GenConfig& cfg);

// The integer sets {0,...,lambda-1} and {0, lambda, ..., (lambda-1)lambda},
// whose lambda^2 pairwise sums are distinct, thickened by
// [-1/(2 lambda), 1/(2 lambda)). Both thickened sets have measure 1.
struct LatticePair {
  IntegerSet a_points;
  IntegerSet b_points;
  IntervalSet a;
  IntervalSet b;
};

LatticePair GenLatticeCounterexample(int lambda);

struct CounterexampleRow {
  Scalar t;
  Scalar measure;            // |S_t| for the lattice pair
  Scalar predicted;          // 2 lambda (1 - lambda t), or 0 past 1/lambda
  Scalar interval_measure;   // |S_t| for two unit intervals
  Scalar interval_predicted; // 2 (1 - t)
};

struct CounterexampleReport {
  int lambda = 0;
  std::int64_t distinct_sums = 0;
  Scalar max_value;
  std::vector<CounterexampleRow> rows;
  Scalar support_measure;           // |S_t| as t -> 0+
  Scalar interval_support_measure;
  Scalar ratio;                     // support_measure / interval one
  Verdict verdict = Verdict::kInapplicable;
};

// Distribution of the lattice pair's convolution against the closed form at
// t = 1/(4 lambda), 1/(2 lambda), 3/(4 lambda), 1/lambda, 2/lambda, plus the
// crossover against unit intervals at t = 1/(lambda+1) and halfway to it.
// Rows are sorted by t without repeats.
CounterexampleReport CheckCounterexample(int lambda);

// Probe family indexed by a gap width s in [0, 1/4): A is a unit-measure set
// split at 0 by a gap of width s (each half shifted outward by s/2), B is
// the centered unit interval, E and F are centered with |E| = 1/2 and
// |F| = 3/2. s = 0 is an exact extremizer.
struct GapFamily {
  IntervalSet a;
  IntervalSet b;
  IntervalSet e;
  IntervalSet f;
};

GapFamily GenGapFamily(const Scalar& s);

}  // namespace rieszlab

#endif  // RIESZLAB_GENERATORS_H_

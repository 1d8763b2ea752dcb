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

// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails or overruns its time budget.
//
//   acceptance_test                 run everything
//   acceptance_test --update-golden rewrite the CLI golden files

#include <unistd.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "rieszlab/additive.h"
#include "rieszlab/generators.h"
#include "rieszlab/interval_set.h"
#include "rieszlab/piecewise_linear.h"
#include "rieszlab/riesz_sobolev.h"
#include "test_util.h"

namespace rieszlab {
namespace {

using testing::Lerp;
using testing::MinimalApLengthOracle;
using testing::Q;
using testing::S;
using testing::ThetaClosedForm;

namespace fs = std::filesystem;

struct Outcome {
  bool ok = true;
  std::string detail;
};

// Records the first failure; later ones only bump the count.
class Tally {
 public:
  void Check(bool condition, const std::string& what) {
    if (condition) return;
    if (failures_++ == 0) first_ = what;
  }
  Outcome Finish(const std::string& summary) const {
    if (failures_ == 0) return {true, summary};
    return {false, std::to_string(failures_) + " failure(s), first: " + first_};
  }

 private:
  int failures_ = 0;
  std::string first_;
};

std::string Str(const Scalar& q) { return ToString(q); }

Outcome ExactValues() {
  Tally t;
  const Scalar p = Pairing(S("[0,1)"), S("[0,1)"), S("[0,1)"));
  t.Check(p == Q("1/2"), "pairing = " + Str(p));
  const struct {
    const char *a, *b, *c, *want;
  } cases[] = {{"1", "1", "1", "3/4"},
               {"1", "1", "2", "1"},
               {"2", "1", "1/2", "1/2"},
               {"2", "1", "2", "7/4"}};
  for (const auto& c : cases) {
    const Scalar got = Theta(Q(c.a), Q(c.b), Q(c.c));
    t.Check(got == Q(c.want), std::string("theta(") + c.a + "," + c.b + "," +
                                  c.c + ") = " + Str(got));
  }
  return t.Finish("pairing 1/2, theta 3/4, 1, 1/2, 7/4");
}

Outcome ThetaOracle() {
  Tally t;
  Rng rng(1001);
  for (int i = 0; i < 1000; ++i) {
    const Scalar a = rng.Rational(Q("1/16"), 5, 16);
    const Scalar b = rng.Rational(Q("1/16"), 5, 16);
    const Scalar c = rng.Rational(Q("1/16"), 10, 16);
    t.Check(Theta(a, b, c) == ThetaClosedForm(a, b, c),
            "theta(" + Str(a) + "," + Str(b) + "," + Str(c) + ")");
  }
  return t.Finish("1000 triples equal");
}

Outcome DeficitNonnegative() {
  Tally t;
  Scalar smallest_positive = -1;
  int zeros = 0;
  for (int i = 0; i < 10000; ++i) {
    Rng rng(DeriveSeed(3003, i));
    const IntervalSet a = testing::RandomSet(rng, 6);
    const IntervalSet b = testing::RandomSet(rng, 6);
    const IntervalSet c = testing::RandomSet(rng, 6);
    const DeficitReport r = RsDeficit(a, b, c);
    t.Check(r.deficit >= 0, "trial " + std::to_string(i) + " deficit " + Str(r.deficit));
    if (r.deficit == 0) ++zeros;
    if (r.deficit > 0 && (smallest_positive < 0 || r.deficit < smallest_positive)) {
      smallest_positive = r.deficit;
    }
  }
  return t.Finish("10000 triples, " + std::to_string(zeros) +
                  " zero, smallest positive " + Str(smallest_positive));
}

Outcome BurchardRigidity() {
  Tally t;
  int n = 0;
  for (int i = 1; i <= 10; ++i) {
    for (int j = 1; j <= 5; ++j, ++n) {
      const Scalar a = MakeScalar(i, 5);
      const Scalar b = MakeScalar(2 * j + 1, 7);
      const Scalar c = a + b;
      const Scalar x = MakeScalar(n - 25, 3);
      const Scalar y = MakeScalar(7 - n, 4);
      const IntervalSet ia(x, x + a);
      const IntervalSet ib(y, y + b);
      const IntervalSet ic(x + y, x + y + c);
      t.Check(BurchardAdmissible(a, b, c), "inadmissible");
      const Scalar zero = RsDeficit(ia, ib, ic).deficit;
      t.Check(zero == 0, "interval triple " + std::to_string(n) + " deficit " + Str(zero));

      const Scalar gap = MakeScalar(1 + n % 9, 11 + n % 4);
      const IntervalSet split = Union(IntervalSet(x, x + a / 2),
                                      IntervalSet(x + a / 2 + gap, x + a + gap));
      t.Check(split.Measure() == a && split.components().size() == 2, "bad split");
      const Interval hull = Hull(MinkowskiSum(split, ib));
      const Scalar mid = (hull.lo() + hull.hi()) / 2;
      const DeficitReport r = RsDeficit(split, ib, IntervalSet(mid - c / 2, mid + c / 2));
      t.Check(r.burchard_admissible, "split lost admissibility");
      t.Check(r.deficit > 0, "split triple " + std::to_string(n) + " deficit 0");
    }
  }
  return t.Finish("50 interval triples at 0, 50 split triples > 0");
}

Outcome Counterexample() {
  Tally t;
  for (int lambda = 2; lambda <= 20; ++lambda) {
    const std::string tag = "lambda " + std::to_string(lambda);
    const LatticePair pair = GenLatticeCounterexample(lambda);
    t.Check(pair.a.Measure() == 1 && pair.b.Measure() == 1, tag + " measures");
    const PiecewiseLinear f = ConvolveIndicators(pair.a, pair.b);
    const Scalar inv = MakeScalar(1, lambda);
    for (int quarter = 1; quarter <= 3; ++quarter) {
      const Scalar s = inv * quarter / 4;
      const Scalar want = 2 * lambda * (1 - lambda * s);
      t.Check(Superlevel(f, s).Measure() == want, tag + " t=" + Str(s));
    }
    t.Check(Superlevel(f, inv).empty(), tag + " t=1/lambda");
    const CounterexampleReport r = CheckCounterexample(lambda);
    t.Check(r.verdict == Verdict::kHolds, tag + " verdict");
    for (const auto& row : r.rows) {
      const Scalar want = row.t < inv ? Scalar(2 * lambda * (1 - lambda * row.t)) : Scalar(0);
      t.Check(row.measure == want, tag + " row t=" + Str(row.t));
    }
    const Scalar ratio =
        Superlevel(f, 0).Measure() /
        Superlevel(ConvolveIndicators(S("[0,1)"), S("[0,1)")), 0).Measure();
    t.Check(ratio == lambda && r.ratio == lambda, tag + " ratio " + Str(ratio));
  }
  return t.Finish("lambda 2..20: |S_t| = 2 lambda (1 - lambda t), 0 at 1/lambda, ratio lambda");
}

Outcome FreimanExhaustive() {
  Tally t;
  int sets = 0, premises = 0;
  for (std::uint32_t mask = 1; mask < (1u << 15); mask += 2) {
    std::vector<std::int64_t> xs;
    for (int i = 0; i < 15; ++i) {
      if (mask >> i & 1u) xs.push_back(i);
    }
    if (xs.size() < 3) continue;
    ++sets;
    std::uint32_t sums = 0;
    for (auto u : xs) {
      for (auto v : xs) sums |= 1u << (u + v);
    }
    const int n = static_cast<int>(xs.size());
    const int sum_count = __builtin_popcount(sums);
    const IntegerSet x(xs);
    const FreimanReport r = FreimanCheck(x);
    const std::string tag = ToString(x);
    t.Check(r.sumset_size == sum_count, tag + " sumset size");
    t.Check(r.premise == (sum_count < 3 * n - 3), tag + " premise");
    if (!r.premise) continue;
    ++premises;
    const std::int64_t oracle = MinimalApLengthOracle(x);
    t.Check(r.cover.has_value() && r.cover->length == oracle, tag + " cover not minimal");
    t.Check(oracle <= sum_count - n + 1, tag + " bound");
    t.Check(r.verdict == Verdict::kHolds, tag + " verdict");
  }
  return t.Finish(std::to_string(sets) + " sets, " + std::to_string(premises) +
                  " with premise, all covers minimal and within bound");
}

Outcome KeystoneRandom() {
  Tally t;
  int premises = 0;
  for (int i = 0; i < 1000; ++i) {
    Rng rng(DeriveSeed(7007, i));
    GenConfig cfg;
    cfg.seed = rng.Next();
    cfg.n_components = static_cast<int>(rng.Between(1, 5));
    cfg.scale = MakeScalar(rng.Between(cfg.n_components, 3 * cfg.n_components), 2);
    cfg.denominator_bound = rng.Between(4, 12);
    const IntervalSet a = GenRandomSet(cfg);
    const Scalar sum = MinkowskiSum(a, a).Measure();
    if (!(sum < 3 * a.Measure())) continue;
    ++premises;
    const Scalar hull = a.components().back().hi() - a.components().front().lo();
    t.Check(hull <= sum - a.Measure(), ToString(a));
    const KeystoneReport r = KeystoneCheck(a);
    t.Check(r.premise && r.verdict == Verdict::kHolds, ToString(a) + " report");
  }
  t.Check(premises >= 100, "only " + std::to_string(premises) + " sets met the premise");
  return t.Finish(std::to_string(premises) + " of 1000 sets met the premise, all within bound");
}

Outcome InclusionRandom() {
  Tally t;
  int accepted = 0, drawn = 0;
  for (; accepted < 500 && drawn < 20000; ++drawn) {
    Rng rng(DeriveSeed(8008, drawn));
    const IntervalSet a = testing::RandomSet(rng, 3, 2, 6);
    const IntervalSet b = testing::RandomSet(rng, 3, 2, 6);
    const Scalar total = a.Measure() + b.Measure();
    const Scalar top = ConvolveIndicators(a, b).MaxValue();
    if (!(3 * top > total)) continue;
    ++accepted;
    std::vector<Scalar> alphas;
    for (int i = 0; i < 3; ++i) {
      const Scalar lo = total / 3;
      alphas.push_back(lo + (top - lo) * MakeScalar(rng.Between(1, 23), 24));
    }
    const Scalar beta = alphas[0] + alphas[1] + alphas[2] - total;
    const PiecewiseLinear f = ConvolveIndicators(a, b);
    const IntervalSet s1 = Superlevel(f, alphas[0]);
    const IntervalSet s2 = Superlevel(f, alphas[1]);
    const IntervalSet s3 = Superlevel(f, alphas[2]);
    const IntervalSet s_beta = Superlevel(f, beta);
    const IntervalSet alternating = MinkowskiSum(MinkowskiSum(s1, Reflect(s2)), s3);
    const std::string tag = ToString(a) + " | " + ToString(b);
    t.Check(IsSubset(alternating, s_beta), tag + " inclusion");
    t.Check(s_beta.Measure() >= s1.Measure() + s2.Measure() + s3.Measure(), tag + " measure");
    const InclusionReport r = SuperlevelInclusionCheck(a, b, alphas);
    t.Check(r.beta == beta && r.verdict == Verdict::kHolds, tag + " report");
  }
  t.Check(accepted == 500, "only " + std::to_string(accepted) + " admissible pairs");
  return t.Finish(std::to_string(accepted) + " pairs (" + std::to_string(drawn) +
                  " drawn), inclusion and measure bound hold");
}

Outcome EqualityCase() {
  Tally t;
  Rng rng(9009);
  for (int i = 0; i < 100; ++i) {
    const Scalar a = rng.Rational(Q("1/8"), 3, 8);
    const Scalar b = rng.Rational(Q("1/8"), 3, 8);
    const Scalar x = rng.Rational(-3, 3, 6);
    const Scalar y = rng.Rational(-3, 3, 6);
    const Scalar lo = Max(a, b) - Min(a, b);
    const Scalar e = lo + (2 * Min(a, b)) * MakeScalar(rng.Between(1, 15), 16);
    const Scalar centre = x + y + (a + b) / 2;
    const IntervalSet ia(x, x + a), ib(y, y + b), ie(centre - e / 2, centre + e / 2);
    const StabilityGapReport gaps = StabilityGaps(ia, ib, ie);
    const std::string tag = "triple " + std::to_string(i);
    t.Check(gaps.window_ok && gaps.deficit == 0, tag + " not extremal");
    t.Check(gaps.symmetric_difference == 0, tag + " |E△S| = " + Str(gaps.symmetric_difference));
    t.Check(gaps.verdict == Verdict::kHolds, tag + " gap verdict");
    const LevelSetDeficitReport level = LevelSetDeficitCheck(ia, ib, ie);
    t.Check(level.measure_gap == 0 && level.s_alpha_deficit == 0, tag + " level-set gaps");
    t.Check(level.verdict == Verdict::kHolds, tag + " level-set verdict");
  }
  int quads = 0;
  while (quads < 1000) {
    const Scalar a = rng.Rational(Q("1/10"), 4, 10);
    const Scalar b = rng.Rational(Q("1/10"), 4, 10);
    const Scalar lo = Max(a, b) - Min(a, b);
    const Scalar hi = Max(a, b) + Min(a, b);
    const Scalar e = Lerp(rng, lo, hi, 30);
    const Scalar e2 = Lerp(rng, lo, hi, 30);
    if (e == 0 || e2 == 0) continue;
    ++quads;
    const Scalar alpha = (a + b - e) / 2;
    const Scalar d = e - e2;
    t.Check(Theta(a, b, e) - Theta(a, b, e2) == alpha * d + d * d / 4,
            "increment " + Str(a) + "," + Str(b) + "," + Str(e) + "," + Str(e2));
  }
  return t.Finish("100 extremal triples with zero gaps, 1000 increment identities");
}

Outcome StabilityTrend() {
  Tally t;
  auto probe = [](const Scalar& s) {
    const GapFamily g = GenGapFamily(s);
    return StabilityProbe(g.a, g.b, g.e, g.f, Q("1/10"));
  };
  Scalar prev_delta, prev_eps;
  std::ostringstream trace;
  for (int k = 0; k <= 8; ++k) {
    const Scalar s = MakeScalar(k, 40);
    const ProbeReport r = probe(s);
    trace << (k ? " " : "") << "(" << Str(r.delta1) << ", " << Str(r.epsilon) << ")";
    if (k == 0) {
      t.Check(r.delta1 == 0 && r.epsilon == 0, "s=0 not extremal");
    } else {
      t.Check(r.delta1 > prev_delta, "delta1 not increasing at s=" + Str(s));
      t.Check(r.epsilon > prev_eps, "epsilon not increasing at s=" + Str(s));
      t.Check(probe(s / 2).epsilon <= r.epsilon, "halving s raised epsilon at " + Str(s));
    }
    prev_delta = r.delta1;
    prev_eps = r.epsilon;
  }
  return t.Finish("(delta1, epsilon): " + trace.str());
}

// CLI golden cases: name, global flags, subcommand arguments.
struct GoldenCase {
  const char* name;
  const char* args;
};

constexpr GoldenCase kGoldenCases[] = {
    {"pair.json", "pair '[0,1)' '[0,1)' '[0,1)'"},
    {"deficit.json", "deficit '[0,1/2) u [3/2,2)' '[-1/2,1/2)' '[-1/2,1/2)'"},
    {"deficit.csv", "--format csv deficit '[0,1)' '[0,1)' '[10,11)'"},
    {"superlevel.json", "superlevel '[0,1) u [2,3)' '[0,1)' 1/2"},
    {"convolve.csv", "--format csv convolve '[0,1) u [3/2,2)' '[0,1/3)'"},
    {"sumset.json", "sumset '[0,1) u [3/2,2)' '[0,1) u [3/2,2)'"},
    {"keystone.json", "keystone '[0,1) u [3/2,2)'"},
    {"freiman.json", "freiman '{0,2,4,8}'"},
    {"discretize.json", "discretize '[-1/2,1/2)' 1/4 1/10"},
    {"counterexample.json", "counterexample --lambda 4"},
    {"counterexample.csv", "--format csv counterexample --lambda 3"},
    {"probe.json", "probe '[-11/20,-1/20) u [1/20,11/20)' '[-1/2,1/2)' '[-1/4,1/4)' '[-3/4,3/4)'"},
    {"sweep_gap.csv", "--format csv sweep --family gap --grid 0:1/20:1/5"},
    {"sweep_random.json", "--seed 7 --trials 4 sweep --family random --grid 2,3"},
    {"sweep_keystone.csv", "--format csv --seed 11 --trials 5 sweep --family random --check keystone --grid 3"},
};

std::string Slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

bool RunCli(const std::string& args, const fs::path& out) {
  const std::string command = std::string("'") + RIESZLAB_CLI + "' --out '" +
                              out.string() + "' " + args + " > /dev/null 2>&1";
  const int status = std::system(command.c_str());
  return status != -1 && WIFEXITED(status) && WEXITSTATUS(status) == 0;
}

Outcome CliGolden(bool update) {
  Tally t;
  const fs::path scratch =
      fs::temp_directory_path() / ("rieszlab_acceptance_" + std::to_string(getpid()));
  fs::create_directories(scratch);
  const fs::path golden_dir = RIESZLAB_GOLDEN_DIR;
  for (const auto& c : kGoldenCases) {
    const fs::path first = scratch / (std::string("1_") + c.name);
    const fs::path second = scratch / (std::string("2_") + c.name);
    t.Check(RunCli(c.args, first) && RunCli(c.args, second), std::string(c.name) + " exit status");
    const std::string bytes = Slurp(first);
    t.Check(!bytes.empty() && bytes == Slurp(second), std::string(c.name) + " differs across runs");
    if (update) {
      std::ofstream(golden_dir / c.name, std::ios::binary) << bytes;
      continue;
    }
    t.Check(fs::exists(golden_dir / c.name), std::string(c.name) + " golden missing");
    t.Check(bytes == Slurp(golden_dir / c.name), std::string(c.name) + " differs from golden");
  }
  fs::remove_all(scratch);
  return t.Finish(std::to_string(std::size(kGoldenCases)) +
                  " invocations byte-identical across runs and to golden files");
}

struct Criterion {
  int id;
  const char* name;
  double budget_seconds;
  std::function<Outcome()> run;
};

}  // namespace
}  // namespace rieszlab

int main(int argc, char** argv) {
  using namespace rieszlab;
  const bool update = argc > 1 && std::string(argv[1]) == "--update-golden";
  const std::vector<Criterion> criteria = {
      {1, "exact values", 1, ExactValues},
      {2, "theta oracle equivalence", 10, ThetaOracle},
      {3, "deficit nonnegative", 300, DeficitNonnegative},
      {4, "interval rigidity", 60, BurchardRigidity},
      {5, "lattice counterexample", 30, Counterexample},
      {6, "freiman exhaustive", 60, FreimanExhaustive},
      {7, "short hull from small doubling", 120, KeystoneRandom},
      {8, "superlevel inclusion", 300, InclusionRandom},
      {9, "equality-case stability", 60, EqualityCase},
      {10, "stability trend", 60, StabilityTrend},
      {11, "cli golden", 60, [update] { return CliGolden(update); }},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = c.run();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = seconds < c.budget_seconds;
    const bool pass = outcome.ok && in_time;
    failed += !pass;
    std::printf("[%s] %2d %-32s %8.2fs / %gs  %s%s\n", pass ? "PASS" : "FAIL", c.id,
                c.name, seconds, c.budget_seconds, outcome.detail.c_str(),
                in_time ? "" : " (over time budget)");
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}

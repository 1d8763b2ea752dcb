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

// Command-line front end: exact pairings, deficits, superlevel sets,
// sumset checks, the lattice counterexample, probes and sweeps.
//
// Exit status: 0 on success, 1 on bad input, 3 if any check reports a
// violated bound.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "rieszlab/additive.h"
#include "rieszlab/generators.h"
#include "rieszlab/interval_set.h"
#include "rieszlab/piecewise_linear.h"
#include "rieszlab/report.h"
#include "rieszlab/riesz_sobolev.h"
#include "rieszlab/sweep.h"

namespace {

using namespace rieszlab;

struct Output {
  std::string format = "json";
  std::string path;
  bool violated = false;

  void Emit(const std::vector<Record>& records, bool as_array) const {
    std::ostringstream text;
    if (format == "csv") {
      WriteCsv(text, records);
    } else {
      WriteJson(text, records, as_array);
    }
    if (path.empty()) {
      std::cout << text.str();
      return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) throw std::runtime_error("cannot open " + path);
    file << text.str();
  }
  void Emit(const Record& record) const { Emit({record}, false); }
  void Track(Verdict v) {
    if (v == Verdict::kViolated) violated = true;
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Riesz-Sobolev deficits and sumset checks on rational interval unions"};
  app.require_subcommand(1);
  app.fallthrough();

  Output output;
  std::uint64_t seed = 0;
  int trials = 100;
  app.add_option("--format", output.format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--out", output.path, "write output to this file");
  app.add_option("--seed", seed, "master seed for random generators");
  app.add_option("--trials", trials, "trials per grid point");

  std::string s1, s2, s3, s4, q1, q2;

  auto* pair = app.add_subcommand("pair", "<1_A * 1_B, 1_C>");
  pair->add_option("A", s1)->required();
  pair->add_option("B", s2)->required();
  pair->add_option("C", s3)->required();

  auto* deficit = app.add_subcommand("deficit", "Riesz-Sobolev deficit of (A, B, C)");
  deficit->add_option("A", s1)->required();
  deficit->add_option("B", s2)->required();
  deficit->add_option("C", s3)->required();

  auto* superlevel = app.add_subcommand("superlevel", "{x : 1_A * 1_B (x) > t}");
  superlevel->add_option("A", s1)->required();
  superlevel->add_option("B", s2)->required();
  superlevel->add_option("t", q1)->required();

  auto* convolve = app.add_subcommand("convolve", "breakpoints of 1_A * 1_B");
  convolve->add_option("A", s1)->required();
  convolve->add_option("B", s2)->required();

  auto* sumset = app.add_subcommand("sumset", "Minkowski sum A + B");
  sumset->add_option("A", s1)->required();
  sumset->add_option("B", s2)->required();

  auto* keystone = app.add_subcommand("keystone", "|A+A| < 3|A| implies a short hull");
  keystone->add_option("A", s1)->required();

  auto* freiman = app.add_subcommand("freiman", "3k-3 check on an integer set");
  freiman->add_option("X", s1)->required();

  auto* discretize = app.add_subcommand("discretize", "grid cells at least (1-delta) full");
  discretize->add_option("A", s1)->required();
  discretize->add_option("eps", q1)->required();
  discretize->add_option("delta", q2)->required();

  int lambda = 0;
  auto* counterexample =
      app.add_subcommand("counterexample", "lattice superlevel-set counterexample");
  counterexample->add_option("--lambda", lambda)->required();

  std::string eps_prime = "1/10";
  auto* probe = app.add_subcommand("probe", "near-extremizer probe with |F| = 3|E|");
  probe->add_option("A", s1)->required();
  probe->add_option("B", s2)->required();
  probe->add_option("E", s3)->required();
  probe->add_option("F", s4)->required();
  probe->add_option("--eps-prime", eps_prime);

  std::string family = "gap";
  std::string grid;
  std::string check;
  auto* sweep = app.add_subcommand("sweep", "deterministic parameter sweep");
  sweep->add_option("--family", family)->check(CLI::IsMember({"gap", "random"}));
  sweep->add_option("--grid", grid, "p/q list or start:step:stop");
  sweep->add_option("--check", check, "probe|deficit (gap), deficit|keystone (random)");
  sweep->add_option("--eps-prime", eps_prime);

  CLI11_PARSE(app, argc, argv);

  try {
    if (pair->parsed()) {
      const auto a = ParseIntervalSet(s1), b = ParseIntervalSet(s2), c = ParseIntervalSet(s3);
      Record r;
      r.Add("A", ToString(a)).Add("B", ToString(b)).Add("C", ToString(c));
      r.Add("pairing", Pairing(a, b, c));
      output.Emit(r);
    } else if (deficit->parsed()) {
      const auto a = ParseIntervalSet(s1), b = ParseIntervalSet(s2), c = ParseIntervalSet(s3);
      Record r;
      r.Add("A", ToString(a)).Add("B", ToString(b)).Add("C", ToString(c));
      r.Append(ToRecord(RsDeficit(a, b, c)));
      output.Emit(r);
    } else if (superlevel->parsed()) {
      const auto a = ParseIntervalSet(s1), b = ParseIntervalSet(s2);
      const Scalar t = ParseScalar(q1);
      const IntervalSet s = Superlevel(ConvolveIndicators(a, b), t);
      Record r;
      r.Add("A", ToString(a)).Add("B", ToString(b)).Add("t", t);
      r.Add("superlevel", ToString(s)).Add("measure", s.Measure());
      output.Emit(r);
    } else if (convolve->parsed()) {
      const PiecewiseLinear f =
          ConvolveIndicators(ParseIntervalSet(s1), ParseIntervalSet(s2));
      std::vector<Record> rows;
      for (std::size_t i = 0; i < f.breakpoints().size(); ++i) {
        Record r;
        r.Add("x", f.breakpoints()[i]).Add("v", f.values()[i]);
        rows.push_back(std::move(r));
      }
      output.Emit(rows, true);
    } else if (sumset->parsed()) {
      const auto a = ParseIntervalSet(s1), b = ParseIntervalSet(s2);
      const IntervalSet s = MinkowskiSum(a, b);
      Record r;
      r.Add("A", ToString(a)).Add("B", ToString(b));
      r.Add("sumset", ToString(s)).Add("measure", s.Measure());
      r.Add("brunn_minkowski_excess", Scalar(s.Measure() - a.Measure() - b.Measure()));
      output.Emit(r);
    } else if (keystone->parsed()) {
      const auto a = ParseIntervalSet(s1);
      const KeystoneReport k = KeystoneCheck(a);
      output.Track(k.verdict);
      Record r;
      r.Add("A", ToString(a)).Append(ToRecord(k));
      output.Emit(r);
    } else if (freiman->parsed()) {
      const IntegerSet x = ParseIntegerSet(s1);
      const FreimanReport f = FreimanCheck(x);
      output.Track(f.verdict);
      Record r;
      r.Add("X", ToString(x)).Append(ToRecord(f));
      r.Add("cauchy_davenport_gap", CauchyDavenportGap(x));
      output.Emit(r);
    } else if (discretize->parsed()) {
      const auto a = ParseIntervalSet(s1);
      const Scalar eps = ParseScalar(q1);
      const Scalar delta = ParseScalar(q2);
      const IntegerSet cells = Discretize(a, eps, delta);
      Record r;
      r.Add("A", ToString(a)).Add("eps", eps).Add("delta", delta);
      r.Add("cells", ToString(cells));
      r.Add("count", static_cast<std::int64_t>(cells.size()));
      r.Add("grid_measure", Scalar(eps * static_cast<long>(cells.size())));
      r.Add("measure", a.Measure());
      output.Emit(r);
    } else if (counterexample->parsed()) {
      const CounterexampleReport c = CheckCounterexample(lambda);
      output.Track(c.verdict);
      output.Emit(ToRecords(c), true);
    } else if (probe->parsed()) {
      const auto a = ParseIntervalSet(s1), b = ParseIntervalSet(s2),
                 e = ParseIntervalSet(s3), f = ParseIntervalSet(s4);
      Record r;
      r.Add("eps_prime", ParseScalar(eps_prime));
      r.Append(ToRecord(StabilityProbe(a, b, e, f, ParseScalar(eps_prime))));
      output.Emit(r);
    } else if (sweep->parsed()) {
      SweepSpec spec;
      spec.family = family;
      spec.check = check;
      spec.grid = ParseGrid(grid);
      if (grid.empty() && family == "random") spec.grid = {Scalar(3)};
      spec.trials = trials;
      spec.seed = seed;
      spec.eps_prime = ParseScalar(eps_prime);
      output.Emit(RunSweep(spec), true);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return output.violated ? 3 : 0;
}

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

#include "rieszlab/sweep.h"

#include <stdexcept>

#include "rieszlab/additive.h"
#include "rieszlab/generators.h"
#include "rieszlab/riesz_sobolev.h"

namespace rieszlab {
namespace {

IntervalSet RandomSet(Rng& rng, int max_components) {
  GenConfig cfg;
  cfg.seed = rng.Next();
  cfg.n_components = static_cast<int>(rng.Between(1, max_components));
  cfg.scale = std::max(2, max_components);
  cfg.denominator_bound = 12;
  return GenRandomSet(cfg);
}

std::vector<Record> GapSweep(const SweepSpec& spec, const std::string& check) {
  std::vector<Record> rows;
  std::int64_t trial = 0;
  for (const auto& s : spec.grid) {
    const GapFamily g = GenGapFamily(s);
    Record row;
    row.Add("trial", trial++).Add("s", s);
    if (check == "probe") {
      row.Append(ToRecord(StabilityProbe(g.a, g.b, g.e, g.f, spec.eps_prime)));
    } else {
      row.Append(ToRecord(RsDeficit(g.a, g.b, g.e)));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<Record> RandomSweep(const SweepSpec& spec, const std::string& check) {
  std::vector<Record> rows;
  std::uint64_t trial = 0;
  for (const auto& g : spec.grid) {
    if (g.get_den() != 1 || g < 1 || g > 1000) {
      throw std::invalid_argument("random family grid values are component counts");
    }
    const int max_components = static_cast<int>(g.get_num().get_si());
    for (int i = 0; i < spec.trials; ++i, ++trial) {
      const std::uint64_t seed = DeriveSeed(spec.seed, trial);
      Rng rng(seed);
      Record row;
      row.Add("trial", static_cast<std::int64_t>(trial))
          .Add("seed", std::to_string(seed))
          .Add("max_components", std::int64_t{max_components});
      const IntervalSet a = RandomSet(rng, max_components);
      row.Add("A", ToString(a));
      if (check == "keystone") {
        row.Append(ToRecord(KeystoneCheck(a)));
      } else {
        const IntervalSet b = RandomSet(rng, max_components);
        const IntervalSet c = RandomSet(rng, max_components);
        row.Add("B", ToString(b)).Add("C", ToString(c));
        row.Append(ToRecord(RsDeficit(a, b, c)));
      }
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

Scalar ParseTrimmed(std::string_view text) {
  const auto first = text.find_first_not_of(" \t");
  if (first == std::string_view::npos) return ParseScalar(text);
  const auto last = text.find_last_not_of(" \t");
  return ParseScalar(text.substr(first, last - first + 1));
}

}  // namespace

std::vector<Record> RunSweep(const SweepSpec& spec) {
  if (spec.family == "gap") {
    const std::string check = spec.check.empty() ? "probe" : spec.check;
    if (check != "probe" && check != "deficit") {
      throw std::invalid_argument("gap family supports checks probe|deficit, not '" +
                                  check + "'");
    }
    return GapSweep(spec, check);
  }
  if (spec.family == "random") {
    const std::string check = spec.check.empty() ? "deficit" : spec.check;
    if (check != "deficit" && check != "keystone") {
      throw std::invalid_argument(
          "random family supports checks deficit|keystone, not '" + check + "'");
    }
    if (spec.trials < 0) throw std::invalid_argument("negative trial count");
    return RandomSweep(spec, check);
  }
  throw std::invalid_argument("unknown sweep family '" + spec.family + "'");
}

std::vector<Scalar> ParseGrid(std::string_view text) {
  std::vector<Scalar> grid;
  if (text.empty()) return grid;
  if (text.find(':') != std::string_view::npos) {
    const auto first = text.find(':');
    const auto second = text.find(':', first + 1);
    if (second == std::string_view::npos) {
      throw ParseError("range grid must be start:step:stop");
    }
    const Scalar start = ParseTrimmed(text.substr(0, first));
    const Scalar step = ParseTrimmed(text.substr(first + 1, second - first - 1));
    const Scalar stop = ParseTrimmed(text.substr(second + 1));
    if (!(step > 0)) throw ParseError("range grid step must be positive");
    for (Scalar v = start; v <= stop; v += step) grid.push_back(v);
    return grid;
  }
  while (true) {
    const auto comma = text.find(',');
    grid.push_back(ParseTrimmed(text.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return grid;
}

}  // namespace rieszlab

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

#ifndef RIESZLAB_SWEEP_H_
#define RIESZLAB_SWEEP_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "rieszlab/report.h"
#include "rieszlab/scalar.h"

namespace rieszlab {

// A generator, a parameter grid, and the check applied to each trial.
//
//   family "gap":    grid holds gap widths s; one row per s.
//                    checks: "probe" (default), "deficit" (of A, B, E).
//   family "random": grid holds maximum component counts; `trials` rows per
//                    grid point, each with its own derived seed.
//                    checks: "deficit" (default), "keystone".
struct SweepSpec {
  std::string family = "gap";
  std::string check;  // empty selects the family default
  std::vector<Scalar> grid;
  int trials = 1;
  std::uint64_t seed = 0;
  Scalar eps_prime = Scalar(1, 10);
};

// Rows come back in grid order (then trial order). Throws
// std::invalid_argument on unknown family/check names.
std::vector<Record> RunSweep(const SweepSpec& spec);

// Comma-separated rationals, or "start:step:stop" inclusive. Empty text is
// an empty grid.
std::vector<Scalar> ParseGrid(std::string_view text);

}  // namespace rieszlab

#endif  // RIESZLAB_SWEEP_H_

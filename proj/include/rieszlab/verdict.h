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

#ifndef RIESZLAB_VERDICT_H_
#define RIESZLAB_VERDICT_H_

#include <string_view>

namespace rieszlab {

// Outcome of an exact check of a stated inequality or inclusion.
//   kInapplicable: the premises do not hold, nothing is asserted.
//   kReported:     values computed, but no provable bound applies.
//   kHolds:        every asserted bound was verified exactly.
//   kViolated:     an asserted bound failed. For a theorem this is a bug.
enum class Verdict { kInapplicable, kReported, kHolds, kViolated };

constexpr std::string_view ToString(Verdict v) {
  switch (v) {
    case Verdict::kInapplicable:
      return "inapplicable";
    case Verdict::kReported:
      return "reported";
    case Verdict::kHolds:
      return "holds";
    case Verdict::kViolated:
      return "violated";
  }
  return "?";
}

}  // namespace rieszlab

#endif  // RIESZLAB_VERDICT_H_

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

#ifndef RIESZLAB_REPORT_H_
#define RIESZLAB_REPORT_H_

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "json.hpp"
#include "rieszlab/additive.h"
#include "rieszlab/generators.h"
#include "rieszlab/riesz_sobolev.h"
#include "rieszlab/scalar.h"

namespace rieszlab {

// Flat, ordered record. Scalars serialize as exact "p/q" strings with a
// "<key>_float" shadow holding a 12-digit approximation.
// An absent optional scalar is null in both columns.
using FieldValue = std::variant<std::monostate, bool, std::int64_t, std::string,
                                Scalar, std::optional<Scalar>>;

class Record {
 public:
  Record& Add(std::string key, FieldValue value) {
    fields_.emplace_back(std::move(key), std::move(value));
    return *this;
  }
  Record& Append(const Record& other);

  const std::vector<std::pair<std::string, FieldValue>>& fields() const {
    return fields_;
  }

 private:
  std::vector<std::pair<std::string, FieldValue>> fields_;
};

Record ToRecord(const DeficitReport& r);
Record ToRecord(const ProbeReport& r);
Record ToRecord(const StabilityGapReport& r);
Record ToRecord(const LevelSetDeficitReport& r);
Record ToRecord(const InclusionReport& r);
Record ToRecord(const NearIntervalReport& r);
Record ToRecord(const KeystoneReport& r);
Record ToRecord(const FreimanReport& r);
std::vector<Record> ToRecords(const CounterexampleReport& r);

nlohmann::ordered_json ToJson(const Record& record);

// One object, or an array when `as_array`. Output ends with a newline.
void WriteJson(std::ostream& out, const std::vector<Record>& records,
               bool as_array);

// Header from the union of keys in first-seen order; absent and null fields
// are empty cells. Cells containing commas or quotes are quoted.
void WriteCsv(std::ostream& out, const std::vector<Record>& records);

}  // namespace rieszlab

#endif  // RIESZLAB_REPORT_H_

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

#include "rieszlab/report.h"

#include <algorithm>
#include <map>

namespace rieszlab {

Record& Record::Append(const Record& other) {
  fields_.insert(fields_.end(), other.fields().begin(), other.fields().end());
  return *this;
}

Record ToRecord(const DeficitReport& r) {
  Record out;
  out.Add("a", r.a)
      .Add("b", r.b)
      .Add("c", r.c)
      .Add("pairing", r.pairing_value)
      .Add("theta", r.theta_value)
      .Add("deficit", r.deficit)
      .Add("delta", r.delta)
      .Add("burchard_admissible", r.burchard_admissible);
  return out;
}

Record ToRecord(const ProbeReport& r) {
  Record out;
  out.Add("a_measure", r.a_measure)
      .Add("b_measure", r.b_measure)
      .Add("e_measure", r.e_measure)
      .Add("f_measure", r.f_measure)
      .Add("alpha", r.alpha)
      .Add("beta", r.beta)
      .Add("delta1", r.delta1)
      .Add("delta2", r.delta2)
      .Add("window_ok", r.window_ok)
      .Add("best_interval", ToString(r.best_interval))
      .Add("epsilon", r.epsilon)
      .Add("s_alpha_measure", r.s_alpha_measure)
      .Add("s_beta_measure", r.s_beta_measure);
  return out;
}

Record ToRecord(const StabilityGapReport& r) {
  Record out;
  out.Add("window_ok", r.window_ok)
      .Add("middle_regime", r.middle_regime)
      .Add("alpha", r.alpha)
      .Add("deficit", r.deficit)
      .Add("delta", r.delta)
      .Add("s_alpha", ToString(r.s_alpha))
      .Add("s_alpha_measure", r.s_alpha_measure)
      .Add("e_minus_s_alpha", r.e_minus_s)
      .Add("s_alpha_minus_e", r.s_minus_e)
      .Add("symmetric_difference", r.symmetric_difference)
      .Add("union_excess", r.union_excess)
      .Add("verdict", std::string(ToString(r.verdict)));
  return out;
}

Record ToRecord(const LevelSetDeficitReport& r) {
  Record out;
  out.Add("window_ok", r.window_ok)
      .Add("alpha", r.alpha)
      .Add("delta", r.delta)
      .Add("s_alpha_measure", r.s_alpha_measure)
      .Add("measure_gap", r.measure_gap)
      .Add("s_alpha_deficit", r.s_alpha_deficit)
      .Add("measure_gap_scaled_sq", r.measure_gap_scaled_sq)
      .Add("deficit_scaled_sq", r.deficit_scaled_sq)
      .Add("verdict", std::string(ToString(r.verdict)));
  return out;
}

Record ToRecord(const InclusionReport& r) {
  Record out;
  out.Add("beta", r.beta)
      .Add("all_nonempty", r.all_nonempty)
      .Add("alternating_sum", ToString(r.alternating_sum))
      .Add("s_beta", ToString(r.s_beta))
      .Add("inclusion_holds", r.inclusion_holds)
      .Add("s_beta_measure", r.s_beta_measure)
      .Add("sum_of_measures", r.sum_of_measures)
      .Add("measure_bound_holds", r.measure_bound_holds)
      .Add("verdict", std::string(ToString(r.verdict)));
  return out;
}

Record ToRecord(const NearIntervalReport& r) {
  Record out;
  out.Add("k", std::int64_t{r.k})
      .Add("alpha", r.alpha)
      .Add("beta", r.beta)
      .Add("eps", r.eps)
      .Add("max_measure", r.max_measure)
      .Add("s_alpha_measure", r.s_alpha_measure)
      .Add("s_beta_measure", r.s_beta_measure)
      .Add("preconditions", r.preconditions)
      .Add("hypotheses", r.hypotheses)
      .Add("hull_length", r.hull_length)
      .Add("hull_bound", r.hull_bound)
      .Add("sharp_hull_bound", r.sharp_hull_bound)
      .Add("sharp_hull_bound_holds", r.sharp_hull_bound_holds)
      .Add("verdict", std::string(ToString(r.verdict)));
  return out;
}

Record ToRecord(const KeystoneReport& r) {
  Record out;
  out.Add("measure", r.measure)
      .Add("sumset_measure", r.sumset_measure)
      .Add("premise", r.premise)
      .Add("hull_length", r.hull_length)
      .Add("bound", r.bound)
      .Add("verdict", std::string(ToString(r.verdict)));
  return out;
}

Record ToRecord(const FreimanReport& r) {
  Record out;
  out.Add("size", r.size)
      .Add("sumset_size", r.sumset_size)
      .Add("threshold", r.threshold)
      .Add("premise", r.premise)
      .Add("cover", r.cover ? FieldValue(ToString(*r.cover))
                            : FieldValue(std::monostate{}))
      .Add("cover_length", r.cover ? FieldValue(r.cover->length)
                                   : FieldValue(std::monostate{}))
      .Add("bound", r.bound)
      .Add("verdict", std::string(ToString(r.verdict)));
  return out;
}

std::vector<Record> ToRecords(const CounterexampleReport& r) {
  std::vector<Record> rows;
  for (const auto& row : r.rows) {
    Record out;
    out.Add("lambda", std::int64_t{r.lambda})
        .Add("t", row.t)
        .Add("measure", row.measure)
        .Add("predicted", row.predicted)
        .Add("interval_measure", row.interval_measure)
        .Add("interval_predicted", row.interval_predicted)
        .Add("ratio_at_zero", r.ratio)
        .Add("verdict", std::string(ToString(r.verdict)));
    rows.push_back(std::move(out));
  }
  return rows;
}

namespace {

// Flattened (column, cell) pairs shared by the JSON and CSV writers.
struct Cell {
  std::string key;
  nlohmann::ordered_json json;
  std::string text;
};

std::vector<Cell> Flatten(const Record& record) {
  std::vector<Cell> cells;
  for (const auto& [key, value] : record.fields()) {
    std::visit(
        [&](const auto& v) {
          using T = std::decay_t<decltype(v)>;
          if constexpr (std::is_same_v<T, std::monostate>) {
            cells.push_back({key, nullptr, ""});
          } else if constexpr (std::is_same_v<T, bool>) {
            cells.push_back({key, v, v ? "true" : "false"});
          } else if constexpr (std::is_same_v<T, std::int64_t>) {
            cells.push_back({key, v, std::to_string(v)});
          } else if constexpr (std::is_same_v<T, std::string>) {
            cells.push_back({key, v, v});
          } else if constexpr (std::is_same_v<T, Scalar>) {
            cells.push_back({key, ToString(v), ToString(v)});
            cells.push_back({key + "_float", ToDouble12(v), ToDecimalString(v)});
          } else if (v) {
            cells.push_back({key, ToString(*v), ToString(*v)});
            cells.push_back({key + "_float", ToDouble12(*v), ToDecimalString(*v)});
          } else {
            cells.push_back({key, nullptr, ""});
            cells.push_back({key + "_float", nullptr, ""});
          }
        },
        value);
  }
  return cells;
}

std::string CsvEscape(const std::string& text) {
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string out = "\"";
  for (char c : text) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

nlohmann::ordered_json ToJson(const Record& record) {
  nlohmann::ordered_json obj = nlohmann::ordered_json::object();
  for (auto& cell : Flatten(record)) obj[cell.key] = std::move(cell.json);
  return obj;
}

void WriteJson(std::ostream& out, const std::vector<Record>& records,
               bool as_array) {
  if (as_array) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& r : records) arr.push_back(ToJson(r));
    out << arr.dump(2) << '\n';
    return;
  }
  out << (records.empty() ? nlohmann::ordered_json::object() : ToJson(records.front()))
             .dump(2)
      << '\n';
}

void WriteCsv(std::ostream& out, const std::vector<Record>& records) {
  std::vector<std::vector<Cell>> rows;
  std::vector<std::string> header;
  for (const auto& r : records) {
    rows.push_back(Flatten(r));
    for (const auto& cell : rows.back()) {
      if (std::find(header.begin(), header.end(), cell.key) == header.end()) {
        header.push_back(cell.key);
      }
    }
  }
  for (std::size_t i = 0; i < header.size(); ++i) {
    out << (i ? "," : "") << CsvEscape(header[i]);
  }
  out << '\n';
  for (const auto& row : rows) {
    std::map<std::string, const Cell*> by_key;
    for (const auto& cell : row) by_key[cell.key] = &cell;
    for (std::size_t i = 0; i < header.size(); ++i) {
      if (i) out << ',';
      auto it = by_key.find(header[i]);
      if (it != by_key.end()) out << CsvEscape(it->second->text);
    }
    out << '\n';
  }
}

}  // namespace rieszlab

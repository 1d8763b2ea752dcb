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

#include "rieszlab/integer_set.h"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "rieszlab/scalar.h"

namespace rieszlab {

IntegerSet::IntegerSet(std::initializer_list<std::int64_t> elements)
    : IntegerSet(std::vector<std::int64_t>(elements)) {}

IntegerSet::IntegerSet(std::vector<std::int64_t> elements)
    : elements_(std::move(elements)) {
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()),
                  elements_.end());
}

bool IntegerSet::Contains(std::int64_t x) const {
  return std::binary_search(elements_.begin(), elements_.end(), x);
}

IntegerSet ParseIntegerSet(std::string_view text) {
  std::string compact;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) compact += c;
  }
  if (compact.size() < 2 || compact.front() != '{' || compact.back() != '}') {
    throw ParseError("integer set literal must be braced: '" +
                     std::string(text) + "'");
  }
  std::string_view body(compact);
  body = body.substr(1, body.size() - 2);
  std::vector<std::int64_t> out;
  while (!body.empty()) {
    auto comma = body.find(',');
    std::string_view item = body.substr(0, comma);
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (ec != std::errc() || ptr != item.data() + item.size() || item.empty()) {
      throw ParseError("bad integer '" + std::string(item) + "' in '" +
                       std::string(text) + "'");
    }
    out.push_back(value);
    if (comma == std::string_view::npos) break;
    body.remove_prefix(comma + 1);
    if (body.empty()) throw ParseError("trailing comma in '" + std::string(text) + "'");
  }
  return IntegerSet(std::move(out));
}

std::string ToString(const IntegerSet& set) {
  std::string out = "{";
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(set.elements()[i]);
  }
  return out + "}";
}

}  // namespace rieszlab

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

#ifndef RIESZLAB_INTEGER_SET_H_
#define RIESZLAB_INTEGER_SET_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace rieszlab {

// Finite set of integers, stored sorted and duplicate-free.
class IntegerSet {
 public:
  IntegerSet() = default;
  IntegerSet(std::initializer_list<std::int64_t> elements);
  explicit IntegerSet(std::vector<std::int64_t> elements);

  const std::vector<std::int64_t>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  bool empty() const { return elements_.empty(); }
  bool Contains(std::int64_t x) const;
  std::int64_t min() const { return elements_.front(); }
  std::int64_t max() const { return elements_.back(); }

  friend bool operator==(const IntegerSet&, const IntegerSet&) = default;

 private:
  std::vector<std::int64_t> elements_;
};

// Brace literal, e.g. "{0,2,4,8}" or "{}".
IntegerSet ParseIntegerSet(std::string_view text);
std::string ToString(const IntegerSet& set);

}  // namespace rieszlab

#endif  // RIESZLAB_INTEGER_SET_H_

// Copyright 2026 The Monopath Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MONOPATH_BIGINT_HPP
#define MONOPATH_BIGINT_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace monopath {

/**
 * Unsigned arbitrary-precision counter.  Path counts grow like (1+p)^n and
 * overflow 64 bits already for moderate graphs, and the counting recurrences
 * only ever add, so this supports exactly that: addition, comparison and
 * conversions.
 */
class BigCount {
 public:
  BigCount() : limbs_{0} {}
  explicit BigCount(std::uint64_t v);

  BigCount& operator+=(const BigCount& other);
  friend BigCount operator+(BigCount a, const BigCount& b) { return a += b; }

  bool is_zero() const { return limbs_.size() == 1 && limbs_[0] == 0; }
  bool fits_uint64() const { return limbs_.size() <= 2; }
  std::uint64_t to_uint64() const;  // valid only when fits_uint64()
  double to_double() const;
  std::string to_string() const;  // decimal

  friend bool operator==(const BigCount& a, const BigCount& b) {
    return a.limbs_ == b.limbs_;
  }
  friend bool operator<(const BigCount& a, const BigCount& b);

 private:
  // Base 2^32, little-endian, no leading zero limbs (value 0 is {0}).
  std::vector<std::uint32_t> limbs_;
};

}  // namespace monopath

#endif  // MONOPATH_BIGINT_HPP

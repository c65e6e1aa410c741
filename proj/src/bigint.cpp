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

#include "monopath/bigint.hpp"

#include <algorithm>

namespace monopath {

BigCount::BigCount(std::uint64_t v) {
  limbs_.push_back(static_cast<std::uint32_t>(v));
  if (v >> 32) limbs_.push_back(static_cast<std::uint32_t>(v >> 32));
}

BigCount& BigCount::operator+=(const BigCount& other) {
  const std::size_t n = std::max(limbs_.size(), other.limbs_.size());
  limbs_.resize(n, 0);
  std::uint64_t carry = 0;
  for (std::size_t i = 0; i < n; ++i) {
    std::uint64_t s = carry + limbs_[i];
    if (i < other.limbs_.size()) s += other.limbs_[i];
    limbs_[i] = static_cast<std::uint32_t>(s);
    carry = s >> 32;
  }
  if (carry) limbs_.push_back(static_cast<std::uint32_t>(carry));
  return *this;
}

std::uint64_t BigCount::to_uint64() const {
  std::uint64_t v = limbs_[0];
  if (limbs_.size() > 1) v |= static_cast<std::uint64_t>(limbs_[1]) << 32;
  return v;
}

double BigCount::to_double() const {
  double v = 0.0;
  for (std::size_t i = limbs_.size(); i-- > 0;) v = v * 4294967296.0 + limbs_[i];
  return v;
}

std::string BigCount::to_string() const {
  if (is_zero()) return "0";
  std::vector<std::uint32_t> work(limbs_);
  std::string digits;
  while (!(work.size() == 1 && work[0] == 0)) {
    // divide by 10^9, collecting the remainder as the next digit block
    std::uint64_t rem = 0;
    for (std::size_t i = work.size(); i-- > 0;) {
      const std::uint64_t cur = (rem << 32) | work[i];
      work[i] = static_cast<std::uint32_t>(cur / 1000000000ULL);
      rem = cur % 1000000000ULL;
    }
    while (work.size() > 1 && work.back() == 0) work.pop_back();
    std::string block = std::to_string(rem);
    const bool last = work.size() == 1 && work[0] == 0;
    if (!last) block.insert(block.begin(), 9 - block.size(), '0');
    digits.insert(0, block);
  }
  return digits;
}

bool operator<(const BigCount& a, const BigCount& b) {
  if (a.limbs_.size() != b.limbs_.size()) return a.limbs_.size() < b.limbs_.size();
  return std::lexicographical_compare(a.limbs_.rbegin(), a.limbs_.rend(),
                                      b.limbs_.rbegin(), b.limbs_.rend());
}

}  // namespace monopath

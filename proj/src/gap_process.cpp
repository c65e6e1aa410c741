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

#include "monopath/gap_process.hpp"

#include <cassert>
#include <cmath>
#include <stdexcept>

#include "monopath/samplers.hpp"

namespace monopath {
namespace {

void check_p(double p, const char* where) {
  if (!(p > 0.0) || !(p < 1.0))
    throw std::invalid_argument(std::string(where) + ": p must be in (0, 1)");
}

std::int64_t budget_count(double a, double p, const char* where) {
  check_p(p, where);
  if (!(a > 0.0)) throw std::invalid_argument(std::string(where) + ": a must be > 0");
  const std::int64_t m = static_cast<std::int64_t>(std::floor(a / p));
  if (m < 1)
    throw std::invalid_argument(std::string(where) + ": floor(a/p) must be >= 1");
  return m;
}

// The i-th gap: Geometric(q_i) with log(1 - q_i) = i log(1-p) exactly, so the
// inversion never needs q_i itself.
inline std::int64_t sample_gap(std::int64_t i, double log1m_p, RngStream& stream) {
  const double r =
      std::ceil(std::log(stream.uniform()) / (static_cast<double>(i) * log1m_p));
  return r < 1.0 ? 1 : static_cast<std::int64_t>(r);
}

}  // namespace

GapTrial sample_gap_trial(double a, double p, RngStream& stream) {
  const std::int64_t m = budget_count(a, p, "sample_gap_trial");
  const double log1m_p = std::log1p(-p);
  GapTrial trial;
  trial.p = p;
  trial.a = a;
  trial.gaps.reserve(static_cast<std::size_t>(m));
  trial.positions.reserve(static_cast<std::size_t>(m) + 1);
  trial.positions.push_back(1);
  std::int64_t pos = 1;
  double sum = 0.0;
  for (std::int64_t i = 1; i <= m; ++i) {
    const std::int64_t x = sample_gap(i, log1m_p, stream);
    trial.gaps.push_back(x);
    pos += x;
    trial.positions.push_back(pos);
    sum += static_cast<double>(x);
  }
  trial.exploration_stat = p * sum + std::log(p);
  return trial;
}

bool simulate_reach(std::int64_t n, double p, RngStream& stream) {
  if (n < 2) throw std::invalid_argument("simulate_reach: n must be >= 2");
  check_p(p, "simulate_reach");
  const double log1m_p = std::log1p(-p);
  std::int64_t pos = 1;
  for (std::int64_t i = 1; pos < n; ++i) pos += sample_gap(i, log1m_p, stream);
  return pos == n;
}

double exploration_statistic(double a, double p, RngStream& stream) {
  const std::int64_t m = budget_count(a, p, "exploration_statistic");
  const double log1m_p = std::log1p(-p);
  double sum = 0.0;
  for (std::int64_t i = 1; i <= m; ++i)
    sum += static_cast<double>(sample_gap(i, log1m_p, stream));
  return p * sum + std::log(p);  // log(p) = -log(1/p)
}

double joint_exploration_increment(double a1, double a2, double p,
                                   RngStream& stream) {
  const std::int64_t m1 = budget_count(a1, p, "joint_exploration_increment");
  if (a1 > a2)
    throw std::invalid_argument("joint_exploration_increment: need a1 <= a2");
  const std::int64_t m2 = static_cast<std::int64_t>(std::floor(a2 / p));
  const double log1m_p = std::log1p(-p);
  // Gaps with i <= m1 cancel in statistic(a2) - statistic(a1); only the
  // shared sequence's fresh section contributes.
  double sum = 0.0;
  for (std::int64_t i = m1 + 1; i <= m2; ++i)
    sum += static_cast<double>(sample_gap(i, log1m_p, stream));
  return p * sum;
}

double sample_rest_term(double a, double p, RngStream& stream) {
  const std::int64_t m = budget_count(a, p, "sample_rest_term");
  const double log1m_p = std::log1p(-p);
  double rest = 0.0;
  for (std::int64_t i = 1; i <= m; ++i) {
    const double id = static_cast<double>(i);
    const double q = -std::expm1(id * log1m_p);  // 1 - (1-p)^i without cancellation
    const double u = stream.uniform();
    const double y = -std::log(u);
    const double r = std::ceil(std::log(u) / (id * log1m_p));
    const double x = r < 1.0 ? 1.0 : r;
    assert(std::abs(q * x - y) <=
           (std::abs(q / (-id * log1m_p) - 1.0) * y + q) * (1.0 + 1e-12) + 1e-12);
    rest += p * (1.0 / q - 1.0 / (id * p)) * y + (p / q) * (q * x - y);
  }
  return rest;
}

double harmonic_exponential_statistic(double a, double p, RngStream& stream) {
  const std::int64_t m = budget_count(a, p, "harmonic_exponential_statistic");
  double sum = 0.0;
  for (std::int64_t i = 1; i <= m; ++i)
    sum += sample_exponential(stream) / static_cast<double>(i);
  return sum + std::log(p);
}

BigCount sample_path_count(double a, double p, RngStream& stream) {
  const std::int64_t m = budget_count(a, p, "sample_path_count");
  std::vector<BigCount> counts;
  counts.reserve(static_cast<std::size_t>(m));
  counts.push_back(BigCount(1));  // vertex 1, empty path
  const double log1m_p = std::log1p(-p);
  while (static_cast<std::int64_t>(counts.size()) < m) {
    // Next candidate vertex: Bernoulli(p) edge from each currently reachable
    // vertex, visited by geometric skips so the work is O(1 + p |reachable|).
    BigCount c;
    std::size_t slot = 0;
    for (;;) {
      const double r = std::ceil(std::log(stream.uniform()) / log1m_p);
      slot += static_cast<std::size_t>(r < 1.0 ? 1.0 : r);
      if (slot > counts.size()) break;
      c += counts[slot - 1];
    }
    if (!c.is_zero()) counts.push_back(std::move(c));
  }
  assert(!counts.back().is_zero());
  return counts.back();
}

}  // namespace monopath

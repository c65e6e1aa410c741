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

#include "monopath/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace monopath {

SummaryStats summarize(std::span<const double> values) {
  const std::int64_t n = static_cast<std::int64_t>(values.size());
  if (n < 2) throw std::invalid_argument("summarize: need at least 2 values");
  double mean = 0.0;
  double m2 = 0.0;
  std::int64_t i = 0;
  for (double x : values) {
    ++i;
    const double d = x - mean;
    mean += d / static_cast<double>(i);
    m2 += d * (x - mean);
  }
  const double variance = m2 / static_cast<double>(n - 1);
  return {mean, variance, std::sqrt(variance / static_cast<double>(n)), n};
}

EmpiricalSample::EmpiricalSample(std::vector<double> values)
    : values_(std::move(values)) {
  if (values_.empty()) throw std::invalid_argument("EmpiricalSample: empty sample");
  std::sort(values_.begin(), values_.end());
}

double ks_distance(const EmpiricalSample& sample,
                   const std::function<double(double)>& cdf) {
  const auto& xs = sample.sorted_values();
  const double n = static_cast<double>(xs.size());
  double d = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double f = cdf(xs[i]);
    d = std::max(d, std::abs(static_cast<double>(i + 1) / n - f));
    d = std::max(d, std::abs(static_cast<double>(i) / n - f));
  }
  return d;
}

double ks_distance_discrete(const EmpiricalSample& sample,
                            const std::function<double(double)>& cdf) {
  const auto& xs = sample.sorted_values();
  const double n = static_cast<double>(xs.size());
  double d = 0.0;
  std::size_t i = 0;
  while (i < xs.size()) {
    std::size_t j = i;
    while (j + 1 < xs.size() && xs[j + 1] == xs[i]) ++j;
    // empirical CDF at the atom and just below it vs the reference ditto
    d = std::max(d, std::abs(static_cast<double>(j + 1) / n - cdf(xs[i])));
    d = std::max(d, std::abs(static_cast<double>(i) / n - cdf(xs[i] - 1.0)));
    i = j + 1;
  }
  return d;
}

double tv_distance_discrete(const std::map<std::int64_t, double>& empirical_pmf,
                            const std::function<double(std::int64_t)>& reference_pmf,
                            std::int64_t support_cap) {
  double total = 0.0;
  for (const auto& [k, f] : empirical_pmf) {
    (void)k;
    total += f;
  }
  if (std::abs(total - 1.0) > 1e-12)
    throw std::invalid_argument("tv_distance_discrete: empirical pmf not normalized");

  std::int64_t lo = 1;
  if (!empirical_pmf.empty()) lo = std::min(lo, empirical_pmf.begin()->first);

  double sum_abs = 0.0;
  double emp_head = 0.0;
  double ref_head = 0.0;
  for (std::int64_t k = lo; k <= support_cap; ++k) {
    const auto it = empirical_pmf.find(k);
    const double pe = it == empirical_pmf.end() ? 0.0 : it->second;
    const double pr = reference_pmf(k);
    sum_abs += std::abs(pe - pr);
    emp_head += pe;
    ref_head += pr;
  }
  return 0.5 * sum_abs + 0.5 * std::abs((1.0 - emp_head) - (1.0 - ref_head));
}

}  // namespace monopath

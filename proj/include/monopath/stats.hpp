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

#ifndef MONOPATH_STATS_HPP
#define MONOPATH_STATS_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <vector>

namespace monopath {

struct SummaryStats {
  double mean;
  double variance;   // unbiased (n-1 divisor)
  double std_error;  // sqrt(variance / n)
  std::int64_t count;
};

/// Single-pass Welford summary; rejects fewer than 2 values.
SummaryStats summarize(std::span<const double> values);

/// A sample held in sorted order, as needed by the distance statistics.
class EmpiricalSample {
 public:
  explicit EmpiricalSample(std::vector<double> values);  // sorts; rejects empty
  const std::vector<double>& sorted_values() const { return values_; }
  std::int64_t count() const { return static_cast<std::int64_t>(values_.size()); }

 private:
  std::vector<double> values_;
};

/**
 * Two-sided Kolmogorov-Smirnov distance against a continuous CDF:
 * max over sorted sample points of max(|i/n - F(x_i)|, |(i-1)/n - F(x_i)|).
 * The asymptotic 1% critical value used throughout the test suites is
 * 1.63/sqrt(n).
 */
double ks_distance(const EmpiricalSample& sample,
                   const std::function<double(double)>& cdf);

/**
 * KS distance for references supported on the integers.  The continuous-case
 * corner formula is wrong there (it charges each atom its full mass); the
 * correct two-sided statistic compares the step functions at every lattice
 * jump, which needs F evaluated at x and at x-1.
 */
double ks_distance_discrete(const EmpiricalSample& sample,
                            const std::function<double(double)>& cdf);

/**
 * Total-variation distance between an empirical PMF (map value -> frequency,
 * frequencies summing to 1 within 1e-12) and a reference PMF, compared on
 * values <= support_cap with the remaining mass on both sides folded into a
 * single tail bucket.
 */
double tv_distance_discrete(const std::map<std::int64_t, double>& empirical_pmf,
                            const std::function<double(std::int64_t)>& reference_pmf,
                            std::int64_t support_cap);

}  // namespace monopath

#endif  // MONOPATH_STATS_HPP

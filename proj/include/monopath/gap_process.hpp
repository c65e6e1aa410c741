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

#ifndef MONOPATH_GAP_PROCESS_HPP
#define MONOPATH_GAP_PROCESS_HPP

#include <cstdint>
#include <vector>

#include "monopath/bigint.hpp"
#include "monopath/rng.hpp"

namespace monopath {

// Monte Carlo kernels built on the gap representation of the reachable set:
// with vertex 1 at position 1, the distance from the i-th to the (i+1)-th
// reachable vertex is Geometric(1 - (1-p)^i), all gaps independent.  Each
// kernel consumes one single-owner stream and is pure given that stream.

/**
 * One recorded realization: gaps X_1..X_m with m = floor(a/p), the positions
 * 1, 1 + X_1, 1 + X_1 + X_2, ... of the reachable vertices, and the centered
 * exploration statistic p * sum(X_i) - log(1/p).
 */
struct GapTrial {
  double p = 0.0;
  double a = 0.0;
  std::vector<std::int64_t> gaps;
  std::vector<std::int64_t> positions;  // positions[0] = 1; one longer than gaps
  double exploration_stat = 0.0;
};

GapTrial sample_gap_trial(double a, double p, RngStream& stream);

/**
 * True iff some reachable vertex lands exactly at position n.  Equivalent in
 * law to the vertex-by-vertex Bernoulli chain but costs O(#reachable
 * vertices) instead of O(n).
 */
bool simulate_reach(std::int64_t n, double p, RngStream& stream);

/// p * sum_{i=1}^{floor(a/p)} X_i - log(1/p); converges in law (p -> 0) to a
/// standard Gumbel shifted by log(e^a - 1).
double exploration_statistic(double a, double p, RngStream& stream);

/**
 * Increment of the exploration statistic between budgets a1 <= a2 on one
 * shared gap sequence: p * sum_{floor(a1/p) < i <= floor(a2/p)} X_i.
 * Converges in probability to log((e^{a2}-1)/(e^{a1}-1)).
 */
double joint_exploration_increment(double a1, double a2, double p,
                                   RngStream& stream);

/**
 * The coupling rest term
 *   R_p(a) = sum p (1/q_i - 1/(ip)) Y_i + sum (p/q_i)(q_i X_i - Y_i)
 * over i <= floor(a/p), with (X_i, Y_i) driven by one shared uniform each and
 * q_i = 1 - (1-p)^i.  Mean tends to log(e^a - 1) - log a, variance to 0.
 */
double sample_rest_term(double a, double p, RngStream& stream);

/// sum_{i=1}^{floor(a/p)} Y_i / i - log(1/p) with fresh Exp(1) variates;
/// converges in law to a standard Gumbel shifted by log a.
double harmonic_exponential_statistic(double a, double p, RngStream& stream);

/**
 * Number of monotone paths from vertex 1 to the floor(a/p)-th reachable
 * vertex.  Vertices are generated sequentially; each new vertex samples its
 * in-edges from the current reachable set only (edges from unreachable
 * vertices cannot lie on a monotone path from 1) and inherits the sum of its
 * in-neighbours' path counts.  Always >= 1 by construction.
 */
BigCount sample_path_count(double a, double p, RngStream& stream);

}  // namespace monopath

#endif  // MONOPATH_GAP_PROCESS_HPP

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

#ifndef MONOPATH_EXACT_HPP
#define MONOPATH_EXACT_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "monopath/bigint.hpp"
#include "monopath/rng.hpp"

namespace monopath {

/**
 * Distribution of N_k, the number of vertices up to position k that are
 * reachable from vertex 1 by a monotone path.  probs[m] = P(N_k = m) for
 * m in [support_lo, support_hi]; states dropped by tail truncation are
 * accumulated in truncation_mass, so the stored mass plus truncation_mass
 * stays 1 up to rounding.
 */
struct StateDistribution {
  std::int64_t position = 1;       // k
  std::vector<double> probs;       // indexed by m directly (entry 0 unused)
  std::int64_t support_lo = 1;
  std::int64_t support_hi = 1;
  double truncation_mass = 0.0;

  double stored_mass() const;
};

/// State at k = 1: vertex 1 reaches itself, so N_1 = 1 with probability 1.
StateDistribution initial_reach_state();

/**
 * One transition k -> k+1 of the chain
 *   P(N_{k+1} = m+1 | N_k = m) = 1 - (1-p)^m,
 * dropping boundary states whose probability falls below drop_threshold.
 */
void advance_reach_state(StateDistribution& state, double p,
                         double drop_threshold = 0.0);

struct ReachProbability {
  double value;
  double truncation_mass;  // bounds the absolute error of value
};

/**
 * P_p(1 -> n) by propagating the N_k distribution to k = n-1 and applying
 * P(1 -> n) = E(1 - (1-p)^{N_{n-1}}).  With truncation_eps > 0, states below
 * truncation_eps/k are dropped at step k (the chain concentrates, so this
 * turns the O(n^2) sweep into a narrow-window one for large n).
 */
ReachProbability reach_prob_dp(std::int64_t n, double p, double truncation_eps);

/// Same, with the truncation chosen by size: exact up to n = 2e4, 1e-14 above.
ReachProbability reach_prob_dp(std::int64_t n, double p);

/**
 * Exact reachability probability by enumerating all 2^{n(n-1)/2} edge
 * subsets; the oracle for reach_prob_dp.  Only feasible for n <= 7.
 */
double brute_force_reach_prob(int n, double p);

/// Vertex-ordered directed graph: vertices 1..n, all edges (i, j) with i < j.
struct DirectedGraph {
  std::int64_t n = 0;
  std::vector<std::pair<std::int32_t, std::int32_t>> edges;
};

/// Samples the graph: each forward pair (i, j) is an edge with probability p.
DirectedGraph sample_directed_graph(std::int64_t n, double p, RngStream& stream);

/**
 * Number of monotone paths source -> target (the empty path counts when
 * source == target).  Arbitrary precision: counts reach 2^{n-2} on the
 * complete graph.
 */
BigCount count_monotone_paths(const DirectedGraph& g, std::int32_t source,
                              std::int32_t target);

/// Closed-form mean number of monotone paths 1 -> n: p (1+p)^{n-2},
/// evaluated in log space so large n cannot overflow.
double expected_path_count(std::int64_t n, double p);

}  // namespace monopath

#endif  // MONOPATH_EXACT_HPP

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

#include <cmath>
#include <vector>

#include <doctest.h>

#include "monopath/asymptotics.hpp"
#include "monopath/exact.hpp"
#include "monopath/stats.hpp"
#include "oracles.hpp"

using namespace monopath;

TEST_CASE("reach probability base cases") {
  CHECK(reach_prob_dp(1, 0.3).value == 1.0);
  CHECK(reach_prob_dp(1, 0.9).value == 1.0);
  CHECK(reach_prob_dp(2, 0.3).value == doctest::Approx(0.3).epsilon(1e-14));
  // n = 3: reach iff edge 1-3, or both 1-2 and 2-3: 1 - (1-p)(1-p^2)
  for (double p : {0.1, 0.5, 0.9}) {
    const double closed = 1.0 - (1.0 - p) * (1.0 - p * p);
    CHECK(std::abs(reach_prob_dp(3, p).value - closed) < 1e-14);
  }
  CHECK(reach_prob_dp(3, 0.5).value == doctest::Approx(0.625).epsilon(1e-14));
  CHECK_THROWS_AS(reach_prob_dp(0, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(reach_prob_dp(5, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(reach_prob_dp(5, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(reach_prob_dp(5, 0.5, -1e-9), std::invalid_argument);
}

TEST_CASE("brute force enumerator") {
  CHECK(brute_force_reach_prob(2, 0.3) == doctest::Approx(0.3).epsilon(1e-15));
  CHECK(brute_force_reach_prob(3, 0.5) == doctest::Approx(0.625).epsilon(1e-15));
  // frozen regression values, computed by this enumerator
  CHECK(brute_force_reach_prob(4, 0.5) == doctest::Approx(0.734375).epsilon(1e-15));
  CHECK(brute_force_reach_prob(5, 0.5) ==
        doctest::Approx(0.8212890625).epsilon(1e-15));
  CHECK_THROWS_AS(brute_force_reach_prob(8, 0.5), std::invalid_argument);
}

TEST_CASE("DP equals brute force for all n <= 7 on a p grid") {
  for (int n = 1; n <= 7; ++n)
    for (double p : {0.1, 0.3, 0.5, 0.7, 0.9})
      CHECK(std::abs(reach_prob_dp(n, p).value - brute_force_reach_prob(n, p)) <
            1e-12);
}

TEST_CASE("reach probability is nondecreasing in p") {
  for (std::int64_t n : {5, 23, 150}) {
    double prev = 0.0;
    for (double p = 0.02; p < 1.0; p += 0.02) {
      const double cur = reach_prob_dp(n, p).value;
      CHECK(cur >= prev - 1e-14);
      prev = cur;
    }
  }
}

TEST_CASE("state distribution stays normalized, with and without truncation") {
  const double p = 0.01;
  StateDistribution exact_state = initial_reach_state();
  StateDistribution truncated = initial_reach_state();
  for (int k = 1; k < 300; ++k) {
    advance_reach_state(exact_state, p);
    advance_reach_state(truncated, p, 1e-14 / static_cast<double>(k + 1));
    CHECK(std::abs(exact_state.stored_mass() - 1.0) < 1e-12);
    CHECK(std::abs(truncated.stored_mass() + truncated.truncation_mass - 1.0) <
          1e-12);
  }
  CHECK(exact_state.position == 300);
  CHECK(truncated.truncation_mass > 0.0);
  CHECK(truncated.support_hi - truncated.support_lo <
        exact_state.support_hi - exact_state.support_lo);
}

TEST_CASE("truncated DP error is bounded by the reported mass") {
  const ReachProbability full = reach_prob_dp(2000, 0.004);
  const ReachProbability trunc = reach_prob_dp(2000, 0.004, 1e-12);
  CHECK(full.truncation_mass == 0.0);
  CHECK(trunc.truncation_mass > 0.0);
  CHECK(std::abs(full.value - trunc.value) <= trunc.truncation_mass + 1e-15);
}

TEST_CASE("size-based default truncation kicks in above n = 20000") {
  // small n: the default is the exact sweep
  CHECK(reach_prob_dp(500, 0.012).truncation_mass == 0.0);
  // large n: the default matches an explicit 1e-14 run and bounds its own error
  const ReachProbability auto_eps = reach_prob_dp(21000, 0.0005);
  const ReachProbability explicit_eps = reach_prob_dp(21000, 0.0005, 1e-14);
  CHECK(auto_eps.value == explicit_eps.value);
  CHECK(auto_eps.truncation_mass == explicit_eps.truncation_mass);
  CHECK(auto_eps.truncation_mass > 0.0);
  const ReachProbability full = reach_prob_dp(21000, 0.0005, 0.0);
  CHECK(std::abs(full.value - auto_eps.value) <=
        auto_eps.truncation_mass + 1e-14);
}

TEST_CASE("monotone path counting") {
  DirectedGraph empty{4, {}};
  CHECK(count_monotone_paths(empty, 1, 1).to_uint64() == 1);  // empty path
  CHECK(count_monotone_paths(empty, 1, 4).is_zero());

  DirectedGraph k4{4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}};
  CHECK(count_monotone_paths(k4, 1, 4).to_uint64() == 4);
  CHECK(count_monotone_paths(k4, 2, 4).to_uint64() == 2);

  // complete forward graph on n vertices has 2^{n-2} monotone paths 1 -> n
  DirectedGraph k66{66, {}};
  for (std::int32_t i = 1; i <= 66; ++i)
    for (std::int32_t j = i + 1; j <= 66; ++j) k66.edges.push_back({i, j});
  CHECK(count_monotone_paths(k66, 1, 66).to_string() == "18446744073709551616");

  CHECK_THROWS_AS(count_monotone_paths(k4, 3, 2), std::invalid_argument);
}

TEST_CASE("expected path count closed form") {
  CHECK(expected_path_count(2, 0.37) == 0.37);
  CHECK(expected_path_count(4, 0.5) == doctest::Approx(1.125).epsilon(1e-14));
  CHECK_THROWS_AS(expected_path_count(1, 0.5), std::invalid_argument);

  // weighted enumeration over all 2^6 graphs on 4 vertices
  const double p = 0.5;
  DirectedGraph g{4, {}};
  const std::pair<std::int32_t, std::int32_t> all[] = {{1, 2}, {1, 3}, {1, 4},
                                                       {2, 3}, {2, 4}, {3, 4}};
  double mean = 0.0;
  for (int mask = 0; mask < 64; ++mask) {
    g.edges.clear();
    int bits = 0;
    for (int e = 0; e < 6; ++e)
      if (mask >> e & 1) {
        g.edges.push_back(all[e]);
        ++bits;
      }
    mean += count_monotone_paths(g, 1, 4).to_double() *
            std::pow(p, bits) * std::pow(1.0 - p, 6 - bits);
  }
  CHECK(std::abs(mean - expected_path_count(4, p)) < 1e-12);

  // no overflow at large n, and the critical-window value drifts toward 1
  double prev_gap = 2.0;
  for (std::int64_t n : {1000, 10000, 100000, 1000000}) {
    const double pc = critical_p(n, 0.0).p;
    const double value = expected_path_count(n, pc);
    CHECK(std::isfinite(value));
    const double gap = std::abs(value - 1.0);
    CHECK(gap < prev_gap);
    prev_gap = gap;
  }
}

TEST_CASE("sampled graphs have forward edges with the right density") {
  RngStream s(8, 1);
  const std::int64_t n = 50;
  std::int64_t edges = 0;
  const int reps = 400;
  for (int r = 0; r < reps; ++r) {
    const DirectedGraph g = sample_directed_graph(n, 0.1, s);
    for (const auto& [i, j] : g.edges) {
      CHECK(i >= 1);
      CHECK(i < j);
      CHECK(j <= n);
    }
    edges += static_cast<std::int64_t>(g.edges.size());
  }
  const double total_slots = static_cast<double>(reps) * (n * (n - 1) / 2);
  const double rate = static_cast<double>(edges) / total_slots;
  CHECK(std::abs(rate - 0.1) < 3.0 * std::sqrt(0.1 * 0.9 / total_slots));
}

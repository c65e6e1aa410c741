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

#include "monopath/exact.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

#include "monopath/samplers.hpp"

namespace monopath {
namespace {

void check_p(double p, const char* where) {
  if (!(p > 0.0) || !(p < 1.0))
    throw std::invalid_argument(std::string(where) + ": p must be in (0, 1)");
}

// (1-p)^m as exp(m log1p(-p)); direct powering loses all precision for the
// small p this model lives at.
inline double stay_prob(std::int64_t m, double log1m_p) {
  return std::exp(static_cast<double>(m) * log1m_p);
}

// Shared transition step; stay[m] must cover m in [support_lo, support_hi+1].
void advance_core(StateDistribution& state, const std::vector<double>& stay,
                  double drop_threshold) {
  state.probs.resize(static_cast<std::size_t>(state.support_hi) + 2, 0.0);
  // in place, descending m: new[m] = old[m] (1-p)^m + old[m-1] (1-(1-p)^{m-1})
  for (std::int64_t m = state.support_hi + 1; m >= state.support_lo; --m) {
    const std::size_t im = static_cast<std::size_t>(m);
    double v = state.probs[im] * stay[im];
    if (m > state.support_lo) v += state.probs[im - 1] * (1.0 - stay[im - 1]);
    state.probs[im] = v;
  }
  state.support_hi += 1;
  ++state.position;

  if (drop_threshold > 0.0) {
    while (state.support_lo < state.support_hi &&
           state.probs[static_cast<std::size_t>(state.support_lo)] < drop_threshold) {
      state.truncation_mass += state.probs[static_cast<std::size_t>(state.support_lo)];
      state.probs[static_cast<std::size_t>(state.support_lo)] = 0.0;
      ++state.support_lo;
    }
    while (state.support_hi > state.support_lo &&
           state.probs[static_cast<std::size_t>(state.support_hi)] < drop_threshold) {
      state.truncation_mass += state.probs[static_cast<std::size_t>(state.support_hi)];
      state.probs[static_cast<std::size_t>(state.support_hi)] = 0.0;
      --state.support_hi;
    }
  }
}

void extend_stay_table(std::vector<double>& stay, std::int64_t up_to,
                       double log1m_p) {
  while (static_cast<std::int64_t>(stay.size()) <= up_to)
    stay.push_back(stay_prob(static_cast<std::int64_t>(stay.size()), log1m_p));
}

}  // namespace

double StateDistribution::stored_mass() const {
  double s = 0.0;
  for (std::int64_t m = support_lo; m <= support_hi; ++m)
    s += probs[static_cast<std::size_t>(m)];
  return s;
}

StateDistribution initial_reach_state() {
  StateDistribution st;
  st.position = 1;
  st.probs.assign(2, 0.0);
  st.probs[1] = 1.0;
  st.support_lo = st.support_hi = 1;
  st.truncation_mass = 0.0;
  return st;
}

void advance_reach_state(StateDistribution& state, double p,
                         double drop_threshold) {
  check_p(p, "advance_reach_state");
  if (drop_threshold < 0.0)
    throw std::invalid_argument("advance_reach_state: negative drop threshold");
  const double log1m_p = std::log1p(-p);
  std::vector<double> stay;
  extend_stay_table(stay, state.support_hi + 1, log1m_p);
  advance_core(state, stay, drop_threshold);
}

ReachProbability reach_prob_dp(std::int64_t n, double p, double truncation_eps) {
  if (n < 1) throw std::invalid_argument("reach_prob_dp: n must be >= 1");
  check_p(p, "reach_prob_dp");
  if (truncation_eps < 0.0)
    throw std::invalid_argument("reach_prob_dp: negative truncation_eps");
  if (n == 1) return {1.0, 0.0};

  const double log1m_p = std::log1p(-p);
  std::vector<double> stay;
  StateDistribution st = initial_reach_state();
  while (st.position < n - 1) {
    const double thr =
        truncation_eps > 0.0
            ? truncation_eps / static_cast<double>(st.position + 1)
            : 0.0;
    extend_stay_table(stay, st.support_hi + 1, log1m_p);
    advance_core(st, stay, thr);
  }

  double prob = 0.0;
  extend_stay_table(stay, st.support_hi, log1m_p);
  for (std::int64_t m = st.support_hi; m >= st.support_lo; --m)
    prob += st.probs[static_cast<std::size_t>(m)] * (1.0 - stay[static_cast<std::size_t>(m)]);
  return {prob, st.truncation_mass};
}

ReachProbability reach_prob_dp(std::int64_t n, double p) {
  return reach_prob_dp(n, p, n <= 20000 ? 0.0 : 1e-14);
}

double brute_force_reach_prob(int n, double p) {
  if (n < 1) throw std::invalid_argument("brute_force_reach_prob: n must be >= 1");
  if (n > 7)
    throw std::invalid_argument("brute_force_reach_prob: n > 7 is not enumerable");
  check_p(p, "brute_force_reach_prob");
  if (n == 1) return 1.0;

  // Edge (i, j), 0-based i < j, lives at bit j(j-1)/2 + i; the bits of mask
  // below vertex j form its in-neighbourhood.  Reaching graphs are bucketed
  // by edge count so the final sum has only ~n^2/2 rounded terms.
  const int num_edges = n * (n - 1) / 2;
  std::vector<std::uint64_t> reaching_by_count(num_edges + 1, 0);
  const std::uint32_t top = 1u << num_edges;
  for (std::uint32_t mask = 0; mask < top; ++mask) {
    std::uint32_t reachable = 1;
    for (int j = 1; j < n; ++j) {
      const std::uint32_t in_mask = (mask >> (j * (j - 1) / 2)) & ((1u << j) - 1);
      if (in_mask & reachable) reachable |= 1u << j;
    }
    if (reachable >> (n - 1) & 1u)
      ++reaching_by_count[std::popcount(mask)];
  }

  std::vector<double> p_pow(num_edges + 1), q_pow(num_edges + 1);
  p_pow[0] = q_pow[0] = 1.0;
  for (int k = 1; k <= num_edges; ++k) {
    p_pow[k] = p_pow[k - 1] * p;
    q_pow[k] = q_pow[k - 1] * (1.0 - p);
  }
  double prob = 0.0;
  for (int k = 0; k <= num_edges; ++k)
    if (reaching_by_count[k])
      prob += static_cast<double>(reaching_by_count[k]) * p_pow[k] *
              q_pow[num_edges - k];
  return prob;
}

DirectedGraph sample_directed_graph(std::int64_t n, double p, RngStream& stream) {
  if (n < 1) throw std::invalid_argument("sample_directed_graph: n must be >= 1");
  check_p(p, "sample_directed_graph");
  DirectedGraph g;
  g.n = n;
  // Geometric skips across the n(n-1)/2 forward pairs in (j, i) order.
  const std::int64_t total = n * (n - 1) / 2;
  std::int64_t slot = 0;
  for (;;) {
    slot += sample_geometric(p, stream);
    if (slot > total) break;
    // invert slot -> (i, j): pairs are laid out j = 2..n, i = 1..j-1
    const std::int64_t s = slot - 1;
    const std::int64_t j =
        static_cast<std::int64_t>((1.0 + std::sqrt(1.0 + 8.0 * static_cast<double>(s))) / 2.0);
    std::int64_t jj = j;
    while (jj * (jj - 1) / 2 > s) --jj;
    while ((jj + 1) * jj / 2 <= s) ++jj;
    const std::int64_t i = s - jj * (jj - 1) / 2;
    g.edges.emplace_back(static_cast<std::int32_t>(i + 1),
                         static_cast<std::int32_t>(jj + 1));
  }
  return g;
}

BigCount count_monotone_paths(const DirectedGraph& g, std::int32_t source,
                              std::int32_t target) {
  if (source < 1 || target > g.n || source > target)
    throw std::invalid_argument("count_monotone_paths: need 1 <= source <= target <= n");
  std::vector<std::vector<std::int32_t>> in_edges(
      static_cast<std::size_t>(g.n) + 1);
  for (const auto& [i, j] : g.edges) {
    if (!(i >= 1 && i < j && j <= g.n))
      throw std::invalid_argument("count_monotone_paths: edge violates vertex order");
    if (i >= source && j <= target) in_edges[static_cast<std::size_t>(j)].push_back(i);
  }
  std::vector<BigCount> counts(static_cast<std::size_t>(target) + 1);
  counts[static_cast<std::size_t>(source)] = BigCount(1);
  for (std::int32_t j = source + 1; j <= target; ++j)
    for (std::int32_t i : in_edges[static_cast<std::size_t>(j)])
      counts[static_cast<std::size_t>(j)] += counts[static_cast<std::size_t>(i)];
  return counts[static_cast<std::size_t>(target)];
}

double expected_path_count(std::int64_t n, double p) {
  if (n < 2) throw std::invalid_argument("expected_path_count: n must be >= 2");
  if (!(p > 0.0) || p > 1.0)
    throw std::invalid_argument("expected_path_count: p must be in (0, 1]");
  if (n == 2) return p;
  return std::exp(std::log(p) + static_cast<double>(n - 2) * std::log1p(p));
}

}  // namespace monopath

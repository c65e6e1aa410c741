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

#ifndef MONOPATH_MONTECARLO_HPP
#define MONOPATH_MONTECARLO_HPP

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <type_traits>
#include <vector>

#include "monopath/rng.hpp"
#include "monopath/stats.hpp"

namespace monopath {

/// A Monte Carlo point estimate; reproducible from (kernel, master_seed).
struct EstimateWithError {
  double mean = 0.0;
  double std_error = 0.0;
  std::int64_t trials = 0;
  std::uint64_t master_seed = 0;
};

/**
 * Runs `kernel(stream)` once per trial, trial t drawing from the stream
 * addressed (master_seed, t).  Results land in a vector indexed by trial, so
 * the output is bit-identical for any thread count; kernels must be pure
 * given their stream.  The first kernel exception, if any, is rethrown.
 */
template <typename Kernel>
auto run_trials(std::uint64_t master_seed, std::int64_t trials, int threads,
                Kernel&& kernel)
    -> std::vector<std::decay_t<std::invoke_result_t<Kernel&, RngStream&>>> {
  using Result = std::decay_t<std::invoke_result_t<Kernel&, RngStream&>>;
  static_assert(!std::is_same_v<Result, bool>,
                "wrap boolean kernels to return 0.0/1.0 (vector<bool> packs "
                "bits, which is unsafe to write concurrently)");
  if (trials < 1) throw std::invalid_argument("run_trials: trials must be >= 1");
  std::vector<Result> results(static_cast<std::size_t>(trials));

  const int workers =
      static_cast<int>(std::min<std::int64_t>(std::max(threads, 1), trials));
  if (workers <= 1) {
    for (std::int64_t t = 0; t < trials; ++t) {
      RngStream stream(master_seed, static_cast<std::uint64_t>(t));
      results[static_cast<std::size_t>(t)] = kernel(stream);
    }
    return results;
  }

  std::atomic<std::int64_t> next{0};
  std::exception_ptr first_error;
  std::mutex error_mutex;
  auto work = [&] {
    for (;;) {
      const std::int64_t t = next.fetch_add(1, std::memory_order_relaxed);
      if (t >= trials) return;
      try {
        RngStream stream(master_seed, static_cast<std::uint64_t>(t));
        results[static_cast<std::size_t>(t)] = kernel(stream);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  for (int w = 0; w < workers; ++w) pool.emplace_back(work);
  for (auto& th : pool) th.join();
  if (first_error) std::rethrow_exception(first_error);
  return results;
}

/// Mean and standard error of a kernel over independent trials, reduced in
/// trial order (deterministic for any thread count).  Needs trials >= 2.
template <typename Kernel>
EstimateWithError estimate(std::uint64_t master_seed, std::int64_t trials,
                           int threads, Kernel&& kernel) {
  if (trials < 2) throw std::invalid_argument("estimate: trials must be >= 2");
  const std::vector<double> values =
      run_trials(master_seed, trials, threads, std::forward<Kernel>(kernel));
  const SummaryStats s = summarize(values);
  return {s.mean, s.std_error, trials, master_seed};
}

}  // namespace monopath

#endif  // MONOPATH_MONTECARLO_HPP

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

#ifndef MONOPATH_SAMPLERS_HPP
#define MONOPATH_SAMPLERS_HPP

#include <cassert>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>

#include "monopath/rng.hpp"

namespace monopath {

// All variates are inverse-CDF transforms of a single uniform, exposed both
// as pure functions of u (testable against hand-computed values) and as
// stream samplers.  u is expected in (0, 1], as produced by RngStream.

/// Exp(1) variate: -log u.
inline double exponential_from_uniform(double u) { return -std::log(u); }

/**
 * Geometric variate on {1, 2, ...} with success probability q, by inversion:
 * inf{k >= 1 : u >= (1-q)^k} = ceil(log u / log(1-q)).  log1p keeps the
 * denominator accurate for small q (log(1-q) underflows for q < 1e-8 if
 * formed naively).  Values beyond int64 range (possible only for q below
 * ~1e-16, where the inversion is saturated by double precision anyway) clamp
 * to the maximum.
 */
inline std::int64_t geometric_from_uniform(double u, double q) {
  if (q >= 1.0) return 1;
  const double r = std::ceil(std::log(u) / std::log1p(-q));
  if (r < 1.0) return 1;
  if (r >= 9.2e18) return std::numeric_limits<std::int64_t>::max();
  return static_cast<std::int64_t>(r);
}

/// Standard Gumbel variate: -log(-log u).  u == 1 (probability 2^-53) is
/// nudged to the largest value below 1 so the result stays finite.
inline double gumbel_from_uniform(double u) {
  if (u >= 1.0) u = 0x1.fffffffffffffp-1;
  return -std::log(-std::log(u));
}

/**
 * A geometric/exponential pair driven by one shared uniform:
 *   y = -log u,   x = inf{k >= 1 : u >= (1-q)^k},
 * so that |q*x - y| <= |q/log(1/(1-q)) - 1|*y + q holds for every draw.
 * This is the coupling that lets q*x be replaced by an Exp(1) variate with a
 * controlled error.
 */
struct CoupledPair {
  std::int64_t x_geometric;
  double y_exponential;
  double q;
};

/// Right-hand side of the per-draw coupling inequality for a given pair.
inline double coupling_bound(const CoupledPair& cp) {
  const double log_inv = -std::log1p(-cp.q);  // log(1/(1-q))
  return std::abs(cp.q / log_inv - 1.0) * cp.y_exponential + cp.q;
}

inline CoupledPair coupled_pair_from_uniform(double u, double q) {
  CoupledPair cp{geometric_from_uniform(u, q), exponential_from_uniform(u), q};
  assert(std::abs(q * static_cast<double>(cp.x_geometric) - cp.y_exponential) <=
         coupling_bound(cp) * (1.0 + 1e-12) + 1e-12);
  return cp;
}

inline double sample_uniform(RngStream& stream) { return stream.uniform(); }

inline double sample_exponential(RngStream& stream) {
  return exponential_from_uniform(stream.uniform());
}

inline double sample_gumbel(RngStream& stream) {
  return gumbel_from_uniform(stream.uniform());
}

inline std::int64_t sample_geometric(double q, RngStream& stream) {
  if (!(q > 0.0) || q > 1.0)
    throw std::invalid_argument("sample_geometric: q must be in (0, 1]");
  return geometric_from_uniform(stream.uniform(), q);
}

inline CoupledPair sample_coupled_pair(double q, RngStream& stream) {
  if (!(q > 0.0) || !(q < 1.0))
    throw std::invalid_argument("sample_coupled_pair: q must be in (0, 1)");
  return coupled_pair_from_uniform(stream.uniform(), q);
}

}  // namespace monopath

#endif  // MONOPATH_SAMPLERS_HPP

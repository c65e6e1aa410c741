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

#ifndef MONOPATH_ASYMPTOTICS_HPP
#define MONOPATH_ASYMPTOTICS_HPP

#include <cstdint>
#include <stdexcept>

namespace monopath {

/// Thrown when an iteration or quadrature fails to reach its tolerance.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/**
 * Exponential integral E1(z) = int_z^inf e^{-t}/t dt for z > 0.
 * Power series up to z = 1, continued fraction beyond; absolute error below
 * 1e-12 on [1e-8, 700].  Returns 0 for z > 700 where e^{-z} has left the
 * double range that matters.
 */
double exp_integral_e1(double z);

/// log(e^a - 1), stable for both small and large a.
double log_expm1(double a);

/// Standard Gumbel CDF exp(-e^{-z}).
double gumbel_cdf(double z);

/**
 * Limiting probability of {1 -> n} along the critical window, as a function
 * of the window coordinate x:
 *   limit_prob(x) = 1 - e^{e^{-x} - x} E1(e^{-x}),
 * strictly increasing from 0 to 1.
 */
double limit_prob(double x);

/**
 * The same limit evaluated through the Gumbel-expectation identity
 *   1/2 + 1/2 E[tanh((x - G)/2)],
 * by adaptive quadrature after substituting t = e^{-z}.  Throws
 * NumericalError (with the achieved error estimate) on non-convergence.
 */
double limit_prob_tanh(double x, double quad_tol);

/// f(b) = (1/b) e^{1/b} E1(1/b) on (0, inf); limit_prob(x) = 1 - f(e^x).
double f_of_b(double b);

/// The critical parameter sequence p_{n,x} = (log n - log log n + x)/n and
/// its effective calibration constant b = p e^{np}.
struct CriticalSequence {
  std::int64_t n;
  double x;
  double p;
  double b;
};

CriticalSequence critical_p(std::int64_t n, double x);

/// Principal-branch Lambert W on v >= 0, by Halley iteration.
double lambert_w0(double v);

/**
 * Inverts the calibration n = log(b/p)/p for p, i.e. p = W(n b)/n.
 * Rejects results outside (0, 1); throws NumericalError if the residual
 * |n - log(b/p)/p| exceeds 1e-9 * n.
 */
double solve_p_from_b(std::int64_t n, double b);

enum class LimitForm { integral, tanh_quadrature };

struct LimitPoint {
  double x;
  double b;            // e^x
  double limit_prob;
  double e1_value;     // E1(e^{-x}), the integral behind the closed form
  LimitForm form_used;
};

LimitPoint limit_point(double x, LimitForm form, double quad_tol = 1e-10);

}  // namespace monopath

#endif  // MONOPATH_ASYMPTOTICS_HPP

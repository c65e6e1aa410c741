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

#include "monopath/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <sstream>

namespace monopath {
namespace {

// Power series E1(z) = -gamma - log z + sum_{k>=1} (-1)^{k+1} z^k / (k k!),
// accurate for z <= 1.
double e1_series(double z) {
  double sum = 0.0;
  double term = 1.0;  // (-z)^k / k!
  for (int k = 1; k < 64; ++k) {
    term *= -z / k;
    const double delta = term / k;
    sum += delta;
    if (std::abs(delta) < 1e-18 * (std::abs(sum) + 1e-30)) break;
  }
  return -std::numbers::egamma - std::log(z) - sum;
}

// Modified-Lentz continued fraction for the scaled value e^z E1(z), z > 1.
// Converges in a few dozen terms and never leaves the double range, which
// makes z e^z E1(z) computable even where e^{-z} underflows.
double e1_scaled_cf(double z) {
  double b = z + 1.0;
  double c = 1e308;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i <= 400; ++i) {
    const double a = -static_cast<double>(i) * i;
    b += 2.0;
    d = 1.0 / (a * d + b);
    c = b + a / c;
    const double del = c * d;
    h *= del;
    if (std::abs(del - 1.0) < 1e-16) return h;
  }
  throw NumericalError("exp_integral_e1: continued fraction failed to converge");
}

// g(z) = z e^z E1(z) = E(1 / (1 + G'/z)) for the relevant Gumbel functional;
// decreasing from 1 at z = inf to 0 at z = 0.
double gompertz_factor(double z) {
  if (z <= 1.0) return z * std::exp(z) * e1_series(z);
  return z * e1_scaled_cf(z);
}

struct SimpsonState {
  double worst_error = 0.0;
  bool converged = true;
};

double adaptive_simpson(const std::function<double(double)>& f, double a,
                        double b, double fa, double fm, double fb, double whole,
                        double eps, int depth, SimpsonState& state) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double h = b - a;
  const double left = h / 12.0 * (fa + 4.0 * flm + fm);
  const double right = h / 12.0 * (fm + 4.0 * frm + fb);
  const double delta = left + right - whole;
  if (std::abs(delta) <= 15.0 * eps) return left + right + delta / 15.0;
  if (depth <= 0) {
    state.converged = false;
    state.worst_error = std::max(state.worst_error, std::abs(delta) / 15.0);
    return left + right + delta / 15.0;
  }
  return adaptive_simpson(f, a, m, fa, flm, fm, left, 0.5 * eps, depth - 1, state) +
         adaptive_simpson(f, m, b, fm, frm, fb, right, 0.5 * eps, depth - 1, state);
}

double integrate_adaptive(const std::function<double(double)>& f, double a,
                          double b, double eps, SimpsonState& state) {
  const double fa = f(a);
  const double fb = f(b);
  const double fm = f(0.5 * (a + b));
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return adaptive_simpson(f, a, b, fa, fm, fb, whole, eps, 48, state);
}

}  // namespace

double exp_integral_e1(double z) {
  if (!(z > 0.0)) throw std::invalid_argument("exp_integral_e1: z must be > 0");
  if (z > 700.0) return 0.0;
  if (z <= 1.0) return e1_series(z);
  return e1_scaled_cf(z) * std::exp(-z);
}

double log_expm1(double a) {
  if (!(a > 0.0)) throw std::invalid_argument("log_expm1: a must be > 0");
  if (a > 0.693) return a + std::log1p(-std::exp(-a));
  return std::log(std::expm1(a));
}

double gumbel_cdf(double z) { return std::exp(-std::exp(-z)); }

double limit_prob(double x) {
  const double z = std::exp(-x);
  if (z == 0.0) return 1.0;                    // x beyond ~745
  if (std::isinf(z)) return 0.0;               // x below ~-709
  return 1.0 - gompertz_factor(z);
}

double limit_prob_tanh(double x, double quad_tol) {
  if (!(quad_tol > 0.0))
    throw std::invalid_argument("limit_prob_tanh: quad_tol must be > 0");
  // E[tanh((x - G)/2)] with t = e^{-z}: integrate tanh((x + log t)/2) e^{-t}
  // over (0, T]; the dropped tail is below e^{-T} <= quad_tol / 2.
  const double tail_tol = 0.5 * quad_tol;
  const double upper = std::max(1.0, -std::log(tail_tol));
  const auto integrand = [x](double t) {
    const double z = t > 0.0 ? 0.5 * (x + std::log(t))
                             : -std::numeric_limits<double>::infinity();
    return std::tanh(z) * std::exp(-t);
  };
  SimpsonState state;
  const double integral =
      integrate_adaptive(integrand, 0.0, upper, 0.5 * quad_tol, state);
  if (!state.converged) {
    std::ostringstream oss;
    oss << "limit_prob_tanh: quadrature did not reach tol " << quad_tol
        << " (achieved error estimate " << state.worst_error << ")";
    throw NumericalError(oss.str());
  }
  return 0.5 + 0.5 * integral;
}

double f_of_b(double b) {
  if (!(b > 0.0)) throw std::invalid_argument("f_of_b: b must be > 0");
  const double z = 1.0 / b;
  if (std::isinf(z)) return 1.0;
  if (z == 0.0) return 0.0;
  return gompertz_factor(z);
}

CriticalSequence critical_p(std::int64_t n, double x) {
  if (n < 3) throw std::invalid_argument("critical_p: n must be >= 3");
  const double nd = static_cast<double>(n);
  const double logn = std::log(nd);
  const double p = (logn - std::log(logn) + x) / nd;
  if (!(p > 0.0) || !(p < 1.0))
    throw std::invalid_argument("critical_p: resulting p outside (0, 1)");
  const double b = std::exp(nd * p + std::log(p));
  return {n, x, p, b};
}

double lambert_w0(double v) {
  if (!(v >= 0.0) || std::isinf(v))
    throw std::invalid_argument("lambert_w0: v must be finite and >= 0");
  if (v == 0.0) return 0.0;
  double w = v > std::numbers::e ? std::log(v) - std::log(std::log(v))
                                 : std::log1p(v);
  for (int iter = 0; iter < 50; ++iter) {
    const double ew = std::exp(w);
    const double f = w * ew - v;
    if (std::abs(f) <= 1e-14 * std::max(1.0, v)) return w;
    const double wp1 = w + 1.0;
    w -= f / (ew * wp1 - (w + 2.0) * f / (2.0 * wp1));
  }
  throw NumericalError("lambert_w0: Halley iteration did not converge");
}

double solve_p_from_b(std::int64_t n, double b) {
  if (n < 1) throw std::invalid_argument("solve_p_from_b: n must be >= 1");
  if (!(b > 0.0)) throw std::invalid_argument("solve_p_from_b: b must be > 0");
  const double nd = static_cast<double>(n);
  const double p = lambert_w0(nd * b) / nd;
  if (!(p > 0.0) || !(p < 1.0))
    throw std::invalid_argument("solve_p_from_b: resulting p outside (0, 1)");
  const double residual = std::abs(nd - std::log(b / p) / p);
  if (residual > 1e-9 * nd) {
    std::ostringstream oss;
    oss << "solve_p_from_b: residual " << residual << " exceeds tolerance";
    throw NumericalError(oss.str());
  }
  return p;
}

LimitPoint limit_point(double x, LimitForm form, double quad_tol) {
  const double z = std::exp(-x);
  LimitPoint pt;
  pt.x = x;
  pt.b = std::exp(x);
  pt.e1_value = z > 0.0 && !std::isinf(z)
                    ? exp_integral_e1(z)
                    : (z == 0.0 ? std::numeric_limits<double>::infinity() : 0.0);
  pt.form_used = form;
  pt.limit_prob = form == LimitForm::integral ? limit_prob(x)
                                              : limit_prob_tanh(x, quad_tol);
  return pt;
}

}  // namespace monopath

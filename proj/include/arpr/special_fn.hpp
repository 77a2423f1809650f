// Copyright 2026 The arpr Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Special functions behind the distribution and interval code: log-gamma,
// regularized incomplete beta and gamma functions with their inverses, and
// the standard normal CDF / quantile.
//
// All functions are pure. Domain violations throw arpr::DomainError;
// inverse solvers that cannot reach their residual target throw
// arpr::NumericalError.

#ifndef ARPR_SPECIAL_FN_HPP
#define ARPR_SPECIAL_FN_HPP

#include <cstdint>

namespace arpr::special {

/// ln Γ(x) for x > 0.
double log_gamma(double x);

/// ln B(a, b). Uses Stirling corrections when both arguments are large so
/// that the three-lgamma cancellation does not eat the low digits.
double log_beta(double a, double b);

/// Regularized incomplete beta I_x(a, b).
double reg_inc_beta(double x, double a, double b);

/// Beta(a, b) density at x in [0, 1].
double beta_pdf(double x, double a, double b);

/// x with I_x(a, b) = delta. delta = 0 and delta = 1 map to 0 and 1 exactly.
double inv_reg_inc_beta(double delta, double a, double b);

/// Lower regularized incomplete gamma P(s, x) = γ(s, x) / Γ(s).
double reg_inc_gamma_lower(double s, double x);

/// Upper regularized incomplete gamma Q(s, x) = 1 - P(s, x), computed
/// without cancellation.
double reg_inc_gamma_upper(double s, double x);

/// x with P(s, x) = delta. delta = 0 returns 0, delta = 1 returns +inf.
double inv_reg_inc_gamma(double delta, double s);

/// Φ(z).
double std_normal_cdf(double z);

/// Φ^{-1}(delta) for delta in (0, 1).
double std_normal_quantile(double delta);

/// ln C(M, k).
double log_binom_coeff(std::int64_t M, std::int64_t k);

/// ln of the Binomial(M, p) mass at k. Returns -inf for impossible outcomes
/// (e.g. k > 0 with p = 0).
double log_binom_pmf(std::int64_t M, std::int64_t k, double p);

}  // namespace arpr::special

#endif  // ARPR_SPECIAL_FN_HPP

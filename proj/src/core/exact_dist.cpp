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

#include "arpr/exact_dist.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <variant>

#include "arpr/error.hpp"
#include "arpr/special_fn.hpp"

namespace arpr {

namespace {

// Tail mass left outside the quadrature window on each side.
constexpr double kWindowTail = 1e-12;
// Largest |Σ mass - 1| that is renormalized rather than reported.
constexpr double kMassTolerance = 1e-8;

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// ln of the binomial kernel k ln p + (M - k) ln(1 - p), with 0 ln 0 = 0.
double log_kernel(std::int64_t M, std::int64_t k, double log_p, double log_q) {
  const double a = k == 0 ? 0.0 : static_cast<double>(k) * log_p;
  const double b = k == M ? 0.0 : static_cast<double>(M - k) * log_q;
  return a + b;
}

}  // namespace

const char* to_string(PmfModel model) noexcept {
  return model == PmfModel::ExactMixture ? "exact" : "binomial";
}

GaussLegendreRule gauss_legendre(int n) {
  if (n < 1) throw DomainError("gauss_legendre: need at least one node");
  GaussLegendreRule rule{std::vector<double>(n), std::vector<double>(n)};
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      // Legendre recurrence for P_n(z) and its derivative.
      double p1 = 1.0;
      double p2 = 0.0;
      for (int j = 0; j < n; ++j) {
        const double p3 = p2;
        p2 = p1;
        p1 = ((2.0 * j + 1.0) * z * p2 - j * p3) / (j + 1.0);
      }
      dp = n * (z * p1 - p2) / (z * z - 1.0);
      const double step = p1 / dp;
      z -= step;
      if (std::fabs(step) <= 1e-16) break;
    }
    rule.nodes[i] = -z;
    rule.nodes[n - 1 - i] = z;
    const double w = 2.0 / ((1.0 - z * z) * dp * dp);
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  return rule;
}

double g_ratio(const ParentDistribution& d, double alpha, double u) {
  if (!(u > 0.0 && u < 1.0)) throw DomainError("g_ratio: u must lie in (0, 1)");
  if (!(alpha > 0.0 && alpha < 1.0)) throw DomainError("g_ratio: alpha must lie in (0, 1)");
  if (const auto* pw = std::get_if<Power>(&d.kind())) return std::pow(alpha, pw->c);
  return d.cdf(alpha * d.quantile(u)) / u;
}

EtaPmf eta_pmf_exact(const ParentDistribution& d, double alpha, std::int64_t n, double beta,
                     int nodes) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw DomainError("alpha must lie in (0, 1)");
  const auto [m, M] = indices(n, beta);
  const auto a = static_cast<double>(m);
  const auto b = static_cast<double>(n - m + 1);

  const double lo = special::inv_reg_inc_beta(kWindowTail, a, b);
  const double hi = special::inv_reg_inc_beta(1.0 - kWindowTail, a, b);
  const double centre = 0.5 * (hi + lo);
  const double half_width = 0.5 * (hi - lo);
  const double lbeta = special::log_beta(a, b);

  std::vector<double> log_coeff(static_cast<std::size_t>(M) + 1);
  for (std::int64_t k = 0; k <= M; ++k) log_coeff[k] = special::log_binom_coeff(M, k);

  const GaussLegendreRule rule = gauss_legendre(nodes);
  std::vector<double> mass(static_cast<std::size_t>(M) + 1, 0.0);
  for (int i = 0; i < nodes; ++i) {
    const double u = centre + half_width * rule.nodes[i];
    if (!(u > 0.0 && u < 1.0)) continue;
    const double log_weight = std::log(half_width * rule.weights[i]) + (a - 1.0) * std::log(u) +
                              (b - 1.0) * std::log1p(-u) - lbeta;
    const double g = g_ratio(d, alpha, u);
    const double log_g = g > 0.0 ? std::log(g) : kNegInf;
    const double log_1mg = g < 1.0 ? std::log1p(-g) : kNegInf;
    for (std::int64_t k = 0; k <= M; ++k) {
      const double lk = log_kernel(M, k, log_g, log_1mg);
      if (lk == kNegInf) continue;
      mass[k] += std::exp(log_coeff[k] + lk + log_weight);
    }
  }

  double total = 0.0;
  for (double v : mass) total += v;
  if (!(std::fabs(total - 1.0) <= kMassTolerance)) {
    throw NumericalError("eta_pmf_exact: integrated mass " + std::to_string(total) +
                         " misses 1 by more than 1e-8");
  }
  for (double& v : mass) v /= total;
  return {M, std::move(mass), PmfModel::ExactMixture, total};
}

EtaPmf eta_pmf_binomial(std::int64_t M, double p) {
  if (M < 1) throw DomainError("eta_pmf_binomial: M must be at least 1");
  if (!(p >= 0.0 && p <= 1.0)) throw DomainError("eta_pmf_binomial: p must lie in [0, 1]");
  std::vector<double> mass(static_cast<std::size_t>(M) + 1);
  for (std::int64_t k = 0; k <= M; ++k) mass[k] = std::exp(special::log_binom_pmf(M, k, p));
  return {M, std::move(mass), PmfModel::BinomialApprox, 1.0};
}

CoverageAndLength coverage_and_length(const EtaPmf& pmf,
                                      const std::vector<ProportionInterval>& intervals,
                                      double theta) {
  if (intervals.size() != pmf.mass.size()) {
    throw DomainError("coverage_and_length: interval table does not match pmf support");
  }
  CoverageAndLength out{0.0, 0.0, 0.0};
  for (std::size_t k = 0; k < pmf.mass.size(); ++k) {
    const ProportionInterval& ci = intervals[k];
    const double width = ci.upper - ci.lower;
    out.expected_length += pmf.mass[k] * width;
    if (ci.lower <= theta && theta <= ci.upper) {
      out.coverage += pmf.mass[k];
      out.covered_length += pmf.mass[k] * width;
    }
  }
  out.coverage = std::min(out.coverage, 1.0);
  return out;
}

CoverageAndLength coverage_and_length(const EtaPmf& pmf, double beta, double gamma, double theta) {
  if (!(theta > 0.0 && theta < beta)) {
    throw DomainError("coverage_and_length: theta must lie in (0, beta)");
  }
  return coverage_and_length(pmf, ci_theta_table(pmf.M, beta, gamma), theta);
}

BiasResult exact_bias(const EtaPmf& pmf, std::int64_t n, double theta) {
  if (n < 1) throw DomainError("exact_bias: n must be positive");
  double mean = 0.0;
  for (std::size_t k = 0; k < pmf.mass.size(); ++k) mean += static_cast<double>(k) * pmf.mass[k];
  mean /= static_cast<double>(n);
  return {mean, mean - theta};
}

CoverageReport table_row(const ParentDistribution& d, std::int64_t n, double alpha, double beta,
                         double gamma, PmfModel model, int nodes) {
  [[maybe_unused]] const LipParams params(alpha, beta, gamma, n);
  const double theta = theta_true(d, alpha, beta);
  const auto [m, M] = indices(n, beta);
  (void)m;
  const EtaPmf pmf = model == PmfModel::ExactMixture
                         ? eta_pmf_exact(d, alpha, n, beta, nodes)
                         : eta_pmf_binomial(M, theta / beta);
  const CoverageAndLength cl = coverage_and_length(pmf, beta, gamma, theta);
  const BiasResult bias = exact_bias(pmf, n, theta);
  return {d.to_spec(), n,          alpha,        beta, gamma, theta, cl.coverage,
          cl.expected_length,      cl.covered_length, bias.mean_theta_hat, bias.bias, model};
}

}  // namespace arpr

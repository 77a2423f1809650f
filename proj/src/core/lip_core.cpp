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

#include "arpr/lip_core.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <string>
#include <system_error>

#include "arpr/error.hpp"
#include "arpr/special_fn.hpp"

namespace arpr {

namespace {

void check_alpha_beta(double alpha, double beta) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw DomainError("alpha must lie in (0, 1)");
  if (!(beta > 0.0 && beta < 1.0)) throw DomainError("beta must lie in (0, 1)");
}

std::string_view trim(std::string_view s) {
  const auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\f' || c == '\v'; };
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

}  // namespace

std::int64_t floor_beta_n(std::int64_t n, double beta) {
  const double x = beta * static_cast<double>(n);
  const double nearest = std::nearbyint(x);
  if (std::fabs(x - nearest) <= 8.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, x)) {
    return static_cast<std::int64_t>(nearest);
  }
  return static_cast<std::int64_t>(std::floor(x));
}

RankPair indices(std::int64_t n, double beta) {
  if (n < 2) throw DomainError("sample size must be at least 2");
  if (!(beta > 0.0 && beta < 1.0)) throw DomainError("beta must lie in (0, 1)");
  const std::int64_t M = floor_beta_n(n, beta);
  if (M < 1) throw DomainError("floor(beta * n) must be at least 1");
  if (M + 1 > n) throw DomainError("quantile rank floor(beta * n) + 1 exceeds n");
  return {M + 1, M};
}

Sample::Sample(std::vector<double> values) : values_(std::move(values)) {
  for (std::size_t i = 0; i < values_.size(); ++i) {
    const double v = values_[i];
    if (!std::isfinite(v) || v < 0.0) {
      throw DataError("income #" + std::to_string(i + 1) + " is negative or not finite");
    }
  }
  if (values_.size() < 2) throw DataError("a sample needs at least two incomes");
  std::sort(values_.begin(), values_.end());
}

Sample Sample::read(std::istream& in) {
  std::vector<double> values;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string_view text = trim(line);
    if (text.empty() || text.front() == '#') continue;
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || ptr != text.data() + text.size()) {
      throw DataError("line " + std::to_string(lineno) + ": not a decimal number: '" +
                          std::string(text) + "'",
                      lineno);
    }
    if (!std::isfinite(v) || v < 0.0) {
      throw DataError("line " + std::to_string(lineno) + ": income must be finite and nonnegative",
                      lineno);
    }
    values.push_back(v);
  }
  if (values.size() < 2) throw DataError("a sample needs at least two incomes");
  return Sample(std::move(values));
}

Sample Sample::read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open '" + path.string() + "'");
  return read(in);
}

double Sample::order_statistic(std::int64_t k) const {
  if (k < 1 || k > size()) throw DomainError("order statistic rank out of range");
  return values_[static_cast<std::size_t>(k - 1)];
}

EstimateResult estimate_w(const Sample& s, double alpha, double beta) {
  check_alpha_beta(alpha, beta);
  const auto [m, M] = indices(s.size(), beta);
  const double q = s.order_statistic(m);
  if (q == 0.0) {
    throw DataError("estimated beta-quantile is zero; poverty line is degenerate");
  }
  const double line = alpha * q;
  const auto sorted = s.sorted();
  const auto eta = static_cast<std::int64_t>(
      std::upper_bound(sorted.begin(), sorted.end(), line) - sorted.begin());
  if (eta > M) throw NumericalError("estimate_w: count above the poverty line exceeds M");
  return {s.size(), eta, M, static_cast<double>(eta) / static_cast<double>(s.size()), line, q};
}

std::int64_t EmpiricalCdf::count_at_or_below(double x) const {
  return static_cast<std::int64_t>(std::upper_bound(sorted_.begin(), sorted_.end(), x) -
                                   sorted_.begin());
}

double EmpiricalCdf::operator()(double x) const {
  return static_cast<double>(count_at_or_below(x)) / static_cast<double>(sorted_.size());
}

double EmpiricalCdf::right_inverse(std::int64_t threshold) const {
  // F_n evaluated at sample points is monotone in the index, so the first
  // point whose count clears the threshold is found by partition_point.
  const auto it = std::partition_point(sorted_.begin(), sorted_.end(), [&](double x) {
    return count_at_or_below(x) <= threshold;
  });
  if (it == sorted_.end()) throw DomainError("empirical quantile level out of range");
  return *it;
}

EstimateResult estimate_lq(const Sample& s, double alpha, double beta) {
  check_alpha_beta(alpha, beta);
  const auto [m, M] = indices(s.size(), beta);
  (void)m;
  const EmpiricalCdf fn(s);
  // F_n(x) > β  <=>  #{X_i <= x} > βn  <=>  #{X_i <= x} > floor(βn).
  const double xi_hat = fn.right_inverse(M);
  if (xi_hat == 0.0) {
    throw DataError("estimated beta-quantile is zero; poverty line is degenerate");
  }
  const double line = alpha * xi_hat;
  const std::int64_t count = fn.count_at_or_below(line);
  return {s.size(), count, M, fn(line), line, xi_hat};
}

ProportionInterval cp_interval_p(std::int64_t eta, std::int64_t M, double gamma) {
  if (M < 1) throw DomainError("cp_interval_p: M must be at least 1");
  if (eta < 0 || eta > M) throw DomainError("cp_interval_p: need 0 <= eta <= M");
  if (!(gamma > 0.0 && gamma < 1.0)) throw DomainError("cp_interval_p: gamma must lie in (0, 1)");
  const double tail = 0.5 * (1.0 - gamma);
  const auto k = static_cast<double>(eta);
  const auto trials = static_cast<double>(M);
  const double lower = eta == 0 ? 0.0 : special::inv_reg_inc_beta(tail, k, trials - k + 1.0);
  const double upper = eta == M ? 1.0 : special::inv_reg_inc_beta(1.0 - tail, k + 1.0, trials - k);
  return {lower, upper, gamma, IntervalTarget::RatioP};
}

ProportionInterval ci_theta(std::int64_t eta, std::int64_t M, double beta, double gamma) {
  if (!(beta > 0.0 && beta < 1.0)) throw DomainError("ci_theta: beta must lie in (0, 1)");
  const ProportionInterval p = cp_interval_p(eta, M, gamma);
  return {beta * p.lower, beta * p.upper, gamma, IntervalTarget::Theta};
}

std::vector<ProportionInterval> ci_theta_table(std::int64_t M, double beta, double gamma) {
  std::vector<ProportionInterval> table;
  table.reserve(static_cast<std::size_t>(M) + 1);
  for (std::int64_t k = 0; k <= M; ++k) table.push_back(ci_theta(k, M, beta, gamma));
  return table;
}

}  // namespace arpr

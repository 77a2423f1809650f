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

// Point estimation of the low-income proportion from a sample, and the
// Clopper-Pearson type interval for it.

#ifndef ARPR_LIP_CORE_HPP
#define ARPR_LIP_CORE_HPP

#include <cstdint>
#include <filesystem>
#include <istream>
#include <span>
#include <vector>

namespace arpr {

/// Ranks derived from (n, β): m is the 1-based rank of the order statistic
/// that estimates the β-quantile, and M = m - 1 is the binomial trial count.
struct RankPair {
  std::int64_t m;
  std::int64_t M;
};

/// floor(β n) with products that land within a few ulps of an integer
/// snapped to it, so that e.g. β = 0.29, n = 100 gives 29 rather than 28.
std::int64_t floor_beta_n(std::int64_t n, double beta);

/// m = floor(βn) + 1, M = floor(βn). Throws DomainError unless 1 <= M and
/// m <= n.
RankPair indices(std::int64_t n, double beta);

/// Incomes sorted in nondecreasing order. Every value is finite and >= 0 and
/// there are at least two of them.
class Sample {
 public:
  /// Throws DataError on negative, non-finite or too few values.
  explicit Sample(std::vector<double> values);

  /// One decimal per line; blank lines and `#` comments skipped; LF or CRLF.
  /// Malformed lines raise DataError carrying the line number.
  static Sample read(std::istream& in);
  static Sample read_file(const std::filesystem::path& path);

  std::span<const double> sorted() const noexcept { return values_; }
  std::int64_t size() const noexcept { return static_cast<std::int64_t>(values_.size()); }

  /// k-th order statistic, 1-based.
  double order_statistic(std::int64_t k) const;

 private:
  std::vector<double> values_;
};

struct EstimateResult {
  std::int64_t n;
  std::int64_t eta;     // incomes at or below the poverty line
  std::int64_t M;       // binomial trials, floor(βn)
  double theta_hat;     // eta / n
  double poverty_line;  // alpha * quantile_hat
  double quantile_hat;  // the m-th order statistic

  bool operator==(const EstimateResult&) const = default;
};

/// Order-statistic estimator: count of X_i <= α X_{m:n}, divided by n.
/// Throws DataError when the estimated quantile is zero (the poverty line
/// collapses to zero and every zero income would be counted).
EstimateResult estimate_w(const Sample& s, double alpha, double beta);

/// Plug-in estimator F_n(α F_n^{-1}(β)) with the step empirical CDF, where
/// F_n^{-1}(β) = inf{x : F_n(x) > β}. Field-for-field equal to estimate_w.
EstimateResult estimate_lq(const Sample& s, double alpha, double beta);

/// Step empirical distribution function of a sample.
class EmpiricalCdf {
 public:
  explicit EmpiricalCdf(const Sample& s) : sorted_(s.sorted()) {}

  /// #{X_i <= x}.
  std::int64_t count_at_or_below(double x) const;
  double operator()(double x) const;
  /// Smallest sample value x with F_n(x) > level, where level is given as
  /// a count threshold: F_n(x) > threshold / n.
  double right_inverse(std::int64_t threshold) const;

 private:
  std::span<const double> sorted_;
};

enum class IntervalTarget { RatioP, Theta };

struct ProportionInterval {
  double lower;
  double upper;
  double level;
  IntervalTarget target;
};

/// Clopper-Pearson interval for the binomial parameter p given eta successes
/// in M trials at confidence level gamma.
ProportionInterval cp_interval_p(std::int64_t eta, std::int64_t M, double gamma);

/// Interval for θ = β p: cp_interval_p scaled endpoint-for-endpoint by β.
ProportionInterval ci_theta(std::int64_t eta, std::int64_t M, double beta, double gamma);

/// ci_theta for every eta in 0..M, indexed by eta.
std::vector<ProportionInterval> ci_theta_table(std::int64_t M, double beta, double gamma);

}  // namespace arpr

#endif  // ARPR_LIP_CORE_HPP

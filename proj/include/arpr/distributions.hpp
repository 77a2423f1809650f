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

#ifndef ARPR_DISTRIBUTIONS_HPP
#define ARPR_DISTRIBUTIONS_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

namespace arpr {

struct ChiSquare {
  double df;
};

struct LogNormal {
  double mu;
  double sigma;
};

/// F(x) = x^c on [0, 1].
struct Power {
  double c;
};

/// An income distribution F. Immutable once constructed; the factories
/// validate parameters and throw ConfigError on bad input.
class ParentDistribution {
 public:
  using Kind = std::variant<ChiSquare, LogNormal, Power>;

  static ParentDistribution chi_square(double df);
  static ParentDistribution log_normal(double mu, double sigma);
  static ParentDistribution power(double c);

  /// Parses `chisq:<df>`, `lognormal:<mu>:<sigma>` or `power:<c>`.
  static ParentDistribution parse(std::string_view spec);

  const Kind& kind() const noexcept { return kind_; }

  /// Canonical textual form, accepted back by parse().
  std::string to_spec() const;

  double cdf(double x) const;
  /// Throws DomainError unless 0 < p < 1.
  double quantile(double p) const;
  double pdf(double x) const;

  /// Lower end of the support (always 0) and upper end (1 for Power).
  double support_upper() const noexcept;

 private:
  explicit ParentDistribution(Kind kind) : kind_(kind) {}
  Kind kind_;
};

/// The (α, β, γ, n) configuration of one inference problem. Construction
/// validates every invariant, including floor(βn) >= 1.
class LipParams {
 public:
  LipParams(double alpha, double beta, double gamma, std::int64_t n);

  double alpha() const noexcept { return alpha_; }
  double beta() const noexcept { return beta_; }
  double gamma() const noexcept { return gamma_; }
  std::int64_t n() const noexcept { return n_; }

 private:
  double alpha_;
  double beta_;
  double gamma_;
  std::int64_t n_;
};

/// θ = F(α ξ_β), the true low-income proportion.
double theta_true(const ParentDistribution& d, double alpha, double beta);

/// Inverse-transform draw: quantile(d, u).
double sample_inverse(const ParentDistribution& d, double u);

}  // namespace arpr

#endif  // ARPR_DISTRIBUTIONS_HPP

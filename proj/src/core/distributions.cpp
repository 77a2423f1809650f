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

#include "arpr/distributions.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <limits>
#include <numbers>
#include <system_error>
#include <vector>

#include "arpr/error.hpp"
#include "arpr/lip_core.hpp"
#include "arpr/special_fn.hpp"

namespace arpr {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};

double parse_decimal(std::string_view text, std::string_view spec) {
  double value = 0.0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (text.empty() || ec != std::errc() || ptr != last || !std::isfinite(value)) {
    throw ConfigError("bad number '" + std::string(text) + "' in distribution spec '" +
                      std::string(spec) + "'");
  }
  return value;
}

std::string format_shortest(double v) {
  std::array<char, 32> buf{};
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), ptr);
}

std::vector<std::string_view> split_colon(std::string_view s) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (;;) {
    const std::size_t pos = s.find(':', start);
    if (pos == std::string_view::npos) {
      parts.push_back(s.substr(start));
      return parts;
    }
    parts.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
}

}  // namespace

ParentDistribution ParentDistribution::chi_square(double df) {
  if (!(df > 0.0) || !std::isfinite(df)) {
    throw ConfigError("chi-square degrees of freedom must be positive and finite");
  }
  return ParentDistribution(ChiSquare{df});
}

ParentDistribution ParentDistribution::log_normal(double mu, double sigma) {
  if (!std::isfinite(mu)) throw ConfigError("lognormal mu must be finite");
  if (!(sigma > 0.0) || !std::isfinite(sigma)) {
    throw ConfigError("lognormal sigma must be positive and finite");
  }
  return ParentDistribution(LogNormal{mu, sigma});
}

ParentDistribution ParentDistribution::power(double c) {
  if (!(c > 0.0) || !std::isfinite(c)) {
    throw ConfigError("power exponent must be positive and finite");
  }
  return ParentDistribution(Power{c});
}

ParentDistribution ParentDistribution::parse(std::string_view spec) {
  const auto parts = split_colon(spec);
  const std::string_view family = parts.front();
  if (family == "chisq" && parts.size() == 2) {
    return chi_square(parse_decimal(parts[1], spec));
  }
  if (family == "lognormal" && parts.size() == 3) {
    return log_normal(parse_decimal(parts[1], spec), parse_decimal(parts[2], spec));
  }
  if (family == "power" && parts.size() == 2) {
    return power(parse_decimal(parts[1], spec));
  }
  throw ConfigError("unrecognised distribution spec '" + std::string(spec) +
                    "' (expected chisq:<df>, lognormal:<mu>:<sigma> or power:<c>)");
}

std::string ParentDistribution::to_spec() const {
  return std::visit(
      Overloaded{
          [](const ChiSquare& d) { return "chisq:" + format_shortest(d.df); },
          [](const LogNormal& d) {
            return "lognormal:" + format_shortest(d.mu) + ":" + format_shortest(d.sigma);
          },
          [](const Power& d) { return "power:" + format_shortest(d.c); },
      },
      kind_);
}

double ParentDistribution::cdf(double x) const {
  if (std::isnan(x)) throw DomainError("cdf: NaN argument");
  if (x <= 0.0) return 0.0;
  return std::visit(
      Overloaded{
          [x](const ChiSquare& d) { return special::reg_inc_gamma_lower(0.5 * d.df, 0.5 * x); },
          [x](const LogNormal& d) {
            if (std::isinf(x)) return 1.0;
            return special::std_normal_cdf((std::log(x) - d.mu) / d.sigma);
          },
          [x](const Power& d) { return x >= 1.0 ? 1.0 : std::pow(x, d.c); },
      },
      kind_);
}

double ParentDistribution::quantile(double p) const {
  if (!(p > 0.0 && p < 1.0)) throw DomainError("quantile: level must lie in (0, 1)");
  return std::visit(
      Overloaded{
          [p](const ChiSquare& d) { return 2.0 * special::inv_reg_inc_gamma(p, 0.5 * d.df); },
          [p](const LogNormal& d) {
            return std::exp(d.mu + d.sigma * special::std_normal_quantile(p));
          },
          [p](const Power& d) { return std::pow(p, 1.0 / d.c); },
      },
      kind_);
}

double ParentDistribution::pdf(double x) const {
  if (std::isnan(x)) throw DomainError("pdf: NaN argument");
  if (x <= 0.0) return 0.0;
  return std::visit(
      Overloaded{
          [x](const ChiSquare& d) {
            if (std::isinf(x)) return 0.0;
            const double k = 0.5 * d.df;
            return std::exp((k - 1.0) * std::log(x) - 0.5 * x - k * std::numbers::ln2 -
                            special::log_gamma(k));
          },
          [x](const LogNormal& d) {
            if (std::isinf(x)) return 0.0;
            const double z = (std::log(x) - d.mu) / d.sigma;
            return std::exp(-0.5 * z * z) /
                   (x * d.sigma * std::sqrt(2.0 * std::numbers::pi));
          },
          [x](const Power& d) { return x >= 1.0 ? 0.0 : d.c * std::pow(x, d.c - 1.0); },
      },
      kind_);
}

double ParentDistribution::support_upper() const noexcept {
  return std::holds_alternative<Power>(kind_) ? 1.0
                                              : std::numeric_limits<double>::infinity();
}

LipParams::LipParams(double alpha, double beta, double gamma, std::int64_t n)
    : alpha_(alpha), beta_(beta), gamma_(gamma), n_(n) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw DomainError("alpha must lie in (0, 1)");
  if (!(beta > 0.0 && beta < 1.0)) throw DomainError("beta must lie in (0, 1)");
  if (!(gamma > 0.0 && gamma < 1.0)) throw DomainError("gamma must lie in (0, 1)");
  if (n < 2) throw DomainError("sample size n must be at least 2");
  (void)indices(n, beta);
}

double theta_true(const ParentDistribution& d, double alpha, double beta) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw DomainError("alpha must lie in (0, 1)");
  if (!(beta > 0.0 && beta < 1.0)) throw DomainError("beta must lie in (0, 1)");
  return std::visit(
      Overloaded{
          [&](const ChiSquare&) { return d.cdf(alpha * d.quantile(beta)); },
          [&](const LogNormal& ln) {
            return special::std_normal_cdf(special::std_normal_quantile(beta) +
                                           std::log(alpha) / ln.sigma);
          },
          [&](const Power& pw) { return std::pow(alpha, pw.c) * beta; },
      },
      d.kind());
}

double sample_inverse(const ParentDistribution& d, double u) { return d.quantile(u); }

}  // namespace arpr

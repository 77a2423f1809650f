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

#include "arpr/mc_sim.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "arpr/error.hpp"
#include "arpr/lip_core.hpp"

namespace arpr {

namespace {

// Neumaier-compensated running sum.
class CompensatedSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::fabs(sum_) >= std::fabs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

struct Moments {
  CompensatedSum sum;
  CompensatedSum sum_sq;

  void add(double x) {
    sum.add(x);
    sum_sq.add(x * x);
  }
  double mean(double r) const { return sum.value() / r; }
  double standard_error(double r) const {
    const double m = mean(r);
    const double var = std::max(0.0, (sum_sq.value() - r * m * m) / (r - 1.0));
    return std::sqrt(var / r);
  }
};

std::int64_t eta_materialized(const ParentDistribution& d, const LipParams& p,
                              std::mt19937_64& gen) {
  std::vector<double> incomes(static_cast<std::size_t>(p.n()));
  for (double& x : incomes) x = sample_inverse(d, open_uniform(gen));
  return estimate_w(Sample(std::move(incomes)), p.alpha(), p.beta()).eta;
}

std::int64_t eta_order_statistic(const ParentDistribution& d, const LipParams& p, std::int64_t m,
                                 std::mt19937_64& gen, std::vector<double>& buffer) {
  buffer.resize(static_cast<std::size_t>(p.n()));
  for (double& u : buffer) u = open_uniform(gen);
  const auto nth = buffer.begin() + (m - 1);
  std::nth_element(buffer.begin(), nth, buffer.end());
  const double line = p.alpha() * d.quantile(*nth);
  const double threshold = d.cdf(line);
  // Everything at or below the line sits left of the m-th smallest.
  return std::count_if(buffer.begin(), nth, [&](double u) { return u <= threshold; });
}

}  // namespace

const char* generator_name() noexcept { return "mt19937_64+seed_seq(seed;replication)/v1"; }

std::mt19937_64 replication_stream(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  return std::mt19937_64(seq);
}

double open_uniform(std::mt19937_64& gen) {
  return (static_cast<double>(gen() >> 11) + 0.5) * 0x1.0p-53;
}

SimulationResult run_simulation(const SimulationConfig& cfg) {
  if (cfg.replications < 100) throw ConfigError("simulation needs at least 100 replications");
  const ParentDistribution& d = cfg.distribution;
  const LipParams& p = cfg.params;
  const auto [m, M] = indices(p.n(), p.beta());
  const double theta = theta_true(d, p.alpha(), p.beta());
  const std::vector<ProportionInterval> intervals = ci_theta_table(M, p.beta(), p.gamma());

  std::int64_t covered = 0;
  Moments length;
  Moments covered_length;
  Moments theta_hat;
  std::vector<double> buffer;
  buffer.reserve(static_cast<std::size_t>(p.n()));
  for (std::int64_t r = 0; r < cfg.replications; ++r) {
    auto gen = replication_stream(cfg.seed, static_cast<std::uint64_t>(r));
    const std::int64_t eta = cfg.path == SamplingPath::Materialized
                                 ? eta_materialized(d, p, gen)
                                 : eta_order_statistic(d, p, m, gen, buffer);
    const ProportionInterval& ci = intervals[static_cast<std::size_t>(eta)];
    const bool hit = ci.lower <= theta && theta <= ci.upper;
    const double width = ci.upper - ci.lower;
    covered += hit ? 1 : 0;
    length.add(width);
    covered_length.add(hit ? width : 0.0);
    theta_hat.add(static_cast<double>(eta) / static_cast<double>(p.n()));
  }

  const auto reps = static_cast<double>(cfg.replications);
  const double coverage = static_cast<double>(covered) / reps;
  SimulationResult out;
  out.theta = theta;
  out.empirical_coverage = coverage;
  out.coverage_se = std::sqrt(coverage * (1.0 - coverage) / reps);
  out.mean_length = length.mean(reps);
  out.length_se = length.standard_error(reps);
  out.mean_covered_length = covered_length.mean(reps);
  out.covered_length_se = covered_length.standard_error(reps);
  out.mean_theta_hat = theta_hat.mean(reps);
  out.theta_hat_se = theta_hat.standard_error(reps);
  out.empirical_bias = out.mean_theta_hat - theta;
  out.replications = cfg.replications;
  out.seed = cfg.seed;
  out.generator = generator_name();
  return out;
}

}  // namespace arpr

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

// Seeded Monte Carlo check of the interval: empirical coverage, mean length
// and bias with standard errors.

#ifndef ARPR_MC_SIM_HPP
#define ARPR_MC_SIM_HPP

#include <cstdint>
#include <random>
#include <string>

#include "arpr/distributions.hpp"

namespace arpr {

/// How a replication turns uniforms into the count eta.
enum class SamplingPath {
  /// Every income is drawn as quantile(u); the sample is sorted and
  /// estimate_w is applied. Mirrors what a user does with real data.
  Materialized,
  /// Same uniforms, but only the m-th smallest is pushed through the
  /// quantile function; eta counts uniforms at or below F(α X_{m:n}).
  /// Identical in law (and, up to rounding at the line, in value) because
  /// the quantile map is monotone. Two special-function calls per
  /// replication instead of n.
  OrderStatistic,
};

struct SimulationConfig {
  ParentDistribution distribution;
  LipParams params;
  std::int64_t replications = 100000;
  std::uint64_t seed = 0;
  SamplingPath path = SamplingPath::Materialized;
};

struct SimulationResult {
  double theta;  // true θ the intervals are scored against
  double empirical_coverage;
  double coverage_se;
  double mean_length;
  double length_se;
  double mean_covered_length;
  double covered_length_se;
  double mean_theta_hat;
  double theta_hat_se;
  double empirical_bias;
  std::int64_t replications;
  std::uint64_t seed;
  std::string generator;

  bool operator==(const SimulationResult&) const = default;
};

/// Identifier of the pseudo-random stream recorded in every result.
const char* generator_name() noexcept;

/// The generator for replication `index` of a run seeded with `seed`.
/// Substreams depend only on (seed, index), never on execution order.
std::mt19937_64 replication_stream(std::uint64_t seed, std::uint64_t index);

/// A uniform in the open interval (0, 1) from 53 random bits.
double open_uniform(std::mt19937_64& gen);

/// Throws ConfigError when replications < 100.
SimulationResult run_simulation(const SimulationConfig& cfg);

}  // namespace arpr

#endif  // ARPR_MC_SIM_HPP

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

#include <cmath>
#include <set>

#include "arpr/distributions.hpp"
#include "arpr/error.hpp"
#include "arpr/exact_dist.hpp"
#include "arpr/mc_sim.hpp"
#include "doctest.h"

using arpr::ParentDistribution;
using arpr::SamplingPath;
using arpr::SimulationConfig;

namespace {

SimulationConfig config(const ParentDistribution& d, std::int64_t n, double alpha, double beta,
                        std::int64_t reps, std::uint64_t seed,
                        SamplingPath path = SamplingPath::Materialized) {
  return SimulationConfig{d, arpr::LipParams(alpha, beta, 0.95, n), reps, seed, path};
}

}  // namespace

TEST_CASE("open uniforms stay inside (0, 1)") {
  auto gen = arpr::replication_stream(7, 0);
  double lo = 1.0;
  double hi = 0.0;
  double sum = 0.0;
  const int count = 200000;
  for (int i = 0; i < count; ++i) {
    const double u = arpr::open_uniform(gen);
    lo = std::min(lo, u);
    hi = std::max(hi, u);
    sum += u;
  }
  CHECK(lo > 0.0);
  CHECK(hi < 1.0);
  CHECK(std::fabs(sum / count - 0.5) < 4.0 * std::sqrt(1.0 / 12.0 / count));
}

TEST_CASE("replication streams depend only on seed and index") {
  auto a = arpr::replication_stream(11, 5);
  auto b = arpr::replication_stream(11, 5);
  CHECK(a() == b());
  std::set<std::uint64_t> first;
  for (std::uint64_t seed : {0ULL, 1ULL, 1ULL << 32}) {
    for (std::uint64_t idx : {0ULL, 1ULL, 1ULL << 32}) first.insert(arpr::replication_stream(seed, idx)());
  }
  CHECK(first.size() == 9);
}

TEST_CASE("same seed, same result") {
  const auto cfg = config(ParentDistribution::chi_square(3), 100, 0.5, 0.5, 500, 99);
  const auto a = arpr::run_simulation(cfg);
  const auto b = arpr::run_simulation(cfg);
  CHECK(a == b);
  CHECK(a.replications == 500);
  CHECK(a.seed == 99);
  CHECK(a.generator == arpr::generator_name());
  const auto c = arpr::run_simulation(config(ParentDistribution::chi_square(3), 100, 0.5, 0.5, 500, 100));
  CHECK_FALSE(a == c);
}

TEST_CASE("both sampling paths agree replication by replication") {
  for (const auto& d : {ParentDistribution::chi_square(3), ParentDistribution::log_normal(0, 1),
                        ParentDistribution::power(2.5)}) {
    const auto a = arpr::run_simulation(config(d, 157, 0.6, 0.45, 1000, 3));
    const auto b = arpr::run_simulation(config(d, 157, 0.6, 0.45, 1000, 3, SamplingPath::OrderStatistic));
    CHECK(a.empirical_coverage == b.empirical_coverage);
    CHECK(a.mean_theta_hat == doctest::Approx(b.mean_theta_hat).epsilon(1e-14));
    CHECK(a.mean_length == doctest::Approx(b.mean_length).epsilon(1e-14));
  }
}

TEST_CASE("standard errors follow the binomial formula") {
  const auto r = arpr::run_simulation(config(ParentDistribution::log_normal(0, 1), 80, 0.5, 0.5, 2000, 5,
                                             SamplingPath::OrderStatistic));
  CHECK(r.coverage_se == doctest::Approx(std::sqrt(r.empirical_coverage * (1 - r.empirical_coverage) / 2000)));
  CHECK(r.empirical_bias == doctest::Approx(r.mean_theta_hat - r.theta));
  CHECK(r.theta == doctest::Approx(arpr::theta_true(ParentDistribution::log_normal(0, 1), 0.5, 0.5)));
  CHECK(r.length_se > 0.0);
  CHECK(r.mean_covered_length <= r.mean_length);
}

TEST_CASE("power parent: simulated coverage matches the exact binomial value") {
  const auto d = ParentDistribution::power(1.0);
  const auto sim = arpr::run_simulation(config(d, 200, 0.6, 0.5, 100000, 2024));
  const auto exact = arpr::table_row(d, 200, 0.6, 0.5, 0.95, arpr::PmfModel::BinomialApprox);
  CHECK(std::fabs(sim.empirical_coverage - exact.coverage) <= 3.0 * sim.coverage_se);
  CHECK(std::fabs(sim.mean_length - exact.expected_length) <= 3.0 * sim.length_se);
  CHECK(std::fabs(sim.mean_theta_hat - exact.mean_theta_hat) <= 3.0 * sim.theta_hat_se);
}

TEST_CASE("configuration errors") {
  CHECK_THROWS_AS(arpr::run_simulation(config(ParentDistribution::power(1), 50, 0.5, 0.5, 99, 1)),
                  arpr::ConfigError);
  CHECK_THROWS_AS(arpr::LipParams(0.5, 0.5, 0.95, 1), arpr::DomainError);
}

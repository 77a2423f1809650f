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

// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "arpr/distributions.hpp"
#include "arpr/error.hpp"
#include "arpr/exact_dist.hpp"
#include "arpr/lip_core.hpp"
#include "arpr/mc_sim.hpp"
#include "arpr/special_fn.hpp"

namespace {

using arpr::ParentDistribution;
using arpr::PmfModel;
using Clock = std::chrono::steady_clock;

constexpr std::array<int, 3> kN = {500, 800, 1000};
constexpr std::array<double, 4> kBeta = {0.5, 0.6, 0.7, 0.8};
constexpr double kAlpha = 0.5;
constexpr double kGamma = 0.95;
constexpr double kTableTol = 0.002;

struct Reference {
  const char* label;
  ParentDistribution dist;
  std::array<double, 4> theta;
  double coverage[3][4];
  double length[3][4];
};

const Reference kChi{"chi-square(3)",
                     ParentDistribution::chi_square(3),
                     {0.2429, 0.3115, 0.3921, 0.4915},
                     {{0.9523, 0.9482, 0.9394, 0.9290},
                      {0.9494, 0.9468, 0.9400, 0.9280},
                      {0.9509, 0.9412, 0.9427, 0.9293}},
                     {{0.0605, 0.0658, 0.0699, 0.0725},
                      {0.0475, 0.0517, 0.0551, 0.0570},
                      {0.0424, 0.0459, 0.0493, 0.0510}}};

const Reference kLogN{"lognormal(0,1)",
                      ParentDistribution::log_normal(0, 1),
                      {0.2441, 0.3300, 0.4330, 0.5590},
                      {{0.9368, 0.9316, 0.9134, 0.8984},
                       {0.9345, 0.9233, 0.9165, 0.9039},
                       {0.9366, 0.9288, 0.9140, 0.8984}},
                      {{0.0595, 0.0645, 0.0666, 0.0664},
                       {0.0468, 0.0503, 0.0526, 0.0524},
                       {0.0418, 0.0452, 0.0469, 0.0466}}};

int failures = 0;

void report(int id, const char* name, bool ok, const std::string& detail) {
  std::printf("[%s] %2d %s: %s\n", ok ? "PASS" : "FAIL", id, name, detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

void table_criterion(int id, const char* name, const Reference& ref) {
  const auto t0 = Clock::now();
  double worst = 0.0;
  std::string misses;
  for (std::size_t i = 0; i < kN.size(); ++i) {
    for (std::size_t j = 0; j < kBeta.size(); ++j) {
      const auto r = arpr::table_row(ref.dist, kN[i], kAlpha, kBeta[j], kGamma);
      const double dc = std::fabs(r.coverage - ref.coverage[i][j]);
      const double dl = std::fabs(r.covered_length - ref.length[i][j]);
      worst = std::max({worst, dc, dl});
      if (dc > kTableTol || dl > kTableTol) {
        misses += fmt(" (n=%d beta=%.1f: coverage %.4f vs %.4f, length %.4f vs %.4f)", kN[i], kBeta[j],
                      r.coverage, ref.coverage[i][j], r.covered_length, ref.length[i][j]);
      }
    }
  }
  const double elapsed = seconds_since(t0);
  const bool ok = misses.empty() && elapsed < 60.0;
  report(id, name, ok,
         fmt("%s, 24 values, max |diff| %.4f (tol %.3f), %.2f s", ref.label, worst, kTableTol, elapsed) +
             misses);
}

void theta_headers() {
  int good = 0;
  std::string misses;
  for (const auto* ref : {&kChi, &kLogN}) {
    for (std::size_t j = 0; j < kBeta.size(); ++j) {
      const double theta = arpr::theta_true(ref->dist, kAlpha, kBeta[j]);
      if (fmt("%.4f", theta) == fmt("%.4f", ref->theta[j])) {
        ++good;
      } else {
        misses += fmt(" (%s beta=%.1f: %.6f)", ref->label, kBeta[j], theta);
      }
    }
  }
  report(3, "theta headers", good == 8, fmt("%d/8 round to the reference 4 decimals", good) + misses);
}

void power_exactness() {
  std::mt19937_64 rng(20260401);
  std::uniform_real_distribution<double> c_dist(0.2, 5.0);
  std::uniform_real_distribution<double> unit(0.05, 0.95);
  std::uniform_int_distribution<int> n_dist(10, 2000);
  double worst = 0.0;
  int tuples = 0;
  while (tuples < 20) {
    const double c = c_dist(rng);
    const double alpha = unit(rng);
    const double beta = unit(rng);
    const int n = n_dist(rng);
    if (arpr::floor_beta_n(n, beta) < 1) continue;
    const auto exact = arpr::eta_pmf_exact(ParentDistribution::power(c), alpha, n, beta);
    const auto binom = arpr::eta_pmf_binomial(exact.M, std::pow(alpha, c));
    for (std::size_t k = 0; k < exact.mass.size(); ++k) {
      worst = std::max(worst, std::fabs(exact.mass[k] - binom.mass[k]));
    }
    ++tuples;
  }
  report(4, "power-law exactness", worst <= 1e-10,
         fmt("20 random (c, alpha, n, beta), max |mass diff| %.2e (tol 1e-10)", worst));
}

bool same_estimate(const arpr::Sample& s, double alpha, double beta) {
  return arpr::estimate_w(s, alpha, beta) == arpr::estimate_lq(s, alpha, beta);
}

void estimator_equivalence() {
  std::mt19937_64 rng(77);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_real_distribution<double> level(0.02, 0.98);
  std::uniform_int_distribution<int> size(2, 400);
  int checked = 0;
  int mismatched = 0;
  for (const auto& d : {ParentDistribution::chi_square(3), ParentDistribution::log_normal(0, 1),
                        ParentDistribution::power(2)}) {
    for (int i = 0; i < 1000; ++i) {
      std::vector<double> x(size(rng));
      double beta = level(rng);
      while (arpr::floor_beta_n(static_cast<std::int64_t>(x.size()), beta) < 1) beta = level(rng);
      for (double& v : x) v = d.quantile(std::clamp(unit(rng), 1e-12, 1.0 - 1e-12));
      ++checked;
      if (!same_estimate(arpr::Sample(std::move(x)), level(rng), beta)) ++mismatched;
    }
  }
  // Ties: few distinct values, lines landing exactly on sample points,
  // grid-valued beta where beta * n is an integer.
  std::uniform_int_distribution<int> small(1, 6);
  for (int i = 0; i < 1000; ++i) {
    const int n = 2 * size(rng);
    std::vector<double> x(n);
    for (double& v : x) v = small(rng);
    const std::array<double, 4> alphas = {0.5, 1.0 / 3.0, 0.25, level(rng)};
    double beta = (i % 2 == 0) ? 0.5 : level(rng);
    while (arpr::floor_beta_n(n, beta) < 1) beta = level(rng);
    arpr::Sample s(std::move(x));
    for (double a : alphas) {
      ++checked;
      if (!same_estimate(s, a, beta)) ++mismatched;
    }
  }
  report(5, "estimator equivalence", mismatched == 0,
         fmt("%d comparisons on 3000 continuous and 1000 tie-heavy samples, %d field mismatches", checked, mismatched));
}

void cp_guarantee() {
  int cells = 0;
  double worst_margin = 1.0;
  std::string misses;
  for (int M : {10, 50, 250, 800}) {
    for (double gamma : {0.90, 0.95, 0.99}) {
      const double beta = 0.5;
      const auto table = arpr::ci_theta_table(M, beta, gamma);
      for (int i = 1; i <= 19; ++i) {
        const double p = 0.05 * i;
        const double cov =
            arpr::coverage_and_length(arpr::eta_pmf_binomial(M, p), table, beta * p).coverage;
        ++cells;
        worst_margin = std::min(worst_margin, cov - gamma);
        if (cov < gamma) misses += fmt(" (M=%d gamma=%.2f p=%.2f: %.6f)", M, gamma, p, cov);
      }
    }
  }
  report(6, "Clopper-Pearson guarantee", misses.empty(),
         fmt("%d (p, M, gamma) cells, min coverage - gamma = %.4f", cells, worst_margin) + misses);
}

void special_round_trips() {
  namespace sf = arpr::special;
  std::mt19937_64 rng(4242);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const auto shape = [&] { return std::exp(std::log(0.5) + unit(rng) * std::log(2000.0)); };
  const auto prob = [&] { return std::clamp(unit(rng), 1e-9, 1.0 - 1e-9); };
  double beta_res = 0.0;
  double gamma_res = 0.0;
  double normal_res = 0.0;
  for (int i = 0; i < 10000; ++i) {
    const double a = shape();
    const double b = shape();
    const double d1 = prob();
    beta_res = std::max(beta_res, std::fabs(sf::reg_inc_beta(sf::inv_reg_inc_beta(d1, a, b), a, b) - d1));
    const double s = shape();
    const double d2 = prob();
    gamma_res = std::max(gamma_res, std::fabs(sf::reg_inc_gamma_lower(s, sf::inv_reg_inc_gamma(d2, s)) - d2));
    const double d3 = prob();
    normal_res = std::max(normal_res, std::fabs(sf::std_normal_cdf(sf::std_normal_quantile(d3)) - d3));
  }
  double closed = 0.0;
  for (int i = 0; i < 2000; ++i) {
    const double d = prob();
    const int M = 1 + static_cast<int>(unit(rng) * 1000);
    const double want_beta = -std::expm1(std::log1p(-d) / M);
    closed = std::max(closed, std::fabs(sf::inv_reg_inc_beta(d, 1.0, M) - want_beta) / want_beta);
    const double want_exp = -std::log1p(-d);
    closed = std::max(closed, std::fabs(sf::inv_reg_inc_gamma(d, 1.0) - want_exp) / want_exp);
  }
  const bool ok = beta_res <= 1e-10 && gamma_res <= 1e-10 && normal_res <= 1e-10 && closed <= 1e-12;
  report(7, "special-function round trips", ok,
         fmt("10^4 points each, max residual beta %.1e gamma %.1e normal %.1e (tol 1e-10); "
             "Beta(1,M) and exponential closed forms max rel err %.1e (tol 1e-12)",
             beta_res, gamma_res, normal_res, closed));
}

void monte_carlo_cross_check() {
  struct Cell {
    const Reference* ref;
    int n;
    double beta;
  };
  const std::vector<Cell> cells = {{&kLogN, 500, 0.5}, {&kLogN, 500, 0.6}, {&kLogN, 500, 0.7},
                                   {&kLogN, 500, 0.8}, {&kChi, 500, 0.5},  {&kChi, 500, 0.8}};
  const std::int64_t reps = 100000;
  const std::uint64_t seed = 20260501;
  const auto t0 = Clock::now();
  int within = 0;
  std::string detail;
  arpr::SimulationResult first{};
  for (std::size_t i = 0; i < cells.size(); ++i) {
    const auto& c = cells[i];
    const arpr::SimulationConfig cfg{c.ref->dist, arpr::LipParams(kAlpha, c.beta, kGamma, c.n), reps, seed,
                                     arpr::SamplingPath::Materialized};
    const auto sim = arpr::run_simulation(cfg);
    if (i == 0) first = sim;
    const double exact = arpr::table_row(c.ref->dist, c.n, kAlpha, c.beta, kGamma).coverage;
    const double z = (sim.empirical_coverage - exact) / sim.coverage_se;
    if (std::fabs(z) <= 3.0) ++within;
    detail += fmt(" (%s n=%d beta=%.1f: mc %.4f exact %.4f z %+.2f)", c.ref->label, c.n, c.beta,
                  sim.empirical_coverage, exact, z);
  }
  const auto& c0 = cells[0];
  const auto again = arpr::run_simulation(arpr::SimulationConfig{
      c0.ref->dist, arpr::LipParams(kAlpha, c0.beta, kGamma, c0.n), reps, seed, arpr::SamplingPath::Materialized});
  const bool identical = again == first;
  report(8, "Monte Carlo cross-validation", within >= 6 && identical,
         fmt("R=%lld seed=%llu, %d/%zu cells within 3 SE, rerun %s, %.0f s;", static_cast<long long>(reps),
             static_cast<unsigned long long>(seed), within, cells.size(),
             identical ? "bit-identical" : "DIFFERS", seconds_since(t0)) +
             detail);
}

void quadrature_stability() {
  double worst = 0.0;
  for (const auto* ref : {&kChi, &kLogN}) {
    for (int n : kN) {
      for (double beta : kBeta) {
        const auto a = arpr::table_row(ref->dist, n, kAlpha, beta, kGamma, PmfModel::ExactMixture, 256);
        const auto b = arpr::table_row(ref->dist, n, kAlpha, beta, kGamma, PmfModel::ExactMixture, 512);
        worst = std::max({worst, std::fabs(a.coverage - b.coverage),
                          std::fabs(a.covered_length - b.covered_length)});
      }
    }
  }
  report(9, "quadrature stability", worst <= 1e-8,
         fmt("256 -> 512 nodes over 24 cells, max change %.1e (tol 1e-8)", worst));
}

void bias_sanity() {
  const std::int64_t reps = 100000;
  int within = 0;
  double max_bias = 0.0;
  double max_z = 0.0;
  std::string misses;
  for (int n : kN) {
    for (double beta : kBeta) {
      const auto exact = arpr::table_row(kChi.dist, n, kAlpha, beta, kGamma);
      const auto sim = arpr::run_simulation(arpr::SimulationConfig{
          kChi.dist, arpr::LipParams(kAlpha, beta, kGamma, n), reps, 31337, arpr::SamplingPath::OrderStatistic});
      const double z = (sim.mean_theta_hat - exact.mean_theta_hat) / sim.theta_hat_se;
      max_bias = std::max(max_bias, std::fabs(exact.bias));
      max_z = std::max(max_z, std::fabs(z));
      if (std::fabs(z) <= 3.0) {
        ++within;
      } else {
        misses += fmt(" (n=%d beta=%.1f: z %+.2f)", n, beta, z);
      }
    }
  }
  report(10, "bias sanity", within == 12,
         fmt("%d/12 chi-square cells agree within 3 SE (max |z| %.2f), max |exact bias| %.1e", within, max_z,
             max_bias) +
             misses);
}

void guarded(const std::function<void()>& body, int id, const char* name) {
  try {
    body();
  } catch (const std::exception& e) {
    report(id, name, false, std::string("threw: ") + e.what());
  }
}

}  // namespace

int main() {
  guarded([] { table_criterion(1, "Table 1 reproduction", kChi); }, 1, "Table 1 reproduction");
  guarded([] { table_criterion(2, "Table 2 reproduction", kLogN); }, 2, "Table 2 reproduction");
  guarded(theta_headers, 3, "theta headers");
  guarded(power_exactness, 4, "power-law exactness");
  guarded(estimator_equivalence, 5, "estimator equivalence");
  guarded(cp_guarantee, 6, "Clopper-Pearson guarantee");
  guarded(special_round_trips, 7, "special-function round trips");
  guarded(monte_carlo_cross_check, 8, "Monte Carlo cross-validation");
  guarded(quadrature_stability, 9, "quadrature stability");
  guarded(bias_sanity, 10, "bias sanity");
  std::printf("%d of 10 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}

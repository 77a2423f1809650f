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

// Exact (quadrature, not simulated) law of the count eta and the coverage,
// length and bias of the interval under that law.
//
// Conditional on U = F(X_{m:n}) = u, eta ~ Binomial(M, g(u)) with
// g(u) = F(α F^{-1}(u)) / u, and U ~ Beta(m, n - m + 1). The unconditional
// mass of eta is integrated over u with Gauss-Legendre nodes on the central
// window of the Beta law. For a power-law F, g is the constant α^c and the
// law collapses to Binomial(M, α^c).

#ifndef ARPR_EXACT_DIST_HPP
#define ARPR_EXACT_DIST_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "arpr/distributions.hpp"
#include "arpr/lip_core.hpp"

namespace arpr {

enum class PmfModel { ExactMixture, BinomialApprox };

const char* to_string(PmfModel model) noexcept;

inline constexpr int kDefaultQuadratureNodes = 256;

/// Nodes and weights of an n-point Gauss-Legendre rule on [-1, 1].
struct GaussLegendreRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};
GaussLegendreRule gauss_legendre(int n);

struct EtaPmf {
  std::int64_t M;
  std::vector<double> mass;  // M + 1 entries
  PmfModel model;
  /// Σ mass before renormalization (1 for the binomial model).
  double raw_total;
};

/// F(α F^{-1}(u)) / u; α^c for a power law.
double g_ratio(const ParentDistribution& d, double alpha, double u);

/// Mixture law of eta. Throws NumericalError if the integrated mass misses
/// 1 by more than 1e-8.
EtaPmf eta_pmf_exact(const ParentDistribution& d, double alpha, std::int64_t n, double beta,
                     int nodes = kDefaultQuadratureNodes);

EtaPmf eta_pmf_binomial(std::int64_t M, double p);

struct CoverageAndLength {
  double coverage;
  /// E[U - L].
  double expected_length;
  /// E[(U - L) 1{L <= θ <= U}], the length column of the published tables.
  double covered_length;
};

CoverageAndLength coverage_and_length(const EtaPmf& pmf, double beta, double gamma, double theta);

/// Same, with the per-eta intervals precomputed by ci_theta_table().
CoverageAndLength coverage_and_length(const EtaPmf& pmf,
                                      const std::vector<ProportionInterval>& intervals,
                                      double theta);

struct BiasResult {
  double mean_theta_hat;
  double bias;
};

BiasResult exact_bias(const EtaPmf& pmf, std::int64_t n, double theta);

struct CoverageReport {
  std::string distribution;
  std::int64_t n;
  double alpha;
  double beta;
  double gamma;
  double theta;
  double coverage;
  double expected_length;
  double covered_length;
  double mean_theta_hat;
  double bias;
  PmfModel model;
};

/// One cell of a coverage table.
CoverageReport table_row(const ParentDistribution& d, std::int64_t n, double alpha, double beta,
                         double gamma, PmfModel model = PmfModel::ExactMixture,
                         int nodes = kDefaultQuadratureNodes);

}  // namespace arpr

#endif  // ARPR_EXACT_DIST_HPP

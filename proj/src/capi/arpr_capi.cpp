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

#include "arpr/arpr.h"

#include <algorithm>
#include <cstring>
#include <exception>
#include <new>
#include <string>
#include <vector>

#include "arpr/distributions.hpp"
#include "arpr/error.hpp"
#include "arpr/exact_dist.hpp"
#include "arpr/lip_core.hpp"
#include "arpr/mc_sim.hpp"
#include "arpr/special_fn.hpp"

struct arpr_distribution {
  arpr::ParentDistribution value;
};

struct arpr_sample {
  arpr::Sample value;
};

struct arpr_pmf {
  arpr::EtaPmf value;
};

namespace {

thread_local std::string last_error;

arpr_status fail(arpr_status status, const char* what) {
  last_error = what;
  return status;
}

// Runs fn, translating the core's exception types into status codes.
template <class Fn>
arpr_status guarded(Fn&& fn, std::size_t* bad_line = nullptr) noexcept {
  try {
    fn();
    return ARPR_OK;
  } catch (const arpr::DataError& e) {
    if (bad_line) *bad_line = e.line();
    return fail(ARPR_ERR_DATA, e.what());
  } catch (const arpr::DomainError& e) {
    return fail(ARPR_ERR_DOMAIN, e.what());
  } catch (const arpr::NumericalError& e) {
    return fail(ARPR_ERR_NUMERICAL, e.what());
  } catch (const arpr::ConfigError& e) {
    return fail(ARPR_ERR_CONFIG, e.what());
  } catch (const std::bad_alloc&) {
    return fail(ARPR_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(ARPR_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(ARPR_ERR_INTERNAL, "unknown error");
  }
}

#define ARPR_REQUIRE_NONNULL(p) \
  do {                          \
    if ((p) == nullptr) return fail(ARPR_ERR_NULL, #p " is NULL"); \
  } while (0)

arpr::PmfModel to_model(arpr_model m) {
  switch (m) {
    case ARPR_MODEL_EXACT:
      return arpr::PmfModel::ExactMixture;
    case ARPR_MODEL_BINOMIAL:
      return arpr::PmfModel::BinomialApprox;
  }
  throw arpr::ConfigError("unknown pmf model");
}

arpr_estimate to_c(const arpr::EstimateResult& e) {
  return {e.n, e.eta, e.M, e.theta_hat, e.poverty_line, e.quantile_hat};
}

arpr_interval to_c(const arpr::ProportionInterval& ci) {
  return {ci.lower, ci.upper, ci.level,
          ci.target == arpr::IntervalTarget::Theta ? ARPR_TARGET_THETA : ARPR_TARGET_RATIO_P};
}

}  // namespace

extern "C" {

const char* arpr_version(void) { return "1.0.0"; }

const char* arpr_last_error(void) { return last_error.c_str(); }

const char* arpr_status_name(arpr_status status) {
  switch (status) {
    case ARPR_OK: return "ok";
    case ARPR_ERR_DOMAIN: return "domain error";
    case ARPR_ERR_DATA: return "data error";
    case ARPR_ERR_NUMERICAL: return "numerical failure";
    case ARPR_ERR_CONFIG: return "configuration error";
    case ARPR_ERR_NULL: return "null argument";
    case ARPR_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

arpr_status arpr_reg_inc_beta(double x, double a, double b, double* out) {
  ARPR_REQUIRE_NONNULL(out);
  return guarded([&] { *out = arpr::special::reg_inc_beta(x, a, b); });
}

arpr_status arpr_inv_reg_inc_beta(double delta, double a, double b, double* out) {
  ARPR_REQUIRE_NONNULL(out);
  return guarded([&] { *out = arpr::special::inv_reg_inc_beta(delta, a, b); });
}

arpr_status arpr_reg_inc_gamma_lower(double s, double x, double* out) {
  ARPR_REQUIRE_NONNULL(out);
  return guarded([&] { *out = arpr::special::reg_inc_gamma_lower(s, x); });
}

arpr_status arpr_inv_reg_inc_gamma(double delta, double s, double* out) {
  ARPR_REQUIRE_NONNULL(out);
  return guarded([&] { *out = arpr::special::inv_reg_inc_gamma(delta, s); });
}

arpr_status arpr_std_normal_cdf(double z, double* out) {
  ARPR_REQUIRE_NONNULL(out);
  return guarded([&] { *out = arpr::special::std_normal_cdf(z); });
}

arpr_status arpr_std_normal_quantile(double delta, double* out) {
  ARPR_REQUIRE_NONNULL(out);
  return guarded([&] { *out = arpr::special::std_normal_quantile(delta); });
}

arpr_status arpr_distribution_parse(const char* spec, arpr_distribution** out) {
  ARPR_REQUIRE_NONNULL(spec);
  ARPR_REQUIRE_NONNULL(out);
  return guarded([&] { *out = new arpr_distribution{arpr::ParentDistribution::parse(spec)}; });
}

void arpr_distribution_free(arpr_distribution* d) { delete d; }

arpr_status arpr_distribution_spec(const arpr_distribution* d, char* buf, size_t len,
                                   size_t* needed) {
  ARPR_REQUIRE_NONNULL(d);
  return guarded([&] {
    const std::string spec = d->value.to_spec();
    if (needed) *needed = spec.size() + 1;
    if (buf == nullptr) return;
    if (len < spec.size() + 1) throw arpr::DomainError("buffer too small for distribution spec");
    std::memcpy(buf, spec.c_str(), spec.size() + 1);
  });
}

arpr_status arpr_cdf(const arpr_distribution* d, double x, double* out) {
  ARPR_REQUIRE_NONNULL(d);
  ARPR_REQUIRE_NONNULL(out);
  return guarded([&] { *out = d->value.cdf(x); });
}

arpr_status arpr_quantile(const arpr_distribution* d, double p, double* out) {
  ARPR_REQUIRE_NONNULL(d);
  ARPR_REQUIRE_NONNULL(out);
  return guarded([&] { *out = d->value.quantile(p); });
}

arpr_status arpr_pdf(const arpr_distribution* d, double x, double* out) {
  ARPR_REQUIRE_NONNULL(d);
  ARPR_REQUIRE_NONNULL(out);
  return guarded([&] { *out = d->value.pdf(x); });
}

arpr_status arpr_theta_true(const arpr_distribution* d, double alpha, double beta, double* out) {
  ARPR_REQUIRE_NONNULL(d);
  ARPR_REQUIRE_NONNULL(out);
  return guarded([&] { *out = arpr::theta_true(d->value, alpha, beta); });
}

arpr_status arpr_sample_create(const double* values, size_t count, arpr_sample** out) {
  ARPR_REQUIRE_NONNULL(out);
  if (count > 0) ARPR_REQUIRE_NONNULL(values);
  return guarded([&] {
    std::vector<double> v(values, values + count);
    *out = new arpr_sample{arpr::Sample(std::move(v))};
  });
}

arpr_status arpr_sample_read_file(const char* path, arpr_sample** out, size_t* bad_line) {
  ARPR_REQUIRE_NONNULL(path);
  ARPR_REQUIRE_NONNULL(out);
  return guarded([&] { *out = new arpr_sample{arpr::Sample::read_file(path)}; }, bad_line);
}

void arpr_sample_free(arpr_sample* s) { delete s; }

int64_t arpr_sample_size(const arpr_sample* s) { return s ? s->value.size() : 0; }

arpr_status arpr_indices(int64_t n, double beta, int64_t* m, int64_t* M) {
  ARPR_REQUIRE_NONNULL(m);
  ARPR_REQUIRE_NONNULL(M);
  return guarded([&] {
    const arpr::RankPair r = arpr::indices(n, beta);
    *m = r.m;
    *M = r.M;
  });
}

arpr_status arpr_estimate_w(const arpr_sample* s, double alpha, double beta, arpr_estimate* out) {
  ARPR_REQUIRE_NONNULL(s);
  ARPR_REQUIRE_NONNULL(out);
  return guarded([&] { *out = to_c(arpr::estimate_w(s->value, alpha, beta)); });
}

arpr_status arpr_estimate_lq(const arpr_sample* s, double alpha, double beta, arpr_estimate* out) {
  ARPR_REQUIRE_NONNULL(s);
  ARPR_REQUIRE_NONNULL(out);
  return guarded([&] { *out = to_c(arpr::estimate_lq(s->value, alpha, beta)); });
}

arpr_status arpr_cp_interval_p(int64_t eta, int64_t M, double gamma, arpr_interval* out) {
  ARPR_REQUIRE_NONNULL(out);
  return guarded([&] { *out = to_c(arpr::cp_interval_p(eta, M, gamma)); });
}

arpr_status arpr_ci_theta(int64_t eta, int64_t M, double beta, double gamma, arpr_interval* out) {
  ARPR_REQUIRE_NONNULL(out);
  return guarded([&] { *out = to_c(arpr::ci_theta(eta, M, beta, gamma)); });
}

arpr_status arpr_pmf_exact(const arpr_distribution* d, double alpha, int64_t n, double beta,
                           int nodes, arpr_pmf** out) {
  ARPR_REQUIRE_NONNULL(d);
  ARPR_REQUIRE_NONNULL(out);
  return guarded([&] {
    const int q = nodes > 0 ? nodes : arpr::kDefaultQuadratureNodes;
    *out = new arpr_pmf{arpr::eta_pmf_exact(d->value, alpha, n, beta, q)};
  });
}

arpr_status arpr_pmf_binomial(int64_t M, double p, arpr_pmf** out) {
  ARPR_REQUIRE_NONNULL(out);
  return guarded([&] { *out = new arpr_pmf{arpr::eta_pmf_binomial(M, p)}; });
}

void arpr_pmf_free(arpr_pmf* pmf) { delete pmf; }

int64_t arpr_pmf_trials(const arpr_pmf* pmf) { return pmf ? pmf->value.M : 0; }

arpr_status arpr_pmf_masses(const arpr_pmf* pmf, double* buf, size_t len) {
  ARPR_REQUIRE_NONNULL(pmf);
  ARPR_REQUIRE_NONNULL(buf);
  const auto& mass = pmf->value.mass;
  std::copy_n(mass.begin(), std::min(len, mass.size()), buf);
  return ARPR_OK;
}

arpr_status arpr_coverage_and_length(const arpr_pmf* pmf, double beta, double gamma, double theta,
                                     double* coverage, double* expected_length,
                                     double* covered_length) {
  ARPR_REQUIRE_NONNULL(pmf);
  return guarded([&] {
    const auto cl = arpr::coverage_and_length(pmf->value, beta, gamma, theta);
    if (coverage) *coverage = cl.coverage;
    if (expected_length) *expected_length = cl.expected_length;
    if (covered_length) *covered_length = cl.covered_length;
  });
}

arpr_status arpr_exact_bias(const arpr_pmf* pmf, int64_t n, double theta, double* mean_theta_hat,
                            double* bias) {
  ARPR_REQUIRE_NONNULL(pmf);
  return guarded([&] {
    const auto b = arpr::exact_bias(pmf->value, n, theta);
    if (mean_theta_hat) *mean_theta_hat = b.mean_theta_hat;
    if (bias) *bias = b.bias;
  });
}

arpr_status arpr_table_row(const arpr_distribution* d, int64_t n, double alpha, double beta,
                           double gamma, arpr_model model, int nodes, arpr_coverage_report* out) {
  ARPR_REQUIRE_NONNULL(d);
  ARPR_REQUIRE_NONNULL(out);
  return guarded([&] {
    const int q = nodes > 0 ? nodes : arpr::kDefaultQuadratureNodes;
    const auto r = arpr::table_row(d->value, n, alpha, beta, gamma, to_model(model), q);
    *out = {r.n,        r.alpha,          r.beta,           r.gamma,
            r.theta,    r.coverage,       r.expected_length, r.covered_length,
            r.mean_theta_hat, r.bias, model};
  });
}

const char* arpr_generator_name(void) { return arpr::generator_name(); }

arpr_status arpr_simulate(const arpr_distribution* d, const arpr_simulation_config* cfg,
                          arpr_simulation_result* out) {
  ARPR_REQUIRE_NONNULL(d);
  ARPR_REQUIRE_NONNULL(cfg);
  ARPR_REQUIRE_NONNULL(out);
  return guarded([&] {
    arpr::SimulationConfig sc{d->value, arpr::LipParams(cfg->alpha, cfg->beta, cfg->gamma, cfg->n),
                              cfg->replications, cfg->seed,
                              cfg->sampling == ARPR_SAMPLING_ORDER_STATISTIC
                                  ? arpr::SamplingPath::OrderStatistic
                                  : arpr::SamplingPath::Materialized};
    const arpr::SimulationResult r = arpr::run_simulation(sc);
    *out = {r.theta,          r.empirical_coverage, r.coverage_se,   r.mean_length,
            r.length_se,      r.mean_covered_length, r.covered_length_se, r.mean_theta_hat,
            r.theta_hat_se,   r.empirical_bias,     r.replications,  r.seed};
  });
}

}  // extern "C"

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

// arpr: command-line front end over the C API.
//
//   arpr estimate --input FILE [--alpha 0.6] [--beta 0.5] [--gamma 0.95]
//   arpr coverage --dist SPEC --n LIST --beta LIST [--alpha 0.5] [--gamma 0.95]
//                 [--method exact|binomial] [--decimals N]
//   arpr table --which 1|2
//   arpr simulate --dist SPEC --n INT --reps INT --seed UINT64
//                 [--alpha 0.6] [--beta 0.5] [--gamma 0.95]
//                 [--sampling materialized|order-statistic]
//
// Output is CSV ('.' decimal point, '#' comment lines). Exit codes: 0 ok,
// 1 usage, 2 data, 3 numerical.

#include <array>
#include <charconv>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "CLI11.hpp"
#include "arpr/arpr.h"

namespace {

enum ExitCode { kOk = 0, kUsage = 1, kData = 2, kNumerical = 3 };

struct Failure {
  int code;
  std::string message;
};

int exit_code_for(arpr_status status) {
  switch (status) {
    case ARPR_OK:
      return kOk;
    case ARPR_ERR_DATA:
      return kData;
    case ARPR_ERR_NUMERICAL:
    case ARPR_ERR_INTERNAL:
      return kNumerical;
    case ARPR_ERR_DOMAIN:
    case ARPR_ERR_CONFIG:
    case ARPR_ERR_NULL:
      return kUsage;
  }
  return kNumerical;
}

void check(arpr_status status) {
  if (status != ARPR_OK) throw Failure{exit_code_for(status), arpr_last_error()};
}

struct DistributionDeleter {
  void operator()(arpr_distribution* d) const { arpr_distribution_free(d); }
};
struct SampleDeleter {
  void operator()(arpr_sample* s) const { arpr_sample_free(s); }
};
using DistributionPtr = std::unique_ptr<arpr_distribution, DistributionDeleter>;
using SamplePtr = std::unique_ptr<arpr_sample, SampleDeleter>;

DistributionPtr parse_distribution(const std::string& spec) {
  arpr_distribution* d = nullptr;
  check(arpr_distribution_parse(spec.c_str(), &d));
  return DistributionPtr(d);
}

std::string canonical_spec(const arpr_distribution* d) {
  std::size_t needed = 0;
  check(arpr_distribution_spec(d, nullptr, 0, &needed));
  std::string buf(needed, '\0');
  check(arpr_distribution_spec(d, buf.data(), buf.size(), &needed));
  buf.resize(needed - 1);
  return buf;
}

// Locale-independent number formatting.
std::string full(double v) {
  std::array<char, 40> buf{};
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v,
                                 std::chars_format::general, 17);
  return std::string(buf.data(), ptr);
}

std::string shortest(double v) {
  std::array<char, 40> buf{};
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), ptr);
}

std::string fixed(double v, int decimals) {
  std::array<char, 64> buf{};
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v,
                                 std::chars_format::fixed, decimals);
  return std::string(buf.data(), ptr);
}

template <class T>
std::vector<T> parse_list(const std::string& text, const char* flag) {
  std::vector<T> out;
  std::string_view rest(text);
  while (true) {
    const std::size_t comma = rest.find(',');
    const std::string_view item = rest.substr(0, comma);
    T value{};
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (item.empty() || ec != std::errc() || ptr != item.data() + item.size()) {
      throw Failure{kUsage, std::string("bad value '") + std::string(item) + "' in " + flag};
    }
    out.push_back(value);
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  return out;
}

struct CoverageArgs {
  std::string dist;
  std::string n_list;
  std::string beta_list;
  double alpha = 0.5;
  double gamma = 0.95;
  std::string method = "exact";
  std::optional<int> decimals;
};

void write_coverage(std::ostream& out, const CoverageArgs& args) {
  const DistributionPtr dist = parse_distribution(args.dist);
  const std::string spec = canonical_spec(dist.get());
  const auto ns = parse_list<std::int64_t>(args.n_list, "--n");
  const auto betas = parse_list<double>(args.beta_list, "--beta");
  const arpr_model model = args.method == "binomial" ? ARPR_MODEL_BINOMIAL : ARPR_MODEL_EXACT;
  const auto num = [&](double v) { return args.decimals ? fixed(v, *args.decimals) : full(v); };

  // Compute every cell before writing so a failure leaves no partial table.
  std::ostringstream body;
  body << "dist,n,alpha,beta,gamma,theta,coverage,length,mean,bias,method,full_length\n";
  for (std::int64_t n : ns) {
    for (double beta : betas) {
      arpr_coverage_report r{};
      check(arpr_table_row(dist.get(), n, args.alpha, beta, args.gamma, model, 0, &r));
      body << spec << ',' << n << ',' << shortest(args.alpha) << ',' << shortest(beta) << ','
           << shortest(args.gamma) << ',' << num(r.theta) << ',' << num(r.coverage) << ','
           << num(r.covered_length) << ',' << num(r.mean_theta_hat) << ',' << num(r.bias) << ','
           << args.method << ',' << num(r.expected_length) << '\n';
    }
  }
  out << body.str();
}

int run(int argc, char** argv) {
  CLI::App app{"Low-income proportion (at-risk-of-poverty rate) inference"};
  app.require_subcommand(1);
  std::string output;
  app.add_option("-o,--output", output, "Write CSV here instead of standard output");

  // estimate
  auto* estimate = app.add_subcommand("estimate", "Estimate the rate and its interval from incomes");
  std::string input;
  double est_alpha = 0.6;
  double est_beta = 0.5;
  double est_gamma = 0.95;
  estimate->add_option("--input", input, "Income file, one value per line")->required();
  estimate->add_option("--alpha", est_alpha, "Fraction of the quantile defining the line");
  estimate->add_option("--beta", est_beta, "Quantile level");
  estimate->add_option("--gamma", est_gamma, "Confidence level");

  // coverage
  auto* coverage = app.add_subcommand("coverage", "Exact coverage and length over an (n, beta) grid");
  CoverageArgs cov;
  coverage->add_option("--dist", cov.dist, "chisq:<df> | lognormal:<mu>:<sigma> | power:<c>")
      ->required();
  coverage->add_option("--n", cov.n_list, "Comma-separated sample sizes")->required();
  coverage->add_option("--beta", cov.beta_list, "Comma-separated quantile levels")->required();
  coverage->add_option("--alpha", cov.alpha, "Fraction of the quantile defining the line");
  coverage->add_option("--gamma", cov.gamma, "Confidence level");
  coverage->add_option("--method", cov.method, "Law of eta")
      ->check(CLI::IsMember({"exact", "binomial"}));
  int decimals = -1;
  coverage->add_option("--decimals", decimals, "Round statistics to this many decimals")
      ->check(CLI::Range(0, 17));

  // table
  auto* table = app.add_subcommand("table", "Reproduce a reference coverage table");
  int which = 0;
  table->add_option("--which", which, "1: chisq:3, 2: lognormal:0:1")
      ->required()
      ->check(CLI::IsMember({1, 2}));

  // simulate
  auto* simulate = app.add_subcommand("simulate", "Seeded Monte Carlo coverage check");
  std::string sim_dist;
  std::int64_t sim_n = 0;
  std::int64_t reps = 0;
  std::uint64_t seed = 0;
  double sim_alpha = 0.6;
  double sim_beta = 0.5;
  double sim_gamma = 0.95;
  std::string sampling = "materialized";
  simulate->add_option("--dist", sim_dist, "Distribution spec")->required();
  simulate->add_option("--n", sim_n, "Sample size")->required();
  simulate->add_option("--reps", reps, "Replications (>= 100)")->required();
  simulate->add_option("--seed", seed, "Seed of the pseudo-random stream")->required();
  simulate->add_option("--alpha", sim_alpha, "Fraction of the quantile defining the line");
  simulate->add_option("--beta", sim_beta, "Quantile level");
  simulate->add_option("--gamma", sim_gamma, "Confidence level");
  simulate->add_option("--sampling", sampling, "How incomes are generated")
      ->check(CLI::IsMember({"materialized", "order-statistic"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    std::cerr << "arpr: " << e.what() << "\n";
    return kUsage;
  }

  std::ostringstream out;
  if (estimate->parsed()) {
    arpr_sample* raw = nullptr;
    std::size_t bad_line = 0;
    const arpr_status st = arpr_sample_read_file(input.c_str(), &raw, &bad_line);
    if (st != ARPR_OK) throw Failure{exit_code_for(st), arpr_last_error()};
    const SamplePtr sample(raw);
    arpr_estimate est{};
    check(arpr_estimate_w(sample.get(), est_alpha, est_beta, &est));
    arpr_interval ci{};
    check(arpr_ci_theta(est.eta, est.M, est_beta, est_gamma, &ci));
    out << "# arpr estimate alpha=" << shortest(est_alpha) << " beta=" << shortest(est_beta)
        << " gamma=" << shortest(est_gamma) << " poverty_line=" << full(est.poverty_line)
        << " quantile_hat=" << full(est.quantile_hat) << "\n";
    out << "n,eta,M,theta_hat,ci_lower,ci_upper,gamma\n";
    out << est.n << ',' << est.eta << ',' << est.M << ',' << full(est.theta_hat) << ','
        << full(ci.lower) << ',' << full(ci.upper) << ',' << shortest(est_gamma) << '\n';
  } else if (coverage->parsed()) {
    if (decimals >= 0) cov.decimals = decimals;
    out << "# arpr coverage method=" << cov.method << "\n";
    write_coverage(out, cov);
  } else if (table->parsed()) {
    CoverageArgs t;
    t.dist = which == 1 ? "chisq:3" : "lognormal:0:1";
    t.n_list = "500,800,1000";
    t.beta_list = "0.5,0.6,0.7,0.8";
    t.decimals = 4;
    out << "# arpr table " << which << ": coverage and length of the interval for F = " << t.dist
        << ", alpha=0.5, gamma=0.95\n";
    write_coverage(out, t);
  } else if (simulate->parsed()) {
    const DistributionPtr dist = parse_distribution(sim_dist);
    arpr_simulation_config cfg{sim_n,
                               sim_alpha,
                               sim_beta,
                               sim_gamma,
                               reps,
                               seed,
                               sampling == "order-statistic" ? ARPR_SAMPLING_ORDER_STATISTIC
                                                             : ARPR_SAMPLING_MATERIALIZED};
    arpr_simulation_result r{};
    check(arpr_simulate(dist.get(), &cfg, &r));
    out << "# arpr simulate sampling=" << sampling << "\n";
    out << "dist,n,alpha,beta,gamma,theta,replications,seed,generator,coverage,coverage_se,"
           "length,length_se,covered_length,covered_length_se,mean,mean_se,bias\n";
    out << canonical_spec(dist.get()) << ',' << sim_n << ',' << shortest(sim_alpha) << ','
        << shortest(sim_beta) << ',' << shortest(sim_gamma) << ',' << full(r.theta) << ','
        << r.replications << ',' << r.seed << ',' << arpr_generator_name() << ','
        << full(r.coverage) << ',' << full(r.coverage_se) << ',' << full(r.mean_length) << ','
        << full(r.length_se) << ',' << full(r.mean_covered_length) << ','
        << full(r.covered_length_se) << ',' << full(r.mean_theta_hat) << ','
        << full(r.theta_hat_se) << ',' << full(r.bias) << '\n';
  }

  if (output.empty()) {
    std::cout << out.str();
    std::cout.flush();
  } else {
    std::ofstream file(output, std::ios::binary);
    if (!file) throw Failure{kUsage, "cannot open output file '" + output + "'"};
    file << out.str();
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const Failure& f) {
    std::cerr << "arpr: " << f.message << "\n";
    return f.code;
  } catch (const std::exception& e) {
    std::cerr << "arpr: " << e.what() << "\n";
    return kNumerical;
  }
}

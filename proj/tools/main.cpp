// Copyright 2026 The qlsi Authors
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
#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "qlsi/converse.hpp"
#include "qlsi/entropy.hpp"
#include "qlsi/errors.hpp"
#include "qlsi/generator_io.hpp"
#include "qlsi/lsi.hpp"
#include "qlsi/matrix_io.hpp"
#include "qlsi/weighted_lp.hpp"
#include "qlsi_app/experiment.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitOperational = 1;
constexpr int kExitViolation = 2;

void print(const nlohmann::json& j) { std::cout << j.dump(2) << '\n'; }

std::string num(double v) { return qlsi::app::format_double(v); }

int cmd_run(const std::string& path, const std::string& output_override) {
  qlsi::app::ExperimentConfig cfg = qlsi::app::load_config(path);
  if (!output_override.empty()) cfg.output = output_override;
  const qlsi::app::Report report = qlsi::app::run(cfg);
  if (cfg.output.empty()) {
    std::cout << qlsi::app::report_csv(report);
  } else {
    qlsi::app::write_report(report, cfg.output);
  }
  const nlohmann::json summary = qlsi::app::report_summary(report);
  std::cerr << cfg.suite << ": " << report.rows.size() << " rows, " << report.failures() << " failing\n";
  if (!report.pass()) {
    std::cerr << "violation: " << summary.value("worst", nlohmann::json::object()).dump() << '\n';
    return kExitViolation;
  }
  return kExitPass;
}

int cmd_norms(const std::string& sigma_path, const std::string& x_path, double p) {
  const qlsi::WeightedSpace w(qlsi::DensityMatrix(qlsi::load_matrix_file(sigma_path), qlsi::Strictness::Definite));
  const qlsi::ComplexMatrix x = qlsi::load_matrix_file(x_path);
  nlohmann::json out{{"p", num(p)}, {"norm", num(qlsi::weighted_norm(w, x, p))}};
  if (p != 0.0 && std::isfinite(p)) {
    try {
      out["entropy"] = num(qlsi::ent_p(w, x, p).value);
    } catch (const qlsi::DomainError&) {
      // Entropy is only defined for positive operators.
    }
  }
  print(out);
  return kExitPass;
}

int cmd_qht(const std::string& path, int n, double eps) {
  const nlohmann::json doc = qlsi::load_json_file(path);
  if (!doc.contains("rho") || !doc.contains("sigma")) throw qlsi::ParseError("instance: needs 'rho' and 'sigma'");
  const qlsi::DensityMatrix rho(qlsi::matrix_from_json(doc["rho"]), qlsi::Strictness::Definite);
  const qlsi::DensityMatrix sigma(qlsi::matrix_from_json(doc["sigma"]), qlsi::Strictness::Definite);
  if (n <= 0) n = doc.value("n", 1);
  const qlsi::HypothesisInstance inst(rho, sigma, n);
  const auto np = qlsi::np_oracle(rho, sigma, n, eps);
  const double bound = qlsi::beta_lower_bound(inst, eps);
  print({{"n", n},
         {"eps", num(eps)},
         {"relative_entropy", num(inst.rel_ent)},
         {"gamma", num(inst.gamma)},
         {"gamma_below_one", inst.gamma_below_one},
         {"beta_exact", num(np.beta)},
         {"beta_bound", num(bound)},
         {"margin", num(np.beta - bound)}});
  return np.beta >= bound - 1e-8 ? kExitPass : kExitViolation;
}

int cmd_lsi_estimate(const std::string& gen_path, double p, int starts, std::uint64_t seed) {
  const qlsi::LindbladGenerator gen = qlsi::load_generator_file(gen_path);
  const qlsi::WeightedSpace w(gen.sigma());
  qlsi::LsiOptions o;
  o.starts = starts;
  o.seed = seed;
  const qlsi::LSIEstimate e = qlsi::lsi_constant_estimate(w, gen, p, o);
  print({{"p", num(p)},
         {"value", num(e.value)},
         {"sampled_floor", num(e.sampled_floor)},
         {"diagonal_value", num(e.diagonal_value)},
         {"starts", e.starts},
         {"converged", e.converged},
         {"witness", qlsi::matrix_to_json(e.witness)}});
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"qlsi: weighted norms, log-Sobolev constants and converse bounds"};
  app.require_subcommand(1);

  std::string config_path, output;
  auto* run = app.add_subcommand("run", "Run an experiment suite from a TOML or JSON config");
  run->add_option("config", config_path, "Experiment config")->required()->check(CLI::ExistingFile);
  run->add_option("-o,--output", output, "Output path prefix (overrides the config)");

  std::string sigma_path, x_path;
  double p = 2.0;
  auto* norms = app.add_subcommand("norms", "Weighted p-norm and p-entropy of an operator");
  norms->add_option("--sigma", sigma_path, "Reference state matrix")->required()->check(CLI::ExistingFile);
  norms->add_option("--x", x_path, "Operator matrix")->required()->check(CLI::ExistingFile);
  norms->add_option("--p", p, "Exponent");

  std::string instance_path;
  int n = 0;
  double eps = 0.1;
  auto* qht = app.add_subcommand("qht", "Exact type II error against the strong converse bound");
  qht->add_option("--instance", instance_path, "Instance document")->required()->check(CLI::ExistingFile);
  qht->add_option("--n", n, "Number of copies (defaults to the instance)");
  qht->add_option("--eps", eps, "Type I error");

  auto* lsi = app.add_subcommand("lsi", "Log-Sobolev constants");
  lsi->require_subcommand(1);
  std::string gen_path;
  double lsi_p = 2.0;
  int starts = 32;
  std::uint64_t seed = 0;
  auto* estimate = lsi->add_subcommand("estimate", "Estimate alpha_p by multi-start search");
  estimate->add_option("--gen", gen_path, "Generator document")->required()->check(CLI::ExistingFile);
  estimate->add_option("--p", lsi_p, "Exponent in [0.05, 2]");
  estimate->add_option("--starts", starts, "Number of starts")->check(CLI::PositiveNumber);
  estimate->add_option("--seed", seed, "Seed")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitOperational;
  }

  try {
    if (*run) return cmd_run(config_path, output);
    if (*norms) return cmd_norms(sigma_path, x_path, p);
    if (*qht) return cmd_qht(instance_path, n, eps);
    if (*estimate) return cmd_lsi_estimate(gen_path, lsi_p, starts, seed);
  } catch (const qlsi::Error& e) {
    std::cerr << "error[" << qlsi::to_string(e.kind()) << "]: " << e.what() << '\n';
    return kExitOperational;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitOperational;
  }
  return kExitOperational;
}

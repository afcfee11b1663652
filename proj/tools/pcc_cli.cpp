// Copyright 2026 The pcc Authors.
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

// Command-line pipeline around the library: instance generation (gen),
// end-to-end solve-and-certify runs (pcc), certification of a supplied
// labeling (certify), phase-diagram sweeps (sweep), and brute-force ground
// truth (oracle).
//
// Exit codes for pcc/certify: 0 = Certified, 2 = NotSure, 1 = error.
// All other subcommands: 0 = success, 1 = error.

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "pcc/pcc.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitNotSure = 2;

std::int64_t dense_threshold_from_env() {
  if (const char* env = std::getenv("PCC_DENSE_THRESHOLD")) {
    try {
      const std::int64_t v = std::stoll(env);
      if (v > 0) return v;
    } catch (const std::exception&) {
    }
    std::cerr << "warning: ignoring bad PCC_DENSE_THRESHOLD='" << env
              << "'\n";
  }
  return pcc::kDefaultDenseThreshold;
}

// Flags shared by every subcommand that samples instances.
struct GenParamsFlags {
  std::int64_t n = 0;
  std::optional<double> p, q, alpha, beta;

  void attach(CLI::App& cmd, bool require_n) {
    auto* n_opt = cmd.add_option("--n", n, "vertex count (even)");
    if (require_n) n_opt->required();
    cmd.add_option("--p", p, "within-cluster edge probability");
    cmd.add_option("--q", q, "cross-cluster edge probability");
    cmd.add_option("--alpha", alpha, "log-scale p = alpha*ln(n)/n");
    cmd.add_option("--beta", beta, "log-scale q = beta*ln(n)/n");
  }

  bool any_probability() const { return p || q || alpha || beta; }

  pcc::SbmParams resolve() const {
    const bool direct = p.has_value() || q.has_value();
    const bool logscale = alpha.has_value() || beta.has_value();
    if (direct == logscale) {
      throw pcc::Error("give either --p/--q or --alpha/--beta");
    }
    if (direct) {
      if (!p || !q) throw pcc::Error("--p and --q must be given together");
      return pcc::make_params(n, *p, *q);
    }
    if (!alpha || !beta) {
      throw pcc::Error("--alpha and --beta must be given together");
    }
    return pcc::make_params_logscale(n, *alpha, *beta);
  }
};

struct CertifyFlags {
  pcc::CertifyMethod method = pcc::CertifyMethod::Auto;
  int iters = 200;
  int restarts = 3;
  std::optional<double> tol;

  void attach(CLI::App& cmd) {
    static const std::map<std::string, pcc::CertifyMethod> kMethods{
        {"auto", pcc::CertifyMethod::Auto},
        {"dense", pcc::CertifyMethod::Dense},
        {"cholesky", pcc::CertifyMethod::Cholesky},
        {"lanczos", pcc::CertifyMethod::Lanczos}};
    cmd.add_option("--method", method,
                   "lambda_2 check: dense, cholesky, or lanczos "
                   "(default: dense up to the dense threshold, then lanczos)")
        ->transform(CLI::CheckedTransformer(kMethods, CLI::ignore_case));
    cmd.add_option("--iters", iters, "Lanczos steps per restart");
    cmd.add_option("--restarts", restarts, "independent Lanczos restarts");
    cmd.add_option("--tol", tol,
                   "certification slack tau (default scales with n*max|d|)");
  }

  pcc::CertifyConfig resolve(std::uint64_t seed) const {
    pcc::CertifyConfig cfg;
    cfg.method = method;
    cfg.dense_threshold = dense_threshold_from_env();
    cfg.psd_tol = tol;
    cfg.lanczos_iters = iters;
    cfg.restarts = restarts;
    cfg.seed = seed;
    return cfg;
  }
};

struct SolverFlags {
  int iters = 300;
  int refine_passes = 50;
  double tol = 1e-8;

  void attach(CLI::App& cmd) {
    cmd.add_option("--solver-iters", iters,
                   "Lanczos budget for the leading eigenvector");
    cmd.add_option("--refine-passes", refine_passes,
                   "max greedy swap refinements");
    cmd.add_option("--solver-tol", tol, "eigensolver residual tolerance");
  }

  pcc::SolverConfig resolve(std::uint64_t seed) const {
    return pcc::SolverConfig{iters, refine_passes, seed, tol};
  }
};

int print_report_and_exit_code(const pcc::CertificateReport& report,
                               nlohmann::json extra,
                               const std::string& out_path) {
  nlohmann::json j = pcc::report_to_json(report);
  for (auto& [key, value] : extra.items()) j[key] = value;
  if (out_path.empty()) {
    std::cout << j.dump(2) << '\n';
  } else {
    std::ofstream os(out_path);
    if (!os) throw pcc::Error("cannot open '" + out_path + "'");
    os << j.dump(2) << '\n';
  }
  return report.status == pcc::CertStatus::Certified ? kExitOk : kExitNotSure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "probably-certifiably-correct minimum bisection under the "
      "two-community stochastic block model"};
  app.require_subcommand(1);
  app.set_config("--config", "",
                 "flat key=value config file; command-line flags override");
  app.get_config_formatter_base()->valueSeparator('=');

  int exit_code = kExitOk;

  // ---- gen ----------------------------------------------------------
  auto* gen = app.add_subcommand("gen", "sample an instance to a file");
  auto gen_params = std::make_shared<GenParamsFlags>();
  auto gen_seed = std::make_shared<std::uint64_t>(0);
  auto gen_out = std::make_shared<std::string>();
  gen_params->attach(*gen, /*require_n=*/true);
  gen->add_option("--seed", *gen_seed, "RNG seed");
  gen->add_option("--out", *gen_out, "output path (.json for the JSON mirror)")
      ->required();
  gen->callback([=] {
    const pcc::SbmParams params = gen_params->resolve();
    const pcc::Instance inst = pcc::sample_instance(params, *gen_seed);
    pcc::save_instance(inst, *gen_out);
  });

  // ---- pcc ----------------------------------------------------------
  auto* run = app.add_subcommand(
      "pcc", "solve and certify: sample or load, recover, certify");
  auto run_in = std::make_shared<std::string>();
  auto run_params = std::make_shared<GenParamsFlags>();
  auto run_seed = std::make_shared<std::uint64_t>(0);
  auto run_out = std::make_shared<std::string>();
  auto run_solver = std::make_shared<SolverFlags>();
  auto run_certify = std::make_shared<CertifyFlags>();
  run->add_option("--in", *run_in, "graph file (omit to sample via --n ...)");
  run_params->attach(*run, /*require_n=*/false);
  run->add_option("--seed", *run_seed, "master seed for all randomness");
  run->add_option("--out", *run_out, "write the report JSON here");
  run_solver->attach(*run);
  run_certify->attach(*run);
  run->callback([=, &exit_code] {
    pcc::Instance inst;
    if (!run_in->empty()) {
      if (run_params->any_probability()) {
        throw pcc::Error("--in and generation parameters are exclusive");
      }
      inst = pcc::load_instance(*run_in);
    } else {
      if (run_params->n == 0) throw pcc::Error("need --in or --n");
      inst = pcc::sample_instance(run_params->resolve(), *run_seed);
    }
    const pcc::SignedAdjacency B(inst);
    const pcc::SolveResult sol =
        pcc::solve(B, run_solver->resolve(
                          pcc::rng::derive(*run_seed, pcc::rng::kLaneSolver)));
    const pcc::CertificateReport report =
        pcc::certify(B, sol.x,
                     run_certify->resolve(pcc::rng::derive(
                         *run_seed, pcc::rng::kLaneCertify)));
    nlohmann::json extra;
    extra["solver"] = pcc::solver_to_json(sol);
    if (inst.hidden) {
      extra["match_hidden"] = sol.x.same_up_to_sign(*inst.hidden);
    }
    exit_code = print_report_and_exit_code(report, extra, *run_out);
  });

  // ---- certify ------------------------------------------------------
  auto* cert = app.add_subcommand(
      "certify", "certify a supplied labeling against a graph");
  auto cert_in = std::make_shared<std::string>();
  auto cert_part = std::make_shared<std::string>();
  auto cert_seed = std::make_shared<std::uint64_t>(0);
  auto cert_out = std::make_shared<std::string>();
  auto cert_flags = std::make_shared<CertifyFlags>();
  cert->add_option("--in", *cert_in, "graph file")->required();
  cert->add_option("--partition", *cert_part,
                   "partition file: one line of +/-1 labels")
      ->required();
  cert->add_option("--seed", *cert_seed, "seed for the randomized method");
  cert->add_option("--out", *cert_out, "write the report JSON here");
  cert_flags->attach(*cert);
  cert->callback([=, &exit_code] {
    const pcc::Instance inst = pcc::load_instance(*cert_in);
    const pcc::SignedAdjacency B(inst);
    const pcc::Partition x = pcc::load_partition(*cert_part);
    const pcc::CertificateReport report =
        pcc::certify(B, x, cert_flags->resolve(*cert_seed));
    exit_code =
        print_report_and_exit_code(report, nlohmann::json::object(), *cert_out);
  });

  // ---- sweep --------------------------------------------------------
  auto* sweep = app.add_subcommand(
      "sweep", "grid experiment over (alpha, beta) writing a CSV");
  auto sweep_cfg = std::make_shared<pcc::SweepConfig>();
  auto sweep_out = std::make_shared<std::string>();
  auto sweep_solver = std::make_shared<SolverFlags>();
  auto sweep_certify = std::make_shared<CertifyFlags>();
  sweep->add_option("--n", sweep_cfg->n, "vertex count (even)")->required();
  sweep->add_option("--alpha", sweep_cfg->alpha_grid, "alpha grid")
      ->required()
      ->delimiter(',');
  sweep->add_option("--beta", sweep_cfg->beta_grid, "beta grid")
      ->required()
      ->delimiter(',');
  sweep->add_option("--trials", sweep_cfg->trials, "trials per grid cell");
  sweep->add_option("--seed", sweep_cfg->master_seed, "master seed");
  sweep->add_option("--threads", sweep_cfg->threads,
                    "worker threads (results are thread-count invariant)");
  sweep->add_option("--out", *sweep_out, "output CSV path")->required();
  sweep_solver->attach(*sweep);
  sweep_certify->attach(*sweep);
  sweep->callback([=] {
    sweep_cfg->solver = sweep_solver->resolve(0);
    sweep_cfg->certify = sweep_certify->resolve(0);
    const std::vector<pcc::SweepRecord> records = pcc::run_sweep(*sweep_cfg);
    std::ofstream os(*sweep_out);
    if (!os) throw pcc::Error("cannot open '" + *sweep_out + "'");
    pcc::write_sweep_csv(records, os);
  });

  // ---- oracle -------------------------------------------------------
  auto* oracle = app.add_subcommand(
      "oracle", "exact minimum bisection by enumeration (n <= 24)");
  auto oracle_in = std::make_shared<std::string>();
  oracle->add_option("--in", *oracle_in, "graph file")->required();
  oracle->callback([=] {
    const pcc::Instance inst = pcc::load_instance(*oracle_in);
    const pcc::SignedAdjacency B(inst);
    const pcc::BruteForceResult bf = pcc::brute_force_bisection(B);
    // Streamed by hand: the optima list can be large under ties.
    std::cout << "{\n  \"opt_value\": " << bf.opt_value
              << ",\n  \"num_optima\": " << bf.num_optima()
              << ",\n  \"optima\": [";
    for (std::size_t k = 0; k < bf.optima_masks.size(); ++k) {
      std::cout << (k ? ",\n    [" : "\n    [");
      for (std::int64_t i = 0; i < bf.n; ++i) {
        std::cout << (i ? ", " : "")
                  << ((bf.optima_masks[k] >> i) & 1u ? 1 : -1);
      }
      std::cout << ']';
    }
    std::cout << "\n  ]\n}\n";
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitError;
  } catch (const pcc::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
  return exit_code;
}

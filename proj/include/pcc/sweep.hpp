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

#pragma once

#include <atomic>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <ostream>
#include <string>
#include <thread>
#include <vector>

#include "pcc/certify.hpp"
#include "pcc/errors.hpp"
#include "pcc/rng.hpp"
#include "pcc/sbm.hpp"
#include "pcc/solver.hpp"

namespace pcc {

/// Grid experiment over log-scale parameters: for every (alpha, beta) cell
/// and trial, sample an instance, recover a candidate, certify it, and
/// compare against the planted partition.  Per-trial seeds are a pure
/// function of (master_seed, cell, trial), so results are identical across
/// thread counts and run orders.
struct SweepConfig {
  std::int64_t n = 0;
  std::vector<double> alpha_grid;
  std::vector<double> beta_grid;
  int trials = 1;
  SolverConfig solver;
  CertifyConfig certify;
  std::uint64_t master_seed = 0;
  int threads = 1;
};

struct SweepRecord {
  double alpha = 0.0;
  double beta = 0.0;
  int trial = 0;
  /// False when the cell is infeasible (edge probability above 1); such
  /// rows carry the error marker in the CSV and the run continues.
  bool ok = true;
  bool match = false;
  bool certified = false;
  double lambda2 = std::numeric_limits<double>::quiet_NaN();
  std::int64_t objective = 0;
  std::int64_t wall_ms = 0;
};

namespace detail {

inline SweepRecord run_trial(const SweepConfig& cfg, double alpha,
                             double beta, int trial,
                             std::uint64_t trial_seed) {
  SweepRecord rec;
  rec.alpha = alpha;
  rec.beta = beta;
  rec.trial = trial;
  SbmParams params;
  try {
    params = make_params_logscale(cfg.n, alpha, beta);
  } catch (const Error&) {
    rec.ok = false;
    return rec;
  }
  const Instance inst = sample_instance(params, trial_seed);
  const SignedAdjacency B(inst);

  SolverConfig solver = cfg.solver;
  solver.seed = rng::derive(trial_seed, rng::kLaneSolver);
  CertifyConfig certify_cfg = cfg.certify;
  certify_cfg.seed = rng::derive(trial_seed, rng::kLaneCertify);

  const auto t0 = std::chrono::steady_clock::now();
  const SolveResult sol = solve(B, solver);
  const CertificateReport report = certify(B, sol.x, certify_cfg);
  const auto t1 = std::chrono::steady_clock::now();

  rec.match = sol.x.same_up_to_sign(*inst.hidden);
  rec.certified = report.status == CertStatus::Certified;
  rec.lambda2 = report.lambda2;
  rec.objective = report.objective;
  rec.wall_ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
  return rec;
}

inline std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace detail

inline std::vector<SweepRecord> run_sweep(const SweepConfig& cfg) {
  if (cfg.alpha_grid.empty() || cfg.beta_grid.empty()) {
    throw OutOfRange("sweep grids must be non-empty");
  }
  if (cfg.trials < 1) throw OutOfRange("trials must be >= 1");
  detail::validate_n(cfg.n);

  struct Task {
    double alpha, beta;
    int trial;
    std::uint64_t seed;
  };
  std::vector<Task> tasks;
  std::size_t cell = 0;
  for (double alpha : cfg.alpha_grid) {
    for (double beta : cfg.beta_grid) {
      const std::uint64_t cell_seed =
          rng::derive(cfg.master_seed, rng::kLaneSweepCellBase + cell);
      for (int t = 0; t < cfg.trials; ++t) {
        tasks.push_back({alpha, beta, t,
                         rng::derive(cell_seed, static_cast<std::uint64_t>(t))});
      }
      ++cell;
    }
  }

  std::vector<SweepRecord> records(tasks.size());
  const int workers =
      std::max(1, std::min<int>(cfg.threads,
                                static_cast<int>(tasks.size())));
  if (workers == 1) {
    for (std::size_t k = 0; k < tasks.size(); ++k) {
      const Task& task = tasks[k];
      records[k] =
          detail::run_trial(cfg, task.alpha, task.beta, task.trial, task.seed);
    }
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (;;) {
          const std::size_t k = next.fetch_add(1);
          if (k >= tasks.size()) return;
          const Task& task = tasks[k];
          records[k] = detail::run_trial(cfg, task.alpha, task.beta,
                                         task.trial, task.seed);
        }
      });
    }
    for (std::thread& th : pool) th.join();
  }
  return records;
}

inline constexpr const char* kSweepCsvHeader =
    "alpha,beta,trial,match,certified,lambda2,objective,wall_ms";

inline void write_sweep_csv(const std::vector<SweepRecord>& records,
                            std::ostream& os) {
  os << kSweepCsvHeader << '\n';
  for (const SweepRecord& r : records) {
    os << detail::format_double(r.alpha) << ','
       << detail::format_double(r.beta) << ',' << r.trial << ',';
    if (!r.ok) {
      os << "error,error,nan,0,0\n";
      continue;
    }
    os << (r.match ? 1 : 0) << ',' << (r.certified ? 1 : 0) << ','
       << detail::format_double(r.lambda2) << ',' << r.objective << ','
       << r.wall_ms << '\n';
  }
}

}  // namespace pcc

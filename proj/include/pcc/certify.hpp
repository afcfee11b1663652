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

#include <Eigen/Cholesky>
#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pcc/errors.hpp"
#include "pcc/lanczos.hpp"
#include "pcc/linops.hpp"
#include "pcc/partition.hpp"
#include "pcc/rng.hpp"

namespace pcc {

// A balanced candidate x is the unique minimum bisection when the
// certificate matrix M = D - B built from x (d_i = x_i (Bx)_i) satisfies
// Mx = 0 -- automatic by construction -- and lambda_2(M) > 0.  The checks
// below establish the eigenvalue condition three ways: a full dense
// eigendecomposition, a shifted Cholesky factorization, and a randomized
// Lanczos estimate for sizes where dense work is off the table.

enum class CertifyMethod { Auto, Dense, Cholesky, Lanczos };

inline const char* to_string(CertifyMethod m) {
  switch (m) {
    case CertifyMethod::Auto:
      return "auto";
    case CertifyMethod::Dense:
      return "dense";
    case CertifyMethod::Cholesky:
      return "cholesky";
    case CertifyMethod::Lanczos:
      return "lanczos";
  }
  return "?";
}

struct CertifyConfig {
  /// Auto resolves to Dense for n <= dense_threshold and Lanczos above it.
  CertifyMethod method = CertifyMethod::Auto;
  std::int64_t dense_threshold = kDefaultDenseThreshold;
  /// Slack tau: certification requires lambda_2 > tau.  When unset, the
  /// scale-aware default `default_psd_tol` is used.
  std::optional<double> psd_tol;
  int lanczos_iters = 200;
  int restarts = 3;
  std::uint64_t seed = 0;
};

/// Default certification slack: tau = 100 u n max_i |M_ii| with u the unit
/// roundoff.  M is an integer matrix, so its computed eigenvalues carry an
/// O(u n ||M||) error; the slack keeps the certifier conservative (errs
/// toward NotSure).
inline double default_psd_tol(std::int64_t n, std::int64_t max_abs_diag) {
  constexpr double u = std::numeric_limits<double>::epsilon() / 2.0;
  return 100.0 * u * static_cast<double>(n) *
         std::max<double>(1.0, static_cast<double>(max_abs_diag));
}

enum class CertStatus { Certified, NotSure };

enum class CertReason {
  BalanceFailed,
  Lambda2Nonpositive,
  Lambda2BelowTolerance,
  RandomizedPass,
  DeterministicPass,
  Error,  // a sub-operation failed; details in diagnostics.note
};

inline const char* to_string(CertStatus s) {
  return s == CertStatus::Certified ? "Certified" : "NotSure";
}

inline const char* to_string(CertReason r) {
  switch (r) {
    case CertReason::BalanceFailed:
      return "balance_failed";
    case CertReason::Lambda2Nonpositive:
      return "lambda2_nonpositive";
    case CertReason::Lambda2BelowTolerance:
      return "lambda2_below_tolerance";
    case CertReason::RandomizedPass:
      return "randomized_pass";
    case CertReason::DeterministicPass:
      return "deterministic_pass";
    case CertReason::Error:
      return "error";
  }
  return "?";
}

struct CertifyDiagnostics {
  std::vector<double> per_restart;      // smallest Ritz value per restart
  std::vector<int> restart_iterations;  // Lanczos steps per restart
  int breakdown_redraws = 0;            // degenerate starts redrawn
  double psd_tol = 0.0;                 // slack actually applied
  std::string note;
};

struct CertificateReport {
  CertStatus status = CertStatus::NotSure;
  CertReason reason = CertReason::Error;
  double lambda2 = std::numeric_limits<double>::quiet_NaN();
  std::string method;
  std::int64_t objective = 0;
  /// Deterministic methods certify the candidate as the *unique* optimum.
  bool uniqueness_claimed = false;
  /// Set when the certificate rests on independent randomness (Lanczos
  /// start vectors); such a certificate has a small failure probability,
  /// shrinkable by repeating with fresh seeds.
  bool randomized = false;
  CertifyDiagnostics diagnostics;
  std::uint64_t seed = 0;
};

/// True iff the labeling sums to zero.
inline bool check_balance(const Partition& x) { return x.is_balanced(); }

namespace detail {

// Exact kernel check on a dense integer-valued M.
inline void require_kernel_dense(const Eigen::MatrixXd& M,
                                 const Partition& x) {
  const std::int64_t n = x.size();
  if (M.rows() != n || M.cols() != n) {
    throw DimensionMismatch("matrix size does not match partition");
  }
  for (std::int64_t i = 0; i < n; ++i) {
    std::int64_t acc = 0;
    for (std::int64_t j = 0; j < n; ++j) {
      acc += static_cast<std::int64_t>(std::llround(M(i, j))) * x[j];
    }
    if (acc != 0) {
      throw KernelMismatch("Mx != 0: diagonal was not built from x");
    }
  }
}

inline void require_kernel(const SignedAdjacency& B, const DualDiagonal& d,
                           const Partition& x) {
  if (!kernel_holds(B, d, x)) {
    throw KernelMismatch("(D - B)x != 0: diagonal was not built from x");
  }
}

}  // namespace detail

/// Second-smallest eigenvalue of the dense certificate matrix via a full
/// symmetric eigendecomposition.  Requires Mx = 0 exactly.
inline double lambda2_dense(const Eigen::MatrixXd& M, const Partition& x,
                            std::int64_t max_n = kDefaultDenseThreshold) {
  if (M.rows() > max_n) throw TooLarge("dense eigendecomposition guard");
  if (M.rows() < 2) throw OutOfRange("need n >= 2 for lambda_2");
  detail::require_kernel_dense(M, x);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(M,
                                                    Eigen::EigenvaluesOnly);
  return es.eigenvalues()(1);
}

/// Deterministic positive-definiteness test of M on the complement of x:
/// attempts a Cholesky factorization of M + (c/n) xx^T - tau I with
/// c = 1 + max_i M_ii.  Since Mx = 0 exactly, the shift moves only the
/// known kernel direction, so success certifies lambda_2(M) > tau.
inline bool psd_cholesky_deflated(const SignedAdjacency& B,
                                  const DualDiagonal& d, const Partition& x,
                                  double psd_tol,
                                  std::int64_t max_n = kDefaultDenseThreshold) {
  detail::require_kernel(B, d, x);
  Eigen::MatrixXd M = assemble_dense_m(B, d, max_n);
  const std::int64_t n = B.n();
  const std::int64_t max_diag = *std::max_element(d.d.begin(), d.d.end());
  const double shift =
      (1.0 + static_cast<double>(max_diag)) / static_cast<double>(n);
  for (std::int64_t i = 0; i < n; ++i) {
    for (std::int64_t j = 0; j < n; ++j) {
      M(i, j) += shift * static_cast<double>(x[i]) * static_cast<double>(x[j]);
    }
    M(i, i) -= psd_tol;
  }
  const Eigen::LLT<Eigen::MatrixXd> llt(M);
  return llt.info() == Eigen::Success;
}

struct LanczosLambda2 {
  /// Minimum over restarts of the smallest Ritz value; an upper bound on
  /// lambda_2(M) up to floating-point error.
  double estimate = std::numeric_limits<double>::quiet_NaN();
  std::vector<double> per_restart;
  std::vector<int> iterations;
  int breakdown_redraws = 0;
};

/// Randomized estimate of lambda_2(M) = min spectrum of M restricted to
/// the complement of x.  Each restart draws an independent start vector,
/// deflates x with full reorthogonalization, runs cfg.lanczos_iters Lanczos
/// steps, and reports its smallest Ritz value; the estimate is the minimum
/// over restarts (non-increasing in the restart count).
template <typename MatVec>
LanczosLambda2 lambda2_lanczos(std::int64_t n, MatVec&& apply,
                               const Partition& x, const CertifyConfig& cfg) {
  if (x.size() != n) throw DimensionMismatch("lambda2_lanczos: partition");
  if (cfg.restarts < 1) throw OutOfRange("restarts must be >= 1");
  if (cfg.lanczos_iters < 1) throw OutOfRange("lanczos_iters must be >= 1");

  std::vector<double> kernel(static_cast<std::size_t>(n));
  for (std::int64_t i = 0; i < n; ++i) {
    kernel[static_cast<std::size_t>(i)] = static_cast<double>(x[i]);
  }

  LanczosLambda2 out;
  for (int r = 0; r < cfg.restarts; ++r) {
    LanczosOptions opts;
    opts.max_iters = cfg.lanczos_iters;
    opts.rel_tol = 0.0;  // spend the full budget; the bound only improves
    opts.seed = rng::derive(cfg.seed, rng::kLaneCertify + 16 + static_cast<std::uint64_t>(r));
    opts.end = SpectrumEnd::Smallest;
    opts.want_vector = false;
    const LanczosOutcome run = lanczos_extreme(
        n, apply, std::span<const std::vector<double>>(&kernel, 1), opts);
    out.per_restart.push_back(run.ritz);
    out.iterations.push_back(run.iterations);
    out.breakdown_redraws += run.start_redraws;
    if (r == 0 || run.ritz < out.estimate) out.estimate = run.ritz;
  }
  return out;
}

/// Convenience overload on the implicit certificate operator D - B.
inline LanczosLambda2 lambda2_lanczos(const SignedAdjacency& B,
                                      const DualDiagonal& d,
                                      const Partition& x,
                                      const CertifyConfig& cfg) {
  detail::require_kernel(B, d, x);
  return lambda2_lanczos(
      B.n(),
      [&](std::span<const double> in, std::span<double> out_v) {
        std::vector<double> y = m_matvec(B, d, in);
        std::copy(y.begin(), y.end(), out_v.begin());
      },
      x, cfg);
}

/// Runs the full certification step on a candidate labeling: balance
/// check, dual diagonal construction, and the configured lambda_2 test.
/// Returns Certified only when the candidate is balanced and the lambda_2
/// estimate clears the slack; any sub-operation failure degrades to
/// NotSure, never to a false certificate.  A KernelMismatch is the one
/// exception that propagates: it flags API misuse rather than a legitimate
/// certification failure.
inline CertificateReport certify(const SignedAdjacency& B, const Partition& x,
                                 const CertifyConfig& cfg) {
  const std::int64_t n = B.n();
  if (x.size() != n) throw DimensionMismatch("certify: partition size != n");

  CertifyMethod method = cfg.method;
  if (method == CertifyMethod::Auto) {
    method = n <= cfg.dense_threshold ? CertifyMethod::Dense
                                      : CertifyMethod::Lanczos;
  }

  CertificateReport report;
  report.method = to_string(method);
  report.seed = cfg.seed;
  report.randomized = method == CertifyMethod::Lanczos;
  report.objective = quad_form(B, x);

  if (!check_balance(x)) {
    report.status = CertStatus::NotSure;
    report.reason = CertReason::BalanceFailed;
    return report;
  }

  const DualDiagonal d = build_dual_diagonal(B, x);
  detail::require_kernel(B, d, x);

  const std::int64_t max_abs_diag = std::max<std::int64_t>(
      std::abs(*std::max_element(d.d.begin(), d.d.end())),
      std::abs(*std::min_element(d.d.begin(), d.d.end())));
  const double tau = cfg.psd_tol.value_or(default_psd_tol(n, max_abs_diag));
  report.diagnostics.psd_tol = tau;

  try {
    switch (method) {
      case CertifyMethod::Dense: {
        const Eigen::MatrixXd M = assemble_dense_m(B, d, cfg.dense_threshold);
        report.lambda2 = lambda2_dense(M, x, cfg.dense_threshold);
        if (report.lambda2 > tau) {
          report.status = CertStatus::Certified;
          report.reason = CertReason::DeterministicPass;
          report.uniqueness_claimed = true;
        } else {
          report.status = CertStatus::NotSure;
          report.reason = report.lambda2 <= 0.0
                              ? CertReason::Lambda2Nonpositive
                              : CertReason::Lambda2BelowTolerance;
        }
        break;
      }
      case CertifyMethod::Cholesky: {
        const bool ok =
            psd_cholesky_deflated(B, d, x, tau, cfg.dense_threshold);
        if (ok) {
          report.status = CertStatus::Certified;
          report.reason = CertReason::DeterministicPass;
          report.uniqueness_claimed = true;
          report.diagnostics.note =
              "cholesky bound: lambda_2 > tau, no eigenvalue estimate";
        } else {
          // Distinguish "below slack" from "nonpositive" with a second,
          // slack-free factorization.
          const bool ok0 =
              psd_cholesky_deflated(B, d, x, 0.0, cfg.dense_threshold);
          report.status = CertStatus::NotSure;
          report.reason = ok0 ? CertReason::Lambda2BelowTolerance
                              : CertReason::Lambda2Nonpositive;
        }
        break;
      }
      case CertifyMethod::Lanczos:
      case CertifyMethod::Auto: {
        const LanczosLambda2 est = lambda2_lanczos(B, d, x, cfg);
        report.lambda2 = est.estimate;
        report.diagnostics.per_restart = est.per_restart;
        report.diagnostics.restart_iterations = est.iterations;
        report.diagnostics.breakdown_redraws = est.breakdown_redraws;
        if (est.estimate > tau) {
          report.status = CertStatus::Certified;
          report.reason = CertReason::RandomizedPass;
          report.diagnostics.note =
              "randomized certificate: small failure probability over the "
              "certificate's own randomness; repeat with fresh seeds to "
              "shrink it";
        } else {
          report.status = CertStatus::NotSure;
          report.reason = est.estimate <= 0.0
                              ? CertReason::Lambda2Nonpositive
                              : CertReason::Lambda2BelowTolerance;
        }
        break;
      }
    }
  } catch (const KernelMismatch&) {
    throw;
  } catch (const Error& e) {
    report.status = CertStatus::NotSure;
    report.reason = CertReason::Error;
    report.uniqueness_claimed = false;
    report.diagnostics.note = e.what();
  }
  return report;
}

/// Factorization M = V V^T of the positive-semidefinite certificate matrix
/// via the symmetric eigendecomposition square root, dropping the null
/// space (which contains x).  The columns of V exhibit the optimality gap
/// of any other bisection as an explicit sum of squares:
///   quad(x_opt) - quad(x) = ||V^T x||^2.
inline Eigen::MatrixXd sos_factor(const Eigen::MatrixXd& M,
                                  const Partition& x) {
  const std::int64_t n = M.rows();
  detail::require_kernel_dense(M, x);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(M);
  const Eigen::VectorXd& ev = es.eigenvalues();
  const double scale = std::max(1.0, std::abs(ev(n - 1)));
  const double neg_tol = 1e-8 * static_cast<double>(n);
  if (ev(0) < -neg_tol) {
    throw NotPsd("matrix has a negative eigenvalue beyond tolerance");
  }
  const double keep_tol = 1e-10 * scale;
  std::int64_t rank = 0;
  for (std::int64_t i = 0; i < n; ++i) {
    if (ev(i) > keep_tol) ++rank;
  }
  rank = std::min(rank, n - 1);  // x spans at least one null direction
  Eigen::MatrixXd V(n, rank);
  std::int64_t c = 0;
  for (std::int64_t i = n - rank; i < n; ++i) {
    V.col(c++) = es.eigenvectors().col(i) * std::sqrt(std::max(ev(i), 0.0));
  }
  return V;
}

/// Verifies the sum-of-squares identity on a concrete pair: the objective
/// gap between the certified labeling and any other +/-1 labeling must
/// equal ||V^T x||^2 within 1e-6 * n.
inline bool sos_gap_check(const Eigen::MatrixXd& V, const SignedAdjacency& B,
                          const Partition& x_nat, const Partition& x) {
  const std::int64_t n = B.n();
  if (V.rows() != n || x_nat.size() != n || x.size() != n) {
    throw DimensionMismatch("sos_gap_check: dimensions disagree");
  }
  const std::int64_t gap = quad_form(B, x_nat) - quad_form(B, x);
  Eigen::VectorXd xv(n);
  for (std::int64_t i = 0; i < n; ++i) xv(i) = static_cast<double>(x[i]);
  const double ssq = (V.transpose() * xv).squaredNorm();
  return std::abs(static_cast<double>(gap) - ssq) <=
         1e-6 * static_cast<double>(n);
}

}  // namespace pcc

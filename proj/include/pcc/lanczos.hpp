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

#include <Eigen/Dense>
#include <cmath>
#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "pcc/errors.hpp"
#include "pcc/rng.hpp"

namespace pcc {

/// Which end of the spectrum a Lanczos run targets.
enum class SpectrumEnd { Smallest, Largest };

struct LanczosOptions {
  int max_iters = 200;
  /// Relative residual tolerance for early exit on the target Ritz pair;
  /// 0 disables early exit and the full iteration budget is spent.
  double rel_tol = 0.0;
  std::uint64_t seed = 0;
  SpectrumEnd end = SpectrumEnd::Largest;
  bool want_vector = false;
};

struct LanczosOutcome {
  /// Ritz value at the requested end of the spectrum.
  double ritz = std::numeric_limits<double>::quiet_NaN();
  /// Ritz vector (length n) when requested.
  std::vector<double> vector;
  int iterations = 0;
  /// Residual bound |beta_k * s_last| for the returned Ritz pair.
  double residual = std::numeric_limits<double>::quiet_NaN();
  bool converged = false;
  /// The Krylov space became invariant before the iteration budget ran
  /// out; the returned Ritz value is then exact for the deflated operator.
  bool breakdown = false;
  /// Degenerate random start vectors that had to be redrawn.
  int start_redraws = 0;
};

namespace detail {

inline double dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline double norm(std::span<const double> a) { return std::sqrt(dot(a, a)); }

// w -= sum_r proj_{rows[r]} w for unit rows stored contiguously; classical
// Gram-Schmidt, applied twice by the caller for full reorthogonalization.
inline void orthogonalize_against(std::span<double> w, const double* rows,
                                  std::size_t count, std::size_t n) {
  for (std::size_t r = 0; r < count; ++r) {
    const double* v = rows + r * n;
    double c = 0.0;
    for (std::size_t i = 0; i < n; ++i) c += v[i] * w[i];
    for (std::size_t i = 0; i < n; ++i) w[i] -= c * v[i];
  }
}

}  // namespace detail

/// Lanczos iteration with full reorthogonalization on a symmetric operator,
/// restricted to the orthogonal complement of `deflate` (vectors are
/// orthonormalized internally).  Every vector of the Krylov basis is kept
/// and new directions are re-orthogonalized against the basis and the
/// deflation set twice per step, which eliminates ghost Ritz values at
/// O(k^2 n) cost.
///
/// The extreme Ritz value approaches the corresponding extreme eigenvalue
/// of the restricted operator from inside the spectrum: for
/// SpectrumEnd::Smallest it never undershoots the true restricted minimum
/// beyond floating-point error.
template <typename MatVec>
LanczosOutcome lanczos_extreme(std::int64_t n, MatVec&& apply,
                               std::span<const std::vector<double>> deflate,
                               const LanczosOptions& opts) {
  if (n < 1) throw OutOfRange("lanczos: empty operator");
  if (opts.max_iters < 1) throw OutOfRange("lanczos: max_iters must be >= 1");
  const std::size_t un = static_cast<std::size_t>(n);

  // Orthonormalize the deflation set.
  std::vector<double> defl;
  std::size_t n_defl = 0;
  for (const std::vector<double>& v : deflate) {
    if (v.size() != un) throw DimensionMismatch("lanczos: deflation vector");
    std::vector<double> w(v);
    detail::orthogonalize_against(w, defl.data(), n_defl, un);
    const double nrm = detail::norm(w);
    if (nrm <= 1e-14) continue;  // linearly dependent, skip
    for (double& x : w) x /= nrm;
    defl.insert(defl.end(), w.begin(), w.end());
    ++n_defl;
  }

  const std::int64_t dim = n - static_cast<std::int64_t>(n_defl);
  if (dim < 1) throw OutOfRange("lanczos: deflation exhausts the space");
  const int k_max = static_cast<int>(
      std::min<std::int64_t>(opts.max_iters, dim));

  LanczosOutcome out;
  rng::SplitMix64 stream(opts.seed);

  // Random start in the deflated subspace.
  std::vector<double> v(un);
  double start_norm = 0.0;
  for (int attempt = 0;; ++attempt) {
    if (attempt > 64) throw Error("lanczos: cannot draw a start vector");
    for (double& x : v) x = 2.0 * stream.next_unit() - 1.0;
    detail::orthogonalize_against(v, defl.data(), n_defl, un);
    detail::orthogonalize_against(v, defl.data(), n_defl, un);
    start_norm = detail::norm(v);
    if (start_norm > 1e-8) break;
    ++out.start_redraws;
  }
  for (double& x : v) x /= start_norm;

  std::vector<double> basis;  // rows of length n, contiguous
  basis.reserve(static_cast<std::size_t>(k_max) * un);
  basis.insert(basis.end(), v.begin(), v.end());

  std::vector<double> alphas, betas;  // betas[j] couples steps j and j+1
  std::vector<double> w(un);

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> tri;
  const auto target_index = [&](int m) {
    return opts.end == SpectrumEnd::Largest ? m - 1 : 0;
  };

  double tnorm = 0.0;  // running estimate of ||T||
  for (int j = 0; j < k_max; ++j) {
    const double* vj = basis.data() + static_cast<std::size_t>(j) * un;
    apply(std::span<const double>(vj, un), std::span<double>(w));
    const double alpha = detail::dot({vj, un}, w);
    alphas.push_back(alpha);
    // Full reorthogonalization against the deflation set and the whole
    // basis (two classical Gram-Schmidt passes).
    for (int pass = 0; pass < 2; ++pass) {
      detail::orthogonalize_against(w, defl.data(), n_defl, un);
      detail::orthogonalize_against(
          w, basis.data(), static_cast<std::size_t>(j) + 1, un);
    }
    const double beta = detail::norm(w);
    out.iterations = j + 1;
    tnorm = std::max(tnorm, std::abs(alpha) + beta +
                                (j > 0 ? betas[static_cast<std::size_t>(j) - 1]
                                       : 0.0));

    const bool is_breakdown = beta <= 1e-12 * std::max(1.0, tnorm);
    const bool budget_done = j + 1 == k_max;
    // Convergence checks solve the (j+1)x(j+1) tridiagonal problem, so they
    // run every few steps rather than every step.
    const bool check_now =
        is_breakdown || budget_done ||
        (opts.rel_tol > 0.0 && (j + 1) % 5 == 0);

    if (check_now) {
      const int m = j + 1;
      Eigen::Map<const Eigen::VectorXd> da(alphas.data(), m);
      Eigen::VectorXd db(std::max(m - 1, 0));
      for (int t = 0; t + 1 < m; ++t) db(t) = betas[static_cast<std::size_t>(t)];
      tri.computeFromTridiagonal(da, db, Eigen::ComputeEigenvectors);
      const int idx = target_index(m);
      const double theta = tri.eigenvalues()(idx);
      const double s_last = tri.eigenvectors()(m - 1, idx);
      const double resid = is_breakdown ? 0.0 : std::abs(beta * s_last);
      const bool ok = is_breakdown ||
                      (opts.rel_tol > 0.0 &&
                       resid <= opts.rel_tol * std::max(1.0, std::abs(theta)));
      if (ok || budget_done) {
        out.ritz = theta;
        out.residual = resid;
        out.converged = ok;
        out.breakdown = is_breakdown;
        if (opts.want_vector) {
          out.vector.assign(un, 0.0);
          for (int t = 0; t < m; ++t) {
            const double c = tri.eigenvectors()(t, idx);
            const double* vt = basis.data() + static_cast<std::size_t>(t) * un;
            for (std::size_t i = 0; i < un; ++i) out.vector[i] += c * vt[i];
          }
        }
        return out;
      }
    }

    for (double& x : w) x /= beta;
    betas.push_back(beta);
    basis.insert(basis.end(), w.begin(), w.end());
  }

  return out;  // unreachable; the budget_done branch always returns
}

}  // namespace pcc

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

// Exact-arithmetic certification for small instances.  Requires GMP
// (link gmp and gmpxx); kept out of pcc.hpp so the rest of the library
// stays link-free.

#include <gmpxx.h>

#include <cstdint>
#include <vector>

#include "pcc/errors.hpp"
#include "pcc/linops.hpp"
#include "pcc/partition.hpp"

namespace pcc {

/// Decides lambda_2(D - B) > 0 with zero floating-point risk.
///
/// Since (D - B)x = 0 exactly, D - B is positive definite on the
/// complement of x iff the integer matrix D - B + xx^T is positive
/// definite, which holds iff all of its leading principal minors are
/// positive (Sylvester).  Bareiss fraction-free elimination produces
/// exactly those minors as pivots using only exact integer arithmetic.
/// O(n^3) big-integer work; guarded to small n.
inline bool lambda2_positive_exact(const SignedAdjacency& B,
                                   const DualDiagonal& d, const Partition& x,
                                   std::int64_t max_n = 256) {
  const std::int64_t n = B.n();
  if (n > max_n) throw TooLarge("exact certification guard");
  if (d.size() != n || x.size() != n) {
    throw DimensionMismatch("lambda2_positive_exact: dimensions");
  }
  if (!kernel_holds(B, d, x)) {
    throw KernelMismatch("(D - B)x != 0: diagonal was not built from x");
  }

  // a = D - B + xx^T with integer entries.
  std::vector<std::vector<mpz_class>> a(
      static_cast<std::size_t>(n),
      std::vector<mpz_class>(static_cast<std::size_t>(n)));
  for (std::int64_t i = 0; i < n; ++i) {
    for (std::int64_t j = 0; j < n; ++j) {
      std::int64_t v;
      if (i == j) {
        v = d.d[static_cast<std::size_t>(i)] + 1;
      } else {
        const std::int64_t b_ij = B.has_edge(i, j) ? 1 : -1;
        v = -b_ij + static_cast<std::int64_t>(x[i]) * x[j];
      }
      a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          static_cast<long>(v);
    }
  }

  // Bareiss: after step k, a[k][k] equals the (k+1)-st leading minor.
  mpz_class prev = 1;
  for (std::int64_t k = 0; k < n; ++k) {
    const mpz_class& pivot = a[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)];
    if (pivot <= 0) return false;
    for (std::int64_t i = k + 1; i < n; ++i) {
      for (std::int64_t j = k + 1; j < n; ++j) {
        mpz_class num =
            a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] * pivot -
            a[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] *
                a[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
        mpz_divexact(a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]
                         .get_mpz_t(),
                     num.get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = pivot;
  }
  return true;
}

inline bool lambda2_positive_exact(const SignedAdjacency& B,
                                   const Partition& x,
                                   std::int64_t max_n = 256) {
  return lambda2_positive_exact(B, build_dual_diagonal(B, x), x, max_n);
}

}  // namespace pcc

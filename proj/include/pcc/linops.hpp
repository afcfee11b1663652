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
#include <algorithm>
#include <cstdint>
#include <span>
#include <vector>

#include "pcc/errors.hpp"
#include "pcc/partition.hpp"
#include "pcc/sbm.hpp"

namespace pcc {

/// Implicit representation of the signed adjacency matrix
///
///   B = 2A - (11^T - I),
///
/// i.e. B_ij = +1 for an edge, -1 for a non-edge (i != j), and B_ii = 0.
/// Only the sparse adjacency of A is stored; the rank-one -11^T and +I
/// terms are applied analytically, so a matvec costs O(m + n) and B is
/// never densified on the main path.
class SignedAdjacency {
 public:
  SignedAdjacency(std::int64_t n, std::span<const Edge> edges) : n_(n) {
    if (n < 1 || n > kMaxVertices) {
      throw OutOfRange("vertex count out of range");
    }
    degrees_.assign(static_cast<std::size_t>(n), 0);
    for (const Edge& e : edges) {
      if (e.first < 0 || e.second < 0 || e.first >= n || e.second >= n) {
        throw InvalidEdge("edge endpoint out of range");
      }
      if (e.first == e.second) throw InvalidEdge("self-loop");
      ++degrees_[static_cast<std::size_t>(e.first)];
      ++degrees_[static_cast<std::size_t>(e.second)];
    }
    offsets_.assign(static_cast<std::size_t>(n) + 1, 0);
    for (std::int64_t i = 0; i < n; ++i) {
      offsets_[static_cast<std::size_t>(i) + 1] =
          offsets_[static_cast<std::size_t>(i)] +
          degrees_[static_cast<std::size_t>(i)];
    }
    neighbors_.resize(static_cast<std::size_t>(2) * edges.size());
    std::vector<std::int64_t> cursor(offsets_.begin(), offsets_.end() - 1);
    for (const Edge& e : edges) {
      neighbors_[static_cast<std::size_t>(
          cursor[static_cast<std::size_t>(e.first)]++)] = e.second;
      neighbors_[static_cast<std::size_t>(
          cursor[static_cast<std::size_t>(e.second)]++)] = e.first;
    }
    for (std::int64_t i = 0; i < n; ++i) {
      const auto row = row_span(i);
      std::sort(row.begin(), row.end());
      if (std::adjacent_find(row.begin(), row.end()) != row.end()) {
        throw InvalidEdge("duplicate edge");
      }
    }
  }

  explicit SignedAdjacency(const Instance& inst)
      : SignedAdjacency(inst.n, inst.edges) {}

  std::int64_t n() const { return n_; }
  std::int64_t num_edges() const {
    return static_cast<std::int64_t>(neighbors_.size()) / 2;
  }
  std::int32_t degree(std::int64_t i) const {
    return degrees_[static_cast<std::size_t>(i)];
  }
  std::span<const Vertex> neighbors(std::int64_t i) const {
    return {neighbors_.data() + offsets_[static_cast<std::size_t>(i)],
            static_cast<std::size_t>(degrees_[static_cast<std::size_t>(i)])};
  }
  bool has_edge(std::int64_t i, std::int64_t j) const {
    const auto row = neighbors(i);
    return std::binary_search(row.begin(), row.end(),
                              static_cast<Vertex>(j));
  }

 private:
  std::span<Vertex> row_span(std::int64_t i) {
    return {neighbors_.data() + offsets_[static_cast<std::size_t>(i)],
            static_cast<std::size_t>(degrees_[static_cast<std::size_t>(i)])};
  }

  std::int64_t n_;
  std::vector<std::int64_t> offsets_;
  std::vector<Vertex> neighbors_;
  std::vector<std::int32_t> degrees_;
};

/// Diagonal of the dual certificate matrix D built from a labeling x:
/// d_i = x_i * (Bx)_i, exact in integers.  For the planted partition this
/// is the closed-form dual candidate whose feasibility certifies the cut.
struct DualDiagonal {
  std::vector<std::int64_t> d;

  std::int64_t size() const { return static_cast<std::int64_t>(d.size()); }

  /// trace(D); equals x^T B x for the x the diagonal was built from.
  std::int64_t trace() const {
    std::int64_t s = 0;
    for (std::int64_t v : d) s += v;
    return s;
  }
};

/// y = Bv computed as 2Av - (sum v)1 + v in O(m + n).
inline std::vector<double> b_matvec(const SignedAdjacency& B,
                                    std::span<const double> v) {
  const std::int64_t n = B.n();
  if (static_cast<std::int64_t>(v.size()) != n) {
    throw DimensionMismatch("b_matvec: vector length != n");
  }
  double total = 0.0;
  for (double x : v) total += x;
  std::vector<double> y(static_cast<std::size_t>(n));
  for (std::int64_t i = 0; i < n; ++i) {
    double acc = 0.0;
    for (Vertex j : B.neighbors(i)) acc += v[static_cast<std::size_t>(j)];
    y[static_cast<std::size_t>(i)] =
        2.0 * acc - total + v[static_cast<std::size_t>(i)];
  }
  return y;
}

/// Integer-exact overload; exact whenever |entries| stay within int64,
/// guaranteed for +/-1 inputs by the kMaxVertices guard.
inline std::vector<std::int64_t> b_matvec(const SignedAdjacency& B,
                                          std::span<const std::int64_t> v) {
  const std::int64_t n = B.n();
  if (static_cast<std::int64_t>(v.size()) != n) {
    throw DimensionMismatch("b_matvec: vector length != n");
  }
  std::int64_t total = 0;
  for (std::int64_t x : v) total += x;
  std::vector<std::int64_t> y(static_cast<std::size_t>(n));
  for (std::int64_t i = 0; i < n; ++i) {
    std::int64_t acc = 0;
    for (Vertex j : B.neighbors(i)) acc += v[static_cast<std::size_t>(j)];
    y[static_cast<std::size_t>(i)] =
        2 * acc - total + v[static_cast<std::size_t>(i)];
  }
  return y;
}

inline std::vector<std::int64_t> b_matvec(const SignedAdjacency& B,
                                          const Partition& x) {
  const std::int64_t n = B.n();
  if (x.size() != n) throw DimensionMismatch("b_matvec: partition size != n");
  std::vector<std::int64_t> v(static_cast<std::size_t>(n));
  for (std::int64_t i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = x[i];
  return b_matvec(B, std::span<const std::int64_t>(v));
}

/// x^T B x as an exact integer.  Always even for +/-1 labelings.
inline std::int64_t quad_form(const SignedAdjacency& B, const Partition& x) {
  const std::int64_t n = B.n();
  if (x.size() != n) {
    throw DimensionMismatch("quad_form: partition size != n");
  }
  std::int64_t s = 0;
  std::int64_t ordered = 0;  // sum over ordered pairs = 2 * x^T A x / 2
  for (std::int64_t i = 0; i < n; ++i) {
    s += x[i];
    std::int64_t row = 0;
    for (Vertex j : B.neighbors(i)) row += x[j];
    ordered += static_cast<std::int64_t>(x[i]) * row;
  }
  // x^T B x = 2 x^T A x - (sum x)^2 + x^T x, and x^T A x = ordered.
  return 2 * ordered - s * s + n;
}

/// d_i = x_i (Bx)_i, integer exact.
inline DualDiagonal build_dual_diagonal(const SignedAdjacency& B,
                                        const Partition& x) {
  std::vector<std::int64_t> bx = b_matvec(B, x);
  DualDiagonal out;
  out.d.resize(bx.size());
  for (std::size_t i = 0; i < bx.size(); ++i) {
    out.d[i] = static_cast<std::int64_t>(x[static_cast<std::int64_t>(i)]) *
               bx[i];
  }
  return out;
}

/// y = (D - B)v in O(m + n).
inline std::vector<double> m_matvec(const SignedAdjacency& B,
                                    const DualDiagonal& d,
                                    std::span<const double> v) {
  if (d.size() != B.n()) throw DimensionMismatch("m_matvec: diagonal size");
  std::vector<double> y = b_matvec(B, v);
  for (std::size_t i = 0; i < y.size(); ++i) {
    y[i] = static_cast<double>(d.d[i]) * v[i] - y[i];
  }
  return y;
}

/// Integer-exact overload of the certificate matvec.
inline std::vector<std::int64_t> m_matvec(const SignedAdjacency& B,
                                          const DualDiagonal& d,
                                          std::span<const std::int64_t> v) {
  if (d.size() != B.n()) throw DimensionMismatch("m_matvec: diagonal size");
  std::vector<std::int64_t> y = b_matvec(B, v);
  for (std::size_t i = 0; i < y.size(); ++i) {
    y[i] = d.d[i] * v[i] - y[i];
  }
  return y;
}

inline std::vector<std::int64_t> m_matvec(const SignedAdjacency& B,
                                          const DualDiagonal& d,
                                          const Partition& x) {
  std::vector<std::int64_t> v(static_cast<std::size_t>(x.size()));
  for (std::int64_t i = 0; i < x.size(); ++i) {
    v[static_cast<std::size_t>(i)] = x[i];
  }
  return m_matvec(B, d, std::span<const std::int64_t>(v));
}

/// True iff (D - B)x = 0 exactly; holds by construction whenever d was
/// built from x.
inline bool kernel_holds(const SignedAdjacency& B, const DualDiagonal& d,
                         const Partition& x) {
  const std::vector<std::int64_t> r = m_matvec(B, d, x);
  return std::all_of(r.begin(), r.end(),
                     [](std::int64_t v) { return v == 0; });
}

inline constexpr std::int64_t kDefaultDenseThreshold = 4096;

/// Entry-exact dense M = D - B (integer values stored in doubles).  Guarded
/// by `max_n` since this is the only O(n^2) memory path in the library.
inline Eigen::MatrixXd assemble_dense_m(
    const SignedAdjacency& B, const DualDiagonal& d,
    std::int64_t max_n = kDefaultDenseThreshold) {
  const std::int64_t n = B.n();
  if (n > max_n) throw TooLarge("dense assembly above the size threshold");
  if (d.size() != n) throw DimensionMismatch("assemble_dense_m: diagonal");
  // -B has +1 off the diagonal except -1 on edges; diagonal is d.
  Eigen::MatrixXd M = Eigen::MatrixXd::Ones(n, n);
  for (std::int64_t i = 0; i < n; ++i) {
    for (Vertex j : B.neighbors(i)) M(i, j) = -1.0;
    M(i, i) = static_cast<double>(d.d[static_cast<std::size_t>(i)]);
  }
  return M;
}

}  // namespace pcc

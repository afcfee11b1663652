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

#include <catch2/catch_amalgamated.hpp>
#include <cmath>
#include <vector>

#include "pcc/certify.hpp"
#include "pcc/exact.hpp"
#include "pcc/oracle.hpp"
#include "pcc/serialize.hpp"
#include "pcc/solver.hpp"

using namespace pcc;

namespace {

SignedAdjacency two_cliques() {
  static const std::vector<Edge> edges{{0, 1}, {2, 3}};
  return SignedAdjacency(4, edges);
}

Partition part(std::vector<std::int32_t> labels) {
  return Partition(std::move(labels));
}

Partition random_balanced(std::int64_t n, std::uint64_t seed) {
  rng::SplitMix64 s(seed);
  std::vector<std::int32_t> labels(static_cast<std::size_t>(n), -1);
  std::vector<std::int64_t> idx(static_cast<std::size_t>(n));
  std::iota(idx.begin(), idx.end(), 0);
  for (std::int64_t k = 0; k < n / 2; ++k) {
    const auto r = k + static_cast<std::int64_t>(
                           s.next_below(static_cast<std::uint64_t>(n - k)));
    std::swap(idx[static_cast<std::size_t>(k)], idx[static_cast<std::size_t>(r)]);
    labels[static_cast<std::size_t>(idx[static_cast<std::size_t>(k)])] = 1;
  }
  return Partition(std::move(labels));
}

}  // namespace

TEST_CASE("check_balance", "[certifier]") {
  CHECK(check_balance(part({1, 1, -1, -1})));
  CHECK_FALSE(check_balance(part({1, 1, 1, -1})));
  CHECK_FALSE(check_balance(part({1, 1, 1, 1})));
}

TEST_CASE("lambda2_dense examples", "[certifier]") {
  const SignedAdjacency B = two_cliques();
  const Partition h = part({1, 1, -1, -1});

  SECTION("two cliques: spectrum {0,4,4,4}") {
    const Eigen::MatrixXd M = assemble_dense_m(B, build_dual_diagonal(B, h));
    CHECK(lambda2_dense(M, h) == Catch::Approx(4.0).margin(1e-10));
  }
  SECTION("empty graph: M = ones, lambda_2 = 0") {
    const SignedAdjacency E(6, std::vector<Edge>{});
    const Partition x = random_balanced(6, 2);
    const Eigen::MatrixXd M = assemble_dense_m(E, build_dual_diagonal(E, x));
    CHECK((M - Eigen::MatrixXd::Ones(6, 6)).cwiseAbs().maxCoeff() == 0.0);
    CHECK(lambda2_dense(M, x) == Catch::Approx(0.0).margin(1e-10));
  }
  SECTION("bad candidate fails the lambda_2 check") {
    const Partition bad = part({1, -1, 1, -1});
    const Eigen::MatrixXd M =
        assemble_dense_m(B, build_dual_diagonal(B, bad));
    CHECK(M(0, 0) == -1.0);
    // M = -hh^T: spectrum {-4, 0, 0, 0} so lambda_2 = 0, not positive.
    CHECK(lambda2_dense(M, bad) <= 1e-12);
  }
  SECTION("kernel mismatch is an error") {
    const Eigen::MatrixXd M = assemble_dense_m(B, build_dual_diagonal(B, h));
    CHECK_THROWS_AS(lambda2_dense(M, part({1, -1, 1, -1})), KernelMismatch);
  }
  SECTION("size guard") {
    const Eigen::MatrixXd M = assemble_dense_m(B, build_dual_diagonal(B, h));
    CHECK_THROWS_AS(lambda2_dense(M, h, 2), TooLarge);
  }
}

TEST_CASE("psd_cholesky_deflated examples", "[certifier]") {
  const SignedAdjacency B = two_cliques();
  const Partition h = part({1, 1, -1, -1});
  CHECK(psd_cholesky_deflated(B, build_dual_diagonal(B, h), h, 1e-10));

  const SignedAdjacency E(6, std::vector<Edge>{});
  const Partition x = random_balanced(6, 9);
  CHECK_FALSE(psd_cholesky_deflated(E, build_dual_diagonal(E, x), x, 1e-10));

  const Partition bad = part({1, -1, 1, -1});
  CHECK_FALSE(psd_cholesky_deflated(B, build_dual_diagonal(B, bad), bad, 1e-10));

  CHECK_THROWS_AS(psd_cholesky_deflated(B, build_dual_diagonal(B, h), bad, 1e-10),
                  KernelMismatch);
}

TEST_CASE("lambda2_lanczos on closed-form operators", "[certifier]") {
  CertifyConfig cfg;
  cfg.lanczos_iters = 50;
  cfg.restarts = 3;
  cfg.seed = 5;

  SECTION("4I - hh^T acts as 4 times the identity off the kernel") {
    const SignedAdjacency B = two_cliques();
    const Partition h = part({1, 1, -1, -1});
    const auto est = lambda2_lanczos(B, build_dual_diagonal(B, h), h, cfg);
    CHECK(est.estimate == Catch::Approx(4.0).margin(1e-10));
    CHECK(est.per_restart.size() == 3);
  }
  SECTION("empty graph: deflated operator has smallest eigenvalue 0") {
    const SignedAdjacency E(8, std::vector<Edge>{});
    const Partition x = random_balanced(8, 1);
    const auto est = lambda2_lanczos(E, build_dual_diagonal(E, x), x, cfg);
    CHECK(std::abs(est.estimate) <= 1e-10);
  }
}

TEST_CASE("lanczos estimate matches dense lambda_2 in regime", "[certifier]") {
  const Instance inst =
      sample_instance(make_params_logscale(200, 16.0, 2.0), 31);
  const SignedAdjacency B(inst);
  const Partition& h = *inst.hidden;
  const DualDiagonal d = build_dual_diagonal(B, h);
  const double dense = lambda2_dense(assemble_dense_m(B, d), h);
  CertifyConfig cfg;
  cfg.lanczos_iters = 200;
  cfg.restarts = 3;
  cfg.seed = 99;
  const auto est = lambda2_lanczos(B, d, h, cfg);
  CHECK(std::abs(est.estimate - dense) <=
        1e-6 * std::max(1.0, std::abs(dense)));
  // Upper-bound property: Ritz values never undershoot the restricted
  // minimum beyond floating-point noise.
  CHECK(est.estimate >= dense - 1e-9 * 200);
  // Monotone restarts: the running minimum is non-increasing.
  double running = est.per_restart[0];
  for (double v : est.per_restart) {
    running = std::min(running, v);
    CHECK(est.estimate <= running + 1e-15);
  }
}

TEST_CASE("certify composes the pipeline", "[certifier]") {
  const SignedAdjacency B = two_cliques();
  CertifyConfig cfg;
  cfg.method = CertifyMethod::Dense;

  SECTION("planted split certifies with lambda_2 = 4") {
    const CertificateReport r = certify(B, part({1, 1, -1, -1}), cfg);
    CHECK(r.status == CertStatus::Certified);
    CHECK(r.reason == CertReason::DeterministicPass);
    CHECK(r.lambda2 == Catch::Approx(4.0).margin(1e-10));
    CHECK(r.objective == 12);
    CHECK(r.uniqueness_claimed);
    CHECK_FALSE(r.randomized);
  }
  SECTION("bad candidate is NotSure") {
    const CertificateReport r = certify(B, part({1, -1, 1, -1}), cfg);
    CHECK(r.status == CertStatus::NotSure);
    CHECK(r.reason == CertReason::Lambda2Nonpositive);
    CHECK(r.objective == -4);
    CHECK_FALSE(r.uniqueness_claimed);
  }
  SECTION("unbalanced candidate is NotSure(balance_failed)") {
    const CertificateReport r = certify(B, part({1, 1, 1, -1}), cfg);
    CHECK(r.status == CertStatus::NotSure);
    CHECK(r.reason == CertReason::BalanceFailed);
  }
  SECTION("empty graph ties: lambda_2 = 0 is NotSure") {
    const SignedAdjacency E(6, std::vector<Edge>{});
    const CertificateReport r = certify(E, random_balanced(6, 4), cfg);
    CHECK(r.status == CertStatus::NotSure);
    CHECK(r.reason == CertReason::Lambda2Nonpositive);
  }
  SECTION("cholesky method agrees on both outcomes") {
    CertifyConfig ch;
    ch.method = CertifyMethod::Cholesky;
    CHECK(certify(B, part({1, 1, -1, -1}), ch).status ==
          CertStatus::Certified);
    CHECK(certify(B, part({1, 1, -1, -1}), ch).uniqueness_claimed);
    CHECK(certify(B, part({1, -1, 1, -1}), ch).status == CertStatus::NotSure);
  }
  SECTION("lanczos method carries the randomized flag") {
    CertifyConfig lz;
    lz.method = CertifyMethod::Lanczos;
    lz.seed = 8;
    const CertificateReport r = certify(B, part({1, 1, -1, -1}), lz);
    CHECK(r.status == CertStatus::Certified);
    CHECK(r.reason == CertReason::RandomizedPass);
    CHECK(r.randomized);
    CHECK_FALSE(r.uniqueness_claimed);
    CHECK(r.diagnostics.per_restart.size() == 3);
  }
  SECTION("explicit dense method above the threshold degrades to NotSure") {
    CertifyConfig small;
    small.method = CertifyMethod::Dense;
    small.dense_threshold = 2;
    const CertificateReport r = certify(B, part({1, 1, -1, -1}), small);
    CHECK(r.status == CertStatus::NotSure);
    CHECK(r.reason == CertReason::Error);
    CHECK_FALSE(r.diagnostics.note.empty());
  }
}

TEST_CASE("certify never certifies below the slack", "[certifier]") {
  // Force an absurdly large slack: even the good candidate must come back
  // NotSure(lambda2_below_tolerance), on every method.
  const SignedAdjacency B = two_cliques();
  const Partition h = part({1, 1, -1, -1});
  for (CertifyMethod m :
       {CertifyMethod::Dense, CertifyMethod::Cholesky, CertifyMethod::Lanczos}) {
    CertifyConfig cfg;
    cfg.method = m;
    cfg.psd_tol = 100.0;
    const CertificateReport r = certify(B, h, cfg);
    CHECK(r.status == CertStatus::NotSure);
    CHECK(r.reason == CertReason::Lambda2BelowTolerance);
  }
}

TEST_CASE("exact certification agrees with the dense eigenvalue sign",
          "[certifier][exact]") {
  int checked = 0;
  for (std::uint64_t s = 0; s < 60; ++s) {
    const std::int64_t n = 6 + 2 * (s % 4);
    const Instance inst = sample_instance(make_params(n, 0.9, 0.1), 400 + s);
    const SignedAdjacency B(inst);
    const Partition x = (s % 3 == 0) ? random_balanced(n, s) : *inst.hidden;
    const DualDiagonal d = build_dual_diagonal(B, x);
    const double dense = lambda2_dense(assemble_dense_m(B, d), x);
    if (std::abs(dense) <= 1e-9) continue;  // sign too close to call in fp
    CHECK(lambda2_positive_exact(B, d, x) == (dense > 0.0));
    ++checked;
  }
  CHECK(checked >= 40);

  // Ties decide negative: the empty graph has lambda_2 exactly 0.
  const SignedAdjacency E(8, std::vector<Edge>{});
  const Partition x = random_balanced(8, 12);
  CHECK_FALSE(lambda2_positive_exact(E, x));
  CHECK_THROWS_AS(lambda2_positive_exact(E, x, 4), TooLarge);
}

TEST_CASE("sos_factor reconstructs the certificate matrix", "[certifier]") {
  const SignedAdjacency B = two_cliques();
  const Partition h = part({1, 1, -1, -1});
  const Eigen::MatrixXd M = assemble_dense_m(B, build_dual_diagonal(B, h));

  SECTION("two cliques: VV^T = 4I - hh^T, rank 3") {
    const Eigen::MatrixXd V = sos_factor(M, h);
    CHECK(V.cols() == 3);
    CHECK((V * V.transpose() - M).cwiseAbs().maxCoeff() <= 1e-12);
  }
  SECTION("empty graph: rank-one factor along the ones vector") {
    const SignedAdjacency E(6, std::vector<Edge>{});
    const Partition x = random_balanced(6, 3);
    const Eigen::MatrixXd Me = assemble_dense_m(E, build_dual_diagonal(E, x));
    const Eigen::MatrixXd V = sos_factor(Me, x);
    CHECK(V.cols() == 1);
    CHECK((V * V.transpose() - Me).cwiseAbs().maxCoeff() <= 1e-10);
    CHECK(std::abs(std::abs(V(0, 0)) - 1.0) <= 1e-12);
  }
  SECTION("indefinite input is rejected") {
    const Partition bad = part({1, -1, 1, -1});
    const Eigen::MatrixXd Mb =
        assemble_dense_m(B, build_dual_diagonal(B, bad));
    CHECK_THROWS_AS(sos_factor(Mb, bad), NotPsd);
  }
}

TEST_CASE("sos gap identity", "[certifier]") {
  const SignedAdjacency B = two_cliques();
  const Partition h = part({1, 1, -1, -1});
  const Eigen::MatrixXd M = assemble_dense_m(B, build_dual_diagonal(B, h));
  const Eigen::MatrixXd V = sos_factor(M, h);

  CHECK(sos_gap_check(V, B, h, h));
  CHECK(sos_gap_check(V, B, h, h.negated()));
  // gap = 12 - (-4) = 16 = ||V^T x||^2 for the bad bisection.
  const Partition bad = part({1, -1, 1, -1});
  CHECK(sos_gap_check(V, B, h, bad));
  Eigen::VectorXd xv(4);
  xv << 1, -1, 1, -1;
  CHECK((V.transpose() * xv).squaredNorm() == Catch::Approx(16.0).margin(1e-9));
}

TEST_CASE("sos gap identity holds exhaustively on a certified instance",
          "[certifier][prop]") {
  const Instance inst = sample_instance(make_params(10, 0.9, 0.05), 21);
  const SignedAdjacency B(inst);
  const Partition& h = *inst.hidden;
  const Eigen::MatrixXd M = assemble_dense_m(B, build_dual_diagonal(B, h));
  REQUIRE(lambda2_dense(M, h) > 0.0);
  const Eigen::MatrixXd V = sos_factor(M, h);
  for (std::uint32_t mask = 0; mask < (1u << 10); ++mask) {
    std::vector<std::int32_t> labels(10);
    for (int i = 0; i < 10; ++i) labels[static_cast<std::size_t>(i)] = (mask >> i) & 1u ? 1 : -1;
    REQUIRE(sos_gap_check(V, B, h, Partition(std::move(labels))));
  }
}

TEST_CASE("certification soundness against the brute-force oracle",
          "[certifier][oracle][stat]") {
  // Every Certified verdict must name the unique brute-force optimum.
  int certified = 0;
  for (std::uint64_t s = 0; s < 200; ++s) {
    const std::int64_t n = 8 + 2 * (s % 4);
    const double ps[] = {0.2, 0.5, 0.8, 1.0};
    const double qs[] = {0.0, 0.1, 0.3};
    const double p = ps[s % 4];
    const double q = std::min(qs[s % 3], p - 0.1);
    const Instance inst = sample_instance(make_params(n, p, q), 900 + s);
    const SignedAdjacency B(inst);
    const Partition x = (s % 2 == 0) ? *inst.hidden : random_balanced(n, s);
    CertifyConfig cfg;
    cfg.method = s % 5 == 0 ? CertifyMethod::Cholesky : CertifyMethod::Dense;
    const CertificateReport r = certify(B, x, cfg);
    if (r.status == CertStatus::Certified) {
      ++certified;
      REQUIRE(uniqueness_witness(B, x));
      REQUIRE(quad_form(B, x) == brute_force_bisection(B).opt_value);
    }
  }
  CHECK(certified > 20);  // the mix must actually exercise the certified path
}

TEST_CASE("report serialization carries the contract fields", "[certifier]") {
  const SignedAdjacency B = two_cliques();
  CertifyConfig cfg;
  cfg.method = CertifyMethod::Lanczos;
  cfg.seed = 77;
  const CertificateReport r = certify(B, part({1, 1, -1, -1}), cfg);
  const nlohmann::json j = report_to_json(r);
  CHECK(j.at("status") == "Certified");
  CHECK(j.at("reason") == "randomized_pass");
  CHECK(j.at("method") == "lanczos");
  CHECK(j.at("objective") == 12);
  CHECK(j.at("uniqueness") == false);
  CHECK(j.at("randomized") == true);
  CHECK(j.at("seed") == 77);
  CHECK(j.at("diagnostics").at("per_restart").size() == 3);
  CHECK(j.at("lambda2").get<double>() == Catch::Approx(4.0).margin(1e-9));
}

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
#include <set>

#include "pcc/sbm.hpp"

using namespace pcc;

TEST_CASE("make_params validates and converts", "[sbm]") {
  SECTION("boundary probabilities are accepted") {
    const SbmParams p = make_params(4, 1.0, 0.0);
    CHECK(p.p == 1.0);
    CHECK(p.q == 0.0);
    CHECK_FALSE(p.alpha.has_value());
  }
  SECTION("log scale populates p and q") {
    const SbmParams p = make_params_logscale(300, 16.0, 2.0);
    // 16*ln(300)/300 and 2*ln(300)/300, evaluated independently.
    CHECK(p.p == Catch::Approx(0.30420173198166406).epsilon(1e-15));
    CHECK(p.q == Catch::Approx(0.03802521649770801).epsilon(1e-15));
    CHECK(p.alpha == 16.0);
    CHECK(p.beta == 2.0);
  }
  SECTION("odd n is rejected") {
    CHECK_THROWS_AS(make_params(5, 0.5, 0.1), OddN);
    CHECK_THROWS_AS(make_params_logscale(301, 16.0, 2.0), OddN);
  }
  SECTION("tiny n is rejected") {
    CHECK_THROWS_AS(make_params(2, 0.5, 0.1), OutOfRange);
  }
  SECTION("probabilities out of [0,1] are rejected, not clamped") {
    CHECK_THROWS_AS(make_params(10, 1.5, 0.1), OutOfRange);
    CHECK_THROWS_AS(make_params(10, 0.5, -0.1), OutOfRange);
    // alpha big enough that alpha*ln(n)/n > 1 (threshold ~52.6 at n=300)
    CHECK_THROWS_AS(make_params_logscale(300, 60.0, 2.0), OutOfRange);
  }
  SECTION("q >= p is degenerate") {
    CHECK_THROWS_AS(make_params(10, 0.3, 0.3), Degenerate);
    CHECK_THROWS_AS(make_params(10, 0.3, 0.5), Degenerate);
  }
}

TEST_CASE("p=1,q=0 forces two cliques aligned with the hidden partition",
          "[sbm]") {
  const Instance inst = sample_instance(make_params(4, 1.0, 0.0), 9001);
  REQUIRE(inst.n == 4);
  REQUIRE(inst.edges.size() == 2);
  REQUIRE(inst.hidden.has_value());
  const Partition& h = *inst.hidden;
  for (const Edge& e : inst.edges) {
    CHECK(h[e.first] == h[e.second]);
  }
  CHECK(h.is_balanced());
}

TEST_CASE("p=0,q=0 yields the empty graph", "[sbm]") {
  // q < p is required, so exercise the all-zero edge path via p tiny.
  const Instance inst = sample_instance(make_params(8, 1e-300, 0.0), 3);
  CHECK(inst.edges.empty());
}

TEST_CASE("sampling is deterministic in (params, seed)", "[sbm]") {
  const SbmParams params = make_params(100, 0.5, 0.1);
  const Instance a = sample_instance(params, 77);
  const Instance b = sample_instance(params, 77);
  CHECK(a.edges == b.edges);
  CHECK(a.hidden->labels() == b.hidden->labels());
  const Instance c = sample_instance(params, 78);
  CHECK(a.edges != c.edges);
}

TEST_CASE("sampled graphs are simple with sorted edges", "[sbm]") {
  const Instance inst = sample_instance(make_params(60, 0.4, 0.2), 5);
  std::set<Edge> seen;
  Edge prev{-1, -1};
  for (const Edge& e : inst.edges) {
    CHECK(e.first < e.second);
    CHECK(e.first >= 0);
    CHECK(e.second < inst.n);
    CHECK(prev < e);  // sorted, no duplicates
    prev = e;
    seen.insert(e);
  }
  CHECK(seen.size() == inst.edges.size());
  CHECK(inst.hidden->is_balanced());
}

TEST_CASE("within-cluster edge count matches the binomial mean", "[sbm][stat]") {
  // n=100: 2*C(50,2) = 2450 within pairs; mean over 200 seeds must fall
  // within 5 standard deviations of p * 2450.
  const SbmParams params = make_params(100, 0.5, 0.1);
  const int seeds = 200;
  double total_within = 0.0;
  double plus_first = 0.0;
  for (int s = 0; s < seeds; ++s) {
    const Instance inst = sample_instance(params, 1000 + static_cast<std::uint64_t>(s));
    const Partition& h = *inst.hidden;
    for (const Edge& e : inst.edges) {
      if (h[e.first] == h[e.second]) total_within += 1.0;
    }
    if (h[0] == 1) plus_first += 1.0;
  }
  const double within_pairs = 2450.0;
  const double mean = total_within / seeds;
  const double sd_of_mean = std::sqrt(0.5 * 0.5 * within_pairs / seeds);
  CHECK(std::abs(mean - 0.5 * within_pairs) <= 5.0 * sd_of_mean);
  // The hidden split is random, not positional: vertex 0 lands on the +1
  // side about half the time (5 sigma of Binomial(200, 1/2)).
  CHECK(plus_first >= 100 - 5 * std::sqrt(50.0));
  CHECK(plus_first <= 100 + 5 * std::sqrt(50.0));
}

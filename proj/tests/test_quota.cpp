// Copyright 2026 The quotascan authors
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
#include <sstream>

#include <doctest.h>

#include "quotascan/errors.hpp"
#include "quotascan/fixtures.hpp"
#include "quotascan/quota.hpp"
#include "test_util.hpp"

using namespace quotascan;
using quotascan::test_util::make_dataset;

TEST_SUITE("quota") {

TEST_CASE("a two-per-department quota on the five-department example") {
  const auto dataset =
      make_dataset({{"econ", {6, 16, 12, 7, 23}, {0, 2, 2, 1, 5}}});
  const auto scenario = apply_quota(dataset, 2);
  CHECK(scenario.department_counts[0] == std::vector<int>{2, 2, 2, 2, 2});
  CHECK(scenario.simulated_shares[0] == doctest::Approx(10.0 / 64.0).epsilon(1e-15));
  CHECK(scenario.actual_shares[0] == doctest::Approx(10.0 / 64.0).epsilon(1e-15));
}

TEST_CASE("quota zero empties every department") {
  const auto dataset = make_dataset({{"a", {5, 9}, {1, 3}}, {"b", {4, 7}, {0, 2}}});
  const auto scenario = apply_quota(dataset, 0);
  for (const auto& counts : scenario.department_counts)
    for (int c : counts) CHECK(c == 0);
  CHECK(scenario.mean_share_sim == 0.0);
}

TEST_CASE("uniform department size gives the exact ratio") {
  const auto dataset = make_dataset({{"a", {8, 8, 8}, {1, 2, 3}}});
  const auto scenario = apply_quota(dataset, 2);
  CHECK(scenario.simulated_shares[0] == 0.25);
}

TEST_CASE("a quota at or above every size saturates the share at one") {
  const auto dataset = make_dataset({{"a", {4, 6}, {1, 2}}});
  const auto scenario = apply_quota(dataset, 10);
  CHECK(scenario.simulated_shares[0] == 1.0);
  const auto [actual, simulated] = share_vectors(dataset, scenario);
  CHECK(simulated == std::vector<double>{1.0});
  CHECK(actual == std::vector<double>{3.0 / 10.0});
}

TEST_CASE("counterfactual counts never exceed sizes; shares are monotone in q") {
  const auto dataset = generate({.n_strata = 6,
                                 .departments_per_stratum = {4, 12},
                                 .size_range = {3, 25},
                                 .share_range = {0.1, 0.4},
                                 .seed = 73});
  auto previous = apply_quota(dataset, 0);
  for (int q = 1; q <= 26; ++q) {
    const auto scenario = apply_quota(dataset, q);
    for (std::size_t s = 0; s < dataset.strata.size(); ++s) {
      const auto& depts = dataset.strata[s].departments;
      for (std::size_t d = 0; d < depts.size(); ++d)
        CHECK(scenario.department_counts[s][d] <= depts[d].size);
      CHECK(scenario.simulated_shares[s] >= previous.simulated_shares[s]);
    }
    previous = scenario;
  }
}

TEST_CASE("strata with identical size multisets get identical shares") {
  const auto dataset = make_dataset({
      {"a", {5, 9, 14}, {1, 3, 2}},
      {"b", {14, 5, 9}, {0, 0, 5}},
  });
  for (int q : {0, 1, 2, 7, 20}) {
    const auto scenario = apply_quota(dataset, q);
    CHECK(scenario.simulated_shares[0] == scenario.simulated_shares[1]);
  }
}

TEST_CASE("with all sizes above the quota the share is q over the mean size") {
  // counterfactual share collapses to q * n / N, strictly decreasing in the
  // mean department size for fixed q
  const auto dataset = make_dataset({
      {"a_small", {6, 8}, {1, 1}},
      {"b_mid", {12, 16}, {2, 2}},
      {"c_large", {24, 32}, {3, 3}},
  });
  const auto scenario = apply_quota(dataset, 2);
  for (std::size_t s = 0; s < dataset.strata.size(); ++s)
    CHECK(scenario.simulated_shares[s] ==
          doctest::Approx(2.0 / dataset.strata[s].mean_size()).epsilon(1e-14));
  CHECK(scenario.simulated_shares[0] > scenario.simulated_shares[1]);
  CHECK(scenario.simulated_shares[1] > scenario.simulated_shares[2]);
}

TEST_CASE("means are unweighted across strata; weighted variant alongside") {
  const auto dataset = make_dataset({
      {"a", {10, 10}, {2, 2}},    // share 0.2, N = 20
      {"b", {50, 50}, {5, 5}},    // share 0.1, N = 100
  });
  const auto scenario = apply_quota(dataset, 2);
  CHECK(scenario.mean_share_actual == doctest::Approx(0.15).epsilon(1e-15));
  CHECK(scenario.weighted_mean_share_actual ==
        doctest::Approx(14.0 / 120.0).epsilon(1e-15));
}

TEST_CASE("share_vectors rejects a scenario from a different dataset") {
  const auto a = make_dataset({{"a", {5, 9}, {1, 3}}});
  const auto b = make_dataset({{"b", {5, 9}, {1, 3}}});
  const auto scenario = apply_quota(a, 2);
  CHECK_THROWS_AS(share_vectors(b, scenario), ValidationError);
  CHECK_THROWS_AS(apply_quota(a, -1), ValidationError);
}

TEST_CASE("share CSV export") {
  const auto dataset = make_dataset({{"econ", {8, 8}, {1, 2}}});
  const auto scenario = apply_quota(dataset, 2);
  std::ostringstream out;
  write_share_csv(scenario, out);
  CHECK(out.str() ==
        "discipline,actual_share,simulated_share\necon,0.1875,0.25\n");
}

}  // TEST_SUITE

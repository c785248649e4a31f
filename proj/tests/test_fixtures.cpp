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

#include <algorithm>
#include <cmath>
#include <sstream>

#include <doctest.h>

#include "quotascan/errors.hpp"
#include "quotascan/fixtures.hpp"
#include "quotascan/ingest.hpp"

using namespace quotascan;

TEST_SUITE("fixtures") {

TEST_CASE("worked-example shape: 20 departments, share 0.2") {
  // One discipline with 20 departments of 20-40 members at share 0.2; only
  // the shape is pinned, the realization depends on the seed.
  const CorpusSpec spec{.n_strata = 1,
                        .departments_per_stratum = {20, 20},
                        .size_range = {20, 40},
                        .share_range = {0.2, 0.2},
                        .seed = 1};
  const auto dataset = generate(spec);
  REQUIRE(dataset.n_strata() == 1);
  const auto& stratum = dataset.strata[0];
  REQUIRE(stratum.n_units() == 20);
  for (const auto& d : stratum.departments) {
    CHECK(d.size >= 20);
    CHECK(d.size <= 40);
    CHECK(d.minority >= 0);
    CHECK(d.minority <= d.size);
  }
  // counts should look binomial at p = 0.2: mean count within a loose band
  CHECK(stratum.share() > 0.08);
  CHECK(stratum.share() < 0.35);
}

TEST_CASE("generation follows the published plan") {
  const CorpusSpec spec{.n_strata = 5,
                        .departments_per_stratum = {10, 30},
                        .size_range = {10, 40},
                        .share_range = {0.1, 0.4},
                        .seed = 8};
  const auto plan = generation_plan(spec);
  const auto dataset = generate(spec);
  REQUIRE(plan.size() == 5);
  REQUIRE(dataset.n_strata() == 5);
  for (int s = 0; s < 5; ++s) {
    CHECK(dataset.strata[s].key == plan[s].key);
    CHECK(dataset.strata[s].n_units() == plan[s].n_departments);
    CHECK(plan[s].target_share >= 0.1);
    CHECK(plan[s].target_share <= 0.4);
    // realized share scatters around the target; sd is below 0.03 at these
    // pool sizes, so 0.15 is a >5 sigma band
    CHECK(std::fabs(dataset.strata[s].share() - plan[s].target_share) < 0.15);
  }
}

TEST_CASE("generation is deterministic in the seed") {
  const CorpusSpec spec{.n_strata = 3,
                        .departments_per_stratum = {4, 9},
                        .size_range = {3, 12},
                        .share_range = {0.1, 0.4},
                        .seed = 5};
  const auto a = generate(spec);
  const auto b = generate(spec);
  REQUIRE(a.n_strata() == b.n_strata());
  for (int s = 0; s < a.n_strata(); ++s)
    CHECK(a.strata[s].departments == b.strata[s].departments);

  auto other = spec;
  other.seed = 6;
  const auto c = generate(other);
  bool identical = a.n_strata() == c.n_strata();
  if (identical)
    for (int s = 0; s < a.n_strata(); ++s)
      identical = identical && a.strata[s].departments == c.strata[s].departments;
  CHECK_FALSE(identical);
}

TEST_CASE("hard quota pins every count at min(quota, size)") {
  const auto dataset = generate({.n_strata = 4,
                                 .departments_per_stratum = {5, 10},
                                 .size_range = {3, 10},
                                 .regime = Regime::hard_quota,
                                 .quota = 5,
                                 .seed = 2});
  for (const auto& stratum : dataset.strata)
    for (const auto& d : stratum.departments)
      CHECK(d.minority == std::min(5, d.size));
}

TEST_CASE("null regime at share zero produces empty counts and a degenerate flag") {
  const auto dataset = generate({.n_strata = 2,
                                 .departments_per_stratum = {4, 4},
                                 .size_range = {3, 9},
                                 .share_range = {0.0, 0.0},
                                 .seed = 3});
  for (const auto& stratum : dataset.strata) {
    CHECK(stratum.degenerate);
    for (const auto& d : stratum.departments) CHECK(d.minority == 0);
  }
}

TEST_CASE("soft quota with zero leak equals the hard quota") {
  CorpusSpec spec{.n_strata = 3,
                  .departments_per_stratum = {6, 12},
                  .size_range = {3, 15},
                  .regime = Regime::hard_quota,
                  .quota = 2,
                  .seed = 9};
  const auto hard = generate(spec);
  spec.regime = Regime::soft_quota;
  spec.leak = 0.0;
  const auto soft = generate(spec);
  REQUIRE(hard.n_strata() == soft.n_strata());
  for (int s = 0; s < hard.n_strata(); ++s)
    CHECK(hard.strata[s].departments == soft.strata[s].departments);
}

TEST_CASE("soft quota with partial leak mixes both behaviours") {
  const auto dataset = generate({.n_strata = 2,
                                 .departments_per_stratum = {40, 40},
                                 .size_range = {5, 15},
                                 .share_range = {0.3, 0.3},
                                 .regime = Regime::soft_quota,
                                 .quota = 2,
                                 .leak = 0.5,
                                 .seed = 12});
  int at_quota = 0, off_quota = 0;
  for (const auto& stratum : dataset.strata)
    for (const auto& d : stratum.departments)
      (d.minority == std::min(2, d.size) ? at_quota : off_quota) += 1;
  CHECK(at_quota > 10);
  CHECK(off_quota > 10);
}

TEST_CASE("infeasible specs are rejected") {
  CHECK_THROWS_AS(generate({.n_strata = 0}), ValidationError);
  CHECK_THROWS_AS(generate({.departments_per_stratum = {5, 3}}), ValidationError);
  CHECK_THROWS_AS(generate({.size_range = {2, 10}, .min_dept_size = 3}),
                  ValidationError);
  CHECK_THROWS_AS(generate({.share_range = {0.5, 1.2}}), ValidationError);
  CHECK_THROWS_AS(generate({.regime = Regime::soft_quota, .leak = 1.5}),
                  ValidationError);
}

TEST_CASE("department CSV round-trips through the parser") {
  const auto dataset = generate({.n_strata = 3,
                                 .departments_per_stratum = {3, 7},
                                 .size_range = {3, 20},
                                 .share_range = {0.15, 0.35},
                                 .seed = 31});
  std::ostringstream csv;
  write_department_csv(dataset, csv);
  std::istringstream in(csv.str());
  const auto reparsed = build_dataset(parse_departments(in), dataset.min_dept_size);
  REQUIRE(reparsed.n_strata() == dataset.n_strata());
  for (int s = 0; s < dataset.n_strata(); ++s) {
    CHECK(reparsed.strata[s].key == dataset.strata[s].key);
    CHECK(reparsed.strata[s].departments == dataset.strata[s].departments);
  }
}

TEST_CASE("roster CSV expansion respects custom symbols") {
  const auto dataset = generate({.n_strata = 2,
                                 .departments_per_stratum = {3, 4},
                                 .size_range = {3, 8},
                                 .share_range = {0.2, 0.5},
                                 .seed = 37});
  std::ostringstream csv;
  write_roster_csv(dataset, csv, {"W", "M"});
  std::istringstream in(csv.str());
  const auto records = parse_roster(in, {"W", "M"});
  std::vector<DepartmentRecord> expected;
  for (const auto& stratum : dataset.strata)
    for (const auto& d : stratum.departments) expected.push_back(d);
  CHECK(records == expected);
}

}  // TEST_SUITE

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
#include <stdexcept>
#include <vector>

#include <doctest.h>

#include "quotascan/stats.hpp"
#include "test_util.hpp"

using namespace quotascan;
using stats::Sidedness;

TEST_SUITE("stats") {

// Reference values computed with 60-digit arithmetic.
TEST_CASE("erf and erfc spot values") {
  CHECK(stats::erf(0.5) == doctest::Approx(0.52049987781304653768).epsilon(1e-14));
  CHECK(stats::erf(1.0) == doctest::Approx(0.84270079294971486934).epsilon(1e-14));
  CHECK(stats::erf(2.0) == doctest::Approx(0.99532226501895273416).epsilon(1e-14));
  CHECK(stats::erfc(2.0) == doctest::Approx(4.6777349810472658379e-3).epsilon(1e-13));
  CHECK(stats::erfc(5.0) == doctest::Approx(1.5374597944280348502e-12).epsilon(1e-12));
  CHECK(stats::erf(-1.0) == doctest::Approx(-0.84270079294971486934).epsilon(1e-14));
  CHECK(stats::erfc(-2.0) == doctest::Approx(2.0 - 4.6777349810472658379e-3).epsilon(1e-15));
  CHECK(stats::erf(0.0) == 0.0);
  CHECK(stats::erfc(0.0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(stats::erfc(30.0) == 0.0);
}

TEST_CASE("normal cdf spot values and symmetry") {
  CHECK(stats::normal_cdf(0.0) == 0.5);
  CHECK(stats::normal_cdf(3.0) ==
        doctest::Approx(0.99865010196836990547).epsilon(1e-13));
  CHECK(stats::normal_cdf(1.0) ==
        doctest::Approx(0.84134474606854294859).epsilon(1e-13));
  CHECK(stats::normal_cdf(-8.0) ==
        doctest::Approx(6.2209605742717841235e-16).epsilon(1e-10));
  for (double x = -6.0; x <= 6.0; x += 0.37)
    CHECK(std::fabs(stats::normal_cdf(x) + stats::normal_cdf(-x) - 1.0) < 1e-15);
  double prev = 0.0;
  for (double x = -8.0; x <= 8.0; x += 0.05) {
    const double c = stats::normal_cdf(x);
    CHECK(c >= prev);
    prev = c;
  }
}

TEST_CASE("normal p-values per sidedness") {
  CHECK(stats::normal_p_value(0.0, Sidedness::two_sided) == 1.0);
  CHECK(stats::normal_p_value(1.959963985, Sidedness::two_sided) ==
        doctest::Approx(0.05).epsilon(1e-6));
  CHECK(stats::normal_p_value(-3.0, Sidedness::one_sided_directional) ==
        doctest::Approx(0.99865010196836990547).epsilon(1e-10));
  CHECK(stats::normal_p_value(2.5, Sidedness::two_sided) ==
        stats::normal_p_value(-2.5, Sidedness::two_sided));
  CHECK_THROWS_AS(stats::normal_p_value(std::nan(""), Sidedness::two_sided),
                  std::domain_error);
  // monotone decreasing in |t|
  double prev = 1.1;
  for (double t = 0.0; t < 5.0; t += 0.25) {
    const double p = stats::normal_p_value(t, Sidedness::two_sided);
    CHECK(p < prev);
    prev = p;
  }
}

TEST_CASE("student t cdf against high-precision references") {
  CHECK(stats::students_t_cdf(2.0, 10) ==
        doctest::Approx(0.96330598261462981719).epsilon(1e-12));
  CHECK(stats::students_t_cdf(1.0, 5) ==
        doctest::Approx(0.81839126617543868720).epsilon(1e-12));
  CHECK(stats::students_t_cdf(2.5, 30) ==
        doctest::Approx(0.99094217546596665295).epsilon(1e-12));
  CHECK(stats::students_t_cdf(-1.3, 3) ==
        doctest::Approx(0.14223375436394869320).epsilon(1e-12));
  CHECK(stats::students_t_cdf(0.0, 7) == 0.5);
}

TEST_CASE("incomplete beta boundaries") {
  CHECK(stats::regularized_incomplete_beta(2.0, 3.0, 0.0) == 0.0);
  CHECK(stats::regularized_incomplete_beta(2.0, 3.0, 1.0) == 1.0);
  CHECK_THROWS_AS(stats::regularized_incomplete_beta(-1.0, 3.0, 0.5),
                  std::domain_error);
  CHECK_THROWS_AS(stats::regularized_incomplete_beta(2.0, 3.0, 1.5),
                  std::domain_error);
}

TEST_CASE("kolmogorov upper tail spot values") {
  CHECK(stats::kolmogorov_q(0.5) ==
        doctest::Approx(0.96394524366487509439).epsilon(1e-12));
  CHECK(stats::kolmogorov_q(1.0) ==
        doctest::Approx(0.26999967167735452120).epsilon(1e-12));
  CHECK(stats::kolmogorov_q(1.36) ==
        doctest::Approx(0.049485876755377883640).epsilon(1e-12));
  CHECK(stats::kolmogorov_q(2.0) ==
        doctest::Approx(6.7092525577969534654e-4).epsilon(1e-12));
  CHECK(stats::kolmogorov_q(0.0) == 1.0);
}

TEST_CASE("ks test accepts normal samples and rejects uniform ones") {
  rng::Stream stream(2, 0, 0, 0);
  std::vector<double> normal;
  for (int i = 0; i < 2'000; ++i) normal.push_back(test_util::normal_draw(stream));
  const auto ok = stats::ks_test_standard_normal(normal);
  CHECK(ok.p_value > 0.05);

  std::vector<double> uniform;
  for (int i = 0; i < 2'000; ++i) uniform.push_back(stream.next_uniform());
  const auto bad = stats::ks_test_standard_normal(uniform);
  CHECK(bad.p_value < 1e-6);
}

TEST_CASE("pearson correlation: frozen reference case") {
  const std::vector<double> x{1, 2, 3, 4, 5};
  const std::vector<double> y{2, 1, 4, 3, 5};
  const auto r = stats::pearson(x, y);
  REQUIRE(r.has_value());
  CHECK(r->rho == doctest::Approx(0.8).epsilon(1e-14));
  CHECK(r->p_value == doctest::Approx(0.10408803866182799).epsilon(1e-9));
  CHECK(r->ci_lo == doctest::Approx(-0.27964004196935505).epsilon(1e-9));
  CHECK(r->ci_hi == doctest::Approx(0.98619619330127140).epsilon(1e-9));
  CHECK_FALSE(r->ci_degenerate);
}

TEST_CASE("pearson correlation: exact linearity and degenerate inputs") {
  const std::vector<double> x{1, 2, 3, 4};
  const std::vector<double> up{3, 5, 7, 9};
  const auto perfect = stats::pearson(x, up);
  REQUIRE(perfect.has_value());
  CHECK(perfect->rho == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(perfect->p_value == 0.0);
  CHECK(perfect->ci_degenerate);

  const std::vector<double> constant{2, 2, 2, 2};
  CHECK_FALSE(stats::pearson(x, constant).has_value());
  CHECK_FALSE(stats::pearson(constant, x).has_value());
  CHECK_FALSE(stats::pearson(std::vector<double>{1, 2},
                             std::vector<double>{3, 4}).has_value());
}

TEST_CASE("pearson correlation is invariant under affine rescaling") {
  rng::Stream stream(77, 0, 0, 0);
  std::vector<double> x, y, x2, y2;
  for (int i = 0; i < 40; ++i) {
    x.push_back(stream.next_uniform());
    y.push_back(stream.next_uniform() + 0.3 * x.back());
    x2.push_back(5.0 * x.back() - 11.0);
    y2.push_back(0.25 * y.back() + 3.0);
  }
  const auto a = stats::pearson(x, y);
  const auto b = stats::pearson(x2, y2);
  REQUIRE(a.has_value());
  REQUIRE(b.has_value());
  CHECK(a->rho == doctest::Approx(b->rho).epsilon(1e-12));
}

TEST_CASE("two-proportion test") {
  CHECK(stats::two_proportion_p_value(30, 100, 300, 1000) == 1.0);
  CHECK(stats::two_proportion_p_value(40, 100, 30, 100) ==
        doctest::Approx(0.13820766697402568).epsilon(1e-12));
  CHECK(stats::two_proportion_p_value(0, 50, 0, 80) == 1.0);  // degenerate pool
}

}  // TEST_SUITE

#include <doctest.h>

#include <stdexcept>

#include <cmath>

#include "clockrc/rng.hpp"
#include "clockrc/stats.hpp"

using namespace clockrc;

TEST_SUITE_BEGIN("stats");

TEST_CASE("chi-square tail matches reference values") {
  // reference values computed with scipy.stats.chi2.sf
  CHECK(chi2_sf(6.634896601021213, 1) == doctest::Approx(0.01).epsilon(1e-10));
  CHECK(chi2_sf(3.841458820694124, 1) == doctest::Approx(0.05).epsilon(1e-10));
  CHECK(chi2_sf(9.21034, 2) == doctest::Approx(0.010000001859881084).epsilon(1e-9));
  CHECK(chi2_sf(11.344867, 3) == doctest::Approx(0.009999998752804013).epsilon(1e-9));
  CHECK(chi2_sf(13.276704, 4) == doctest::Approx(0.0100000005909218).epsilon(1e-9));
  CHECK(chi2_sf(2.5, 1) == doctest::Approx(0.11384629800665763).epsilon(1e-10));
  CHECK(chi2_sf(7.0, 4) == doctest::Approx(0.13588822540043327).epsilon(1e-10));
  CHECK(chi2_sf(0.0, 3) == 1.0);
}

TEST_CASE("gamma functions are complementary") {
  for (double a : {0.5, 1.0, 2.5, 10.0}) {
    for (double x : {0.1, 1.0, 5.0, 30.0}) {
      CHECK(gammp(a, x) + gammq(a, x) == doctest::Approx(1.0).epsilon(1e-12));
    }
  }
  CHECK_THROWS_AS(gammp(-1.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(gammq(1.0, -1.0), std::invalid_argument);
}

TEST_CASE("goodness of fit accepts the true law and rejects a wrong one") {
  Rng rng(5);
  std::vector<double> probs = {0.5, 0.3, 0.2};
  std::vector<std::uint64_t> counts(3, 0);
  for (int i = 0; i < 100000; ++i) {
    double u = rng.next_double();
    ++counts[u < 0.5 ? 0 : (u < 0.8 ? 1 : 2)];
  }
  CHECK(chi2_gof(counts, probs).p_value >= 0.01);
  CHECK(chi2_gof(counts, {0.4, 0.4, 0.2}).p_value < 1e-6);
}

TEST_CASE("zero-probability cells") {
  CHECK(chi2_gof({100, 200, 0}, {0.33, 0.67, 0.0}).p_value > 0.0);
  CHECK(chi2_gof({100, 200, 5}, {0.33, 0.67, 0.0}).p_value == 0.0);
}

TEST_CASE("two-sample homogeneity") {
  // same Bernoulli rate in both samples
  auto same = chi2_two_sample_2x2(4980, 5020, 5050, 4950);
  CHECK(same.dof == 1);
  CHECK(same.p_value >= 0.01);
  auto different = chi2_two_sample_2x2(6000, 4000, 5000, 5000);
  CHECK(different.p_value < 1e-6);
}

TEST_CASE("batch means on a constant series") {
  std::vector<double> series(1000, 3.25);
  auto res = batch_means(series, 50);
  CHECK(res.mean == doctest::Approx(3.25).epsilon(1e-14));
  CHECK(res.std_error == 0.0);
}

TEST_CASE("batch means recovers the iid standard error scale") {
  Rng rng(17);
  const int n = 100000;
  std::vector<double> series(n);
  for (auto& v : series) v = rng.next_double();
  auto res = batch_means(series, 50);
  double expected_se = std::sqrt(1.0 / 12.0 / n);
  CHECK(res.mean == doctest::Approx(0.5).epsilon(0.01));
  CHECK(res.std_error > 0.3 * expected_se);
  CHECK(res.std_error < 3.0 * expected_se);
}

TEST_CASE("batch means input validation") {
  CHECK_THROWS_AS(batch_means({1.0, 2.0}, 1), std::invalid_argument);
  CHECK_THROWS_AS(batch_means({1.0}, 2), std::invalid_argument);
}

TEST_SUITE_END();

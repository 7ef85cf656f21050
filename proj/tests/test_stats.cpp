#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "lgl/rng.hpp"
#include "lgl/stats.hpp"

using namespace lgl;

TEST_CASE("normal cdf pinned values and symmetry") {
  CHECK(normal_cdf(0.0) == doctest::Approx(0.5));
  CHECK(normal_cdf(1.0) == doctest::Approx(0.8413447460685429).epsilon(1e-12));
  CHECK(normal_cdf(-1.0) == doctest::Approx(1.0 - 0.8413447460685429).epsilon(1e-12));
  CHECK(normal_cdf(1.96) == doctest::Approx(0.9750021048517795).epsilon(1e-10));
  // Location-scale family.
  CHECK(normal_cdf(3.0, 3.0, 2.0) == doctest::Approx(0.5));
  CHECK(normal_cdf(5.0, 3.0, 2.0) == doctest::Approx(0.8413447460685429).epsilon(1e-12));
}

TEST_CASE("mean and unbiased variance of a small sample") {
  const MeanVar mv = mean_variance({1.0, 2.0, 3.0, 4.0});
  CHECK(mv.count == 4);
  CHECK(mv.mean == doctest::Approx(2.5));
  CHECK(mv.variance == doctest::Approx(5.0 / 3.0));
  CHECK(mean_variance({}).count == 0);
  CHECK(mean_variance({7.0}).variance == 0.0);
}

TEST_CASE("one-sample KS on hand-computed cases") {
  auto uniform = [](double x) { return std::min(1.0, std::max(0.0, x)); };
  CHECK(ks_one_sample({0.5}, uniform) == doctest::Approx(0.5));
  CHECK(ks_one_sample({0.25, 0.75}, uniform) == doctest::Approx(0.25));
  CHECK(ks_one_sample({0.0, 0.5}, uniform) == doctest::Approx(0.5));
  CHECK_THROWS(ks_one_sample({}, uniform));
}

TEST_CASE("two-sample KS on hand-computed cases") {
  CHECK(ks_two_sample({0.0, 1.0}, {0.5, 1.5}) == doctest::Approx(0.5));
  CHECK(ks_two_sample({1.0, 2.0, 3.0}, {1.0, 2.0, 3.0}) == doctest::Approx(0.0));
  CHECK(ks_two_sample({0.0}, {1.0}) == doctest::Approx(1.0));
  // Ties across the two samples are handled by comparing between values.
  CHECK(ks_two_sample({1.0, 1.0, 2.0}, {1.0, 2.0, 2.0}) ==
        doctest::Approx(1.0 / 3.0));
  CHECK_THROWS(ks_two_sample({}, {1.0}));
}

TEST_CASE("total variation distance to uniform") {
  CHECK(tv_to_uniform({5, 5}) == doctest::Approx(0.0));
  CHECK(tv_to_uniform({2, 0}) == doctest::Approx(0.5));
  CHECK(tv_to_uniform({3, 1}) == doctest::Approx(0.25));
  CHECK_THROWS(tv_to_uniform({}));
  CHECK_THROWS(tv_to_uniform({0, 0}));
}

TEST_CASE("ks distances always lie in [0, 1]") {
  CounterRng rng(12, 0);
  std::vector<double> a, b;
  for (int i = 0; i < 500; ++i) {
    a.push_back(rng.next_gaussian());
    b.push_back(rng.next_gaussian() + 0.3);
  }
  const double d1 = ks_one_sample(a, [](double x) { return normal_cdf(x); });
  const double d2 = ks_two_sample(a, b);
  CHECK(d1 >= 0.0);
  CHECK(d1 <= 1.0);
  CHECK(d2 >= 0.0);
  CHECK(d2 <= 1.0);
}

TEST_CASE("counter rng gaussians pass a KS sanity check") {
  CounterRng rng(99, 4);
  std::vector<double> xs;
  for (int i = 0; i < 20000; ++i) xs.push_back(rng.next_gaussian());
  CHECK(ks_one_sample(xs, [](double x) { return normal_cdf(x); }) < 0.015);
  const MeanVar mv = mean_variance(xs);
  CHECK(std::abs(mv.mean) < 0.03);
  CHECK(mv.variance == doctest::Approx(1.0).epsilon(0.05));
}

TEST_CASE("counter rng streams are independent and replayable") {
  CounterRng a(5, 1), b(5, 1), c(5, 2);
  CHECK(a.next_u64() == b.next_u64());
  CHECK(a.next_u64() != c.next_u64());
  a.set_counter(0);
  CHECK(a.next_u64() == counter_hash(5, 1, 0));
  // next_below stays in range.
  for (int i = 0; i < 1000; ++i) CHECK(a.next_below(13) < 13);
}

TEST_CASE("summaries carry the normal confidence radius") {
  const StatQuantity q = summarize("demo", {1.0, 2.0, 3.0, 4.0});
  CHECK(q.name == "demo");
  CHECK(q.count == 4);
  CHECK(q.mean == doctest::Approx(2.5));
  CHECK(q.ci_radius == doctest::Approx(1.96 * std::sqrt((5.0 / 3.0) / 4.0)));
  CHECK(std::isnan(q.ks));
}

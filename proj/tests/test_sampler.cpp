#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "lgl/sampler.hpp"
#include "lgl/stats.hpp"
#include "oracles.hpp"

using namespace lgl;

TEST_CASE("enumeration counts match the closed-form oracles") {
  auto count = [](int a, int b, int c) {
    return enumerate_tilings(BoundaryHeights(hexagon_domain(a, b, c), 0)).size();
  };
  CHECK(count(2, 2, 2) == 20);
  CHECK(count(2, 2, 2) == oracle::boxed_plane_partitions(2, 2, 2));
  // Height-1 boxes count lattice paths.
  CHECK(count(3, 2, 1) == oracle::binomial(5, 3));
  CHECK(count(4, 3, 1) == oracle::binomial(7, 4));
  CHECK(count(3, 3, 2) == oracle::boxed_plane_partitions(3, 3, 2));
}

TEST_CASE("enumeration refuses domains beyond the face cap") {
  CHECK_THROWS_AS(enumerate_tilings(BoundaryHeights(hexagon_domain(4, 4, 4), 0)), error);
}

TEST_CASE("flippable: unit hexagon centre moves only towards the other tiling") {
  const DomainPtr d = hexagon_domain(1, 1, 1);
  const auto [mn, mx] = extremal_heights(BoundaryHeights(d, 0));
  CHECK(flippable(mn, {1, 1}) == Flip::up);
  CHECK(flippable(mx, {1, 1}) == Flip::down);
  CHECK(flippable(mn, {0, 0}) == Flip::none);  // boundary vertex is pinned
  CHECK(flippable(mn, {1, 0}) == Flip::none);
}

TEST_CASE("glauber engine: coupled extremal grids stay ordered and valid") {
  const BoundaryHeights b(hexagon_domain(2, 2, 2), 0);
  const GlauberEngine engine(b);
  std::vector<int> lo = engine.min_grid();
  std::vector<int> hi = engine.max_grid();
  for (std::uint64_t t = 0; t < 5000; ++t) {
    engine.apply_keyed(lo, 7, 1, t);
    engine.apply_keyed(hi, 7, 1, t);
    if (t % 500 == 0) {
      const HeightFunction hlo = engine.to_height(lo);
      const HeightFunction hhi = engine.to_height(hi);
      CHECK(hlo.is_valid());
      CHECK(hhi.is_valid());
      for (std::size_t i = 0; i < hlo.values().size(); ++i)
        CHECK(hlo.values()[i] <= hhi.values()[i]);
    }
  }
}

TEST_CASE("glauber chains are counter-based: 10 + 10 proposals equal 20") {
  const BoundaryHeights b(hexagon_domain(2, 2, 2), 0);
  const GlauberEngine engine(b);
  ChainState split{engine.to_height(engine.min_grid()), 42, 3, 0};
  ChainState whole = split;
  glauber_run(engine, split, 10);
  glauber_run(engine, split, 10);
  glauber_run(engine, whole, 20);
  CHECK(split.heights == whole.heights);
  CHECK(split.proposals_done == 20);
}

TEST_CASE("sample_mcmc produces valid heights with the right boundary") {
  const BoundaryHeights b(hexagon_domain(3, 2, 4), 0);
  const GlauberEngine engine(b);
  const HeightFunction h = sample_mcmc(engine, 5, 0, 200);
  CHECK(h.is_valid());
  CHECK(h.boundary().values() == b.values());
  CHECK_NOTHROW(tiling_from_height(h));
}

TEST_CASE("sample_cftp is deterministic in (seed, stream) and bracketed") {
  const BoundaryHeights b(hexagon_domain(2, 3, 2), 0);
  const GlauberEngine engine(b);
  const auto [mn, mx] = extremal_heights(b);

  const HeightFunction h1 = sample_cftp(engine, 11, 0);
  const HeightFunction h2 = sample_cftp(engine, 11, 0);
  CHECK(h1 == h2);
  CHECK(h1.is_valid());
  for (int i = 0; i < static_cast<int>(h1.values().size()); ++i) {
    CHECK(mn.at(i) <= h1.at(i));
    CHECK(h1.at(i) <= mx.at(i));
  }

  // Different streams give (almost surely) different samples somewhere.
  bool any_different = false;
  for (std::uint64_t s = 1; s <= 8 && !any_different; ++s)
    any_different = !(sample_cftp(engine, 11, s) == h1);
  CHECK(any_different);
}

TEST_CASE("cftp on the unit hexagon is an unbiased coin") {
  const BoundaryHeights b(hexagon_domain(1, 1, 1), 0);
  const GlauberEngine engine(b);
  const DomainPtr d = b.domain();
  const int centre = d->index_of({1, 1});
  std::size_t ups = 0;
  const std::size_t n = 4000;
  for (std::size_t i = 0; i < n; ++i)
    ups += sample_cftp(engine, 99, i).at(centre) == 1 ? 1 : 0;
  const double f = static_cast<double>(ups) / n;
  CHECK(f > 0.45);
  CHECK(f < 0.55);
}

TEST_CASE("cftp sampling of the 2x2x2 hexagon is close to uniform") {
  const BoundaryHeights b(hexagon_domain(2, 2, 2), 0);
  const GlauberEngine engine(b);
  const auto tilings = enumerate_tilings(b);
  REQUIRE(tilings.size() == 20);

  std::vector<std::size_t> counts(tilings.size(), 0);
  const std::size_t n = 20000;
  for (std::size_t i = 0; i < n; ++i) {
    const Tiling t = tiling_from_height(sample_cftp(engine, 123, i));
    const auto it = std::find(tilings.begin(), tilings.end(), t);
    REQUIRE(it != tilings.end());
    ++counts[it - tilings.begin()];
  }
  CHECK(tv_to_uniform(counts) < 0.05);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "lgl/entropy.hpp"
#include "lgl/lattice.hpp"
#include "lgl/sampler.hpp"
#include "oracles.hpp"

using namespace lgl;

namespace {

std::vector<TriVertex> hexagon_path(int a, int b, int c) {
  std::vector<TriVertex> path;
  TriVertex v{0, 0};
  auto run = [&](Dir d, int count) {
    for (int i = 0; i < count; ++i) {
      path.push_back(v);
      v = v + step(d);
    }
  };
  run(Dir::R, a);
  run(Dir::NE, b);
  run(Dir::U, c);
  run(Dir::L, a);
  run(Dir::SW, b);
  run(Dir::D, c);
  return path;
}

}  // namespace

TEST_CASE("build_domain: 2x2x2 hexagon has 19 vertices and 24 faces") {
  const DomainPtr d = build_domain(hexagon_path(2, 2, 2));
  CHECK(d->vertex_count() == 19);
  CHECK(d->faces().size() == 24);
  CHECK(*d == *hexagon_domain(2, 2, 2));
}

TEST_CASE("build_domain: degenerate and malformed paths are rejected") {
  // A single unit triangle encloses one face; no lozenge tiling can exist.
  CHECK_THROWS_AS(build_domain({{0, 0}, {1, 0}, {1, 1}}), invalid_domain);
  // Consecutive vertices must be lattice neighbours.
  CHECK_THROWS_AS(build_domain({{0, 0}, {2, 0}, {1, 1}}), invalid_domain);
  // Too short to enclose anything.
  CHECK_THROWS_AS(build_domain({{0, 0}, {1, 0}}), invalid_domain);
}

TEST_CASE("from_boundary_path: open and self-intersecting paths are rejected") {
  CHECK_THROWS_AS(Domain::from_boundary_path({0, 0}, {Dir::R, Dir::U}), invalid_domain);
  // Closed bowtie revisiting (1,1).
  CHECK_THROWS_AS(Domain::from_boundary_path({0, 0}, {Dir::R, Dir::U, Dir::R, Dir::U,
                                                      Dir::L, Dir::D, Dir::L, Dir::D}),
                  invalid_domain);
}

TEST_CASE("boundary heights of the 5x3x4 hexagon match the forced walk") {
  const DomainPtr d = hexagon_domain(5, 3, 4);
  const BoundaryHeights b(d, 0);
  CHECK(b({0, 0}) == 0);
  CHECK(b({5, 0}) == 0);
  CHECK(b({6, 1}) == 1);
  CHECK(b({8, 3}) == 3);
  CHECK(b({8, 7}) == 3);
  CHECK(b({3, 7}) == 3);
  CHECK(b({0, 4}) == 0);
  // Not a boundary vertex.
  CHECK_THROWS_AS(b({4, 4}), error);
}

TEST_CASE("every tiling of the 5x3x4 hexagon reaches height 3 at the top corner") {
  const DomainPtr d = hexagon_domain(5, 3, 4);
  const Tiling t = sample_cftp_tiling(BoundaryHeights(d, 0), 17);
  const HeightFunction h = height_from_tiling(t, {0, 0}, 0);
  CHECK(h({8, 7}) == 3);
  CHECK(h({8, 3}) == 3);
  CHECK(h({0, 4}) == 0);
}

TEST_CASE("single-lozenge domains have exactly one tiling of the right type") {
  struct Case {
    LozengeType type;
    std::vector<TriVertex> path;
  };
  const std::vector<Case> cases = {
      {LozengeType::e11, {{0, 0}, {1, 0}, {1, 1}, {0, 1}}},
      {LozengeType::e01, {{0, 0}, {1, 0}, {2, 1}, {1, 1}}},
      {LozengeType::e10, {{0, 0}, {1, 1}, {1, 2}, {0, 1}}},
  };
  for (const auto& c : cases) {
    const DomainPtr d = build_domain(c.path);
    const auto tilings = enumerate_tilings(BoundaryHeights(d, 0));
    REQUIRE(tilings.size() == 1);
    REQUIRE(tilings[0].lozenges().size() == 1);
    CHECK(tilings[0].lozenges()[0].type == c.type);
    CHECK(tilings[0].lozenges()[0].a == TriVertex{0, 0});
    // Round trip through the height function.
    const HeightFunction h = height_from_tiling(tilings[0], {0, 0}, 0);
    CHECK(h.is_valid());
    CHECK(tiling_from_height(h) == tilings[0]);
  }
}

TEST_CASE("tiling<->height round trip and boundary independence on 20 tilings") {
  const DomainPtr d = hexagon_domain(2, 2, 2);
  const BoundaryHeights b(d, 0);
  const auto tilings = enumerate_tilings(b);
  REQUIRE(tilings.size() == 20);

  const auto [mn, mx] = extremal_heights(b);
  for (const auto& t : tilings) {
    const HeightFunction h = height_from_tiling(t, {0, 0}, 0);
    CHECK(h.is_valid());
    CHECK(tiling_from_height(h) == t);
    // Boundary restriction is tiling-independent.
    CHECK(h.boundary() == b);
    // Extremal bracket and forward 1-Lipschitz increments.
    for (int i = 0; i < d->vertex_count(); ++i) {
      CHECK(mn.at(i) <= h.at(i));
      CHECK(h.at(i) <= mx.at(i));
      for (int dir = 0; dir < 3; ++dir) {
        if (!d->edge_in_complex(d->vertex(i), dir)) continue;
        const int inc = h(d->vertex(i) + kForward[dir]) - h.at(i);
        CHECK(inc >= 0);
        CHECK(inc <= 1);
      }
    }
  }
  // The central vertex has extremal gap 2.
  CHECK(mx({2, 2}) - mn({2, 2}) == 2);
}

TEST_CASE("explicit boundary values are validated") {
  const DomainPtr d = hexagon_domain(1, 1, 1);
  const BoundaryHeights forced(d, 5);
  CHECK_NOTHROW(BoundaryHeights(d, std::vector<int>(forced.values())));
  auto bad = forced.values();
  bad[2] += 1;  // breaks a {0,1} increment somewhere along the cycle
  CHECK_THROWS_AS(BoundaryHeights(d, bad), infeasible_boundary);
}

TEST_CASE("corrupted heights are rejected by tiling_from_height") {
  const DomainPtr d = hexagon_domain(1, 1, 1);
  const auto [mn, mx] = extremal_heights(BoundaryHeights(d, 0));
  HeightFunction h = mn;
  h.values()[d->index_of({1, 1})] += 5;
  CHECK_FALSE(h.is_valid());
  CHECK_THROWS_AS(tiling_from_height(h), invalid_tiling);
}

TEST_CASE("height_from_tiling rejects anchors outside the domain") {
  const DomainPtr d = hexagon_domain(1, 1, 1);
  const auto tilings = enumerate_tilings(BoundaryHeights(d, 0));
  REQUIRE(tilings.size() == 2);
  CHECK_THROWS_AS(height_from_tiling(tilings[0], {9, 9}, 0), error);
}

TEST_CASE("is_tileable distinguishes feasible from infeasible shapes") {
  CHECK(is_tileable(BoundaryHeights(hexagon_domain(2, 3, 4), 0)));
}

TEST_CASE("rescale_height divides all three coordinates by n") {
  const DomainPtr d = hexagon_domain(2, 2, 2);
  const auto [mn, mx] = extremal_heights(BoundaryHeights(d, 0));
  const auto pts = rescale_height(mx, 2);
  REQUIRE(pts.size() == static_cast<std::size_t>(d->vertex_count()));
  for (int i = 0; i < d->vertex_count(); ++i) {
    CHECK(pts[i].x == doctest::Approx(d->vertex(i).x / 2.0));
    CHECK(pts[i].y == doctest::Approx(d->vertex(i).y / 2.0));
    CHECK(pts[i].h == doctest::Approx(mx.at(i) / 2.0));
  }
}

TEST_CASE("lobachevsky matches frozen high-precision values") {
  const double pi = 3.14159265358979323846;
  CHECK(lobachevsky(0.0) == 0.0);
  CHECK(std::abs(lobachevsky(pi)) < 1e-11);
  CHECK(lobachevsky(pi / 3) == doctest::Approx(oracle::kLobPiOver3).epsilon(1e-10));
  CHECK(lobachevsky(pi / 6) == doctest::Approx(oracle::kLobPiOver6).epsilon(1e-10));
  CHECK(lobachevsky(pi / 4) == doctest::Approx(oracle::kLobPiOver4).epsilon(1e-10));
  CHECK(lobachevsky(0.3) == doctest::Approx(oracle::kLobAt03).epsilon(1e-10));
  CHECK(lobachevsky(2.5) == doctest::Approx(oracle::kLobAt25).epsilon(1e-10));
  // L(pi/6) = (3/2) L(pi/3), an exact identity of the function.
  CHECK(lobachevsky(pi / 6) == doctest::Approx(1.5 * lobachevsky(pi / 3)).epsilon(1e-11));
  CHECK_THROWS_AS(lobachevsky(-0.1), error);
  CHECK_THROWS_AS(lobachevsky(pi + 0.1), error);
}

TEST_CASE("entropy density vanishes at the simplex corners and is pinned inside") {
  CHECK(std::abs(entropy_density(0.0, 0.0)) < 1e-11);
  CHECK(std::abs(entropy_density(1.0, 0.0)) < 1e-11);
  CHECK(std::abs(entropy_density(0.0, 1.0)) < 1e-11);
  CHECK(entropy_density(1.0 / 3, 1.0 / 3) ==
        doctest::Approx(oracle::kSigmaThird).epsilon(1e-10));
  CHECK_THROWS_AS(entropy_density(-0.2, 0.3), error);
  CHECK_THROWS_AS(entropy_density(0.7, 0.7), error);
}

TEST_CASE("discrete energy: zero on single tilings, positive on the mean field") {
  const DomainPtr d = hexagon_domain(2, 2, 2);
  const BoundaryHeights b(d, 0);
  const auto tilings = enumerate_tilings(b);
  std::vector<HeightFunction> heights;
  for (const auto& t : tilings) heights.push_back(height_from_tiling(t, {0, 0}, 0));

  for (const auto& h : heights) CHECK(discrete_energy(h) == doctest::Approx(0.0));

  const double mixed = discrete_energy(mean_field(heights));
  CHECK(mixed > 0.0);
  CHECK(mixed > discrete_energy(heights.front()));
}

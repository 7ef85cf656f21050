#pragma once

#include <cstdint>
#include <vector>

#include "lgl/lattice.hpp"
#include "lgl/sampler.hpp"

namespace lgl {

// F = H - H' for two height functions on the same domain with identical
// boundary values; F vanishes on the boundary path.
struct DifferenceFunction {
  DomainPtr domain;
  std::vector<int> values;  // per vertex index

  DifferenceFunction(const HeightFunction& h, const HeightFunction& hp);
};

// Decomposition of the domain into maximal connected components of constant
// F (six-neighbour adjacency), organized as a tree: each non-root component
// has exactly one neighbour lying in the infinite connected component of the
// lattice minus itself (its parent); the root is the component containing
// the boundary path.  F changes by exactly 1 across adjacent components.
struct LevelSetForest {
  std::vector<std::vector<int>> components;  // vertex indices, sorted
  std::vector<int> component_of;             // per vertex index
  std::vector<int> value;                    // F value per component
  std::vector<int> parent;                   // per component, -1 at the root
  std::vector<int> depth;                    // tree depth, 0 at the root
  int root = -1;

  int count() const noexcept { return static_cast<int>(components.size()); }
};

// Throws lgl::error if the structural facts above fail (they cannot for an
// F built from two valid height functions).
LevelSetForest level_set_decomposition(const DifferenceFunction& f);

// Tree distance between two components / between the components containing
// two vertices (vertex indices into the domain).
int dist_g(const LevelSetForest& g, int ci, int cj);
int dist_g_vertices(const LevelSetForest& g, int u, int v);

// Slope events for a lattice-axis pair u, v = u + t*w: f1 holds when both
// height functions rise by at most delta*t from u to v, f2 when both rise by
// at least (1-delta)*t.  On f1 or f2, dist_g(u, v) <= 2*delta*t.
struct SlopeEvents {
  bool f1 = false;
  bool f2 = false;
  int t = 0;
};
SlopeEvents f1_f2_events(const HeightFunction& h, const HeightFunction& hp, TriVertex u,
                         TriVertex v, double delta);

// Exhaustive check of the conditional-variance identity on a small domain:
// over all ordered pairs (H, H') of tilings, grouped by the level-set
// partition S, the conditional variance of F(u) - F(v) equals the tree
// distance between the components of u and v -- verified in exact integer
// arithmetic as g * sum(x^2) - (sum x)^2 == dist * g^2 for every group of
// size g and every vertex pair.  Also checks that, within every group, each
// assignment of +-1 signs to the tree edges occurs equally often.
struct VarianceCheckReport {
  std::size_t tiling_count = 0;
  std::size_t pair_count = 0;     // ordered pairs of tilings
  std::size_t group_count = 0;    // distinct level-set partitions
  std::size_t checks = 0;         // (group, vertex pair) identities verified
  bool variance_exact = false;
  bool signs_uniform = false;
};
VarianceCheckReport conditional_variance_check(const BoundaryHeights& b,
                                               int max_faces = 60);

// Variance of the centre height of hexagons of the given sides, estimated
// from exact samples; reports Var[H(centre)] / N per size.
struct VariancePoint {
  int size = 0;
  std::size_t samples = 0;
  double variance = 0.0;
  double variance_over_n = 0.0;
};
std::vector<VariancePoint> variance_experiment(const std::vector<int>& sizes,
                                               std::size_t samples, Seed seed,
                                               int threads);

}  // namespace lgl

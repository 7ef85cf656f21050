#include "lgl/concentration.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <map>

#include "lgl/parallel.hpp"
#include "lgl/stats.hpp"

namespace lgl {

DifferenceFunction::DifferenceFunction(const HeightFunction& h, const HeightFunction& hp) {
  if (!(h.domain() == hp.domain()) && !(*h.domain() == *hp.domain()))
    throw error("difference of height functions on different domains");
  domain = h.domain();
  for (const auto& c : domain->boundary_cycle()) {
    const int i = domain->index_of(c);
    if (h.at(i) != hp.at(i)) throw error("height functions differ on the boundary");
  }
  values.resize(domain->vertex_count());
  for (int i = 0; i < domain->vertex_count(); ++i) values[i] = h.at(i) - hp.at(i);
}

LevelSetForest level_set_decomposition(const DifferenceFunction& f) {
  const Domain& dom = *f.domain;
  const int n = dom.vertex_count();

  LevelSetForest g;
  g.component_of.assign(n, -1);

  // Connected components of constant F under six-neighbour adjacency.
  for (int start = 0; start < n; ++start) {
    if (g.component_of[start] >= 0) continue;
    const int id = g.count();
    std::vector<int> comp;
    std::deque<int> queue{start};
    g.component_of[start] = id;
    while (!queue.empty()) {
      const int i = queue.front();
      queue.pop_front();
      comp.push_back(i);
      for (const auto& d : kNeighbor) {
        const int j = dom.index_of(dom.vertex(i) + d);
        if (j < 0 || g.component_of[j] >= 0 || f.values[j] != f.values[i]) continue;
        g.component_of[j] = id;
        queue.push_back(j);
      }
    }
    std::sort(comp.begin(), comp.end());
    g.components.push_back(std::move(comp));
    g.value.push_back(f.values[start]);
  }

  // Canonical order: by smallest vertex index.  (Vertices are scanned in
  // index order above, so components are already in that order.)

  // Adjacency between components; F must change by exactly 1 across it.
  const int m = g.count();
  std::vector<std::vector<int>> adjacent(m);
  for (int i = 0; i < n; ++i) {
    for (const auto& d : kNeighbor) {
      const int j = dom.index_of(dom.vertex(i) + d);
      if (j < 0) continue;
      const int ci = g.component_of[i], cj = g.component_of[j];
      if (ci == cj) continue;
      if (std::abs(g.value[ci] - g.value[cj]) != 1)
        throw error("adjacent level-set components differ by more than 1");
      adjacent[ci].push_back(cj);
    }
  }
  for (auto& a : adjacent) {
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
  }

  g.root = g.component_of[dom.index_of(dom.boundary_cycle().front())];

  // Parent = the unique adjacent component contained in the infinite
  // connected component of the lattice minus this one.  Flood fill over the
  // bounding box padded by one ring; any escape route crosses the ring.
  const int bx0 = dom.grid_x0() - 1, by0 = dom.grid_y0() - 1;
  const int bw = dom.grid_width() + 2, bh = dom.grid_height() + 2;
  auto cell = [&](TriVertex v) { return (v.y - by0) * bw + (v.x - bx0); };
  auto in_box = [&](TriVertex v) {
    return v.x >= bx0 && v.x < bx0 + bw && v.y >= by0 && v.y < by0 + bh;
  };

  g.parent.assign(m, -1);
  std::vector<std::uint8_t> blocked(static_cast<std::size_t>(bw) * bh);
  std::vector<std::uint8_t> seen(static_cast<std::size_t>(bw) * bh);
  for (int ci = 0; ci < m; ++ci) {
    std::fill(blocked.begin(), blocked.end(), 0);
    std::fill(seen.begin(), seen.end(), 0);
    for (const int i : g.components[ci]) blocked[cell(dom.vertex(i))] = 1;

    std::deque<TriVertex> queue{{bx0, by0}};
    seen[0] = 1;
    while (!queue.empty()) {
      const TriVertex v = queue.front();
      queue.pop_front();
      for (const auto& d : kNeighbor) {
        const TriVertex w = v + d;
        if (!in_box(w)) continue;
        const int c = cell(w);
        if (seen[c] || blocked[c]) continue;
        seen[c] = 1;
        queue.push_back(w);
      }
    }

    int exterior_parent = -1;
    for (const int cj : adjacent[ci]) {
      if (!seen[cell(dom.vertex(g.components[cj][0]))]) continue;  // interior to ci
      if (exterior_parent >= 0)
        throw error("component has more than one exterior-adjacent neighbour");
      exterior_parent = cj;
    }
    if (ci == g.root) {
      if (exterior_parent >= 0)
        throw error("the boundary component has an exterior-adjacent neighbour");
    } else if (exterior_parent < 0) {
      throw error("component has no exterior-adjacent neighbour");
    }
    g.parent[ci] = exterior_parent;
  }

  // Depths; also validates that parents form a tree rooted at the boundary.
  g.depth.assign(m, -1);
  g.depth[g.root] = 0;
  for (int ci = 0; ci < m; ++ci) {
    // Walk to the root, then assign on the way back.
    std::vector<int> path;
    int c = ci;
    while (g.depth[c] < 0) {
      path.push_back(c);
      c = g.parent[c];
      if (c < 0 || static_cast<int>(path.size()) > m)
        throw error("level-set components do not form a tree");
    }
    for (auto it = path.rbegin(); it != path.rend(); ++it) {
      g.depth[*it] = g.depth[c] + 1;
      c = *it;
    }
  }
  return g;
}

int dist_g(const LevelSetForest& g, int ci, int cj) {
  int a = ci, b = cj, d = 0;
  while (g.depth[a] > g.depth[b]) {
    a = g.parent[a];
    ++d;
  }
  while (g.depth[b] > g.depth[a]) {
    b = g.parent[b];
    ++d;
  }
  while (a != b) {
    a = g.parent[a];
    b = g.parent[b];
    d += 2;
  }
  return d;
}

int dist_g_vertices(const LevelSetForest& g, int u, int v) {
  return dist_g(g, g.component_of[u], g.component_of[v]);
}

SlopeEvents f1_f2_events(const HeightFunction& h, const HeightFunction& hp, TriVertex u,
                         TriVertex v, double delta) {
  TriVertex d = v - u;
  if (d.x < 0 || (d.x == 0 && d.y < 0)) {
    std::swap(u, v);
    d = v - u;
  }
  int t;
  if (d.x == 0 && d.y == 0) {
    t = 0;
  } else if (d.y == 0) {
    t = d.x;
  } else if (d.x == 0) {
    t = d.y;
  } else if (d.x == d.y) {
    t = d.x;
  } else {
    throw error("vertices are not aligned with a lattice axis");
  }
  SlopeEvents e;
  e.t = t;
  const int dh = h(v) - h(u);
  const int dhp = hp(v) - hp(u);
  e.f1 = dh <= delta * t && dhp <= delta * t;
  e.f2 = dh >= (1.0 - delta) * t && dhp >= (1.0 - delta) * t;
  return e;
}

VarianceCheckReport conditional_variance_check(const BoundaryHeights& b, int max_faces) {
  const DomainPtr& dom = b.domain();
  const auto tilings = enumerate_tilings(b, max_faces);
  const TriVertex anchor = dom->boundary_cycle().front();
  const int anchor_value = b.at_cycle(0);

  std::vector<HeightFunction> heights;
  heights.reserve(tilings.size());
  for (const auto& t : tilings) heights.push_back(height_from_tiling(t, anchor, anchor_value));

  // Group the ordered pairs (H, H') by the level-set partition of F = H - H'.
  struct Group {
    LevelSetForest forest;                      // from the first member
    std::vector<std::vector<int>> member_values;  // F per component, per member
  };
  std::map<std::vector<std::vector<int>>, Group> groups;

  VarianceCheckReport report;
  report.tiling_count = tilings.size();
  for (std::size_t i = 0; i < heights.size(); ++i) {
    for (std::size_t j = 0; j < heights.size(); ++j) {
      const DifferenceFunction f(heights[i], heights[j]);
      LevelSetForest forest = level_set_decomposition(f);
      auto [it, inserted] = groups.try_emplace(forest.components);
      if (inserted) it->second.forest = std::move(forest);
      it->second.member_values.push_back(inserted ? it->second.forest.value
                                                  : forest.value);
      ++report.pair_count;
    }
  }
  report.group_count = groups.size();
  report.variance_exact = true;
  report.signs_uniform = true;

  for (const auto& [key, group] : groups) {
    const LevelSetForest& forest = group.forest;
    const long long g = static_cast<long long>(group.member_values.size());
    const int m = forest.count();

    // Var[F(u) - F(v) | partition] == dist_g(u, v), exactly:
    // g * sum(x^2) - (sum x)^2 == dist * g^2 for x = F(cu) - F(cv).
    for (int cu = 0; cu < m; ++cu) {
      for (int cv = cu + 1; cv < m; ++cv) {
        long long sum = 0, sum_sq = 0;
        for (const auto& vals : group.member_values) {
          const long long x = vals[cu] - vals[cv];
          sum += x;
          sum_sq += x * x;
        }
        const long long dist = dist_g(forest, cu, cv);
        if (g * sum_sq - sum * sum != dist * g * g) report.variance_exact = false;
        ++report.checks;
      }
    }

    // Conditioned on the partition, the tree-edge signs F(child) - F(parent)
    // are iid uniform on {-1, +1}: every sign pattern occurs equally often.
    std::map<std::vector<int>, long long> pattern_counts;
    for (const auto& vals : group.member_values) {
      std::vector<int> pattern;
      pattern.reserve(m - 1);
      for (int c = 0; c < m; ++c)
        if (c != forest.root) pattern.push_back(vals[c] - vals[forest.parent[c]]);
      ++pattern_counts[pattern];
    }
    const long long expected_patterns = 1LL << (m - 1);
    if (static_cast<long long>(pattern_counts.size()) != expected_patterns)
      report.signs_uniform = false;
    for (const auto& [pattern, cnt] : pattern_counts)
      if (cnt * expected_patterns != g) report.signs_uniform = false;
  }
  return report;
}

std::vector<VariancePoint> variance_experiment(const std::vector<int>& sizes,
                                               std::size_t samples, Seed seed,
                                               int threads) {
  std::vector<VariancePoint> out;
  for (const int n : sizes) {
    const DomainPtr dom = hexagon_domain(n, n, n);
    const BoundaryHeights b(dom, 0);
    const GlauberEngine engine(b);
    const int centre = dom->index_of({n, n});

    std::vector<double> values(samples);
    parallel_for(samples, threads, [&](std::size_t i) {
      const std::uint64_t stream = (static_cast<std::uint64_t>(n) << 32) | i;
      values[i] = sample_cftp(engine, seed, stream).at(centre);
    });
    const MeanVar mv = mean_variance(values);
    out.push_back({n, samples, mv.variance, mv.variance / n});
  }
  return out;
}

}  // namespace lgl

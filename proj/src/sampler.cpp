#include "lgl/sampler.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

namespace lgl {

Flip flippable(const HeightFunction& h, TriVertex v) {
  const DomainPtr& dom = h.domain();
  const int idx = dom->index_of(v);
  if (idx < 0) throw error("vertex is not in the domain");
  if (dom->on_boundary(idx)) return Flip::none;

  int lo = std::numeric_limits<int>::min();
  int hi = std::numeric_limits<int>::max();
  for (int dir = 0; dir < 3; ++dir) {
    if (dom->edge_in_complex(v, dir)) {
      const int hw = h.at(dom->index_of(v + kForward[dir]));
      hi = std::min(hi, hw);
      lo = std::max(lo, hw - 1);
    }
    const TriVertex u = v - kForward[dir];
    if (dom->edge_in_complex(u, dir)) {
      const int hu = h.at(dom->index_of(u));
      hi = std::min(hi, hu + 1);
      lo = std::max(lo, hu);
    }
  }
  const int cur = h.at(idx);
  const bool can_up = hi > cur;
  const bool can_down = lo < cur;
  if (can_up && can_down) return Flip::both;
  if (can_up) return Flip::up;
  if (can_down) return Flip::down;
  return Flip::none;
}

std::vector<Tiling> enumerate_tilings(const BoundaryHeights& b, int max_faces) {
  const DomainPtr& dom = b.domain();
  if (static_cast<int>(dom->faces().size()) > max_faces)
    throw error("enumeration refused: " + std::to_string(dom->faces().size()) +
                " faces exceeds the cap of " + std::to_string(max_faces));

  const auto [lo_h, hi_h] = extremal_heights(b);
  const int n = dom->vertex_count();

  // Assign heights in increasing (x+y, x) order so that all three backward
  // neighbours of a vertex are already fixed when it is reached.
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int i, int j) {
    const TriVertex a = dom->vertex(i), c = dom->vertex(j);
    return std::tuple(a.x + a.y, a.x) < std::tuple(c.x + c.y, c.x);
  });

  std::vector<int> h(n, 0);
  std::vector<Tiling> out;

  auto dfs = [&](auto&& self, int pos) -> void {
    if (pos == n) {
      HeightFunction hf(dom, h);
      try {
        out.push_back(tiling_from_height(hf));
      } catch (const invalid_tiling&) {
        // A valid height function whose face pairing leaves the domain is
        // not a tiling; skip it.
      }
      return;
    }
    const int i = order[pos];
    const TriVertex v = dom->vertex(i);
    int lo = lo_h.at(i), hi = hi_h.at(i);
    for (int dir = 0; dir < 3; ++dir) {
      const TriVertex u = v - kForward[dir];
      if (!dom->edge_in_complex(u, dir)) continue;
      const int hu = h[dom->index_of(u)];
      lo = std::max(lo, hu);
      hi = std::min(hi, hu + 1);
    }
    for (int val = lo; val <= hi; ++val) {
      h[i] = val;
      self(self, pos + 1);
    }
  };
  dfs(dfs, 0);
  return out;
}

GlauberEngine::GlauberEngine(const BoundaryHeights& b) {
  dom_ = b.domain();
  const auto [lo, hi] = extremal_heights(b);

  const std::size_t cells = static_cast<std::size_t>(dom_->grid_width()) * dom_->grid_height();
  min_grid_.assign(cells, 0);
  max_grid_.assign(cells, 0);
  for (int i = 0; i < dom_->vertex_count(); ++i) {
    const int cell = dom_->grid_cell(dom_->vertex(i));
    min_grid_[cell] = lo.at(i);
    max_grid_[cell] = hi.at(i);
  }

  const int gw = dom_->grid_width();
  for (const int i : dom_->flip_sites())
    sites_.push_back(SiteInfo{dom_->grid_cell(dom_->vertex(i)), {1, gw, gw + 1}});
  if (sites_.empty() && lo.values() != hi.values())
    throw sampling_error("domain has no flip sites but more than one tiling");
  // Vertices the dynamics can never touch must already be determined.
  for (int i = 0; i < dom_->vertex_count(); ++i)
    if (!dom_->is_flip_site(i) && !dom_->on_boundary(i) && lo.at(i) != hi.at(i))
      throw sampling_error("single-site dynamics cannot reach vertex (" +
                           std::to_string(dom_->vertex(i).x) + "," +
                           std::to_string(dom_->vertex(i).y) + ")");
}

HeightFunction GlauberEngine::to_height(const std::vector<int>& grid) const {
  std::vector<int> h(dom_->vertex_count());
  for (int i = 0; i < dom_->vertex_count(); ++i)
    h[i] = grid[dom_->grid_cell(dom_->vertex(i))];
  return HeightFunction(dom_, std::move(h));
}

std::vector<int> GlauberEngine::to_grid(const HeightFunction& h) const {
  std::vector<int> grid(min_grid_.size(), 0);
  for (int i = 0; i < dom_->vertex_count(); ++i)
    grid[dom_->grid_cell(dom_->vertex(i))] = h.at(i);
  return grid;
}

void glauber_run(const GlauberEngine& engine, ChainState& state, std::uint64_t proposals) {
  std::vector<int> grid = engine.to_grid(state.heights);
  for (std::uint64_t k = 0; k < proposals; ++k)
    engine.apply_keyed(grid, state.seed, state.stream, ++state.proposals_done);
  state.heights = engine.to_height(grid);
}

HeightFunction sample_mcmc(const GlauberEngine& engine, Seed seed, std::uint64_t stream,
                           std::uint64_t sweeps) {
  ChainState state{engine.to_height(engine.min_grid()), seed, stream, 0};
  glauber_run(engine, state, sweeps * static_cast<std::uint64_t>(engine.site_count()));
  return state.heights;
}

HeightFunction sample_cftp(const GlauberEngine& engine, Seed seed, std::uint64_t stream,
                           std::uint64_t max_proposals) {
  const std::size_t nsites = static_cast<std::size_t>(engine.site_count());
  if (nsites == 0) return engine.to_height(engine.min_grid());

  std::vector<int> top, bot;
  // Horizons double until the extremal chains, driven by the same
  // time-indexed randomness, meet at time zero.  Time t counts backwards:
  // the proposal at t is always counter_hash(seed, stream, t), so extending
  // the horizon replays the same recent past.
  for (std::uint64_t horizon = 1024;; horizon *= 2) {
    top = engine.max_grid();
    bot = engine.min_grid();
    for (std::uint64_t t = horizon; t >= 1; --t) {
      const std::uint64_t r = counter_hash(seed, stream, t);
      const int site = static_cast<int>(
          (static_cast<unsigned __int128>(r >> 1) * nsites) >> 63);
      const bool up = (r & 1) != 0;
      engine.apply(top, site, up);
      engine.apply(bot, site, up);
    }
    if (top == bot) return engine.to_height(top);
    if (horizon >= max_proposals)
      throw sampling_error("coupling from the past did not coalesce within " +
                           std::to_string(horizon) + " proposals");
  }
}

Tiling sample_cftp_tiling(const BoundaryHeights& b, Seed seed, std::uint64_t max_proposals) {
  GlauberEngine engine(b);
  return tiling_from_height(sample_cftp(engine, seed, 0, max_proposals));
}

}  // namespace lgl

#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "lgl/lattice.hpp"
#include "lgl/rng.hpp"

namespace lgl {

using Seed = std::uint64_t;

struct sampling_error : error {
  using error::error;
};

// Whether the height at a vertex can move while staying valid.  Vertices on
// the boundary path are fixed and report `none`.
enum class Flip : std::uint8_t { none, up, down, both };

Flip flippable(const HeightFunction& h, TriVertex v);

// Exhaustive enumeration of all tilings of the domain with the given boundary
// heights, by depth-first extension of the height function in diagonal vertex
// order.  Refuses domains with more than `max_faces` faces.
std::vector<Tiling> enumerate_tilings(const BoundaryHeights& b, int max_faces = 60);

// Precomputed single-site Glauber dynamics on flat height grids.  One engine
// per (domain, boundary data) pair; all sampling routines below share it.
//
// A proposal picks a uniform flip site and a fair coin; heads moves the site
// to the highest value its six neighbours allow, tails to the lowest.  The
// two always differ by at most one, so this is the standard +-1 single-site
// update, and it is monotone with respect to the pointwise order.
class GlauberEngine {
 public:
  explicit GlauberEngine(const BoundaryHeights& b);

  const DomainPtr& domain() const noexcept { return dom_; }
  int site_count() const noexcept { return static_cast<int>(sites_.size()); }

  // Height values indexed by grid cell (see Domain::grid_cell).
  const std::vector<int>& min_grid() const noexcept { return min_grid_; }
  const std::vector<int>& max_grid() const noexcept { return max_grid_; }

  void apply(std::vector<int>& grid, int site, bool up) const noexcept {
    const SiteInfo& s = sites_[site];
    int* h = grid.data();
    if (up) {
      int hi = h[s.cell + s.fwd[0]];
      hi = std::min(hi, h[s.cell + s.fwd[1]]);
      hi = std::min(hi, h[s.cell + s.fwd[2]]);
      hi = std::min(hi, h[s.cell - s.fwd[0]] + 1);
      hi = std::min(hi, h[s.cell - s.fwd[1]] + 1);
      hi = std::min(hi, h[s.cell - s.fwd[2]] + 1);
      h[s.cell] = hi;
    } else {
      int lo = h[s.cell + s.fwd[0]] - 1;
      lo = std::max(lo, h[s.cell + s.fwd[1]] - 1);
      lo = std::max(lo, h[s.cell + s.fwd[2]] - 1);
      lo = std::max(lo, h[s.cell - s.fwd[0]]);
      lo = std::max(lo, h[s.cell - s.fwd[1]]);
      lo = std::max(lo, h[s.cell - s.fwd[2]]);
      h[s.cell] = lo;
    }
  }

  // Applies the proposal determined by counter_hash(seed, stream, t) -- the
  // shared-randomness rule used by both the forward chain and coupling from
  // the past.
  void apply_keyed(std::vector<int>& grid, Seed seed, std::uint64_t stream,
                   std::uint64_t t) const noexcept {
    const std::uint64_t r = counter_hash(seed, stream, t);
    const int site = static_cast<int>(
        (static_cast<unsigned __int128>(r >> 1) * sites_.size()) >> 63);
    apply(grid, site, (r & 1) != 0);
  }

  HeightFunction to_height(const std::vector<int>& grid) const;
  std::vector<int> to_grid(const HeightFunction& h) const;

 private:
  struct SiteInfo {
    int cell;
    int fwd[3];  // grid-cell offsets of the three forward directions
  };
  DomainPtr dom_;
  std::vector<SiteInfo> sites_;
  std::vector<int> min_grid_, max_grid_;
};

// State of a forward Glauber chain.
struct ChainState {
  HeightFunction heights;
  Seed seed = 0;
  std::uint64_t stream = 0;
  std::uint64_t proposals_done = 0;
};

// Advances the chain by `proposals` single-site proposals.
void glauber_run(const GlauberEngine& engine, ChainState& state, std::uint64_t proposals);

// One proposal.
inline void glauber_step(const GlauberEngine& engine, ChainState& state) {
  glauber_run(engine, state, 1);
}

// Approximate sampling: `sweeps` passes of one proposal per flip site,
// started from the minimal height function.
HeightFunction sample_mcmc(const GlauberEngine& engine, Seed seed, std::uint64_t stream,
                           std::uint64_t sweeps);

// Exact sampling by monotone coupling from the past with doubling horizons.
// Throws sampling_error if the coupled chains have not coalesced after
// `max_proposals` proposals of the largest horizon.
HeightFunction sample_cftp(const GlauberEngine& engine, Seed seed, std::uint64_t stream,
                           std::uint64_t max_proposals = 1ull << 30);

// Convenience wrappers constructing a one-shot engine.
Tiling sample_cftp_tiling(const BoundaryHeights& b, Seed seed,
                          std::uint64_t max_proposals = 1ull << 30);

}  // namespace lgl

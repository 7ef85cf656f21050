#include "lgl/lattice.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <limits>
#include <map>
#include <queue>
#include <sstream>

namespace lgl {

namespace {

constexpr int kNoVertex = -1;

// Walk increment per boundary step: only the diagonal steps change the height.
int walk_increment(Dir d) {
  switch (d) {
    case Dir::NE:
      return 1;
    case Dir::SW:
      return -1;
    default:
      return 0;
  }
}

// Even-odd point-in-polygon test on coordinates scaled by 3, so that face
// centroids (which have coordinates = integer + 1/3 or 2/3) never touch a
// polygon edge.  Exact integer arithmetic throughout.
bool centroid_inside(long long px, long long py, const std::vector<TriVertex>& cycle) {
  bool inside = false;
  const std::size_t n = cycle.size();
  for (std::size_t i = 0; i < n; ++i) {
    const long long x1 = 3LL * cycle[i].x, y1 = 3LL * cycle[i].y;
    const long long x2 = 3LL * cycle[(i + 1) % n].x, y2 = 3LL * cycle[(i + 1) % n].y;
    if ((y1 > py) == (y2 > py)) continue;
    // Ray towards +x: crossing iff the intersection abscissa exceeds px.
    const long long dy = y2 - y1;
    const long long num = x1 * dy + (py - y1) * (x2 - x1);  // = x_int * dy
    const bool crosses = dy > 0 ? (num > px * dy) : (num < px * dy);
    if (crosses) inside = !inside;
  }
  return inside;
}

}  // namespace

Domain Domain::from_boundary_path(TriVertex start, const std::vector<Dir>& steps) {
  if (steps.empty()) throw invalid_domain("boundary path has no steps");

  Domain d;
  d.steps_ = steps;
  d.cycle_.reserve(steps.size());
  TriVertex v = start;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    d.cycle_.push_back(v);
    v = v + step(steps[i]);
  }
  if (v != start) throw invalid_domain("boundary path does not close");
  {
    auto sorted = d.cycle_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw invalid_domain("boundary path revisits a vertex");
  }

  int minx = start.x, maxx = start.x, miny = start.y, maxy = start.y;
  for (const auto& c : d.cycle_) {
    minx = std::min(minx, c.x);
    maxx = std::max(maxx, c.x);
    miny = std::min(miny, c.y);
    maxy = std::max(maxy, c.y);
  }

  // Enclosed faces: centroid-in-polygon over every candidate face in the box.
  int ups = 0, downs = 0;
  for (int y = miny - 1; y <= maxy; ++y) {
    for (int x = minx - 1; x <= maxx; ++x) {
      // up centroid * 3 = (3x+2, 3y+1); down centroid * 3 = (3x+1, 3y+2)
      if (centroid_inside(3LL * x + 2, 3LL * y + 1, d.cycle_)) {
        d.faces_.push_back(Face{{x, y}, true});
        ++ups;
      }
      if (centroid_inside(3LL * x + 1, 3LL * y + 2, d.cycle_)) {
        d.faces_.push_back(Face{{x, y}, false});
        ++downs;
      }
    }
  }
  if (d.faces_.empty()) throw invalid_domain("boundary path encloses no face");
  if ((ups + downs) % 2 != 0 || ups != downs)
    throw invalid_domain("enclosed face count is unbalanced: " + std::to_string(ups) +
                         " up vs " + std::to_string(downs) + " down triangles");
  std::sort(d.faces_.begin(), d.faces_.end());

  // Vertex set: every vertex of an enclosed face, plus the path itself.
  d.vertices_.reserve(d.faces_.size() * 3);
  for (const auto& f : d.faces_)
    for (const auto& w : f.vertices()) d.vertices_.push_back(w);
  for (const auto& c : d.cycle_) d.vertices_.push_back(c);
  std::sort(d.vertices_.begin(), d.vertices_.end());
  d.vertices_.erase(std::unique(d.vertices_.begin(), d.vertices_.end()),
                    d.vertices_.end());

  d.x0_ = minx;
  d.y0_ = miny;
  d.gw_ = maxx - minx + 1;
  d.gh_ = maxy - miny + 1;
  d.grid_.assign(static_cast<std::size_t>(d.gw_) * d.gh_, kNoVertex);
  for (int i = 0; i < d.vertex_count(); ++i) d.grid_[d.grid_cell(d.vertices_[i])] = i;

  d.face_grid_.assign(static_cast<std::size_t>(d.gw_) * d.gh_, 0);
  for (const auto& f : d.faces_)
    d.face_grid_[d.grid_cell(f.corner)] |= f.up ? 1 : 2;

  // Forward-edge membership: an edge is in the complex iff it bounds an
  // enclosed face.  Edge (v, v+(1,0)): faces up(v) and down(v-(0,1)+...)
  // -- enumerate per face instead.
  d.edge_mask_.assign(d.vertices_.size(), 0);
  auto mark_edge = [&d](TriVertex a, int dir) {
    const int i = d.index_of(a);
    d.edge_mask_[i] |= static_cast<std::uint8_t>(1u << dir);
  };
  for (const auto& f : d.faces_) {
    const TriVertex c = f.corner;
    if (f.up) {
      mark_edge(c, 0);                      // c -> c+(1,0)
      mark_edge(c + TriVertex{1, 0}, 1);    // c+(1,0) -> c+(1,1)
      mark_edge(c, 2);                      // c -> c+(1,1)
    } else {
      mark_edge(c, 1);                      // c -> c+(0,1)
      mark_edge(c + TriVertex{0, 1}, 0);    // c+(0,1) -> c+(1,1)
      mark_edge(c, 2);                      // c -> c+(1,1)
    }
  }

  d.on_boundary_.assign(d.vertices_.size(), 0);
  for (const auto& c : d.cycle_) d.on_boundary_[d.index_of(c)] = 1;

  // Flip sites: all six incident faces enclosed.  Faces around v:
  // up(v), down(v), up(v-(1,0)), down(v-(0,1)), up(v-(1,1)), down(v-(1,1)).
  d.flip_site_.assign(d.vertices_.size(), 0);
  for (int i = 0; i < d.vertex_count(); ++i) {
    const TriVertex w = d.vertices_[i];
    const bool full = d.has_face({w, true}) && d.has_face({w, false}) &&
                      d.has_face({w - TriVertex{1, 0}, true}) &&
                      d.has_face({w - TriVertex{0, 1}, false}) &&
                      d.has_face({w - TriVertex{1, 1}, true}) &&
                      d.has_face({w - TriVertex{1, 1}, false});
    if (full) {
      d.flip_site_[i] = 1;
      d.flip_sites_.push_back(i);
    }
  }
  return d;
}

int Domain::index_of(TriVertex v) const noexcept {
  if (v.x < x0_ || v.x >= x0_ + gw_ || v.y < y0_ || v.y >= y0_ + gh_) return kNoVertex;
  return grid_[grid_cell(v)];
}

bool Domain::has_face(const Face& f) const noexcept {
  const TriVertex c = f.corner;
  if (c.x < x0_ || c.x >= x0_ + gw_ || c.y < y0_ || c.y >= y0_ + gh_) return false;
  return (face_grid_[grid_cell(c)] & (f.up ? 1 : 2)) != 0;
}

bool Domain::edge_in_complex(TriVertex v, int dir) const noexcept {
  const int i = index_of(v);
  if (i < 0) return false;
  return (edge_mask_[i] & (1u << dir)) != 0;
}

DomainPtr hexagon_domain(int a, int b, int c) {
  if (a < 1 || b < 1 || c < 1) throw invalid_domain("hexagon sides must be positive");
  std::vector<Dir> steps;
  steps.insert(steps.end(), a, Dir::R);
  steps.insert(steps.end(), b, Dir::NE);
  steps.insert(steps.end(), c, Dir::U);
  steps.insert(steps.end(), a, Dir::L);
  steps.insert(steps.end(), b, Dir::SW);
  steps.insert(steps.end(), c, Dir::D);
  return std::make_shared<Domain>(Domain::from_boundary_path({0, 0}, steps));
}

DomainPtr build_domain(const std::vector<TriVertex>& boundary_path) {
  if (boundary_path.size() < 3) throw invalid_domain("boundary path has too few vertices");
  std::vector<Dir> steps;
  steps.reserve(boundary_path.size());
  for (std::size_t i = 0; i < boundary_path.size(); ++i) {
    const TriVertex from = boundary_path[i];
    const TriVertex to = boundary_path[(i + 1) % boundary_path.size()];
    const TriVertex d = to - from;
    int dir = -1;
    for (int k = 0; k < 6; ++k)
      if (kDirStep[k] == d) dir = k;
    if (dir < 0) throw invalid_domain("consecutive boundary vertices are not neighbours");
    steps.push_back(static_cast<Dir>(dir));
  }
  return std::make_shared<Domain>(Domain::from_boundary_path(boundary_path.front(), steps));
}

BoundaryHeights::BoundaryHeights(DomainPtr dom, int m) : dom_(std::move(dom)) {
  const auto& steps = dom_->boundary_steps();
  values_.reserve(steps.size());
  int h = m;
  for (const Dir d : steps) {
    values_.push_back(h);
    h += walk_increment(d);
  }
  if (h != m)
    throw infeasible_boundary("boundary walk height does not close (net change " +
                              std::to_string(h - m) + ")");
}

BoundaryHeights::BoundaryHeights(DomainPtr dom, std::vector<int> values)
    : dom_(std::move(dom)), values_(std::move(values)) {
  const auto& cyc = dom_->boundary_cycle();
  const auto& steps = dom_->boundary_steps();
  if (values_.size() != cyc.size())
    throw infeasible_boundary("boundary height count does not match path length");
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const int next = values_[(i + 1) % values_.size()];
    // Increment along the forward orientation of the traversed edge.
    int inc;
    switch (steps[i]) {
      case Dir::R:
      case Dir::U:
      case Dir::NE:
        inc = next - values_[i];
        break;
      default:
        inc = values_[i] - next;
        break;
    }
    if (inc != 0 && inc != 1)
      throw infeasible_boundary("boundary heights violate the {0,1} increment rule at (" +
                                std::to_string(cyc[i].x) + "," + std::to_string(cyc[i].y) +
                                ")");
  }
}

int BoundaryHeights::operator()(TriVertex v) const {
  const auto& cyc = dom_->boundary_cycle();
  for (std::size_t i = 0; i < cyc.size(); ++i)
    if (cyc[i] == v) return values_[i];
  throw error("vertex is not on the boundary path");
}

int HeightFunction::operator()(TriVertex v) const {
  const int i = dom_->index_of(v);
  if (i < 0) throw error("vertex is not in the domain");
  return values_[i];
}

bool HeightFunction::is_valid() const {
  for (int i = 0; i < dom_->vertex_count(); ++i) {
    const TriVertex v = dom_->vertex(i);
    for (int dir = 0; dir < 3; ++dir) {
      if (!dom_->edge_in_complex(v, dir)) continue;
      const int j = dom_->index_of(v + kForward[dir]);
      const int inc = values_[j] - values_[i];
      if (inc != 0 && inc != 1) return false;
    }
  }
  return true;
}

BoundaryHeights HeightFunction::boundary() const {
  std::vector<int> vals;
  vals.reserve(dom_->boundary_cycle().size());
  for (const auto& c : dom_->boundary_cycle()) vals.push_back(values_[dom_->index_of(c)]);
  return BoundaryHeights(dom_, std::move(vals));
}

Tiling::Tiling(DomainPtr dom, std::vector<Lozenge> lozenges)
    : dom_(std::move(dom)), lozenges_(std::move(lozenges)) {
  std::sort(lozenges_.begin(), lozenges_.end());
  if (std::adjacent_find(lozenges_.begin(), lozenges_.end()) != lozenges_.end())
    throw invalid_tiling("duplicate lozenge");
  if (2 * lozenges_.size() != dom_->faces().size())
    throw invalid_tiling("lozenge count does not match face count");
  std::vector<Face> covered;
  covered.reserve(dom_->faces().size());
  for (const auto& l : lozenges_)
    for (const auto& f : l.faces()) {
      if (!dom_->has_face(f))
        throw invalid_tiling("lozenge face outside the domain at (" +
                             std::to_string(f.corner.x) + "," + std::to_string(f.corner.y) +
                             ")");
      covered.push_back(f);
    }
  std::sort(covered.begin(), covered.end());
  if (std::adjacent_find(covered.begin(), covered.end()) != covered.end())
    throw invalid_tiling("overlapping lozenges");
  // covered is now a permutation-free list of |faces| distinct domain faces,
  // hence equals the face list.
}

HeightFunction height_from_tiling(const Tiling& t, TriVertex anchor, int m) {
  const DomainPtr& dom = t.domain();
  const int ai = dom->index_of(anchor);
  if (ai < 0) throw error("anchor vertex is not in the domain");

  // Interior-edge flags per grid cell: bit d set iff the forward edge of
  // direction d based at that cell is the interior edge of a lozenge.
  std::vector<std::uint8_t> interior(
      static_cast<std::size_t>(dom->grid_width()) * dom->grid_height(), 0);
  for (const auto& l : t.lozenges()) {
    const auto [base, dir] = l.interior_edge();
    interior[dom->grid_cell(base)] |= static_cast<std::uint8_t>(1u << dir);
  }

  constexpr int kUnset = std::numeric_limits<int>::min();
  std::vector<int> h(dom->vertex_count(), kUnset);
  h[ai] = m;
  std::deque<int> queue{ai};
  while (!queue.empty()) {
    const int i = queue.front();
    queue.pop_front();
    const TriVertex v = dom->vertex(i);
    for (int dir = 0; dir < 3; ++dir) {
      // Forward edge v -> v+delta and backward edge v-delta -> v.
      for (int sgn : {+1, -1}) {
        const TriVertex base = sgn > 0 ? v : v - kForward[dir];
        if (!dom->edge_in_complex(base, dir)) continue;
        const TriVertex w = sgn > 0 ? v + kForward[dir] : v - kForward[dir];
        const int j = dom->index_of(w);
        const bool is_interior = (interior[dom->grid_cell(base)] & (1u << dir)) != 0;
        // Non-diagonal edges rise iff interior to a lozenge; diagonal edges
        // rise iff they are not.
        const int inc = (dir == 2) ? (is_interior ? 0 : 1) : (is_interior ? 1 : 0);
        const int hw = h[i] + sgn * inc;
        if (h[j] == kUnset) {
          h[j] = hw;
          queue.push_back(j);
        } else if (h[j] != hw) {
          throw invalid_tiling("inconsistent edge increments");
        }
      }
    }
  }
  for (const int x : h)
    if (x == kUnset) throw invalid_tiling("face complex is disconnected");
  return HeightFunction(dom, std::move(h));
}

namespace {

// Lozenge inferred from the increment pattern of a single face, together with
// the partner face it requires.  a = increment along (1,0), b along (0,1).
struct FaceReading {
  Lozenge loz;
  Face partner;
};

FaceReading read_up_face(TriVertex c, int a, int b) {
  if (a == 1 && b == 0)
    return {{LozengeType::e10, c - TriVertex{0, 1}}, Face{c - TriVertex{0, 1}, false}};
  if (a == 0 && b == 1)
    return {{LozengeType::e01, c}, Face{c + TriVertex{1, 0}, false}};
  if (a == 0 && b == 0) return {{LozengeType::e11, c}, Face{c, false}};
  throw invalid_tiling("face increment pattern (" + std::to_string(a) + "," +
                       std::to_string(b) + ") at (" + std::to_string(c.x) + "," +
                       std::to_string(c.y) + ") matches no lozenge");
}

FaceReading read_down_face(TriVertex c, int a, int b) {
  if (a == 1 && b == 0) return {{LozengeType::e10, c}, Face{c + TriVertex{0, 1}, true}};
  if (a == 0 && b == 1)
    return {{LozengeType::e01, c - TriVertex{1, 0}}, Face{c - TriVertex{1, 0}, true}};
  if (a == 0 && b == 0) return {{LozengeType::e11, c}, Face{c, true}};
  throw invalid_tiling("face increment pattern (" + std::to_string(a) + "," +
                       std::to_string(b) + ") at (" + std::to_string(c.x) + "," +
                       std::to_string(c.y) + ") matches no lozenge");
}

}  // namespace

Tiling tiling_from_height(const HeightFunction& h) {
  const DomainPtr& dom = h.domain();
  auto at = [&](TriVertex v) { return h.at(dom->index_of(v)); };

  std::vector<Lozenge> from_up, from_down;
  for (const auto& f : dom->faces()) {
    const TriVertex c = f.corner;
    FaceReading r = f.up ? read_up_face(c, at(c + TriVertex{1, 0}) - at(c),
                                        at(c + TriVertex{1, 1}) - at(c + TriVertex{1, 0}))
                         : read_down_face(c, at(c + TriVertex{1, 1}) - at(c + TriVertex{0, 1}),
                                          at(c + TriVertex{0, 1}) - at(c));
    if (!dom->has_face(r.partner))
      throw invalid_tiling("lozenge at (" + std::to_string(c.x) + "," +
                           std::to_string(c.y) + ") sticks out of the domain");
    (f.up ? from_up : from_down).push_back(r.loz);
  }
  std::sort(from_up.begin(), from_up.end());
  std::sort(from_down.begin(), from_down.end());
  if (from_up != from_down)
    throw invalid_tiling("face pairings disagree between up and down triangles");
  return Tiling(dom, std::move(from_up));
}

namespace {

// Multi-source Dijkstra over the 0/1-weighted constraint arcs.  If
// `reversed`, every arc direction is flipped.  Initial keys are `init` on
// boundary-path vertices.
std::vector<long long> constraint_dijkstra(const Domain& dom,
                                           const std::vector<long long>& init,
                                           bool reversed) {
  constexpr long long kInf = std::numeric_limits<long long>::max() / 4;
  std::vector<long long> dist(dom.vertex_count(), kInf);
  using Item = std::pair<long long, int>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
  const auto& cyc = dom.boundary_cycle();
  for (std::size_t i = 0; i < cyc.size(); ++i) {
    const int vi = dom.index_of(cyc[i]);
    if (init[i] < dist[vi]) {
      dist[vi] = init[i];
      pq.emplace(init[i], vi);
    }
  }
  while (!pq.empty()) {
    const auto [dv, i] = pq.top();
    pq.pop();
    if (dv != dist[i]) continue;
    const TriVertex v = dom.vertex(i);
    for (int dir = 0; dir < 3; ++dir) {
      for (int sgn : {+1, -1}) {
        const TriVertex base = sgn > 0 ? v : v - kForward[dir];
        if (!dom.edge_in_complex(base, dir)) continue;
        const TriVertex w = sgn > 0 ? v + kForward[dir] : v - kForward[dir];
        // Constraint H(v+delta) <= H(v) + 1 gives a forward arc of weight 1
        // and a backward arc of weight 0.
        const int weight = (sgn > 0) != reversed ? 1 : 0;
        const int j = dom.index_of(w);
        if (dv + weight < dist[j]) {
          dist[j] = dv + weight;
          pq.emplace(dist[j], j);
        }
      }
    }
  }
  return dist;
}

}  // namespace

std::pair<HeightFunction, HeightFunction> extremal_heights(const BoundaryHeights& b) {
  const DomainPtr& dom = b.domain();
  const auto& cyc = dom->boundary_cycle();
  const std::size_t n = cyc.size();

  std::vector<long long> init(n);
  for (std::size_t i = 0; i < n; ++i) init[i] = b.at_cycle(i);
  const auto dmax = constraint_dijkstra(*dom, init, false);
  for (std::size_t i = 0; i < n; ++i)
    if (dmax[dom->index_of(cyc[i])] != b.at_cycle(i))
      throw infeasible_boundary("boundary heights admit no extension at (" +
                                std::to_string(cyc[i].x) + "," +
                                std::to_string(cyc[i].y) + ")");

  for (std::size_t i = 0; i < n; ++i) init[i] = -b.at_cycle(i);
  const auto dmin = constraint_dijkstra(*dom, init, true);
  for (std::size_t i = 0; i < n; ++i)
    if (-dmin[dom->index_of(cyc[i])] != b.at_cycle(i))
      throw infeasible_boundary("boundary heights admit no extension at (" +
                                std::to_string(cyc[i].x) + "," +
                                std::to_string(cyc[i].y) + ")");

  std::vector<int> lo(dom->vertex_count()), hi(dom->vertex_count());
  for (int i = 0; i < dom->vertex_count(); ++i) {
    lo[i] = static_cast<int>(-dmin[i]);
    hi[i] = static_cast<int>(dmax[i]);
  }
  return {HeightFunction(dom, std::move(lo)), HeightFunction(dom, std::move(hi))};
}

bool is_tileable(const BoundaryHeights& b) {
  try {
    const auto [lo, hi] = extremal_heights(b);
    tiling_from_height(lo);
    tiling_from_height(hi);
    return true;
  } catch (const error&) {
    return false;
  }
}

std::vector<RescaledPoint> rescale_height(const HeightFunction& h, int n) {
  if (n <= 0) throw error("rescaling factor must be positive");
  std::vector<RescaledPoint> out;
  out.reserve(h.domain()->vertex_count());
  const double inv = 1.0 / n;
  for (int i = 0; i < h.domain()->vertex_count(); ++i) {
    const TriVertex v = h.domain()->vertex(i);
    out.push_back({v.x * inv, v.y * inv, h.at(i) * inv});
  }
  return out;
}

std::string domain_to_text(const Domain& d) {
  static constexpr const char* kName[6] = {"R", "NE", "U", "L", "SW", "D"};
  std::ostringstream os;
  os << "DOMAIN v1\n"
     << d.boundary_cycle().front().x << ' ' << d.boundary_cycle().front().y << '\n';
  for (const Dir s : d.boundary_steps()) os << kName[static_cast<int>(s)];
  os << '\n';
  return os.str();
}

DomainPtr domain_from_text(const std::string& text) {
  std::istringstream is(text);
  std::string header;
  std::getline(is, header);
  while (!header.empty() && (header.back() == '\r' || header.back() == ' '))
    header.pop_back();
  if (header != "DOMAIN v1") throw invalid_domain("bad header: expected 'DOMAIN v1'");
  TriVertex start;
  if (!(is >> start.x >> start.y)) throw invalid_domain("bad start vertex");

  std::vector<Dir> steps;
  std::string chunk;
  while (is >> chunk) {
    for (std::size_t i = 0; i < chunk.size();) {
      if (chunk.compare(i, 2, "NE") == 0) {
        steps.push_back(Dir::NE);
        i += 2;
      } else if (chunk.compare(i, 2, "SW") == 0) {
        steps.push_back(Dir::SW);
        i += 2;
      } else if (chunk[i] == 'R') {
        steps.push_back(Dir::R);
        ++i;
      } else if (chunk[i] == 'L') {
        steps.push_back(Dir::L);
        ++i;
      } else if (chunk[i] == 'U') {
        steps.push_back(Dir::U);
        ++i;
      } else if (chunk[i] == 'D') {
        steps.push_back(Dir::D);
        ++i;
      } else {
        throw invalid_domain(std::string("unknown step character '") + chunk[i] + "'");
      }
    }
  }
  return std::make_shared<Domain>(Domain::from_boundary_path(start, steps));
}

}  // namespace lgl

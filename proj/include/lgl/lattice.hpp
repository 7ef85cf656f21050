#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

// Triangular lattice with axes at 120 degrees: the basis vector e_x points
// down-right in the plane, e_y points up, and e_x + e_y points up-right.
// Vertices are integer pairs; each unit rhombus (x, y) splits into an
// up-triangle {v, v+e_x, v+e_x+e_y} and a down-triangle {v, v+e_y, v+e_x+e_y}.

namespace lgl {

struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct invalid_domain : error {
  using error::error;
};
struct invalid_tiling : error {
  using error::error;
};
struct infeasible_boundary : error {
  using error::error;
};

struct TriVertex {
  int x = 0;
  int y = 0;
  friend constexpr TriVertex operator+(TriVertex a, TriVertex b) noexcept {
    return {a.x + b.x, a.y + b.y};
  }
  friend constexpr TriVertex operator-(TriVertex a, TriVertex b) noexcept {
    return {a.x - b.x, a.y - b.y};
  }
  auto operator<=>(const TriVertex&) const = default;
};

// The three forward edge directions; height increments along them lie in {0,1}.
inline constexpr std::array<TriVertex, 3> kForward = {{{1, 0}, {0, 1}, {1, 1}}};

// All six lattice neighbours.
inline constexpr std::array<TriVertex, 6> kNeighbor = {
    {{1, 0}, {0, 1}, {1, 1}, {-1, 0}, {0, -1}, {-1, -1}}};

// Boundary-path step names.  R/L/U/D move along +-e_x and +-e_y; NE/SW move
// along +-(e_x + e_y).
enum class Dir : std::uint8_t { R, NE, U, L, SW, D };

inline constexpr std::array<TriVertex, 6> kDirStep = {
    {{1, 0}, {1, 1}, {0, 1}, {-1, 0}, {-1, -1}, {0, -1}}};

constexpr TriVertex step(Dir d) noexcept { return kDirStep[static_cast<int>(d)]; }

// A unit triangular face, identified by its bottom-left corner and parity.
// up:   {c, c+(1,0), c+(1,1)}     down: {c, c+(0,1), c+(1,1)}
struct Face {
  TriVertex corner;
  bool up = true;
  std::array<TriVertex, 3> vertices() const noexcept {
    if (up) return {corner, corner + TriVertex{1, 0}, corner + TriVertex{1, 1}};
    return {corner, corner + TriVertex{0, 1}, corner + TriVertex{1, 1}};
  }
  auto operator<=>(const Face&) const = default;
};

// The three lozenge orientations, named after the direction of the interior
// edge shared by the two triangles of the lozenge:
//   e10: interior edge along (1,0); vertices {a, a+(0,1), a+(1,1), a+(1,2)}
//   e01: interior edge along (0,1); vertices {a, a+(1,0), a+(1,1), a+(2,1)}
//        (drawn horizontal in the plane embedding)
//   e11: interior edge along (1,1); vertices {a, a+(1,0), a+(0,1), a+(1,1)}
enum class LozengeType : std::uint8_t { e10, e01, e11 };

struct Lozenge {
  LozengeType type = LozengeType::e11;
  TriVertex a;  // lexicographically least vertex

  std::array<TriVertex, 4> vertices() const noexcept {
    switch (type) {
      case LozengeType::e10:
        return {a, a + TriVertex{0, 1}, a + TriVertex{1, 1}, a + TriVertex{1, 2}};
      case LozengeType::e01:
        return {a, a + TriVertex{1, 0}, a + TriVertex{1, 1}, a + TriVertex{2, 1}};
      default:
        return {a, a + TriVertex{0, 1}, a + TriVertex{1, 0}, a + TriVertex{1, 1}};
    }
  }

  // The two faces covered: {down-triangle, up-triangle}.
  std::array<Face, 2> faces() const noexcept {
    switch (type) {
      case LozengeType::e10:
        return {Face{a, false}, Face{a + TriVertex{0, 1}, true}};
      case LozengeType::e01:
        return {Face{a + TriVertex{1, 0}, false}, Face{a, true}};
      default:
        return {Face{a, false}, Face{a, true}};
    }
  }

  // Interior edge as (base vertex, forward direction index into kForward).
  std::pair<TriVertex, int> interior_edge() const noexcept {
    switch (type) {
      case LozengeType::e10:
        return {a + TriVertex{0, 1}, 0};
      case LozengeType::e01:
        return {a + TriVertex{1, 0}, 1};
      default:
        return {a, 2};
    }
  }

  auto operator<=>(const Lozenge&) const = default;
};

// A finite, simply connected union of faces described by a simple closed
// boundary path.  Stores the enclosed face list, a dense grid index over the
// bounding box, and per-vertex flags used by the dynamics.
class Domain {
 public:
  // Builds the domain enclosed by the closed path start + steps.  Throws
  // invalid_domain if the path does not close, revisits a vertex, encloses no
  // face, or encloses an odd number of faces (no tiling can exist then).
  static Domain from_boundary_path(TriVertex start, const std::vector<Dir>& steps);

  int vertex_count() const noexcept { return static_cast<int>(vertices_.size()); }
  const std::vector<TriVertex>& vertices() const noexcept { return vertices_; }
  TriVertex vertex(int idx) const noexcept { return vertices_[idx]; }

  // Index of a vertex, or -1 if it is not in the domain.
  int index_of(TriVertex v) const noexcept;
  bool contains(TriVertex v) const noexcept { return index_of(v) >= 0; }

  // Boundary path vertices in traversal order; the first equals the path start.
  const std::vector<TriVertex>& boundary_cycle() const noexcept { return cycle_; }
  const std::vector<Dir>& boundary_steps() const noexcept { return steps_; }
  bool on_boundary(int idx) const noexcept { return on_boundary_[idx] != 0; }

  const std::vector<Face>& faces() const noexcept { return faces_; }
  bool has_face(const Face& f) const noexcept;

  // True if the edge (v, v + kForward[dir]) belongs to some enclosed face.
  bool edge_in_complex(TriVertex v, int dir) const noexcept;

  // Vertices whose six incident faces are all enclosed; the single-site
  // dynamics proposes updates exactly at these.
  bool is_flip_site(int idx) const noexcept { return flip_site_[idx] != 0; }
  const std::vector<int>& flip_sites() const noexcept { return flip_sites_; }

  // Bounding-box grid (used by the samplers for flat-array heights).
  int grid_x0() const noexcept { return x0_; }
  int grid_y0() const noexcept { return y0_; }
  int grid_width() const noexcept { return gw_; }
  int grid_height() const noexcept { return gh_; }
  int grid_cell(TriVertex v) const noexcept {
    return (v.y - y0_) * gw_ + (v.x - x0_);
  }

  friend bool operator==(const Domain& a, const Domain& b) {
    return a.cycle_ == b.cycle_;
  }

 private:
  std::vector<TriVertex> vertices_;       // sorted
  std::vector<TriVertex> cycle_;          // boundary path, in order
  std::vector<Dir> steps_;
  std::vector<Face> faces_;               // sorted
  std::vector<std::uint8_t> on_boundary_; // per vertex
  std::vector<std::uint8_t> flip_site_;   // per vertex
  std::vector<int> flip_sites_;
  int x0_ = 0, y0_ = 0, gw_ = 0, gh_ = 0;
  std::vector<int> grid_;                 // grid cell -> vertex index or -1
  std::vector<std::uint8_t> edge_mask_;   // per vertex: bit d set if forward edge d in complex
  std::vector<std::uint8_t> face_grid_;   // per grid cell: bit0 = up face, bit1 = down face
};

using DomainPtr = std::shared_ptr<const Domain>;

// Convenience builder: hexagon with side lengths a (along e_x), b (along
// e_x+e_y) and c (along e_y), traversed R^a NE^b U^c L^a SW^b D^c from (0,0).
DomainPtr hexagon_domain(int a, int b, int c);

// Builds a domain from the ordered cycle of boundary vertices (first vertex
// not repeated at the end).  Consecutive vertices must be lattice neighbours;
// the enclosed region must satisfy the same conditions as
// Domain::from_boundary_path.  Throws invalid_domain otherwise.
DomainPtr build_domain(const std::vector<TriVertex>& boundary_path);

// Height values on the boundary path, determined (up to the additive anchor m)
// by the domain shape alone: walking the path, R/L/U/D steps keep the height,
// NE raises it by one and SW lowers it by one.
class BoundaryHeights {
 public:
  // Forced boundary heights with value m at the path start.
  BoundaryHeights(DomainPtr dom, int m = 0);
  // Explicit values per cycle vertex; validated against the forced increments.
  BoundaryHeights(DomainPtr dom, std::vector<int> values);

  const DomainPtr& domain() const noexcept { return dom_; }
  const std::vector<int>& values() const noexcept { return values_; }
  int at_cycle(int i) const noexcept { return values_[i]; }
  int operator()(TriVertex v) const;  // throws if v is not on the path

  friend bool operator==(const BoundaryHeights&, const BoundaryHeights&) = default;

 private:
  DomainPtr dom_;
  std::vector<int> values_;
};

// An integer height function on all domain vertices.
class HeightFunction {
 public:
  HeightFunction() = default;
  HeightFunction(DomainPtr dom, std::vector<int> values)
      : dom_(std::move(dom)), values_(std::move(values)) {}

  const DomainPtr& domain() const noexcept { return dom_; }
  const std::vector<int>& values() const noexcept { return values_; }
  std::vector<int>& values() noexcept { return values_; }
  int at(int idx) const noexcept { return values_[idx]; }
  int operator()(TriVertex v) const;

  // True if every forward edge of the face complex has increment in {0,1}.
  bool is_valid() const;

  BoundaryHeights boundary() const;

  // Value comparison: equal domains (by shape) and equal heights.
  friend bool operator==(const HeightFunction& a, const HeightFunction& b) {
    return a.values_ == b.values_ &&
           (a.dom_ == b.dom_ || (a.dom_ && b.dom_ && *a.dom_ == *b.dom_));
  }

 private:
  DomainPtr dom_;
  std::vector<int> values_;
};

// A lozenge tiling: a partition of the enclosed faces into lozenges.
class Tiling {
 public:
  Tiling() = default;
  // Sorts the lozenges and verifies that they tile the domain exactly.
  Tiling(DomainPtr dom, std::vector<Lozenge> lozenges);

  const DomainPtr& domain() const noexcept { return dom_; }
  const std::vector<Lozenge>& lozenges() const noexcept { return lozenges_; }

  // Value comparison: equal domains (by shape) and equal lozenge lists.
  friend bool operator==(const Tiling& a, const Tiling& b) {
    return a.lozenges_ == b.lozenges_ &&
           (a.dom_ == b.dom_ || (a.dom_ && b.dom_ && *a.dom_ == *b.dom_));
  }

 private:
  DomainPtr dom_;
  std::vector<Lozenge> lozenges_;  // sorted
};

// Tiling -> heights.  The anchor vertex receives value m; all other values
// follow from the edge increments the tiling induces.
HeightFunction height_from_tiling(const Tiling& t, TriVertex anchor, int m);

// Heights -> tiling.  Throws invalid_tiling if some face increment pattern is
// not one of the three lozenge half-patterns, or if a face's lozenge partner
// face lies outside the domain.
Tiling tiling_from_height(const HeightFunction& h);

// Pointwise minimal and maximal height functions extending b, computed by 0/1
// weighted shortest paths over the edge constraints.  Throws
// infeasible_boundary if no extension exists.
std::pair<HeightFunction, HeightFunction> extremal_heights(const BoundaryHeights& b);

// True if the domain carries at least one tiling with boundary data b.
bool is_tileable(const BoundaryHeights& b);

// Rescaled graph sample of a height function: points (x/n, y/n, h/n).
struct RescaledPoint {
  double x, y, h;
};
std::vector<RescaledPoint> rescale_height(const HeightFunction& h, int n);

// Plane embedding of a lattice vertex: e_x = (sqrt(3)/2, -1/2), e_y = (0, 1).
inline std::pair<double, double> embed(TriVertex v) noexcept {
  return {0.8660254037844386467637231707529 * v.x, v.y - 0.5 * v.x};
}

// Text serialization of a domain:
//   line 1: "DOMAIN v1"
//   line 2: "<x> <y>"  (path start)
//   line 3: the steps as a string over {R,L,U,D,NE,SW}, e.g. "RRNEULLSWD"
// Parsing is greedy: NE/SW are consumed as two characters; whitespace between
// steps is allowed; anything else is an error.
std::string domain_to_text(const Domain& d);
DomainPtr domain_from_text(const std::string& text);

}  // namespace lgl

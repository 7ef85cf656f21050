#pragma once

#include <boost/rational.hpp>
#include <string>
#include <vector>

#include "lgl/lattice.hpp"

namespace lgl {

// A fixed trapezoid of width L and left vertical side A: the region
// {0 <= x <= L, 0 <= y <= A + x}, together with L dent lozenges along the
// right line x = L at strictly increasing positions 0 <= d_1 < ... < d_L < A+L.
// The boundary path detours around each dent: ... U^(d) NE L U^... so the
// dent faces belong to the domain and every tiling covers each of them with a
// horizontal lozenge.
struct TrapezoidSpec {
  int width = 1;            // L >= 1
  int side = 0;             // A >= 0
  std::vector<int> dents;   // exactly L values, strictly increasing in [0, A+L)

  void validate() const;
};

DomainPtr trapezoid_domain(const TrapezoidSpec& spec);

// Triangular array (y_i^k), 1 <= i <= k <= rows(): row k lists the vertical
// coordinates of the k horizontal lozenges on the k-th vertical line.
struct InterlacingArray {
  std::vector<std::vector<int>> rows;  // rows[k-1] has k strictly increasing entries

  int depth() const noexcept { return static_cast<int>(rows.size()); }
  // Shape plus the interlacing inequalities y_i^{k+1} <= y_i^k < y_{i+1}^{k+1}.
  bool is_valid() const;

  friend bool operator==(const InterlacingArray&, const InterlacingArray&) = default;
};

// Single-line JSON form {"rows":[[...],...]} and its inverse.
std::string array_to_json_line(const InterlacingArray& a);
InterlacingArray array_from_json_line(const std::string& line);

// Tiling of a fixed trapezoid -> its interlacing array.  Throws if the
// tiling's domain is not trapezoid_domain(spec); the last row always equals
// the dents.
InterlacingArray array_from_tiling(const Tiling& t, const TrapezoidSpec& spec);

// Interlacing array -> the unique tiling of the fixed trapezoid it encodes.
// Throws lgl::error if the array shape, interlacing, or dent row is invalid.
Tiling tiling_from_array(const InterlacingArray& a, const TrapezoidSpec& spec);

// Mean and variance parameters of the dent configuration, kept exact:
//   m      = (1/L) sum d_i - L/2
//   var    = (1/L) sum (d_i/L)^2 - ((1/L) sum d_i/L)^2 - 1/12
// var can be negative at finite L (it vanishes in the limit for frozen
// tilings); sigma() clamps at zero before taking the square root.
struct DentStats {
  boost::rational<long long> m;
  boost::rational<long long> var;
  double sigma() const;
};

DentStats dent_stats(const TrapezoidSpec& spec);

// Both sides of the height identity
//   sum_i d_i = (A+L-1) H(L, A+L) - sum_{y=1}^{A+L-1} H(L, y)
// where H is the tiling's height function anchored to 0 at the bottom-right
// corner (L, 0).  The two agree for every tiling of the trapezoid.
struct HeightSumIdentity {
  long long dent_sum;
  long long height_side;
};
HeightSumIdentity height_sum_identity(const Tiling& t, const TrapezoidSpec& spec);

// An embedded trapezoid inside a larger tiling, in one of the six rotations.
// In the canonical frame (rotation 0) the three straight sides are
//   I:   origin -> origin + (0, side)            (vertical, the dent-free side)
//   Ir:  origin -> origin + (width, 0)
//   Il:  origin + (0, side) -> origin + (width, side + width)
// and the trapezoid opens towards +x.  `rotation` counts 60-degree
// counterclockwise lattice rotations (x, y) -> (x - y, x) applied to that
// frame.
struct EmbeddedTrapezoid {
  TriVertex origin;
  int side = 1;   // length of I
  int width = 1;  // common length of Il and Ir
  int rotation = 0;
};

// One counterclockwise 60-degree rotation of the lattice and of a lozenge.
inline TriVertex rotate60(TriVertex v) noexcept { return {v.x - v.y, v.x}; }
Lozenge rotate60(const Lozenge& l) noexcept;

// Def-style check: all three segments lie (edge by edge) in the domain's face
// complex and no lozenge of the tiling crosses them, i.e. no segment edge is
// the interior edge of a lozenge.
bool detect_embedded_trapezoid(const Tiling& t, const EmbeddedTrapezoid& e);

// Reads the interlacing array of horizontal lozenges on the first `depth`
// lines next to I (after undoing the rotation).  Row k must contain exactly k
// lozenges inside the trapezoid; throws lgl::error if the embedding check
// fails or the counts are off.
InterlacingArray extract_boundary_array(const Tiling& t, const EmbeddedTrapezoid& e,
                                        int depth);

}  // namespace lgl

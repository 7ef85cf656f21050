#pragma once

#include <vector>

#include "lgl/lattice.hpp"

namespace lgl {

// Lobachevsky function L(x) = -Integral_0^x log|2 sin t| dt, evaluated to
// absolute accuracy better than 1e-11 for x in [0, pi]; throws lgl::error
// outside that range.  Maximal at pi/6, zero at 0 and pi.
double lobachevsky(double x);

// Entropy density of the local slope (s, t): the fractions of the two
// non-flat lozenge orientations, with 1-s-t the fraction of the third.
// Defined on the closed simplex {s,t >= 0, s+t <= 1}; zero at the corners.
double entropy_density(double s, double t);

// A real-valued height field on a domain, e.g. a mean of integer height
// functions or a candidate limit shape evaluated at lattice points.
struct RealField {
  DomainPtr domain;
  std::vector<double> values;  // per domain vertex index

  RealField() = default;
  RealField(DomainPtr d, std::vector<double> v)
      : domain(std::move(d)), values(std::move(v)) {}
  explicit RealField(const HeightFunction& h)
      : domain(h.domain()), values(h.values().begin(), h.values().end()) {}
};

// Mean entropy density over the faces of the domain: each face contributes
// sigma(s_f, t_f) where (s_f, t_f) are its local slope fractions read off the
// field's edge increments.  Throws lgl::error if some face's slope falls
// outside the simplex (beyond a small numerical tolerance).  Integer height
// functions always sit at the corners of the simplex and score exactly zero.
double discrete_energy(const RealField& f);

// Convenience overload: the energy of the integer height function itself.
// Each face of an integer height function sits at a corner of the slope
// simplex, so this is exactly zero for every single tiling; positive values
// only arise for averaged fields (see mean_field).
double discrete_energy(const HeightFunction& h);

// Mean height field over a set of height functions on a common domain.
RealField mean_field(const std::vector<HeightFunction>& hs);

}  // namespace lgl

#include "lgl/entropy.hpp"

#include <algorithm>
#include <cmath>

namespace lgl {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;

// Smooth part of the integrand: log(sin t / t), which tends to 0 at t = 0.
double smooth_part(double t) {
  if (t == 0.0) return 0.0;
  return std::log(std::sin(t) / t);
}

double simpson(double fa, double fm, double fb, double h) {
  return (fa + 4.0 * fm + fb) * h / 6.0;
}

double adaptive_simpson(double a, double b, double fa, double fm, double fb,
                        double whole, double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  const double flm = smooth_part(lm), frm = smooth_part(rm);
  const double left = simpson(fa, flm, fm, m - a);
  const double right = simpson(fm, frm, fb, b - m);
  const double delta = left + right - whole;
  if (depth <= 0 || std::abs(delta) <= 15.0 * tol)
    return left + right + delta / 15.0;
  return adaptive_simpson(a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
         adaptive_simpson(m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

// Integral_0^r log(sin t / t) dt for 0 <= r <= pi/2.
double smooth_integral(double r) {
  if (r == 0.0) return 0.0;
  const double fa = smooth_part(0.0);
  const double fm = smooth_part(0.5 * r);
  const double fb = smooth_part(r);
  const double whole = simpson(fa, fm, fb, r);
  return adaptive_simpson(0.0, r, fa, fm, fb, whole, 1e-13, 48);
}

}  // namespace

double lobachevsky(double x) {
  if (!std::isfinite(x) || x < 0.0 || x > kPi)
    throw error("lobachevsky: argument outside [0, pi]");
  // For r in (pi/2, pi] use L(x) = -L(pi - x) (the integrand's half-period
  // antisymmetry), keeping the quadrature away from the upper singularity.
  double sign = 1.0;
  double r = x;
  if (r > 0.5 * kPi) {
    r = kPi - r;
    sign = -sign;
  }
  if (r == 0.0) return 0.0;
  // Integral_0^r log(2 sin t) dt = smooth_integral(r) + r (log(2r) - 1).
  const double value = smooth_integral(r) + r * (std::log(2.0 * r) - 1.0);
  return -sign * value;
}

double entropy_density(double s, double t) {
  constexpr double eps = 1e-12;
  if (s < -eps || t < -eps || s + t > 1.0 + eps)
    throw error("entropy_density: slope outside the simplex");
  s = std::clamp(s, 0.0, 1.0);
  t = std::clamp(t, 0.0, 1.0 - s);
  return (lobachevsky(kPi * s) + lobachevsky(kPi * t) +
          lobachevsky(kPi * (1.0 - s - t))) /
         kPi;
}

double discrete_energy(const RealField& f) {
  const Domain& dom = *f.domain;
  auto at = [&](TriVertex v) { return f.values[dom.index_of(v)]; };
  double total = 0.0;
  for (const auto& face : dom.faces()) {
    const TriVertex c = face.corner;
    double s, t;
    if (face.up) {
      s = at(c + TriVertex{1, 0}) - at(c);
      t = at(c + TriVertex{1, 1}) - at(c + TriVertex{1, 0});
    } else {
      s = at(c + TriVertex{1, 1}) - at(c + TriVertex{0, 1});
      t = at(c + TriVertex{0, 1}) - at(c);
    }
    total += entropy_density(s, t);
  }
  return total / static_cast<double>(dom.faces().size());
}

double discrete_energy(const HeightFunction& h) {
  return discrete_energy(RealField(h));
}

RealField mean_field(const std::vector<HeightFunction>& hs) {
  if (hs.empty()) throw error("mean_field: empty sample");
  const DomainPtr dom = hs.front().domain();
  std::vector<double> acc(dom->vertex_count(), 0.0);
  for (const auto& h : hs) {
    if (!(h.domain() == dom) && !(*h.domain() == *dom))
      throw error("mean_field: mixed domains");
    for (int i = 0; i < dom->vertex_count(); ++i) acc[i] += h.at(i);
  }
  const double inv = 1.0 / static_cast<double>(hs.size());
  for (double& v : acc) v *= inv;
  return RealField(dom, std::move(acc));
}

}  // namespace lgl

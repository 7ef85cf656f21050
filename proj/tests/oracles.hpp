#pragma once

// Independent cross-check oracles used only by the tests: closed-form counts,
// a characteristic-polynomial eigenvalue solver, and frozen high-precision
// constants.  Deliberately implemented with different algorithms than the
// library under test.

#include <boost/rational.hpp>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "lgl/gue.hpp"

namespace oracle {

inline unsigned long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  unsigned long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<unsigned long long>(n - k + i) / i;
  return r;
}

// Number of tilings of the a x b x c hexagon (boxed plane partitions):
//   prod_{i<=a} prod_{j<=b} prod_{k<=c} (i+j+k-1)/(i+j+k-2).
inline unsigned long long boxed_plane_partitions(int a, int b, int c) {
  boost::rational<long long> r(1);
  for (int i = 1; i <= a; ++i)
    for (int j = 1; j <= b; ++j)
      for (int k = 1; k <= c; ++k)
        r *= boost::rational<long long>(i + j + k - 1, i + j + k - 2);
  if (r.denominator() != 1) throw std::logic_error("plane partition count not integral");
  return static_cast<unsigned long long>(r.numerator());
}

// Real coefficients of det(xI - A) for Hermitian A, leading coefficient
// first, via the Faddeev-LeVerrier recursion.
inline std::vector<double> charpoly_coefficients(const lgl::HermitianMatrix& a) {
  const int n = a.order();
  using C = std::complex<double>;
  std::vector<C> m(static_cast<std::size_t>(n) * n, C(0));  // running matrix
  std::vector<double> c(n + 1, 0.0);
  c[0] = 1.0;
  for (int step = 1; step <= n; ++step) {
    // m <- A * (m + c[step-1] * I)
    std::vector<C> prev = m;
    for (int i = 0; i < n; ++i) prev[i * n + i] += c[step - 1];
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        C s(0);
        for (int k = 0; k < n; ++k) s += a.at(i, k) * prev[k * n + j];
        m[i * n + j] = s;
      }
    }
    C tr(0);
    for (int i = 0; i < n; ++i) tr += m[i * n + i];
    c[step] = -tr.real() / step;
  }
  return c;
}

inline double horner(const std::vector<double>& c, double x) {
  double v = 0.0;
  for (double ci : c) v = v * x + ci;
  return v;
}

// All real roots of a polynomial whose roots are known to be real, by
// recursive bracketing between the roots of the derivative.
inline std::vector<double> real_roots(const std::vector<double>& c, double lo, double hi) {
  const int deg = static_cast<int>(c.size()) - 1;
  if (deg <= 0) return {};
  if (deg == 1) return {-c[1] / c[0]};
  std::vector<double> d(deg);
  for (int i = 0; i < deg; ++i) d[i] = c[i] * (deg - i);
  std::vector<double> breaks = real_roots(d, lo, hi);
  breaks.insert(breaks.begin(), lo);
  breaks.push_back(hi);
  std::vector<double> roots;
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
    double a = breaks[i], b = breaks[i + 1];
    double fa = horner(c, a), fb = horner(c, b);
    if (fa == 0.0) {
      roots.push_back(a);
      continue;
    }
    if ((fa < 0) == (fb < 0)) continue;
    for (int it = 0; it < 200; ++it) {
      const double m = 0.5 * (a + b);
      const double fm = horner(c, m);
      if (fm == 0.0) {
        a = b = m;
        break;
      }
      if ((fm < 0) == (fa < 0)) {
        a = m;
        fa = fm;
      } else {
        b = m;
      }
    }
    roots.push_back(0.5 * (a + b));
  }
  return roots;
}

// Eigenvalues of a Hermitian matrix through the characteristic polynomial;
// practical for order <= ~6 with well-separated spectra.
inline std::vector<double> charpoly_eigenvalues(const lgl::HermitianMatrix& a) {
  const int n = a.order();
  double lo = 0.0, hi = 0.0;
  for (int i = 0; i < n; ++i) {
    double radius = 0.0;
    for (int j = 0; j < n; ++j)
      if (j != i) radius += std::abs(a.at(i, j));
    lo = std::min(lo, a.at(i, i).real() - radius);
    hi = std::max(hi, a.at(i, i).real() + radius);
  }
  std::vector<double> roots = real_roots(charpoly_coefficients(a), lo - 1.0, hi + 1.0);
  if (static_cast<int>(roots.size()) != n)
    throw std::runtime_error("characteristic-polynomial oracle lost a root");
  return roots;
}

// Frozen reference values, computed to 40 digits with an independent
// arbitrary-precision quadrature ahead of time.
inline constexpr double kLobPiOver3 = 0.3383138688032179;   // L(pi/3)
inline constexpr double kLobPiOver6 = 0.5074708032048268;   // L(pi/6) = (3/2) L(pi/3)
inline constexpr double kLobPiOver4 = 0.4579827970886095;   // L(pi/4) (Catalan / 2)
inline constexpr double kLobAt03 = 0.4547503982084090;      // L(0.3)
inline constexpr double kLobAt25 = -0.4964100662734784;     // L(2.5)
inline constexpr double kSigmaThird = 0.3230659472194505;   // sigma(1/3, 1/3)

}  // namespace oracle

#include "lgl/gue.hpp"

#include <algorithm>
#include <cmath>

#include "lgl/stats.hpp"

namespace lgl {

HermitianMatrix HermitianMatrix::corner(int k) const {
  HermitianMatrix c(k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) c.at(i, j) = at(i, j);
  return c;
}

HermitianMatrix sample_gue_matrix(int n, CounterRng& rng) {
  if (n < 1) throw error("matrix order must be positive");
  // X has iid entries N(0,1) + i N(0,1); M = (X + X*) / 2.
  std::vector<std::complex<double>> x(static_cast<std::size_t>(n) * n);
  for (auto& e : x) {
    const double re = rng.next_gaussian();
    const double im = rng.next_gaussian();
    e = {re, im};
  }
  HermitianMatrix m(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      m.at(i, j) = 0.5 * (x[i * n + j] + std::conj(x[j * n + i]));
  return m;
}

std::vector<double> hermitian_eigenvalues(const HermitianMatrix& m) {
  const int n = m.order();
  std::vector<std::complex<double>> a(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[i * n + j] = m.at(i, j);
  auto A = [&a, n](int i, int j) -> std::complex<double>& { return a[i * n + j]; };

  double fro = 0.0;
  for (const auto& e : a) fro += std::norm(e);
  fro = std::sqrt(fro);
  const double tol = 1e-12 * std::max(1.0, fro);

  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) off += 2.0 * std::norm(A(p, q));
    if (std::sqrt(off) < tol) {
      std::vector<double> ev(n);
      for (int i = 0; i < n; ++i) ev[i] = A(i, i).real();
      std::sort(ev.begin(), ev.end());
      return ev;
    }
    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const std::complex<double> b = A(p, q);
        if (std::abs(b) == 0.0) continue;
        const double app = A(p, p).real();
        const double aqq = A(q, q).real();
        // Unitary rotation U with U[p][p]=U[q][q]=c, U[p][q]=s, U[q][p]=-conj(s)
        // kills the (p,q) entry when tan(2 theta) = 2|b| / (aqq - app) and
        // s carries the phase of b.
        const double theta = 0.5 * std::atan2(2.0 * std::abs(b), aqq - app);
        const double c = std::cos(theta);
        const std::complex<double> s = std::sin(theta) * (b / std::abs(b));
        for (int i = 0; i < n; ++i) {  // A <- A U
          const std::complex<double> tp = A(i, p), tq = A(i, q);
          A(i, p) = c * tp - std::conj(s) * tq;
          A(i, q) = s * tp + c * tq;
        }
        for (int j = 0; j < n; ++j) {  // A <- U* A
          const std::complex<double> tp = A(p, j), tq = A(q, j);
          A(p, j) = c * tp - s * tq;
          A(q, j) = std::conj(s) * tp + c * tq;
        }
        A(p, q) = 0.0;
        A(q, p) = 0.0;
        A(p, p) = A(p, p).real();
        A(q, q) = A(q, q).real();
      }
    }
  }
  throw error("eigensolver did not converge");
}

GueCornersSample corners_eigenvalues(const HermitianMatrix& m, int depth) {
  if (depth < 1 || depth > m.order()) throw error("corner depth out of range");
  GueCornersSample s;
  s.rows.reserve(depth);
  for (int k = 1; k <= depth; ++k) s.rows.push_back(hermitian_eigenvalues(m.corner(k)));
  return s;
}

GueCornersSample sample_gue_corners(int depth, CounterRng& rng) {
  return corners_eigenvalues(sample_gue_matrix(depth, rng), depth);
}

MarginalCheck gaussian_marginal_check(std::vector<double> samples, double mu, double sigma) {
  MarginalCheck c;
  const MeanVar mv = mean_variance(samples);
  c.count = mv.count;
  c.mean = mv.mean;
  c.variance = mv.variance;
  c.ks = ks_one_sample(std::move(samples),
                       [mu, sigma](double x) { return normal_cdf(x, mu, sigma); });
  return c;
}

}  // namespace lgl

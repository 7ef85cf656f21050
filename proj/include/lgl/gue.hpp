#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "lgl/lattice.hpp"
#include "lgl/rng.hpp"

namespace lgl {

// Dense complex Hermitian matrix, row-major.
class HermitianMatrix {
 public:
  explicit HermitianMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * n) {}

  int order() const noexcept { return n_; }
  std::complex<double>& at(int i, int j) noexcept { return a_[i * n_ + j]; }
  const std::complex<double>& at(int i, int j) const noexcept { return a_[i * n_ + j]; }

  // Top-left k-by-k corner.
  HermitianMatrix corner(int k) const;

 private:
  int n_;
  std::vector<std::complex<double>> a_;
};

// GUE matrix of order n: M = (X + X*) / 2 where X has iid standard complex
// Gaussian entries (real and imaginary parts independent N(0,1)).
HermitianMatrix sample_gue_matrix(int n, CounterRng& rng);

// All eigenvalues, ascending, by cyclic Jacobi rotations with complex phase.
// The iteration stops when the off-diagonal Frobenius norm drops below
// 1e-12 * max(1, ||A||_F).
std::vector<double> hermitian_eigenvalues(const HermitianMatrix& a);

// Eigenvalues of every top-left corner: rows()[k-1] holds the k ascending
// eigenvalues of the k-by-k corner.  Corner eigenvalues always interlace.
struct GueCornersSample {
  std::vector<std::vector<double>> rows;
  int depth() const noexcept { return static_cast<int>(rows.size()); }
};

GueCornersSample corners_eigenvalues(const HermitianMatrix& m, int depth);
GueCornersSample sample_gue_corners(int depth, CounterRng& rng);

// Distribution checks on a scalar sample: mean, variance (unbiased), and the
// one-sample Kolmogorov-Smirnov distance to N(mu, sigma^2).
struct MarginalCheck {
  std::size_t count = 0;
  double mean = 0.0;
  double variance = 0.0;
  double ks = 0.0;
};

MarginalCheck gaussian_marginal_check(std::vector<double> samples, double mu = 0.0,
                                      double sigma = 1.0);

}  // namespace lgl

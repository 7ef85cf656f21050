#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

namespace lgl {

// Standard normal CDF via std::erf.
double normal_cdf(double x, double mu = 0.0, double sigma = 1.0);

struct MeanVar {
  std::size_t count = 0;
  double mean = 0.0;
  double variance = 0.0;  // unbiased
};
MeanVar mean_variance(const std::vector<double>& xs);

// One-sample Kolmogorov-Smirnov statistic against a continuous CDF.
double ks_one_sample(std::vector<double> data, const std::function<double(double)>& cdf);

// Two-sample Kolmogorov-Smirnov statistic (merge scan; ties handled by
// comparing the two empirical CDFs only between distinct values).
double ks_two_sample(std::vector<double> a, std::vector<double> b);

// Total-variation distance between the empirical distribution given by
// counts and the uniform distribution over the same cells.
double tv_to_uniform(const std::vector<std::size_t>& counts);

// One summarized quantity of an experiment.  ci_radius is the 95% normal
// confidence radius 1.96 * sqrt(variance / count); ks is quantity-specific
// and NaN when not applicable.
struct StatQuantity {
  std::string name;
  std::size_t count = 0;
  double mean = 0.0;
  double variance = 0.0;
  double ks = 0.0;
  double ci_radius = 0.0;
};

StatQuantity summarize(std::string name, const std::vector<double>& xs);

struct StatReport {
  std::vector<StatQuantity> quantities;
  std::string to_json() const;  // deterministic single-line JSON
};

}  // namespace lgl

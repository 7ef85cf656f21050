#include "lgl/stats.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include <json.hpp>

namespace lgl {

double normal_cdf(double x, double mu, double sigma) {
  return 0.5 * (1.0 + std::erf((x - mu) / (sigma * 1.4142135623730950488016887242097)));
}

MeanVar mean_variance(const std::vector<double>& xs) {
  MeanVar mv;
  mv.count = xs.size();
  if (xs.empty()) return mv;
  double sum = 0.0;
  for (const double x : xs) sum += x;
  mv.mean = sum / static_cast<double>(xs.size());
  if (xs.size() < 2) return mv;
  double ss = 0.0;
  for (const double x : xs) ss += (x - mv.mean) * (x - mv.mean);
  mv.variance = ss / static_cast<double>(xs.size() - 1);
  return mv;
}

double ks_one_sample(std::vector<double> data, const std::function<double(double)>& cdf) {
  if (data.empty()) throw std::invalid_argument("ks_one_sample: empty sample");
  std::sort(data.begin(), data.end());
  const double n = static_cast<double>(data.size());
  double d = 0.0;
  for (std::size_t i = 0; i < data.size(); ++i) {
    const double f = cdf(data[i]);
    d = std::max(d, f - static_cast<double>(i) / n);
    d = std::max(d, static_cast<double>(i + 1) / n - f);
  }
  return d;
}

double ks_two_sample(std::vector<double> a, std::vector<double> b) {
  if (a.empty() || b.empty()) throw std::invalid_argument("ks_two_sample: empty sample");
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  const double na = static_cast<double>(a.size());
  const double nb = static_cast<double>(b.size());
  std::size_t i = 0, j = 0;
  double d = 0.0;
  while (i < a.size() && j < b.size()) {
    const double x = std::min(a[i], b[j]);
    while (i < a.size() && a[i] <= x) ++i;
    while (j < b.size() && b[j] <= x) ++j;
    d = std::max(d, std::abs(static_cast<double>(i) / na - static_cast<double>(j) / nb));
  }
  return d;
}

double tv_to_uniform(const std::vector<std::size_t>& counts) {
  if (counts.empty()) throw std::invalid_argument("tv_to_uniform: no cells");
  std::size_t total = 0;
  for (const std::size_t c : counts) total += c;
  if (total == 0) throw std::invalid_argument("tv_to_uniform: empty sample");
  const double p = 1.0 / static_cast<double>(counts.size());
  double tv = 0.0;
  for (const std::size_t c : counts)
    tv += std::abs(static_cast<double>(c) / static_cast<double>(total) - p);
  return 0.5 * tv;
}

StatQuantity summarize(std::string name, const std::vector<double>& xs) {
  const MeanVar mv = mean_variance(xs);
  StatQuantity q;
  q.name = std::move(name);
  q.count = mv.count;
  q.mean = mv.mean;
  q.variance = mv.variance;
  q.ks = std::numeric_limits<double>::quiet_NaN();
  q.ci_radius = mv.count > 0
                    ? 1.96 * std::sqrt(mv.variance / static_cast<double>(mv.count))
                    : 0.0;
  return q;
}

std::string StatReport::to_json() const {
  nlohmann::json j;
  j["quantities"] = nlohmann::json::array();
  for (const auto& q : quantities) {
    nlohmann::json e;
    e["name"] = q.name;
    e["count"] = q.count;
    e["mean"] = q.mean;
    e["variance"] = q.variance;
    if (std::isnan(q.ks))
      e["ks"] = nullptr;
    else
      e["ks"] = q.ks;
    e["ci_radius"] = q.ci_radius;
    j["quantities"].push_back(e);
  }
  return j.dump();
}

}  // namespace lgl

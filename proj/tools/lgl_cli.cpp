// lgl: command-line laboratory for uniformly random lozenge tilings and
// their GUE-corners statistics.
//
// Verbs: sample, enumerate, gue, hexagon-gue, trapezoid-gue, concentration,
// oracle, render.  Common flags: --seed --size --samples --threads --out
// --center, plus a key=value config file via --config (command line wins).
// All outputs are deterministic in (config, seed) at any --threads value:
// every sample i draws from its own counter stream and results are merged in
// index order.

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <json.hpp>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "lgl/concentration.hpp"
#include "lgl/entropy.hpp"
#include "lgl/gue.hpp"
#include "lgl/parallel.hpp"
#include "lgl/render.hpp"
#include "lgl/sampler.hpp"
#include "lgl/stats.hpp"
#include "lgl/trapezoid.hpp"
#include "oracles.hpp"

using namespace lgl;

namespace {

struct Options {
  std::uint64_t seed = 0;
  int size = 4;
  std::size_t samples = 100;
  int threads = 1;
  std::string out;
  std::string center = "theoretical";
  std::string domain_file;
  std::string svg;
  int side = 4;
  std::vector<int> dents;
  std::vector<int> sizes{8, 16, 24};
};

std::ostream& open_out(const Options& opt, std::ofstream& file) {
  if (opt.out.empty()) return std::cout;
  file.open(opt.out);
  if (!file) throw error("cannot open output file: " + opt.out);
  return file;
}

DomainPtr load_domain(const Options& opt) {
  if (!opt.domain_file.empty()) {
    std::ifstream in(opt.domain_file);
    if (!in) throw error("cannot open domain file: " + opt.domain_file);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return domain_from_text(buffer.str());
  }
  return hexagon_domain(opt.size, opt.size, opt.size);
}

nlohmann::json tiling_to_json(const Tiling& t) {
  nlohmann::json lozenges = nlohmann::json::array();
  for (const auto& l : t.lozenges()) {
    const char* name = l.type == LozengeType::e10  ? "e10"
                       : l.type == LozengeType::e01 ? "e01"
                                                    : "e11";
    lozenges.push_back({{"type", name}, {"x", l.a.x}, {"y", l.a.y}});
  }
  return {{"lozenges", lozenges}};
}

// Deterministic batch of exact samples: sample i uses counter stream i.
std::vector<HeightFunction> cftp_batch(const GlauberEngine& engine, const Options& opt) {
  std::vector<HeightFunction> out(opt.samples);
  parallel_for(opt.samples, opt.threads,
               [&](std::size_t i) { out[i] = sample_cftp(engine, opt.seed, i); });
  return out;
}

int cmd_sample(const Options& opt) {
  const DomainPtr d = load_domain(opt);
  const BoundaryHeights b(d, 0);
  const GlauberEngine engine(b);
  const auto heights = cftp_batch(engine, opt);

  std::ofstream file;
  std::ostream& os = open_out(opt, file);
  for (std::size_t i = 0; i < heights.size(); ++i) {
    nlohmann::json j = tiling_to_json(tiling_from_height(heights[i]));
    j["index"] = i;
    os << j.dump() << '\n';
  }
  if (!opt.svg.empty() && !heights.empty()) {
    std::ofstream svg(opt.svg);
    if (!svg) throw error("cannot open SVG file: " + opt.svg);
    svg << render_svg(tiling_from_height(heights.front()));
  }
  std::cerr << "wrote " << heights.size() << " exact samples\n";
  return 0;
}

int cmd_enumerate(const Options& opt) {
  const DomainPtr d = load_domain(opt);
  const auto tilings = enumerate_tilings(BoundaryHeights(d, 0));
  if (!opt.out.empty()) {
    std::ofstream file;
    std::ostream& os = open_out(opt, file);
    for (const auto& t : tilings) os << tiling_to_json(t).dump() << '\n';
  }
  std::cout << tilings.size() << '\n';
  return 0;
}

int cmd_gue(const Options& opt) {
  const int depth = std::max(1, opt.size);
  std::vector<GueCornersSample> samples(opt.samples);
  parallel_for(opt.samples, opt.threads, [&](std::size_t i) {
    CounterRng rng(opt.seed, i);
    samples[i] = sample_gue_corners(depth, rng);
  });

  if (!opt.out.empty()) {
    std::ofstream file;
    std::ostream& os = open_out(opt, file);
    for (const auto& s : samples) os << nlohmann::json{{"rows", s.rows}}.dump() << '\n';
  }

  StatReport report;
  std::vector<double> xi11;
  for (const auto& s : samples) xi11.push_back(s.rows[0][0]);
  StatQuantity q = summarize("xi11", xi11);
  q.ks = ks_one_sample(xi11, [](double x) { return normal_cdf(x); });
  report.quantities.push_back(q);
  for (int k = 2; k <= std::min(3, depth); ++k) {
    std::vector<double> trace;
    for (const auto& s : samples)
      trace.push_back(std::accumulate(s.rows[k - 1].begin(), s.rows[k - 1].end(), 0.0));
    StatQuantity t = summarize("trace_level_" + std::to_string(k), trace);
    t.ks = ks_one_sample(trace,
                         [k](double x) { return normal_cdf(x, 0.0, std::sqrt(double(k))); });
    report.quantities.push_back(t);
  }
  std::cout << report.to_json() << '\n';
  return 0;
}

// Shared tail of hexagon-gue and trapezoid-gue: standardized tiling arrays
// against freshly sampled GUE corners.
int gue_comparison(const Options& opt, const std::vector<InterlacingArray>& arrays,
                   double center_theoretical, double scale) {
  const int depth = arrays.front().depth();

  std::vector<double> y11_raw;
  double interlacing_ok = 0.0;
  for (const auto& a : arrays) {
    y11_raw.push_back(a.rows[0][0]);
    if (a.is_valid()) interlacing_ok += 1.0;
  }
  const double empirical_center = mean_variance(y11_raw).mean;
  const double center =
      opt.center == "empirical" ? empirical_center : center_theoretical;

  auto standardized = [&](double y) { return (y - center) / scale; };
  std::vector<double> y11_std;
  for (double y : y11_raw) y11_std.push_back(standardized(y));

  // Fresh GUE corners, one stream per sample, offset to stay disjoint from
  // the tiling streams.
  const double gue_scale = std::sqrt(3.0 / 8.0);
  std::vector<GueCornersSample> gue(opt.samples);
  parallel_for(opt.samples, opt.threads, [&](std::size_t i) {
    CounterRng rng(opt.seed ^ 0x9e3779b97f4a7c15ULL, i);
    gue[i] = sample_gue_corners(std::max(depth, 2), rng);
  });

  StatReport report;
  for (const char* which : {"theoretical", "empirical"}) {
    const double c = which == std::string("empirical") ? empirical_center
                                                       : center_theoretical;
    std::vector<double> std_vals;
    for (double y : y11_raw) std_vals.push_back((y - c) / scale);
    std::vector<double> gue_vals;
    for (const auto& g : gue) gue_vals.push_back(gue_scale * g.rows[0][0]);
    StatQuantity q = summarize(std::string("y11_standardized_") + which, std_vals);
    q.ks = ks_two_sample(std_vals, gue_vals);
    report.quantities.push_back(q);
  }

  if (depth >= 2) {
    // Joint moment E[y11 * (y1^2 + y2^2)] in standardized coordinates,
    // with the GUE-side reference value next to it.
    std::vector<double> moment, gue_moment;
    for (const auto& a : arrays)
      moment.push_back(standardized(a.rows[0][0]) *
                       (standardized(a.rows[1][0]) + standardized(a.rows[1][1])));
    for (const auto& g : gue)
      gue_moment.push_back(gue_scale * g.rows[0][0] *
                           (gue_scale * g.rows[1][0] + gue_scale * g.rows[1][1]));
    report.quantities.push_back(summarize("moment_y11_trace2", moment));
    report.quantities.push_back(summarize("gue_moment_xi11_trace2", gue_moment));
  }

  StatQuantity inter;
  inter.name = "interlacing_fraction";
  inter.count = arrays.size();
  inter.mean = interlacing_ok / static_cast<double>(arrays.size());
  inter.ks = std::numeric_limits<double>::quiet_NaN();
  report.quantities.push_back(inter);

  std::ofstream file;
  std::ostream& os = open_out(opt, file);
  os << report.to_json() << '\n';
  return inter.mean == 1.0 ? 0 : 1;
}

int cmd_hexagon_gue(const Options& opt) {
  const int n = opt.size;
  const BoundaryHeights b(hexagon_domain(n, n, n), 0);
  const GlauberEngine engine(b);
  const auto heights = cftp_batch(engine, opt);
  const EmbeddedTrapezoid corner{{0, 0}, n, n, 0};
  const int depth = std::min(3, n);

  std::vector<InterlacingArray> arrays(heights.size());
  parallel_for(heights.size(), opt.threads, [&](std::size_t i) {
    arrays[i] = extract_boundary_array(tiling_from_height(heights[i]), corner, depth);
  });
  return gue_comparison(opt, arrays, n / 2.0, std::sqrt(double(n)));
}

int cmd_trapezoid_gue(const Options& opt) {
  if (opt.dents.empty()) throw error("trapezoid-gue requires --dents");
  const TrapezoidSpec spec{static_cast<int>(opt.dents.size()), opt.side, opt.dents};
  spec.validate();
  const BoundaryHeights b(trapezoid_domain(spec), 0);
  const GlauberEngine engine(b);
  const auto heights = cftp_batch(engine, opt);

  std::vector<InterlacingArray> full(heights.size());
  parallel_for(heights.size(), opt.threads, [&](std::size_t i) {
    full[i] = array_from_tiling(tiling_from_height(heights[i]), spec);
  });
  const int depth = std::min(3, spec.width);
  std::vector<InterlacingArray> arrays(full.size());
  for (std::size_t i = 0; i < full.size(); ++i)
    arrays[i].rows.assign(full[i].rows.begin(), full[i].rows.begin() + depth);

  const DentStats stats = dent_stats(spec);
  const double m = boost::rational_cast<double>(stats.m);
  const double sigma = stats.sigma();
  // Degenerate (near-frozen) dents: standardize by sqrt(L) alone.
  const double scale =
      (sigma > 0 ? sigma : 1.0) * std::sqrt(double(spec.width));
  return gue_comparison(opt, arrays, m, scale);
}

int cmd_concentration(const Options& opt) {
  const auto points = variance_experiment(opt.sizes, opt.samples, opt.seed, opt.threads);
  const VarianceCheckReport check =
      conditional_variance_check(BoundaryHeights(hexagon_domain(2, 2, 2), 0));

  nlohmann::json j;
  j["variance_experiment"] = nlohmann::json::array();
  for (const auto& p : points) {
    j["variance_experiment"].push_back({{"size", p.size},
                                        {"samples", p.samples},
                                        {"variance", p.variance},
                                        {"variance_over_n", p.variance_over_n}});
  }
  j["conditional_variance"] = {{"tilings", check.tiling_count},
                               {"pairs", check.pair_count},
                               {"groups", check.group_count},
                               {"checks", check.checks},
                               {"variance_exact", check.variance_exact},
                               {"signs_uniform", check.signs_uniform}};
  std::ofstream file;
  std::ostream& os = open_out(opt, file);
  os << j.dump() << '\n';

  std::cerr << "centre-height variance per size:\n";
  for (const auto& p : points)
    std::cerr << "  N=" << p.size << "  Var=" << p.variance
              << "  Var/N=" << p.variance_over_n << '\n';
  std::cerr << "conditional-variance identity: "
            << (check.variance_exact ? "exact" : "VIOLATED") << " on "
            << check.pair_count << " pairs\n";
  return check.variance_exact && check.signs_uniform ? 0 : 1;
}

int cmd_oracle(const Options& opt) {
  bool ok = true;
  auto expect = [&](bool cond, const std::string& what) {
    std::cout << (cond ? "ok   " : "FAIL ") << what << '\n';
    ok = ok && cond;
  };

  // Enumeration counts against the closed forms.
  for (const auto [a, b, c] : {std::tuple{2, 2, 2}, {3, 2, 1}, {4, 3, 1}, {2, 3, 2}}) {
    const auto n = enumerate_tilings(BoundaryHeights(hexagon_domain(a, b, c), 0)).size();
    expect(n == oracle::boxed_plane_partitions(a, b, c),
           "enumeration " + std::to_string(a) + "x" + std::to_string(b) + "x" +
               std::to_string(c) + " = " + std::to_string(n));
  }

  // Bijection round trip on all trapezoids with L <= 3, A <= 4.
  std::size_t round_trips = 0;
  bool bijection = true;
  for (int L = 1; L <= 3; ++L) {
    for (int A = 0; A <= 4; ++A) {
      std::vector<int> cur;
      auto rec = [&](auto&& self, int next) -> void {
        if (static_cast<int>(cur.size()) == L) {
          const TrapezoidSpec spec{L, A, cur};
          for (const auto& t :
               enumerate_tilings(BoundaryHeights(trapezoid_domain(spec), 0), 100)) {
            const InterlacingArray arr = array_from_tiling(t, spec);
            bijection = bijection && arr.is_valid() && tiling_from_array(arr, spec) == t;
            ++round_trips;
          }
          return;
        }
        for (int v = next; v < A + L; ++v) {
          cur.push_back(v);
          self(self, v + 1);
          cur.pop_back();
        }
      };
      rec(rec, 0);
    }
  }
  expect(bijection, "bijection round trip on " + std::to_string(round_trips) + " tilings");

  // Height-sum identity on sampled tilings.
  bool identity = true;
  CounterRng rng(opt.seed, 0);
  for (int s = 0; s < 200; ++s) {
    const int L = 1 + static_cast<int>(rng.next_below(6));
    const int A = static_cast<int>(rng.next_below(5));
    std::vector<int> pool(A + L);
    std::iota(pool.begin(), pool.end(), 0);
    for (int i = 0; i < L; ++i)
      std::swap(pool[i], pool[i + rng.next_below(pool.size() - i)]);
    std::vector<int> dents(pool.begin(), pool.begin() + L);
    std::sort(dents.begin(), dents.end());
    const TrapezoidSpec spec{L, A, dents};
    const GlauberEngine engine(BoundaryHeights(trapezoid_domain(spec), 0));
    const HeightSumIdentity id =
        height_sum_identity(tiling_from_height(sample_cftp(engine, opt.seed, s)), spec);
    identity = identity && id.dent_sum == id.height_side;
  }
  expect(identity, "height-sum identity on 200 sampled tilings");

  // Eigensolver against the characteristic-polynomial root finder.
  double worst = 0.0;
  for (int s = 0; s < 50; ++s) {
    const int n = 1 + static_cast<int>(rng.next_below(5));
    HermitianMatrix m(n);
    for (int i = 0; i < n; ++i) {
      m.at(i, i) = rng.next_gaussian();
      for (int j = i + 1; j < n; ++j) {
        m.at(i, j) = {rng.next_gaussian(), rng.next_gaussian()};
        m.at(j, i) = std::conj(m.at(i, j));
      }
    }
    const auto mine = hermitian_eigenvalues(m);
    const auto ref = oracle::charpoly_eigenvalues(m);
    for (int i = 0; i < n; ++i) worst = std::max(worst, std::abs(mine[i] - ref[i]));
  }
  expect(worst <= 1e-8, "eigensolver max deviation " + std::to_string(worst));

  return ok ? 0 : 1;
}

int cmd_render(const Options& opt) {
  const DomainPtr d = load_domain(opt);
  const BoundaryHeights b(d, 0);
  std::string svg;
  if (is_tileable(b)) {
    const GlauberEngine engine(b);
    svg = render_svg(tiling_from_height(sample_cftp(engine, opt.seed, 0)));
  } else {
    svg = render_svg(*d);
  }
  std::ofstream file;
  std::ostream& os = open_out(opt, file);
  os << svg;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  Options opt;
  CLI::App app{"uniformly random lozenge tilings and GUE-corners statistics"};
  app.set_config("--config", "", "key=value config file (command line wins)");
  app.fallthrough();
  app.require_subcommand(1);

  app.add_option("--seed", opt.seed, "base seed; fully determines all randomness");
  app.add_option("--size", opt.size, "hexagon side length / GUE depth");
  app.add_option("--samples", opt.samples, "number of samples");
  app.add_option("--threads", opt.threads, "worker threads (outputs are identical at any value)")
      ->envname("LGL_THREADS");
  app.add_option("--out", opt.out, "output file (default: stdout)");
  app.add_option("--center", opt.center, "centering for standardization")
      ->check(CLI::IsMember({"theoretical", "empirical"}));

  CLI::App* sample = app.add_subcommand("sample", "exact uniform tilings as JSON lines");
  sample->add_option("--domain", opt.domain_file, "domain text file (default: hexagon)");
  sample->add_option("--svg", opt.svg, "also render the first sample to this SVG file");

  CLI::App* enumerate = app.add_subcommand("enumerate", "count (and dump) all tilings");
  enumerate->add_option("--domain", opt.domain_file, "domain text file");

  app.add_subcommand("gue", "GUE-corners samples and marginal statistics");

  app.add_subcommand("hexagon-gue",
                     "standardized hexagon boundary arrays vs GUE corners");

  CLI::App* trap = app.add_subcommand(
      "trapezoid-gue", "standardized trapezoid arrays vs GUE corners");
  trap->add_option("--dents", opt.dents, "dent positions, strictly increasing")
      ->delimiter(',');
  trap->add_option("--side", opt.side, "vertical side length A");

  CLI::App* conc =
      app.add_subcommand("concentration", "variance experiment and exact identity");
  conc->add_option("--sizes", opt.sizes, "hexagon size ladder");

  app.add_subcommand("oracle", "run all exact self-checks; nonzero exit on mismatch");

  CLI::App* render = app.add_subcommand("render", "SVG of one exact sample");
  render->add_option("--domain", opt.domain_file, "domain text file");

  CLI11_PARSE(app, argc, argv);

  try {
    if (sample->parsed()) return cmd_sample(opt);
    if (enumerate->parsed()) return cmd_enumerate(opt);
    if (app.get_subcommand("gue")->parsed()) return cmd_gue(opt);
    if (app.get_subcommand("hexagon-gue")->parsed()) return cmd_hexagon_gue(opt);
    if (trap->parsed()) return cmd_trapezoid_gue(opt);
    if (conc->parsed()) return cmd_concentration(opt);
    if (app.get_subcommand("oracle")->parsed()) return cmd_oracle(opt);
    if (render->parsed()) return cmd_render(opt);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}

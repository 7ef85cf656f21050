#include "lgl/trapezoid.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>

#include <json.hpp>

namespace lgl {

void TrapezoidSpec::validate() const {
  if (width < 1) throw error("trapezoid width must be at least 1");
  if (side < 0) throw error("trapezoid side must be non-negative");
  if (static_cast<int>(dents.size()) != width)
    throw error("trapezoid needs exactly width-many dents");
  for (int i = 0; i < width; ++i) {
    if (dents[i] < 0 || dents[i] >= side + width)
      throw error("dent position out of range");
    if (i > 0 && dents[i] <= dents[i - 1])
      throw error("dent positions must be strictly increasing");
  }
}

DomainPtr trapezoid_domain(const TrapezoidSpec& spec) {
  spec.validate();
  const int L = spec.width, A = spec.side;
  std::vector<Dir> steps;
  steps.insert(steps.end(), L, Dir::R);
  std::size_t next_dent = 0;
  for (int y = 0; y < A + L; ++y) {
    if (next_dent < spec.dents.size() && spec.dents[next_dent] == y) {
      steps.push_back(Dir::NE);
      steps.push_back(Dir::L);
      ++next_dent;
    } else {
      steps.push_back(Dir::U);
    }
  }
  steps.insert(steps.end(), L, Dir::SW);
  steps.insert(steps.end(), A, Dir::D);
  return std::make_shared<Domain>(Domain::from_boundary_path({0, 0}, steps));
}

bool InterlacingArray::is_valid() const {
  for (std::size_t k = 0; k < rows.size(); ++k) {
    if (rows[k].size() != k + 1) return false;
    for (std::size_t i = 1; i < rows[k].size(); ++i)
      if (rows[k][i] <= rows[k][i - 1]) return false;
    if (k + 1 < rows.size()) {
      for (std::size_t i = 0; i <= k; ++i)
        if (!(rows[k + 1][i] <= rows[k][i] && rows[k][i] < rows[k + 1][i + 1]))
          return false;
    }
  }
  return true;
}

std::string array_to_json_line(const InterlacingArray& a) {
  nlohmann::json j;
  j["rows"] = a.rows;
  return j.dump();
}

InterlacingArray array_from_json_line(const std::string& line) {
  InterlacingArray a;
  try {
    const auto j = nlohmann::json::parse(line);
    a.rows = j.at("rows").get<std::vector<std::vector<int>>>();
  } catch (const nlohmann::json::exception& e) {
    throw error(std::string("bad interlacing-array JSON: ") + e.what());
  }
  if (!a.is_valid()) throw error("loaded array violates the interlacing invariants");
  return a;
}

InterlacingArray array_from_tiling(const Tiling& t, const TrapezoidSpec& spec) {
  spec.validate();
  const DomainPtr expected = trapezoid_domain(spec);
  if (!(*t.domain() == *expected))
    throw error("tiling does not live on the given trapezoid");

  InterlacingArray a;
  a.rows.resize(spec.width);
  for (const auto& l : t.lozenges()) {
    if (l.type != LozengeType::e01) continue;
    const int line = l.a.x + 1;  // interior edge sits on x = anchor.x + 1
    if (line >= 1 && line <= spec.width) a.rows[line - 1].push_back(l.a.y);
  }
  for (int k = 1; k <= spec.width; ++k) {
    auto& row = a.rows[k - 1];
    std::sort(row.begin(), row.end());
    if (static_cast<int>(row.size()) != k)
      throw error("line " + std::to_string(k) + " carries " +
                  std::to_string(row.size()) + " horizontal lozenges, expected " +
                  std::to_string(k));
  }
  if (a.rows.back() != spec.dents)
    throw error("last array row does not match the dent positions");
  if (!a.is_valid()) throw error("extracted array does not interlace");
  return a;
}

Tiling tiling_from_array(const InterlacingArray& a, const TrapezoidSpec& spec) {
  spec.validate();
  if (a.depth() != spec.width) throw error("array depth does not match trapezoid width");
  if (!a.is_valid()) throw error("array does not interlace");
  if (a.rows.back() != spec.dents)
    throw error("last array row does not match the dent positions");

  const DomainPtr dom = trapezoid_domain(spec);
  std::vector<int> h(dom->vertex_count());
  for (int i = 0; i < dom->vertex_count(); ++i) {
    const TriVertex v = dom->vertex(i);
    if (v.x == 0) {
      h[i] = 0;
    } else if (v.x <= spec.width) {
      const auto& row = a.rows[v.x - 1];
      h[i] = static_cast<int>(
          std::lower_bound(row.begin(), row.end(), v.y) - row.begin());
    } else {
      // Dent tip (L+1, d+1): one above the height just below the dent.
      const auto& row = a.rows[spec.width - 1];
      h[i] = static_cast<int>(
          std::lower_bound(row.begin(), row.end(), v.y - 1) - row.begin()) + 1;
    }
  }
  return tiling_from_height(HeightFunction(dom, std::move(h)));
}

double DentStats::sigma() const {
  const double v = boost::rational_cast<double>(var);
  return v > 0.0 ? std::sqrt(v) : 0.0;
}

DentStats dent_stats(const TrapezoidSpec& spec) {
  spec.validate();
  using Q = boost::rational<long long>;
  const long long L = spec.width;
  long long sum = 0, sum_sq = 0;
  for (const int d : spec.dents) {
    sum += d;
    sum_sq += static_cast<long long>(d) * d;
  }
  DentStats s;
  s.m = Q(sum, L) - Q(L, 2);
  s.var = Q(sum_sq, L * L * L) - Q(sum, L * L) * Q(sum, L * L) - Q(1, 12);
  return s;
}

HeightSumIdentity height_sum_identity(const Tiling& t, const TrapezoidSpec& spec) {
  spec.validate();
  const int L = spec.width, A = spec.side;
  const HeightFunction h = height_from_tiling(t, {L, 0}, 0);
  HeightSumIdentity out{0, 0};
  for (const int d : spec.dents) out.dent_sum += d;
  out.height_side =
      static_cast<long long>(A + L - 1) * h(TriVertex{L, A + L});
  for (int y = 1; y <= A + L - 1; ++y) out.height_side -= h(TriVertex{L, y});
  return out;
}

Lozenge rotate60(const Lozenge& l) noexcept {
  const int x = l.a.x, y = l.a.y;
  switch (l.type) {
    case LozengeType::e10:
      return {LozengeType::e11, {x - y - 1, x}};
    case LozengeType::e11:
      return {LozengeType::e01, {x - y - 1, x}};
    default:
      return {LozengeType::e10, {x - y, x}};
  }
}

namespace {

TriVertex rotate60_times(TriVertex v, int k) {
  for (int i = 0; i < k; ++i) v = rotate60(v);
  return v;
}

// Unit edges of the three trapezoid sides, in actual (unrotated) coordinates,
// as (base vertex, forward direction index) pairs.
std::vector<std::pair<TriVertex, int>> segment_edges(const EmbeddedTrapezoid& e) {
  const int r = ((e.rotation % 6) + 6) % 6;
  const TriVertex d_i = rotate60_times({0, 1}, r);
  const TriVertex d_r = rotate60_times({1, 0}, r);
  const TriVertex d_l = rotate60_times({1, 1}, r);

  std::vector<std::pair<TriVertex, int>> edges;
  auto add = [&edges](TriVertex p, TriVertex d) {
    for (int dir = 0; dir < 3; ++dir) {
      if (d == kForward[dir]) {
        edges.emplace_back(p, dir);
        return;
      }
      if (d + kForward[dir] == TriVertex{0, 0}) {
        edges.emplace_back(p + d, dir);
        return;
      }
    }
  };
  TriVertex p = e.origin;
  for (int j = 0; j < e.side; ++j, p = p + d_i) add(p, d_i);
  p = e.origin;
  for (int j = 0; j < e.width; ++j, p = p + d_r) add(p, d_r);
  p = e.origin + TriVertex{e.side * d_i.x, e.side * d_i.y};
  for (int j = 0; j < e.width; ++j, p = p + d_l) add(p, d_l);
  return edges;
}

}  // namespace

bool detect_embedded_trapezoid(const Tiling& t, const EmbeddedTrapezoid& e) {
  if (e.side < 1 || e.width < 1) throw error("embedded trapezoid sides must be positive");
  const Domain& dom = *t.domain();

  std::unordered_set<long long> interior;
  interior.reserve(t.lozenges().size() * 2);
  for (const auto& l : t.lozenges()) {
    const auto [base, dir] = l.interior_edge();
    interior.insert(4LL * dom.grid_cell(base) + dir);
  }
  for (const auto& [base, dir] : segment_edges(e)) {
    if (!dom.edge_in_complex(base, dir)) return false;
    if (interior.count(4LL * dom.grid_cell(base) + dir)) return false;
  }
  return true;
}

InterlacingArray extract_boundary_array(const Tiling& t, const EmbeddedTrapezoid& e,
                                        int depth) {
  if (depth < 1 || depth > e.width)
    throw error("extraction depth must lie in [1, width]");
  if (!detect_embedded_trapezoid(t, e))
    throw error("the trapezoid is not embedded in this tiling");

  const int r = ((e.rotation % 6) + 6) % 6;
  const int back = (6 - r) % 6;
  const TriVertex o = rotate60_times(e.origin, back);

  InterlacingArray a;
  a.rows.resize(depth);
  for (const auto& loz : t.lozenges()) {
    Lozenge l = loz;
    for (int i = 0; i < back; ++i) l = rotate60(l);
    if (l.type != LozengeType::e01) continue;
    const int k = l.a.x + 1 - o.x;  // interior edge on line x = o.x + k
    if (k < 1 || k > depth) continue;
    const int y = l.a.y - o.y;
    if (y < 0 || y >= e.side + k) continue;
    a.rows[k - 1].push_back(y);
  }
  for (int k = 1; k <= depth; ++k) {
    auto& row = a.rows[k - 1];
    std::sort(row.begin(), row.end());
    if (static_cast<int>(row.size()) != k)
      throw error("line " + std::to_string(k) + " carries " +
                  std::to_string(row.size()) + " horizontal lozenges, expected " +
                  std::to_string(k));
  }
  if (!a.is_valid()) throw error("extracted array does not interlace");
  return a;
}

}  // namespace lgl

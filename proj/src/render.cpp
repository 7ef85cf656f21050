#include "lgl/render.hpp"

#include <algorithm>
#include <sstream>

namespace lgl {

namespace {

struct Mapper {
  double scale, min_x, max_y;
  // Plane embedding with the SVG y axis flipped so lattice "up" is up.
  std::pair<double, double> operator()(TriVertex v) const {
    const auto [ex, ey] = embed(v);
    return {(ex - min_x) * scale, (max_y - ey) * scale};
  }
};

Mapper make_mapper(const Domain& d, double scale, double& width, double& height) {
  double min_x = 1e300, max_x = -1e300, min_y = 1e300, max_y = -1e300;
  for (const auto& v : d.boundary_cycle()) {
    const auto [ex, ey] = embed(v);
    min_x = std::min(min_x, ex);
    max_x = std::max(max_x, ex);
    min_y = std::min(min_y, ey);
    max_y = std::max(max_y, ey);
  }
  width = (max_x - min_x) * scale;
  height = (max_y - min_y) * scale;
  return {scale, min_x, max_y};
}

void svg_header(std::ostringstream& os, double width, double height) {
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\""
     << width + 2 << "\" height=\"" << height + 2 << "\" viewBox=\"-1 -1 "
     << width + 2 << ' ' << height + 2 << "\">\n";
}

void polygon(std::ostringstream& os, const Mapper& map,
             const std::vector<TriVertex>& pts, const char* style) {
  os << "<polygon points=\"";
  for (const auto& p : pts) {
    const auto [x, y] = map(p);
    os << x << ',' << y << ' ';
  }
  os << "\" " << style << "/>\n";
}

const char* lozenge_style(LozengeType t) {
  switch (t) {
    case LozengeType::e10:
      return "fill=\"#7fc97f\" stroke=\"#333\" stroke-width=\"0.5\"";
    case LozengeType::e01:
      return "fill=\"#beaed4\" stroke=\"#333\" stroke-width=\"0.5\"";
    default:
      return "fill=\"#fdc086\" stroke=\"#333\" stroke-width=\"0.5\"";
  }
}

}  // namespace

std::string render_svg(const Tiling& t, double scale) {
  const Domain& dom = *t.domain();
  double width, height;
  const Mapper map = make_mapper(dom, scale, width, height);

  std::ostringstream os;
  svg_header(os, width, height);
  for (const auto& l : t.lozenges()) {
    const auto quad = l.vertices();
    // Vertex order around the lozenge (the stored order zig-zags).
    std::vector<TriVertex> ring{quad[0], quad[1], quad[3], quad[2]};
    polygon(os, map, ring, lozenge_style(l.type));
  }
  polygon(os, map, dom.boundary_cycle(),
          "fill=\"none\" stroke=\"#000\" stroke-width=\"1.5\"");
  os << "</svg>\n";
  return os.str();
}

std::string render_svg(const Domain& d, double scale) {
  double width, height;
  const Mapper map = make_mapper(d, scale, width, height);
  std::ostringstream os;
  svg_header(os, width, height);
  polygon(os, map, d.boundary_cycle(),
          "fill=\"none\" stroke=\"#000\" stroke-width=\"1.5\"");
  os << "</svg>\n";
  return os.str();
}

}  // namespace lgl

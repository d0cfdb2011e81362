#include <sstream>

#include "plat/knotcodes.hpp"

namespace plat {

namespace {

constexpr int kMargin = 40;
constexpr int kStrandGap = 40;
constexpr int kRowPitch = 60;
constexpr int kBoxHeight = 36;
constexpr int kBridgeRise = 24;

int strand_x(int strand) { return kMargin + (strand - 1) * kStrandGap; }
int row_centre(int row) { return kMargin + kBridgeRise + row * kRowPitch; }

}  // namespace

std::string render_svg(const PlatGrid& grid, const std::optional<VerticalSphereSpec>& overlay) {
  require_valid(grid);
  const int strands = grid.strands();
  const int top = kMargin + kBridgeRise;
  const int bottom = row_centre(grid.n);
  const int width = strand_x(strands) + kMargin;
  const int height = bottom + kBridgeRise + 2 * kMargin;

  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width
      << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n"
      << "<rect x=\"0\" y=\"0\" width=\"" << width << "\" height=\"" << height
      << "\" fill=\"white\"/>\n"
      << "<g stroke=\"black\" stroke-width=\"2\" fill=\"none\">\n";

  for (int s = 1; s <= strands; ++s) {
    svg << "<line x1=\"" << strand_x(s) << "\" y1=\"" << top << "\" x2=\"" << strand_x(s)
        << "\" y2=\"" << bottom << "\"/>\n";
  }
  for (int s = 1; s < strands; s += 2) {
    svg << "<path d=\"M " << strand_x(s) << ' ' << top << " C " << strand_x(s) << ' '
        << top - kBridgeRise << ' ' << strand_x(s + 1) << ' ' << top - kBridgeRise << ' '
        << strand_x(s + 1) << ' ' << top << "\"/>\n";
  }
  for (int s = 1; s <= strands; ++s) {
    const int partner = bottom_partner(grid.m, s, grid.closure);
    if (partner < s) continue;
    // The wrap-around cap of an even plat swings below the other caps.
    const int dip = partner - s == 1 ? kBridgeRise : 2 * kBridgeRise;
    svg << "<path d=\"M " << strand_x(s) << ' ' << bottom << " C " << strand_x(s) << ' '
        << bottom + dip << ' ' << strand_x(partner) << ' ' << bottom + dip << ' '
        << strand_x(partner) << ' ' << bottom << "\"/>\n";
  }
  svg << "</g>\n<g font-family=\"sans-serif\" font-size=\"13\" text-anchor=\"middle\">\n";

  for (int row = 1; row < grid.n; ++row) {
    for (int col = 1; col <= grid.width(row); ++col) {
      const int k = PlatGrid::generator(row, col);
      const int x = strand_x(k) - 8;
      const int y = row_centre(row) - kBoxHeight / 2;
      svg << "<rect class=\"twist\" data-row=\"" << row << "\" data-col=\"" << col
          << "\" x=\"" << x << "\" y=\"" << y << "\" width=\"" << kStrandGap + 16
          << "\" height=\"" << kBoxHeight << "\" fill=\"#eeeeee\" stroke=\"black\"/>\n";
      svg << "<text x=\"" << strand_x(k) + kStrandGap / 2 << "\" y=\"" << row_centre(row) + 5
          << "\">" << grid.at(row, col) << "</text>\n";
    }
  }
  svg << "</g>\n";

  if (overlay) {
    const auto p = arc_positions(overlay->c);
    // p strands lie left of the arc; it runs midway between strands p, p+1.
    auto arc_x = [&](int left_count) {
      return left_count == 0 ? strand_x(1) - kStrandGap / 2
                             : strand_x(left_count) + kStrandGap / 2;
    };
    svg << "<polyline class=\"sphere\" stroke=\"red\" stroke-width=\"2\" fill=\"none\" points=\"";
    svg << arc_x(p.front()) << ',' << top - kBridgeRise - 8;
    for (std::size_t k = 0; k < p.size(); ++k) {
      const int row = static_cast<int>(k) + 1;
      svg << ' ' << arc_x(p[k]) << ',' << row_centre(row) - kBoxHeight / 2 << ' '
          << arc_x(p[k]) << ',' << row_centre(row) + kBoxHeight / 2;
    }
    svg << ' ' << arc_x(p.back()) << ',' << bottom + kBridgeRise + 8 << "\"/>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace plat

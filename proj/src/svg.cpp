#include "tilemealy/svg.hpp"

#include <cstdint>
#include <sstream>

namespace tilemealy {

namespace {

constexpr int kCell = 40;

std::string render_grid(const TileSet& tiles, std::size_t width, std::size_t height,
                        const std::vector<TileIndex>& cells) {
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width * kCell
      << "\" height=\"" << height * kCell << "\" viewBox=\"0 0 " << width * kCell << ' '
      << height * kCell << "\">\n";
  const auto& palette = tiles.palette();
  for (std::size_t y = 0; y < height; ++y) {
    for (std::size_t x = 0; x < width; ++x) {
      const Tile& t = tiles[cells[y * width + x]];
      const std::size_t left = x * kCell;
      const std::size_t top = (height - 1 - y) * kCell;
      const std::size_t right = left + kCell;
      const std::size_t bottom = top + kCell;
      const std::size_t cx = left + kCell / 2;
      const std::size_t cy = top + kCell / 2;
      auto triangle = [&](std::size_t ax, std::size_t ay, std::size_t bx, std::size_t by,
                          Color c) {
        out << "  <polygon points=\"" << ax << ',' << ay << ' ' << bx << ',' << by << ' '
            << cx << ',' << cy << "\" fill=\"" << color_fill(palette.name(c))
            << "\" stroke=\"#222\" stroke-width=\"0.5\"/>\n";
      };
      out << "  <g><title>" << t.name << " (" << x << "," << y << ")</title>\n";
      triangle(left, top, right, top, t.north);
      triangle(right, top, right, bottom, t.east);
      triangle(right, bottom, left, bottom, t.south);
      triangle(left, bottom, left, top, t.west);
      out << "  </g>\n";
    }
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace

std::string color_fill(std::string_view color_name) {
  std::uint32_t h = 2166136261u;
  for (unsigned char c : color_name) {
    h ^= c;
    h *= 16777619u;
  }
  return "hsl(" + std::to_string(h % 360) + ",65%,55%)";
}

std::string render_svg(const TileSet& tiles, const RectTiling& tiling) {
  return render_grid(tiles, tiling.width, tiling.height, tiling.cells);
}

std::string render_svg(const TileSet& tiles, const TorusTiling& tiling) {
  return render_grid(tiles, tiling.px, tiling.py, tiling.cells);
}

}  // namespace tilemealy

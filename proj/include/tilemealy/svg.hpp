#pragma once

#include <string>
#include <string_view>

#include "tilemealy/wang.hpp"

namespace tilemealy {

// "hsl(h,65%,55%)" with h from a stable hash of the colour name.
std::string color_fill(std::string_view color_name);

// Each cell is a square cut into four edge triangles; north is up.
std::string render_svg(const TileSet& tiles, const RectTiling& tiling);
std::string render_svg(const TileSet& tiles, const TorusTiling& tiling);

}  // namespace tilemealy

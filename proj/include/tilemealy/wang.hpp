#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tilemealy/alphabet.hpp"

namespace tilemealy {

using Color = Symbol;
using TileIndex = std::uint32_t;

struct Tile {
  std::string name;
  Color north = 0;
  Color south = 0;
  Color east = 0;
  Color west = 0;

  bool operator==(const Tile&) const = default;
};

// Ordered, nonempty set of uniquely named tiles over a declared palette.
class TileSet {
 public:
  TileSet(Alphabet palette, std::vector<Tile> tiles);

  const Alphabet& palette() const noexcept { return palette_; }
  const std::vector<Tile>& tiles() const noexcept { return tiles_; }
  std::size_t size() const noexcept { return tiles_.size(); }
  const Tile& operator[](TileIndex i) const { return tiles_[i]; }

  std::optional<TileIndex> find(std::string_view name) const;

  bool operator==(const TileSet&) const = default;

 private:
  Alphabet palette_;
  std::vector<Tile> tiles_;
};

// Finite rectangle [0,width) x [0,height); y grows northward.
struct RectTiling {
  std::size_t width = 0;
  std::size_t height = 0;
  std::vector<TileIndex> cells;  // cells[y * width + x]

  TileIndex at(std::size_t x, std::size_t y) const { return cells[y * width + x]; }
  bool operator==(const RectTiling&) const = default;
};

// px x py fundamental domain with wraparound; at() accepts any integer
// coordinates of the periodic extension.
struct TorusTiling {
  std::size_t px = 0;
  std::size_t py = 0;
  std::vector<TileIndex> cells;  // cells[y * px + x]

  TileIndex at(std::int64_t x, std::int64_t y) const;
  bool operator==(const TorusTiling&) const = default;
};

struct Violation {
  // (x, y) and its north or east neighbour (x2, y2), in domain coordinates.
  std::size_t x = 0, y = 0, x2 = 0, y2 = 0;
  bool vertical = false;
  // For vertical pairs: north colour of (x,y) and south colour of (x2,y2);
  // for horizontal pairs: east colour of (x,y) and west colour of (x2,y2).
  Color first = 0, second = 0;

  bool operator==(const Violation&) const = default;
};

std::vector<Violation> validate_tiling(const TileSet& tiles, const RectTiling& tiling);
std::vector<Violation> validate_tiling(const TileSet& tiles, const TorusTiling& tiling);

// First pair s < t (declaration order) sharing north and west colours.
std::optional<std::pair<TileIndex, TileIndex>> is_nw_deterministic(const TileSet& tiles);

enum class SearchStatus { found, none, budget_exceeded };

struct RectSearchResult {
  SearchStatus status = SearchStatus::none;
  std::optional<RectTiling> tiling;
  std::uint64_t nodes = 0;
};

// Exact backtracking. Cells are filled row by row from the northern row
// down, west to east inside a row, so the north and west neighbours of the
// current cell are always placed; boundary edges are free.
RectSearchResult tile_rectangle(const TileSet& tiles, std::size_t width, std::size_t height,
                                std::uint64_t node_budget);

struct LeastNResult {
  // found: n is the least with {0..n}^2 untileable; none: every square up
  // to side max_n+1 is tileable.
  SearchStatus status = SearchStatus::none;
  std::size_t n = 0;
  std::uint64_t nodes = 0;
};

LeastNResult least_untileable_n(const TileSet& tiles, std::size_t max_n,
                                std::uint64_t node_budget);

struct TorusSearchResult {
  SearchStatus status = SearchStatus::none;
  std::optional<TorusTiling> tiling;
  std::uint64_t nodes = 0;
};

// Single period pair.
TorusSearchResult tile_torus(const TileSet& tiles, std::size_t px, std::size_t py,
                             std::uint64_t node_budget);

// Period pairs with px <= max_px, py <= max_py, by increasing px*py then px.
std::vector<std::pair<std::size_t, std::size_t>> torus_periods(std::size_t max_px,
                                                               std::size_t max_py);

TorusSearchResult find_torus_tiling(const TileSet& tiles, std::size_t max_px,
                                    std::size_t max_py, std::uint64_t node_budget);

// Tile set text format:
//   palette: c0 c1 ...
//   name: N S E W         (one line per tile; '#' starts a comment)
TileSet parse_tileset(std::string_view text);
std::string print_tileset(const TileSet& tiles);

}  // namespace tilemealy

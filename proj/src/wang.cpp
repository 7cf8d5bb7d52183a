#include <map>
#include <sstream>

#include "text_util.hpp"
#include "tilemealy/error.hpp"
#include "tilemealy/wang.hpp"

namespace tilemealy {

TileSet::TileSet(Alphabet palette, std::vector<Tile> tiles)
    : palette_(std::move(palette)), tiles_(std::move(tiles)) {
  if (tiles_.empty()) throw Error("tile set must be nonempty");
  for (std::size_t i = 0; i < tiles_.size(); ++i) {
    const Tile& t = tiles_[i];
    if (!is_valid_symbol_name(t.name)) throw Error("invalid tile name '" + t.name + "'");
    for (Color c : {t.north, t.south, t.east, t.west}) {
      if (!palette_.contains(c)) throw Error("tile '" + t.name + "' uses an undeclared color");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (tiles_[j].name == t.name) throw Error("duplicate tile name '" + t.name + "'");
    }
  }
}

std::optional<TileIndex> TileSet::find(std::string_view name) const {
  for (std::size_t i = 0; i < tiles_.size(); ++i) {
    if (tiles_[i].name == name) return static_cast<TileIndex>(i);
  }
  return std::nullopt;
}

TileIndex TorusTiling::at(std::int64_t x, std::int64_t y) const {
  const auto w = static_cast<std::int64_t>(px);
  const auto h = static_cast<std::int64_t>(py);
  const std::int64_t xm = ((x % w) + w) % w;
  const std::int64_t ym = ((y % h) + h) % h;
  return cells[static_cast<std::size_t>(ym * w + xm)];
}

namespace {

void check_pair(const TileSet& tiles, std::size_t x, std::size_t y, TileIndex a,
                std::size_t x2, std::size_t y2, TileIndex b, bool vertical,
                std::vector<Violation>& out) {
  const Color first = vertical ? tiles[a].north : tiles[a].east;
  const Color second = vertical ? tiles[b].south : tiles[b].west;
  if (first != second) out.push_back({x, y, x2, y2, vertical, first, second});
}

void check_cells(const TileSet& tiles, const std::vector<TileIndex>& cells,
                 std::size_t expected) {
  if (cells.size() != expected) throw Error("tiling grid has the wrong number of cells");
  for (TileIndex t : cells) {
    if (t >= tiles.size()) throw Error("tiling refers to an unknown tile");
  }
}

}  // namespace

std::vector<Violation> validate_tiling(const TileSet& tiles, const RectTiling& tiling) {
  check_cells(tiles, tiling.cells, tiling.width * tiling.height);
  std::vector<Violation> out;
  for (std::size_t y = 0; y < tiling.height; ++y) {
    for (std::size_t x = 0; x < tiling.width; ++x) {
      if (y + 1 < tiling.height) {
        check_pair(tiles, x, y, tiling.at(x, y), x, y + 1, tiling.at(x, y + 1), true, out);
      }
      if (x + 1 < tiling.width) {
        check_pair(tiles, x, y, tiling.at(x, y), x + 1, y, tiling.at(x + 1, y), false, out);
      }
    }
  }
  return out;
}

std::vector<Violation> validate_tiling(const TileSet& tiles, const TorusTiling& tiling) {
  if (tiling.px == 0 || tiling.py == 0) throw Error("torus periods must be positive");
  check_cells(tiles, tiling.cells, tiling.px * tiling.py);
  std::vector<Violation> out;
  for (std::size_t y = 0; y < tiling.py; ++y) {
    for (std::size_t x = 0; x < tiling.px; ++x) {
      const std::size_t yn = (y + 1) % tiling.py;
      const std::size_t xe = (x + 1) % tiling.px;
      const auto ix = static_cast<std::int64_t>(x);
      const auto iy = static_cast<std::int64_t>(y);
      check_pair(tiles, x, y, tiling.at(ix, iy), x, yn, tiling.at(ix, iy + 1), true, out);
      check_pair(tiles, x, y, tiling.at(ix, iy), xe, y, tiling.at(ix + 1, iy), false, out);
    }
  }
  return out;
}

std::optional<std::pair<TileIndex, TileIndex>> is_nw_deterministic(const TileSet& tiles) {
  std::map<std::pair<Color, Color>, TileIndex> seen;
  for (TileIndex i = 0; i < tiles.size(); ++i) {
    auto [it, inserted] = seen.emplace(std::pair{tiles[i].north, tiles[i].west}, i);
    if (!inserted) return std::pair{it->second, i};
  }
  return std::nullopt;
}

TileSet parse_tileset(std::string_view text) {
  auto lines = detail::content_lines(text);
  if (lines.empty()) throw ParseError(1, 1, "expected 'palette:' line");
  std::string_view rest;
  std::size_t column = 0;
  if (!detail::strip_key(lines[0], "palette", rest, column)) {
    throw ParseError(lines[0].number, 1, "expected 'palette:' line");
  }
  std::vector<std::string> colors;
  for (const auto& tok : detail::tokens(rest, column)) {
    if (!is_valid_symbol_name(tok.text)) {
      throw ParseError(lines[0].number, tok.column,
                       "invalid color name '" + std::string(tok.text) + "'");
    }
    for (const auto& c : colors) {
      if (c == tok.text) {
        throw ParseError(lines[0].number, tok.column,
                         "duplicate color '" + std::string(tok.text) + "'");
      }
    }
    colors.emplace_back(tok.text);
  }
  if (colors.empty()) throw ParseError(lines[0].number, column, "empty palette");
  Alphabet palette(std::move(colors));

  std::vector<Tile> tiles;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& line = lines[i];
    auto colon = line.text.find(':');
    if (colon == std::string_view::npos) {
      throw ParseError(line.number, 1, "expected 'name: N S E W'");
    }
    auto name_toks = detail::tokens(line.text.substr(0, colon));
    if (name_toks.size() != 1 || !is_valid_symbol_name(name_toks[0].text)) {
      throw ParseError(line.number, 1, "expected a single tile name before ':'");
    }
    for (const auto& t : tiles) {
      if (t.name == name_toks[0].text) {
        throw ParseError(line.number, name_toks[0].column,
                         "duplicate tile '" + std::string(name_toks[0].text) + "'");
      }
    }
    auto edges = detail::tokens(line.text.substr(colon + 1), colon + 2);
    if (edges.size() != 4) {
      throw ParseError(line.number, colon + 2, "expected four colors N S E W");
    }
    Color c[4];
    for (int k = 0; k < 4; ++k) {
      auto found = palette.find(edges[k].text);
      if (!found) {
        throw ParseError(line.number, edges[k].column,
                         "unknown color '" + std::string(edges[k].text) + "'");
      }
      c[k] = *found;
    }
    tiles.push_back({std::string(name_toks[0].text), c[0], c[1], c[2], c[3]});
  }
  if (tiles.empty()) throw ParseError(lines.back().number + 1, 1, "tile set must be nonempty");
  return TileSet(std::move(palette), std::move(tiles));
}

std::string print_tileset(const TileSet& tiles) {
  std::ostringstream out;
  out << "palette:";
  for (const auto& c : tiles.palette().names()) out << ' ' << c;
  out << '\n';
  const auto& p = tiles.palette();
  for (const auto& t : tiles.tiles()) {
    out << t.name << ": " << p.name(t.north) << ' ' << p.name(t.south) << ' '
        << p.name(t.east) << ' ' << p.name(t.west) << '\n';
  }
  return out.str();
}

}  // namespace tilemealy

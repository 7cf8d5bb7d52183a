#include <random>

#include "doctest.h"
#include "test_support.hpp"
#include "tilemealy/error.hpp"
#include "tilemealy/svg.hpp"
#include "tilemealy/wang.hpp"

using namespace tilemealy;
using namespace tilemealy::testing;

namespace {

constexpr std::uint64_t kNodes = 1'000'000;

// Every tile set over `colors` colours with `count` distinct tiles, tiles
// taken in lexicographic order of their edge colours.
std::vector<TileSet> small_tilesets(std::size_t colors, std::size_t count) {
  std::vector<std::string> palette;
  for (std::size_t c = 0; c < colors; ++c) palette.push_back(std::to_string(c));
  std::vector<Tile> all;
  const std::size_t per_tile = colors * colors * colors * colors;
  for (std::size_t code = 0; code < per_tile; ++code) {
    std::size_t c = code;
    Tile t;
    t.name = "t" + std::to_string(code);
    t.north = static_cast<Color>(c % colors), c /= colors;
    t.south = static_cast<Color>(c % colors), c /= colors;
    t.east = static_cast<Color>(c % colors), c /= colors;
    t.west = static_cast<Color>(c % colors);
    all.push_back(t);
  }
  std::vector<TileSet> out;
  if (count == 1) {
    for (const auto& t : all) out.emplace_back(Alphabet(palette), std::vector<Tile>{t});
  } else {
    for (std::size_t i = 0; i < all.size(); ++i) {
      for (std::size_t j = i + 1; j < all.size(); ++j) {
        out.emplace_back(Alphabet(palette), std::vector<Tile>{all[i], all[j]});
      }
    }
  }
  return out;
}

bool brute_force_tileable(const TileSet& tiles, std::size_t w, std::size_t h) {
  RectTiling grid{w, h, std::vector<TileIndex>(w * h, 0)};
  while (true) {
    if (validate_tiling(tiles, grid).empty()) return true;
    std::size_t i = 0;
    while (i < grid.cells.size() && ++grid.cells[i] == tiles.size()) grid.cells[i++] = 0;
    if (i == grid.cells.size()) return false;
  }
}

}  // namespace

TEST_CASE("validate_tiling") {
  auto mono = t_mono();
  CHECK(validate_tiling(mono, RectTiling{3, 3, std::vector<TileIndex>(9, 0)}).empty());

  auto vert = t_vert();
  auto violations = validate_tiling(vert, RectTiling{1, 2, {0, 0}});
  REQUIRE(violations.size() == 1);
  const Violation expected{0, 0, 0, 1, true, 0, 1};
  CHECK(violations.front() == expected);

  auto stripes = t_stripes();
  // Rows a (y=0), b (y=1): a.N=b.S=0, b.N=a.S=1, a.E=a.W=0, b.E=b.W=1.
  TorusTiling torus{1, 2, {0, 1}};
  CHECK(validate_tiling(stripes, torus).empty());
  TorusTiling swapped{1, 2, {0, 0}};
  CHECK(validate_tiling(stripes, swapped).size() == 2);
  CHECK_THROWS_AS(validate_tiling(stripes, RectTiling{2, 2, {0, 1, 7, 0}}), Error);
}

TEST_CASE("is_nw_deterministic") {
  CHECK_FALSE(is_nw_deterministic(t_mono()));
  CHECK_FALSE(is_nw_deterministic(t_stripes()));
  auto collision = tileset("collision.tiles");
  auto conflict = is_nw_deterministic(collision);
  REQUIRE(conflict);
  CHECK(collision[conflict->first].name == "a");
  CHECK(collision[conflict->second].name == "a2");
}

TEST_CASE("tile_rectangle") {
  auto mono = tile_rectangle(t_mono(), 5, 5, kNodes);
  REQUIRE(mono.status == SearchStatus::found);
  CHECK(mono.tiling->cells == std::vector<TileIndex>(25, 0));

  CHECK(tile_rectangle(t_vert(), 2, 2, kNodes).status == SearchStatus::none);
  CHECK(tile_rectangle(t_vert(), 3, 1, kNodes).status == SearchStatus::found);

  auto stripes = t_stripes();
  auto found = tile_rectangle(stripes, 4, 4, kNodes);
  REQUIRE(found.status == SearchStatus::found);
  CHECK(validate_tiling(stripes, *found.tiling).empty());

  CHECK(tile_rectangle(stripes, 4, 4, 3).status == SearchStatus::budget_exceeded);
  CHECK_THROWS_AS(tile_rectangle(stripes, 0, 4, kNodes), Error);
}

TEST_CASE("least_untileable_n") {
  auto vert = least_untileable_n(t_vert(), 5, kNodes);
  CHECK(vert.status == SearchStatus::found);
  CHECK(vert.n == 1);
  CHECK(least_untileable_n(t_mono(), 6, kNodes).status == SearchStatus::none);
  CHECK(least_untileable_n(t_stripes(), 6, kNodes).status == SearchStatus::none);
  CHECK(least_untileable_n(t_stripes(), 6, 5).status == SearchStatus::budget_exceeded);
}

TEST_CASE("torus search") {
  CHECK(torus_periods(2, 3) ==
        std::vector<std::pair<std::size_t, std::size_t>>{{1, 1}, {1, 2}, {2, 1}, {1, 3}, {2, 2}, {2, 3}});

  auto mono = find_torus_tiling(t_mono(), 4, 4, kNodes);
  REQUIRE(mono.status == SearchStatus::found);
  CHECK(mono.tiling->px == 1);
  CHECK(mono.tiling->py == 1);

  auto stripes = t_stripes();
  auto found = find_torus_tiling(stripes, 4, 4, kNodes);
  REQUIRE(found.status == SearchStatus::found);
  CHECK(found.tiling->px == 1);
  CHECK(found.tiling->py == 2);
  CHECK(validate_tiling(stripes, *found.tiling).empty());

  CHECK(find_torus_tiling(t_vert(), 4, 4, kNodes).status == SearchStatus::none);
  CHECK(find_torus_tiling(stripes, 4, 4, 1).status == SearchStatus::budget_exceeded);
}

TEST_CASE("solver agrees with brute force on one- and two-tile sets") {
  std::size_t checked = 0;
  for (std::size_t count : {1, 2}) {
    for (const auto& tiles : small_tilesets(2, count)) {
      for (std::size_t w = 1; w <= 3; ++w) {
        for (std::size_t h = 1; h <= 3; ++h) {
          auto result = tile_rectangle(tiles, w, h, kNodes);
          REQUIRE(result.status != SearchStatus::budget_exceeded);
          CHECK((result.status == SearchStatus::found) == brute_force_tileable(tiles, w, h));
          if (result.tiling) CHECK(validate_tiling(tiles, *result.tiling).empty());
          ++checked;
        }
      }
    }
  }
  CHECK(checked == (16 + 120) * 9);
}

TEST_CASE("tori restrict to valid windows and obey NW propagation") {
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<std::int64_t> offset(-20, 20);
  std::uniform_int_distribution<std::size_t> side(1, 7);
  std::size_t tori = 0;
  for (const auto& tiles : small_tilesets(2, 2)) {
    auto found = find_torus_tiling(tiles, 3, 3, kNodes);
    if (!found.tiling) continue;
    ++tori;
    const auto& torus = *found.tiling;
    REQUIRE(validate_tiling(tiles, torus).empty());
    for (int k = 0; k < 5; ++k) {
      const std::int64_t x0 = offset(rng), y0 = offset(rng);
      RectTiling window{side(rng), side(rng), {}};
      for (std::size_t y = 0; y < window.height; ++y) {
        for (std::size_t x = 0; x < window.width; ++x) {
          window.cells.push_back(torus.at(x0 + static_cast<std::int64_t>(x),
                                          y0 + static_cast<std::int64_t>(y)));
        }
      }
      CHECK(validate_tiling(tiles, window).empty());
    }
    if (is_nw_deterministic(tiles)) continue;
    for (std::int64_t y = 0; y < 6; ++y) {
      for (std::int64_t x = 0; x < 6; ++x) {
        const Tile& north = tiles[torus.at(x, y + 1)];
        const Tile& west = tiles[torus.at(x - 1, y)];
        std::size_t fits = 0;
        for (const auto& t : tiles.tiles()) {
          fits += t.north == north.south && t.west == west.east;
        }
        CHECK(fits == 1);
      }
    }
  }
  CHECK(tori > 50);
}

TEST_CASE("untileable squares stay untileable when enlarged") {
  std::size_t untileable = 0;
  for (const auto& tiles : small_tilesets(2, 2)) {
    auto least = least_untileable_n(tiles, 3, kNodes);
    if (least.status != SearchStatus::found) continue;
    ++untileable;
    for (std::size_t n = least.n; n <= least.n + 2; ++n) {
      CHECK(tile_rectangle(tiles, n + 1, n + 1, kNodes).status == SearchStatus::none);
    }
  }
  CHECK(untileable > 0);
}

TEST_CASE("tile set text format") {
  auto stripes = t_stripes();
  CHECK(stripes.size() == 2);
  CHECK(stripes[1].name == "b");
  CHECK(stripes[1].north == 1);
  const std::string printed = print_tileset(stripes);
  CHECK(printed == "palette: 0 1\na: 0 1 0 0\nb: 1 0 1 1\n");
  CHECK(parse_tileset(printed) == stripes);
  try {
    parse_tileset(read_fixture("unknown_color.tiles"));
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 10);
  }
  CHECK_THROWS_AS(parse_tileset("palette: 0\na: 0 0 0\n"), ParseError);
  CHECK_THROWS_AS(parse_tileset("palette: 0\na: 0 0 0 0\na: 0 0 0 0\n"), ParseError);
  CHECK_THROWS_AS(parse_tileset("palette: 0\n"), ParseError);
}

TEST_CASE("svg rendering") {
  auto stripes = t_stripes();
  auto svg = render_svg(stripes, TorusTiling{1, 2, {0, 1}});
  std::size_t polygons = 0;
  for (auto pos = svg.find("<polygon"); pos != std::string::npos; pos = svg.find("<polygon", pos + 1)) {
    ++polygons;
  }
  CHECK(polygons == 8);
  CHECK(svg.find(color_fill("0")) != std::string::npos);
  CHECK(color_fill("0") == color_fill("0"));
  CHECK(svg == render_svg(stripes, TorusTiling{1, 2, {0, 1}}));
}

#include <algorithm>
#include <map>

#include "tilemealy/error.hpp"
#include "tilemealy/wang.hpp"

namespace tilemealy {

namespace {

// Candidate lists keyed by the colours imposed by already placed north and
// west neighbours. For NW-deterministic sets the doubly constrained lists
// have at most one entry.
class CandidateIndex {
 public:
  explicit CandidateIndex(const TileSet& tiles) {
    for (TileIndex i = 0; i < tiles.size(); ++i) {
      all_.push_back(i);
      by_north_[tiles[i].north].push_back(i);
      by_west_[tiles[i].west].push_back(i);
      by_both_[{tiles[i].north, tiles[i].west}].push_back(i);
    }
  }

  const std::vector<TileIndex>& get(std::optional<Color> north,
                                    std::optional<Color> west) const {
    if (north && west) return lookup(by_both_, std::pair{*north, *west});
    if (north) return lookup(by_north_, *north);
    if (west) return lookup(by_west_, *west);
    return all_;
  }

 private:
  template <typename Map, typename Key>
  const std::vector<TileIndex>& lookup(const Map& map, const Key& key) const {
    auto it = map.find(key);
    return it == map.end() ? empty_ : it->second;
  }

  std::vector<TileIndex> all_;
  std::vector<TileIndex> empty_;
  std::map<Color, std::vector<TileIndex>> by_north_;
  std::map<Color, std::vector<TileIndex>> by_west_;
  std::map<std::pair<Color, Color>, std::vector<TileIndex>> by_both_;
};

class Backtracker {
 public:
  Backtracker(const TileSet& tiles, std::size_t width, std::size_t height, bool wrap,
              std::uint64_t node_budget)
      : tiles_(tiles),
        index_(tiles),
        width_(width),
        height_(height),
        wrap_(wrap),
        budget_(node_budget),
        cells_(width * height, 0) {}

  SearchStatus run() {
    std::vector<std::size_t> choice(width_ * height_, 0);
    std::size_t pos = 0;
    const std::size_t total = width_ * height_;
    // choice[pos] is the next candidate to try at pos.
    while (true) {
      if (pos == total) return SearchStatus::found;
      const auto [x, y] = coords(pos);
      const auto& candidates = candidates_at(x, y);
      bool placed = false;
      while (choice[pos] < candidates.size()) {
        TileIndex t = candidates[choice[pos]++];
        if (nodes_ >= budget_) return SearchStatus::budget_exceeded;
        ++nodes_;
        if (wrap_ && !wrap_ok(x, y, t)) continue;
        cells_[y * width_ + x] = t;
        placed = true;
        break;
      }
      if (placed) {
        ++pos;
        continue;
      }
      choice[pos] = 0;
      if (pos == 0) return SearchStatus::none;
      --pos;
    }
  }

  std::uint64_t nodes() const noexcept { return nodes_; }
  const std::vector<TileIndex>& cells() const noexcept { return cells_; }

 private:
  // Rows from the north (y = height-1) down to y = 0, west to east.
  std::pair<std::size_t, std::size_t> coords(std::size_t pos) const {
    return {pos % width_, height_ - 1 - pos / width_};
  }

  const std::vector<TileIndex>& candidates_at(std::size_t x, std::size_t y) const {
    std::optional<Color> north, west;
    if (y + 1 < height_) north = tiles_[cells_[(y + 1) * width_ + x]].south;
    if (x > 0) west = tiles_[cells_[y * width_ + x - 1]].east;
    return index_.get(north, west);
  }

  // Wraparound neighbours that are already placed (or the cell itself when
  // a period is 1).
  bool wrap_ok(std::size_t x, std::size_t y, TileIndex t) const {
    if (x + 1 == width_) {
      const TileIndex east = width_ == 1 ? t : cells_[y * width_];
      if (tiles_[t].east != tiles_[east].west) return false;
    }
    if (y == 0) {
      const TileIndex south = height_ == 1 ? t : cells_[(height_ - 1) * width_ + x];
      if (tiles_[t].south != tiles_[south].north) return false;
    }
    return true;
  }

  const TileSet& tiles_;
  CandidateIndex index_;
  std::size_t width_;
  std::size_t height_;
  bool wrap_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::vector<TileIndex> cells_;
};

}  // namespace

RectSearchResult tile_rectangle(const TileSet& tiles, std::size_t width, std::size_t height,
                                std::uint64_t node_budget) {
  if (width == 0 || height == 0) throw Error("rectangle dimensions must be positive");
  Backtracker search(tiles, width, height, false, node_budget);
  RectSearchResult result;
  result.status = search.run();
  result.nodes = search.nodes();
  if (result.status == SearchStatus::found) {
    result.tiling = RectTiling{width, height, search.cells()};
  }
  return result;
}

LeastNResult least_untileable_n(const TileSet& tiles, std::size_t max_n,
                                std::uint64_t node_budget) {
  LeastNResult result;
  for (std::size_t n = 0; n <= max_n; ++n) {
    auto square = tile_rectangle(tiles, n + 1, n + 1, node_budget - result.nodes);
    result.nodes += square.nodes;
    if (square.status == SearchStatus::budget_exceeded) {
      result.status = SearchStatus::budget_exceeded;
      result.n = n;
      return result;
    }
    if (square.status == SearchStatus::none) {
      result.status = SearchStatus::found;
      result.n = n;
      return result;
    }
  }
  result.status = SearchStatus::none;
  result.n = max_n;
  return result;
}

TorusSearchResult tile_torus(const TileSet& tiles, std::size_t px, std::size_t py,
                             std::uint64_t node_budget) {
  if (px == 0 || py == 0) throw Error("torus periods must be positive");
  Backtracker search(tiles, px, py, true, node_budget);
  TorusSearchResult result;
  result.status = search.run();
  result.nodes = search.nodes();
  if (result.status == SearchStatus::found) {
    result.tiling = TorusTiling{px, py, search.cells()};
  }
  return result;
}

std::vector<std::pair<std::size_t, std::size_t>> torus_periods(std::size_t max_px,
                                                               std::size_t max_py) {
  std::vector<std::pair<std::size_t, std::size_t>> periods;
  for (std::size_t px = 1; px <= max_px; ++px) {
    for (std::size_t py = 1; py <= max_py; ++py) periods.emplace_back(px, py);
  }
  std::stable_sort(periods.begin(), periods.end(), [](const auto& a, const auto& b) {
    const std::size_t area_a = a.first * a.second;
    const std::size_t area_b = b.first * b.second;
    if (area_a != area_b) return area_a < area_b;
    return a.first < b.first;
  });
  return periods;
}

TorusSearchResult find_torus_tiling(const TileSet& tiles, std::size_t max_px,
                                    std::size_t max_py, std::uint64_t node_budget) {
  if (max_px == 0 || max_py == 0) throw Error("torus bounds must be positive");
  TorusSearchResult result;
  for (const auto& [px, py] : torus_periods(max_px, max_py)) {
    auto attempt = tile_torus(tiles, px, py, node_budget - result.nodes);
    result.nodes += attempt.nodes;
    if (attempt.status == SearchStatus::found) {
      result.status = SearchStatus::found;
      result.tiling = std::move(attempt.tiling);
      return result;
    }
    if (attempt.status == SearchStatus::budget_exceeded) {
      result.status = SearchStatus::budget_exceeded;
      return result;
    }
  }
  result.status = SearchStatus::none;
  return result;
}

}  // namespace tilemealy

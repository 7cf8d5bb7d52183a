#include <algorithm>

#include "tilemealy/error.hpp"
#include "tilemealy/reduction.hpp"

namespace tilemealy {

namespace {

std::string period_label(std::size_t px, std::size_t py) {
  return std::to_string(px) + "x" + std::to_string(py);
}

}  // namespace

SemidecideResult semidecide(const TileSet& tiles, const SemidecideBudget& budget) {
  if (budget.max_px == 0 || budget.max_py == 0 || budget.quantum == 0) {
    throw Error("semidecide budgets must be positive");
  }
  const ReductionAutomaton reduction = build_reduction(tiles);
  const auto periods = torus_periods(budget.max_px, budget.max_py);

  SemidecideResult result;
  std::size_t next_period = 0;
  std::size_t next_square = 0;
  bool torus_open = true;
  bool square_open = true;
  bool torus_turn = true;

  while ((torus_open || square_open) && result.nodes < budget.node_budget) {
    if (!torus_open) torus_turn = false;
    if (!square_open) torus_turn = true;
    const std::uint64_t quantum =
        std::min<std::uint64_t>(budget.quantum, budget.node_budget - result.nodes);
    ++result.steps;

    if (torus_turn) {
      const auto [px, py] = periods[next_period++];
      auto attempt = tile_torus(tiles, px, py, quantum);
      result.nodes += attempt.nodes;
      if (next_period == periods.size()) torus_open = false;
      if (attempt.status == SearchStatus::found) {
        result.log.push_back("torus " + period_label(px, py) + ": found");
        result.status = SemidecideStatus::infinite_certified;
        result.lemma1 = verify_lemma1(reduction, *attempt.tiling, budget.lemma1,
                                      budget.semigroup);
        result.torus = std::move(attempt.tiling);
        return result;
      }
      // A period whose search ran out of quantum is skipped; any torus
      // certifies, so later periods are still worth trying.
      result.log.push_back("torus " + period_label(px, py) + ": " +
                           (attempt.status == SearchStatus::none ? "none" : "budget_exceeded"));
    } else {
      const std::size_t n = next_square++;
      auto attempt = tile_rectangle(tiles, n + 1, n + 1, quantum);
      result.nodes += attempt.nodes;
      if (next_square > budget.max_n) square_open = false;
      if (attempt.status == SearchStatus::none) {
        result.log.push_back("square " + std::to_string(n) + ": untileable");
        result.status = SemidecideStatus::finite_certified;
        result.n = n;
        try {
          result.bound = finiteness_bound(tiles, n);
        } catch (const CapExceeded&) {
          result.log.push_back("finiteness bound too large to materialise");
        }
        auto verdict = enumerate(reduction.machine, budget.semigroup);
        if (auto* finite = std::get_if<Finite>(&verdict)) result.exact_size = finite->size();
        return result;
      }
      if (attempt.status == SearchStatus::budget_exceeded) {
        // The least untileable square can no longer be certified.
        square_open = false;
        result.log.push_back("square " + std::to_string(n) + ": budget_exceeded");
      } else {
        result.log.push_back("square " + std::to_string(n) + ": tileable");
      }
    }
    torus_turn = !torus_turn;
  }
  return result;
}

}  // namespace tilemealy

#pragma once

#include "json.hpp"

#include "tilemealy/reduction.hpp"
#include "tilemealy/semigroup.hpp"
#include "tilemealy/wang.hpp"

namespace tilemealy {

using Json = nlohmann::json;

// Tilings are written as {"kind", "width", "height", "grid"} where grid[y][x]
// holds tile names and grid[0] is the southernmost row.
Json tiling_to_json(const TileSet& tiles, const RectTiling& tiling);
Json tiling_to_json(const TileSet& tiles, const TorusTiling& tiling);
RectTiling rect_tiling_from_json(const TileSet& tiles, const Json& json);
TorusTiling torus_tiling_from_json(const TileSet& tiles, const Json& json);

Json violations_to_json(const TileSet& tiles, const std::vector<Violation>& violations);
const char* status_name(SearchStatus status);

Json budget_to_json(const Budget& budget);
Json verdict_to_json(const FinitenessVerdict& verdict, const Budget& budget);
Json order_to_json(const MealyAutomaton& machine, const StateWord& f, const StateWord& g,
                   std::size_t max_n, const OrderResult& result);

Json lemma1_to_json(const ReductionAutomaton& reduction, const Lemma1Report& report);
Json claim_to_json(const ReductionAutomaton& reduction, const ClaimReport& report);
Json window_to_json(const ReductionAutomaton& reduction, const TilingWindow& window);
Json semidecide_to_json(const ReductionAutomaton& reduction, const SemidecideBudget& budget,
                        const SemidecideResult& result);

}  // namespace tilemealy

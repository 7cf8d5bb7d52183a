#include "tilemealy/report.hpp"

#include "tilemealy/error.hpp"

namespace tilemealy {

namespace {

Json grid_to_json(const TileSet& tiles, std::size_t width, std::size_t height,
                  const std::vector<TileIndex>& cells) {
  Json grid = Json::array();
  for (std::size_t y = 0; y < height; ++y) {
    Json row = Json::array();
    for (std::size_t x = 0; x < width; ++x) row.push_back(tiles[cells[y * width + x]].name);
    grid.push_back(std::move(row));
  }
  return grid;
}

std::vector<TileIndex> grid_from_json(const TileSet& tiles, const Json& json,
                                      std::size_t& width, std::size_t& height) {
  const Json& grid = json.at("grid");
  height = grid.size();
  width = height == 0 ? 0 : grid.at(0).size();
  if (width == 0 || height == 0) throw Error("tiling grid is empty");
  std::vector<TileIndex> cells;
  for (const auto& row : grid) {
    if (row.size() != width) throw Error("tiling grid rows differ in length");
    for (const auto& name : row) {
      auto t = tiles.find(name.get<std::string>());
      if (!t) throw Error("tiling refers to unknown tile '" + name.get<std::string>() + "'");
      cells.push_back(*t);
    }
  }
  return cells;
}

Json word_to_json(const Alphabet& alphabet, std::span<const Symbol> word) {
  Json out = Json::array();
  for (Symbol s : word) out.push_back(alphabet.name(s));
  return out;
}

Json elements_to_json(const std::vector<Element>& elements) {
  Json out = Json::array();
  for (const auto& e : elements) out.push_back(e.transformation.digest());
  return out;
}

}  // namespace

Json tiling_to_json(const TileSet& tiles, const RectTiling& tiling) {
  return Json{{"kind", "rect"},
              {"width", tiling.width},
              {"height", tiling.height},
              {"grid", grid_to_json(tiles, tiling.width, tiling.height, tiling.cells)}};
}

Json tiling_to_json(const TileSet& tiles, const TorusTiling& tiling) {
  return Json{{"kind", "torus"},
              {"width", tiling.px},
              {"height", tiling.py},
              {"grid", grid_to_json(tiles, tiling.px, tiling.py, tiling.cells)}};
}

RectTiling rect_tiling_from_json(const TileSet& tiles, const Json& json) {
  RectTiling t;
  t.cells = grid_from_json(tiles, json, t.width, t.height);
  return t;
}

TorusTiling torus_tiling_from_json(const TileSet& tiles, const Json& json) {
  TorusTiling t;
  t.cells = grid_from_json(tiles, json, t.px, t.py);
  return t;
}

Json violations_to_json(const TileSet& tiles, const std::vector<Violation>& violations) {
  Json out = Json::array();
  for (const auto& v : violations) {
    out.push_back({{"cell", {v.x, v.y}},
                   {"neighbour", {v.x2, v.y2}},
                   {"direction", v.vertical ? "north" : "east"},
                   {"colors", {tiles.palette().name(v.first), tiles.palette().name(v.second)}}});
  }
  return out;
}

const char* status_name(SearchStatus status) {
  switch (status) {
    case SearchStatus::found:
      return "found";
    case SearchStatus::none:
      return "none";
    case SearchStatus::budget_exceeded:
      return "budget_exceeded";
  }
  return "unknown";
}

Json budget_to_json(const Budget& budget) {
  return Json{{"max_elements", budget.max_elements},
              {"max_power_states", budget.max_power_states},
              {"max_word_length", budget.max_word_length}};
}

Json verdict_to_json(const FinitenessVerdict& verdict, const Budget& budget) {
  Json out;
  out["budget"] = budget_to_json(budget);
  if (const auto* finite = std::get_if<Finite>(&verdict)) {
    out["verdict"] = "finite";
    out["size"] = finite->size();
    out["elements"] = elements_to_json(finite->elements);
  } else if (const auto* exceeded = std::get_if<BudgetExceeded>(&verdict)) {
    out["verdict"] = "budget_exceeded";
    out["size"] = exceeded->elements.size();
    out["elements"] = elements_to_json(exceeded->elements);
    out["reason"] = exceeded->reason;
    out["word_length"] = exceeded->word_length;
  } else {
    out["verdict"] = "infinite_certified";
    out["certificate"] = std::get<InfiniteCertified>(verdict).certificate;
  }
  return out;
}

Json order_to_json(const MealyAutomaton& machine, const StateWord& f, const StateWord& g,
                   std::size_t max_n, const OrderResult& result) {
  Json out{{"f", word_to_json(machine.states(), f)},
           {"g", word_to_json(machine.states(), g)},
           {"max_n", max_n},
           {"reason", result.reason},
           {"powers_examined", result.powers_examined}};
  out["n"] = result.n ? Json(*result.n) : Json(nullptr);
  return out;
}

Json lemma1_to_json(const ReductionAutomaton& reduction, const Lemma1Report& report) {
  const Alphabet& letters = reduction.machine.letters();
  Json out{{"lemma", "lemma1"},
           {"parameters",
            {{"M", report.params.max_m},
             {"N", report.params.max_n},
             {"L", report.params.prefix_length}}},
           {"pass", report.pass()},
           {"prefix_identity", report.prefix_identity},
           {"digests_distinct", report.digests_distinct},
           {"pairs_checked", report.pairs_checked},
           {"digests", report.digests}};
  if (report.counterexample) {
    const auto& c = *report.counterexample;
    out["counterexample"] = {{"m", c.m},
                             {"n", c.n},
                             {"expected", word_to_json(letters, c.expected)},
                             {"actual", word_to_json(letters, c.actual)}};
  } else if (report.equal_powers) {
    out["counterexample"] = {{"equal_powers", {report.equal_powers->first,
                                               report.equal_powers->second}}};
  }
  return out;
}

Json claim_to_json(const ReductionAutomaton& reduction, const ClaimReport& report) {
  const Alphabet& letters = reduction.machine.letters();
  const auto& p = report.params;
  Json params{{"n", p.n},
              {"mode", p.mode == ClaimMode::exhaustive ? "exhaustive" : "sample"},
              {"L", p.suffix_length}};
  if (p.mode == ClaimMode::sample) {
    params["samples"] = p.samples;
    params["seed"] = p.seed;
  } else {
    params["cap"] = p.exhaustive_cap;
  }
  Json out{{"lemma", "claim"}, {"parameters", params}, {"pass", report.pass()},
           {"checked", report.checked}};
  if (report.counterexample) {
    const auto& c = *report.counterexample;
    out["counterexample"] = {{"u", word_to_json(reduction.machine.states(), c.u)},
                             {"p", word_to_json(letters, c.p)},
                             {"q", word_to_json(letters, c.q)},
                             {"actual", word_to_json(letters, c.actual)}};
  }
  return out;
}

Json window_to_json(const ReductionAutomaton& reduction, const TilingWindow& window) {
  const Alphabet& letters = reduction.machine.letters();
  Json rows = Json::array();
  for (const auto& row : window.rows) rows.push_back(word_to_json(letters, row));
  Json cells = Json::array();
  for (const auto& [pos, tile] : window.cells) {
    cells.push_back({{"x", pos.first}, {"y", pos.second}, {"tile", reduction.tiles[tile].name}});
  }
  std::size_t valid_checks = 0;
  for (const auto& c : window.checks) valid_checks += c.valid ? 1 : 0;
  return Json{{"rows", rows},
              {"cells", cells},
              {"local_checks", window.checks.size()},
              {"local_checks_valid", valid_checks},
              {"violations", window.violations},
              {"valid", window.valid()}};
}

Json semidecide_to_json(const ReductionAutomaton& reduction, const SemidecideBudget& budget,
                        const SemidecideResult& result) {
  Json out;
  Json certificate;
  switch (result.status) {
    case SemidecideStatus::infinite_certified:
      out["status"] = "infinite_certified";
      certificate["torus"] = tiling_to_json(reduction.tiles, *result.torus);
      if (result.lemma1) certificate["lemma1"] = lemma1_to_json(reduction, *result.lemma1);
      break;
    case SemidecideStatus::finite_certified:
      out["status"] = "finite_certified";
      certificate["n"] = *result.n;
      certificate["bound"] = result.bound ? Json(result.bound->str()) : Json(nullptr);
      certificate["exact_size"] = result.exact_size ? Json(*result.exact_size) : Json(nullptr);
      break;
    case SemidecideStatus::unknown:
      out["status"] = "unknown";
      break;
  }
  out["certificate"] = result.status == SemidecideStatus::unknown ? Json(nullptr) : certificate;
  out["budgets_spent"] = {{"nodes", result.nodes},
                          {"steps", result.steps},
                          {"node_budget", budget.node_budget},
                          {"quantum", budget.quantum}};
  out["log"] = result.log;
  return out;
}

}  // namespace tilemealy

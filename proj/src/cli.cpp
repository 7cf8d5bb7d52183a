#include "tilemealy/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "tilemealy/error.hpp"
#include "tilemealy/reduction.hpp"
#include "tilemealy/report.hpp"
#include "tilemealy/svg.hpp"

namespace tilemealy {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write '" + path + "'");
  out << contents;
}

// Budgets and output settings shared by the subcommands.
struct RunConfig {
  std::string input;
  std::string second_input;
  std::size_t width = 0;
  std::size_t height = 0;
  std::size_t max_elements = 10000;
  std::size_t max_power_states = 1u << 16;
  std::uint64_t node_budget = 2'000'000;
  std::uint64_t quantum = 200'000;
  std::size_t max_n = 6;
  std::vector<std::size_t> max_periods;
  std::size_t max_px = 6;
  std::size_t max_py = 6;
  std::size_t prefix_len = 0;  // 0: command default
  std::size_t lemma_m = 8;
  std::size_t lemma_n = 8;
  std::size_t claim_n = 0;  // 0: least untileable n
  std::string claim_mode = "exhaustive";
  std::size_t samples = 10000;
  std::uint64_t seed = 20130101;
  std::string f;
  std::string g;
  std::string json_path;
  std::string svg_path;
  std::string out_path;
  std::string format = "json";
  bool sink = false;

  Budget budget() const {
    Budget b;
    b.max_elements = max_elements;
    b.max_power_states = max_power_states;
    return b;
  }
};

struct Emitter {
  const RunConfig& config;
  std::ostream& out;

  void flatten(const Json& j, const std::string& prefix, std::ostream& os) const {
    if (j.is_object()) {
      for (const auto& [key, value] : j.items()) {
        flatten(value, prefix.empty() ? key : prefix + "." + key, os);
      }
    } else {
      os << prefix << ": " << j.dump() << '\n';
    }
  }

  void operator()(const Json& report) const {
    const std::string text = report.dump(2) + "\n";
    if (config.format == "text") {
      flatten(report, "", out);
    } else {
      out << text;
    }
    if (!config.json_path.empty()) write_file(config.json_path, text);
  }
};

void maybe_svg(const RunConfig& config, const std::string& svg) {
  if (!config.svg_path.empty()) write_file(config.svg_path, svg);
}

int exit_for(SearchStatus status) {
  return status == SearchStatus::budget_exceeded ? kExitUnknown : kExitOk;
}

Json tile_names(const TileSet& tiles, TileIndex a, TileIndex b) {
  return Json::array({tiles[a].name, tiles[b].name});
}

int cmd_nw_check(const RunConfig& config, const Emitter& emit) {
  TileSet tiles = parse_tileset(read_file(config.input));
  auto conflict = is_nw_deterministic(tiles);
  Json report{{"command", "nw-check"}, {"nw_deterministic", !conflict.has_value()}};
  if (conflict) report["conflict"] = tile_names(tiles, conflict->first, conflict->second);
  emit(report);
  return conflict ? kExitNegative : kExitOk;
}

int cmd_tile(const RunConfig& config, const Emitter& emit) {
  TileSet tiles = parse_tileset(read_file(config.input));
  if (config.width == 0 || config.height == 0) throw CLI::ValidationError("dims", "must be positive");
  auto result = tile_rectangle(tiles, config.width, config.height, config.node_budget);
  Json report{{"command", "tile"},
              {"width", config.width},
              {"height", config.height},
              {"status", status_name(result.status)},
              {"nodes", result.nodes}};
  report["tiling"] = result.tiling ? tiling_to_json(tiles, *result.tiling) : Json(nullptr);
  if (result.tiling) maybe_svg(config, render_svg(tiles, *result.tiling));
  emit(report);
  return exit_for(result.status);
}

int cmd_torus(const RunConfig& config, const Emitter& emit) {
  TileSet tiles = parse_tileset(read_file(config.input));
  auto result = find_torus_tiling(tiles, config.max_px, config.max_py, config.node_budget);
  Json report{{"command", "torus"},
              {"max_px", config.max_px},
              {"max_py", config.max_py},
              {"status", result.status == SearchStatus::none ? "none_up_to_max"
                                                             : status_name(result.status)},
              {"nodes", result.nodes}};
  report["tiling"] = result.tiling ? tiling_to_json(tiles, *result.tiling) : Json(nullptr);
  if (result.tiling) maybe_svg(config, render_svg(tiles, *result.tiling));
  emit(report);
  return exit_for(result.status);
}

int cmd_least_n(const RunConfig& config, const Emitter& emit) {
  TileSet tiles = parse_tileset(read_file(config.input));
  auto result = least_untileable_n(tiles, config.max_n, config.node_budget);
  Json report{{"command", "least-n"}, {"max_n", config.max_n}, {"nodes", result.nodes}};
  switch (result.status) {
    case SearchStatus::found:
      report["status"] = "found";
      report["n"] = result.n;
      break;
    case SearchStatus::none:
      report["status"] = "none_up_to_max";
      report["n"] = nullptr;
      break;
    case SearchStatus::budget_exceeded:
      report["status"] = "budget_exceeded";
      report["n"] = nullptr;
      report["stalled_at"] = result.n;
      break;
  }
  emit(report);
  return exit_for(result.status);
}

int cmd_reduce(const RunConfig& config, std::ostream& out) {
  TileSet tiles = parse_tileset(read_file(config.input));
  ReductionAutomaton reduction = build_reduction(tiles);
  const std::string text = print_automaton(config.sink ? add_sink(reduction).machine
                                                       : reduction.machine);
  if (config.out_path.empty()) {
    out << text;
  } else {
    write_file(config.out_path, text);
  }
  return kExitOk;
}

int cmd_enumerate(const RunConfig& config, const Emitter& emit) {
  MealyAutomaton machine = parse_automaton(read_file(config.input));
  const Budget budget = config.budget();
  Json report = verdict_to_json(enumerate(machine, budget), budget);
  report["command"] = "enumerate";
  emit(report);
  return kExitOk;
}

int cmd_order(const RunConfig& config, const Emitter& emit) {
  MealyAutomaton machine = parse_automaton(read_file(config.input));
  StateWord f = machine.parse_states(config.f);
  StateWord g = machine.parse_states(config.g);
  if (f.empty() || g.empty()) throw CLI::ValidationError("--f/--g", "must be nonempty");
  auto result = order_search(machine, f, g, config.max_n, config.budget());
  Json report = order_to_json(machine, f, g, config.max_n, result);
  report["command"] = "order";
  emit(report);
  return kExitOk;
}

Lemma1Params lemma1_params(const RunConfig& config) {
  Lemma1Params p;
  p.max_m = config.lemma_m;
  p.max_n = config.lemma_n;
  p.prefix_length = config.prefix_len ? config.prefix_len : 4 * (p.max_m + p.max_n);
  return p;
}

int cmd_verify_lemma1(const RunConfig& config, const Emitter& emit) {
  TileSet tiles = parse_tileset(read_file(config.input));
  ReductionAutomaton reduction = build_reduction(tiles);
  std::optional<TorusTiling> torus;
  std::uint64_t nodes = 0;
  if (!config.second_input.empty()) {
    torus = torus_tiling_from_json(tiles, Json::parse(read_file(config.second_input)));
  } else {
    auto found = find_torus_tiling(tiles, config.max_px, config.max_py, config.node_budget);
    nodes = found.nodes;
    if (!found.tiling) {
      emit(Json{{"lemma", "lemma1"},
                {"status", "unknown"},
                {"reason", found.status == SearchStatus::none ? "no torus up to max periods"
                                                              : "node budget exhausted"},
                {"nodes", nodes}});
      return kExitUnknown;
    }
    torus = std::move(found.tiling);
  }
  Lemma1Report result;
  try {
    result = verify_lemma1(reduction, *torus, lemma1_params(config), config.budget());
  } catch (const PreconditionError& e) {
    emit(Json{{"lemma", "lemma1"}, {"status", "precondition_failed"}, {"reason", e.what()}});
    return kExitPrecondition;
  }
  Json report = lemma1_to_json(reduction, result);
  report["torus"] = tiling_to_json(tiles, *torus);
  report["nodes"] = nodes;
  emit(report);
  return result.pass() ? kExitOk : kExitNegative;
}

int cmd_verify_claim(const RunConfig& config, const Emitter& emit) {
  TileSet tiles = parse_tileset(read_file(config.input));
  ReductionAutomaton reduction = build_reduction(tiles);
  ClaimParams params;
  params.suffix_length = config.prefix_len ? config.prefix_len : 3;
  params.samples = config.samples;
  params.seed = config.seed;
  params.node_budget = config.node_budget;
  params.mode = config.claim_mode == "sample" ? ClaimMode::sample : ClaimMode::exhaustive;
  std::uint64_t nodes = 0;
  if (config.claim_n != 0) {
    params.n = config.claim_n;
  } else {
    auto least = least_untileable_n(tiles, config.max_n, config.node_budget);
    nodes = least.nodes;
    if (least.status != SearchStatus::found) {
      emit(Json{{"lemma", "claim"},
                {"status", "unknown"},
                {"reason", least.status == SearchStatus::none
                               ? "every square up to max_n is tileable"
                               : "node budget exhausted"},
                {"nodes", nodes}});
      return kExitUnknown;
    }
    params.n = least.n;
  }
  ClaimReport result;
  try {
    result = verify_claim(reduction, params);
  } catch (const PreconditionError& e) {
    emit(Json{{"lemma", "claim"}, {"status", "precondition_failed"}, {"reason", e.what()}});
    return kExitPrecondition;
  } catch (const CapExceeded& e) {
    emit(Json{{"lemma", "claim"}, {"status", "unknown"}, {"reason", e.what()}});
    return kExitUnknown;
  }
  Json report = claim_to_json(reduction, result);
  try {
    report["bound"] = finiteness_bound(tiles, params.n).str();
  } catch (const CapExceeded&) {
    report["bound"] = nullptr;
  }
  report["nodes"] = nodes;
  emit(report);
  return result.pass() ? kExitOk : kExitNegative;
}

int cmd_semidecide(const RunConfig& config, const Emitter& emit) {
  TileSet tiles = parse_tileset(read_file(config.input));
  ReductionAutomaton reduction = build_reduction(tiles);
  SemidecideBudget budget;
  budget.max_px = config.max_px;
  budget.max_py = config.max_py;
  budget.max_n = config.max_n;
  budget.node_budget = config.node_budget;
  budget.quantum = config.quantum;
  budget.semigroup = config.budget();
  budget.lemma1 = lemma1_params(config);
  auto result = semidecide(tiles, budget);
  Json report = semidecide_to_json(reduction, budget, result);
  if (result.torus) maybe_svg(config, render_svg(tiles, *result.torus));
  emit(report);
  if (result.status == SemidecideStatus::unknown) return kExitUnknown;
  if (result.lemma1 && !result.lemma1->pass()) return kExitNegative;
  return kExitOk;
}

int cmd_render(const RunConfig& config, std::ostream& out) {
  TileSet tiles = parse_tileset(read_file(config.input));
  Json json = Json::parse(read_file(config.second_input));
  if (json.contains("tiling")) json = json.at("tiling");
  if (json.is_null()) throw Error("report holds no tiling");
  if (json.contains("torus")) json = json.at("torus");
  std::string svg = json.value("kind", "rect") == "torus"
                        ? render_svg(tiles, torus_tiling_from_json(tiles, json))
                        : render_svg(tiles, rect_tiling_from_json(tiles, json));
  if (config.svg_path.empty()) {
    out << svg;
  } else {
    write_file(config.svg_path, svg);
  }
  return kExitOk;
}

void apply_env_default(RunConfig& config) {
  if (const char* env = std::getenv("TILEMEALY_DEFAULT_BUDGET")) {
    try {
      const auto value = std::stoull(env);
      if (value > 0) {
        config.max_elements = value;
        config.node_budget = value;
      }
    } catch (const std::exception&) {
      throw Error("TILEMEALY_DEFAULT_BUDGET must be a positive integer");
    }
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig config;
  try {
    apply_env_default(config);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  CLI::App app{"Wang tile sets, Mealy automata and automaton semigroups", "tilemealy"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  auto budget_flags = [&](CLI::App* sub) {
    sub->add_option("--budget-elements", config.max_elements, "Max semigroup elements")
        ->check(CLI::PositiveNumber);
    sub->add_option("--budget-power-states", config.max_power_states,
                    "Max states of one power or product machine")
        ->check(CLI::PositiveNumber);
    sub->add_option("--budget-nodes", config.node_budget, "Max backtracking nodes")
        ->check(CLI::PositiveNumber);
    sub->add_option("--json", config.json_path, "Also write the report to PATH");
    sub->add_option("--format", config.format, "json or text")
        ->check(CLI::IsMember({"json", "text"}));
  };
  auto period_flags = [&](CLI::App* sub) {
    sub->add_option("--max-px", config.max_px, "Largest horizontal period")
        ->check(CLI::PositiveNumber);
    sub->add_option("--max-py", config.max_py, "Largest vertical period")
        ->check(CLI::PositiveNumber);
    sub->add_option("--max", config.max_periods, "Both period bounds: PX PY")
        ->expected(2)
        ->check(CLI::PositiveNumber);
  };

  std::map<CLI::App*, std::function<int()>> handlers;
  const Emitter emit{config, out};

  auto* nw = app.add_subcommand("nw-check", "Check NW-determinism of a tile set");
  nw->add_option("tileset", config.input)->required();
  budget_flags(nw);
  handlers[nw] = [&] { return cmd_nw_check(config, emit); };

  auto* tile = app.add_subcommand("tile", "Tile a width x height rectangle");
  tile->add_option("tileset", config.input)->required();
  tile->add_option("width", config.width)->required()->check(CLI::PositiveNumber);
  tile->add_option("height", config.height)->required()->check(CLI::PositiveNumber);
  tile->add_option("--svg", config.svg_path, "Render the tiling to PATH");
  budget_flags(tile);
  handlers[tile] = [&] { return cmd_tile(config, emit); };

  auto* torus = app.add_subcommand("torus", "Search for a periodic tiling");
  torus->add_option("tileset", config.input)->required();
  torus->add_option("--svg", config.svg_path, "Render the tiling to PATH");
  budget_flags(torus);
  period_flags(torus);
  handlers[torus] = [&] { return cmd_torus(config, emit); };

  auto* least = app.add_subcommand("least-n", "Least n with {0..n}^2 untileable");
  least->add_option("tileset", config.input)->required();
  least->add_option("--max-n", config.max_n, "Largest n to try");
  budget_flags(least);
  handlers[least] = [&] { return cmd_least_n(config, emit); };

  auto* reduce = app.add_subcommand("reduce", "Write the Mealy automaton of a tile set");
  reduce->add_option("tileset", config.input)->required();
  reduce->add_option("-o,--out", config.out_path, "Output path (default stdout)");
  reduce->add_flag("--sink", config.sink, "Add the constant-bottom sink state c");
  handlers[reduce] = [&] { return cmd_reduce(config, out); };

  auto* enumerate_cmd = app.add_subcommand("enumerate", "Enumerate the automaton semigroup");
  enumerate_cmd->add_option("automaton", config.input)->required();
  budget_flags(enumerate_cmd);
  handlers[enumerate_cmd] = [&] { return cmd_enumerate(config, emit); };

  auto* order = app.add_subcommand("order", "Least n with f^n = g");
  order->add_option("automaton", config.input)->required();
  order->add_option("--f", config.f, "State word f (names)")->required();
  order->add_option("--g", config.g, "State word g (names)")->required();
  order->add_option("--max-n", config.max_n, "Largest power")->check(CLI::PositiveNumber);
  budget_flags(order);
  handlers[order] = [&] { return cmd_order(config, emit); };

  auto* lemma1 = app.add_subcommand("verify-lemma1", "Check the diagonal shift identity");
  lemma1->add_option("tileset", config.input)->required();
  lemma1->add_option("--torus", config.second_input, "Torus JSON (default: search)");
  lemma1->add_option("--m", config.lemma_m, "Largest power of bottom");
  lemma1->add_option("--n", config.lemma_n, "Largest diagonal offset");
  lemma1->add_option("--prefix-len", config.prefix_len, "Prefix length L");
  budget_flags(lemma1);
  period_flags(lemma1);
  handlers[lemma1] = [&] { return cmd_verify_lemma1(config, emit); };

  auto* claim = app.add_subcommand("verify-claim", "Check the bottom-tail claim");
  claim->add_option("tileset", config.input)->required();
  claim->add_option("--claim-n", config.claim_n, "Square parameter n (default: least)");
  claim->add_option("--max-n", config.max_n, "Largest n when searching for the least");
  claim->add_option("--mode", config.claim_mode, "exhaustive or sample")
      ->check(CLI::IsMember({"exhaustive", "sample"}));
  claim->add_option("--samples", config.samples, "Sample count")->check(CLI::PositiveNumber);
  claim->add_option("--seed", config.seed, "Sampling seed");
  claim->add_option("--prefix-len", config.prefix_len, "Suffix length L of q");
  budget_flags(claim);
  handlers[claim] = [&] { return cmd_verify_claim(config, emit); };

  auto* semi = app.add_subcommand("semidecide", "Search for a finiteness or infiniteness certificate");
  semi->add_option("tileset", config.input)->required();
  semi->add_option("--max-n", config.max_n, "Largest square parameter");
  semi->add_option("--quantum", config.quantum, "Node cap per step")->check(CLI::PositiveNumber);
  semi->add_option("--prefix-len", config.prefix_len, "Lemma check prefix length");
  semi->add_option("--svg", config.svg_path, "Render the torus to PATH");
  budget_flags(semi);
  period_flags(semi);
  handlers[semi] = [&] { return cmd_semidecide(config, emit); };

  auto* render = app.add_subcommand("render", "Render a tiling JSON report to SVG");
  render->add_option("tileset", config.input)->required();
  render->add_option("tiling", config.second_input)->required();
  render->add_option("--svg", config.svg_path, "Output path (default stdout)");
  handlers[render] = [&] { return cmd_render(config, out); };

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  if (config.max_periods.size() == 2) {
    config.max_px = config.max_periods[0];
    config.max_py = config.max_periods[1];
  }

  try {
    for (auto& [sub, handler] : handlers) {
      if (sub->parsed()) return handler();
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const CLI::ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << '\n';
    return kExitNegative;
  } catch (const Json::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace tilemealy

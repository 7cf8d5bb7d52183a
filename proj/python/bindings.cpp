#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "tilemealy/cli.hpp"
#include "tilemealy/error.hpp"
#include "tilemealy/mealy.hpp"
#include "tilemealy/reduction.hpp"
#include "tilemealy/report.hpp"
#include "tilemealy/semigroup.hpp"
#include "tilemealy/svg.hpp"
#include "tilemealy/wang.hpp"

namespace py = pybind11;
using namespace tilemealy;

namespace {

// Reports cross the boundary as JSON text; the Python side decodes them.
std::string dump(const Json& json) { return json.dump(); }

Budget make_budget(std::size_t max_elements, std::size_t max_power_states) {
  Budget b;
  b.max_elements = max_elements;
  b.max_power_states = max_power_states;
  b.check();
  return b;
}

std::string rect(const std::string& tiles_text, std::size_t width, std::size_t height,
                 std::uint64_t node_budget) {
  const TileSet tiles = parse_tileset(tiles_text);
  auto result = tile_rectangle(tiles, width, height, node_budget);
  Json out{{"status", status_name(result.status)}, {"nodes", result.nodes}};
  out["tiling"] = result.tiling ? tiling_to_json(tiles, *result.tiling) : Json(nullptr);
  return dump(out);
}

std::string torus(const std::string& tiles_text, std::size_t max_px, std::size_t max_py,
                  std::uint64_t node_budget) {
  const TileSet tiles = parse_tileset(tiles_text);
  auto result = find_torus_tiling(tiles, max_px, max_py, node_budget);
  Json out{{"status", status_name(result.status)}, {"nodes", result.nodes}};
  out["tiling"] = result.tiling ? tiling_to_json(tiles, *result.tiling) : Json(nullptr);
  return dump(out);
}

std::string least_n(const std::string& tiles_text, std::size_t max_n,
                    std::uint64_t node_budget) {
  auto result = least_untileable_n(parse_tileset(tiles_text), max_n, node_budget);
  Json out{{"status", status_name(result.status)}, {"nodes", result.nodes}};
  out["n"] = result.status == SearchStatus::found ? Json(result.n) : Json(nullptr);
  return dump(out);
}

std::optional<std::pair<std::string, std::string>> nw_conflict(const std::string& tiles_text) {
  const TileSet tiles = parse_tileset(tiles_text);
  auto conflict = is_nw_deterministic(tiles);
  if (!conflict) return std::nullopt;
  return std::make_pair(tiles[conflict->first].name, tiles[conflict->second].name);
}

std::string reduce(const std::string& tiles_text, bool sink) {
  auto reduction = build_reduction(parse_tileset(tiles_text));
  return print_automaton(sink ? add_sink(reduction).machine : reduction.machine);
}

std::string act_text(const std::string& automaton, const std::string& u,
                     const std::string& w) {
  auto m = parse_automaton(automaton);
  return m.format_letters(act(m, m.parse_states(u), m.parse_letters(w)));
}

std::string dstate_text(const std::string& automaton, const std::string& u,
                        const std::string& w) {
  auto m = parse_automaton(automaton);
  return m.format_states(dstate(m, m.parse_states(u), m.parse_letters(w)));
}

std::string digest(const std::string& automaton, const std::string& u,
                   std::size_t max_power_states) {
  auto m = parse_automaton(automaton);
  Budget b;
  b.max_power_states = max_power_states;
  return canonicalize(m, m.parse_states(u), b).digest();
}

bool equal_text(const std::string& automaton, const std::string& u, const std::string& v,
                std::size_t max_power_states) {
  auto m = parse_automaton(automaton);
  Budget b;
  b.max_power_states = max_power_states;
  return equal(m, m.parse_states(u), m.parse_states(v), b);
}

std::string enumerate_text(const std::string& automaton, std::size_t max_elements,
                           std::size_t max_power_states) {
  auto budget = make_budget(max_elements, max_power_states);
  return dump(verdict_to_json(enumerate(parse_automaton(automaton), budget), budget));
}

std::string order_text(const std::string& automaton, const std::string& f,
                       const std::string& g, std::size_t max_n,
                       std::size_t max_power_states) {
  auto m = parse_automaton(automaton);
  auto fw = m.parse_states(f), gw = m.parse_states(g);
  Budget b;
  b.max_power_states = max_power_states;
  return dump(order_to_json(m, fw, gw, max_n, order_search(m, fw, gw, max_n, b)));
}

std::string lemma1(const std::string& tiles_text, std::size_t max_m, std::size_t max_n,
                   std::size_t prefix_length, std::size_t max_period,
                   std::uint64_t node_budget) {
  const TileSet tiles = parse_tileset(tiles_text);
  auto found = find_torus_tiling(tiles, max_period, max_period, node_budget);
  if (!found.tiling) throw PreconditionError("no torus tiling within the period bound");
  auto reduction = build_reduction(tiles);
  auto report = verify_lemma1(reduction, *found.tiling, Lemma1Params{max_m, max_n, prefix_length});
  return dump(lemma1_to_json(reduction, report));
}

std::string claim(const std::string& tiles_text, std::size_t n, std::size_t suffix_length,
                  bool sample, std::size_t samples, std::uint64_t seed) {
  auto reduction = build_reduction(parse_tileset(tiles_text));
  ClaimParams params;
  params.n = n;
  params.suffix_length = suffix_length;
  params.mode = sample ? ClaimMode::sample : ClaimMode::exhaustive;
  params.samples = samples;
  params.seed = seed;
  return dump(claim_to_json(reduction, verify_claim(reduction, params)));
}

std::string bound(std::size_t alphabet_size, std::size_t n) {
  return finiteness_bound(alphabet_size, n).str();
}

std::string semidecide_text(const std::string& tiles_text, std::size_t max_px,
                            std::size_t max_py, std::size_t max_n,
                            std::uint64_t node_budget, std::uint64_t quantum) {
  const TileSet tiles = parse_tileset(tiles_text);
  SemidecideBudget budget;
  budget.max_px = max_px;
  budget.max_py = max_py;
  budget.max_n = max_n;
  budget.node_budget = node_budget;
  budget.quantum = quantum;
  auto result = semidecide(tiles, budget);
  return dump(semidecide_to_json(build_reduction(tiles), budget, result));
}

std::string svg(const std::string& tiles_text, const std::string& tiling_json) {
  const TileSet tiles = parse_tileset(tiles_text);
  const Json json = Json::parse(tiling_json);
  if (json.value("kind", "") == "torus") return render_svg(tiles, torus_tiling_from_json(tiles, json));
  return render_svg(tiles, rect_tiling_from_json(tiles, json));
}

py::tuple cli(std::vector<std::string> args) {
  args.insert(args.begin(), "tilemealy");
  std::ostringstream out, err;
  int code;
  {
    py::gil_scoped_release release;
    code = run_cli(args, out, err);
  }
  return py::make_tuple(code, out.str(), err.str());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Wang tiles, Mealy automata and their semigroups";

  py::register_exception<Error>(m, "Error", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", m.attr("Error").ptr());
  py::register_exception<CapExceeded>(m, "CapExceeded", m.attr("Error").ptr());
  py::register_exception<PreconditionError>(m, "PreconditionError", m.attr("Error").ptr());

  m.def("tile_rectangle", &rect, py::arg("tiles"), py::arg("width"), py::arg("height"),
        py::arg("node_budget") = 1'000'000);
  m.def("find_torus_tiling", &torus, py::arg("tiles"), py::arg("max_px") = 6,
        py::arg("max_py") = 6, py::arg("node_budget") = 1'000'000);
  m.def("least_untileable_n", &least_n, py::arg("tiles"), py::arg("max_n") = 6,
        py::arg("node_budget") = 1'000'000);
  m.def("nw_conflict", &nw_conflict, py::arg("tiles"),
        "Names of two tiles sharing a (north, west) pair, or None.");
  m.def("reduce", &reduce, py::arg("tiles"), py::arg("sink") = false);
  m.def("act", &act_text, py::arg("automaton"), py::arg("u"), py::arg("w"));
  m.def("dstate", &dstate_text, py::arg("automaton"), py::arg("u"), py::arg("w"));
  m.def("digest", &digest, py::arg("automaton"), py::arg("u"),
        py::arg("max_power_states") = 1u << 16);
  m.def("equal", &equal_text, py::arg("automaton"), py::arg("u"), py::arg("v"),
        py::arg("max_power_states") = 1u << 16);
  m.def("enumerate", &enumerate_text, py::arg("automaton"), py::arg("max_elements") = 10000,
        py::arg("max_power_states") = 1u << 16);
  m.def("order_search", &order_text, py::arg("automaton"), py::arg("f"), py::arg("g"),
        py::arg("max_n") = 50, py::arg("max_power_states") = 1u << 16);
  m.def("verify_lemma1", &lemma1, py::arg("tiles"), py::arg("max_m") = 8,
        py::arg("max_n") = 8, py::arg("prefix_length") = 32, py::arg("max_period") = 6,
        py::arg("node_budget") = 1'000'000);
  m.def("verify_claim", &claim, py::arg("tiles"), py::arg("n") = 1,
        py::arg("suffix_length") = 3, py::arg("sample") = false,
        py::arg("samples") = 10000, py::arg("seed") = 20130101);
  m.def("finiteness_bound", &bound, py::arg("alphabet_size"), py::arg("n"));
  m.def("semidecide", &semidecide_text, py::arg("tiles"), py::arg("max_px") = 6,
        py::arg("max_py") = 6, py::arg("max_n") = 6, py::arg("node_budget") = 2'000'000,
        py::arg("quantum") = 200'000);
  m.def("render_svg", &svg, py::arg("tiles"), py::arg("tiling"));
  m.def("run_cli", &cli, py::arg("args"), "Returns (exit_code, stdout, stderr).");
}

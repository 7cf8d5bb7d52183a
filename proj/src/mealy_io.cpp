#include <algorithm>
#include <sstream>

#include "text_util.hpp"
#include "tilemealy/error.hpp"
#include "tilemealy/mealy.hpp"

namespace tilemealy {

namespace {

using detail::Line;
using detail::Token;

Alphabet parse_header(const std::vector<Line>& lines, std::size_t index,
                      std::string_view key) {
  if (index >= lines.size()) {
    throw ParseError(lines.empty() ? 1 : lines.back().number + 1, 1,
                     "expected '" + std::string(key) + ":' line");
  }
  const Line& line = lines[index];
  std::string_view rest;
  std::size_t column = 0;
  if (!detail::strip_key(line, key, rest, column)) {
    throw ParseError(line.number, 1, "expected '" + std::string(key) + ":' line");
  }
  auto toks = detail::tokens(rest, column);
  if (toks.empty()) throw ParseError(line.number, column, "empty symbol list");
  std::vector<std::string> names;
  for (const Token& t : toks) {
    if (!is_valid_symbol_name(t.text)) {
      throw ParseError(line.number, t.column, "invalid symbol name '" + std::string(t.text) + "'");
    }
    if (std::find(names.begin(), names.end(), t.text) != names.end()) {
      throw ParseError(line.number, t.column, "duplicate symbol '" + std::string(t.text) + "'");
    }
    names.emplace_back(t.text);
  }
  return Alphabet(std::move(names));
}

// One field of "s , x -> s' / y": exactly one declared name.
Symbol parse_field(const Line& line, std::string_view field, std::size_t column,
                   const Alphabet& alphabet, std::string_view role) {
  auto toks = detail::tokens(field, column);
  if (toks.size() != 1) {
    throw ParseError(line.number, column,
                     "expected one " + std::string(role) + " name");
  }
  auto symbol = alphabet.find(toks[0].text);
  if (!symbol) {
    throw ParseError(line.number, toks[0].column,
                     "undeclared " + std::string(role) + " '" +
                         std::string(toks[0].text) + "'");
  }
  return *symbol;
}

}  // namespace

MealyAutomaton parse_automaton(std::string_view text) {
  auto lines = detail::content_lines(text);
  Alphabet states = parse_header(lines, 0, "states");
  Alphabet letters = parse_header(lines, 1, "alphabet");
  MealyTable table(states, letters);

  for (std::size_t i = 2; i < lines.size(); ++i) {
    const Line& line = lines[i];
    std::string_view s = line.text;
    auto comma = s.find(',');
    auto arrow = s.find("->");
    auto slash = s.find('/');
    if (comma == std::string_view::npos || arrow == std::string_view::npos ||
        slash == std::string_view::npos || !(comma < arrow && arrow < slash)) {
      throw ParseError(line.number, 1, "expected 's , x -> s' / y'");
    }
    Symbol a = parse_field(line, s.substr(0, comma), 1, states, "state");
    Symbol x = parse_field(line, s.substr(comma + 1, arrow - comma - 1), comma + 2,
                           letters, "letter");
    Symbol next = parse_field(line, s.substr(arrow + 2, slash - arrow - 2), arrow + 3,
                              states, "state");
    Symbol out = parse_field(line, s.substr(slash + 1), slash + 2, letters, "letter");
    if (table.delta[a * letters.size() + x]) {
      throw ParseError(line.number, 1,
                       "duplicate entry for (" + states.name(a) + ", " +
                           letters.name(x) + ")");
    }
    table.set(a, x, next, out);
  }

  auto errors = validate(table);
  if (!errors.empty()) {
    throw ParseError(lines.back().number + 1, 1, errors.front());
  }
  return MealyAutomaton(table);
}

std::string print_automaton(const MealyAutomaton& machine) {
  std::ostringstream out;
  out << "states:";
  for (const auto& name : machine.states().names()) out << ' ' << name;
  out << "\nalphabet:";
  for (const auto& name : machine.letters().names()) out << ' ' << name;
  out << '\n';
  for (Symbol a = 0; a < machine.num_states(); ++a) {
    for (Symbol x = 0; x < machine.num_letters(); ++x) {
      out << machine.states().name(a) << " , " << machine.letters().name(x) << " -> "
          << machine.states().name(machine.delta(a, x)) << " / "
          << machine.letters().name(machine.sigma(a, x)) << '\n';
    }
  }
  return out.str();
}

std::vector<Symbol> parse_symbol_list(const Alphabet& alphabet, std::string_view names) {
  std::vector<Symbol> out;
  for (const auto& tok : detail::tokens(names)) {
    if (auto s = alphabet.find(tok.text)) {
      out.push_back(*s);
      continue;
    }
    std::vector<Symbol> split;
    for (char c : tok.text) {
      auto s = alphabet.find(std::string_view(&c, 1));
      if (!s) throw Error("unknown symbol '" + std::string(tok.text) + "'");
      split.push_back(*s);
    }
    out.insert(out.end(), split.begin(), split.end());
  }
  return out;
}

}  // namespace tilemealy

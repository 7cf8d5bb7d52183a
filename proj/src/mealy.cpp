#include "tilemealy/mealy.hpp"

#include <sstream>

#include "tilemealy/error.hpp"

namespace tilemealy {

EventuallyPeriodicWord::EventuallyPeriodicWord(Word prefix_, Word cycle_)
    : prefix(std::move(prefix_)), cycle(std::move(cycle_)) {
  if (cycle.empty()) throw Error("eventually periodic word needs a nonempty cycle");
}

Symbol EventuallyPeriodicWord::at(std::size_t k) const {
  if (k < prefix.size()) return prefix[k];
  return cycle[(k - prefix.size()) % cycle.size()];
}

Word EventuallyPeriodicWord::take(std::size_t length) const {
  Word out;
  out.reserve(length);
  for (std::size_t k = 0; k < length; ++k) out.push_back(at(k));
  return out;
}

MealyTable::MealyTable(Alphabet states_, Alphabet letters_)
    : states(std::move(states_)),
      letters(std::move(letters_)),
      delta(states.size() * letters.size()),
      sigma(states.size() * letters.size()) {}

void MealyTable::set(Symbol state, Symbol letter, Symbol next, Symbol output) {
  if (!states.contains(state) || !letters.contains(letter)) {
    throw Error("table entry for undeclared symbol");
  }
  delta[state * letters.size() + letter] = next;
  sigma[state * letters.size() + letter] = output;
}

std::vector<std::string> validate(const MealyTable& table) {
  std::vector<std::string> errors;
  const std::size_t n = table.letters.size();
  if (table.delta.size() != table.states.size() * n ||
      table.sigma.size() != table.states.size() * n) {
    errors.emplace_back("table dimensions do not match the declared alphabets");
    return errors;
  }
  for (Symbol a = 0; a < table.states.size(); ++a) {
    for (Symbol x = 0; x < n; ++x) {
      const auto& d = table.delta[a * n + x];
      const auto& s = table.sigma[a * n + x];
      std::string where = "(" + table.states.name(a) + ", " + table.letters.name(x) + ")";
      if (!d) {
        errors.push_back("incomplete transition table: missing delta" + where);
      } else if (!table.states.contains(*d)) {
        errors.push_back("undeclared symbol: delta" + where + " is not a state");
      }
      if (!s) {
        errors.push_back("incomplete output table: missing sigma" + where);
      } else if (!table.letters.contains(*s)) {
        errors.push_back("undeclared symbol: sigma" + where + " is not a letter");
      }
    }
  }
  return errors;
}

namespace {

std::vector<Symbol> unwrap(const std::vector<std::optional<Symbol>>& column) {
  std::vector<Symbol> out;
  out.reserve(column.size());
  for (const auto& entry : column) out.push_back(*entry);
  return out;
}

MealyTable as_table(const Alphabet& states, const Alphabet& letters,
                    const std::vector<Symbol>& delta,
                    const std::vector<Symbol>& sigma) {
  MealyTable table(states, letters);
  if (delta.size() != table.delta.size() || sigma.size() != table.sigma.size()) {
    throw Error("table dimensions do not match the declared alphabets");
  }
  for (std::size_t i = 0; i < delta.size(); ++i) {
    table.delta[i] = delta[i];
    table.sigma[i] = sigma[i];
  }
  return table;
}

void throw_if_invalid(const MealyTable& table) {
  auto errors = validate(table);
  if (errors.empty()) return;
  std::string msg = errors.front();
  if (errors.size() > 1) msg += " (and " + std::to_string(errors.size() - 1) + " more)";
  throw Error(msg);
}

}  // namespace

MealyAutomaton::MealyAutomaton(const MealyTable& table)
    : states_(table.states), letters_(table.letters) {
  throw_if_invalid(table);
  delta_ = unwrap(table.delta);
  sigma_ = unwrap(table.sigma);
}

MealyAutomaton::MealyAutomaton(Alphabet states, Alphabet letters,
                               std::vector<Symbol> delta, std::vector<Symbol> sigma)
    : states_(std::move(states)),
      letters_(std::move(letters)),
      delta_(std::move(delta)),
      sigma_(std::move(sigma)) {
  throw_if_invalid(as_table(states_, letters_, delta_, sigma_));
}

void MealyAutomaton::check_states(std::span<const Symbol> u) const {
  for (Symbol a : u) {
    if (!states_.contains(a)) throw Error("state word contains an undeclared state");
  }
}

void MealyAutomaton::check_letters(std::span<const Symbol> w) const {
  for (Symbol x : w) {
    if (!letters_.contains(x)) throw Error("word contains an undeclared letter");
  }
}

StateWord MealyAutomaton::parse_states(std::string_view names) const {
  return parse_symbol_list(states_, names);
}

Word MealyAutomaton::parse_letters(std::string_view names) const {
  return parse_symbol_list(letters_, names);
}

namespace {
std::string join_names(const Alphabet& alphabet, std::span<const Symbol> symbols) {
  std::string out;
  for (Symbol s : symbols) {
    if (!out.empty()) out += ' ';
    out += alphabet.name(s);
  }
  return out;
}
}  // namespace

std::string MealyAutomaton::format_states(std::span<const Symbol> u) const {
  return join_names(states_, u);
}

std::string MealyAutomaton::format_letters(std::span<const Symbol> w) const {
  return join_names(letters_, w);
}

std::vector<std::string> validate(const MealyAutomaton& machine) {
  std::vector<std::string> errors;
  for (Symbol a = 0; a < machine.num_states(); ++a) {
    for (Symbol x = 0; x < machine.num_letters(); ++x) {
      if (!machine.states().contains(machine.delta(a, x)) ||
          !machine.letters().contains(machine.sigma(a, x))) {
        errors.emplace_back("undeclared symbol in table");
      }
    }
  }
  return errors;
}

Word act(const MealyAutomaton& machine, std::span<const Symbol> u,
         std::span<const Symbol> w) {
  machine.check_states(u);
  machine.check_letters(w);
  Word current(w.begin(), w.end());
  for (Symbol a : u) {
    Symbol state = a;
    for (Symbol& x : current) {
      Symbol next = machine.delta(state, x);
      x = machine.sigma(state, x);
      state = next;
    }
  }
  return current;
}

Word act_prefix(const MealyAutomaton& machine, std::span<const Symbol> u,
                const EventuallyPeriodicWord& w, std::size_t length) {
  return act(machine, u, w.take(length));
}

StateWord dstate(const MealyAutomaton& machine, std::span<const Symbol> u,
                 std::span<const Symbol> w) {
  machine.check_states(u);
  machine.check_letters(w);
  StateWord result;
  result.reserve(u.size());
  // Each factor reads the output of the factors before it.
  Word current(w.begin(), w.end());
  for (Symbol a : u) {
    Symbol state = a;
    for (Symbol& x : current) {
      Symbol next = machine.delta(state, x);
      x = machine.sigma(state, x);
      state = next;
    }
    result.push_back(state);
  }
  return result;
}

}  // namespace tilemealy

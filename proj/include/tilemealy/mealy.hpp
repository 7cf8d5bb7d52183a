#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tilemealy/alphabet.hpp"

namespace tilemealy {

// Finite words over letters, and finite words over states. Both are plain
// sequences of interned symbols; which alphabet they refer to is fixed by the
// argument position of the operation they are passed to.
using Word = std::vector<Symbol>;
using StateWord = std::vector<Symbol>;

// Finite stand-in for an infinite word: prefix followed by cycle repeated
// forever.
struct EventuallyPeriodicWord {
  Word prefix;
  Word cycle;

  EventuallyPeriodicWord() = default;
  EventuallyPeriodicWord(Word prefix_, Word cycle_);

  Symbol at(std::size_t k) const;
  // First `length` letters.
  Word take(std::size_t length) const;

  bool operator==(const EventuallyPeriodicWord&) const = default;
};

// Partially specified transition/output tables, as read from a file or
// assembled by hand. `validate` reports what keeps it from being a machine.
struct MealyTable {
  Alphabet states;
  Alphabet letters;
  // Indexed by state * letters.size() + letter.
  std::vector<std::optional<Symbol>> delta;
  std::vector<std::optional<Symbol>> sigma;

  MealyTable(Alphabet states_, Alphabet letters_);

  void set(Symbol state, Symbol letter, Symbol next, Symbol output);
};

std::vector<std::string> validate(const MealyTable& table);

// Deterministic letter-to-letter transducer (A, Σ, δ, σ). Immutable once
// built; every constructor path checks totality and membership.
class MealyAutomaton {
 public:
  // Throws Error listing every problem reported by validate().
  explicit MealyAutomaton(const MealyTable& table);
  MealyAutomaton(Alphabet states, Alphabet letters, std::vector<Symbol> delta,
                 std::vector<Symbol> sigma);

  const Alphabet& states() const noexcept { return states_; }
  const Alphabet& letters() const noexcept { return letters_; }
  std::size_t num_states() const noexcept { return states_.size(); }
  std::size_t num_letters() const noexcept { return letters_.size(); }

  Symbol delta(Symbol state, Symbol letter) const noexcept {
    return delta_[state * letters_.size() + letter];
  }
  Symbol sigma(Symbol state, Symbol letter) const noexcept {
    return sigma_[state * letters_.size() + letter];
  }

  // Throws Error when a symbol is out of range.
  void check_states(std::span<const Symbol> u) const;
  void check_letters(std::span<const Symbol> w) const;

  StateWord parse_states(std::string_view names) const;
  Word parse_letters(std::string_view names) const;
  std::string format_states(std::span<const Symbol> u) const;
  std::string format_letters(std::span<const Symbol> w) const;

  bool operator==(const MealyAutomaton&) const = default;

 private:
  Alphabet states_;
  Alphabet letters_;
  std::vector<Symbol> delta_;
  std::vector<Symbol> sigma_;
};

// A well-formed machine always validates; kept for symmetry with the table
// overload.
std::vector<std::string> validate(const MealyAutomaton& machine);

// σ_u(w). The left factor of u acts first: σ_{ab} = σ_b ∘ σ_a. The empty
// state word acts as the identity.
Word act(const MealyAutomaton& machine, std::span<const Symbol> u,
         std::span<const Symbol> w);

// Length-`length` prefix of σ_u applied to an infinite word.
Word act_prefix(const MealyAutomaton& machine, std::span<const Symbol> u,
                const EventuallyPeriodicWord& w, std::size_t length);

// δ_w(u): the state word reached after σ_u has read w.
StateWord dstate(const MealyAutomaton& machine, std::span<const Symbol> u,
                 std::span<const Symbol> w);

// Text format:
//   states: s1 s2 ...
//   alphabet: x1 x2 ...
//   s , x -> s' / y        (one line per pair; '#' starts a comment)
MealyAutomaton parse_automaton(std::string_view text);
std::string print_automaton(const MealyAutomaton& machine);

// Parses a whitespace-separated list of names. A token that is not a known
// name but whose characters all are is split per character ("aab" = a a b).
std::vector<Symbol> parse_symbol_list(const Alphabet& alphabet,
                                      std::string_view names);

}  // namespace tilemealy

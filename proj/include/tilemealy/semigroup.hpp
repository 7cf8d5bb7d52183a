#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

#include "tilemealy/mealy.hpp"

namespace tilemealy {

struct Budget {
  std::size_t max_elements = 10000;
  // Cap on reachable states of one power machine or product machine.
  std::size_t max_power_states = 1u << 16;
  // Longest indexing word enumerate() may build.
  std::size_t max_word_length = 256;

  void check() const;
};

// The machine whose states are the state words reachable from `initial`
// under v ↦ δ_x(v), with output σ_v(x). Its initial state realises σ_u.
class PowerMachine {
 public:
  // Throws CapExceeded if more than `max_states` state words are reachable.
  PowerMachine(const MealyAutomaton& base, StateWord initial, std::size_t max_states);

  std::size_t size() const noexcept { return words_.size(); }
  std::size_t num_letters() const noexcept { return num_letters_; }
  const StateWord& word(std::size_t state) const { return words_[state]; }
  std::size_t next(std::size_t state, Symbol x) const { return next_[state * num_letters_ + x]; }
  Symbol output(std::size_t state, Symbol x) const { return output_[state * num_letters_ + x]; }

 private:
  std::size_t num_letters_;
  std::vector<StateWord> words_;  // state 0 is the initial word
  std::vector<std::uint32_t> next_;
  std::vector<Symbol> output_;
};

// Minimal, canonically labelled machine of one tree endomorphism of Σ*.
// States are numbered in breadth-first discovery order from the initial
// state (0), visiting letters in alphabet order, so two transformations are
// equal as maps iff their tables are identical.
class CanonicalTransformation {
 public:
  CanonicalTransformation() = default;

  // Minimises and relabels an arbitrary (reachable or not) Mealy table.
  static CanonicalTransformation from_table(std::size_t num_states,
                                            std::size_t num_letters,
                                            std::span<const std::uint32_t> next,
                                            std::span<const Symbol> output,
                                            std::size_t initial);
  static CanonicalTransformation identity(std::size_t num_letters);

  std::size_t num_states() const noexcept { return num_states_; }
  std::size_t num_letters() const noexcept { return num_letters_; }
  std::uint32_t next(std::size_t state, Symbol x) const { return next_[state * num_letters_ + x]; }
  Symbol output(std::size_t state, Symbol x) const { return output_[state * num_letters_ + x]; }

  Word apply(std::span<const Symbol> w) const;

  // Varint encoding of (num_states, num_letters, next/output table); this
  // is the full identity of the element, not a hash.
  const std::string& encoding() const noexcept { return encoding_; }
  // Lowercase hex of encoding().
  std::string digest() const;

  bool operator==(const CanonicalTransformation& other) const {
    return encoding_ == other.encoding_;
  }

 private:
  std::size_t num_states_ = 0;
  std::size_t num_letters_ = 0;
  std::vector<std::uint32_t> next_;
  std::vector<Symbol> output_;
  std::string encoding_;
};

struct EncodingHash {
  std::size_t operator()(const std::string& s) const noexcept;
};

// first then second: the map w ↦ second(first(w)). With first = σ_u and
// second = σ_v this is σ_{uv}.
CanonicalTransformation compose(const CanonicalTransformation& first,
                                 const CanonicalTransformation& second,
                                 std::size_t max_states);

CanonicalTransformation canonicalize(const MealyAutomaton& machine,
                                     std::span<const Symbol> u, const Budget& budget);

// Bisimulation over pairs of reachable state words.
bool equal(const MealyAutomaton& machine, std::span<const Symbol> u,
           std::span<const Symbol> v, const Budget& budget);

// Compares σ_u and σ_v on every word of length <= depth by exhaustive
// depth-first enumeration of Σ^{<=depth}. Exponential; test oracle only.
bool equal_bruteforce(const MealyAutomaton& machine, std::span<const Symbol> u,
                      std::span<const Symbol> v, std::size_t depth);

struct Element {
  CanonicalTransformation transformation;
  StateWord word;  // shortest indexing word, first in enumeration order
};

struct Finite {
  std::vector<Element> elements;
  std::size_t size() const noexcept { return elements.size(); }
};

struct InfiniteCertified {
  std::string certificate;
};

struct BudgetExceeded {
  std::vector<Element> elements;  // found so far
  std::string reason;             // which cap tripped
  std::size_t word_length = 0;    // longest indexing word examined
};

using FinitenessVerdict = std::variant<Finite, InfiniteCertified, BudgetExceeded>;

// Breadth-first right-multiplication closure of the generators.
FinitenessVerdict enumerate(const MealyAutomaton& machine, const Budget& budget);

struct OrderResult {
  std::optional<std::size_t> n;
  // "found", "entered cycle" or "max_n reached".
  std::string reason;
  std::size_t powers_examined = 0;
};

// Least n <= max_n with σ_f^n = σ_g.
OrderResult order_search(const MealyAutomaton& machine, std::span<const Symbol> f,
                         std::span<const Symbol> g, std::size_t max_n,
                         const Budget& budget);

}  // namespace tilemealy

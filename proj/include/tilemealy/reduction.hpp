#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "tilemealy/mealy.hpp"
#include "tilemealy/semigroup.hpp"
#include "tilemealy/wang.hpp"

namespace tilemealy {

using BigInt = boost::multiprecision::cpp_int;

inline constexpr const char* kBottomName = "_bot";

// Mealy automaton of an NW-deterministic tile set. States and letters are
// the tiles in declaration order followed by the mistake symbol ⊥, so tile
// index i is both state i and letter i.
struct ReductionAutomaton {
  TileSet tiles;
  MealyAutomaton machine;
  Symbol bottom = 0;

  Symbol letter(TileIndex t) const noexcept { return t; }
  bool is_tile(Symbol s) const noexcept { return s != bottom; }
};

// Throws PreconditionError naming the colliding tiles when the set is not
// NW-deterministic.
ReductionAutomaton build_reduction(const TileSet& tiles);

// The reduction machine plus an extra state c with σ(c,x) = ⊥, δ(c,x) = c.
struct SinkAutomaton {
  MealyAutomaton machine;
  Symbol sink = 0;          // state c
  Symbol bottom_state = 0;  // state ⊥
};

SinkAutomaton add_sink(const ReductionAutomaton& reduction);

// w_n = (t(k+n, k))_{k>=0} of the periodic extension, with cycle length
// lcm(px, py) and an empty prefix.
EventuallyPeriodicWord diagonal_word(const TorusTiling& torus, std::size_t n);

struct Lemma1Params {
  std::size_t max_m = 8;
  std::size_t max_n = 8;
  std::size_t prefix_length = 32;
};

struct Lemma1Counterexample {
  std::size_t m = 0;
  std::size_t n = 0;
  Word expected;
  Word actual;
};

struct Lemma1Report {
  Lemma1Params params;
  bool prefix_identity = true;
  bool digests_distinct = true;
  std::size_t pairs_checked = 0;
  std::optional<Lemma1Counterexample> counterexample;
  // Digest of σ_⊥^m for m = 0..max_m; m = 0 is the identity map.
  std::vector<std::string> digests;
  std::optional<std::pair<std::size_t, std::size_t>> equal_powers;

  bool pass() const noexcept { return prefix_identity && digests_distinct; }
};

// Checks σ_⊥^m(w_n) = ⊥^m w_{m+n} on length-L prefixes and that the maps
// σ_⊥^m are pairwise distinct. Throws PreconditionError when the torus is
// not a valid tiling for the reduction's tile set, or L <= max_m.
Lemma1Report verify_lemma1(const ReductionAutomaton& reduction, const TorusTiling& torus,
                           const Lemma1Params& params, const Budget& budget = {});

enum class ClaimMode { exhaustive, sample };

struct ClaimParams {
  std::size_t n = 1;
  ClaimMode mode = ClaimMode::exhaustive;
  std::size_t suffix_length = 3;  // |q|
  std::size_t samples = 10000;
  std::uint64_t seed = 20130101;
  std::uint64_t exhaustive_cap = 10'000'000;
  std::uint64_t node_budget = 1'000'000;  // for certifying the square
};

struct ClaimCounterexample {
  StateWord u;
  Word p;
  Word q;
  Word actual;
};

struct ClaimReport {
  ClaimParams params;
  std::uint64_t checked = 0;
  std::optional<ClaimCounterexample> counterexample;

  bool pass() const noexcept { return !counterexample.has_value(); }
};

// For u in A^{2n}, p in Σ^n and q of length L: σ_u(pq) = σ_u(p) ⊥^L.
// Requires {0..n}^2 to be proven untileable (checked here by exhaustive
// search); throws PreconditionError otherwise and CapExceeded when the
// exhaustive quantifier space exceeds the cap.
ClaimReport verify_claim(const ReductionAutomaton& reduction, const ClaimParams& params);

// 1 + Σ_{k=1}^{2n-1} a^k + (a^n)^(a^n), where a = |A| = |Σ|.
BigInt finiteness_bound(std::size_t alphabet_size, std::size_t n);
BigInt finiteness_bound(const TileSet& tiles, std::size_t n);

struct WindowCheck {
  std::size_t i = 0;
  std::size_t j = 0;
  bool valid = false;
};

// Rows τ_i(w) for i = 0..|u| with f(i, j) = j-th letter of τ_i(w), and the
// plane placement they induce: f(i, j) sits at (j, j - i), so f(i+1, j+1)
// is east of f(i, j) and south of f(i, j+1). Cells holding ⊥ are left empty.
struct TilingWindow {
  std::vector<Word> rows;
  // Positions whose s = f(i,j), t = f(i,j+1), r = f(i+1,j+1) are all tiles.
  std::vector<WindowCheck> checks;
  std::map<std::pair<std::int64_t, std::int64_t>, TileIndex> cells;
  // Adjacent non-empty cells with mismatched colours.
  std::size_t violations = 0;

  bool valid() const noexcept;
};

TilingWindow extract_window(const ReductionAutomaton& reduction, const StateWord& u,
                            const Word& w);

struct SemidecideBudget {
  std::size_t max_px = 6;
  std::size_t max_py = 6;
  std::size_t max_n = 6;
  std::uint64_t node_budget = 2'000'000;  // shared by both searches
  std::uint64_t quantum = 200'000;        // node cap of a single step
  Budget semigroup;                        // for the exact-size enumeration
  Lemma1Params lemma1;
};

enum class SemidecideStatus { infinite_certified, finite_certified, unknown };

struct SemidecideResult {
  SemidecideStatus status = SemidecideStatus::unknown;
  std::optional<TorusTiling> torus;
  std::optional<Lemma1Report> lemma1;
  std::optional<std::size_t> n;
  std::optional<BigInt> bound;
  std::optional<std::size_t> exact_size;
  std::uint64_t nodes = 0;
  std::size_t steps = 0;
  std::vector<std::string> log;  // one entry per step
};

// Alternates torus attempts and square attempts in a fixed round-robin
// order and stops at the first certificate.
SemidecideResult semidecide(const TileSet& tiles, const SemidecideBudget& budget);

}  // namespace tilemealy

#include "tilemealy/reduction.hpp"

#include <numeric>
#include <random>
#include <set>

#include "tilemealy/error.hpp"

namespace tilemealy {

ReductionAutomaton build_reduction(const TileSet& tiles) {
  if (auto conflict = is_nw_deterministic(tiles)) {
    throw PreconditionError("tile set is not NW-deterministic: '" +
                            tiles[conflict->first].name + "' and '" +
                            tiles[conflict->second].name +
                            "' share north and west colors");
  }
  std::vector<std::string> names;
  for (const auto& t : tiles.tiles()) {
    if (t.name == kBottomName) throw Error("tile name '_bot' is reserved");
    names.push_back(t.name);
  }
  names.emplace_back(kBottomName);
  const auto bottom = static_cast<Symbol>(tiles.size());
  const std::size_t k = names.size();

  std::vector<Symbol> delta(k * k);
  std::vector<Symbol> sigma(k * k, bottom);
  for (Symbol a = 0; a < k; ++a) {
    for (Symbol x = 0; x < k; ++x) {
      delta[a * k + x] = x;
      if (a == bottom || x == bottom) continue;
      // r sits east of s = a and south of t = x.
      for (TileIndex r = 0; r < tiles.size(); ++r) {
        if (tiles[r].north == tiles[x].south && tiles[r].west == tiles[a].east) {
          sigma[a * k + x] = r;
          break;
        }
      }
    }
  }
  Alphabet alphabet(std::move(names));
  return ReductionAutomaton{tiles, MealyAutomaton(alphabet, alphabet, std::move(delta),
                                                  std::move(sigma)),
                            bottom};
}

SinkAutomaton add_sink(const ReductionAutomaton& reduction) {
  const MealyAutomaton& base = reduction.machine;
  std::vector<std::string> names = base.states().names();
  std::string sink_name = "c";
  while (base.states().find(sink_name)) sink_name += '\'';
  names.push_back(sink_name);
  const std::size_t k = base.num_letters();
  const auto sink = static_cast<Symbol>(base.num_states());

  std::vector<Symbol> delta;
  std::vector<Symbol> sigma;
  for (Symbol a = 0; a < base.num_states(); ++a) {
    for (Symbol x = 0; x < k; ++x) {
      delta.push_back(base.delta(a, x));
      sigma.push_back(base.sigma(a, x));
    }
  }
  for (Symbol x = 0; x < k; ++x) {
    delta.push_back(sink);
    sigma.push_back(reduction.bottom);
  }
  return SinkAutomaton{
      MealyAutomaton(Alphabet(std::move(names)), base.letters(), std::move(delta),
                     std::move(sigma)),
      sink, reduction.bottom};
}

EventuallyPeriodicWord diagonal_word(const TorusTiling& torus, std::size_t n) {
  if (torus.px == 0 || torus.py == 0) throw Error("torus periods must be positive");
  const std::size_t period = std::lcm(torus.px, torus.py);
  Word cycle;
  cycle.reserve(period);
  for (std::size_t k = 0; k < period; ++k) {
    cycle.push_back(torus.at(static_cast<std::int64_t>(k + n), static_cast<std::int64_t>(k)));
  }
  return EventuallyPeriodicWord({}, std::move(cycle));
}

namespace {

void require_valid_torus(const ReductionAutomaton& reduction, const TorusTiling& torus) {
  std::vector<Violation> violations;
  try {
    violations = validate_tiling(reduction.tiles, torus);
  } catch (const Error& e) {
    throw PreconditionError(std::string("torus is malformed: ") + e.what());
  }
  if (!violations.empty()) {
    const auto& v = violations.front();
    throw PreconditionError("torus is not a valid tiling: mismatch between (" +
                            std::to_string(v.x) + "," + std::to_string(v.y) + ") and (" +
                            std::to_string(v.x2) + "," + std::to_string(v.y2) + ")");
  }
}

}  // namespace

Lemma1Report verify_lemma1(const ReductionAutomaton& reduction, const TorusTiling& torus,
                           const Lemma1Params& params, const Budget& budget) {
  require_valid_torus(reduction, torus);
  if (params.prefix_length <= params.max_m) {
    throw PreconditionError("prefix length must exceed max_m");
  }
  const std::size_t length = params.prefix_length;
  Lemma1Report report;
  report.params = params;

  StateWord bottoms;
  for (std::size_t m = 0; m <= params.max_m; ++m) {
    for (std::size_t n = 0; n <= params.max_n; ++n) {
      Word actual = act_prefix(reduction.machine, bottoms, diagonal_word(torus, n), length);
      Word expected(m, reduction.bottom);
      Word shifted = diagonal_word(torus, m + n).take(length - m);
      expected.insert(expected.end(), shifted.begin(), shifted.end());
      ++report.pairs_checked;
      if (actual != expected && !report.counterexample) {
        report.prefix_identity = false;
        report.counterexample = Lemma1Counterexample{m, n, std::move(expected), std::move(actual)};
      }
    }
    bottoms.push_back(reduction.bottom);
  }

  bottoms.clear();
  std::map<std::string, std::size_t> first_power;
  for (std::size_t m = 0; m <= params.max_m; ++m) {
    const auto t = m == 0 ? CanonicalTransformation::identity(reduction.machine.num_letters())
                          : canonicalize(reduction.machine, bottoms, budget);
    report.digests.push_back(t.digest());
    auto [it, inserted] = first_power.emplace(t.digest(), m);
    if (!inserted && !report.equal_powers) {
      report.digests_distinct = false;
      report.equal_powers = std::pair{it->second, m};
    }
    bottoms.push_back(reduction.bottom);
  }
  return report;
}

ClaimReport verify_claim(const ReductionAutomaton& reduction, const ClaimParams& params) {
  const std::size_t n = params.n;
  const auto square = tile_rectangle(reduction.tiles, n + 1, n + 1, params.node_budget);
  if (square.status == SearchStatus::found) {
    throw PreconditionError("{0.." + std::to_string(n) + "}^2 is tileable");
  }
  if (square.status == SearchStatus::budget_exceeded) {
    throw PreconditionError("could not certify {0.." + std::to_string(n) +
                            "}^2 untileable within the node budget");
  }

  const MealyAutomaton& machine = reduction.machine;
  const std::size_t letters = machine.num_letters();
  const std::size_t length = params.suffix_length;
  const std::size_t total = 2 * n + n + length;
  ClaimReport report;
  report.params = params;

  // positions [0, 2n) index u, [2n, 3n) index p, the rest index q.
  std::vector<Symbol> digits(total, 0);
  auto check = [&]() {
    StateWord u(digits.begin(), digits.begin() + 2 * n);
    Word p(digits.begin() + 2 * n, digits.begin() + 3 * n);
    Word pq(digits.begin() + 2 * n, digits.end());
    Word expected = act(machine, u, p);
    expected.insert(expected.end(), length, reduction.bottom);
    Word actual = act(machine, u, pq);
    ++report.checked;
    if (actual != expected) {
      report.counterexample = ClaimCounterexample{
          std::move(u), std::move(p), Word(digits.begin() + 3 * n, digits.end()),
          std::move(actual)};
      return false;
    }
    return true;
  };

  if (params.mode == ClaimMode::exhaustive) {
    BigInt space = boost::multiprecision::pow(BigInt(letters), static_cast<unsigned>(total));
    if (space > params.exhaustive_cap) {
      throw CapExceeded("exhaustive claim check needs " + space.str() +
                        " evaluations, cap is " + std::to_string(params.exhaustive_cap));
    }
    while (true) {
      if (!check()) return report;
      std::size_t i = 0;
      while (i < total && ++digits[i] == letters) digits[i++] = 0;
      if (i == total) break;
    }
  } else {
    std::mt19937_64 rng(params.seed);
    std::uniform_int_distribution<Symbol> pick(0, static_cast<Symbol>(letters - 1));
    for (std::size_t s = 0; s < params.samples; ++s) {
      for (auto& d : digits) d = pick(rng);
      if (!check()) return report;
    }
  }
  return report;
}

BigInt finiteness_bound(std::size_t alphabet_size, std::size_t n) {
  if (n == 0) throw Error("finiteness bound needs n >= 1");
  const BigInt a(alphabet_size);
  BigInt sum = 1;
  BigInt power = 1;
  for (std::size_t k = 1; k <= 2 * n - 1; ++k) {
    power *= a;
    sum += power;
  }
  const BigInt words = boost::multiprecision::pow(a, static_cast<unsigned>(n));
  if (words > 1'000'000) {
    throw CapExceeded("|Σ|^n = " + words.str() + " is too large to raise to itself");
  }
  const auto exponent = words.convert_to<unsigned>();
  return sum + boost::multiprecision::pow(words, exponent);
}

BigInt finiteness_bound(const TileSet& tiles, std::size_t n) {
  return finiteness_bound(tiles.size() + 1, n);
}

bool TilingWindow::valid() const noexcept {
  if (violations != 0) return false;
  for (const auto& c : checks) {
    if (!c.valid) return false;
  }
  return true;
}

TilingWindow extract_window(const ReductionAutomaton& reduction, const StateWord& u,
                            const Word& w) {
  const MealyAutomaton& machine = reduction.machine;
  machine.check_states(u);
  machine.check_letters(w);
  const TileSet& tiles = reduction.tiles;

  TilingWindow window;
  window.rows.push_back(w);
  for (Symbol a : u) {
    const Symbol factor[] = {a};
    window.rows.push_back(act(machine, factor, window.rows.back()));
  }

  for (std::size_t i = 0; i + 1 < window.rows.size(); ++i) {
    for (std::size_t j = 0; j + 1 < w.size(); ++j) {
      const Symbol s = window.rows[i][j];
      const Symbol t = window.rows[i][j + 1];
      const Symbol r = window.rows[i + 1][j + 1];
      if (!reduction.is_tile(s) || !reduction.is_tile(t) || !reduction.is_tile(r)) continue;
      const bool ok = tiles[r].west == tiles[s].east && tiles[r].north == tiles[t].south;
      window.checks.push_back({i, j, ok});
    }
  }

  for (std::size_t i = 0; i < window.rows.size(); ++i) {
    for (std::size_t j = 0; j < w.size(); ++j) {
      const Symbol s = window.rows[i][j];
      if (!reduction.is_tile(s)) continue;
      const auto x = static_cast<std::int64_t>(j);
      window.cells[{x, x - static_cast<std::int64_t>(i)}] = s;
    }
  }
  for (const auto& [pos, tile] : window.cells) {
    const auto [x, y] = pos;
    if (auto it = window.cells.find({x, y + 1}); it != window.cells.end()) {
      if (tiles[tile].north != tiles[it->second].south) ++window.violations;
    }
    if (auto it = window.cells.find({x + 1, y}); it != window.cells.end()) {
      if (tiles[tile].east != tiles[it->second].west) ++window.violations;
    }
  }
  return window;
}

}  // namespace tilemealy

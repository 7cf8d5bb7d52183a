#include "tilemealy/semigroup.hpp"

#include <deque>
#include <map>
#include <unordered_set>

#include "tilemealy/error.hpp"

namespace tilemealy {

void Budget::check() const {
  if (max_elements == 0 || max_power_states == 0 || max_word_length == 0) {
    throw Error("budget fields must be positive");
  }
}

namespace {

struct WordHash {
  std::size_t operator()(const std::vector<Symbol>& w) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (Symbol s : w) {
      h ^= s + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
  }
};

// Reads one letter through the chain of factors of v; returns the output
// letter and overwrites v with δ_x(v).
Symbol step(const MealyAutomaton& base, StateWord& v, Symbol x) {
  for (Symbol& a : v) {
    Symbol next = base.delta(a, x);
    x = base.sigma(a, x);
    a = next;
  }
  return x;
}

void put_varint(std::string& out, std::uint64_t value) {
  while (value >= 0x80) {
    out.push_back(static_cast<char>((value & 0x7f) | 0x80));
    value >>= 7;
  }
  out.push_back(static_cast<char>(value));
}

}  // namespace

PowerMachine::PowerMachine(const MealyAutomaton& base, StateWord initial,
                           std::size_t max_states)
    : num_letters_(base.num_letters()) {
  base.check_states(initial);
  std::unordered_map<StateWord, std::uint32_t, WordHash> index;
  index.emplace(initial, 0);
  words_.push_back(std::move(initial));
  for (std::size_t i = 0; i < words_.size(); ++i) {
    for (Symbol x = 0; x < num_letters_; ++x) {
      StateWord v = words_[i];
      output_.push_back(step(base, v, x));
      auto [it, inserted] = index.emplace(v, static_cast<std::uint32_t>(words_.size()));
      if (inserted) {
        if (words_.size() >= max_states) {
          throw CapExceeded("power machine exceeds " + std::to_string(max_states) +
                            " states");
        }
        words_.push_back(std::move(v));
      }
      next_.push_back(it->second);
    }
  }
}

CanonicalTransformation CanonicalTransformation::from_table(
    std::size_t num_states, std::size_t num_letters,
    std::span<const std::uint32_t> next, std::span<const Symbol> output,
    std::size_t initial) {
  // Restrict to states reachable from the initial one.
  std::vector<std::uint32_t> reach_id(num_states, UINT32_MAX);
  std::vector<std::uint32_t> reachable{static_cast<std::uint32_t>(initial)};
  reach_id[initial] = 0;
  for (std::size_t i = 0; i < reachable.size(); ++i) {
    for (std::size_t x = 0; x < num_letters; ++x) {
      std::uint32_t t = next[reachable[i] * num_letters + x];
      if (reach_id[t] == UINT32_MAX) {
        reach_id[t] = static_cast<std::uint32_t>(reachable.size());
        reachable.push_back(t);
      }
    }
  }
  const std::size_t n = reachable.size();

  // Moore refinement: start from output rows, split by successor blocks
  // until the block count stops growing.
  std::vector<std::uint32_t> block(n);
  std::size_t num_blocks = 0;
  {
    std::map<std::vector<std::uint32_t>, std::uint32_t> ids;
    for (std::size_t s = 0; s < n; ++s) {
      std::vector<std::uint32_t> sig(num_letters);
      for (std::size_t x = 0; x < num_letters; ++x) sig[x] = output[reachable[s] * num_letters + x];
      block[s] = ids.emplace(std::move(sig), static_cast<std::uint32_t>(ids.size())).first->second;
    }
    num_blocks = ids.size();
  }
  while (true) {
    std::map<std::vector<std::uint32_t>, std::uint32_t> ids;
    std::vector<std::uint32_t> refined(n);
    for (std::size_t s = 0; s < n; ++s) {
      std::vector<std::uint32_t> sig(num_letters + 1);
      sig[0] = block[s];
      for (std::size_t x = 0; x < num_letters; ++x) {
        sig[x + 1] = block[reach_id[next[reachable[s] * num_letters + x]]];
      }
      refined[s] = ids.emplace(std::move(sig), static_cast<std::uint32_t>(ids.size())).first->second;
    }
    block = std::move(refined);
    if (ids.size() == num_blocks) break;
    num_blocks = ids.size();
  }

  // Representative per block, then breadth-first relabelling from the
  // initial block.
  std::vector<std::uint32_t> representative(num_blocks, UINT32_MAX);
  for (std::size_t s = 0; s < n; ++s) {
    if (representative[block[s]] == UINT32_MAX) representative[block[s]] = static_cast<std::uint32_t>(s);
  }
  std::vector<std::uint32_t> label(num_blocks, UINT32_MAX);
  std::vector<std::uint32_t> order{block[0]};
  label[block[0]] = 0;
  CanonicalTransformation result;
  result.num_letters_ = num_letters;
  for (std::size_t i = 0; i < order.size(); ++i) {
    std::uint32_t rep = reachable[representative[order[i]]];
    for (std::size_t x = 0; x < num_letters; ++x) {
      std::uint32_t b = block[reach_id[next[rep * num_letters + x]]];
      if (label[b] == UINT32_MAX) {
        label[b] = static_cast<std::uint32_t>(order.size());
        order.push_back(b);
      }
      result.next_.push_back(label[b]);
      result.output_.push_back(output[rep * num_letters + x]);
    }
  }
  result.num_states_ = order.size();

  put_varint(result.encoding_, result.num_states_);
  put_varint(result.encoding_, result.num_letters_);
  for (std::size_t i = 0; i < result.next_.size(); ++i) {
    put_varint(result.encoding_, result.next_[i]);
    put_varint(result.encoding_, result.output_[i]);
  }
  return result;
}

CanonicalTransformation CanonicalTransformation::identity(std::size_t num_letters) {
  std::vector<std::uint32_t> next(num_letters, 0);
  std::vector<Symbol> output(num_letters);
  for (std::size_t x = 0; x < num_letters; ++x) output[x] = static_cast<Symbol>(x);
  return from_table(1, num_letters, next, output, 0);
}

Word CanonicalTransformation::apply(std::span<const Symbol> w) const {
  Word out;
  out.reserve(w.size());
  std::uint32_t state = 0;
  for (Symbol x : w) {
    if (x >= num_letters_) throw Error("word contains an undeclared letter");
    out.push_back(output(state, x));
    state = next(state, x);
  }
  return out;
}

std::string CanonicalTransformation::digest() const {
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  out.reserve(encoding_.size() * 2);
  for (unsigned char c : encoding_) {
    out.push_back(kHex[c >> 4]);
    out.push_back(kHex[c & 0xf]);
  }
  return out;
}

std::size_t EncodingHash::operator()(const std::string& s) const noexcept {
  // FNV-1a; only used to bucket, equality compares the full encoding.
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

CanonicalTransformation compose(const CanonicalTransformation& first,
                                const CanonicalTransformation& second,
                                std::size_t max_states) {
  if (first.num_letters() != second.num_letters()) {
    throw Error("cannot compose transformations over different alphabets");
  }
  const std::size_t k = first.num_letters();
  const std::uint64_t width = second.num_states();
  std::unordered_map<std::uint64_t, std::uint32_t> index;
  std::vector<std::uint64_t> pairs{0};
  index.emplace(0, 0);
  std::vector<std::uint32_t> next;
  std::vector<Symbol> output;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const std::uint32_t p = static_cast<std::uint32_t>(pairs[i] / width);
    const std::uint32_t q = static_cast<std::uint32_t>(pairs[i] % width);
    for (Symbol x = 0; x < k; ++x) {
      Symbol y = first.output(p, x);
      output.push_back(second.output(q, y));
      std::uint64_t target = first.next(p, x) * width + second.next(q, y);
      auto [it, inserted] = index.emplace(target, static_cast<std::uint32_t>(pairs.size()));
      if (inserted) {
        if (pairs.size() >= max_states) {
          throw CapExceeded("product machine exceeds " + std::to_string(max_states) +
                            " states");
        }
        pairs.push_back(target);
      }
      next.push_back(it->second);
    }
  }
  return CanonicalTransformation::from_table(pairs.size(), k, next, output, 0);
}

CanonicalTransformation canonicalize(const MealyAutomaton& machine,
                                     std::span<const Symbol> u, const Budget& budget) {
  budget.check();
  if (u.empty()) throw Error("canonicalize needs a nonempty state word");
  PowerMachine power(machine, StateWord(u.begin(), u.end()), budget.max_power_states);
  std::vector<std::uint32_t> next;
  std::vector<Symbol> output;
  next.reserve(power.size() * power.num_letters());
  output.reserve(power.size() * power.num_letters());
  for (std::size_t s = 0; s < power.size(); ++s) {
    for (Symbol x = 0; x < power.num_letters(); ++x) {
      next.push_back(static_cast<std::uint32_t>(power.next(s, x)));
      output.push_back(power.output(s, x));
    }
  }
  return CanonicalTransformation::from_table(power.size(), power.num_letters(), next,
                                             output, 0);
}

bool equal(const MealyAutomaton& machine, std::span<const Symbol> u,
           std::span<const Symbol> v, const Budget& budget) {
  budget.check();
  if (u.empty() || v.empty()) throw Error("equal needs nonempty state words");
  machine.check_states(u);
  machine.check_states(v);
  using Pair = std::pair<StateWord, StateWord>;
  struct PairHash {
    std::size_t operator()(const Pair& p) const noexcept {
      WordHash h;
      return h(p.first) * 31 + h(p.second);
    }
  };
  std::unordered_set<Pair, PairHash> seen;
  std::deque<Pair> frontier;
  Pair start{StateWord(u.begin(), u.end()), StateWord(v.begin(), v.end())};
  seen.insert(start);
  frontier.push_back(std::move(start));
  while (!frontier.empty()) {
    Pair current = std::move(frontier.front());
    frontier.pop_front();
    for (Symbol x = 0; x < machine.num_letters(); ++x) {
      Pair succ = current;
      if (step(machine, succ.first, x) != step(machine, succ.second, x)) return false;
      if (seen.insert(succ).second) {
        if (seen.size() > budget.max_power_states) {
          throw CapExceeded("bisimulation exceeds " +
                            std::to_string(budget.max_power_states) + " pairs");
        }
        frontier.push_back(std::move(succ));
      }
    }
  }
  return true;
}

namespace {

bool agree_below(const MealyAutomaton& machine, const StateWord& u, const StateWord& v,
                 std::size_t depth) {
  if (depth == 0) return true;
  for (Symbol x = 0; x < machine.num_letters(); ++x) {
    const Symbol letter[] = {x};
    if (act(machine, u, letter) != act(machine, v, letter)) return false;
    if (!agree_below(machine, dstate(machine, u, letter), dstate(machine, v, letter),
                     depth - 1)) {
      return false;
    }
  }
  return true;
}

}  // namespace

bool equal_bruteforce(const MealyAutomaton& machine, std::span<const Symbol> u,
                      std::span<const Symbol> v, std::size_t depth) {
  machine.check_states(u);
  machine.check_states(v);
  // act(u, wx) = act(u, w) act(δ_w(u), x), so walking the tree of words one
  // letter at a time visits every w in Σ^{<=depth}.
  return agree_below(machine, StateWord(u.begin(), u.end()), StateWord(v.begin(), v.end()),
                     depth);
}

FinitenessVerdict enumerate(const MealyAutomaton& machine, const Budget& budget) {
  budget.check();
  std::vector<CanonicalTransformation> generators;
  std::vector<Element> elements;
  std::unordered_map<std::string, std::size_t, EncodingHash> index;

  auto exceeded = [&](std::string reason, std::size_t length) -> FinitenessVerdict {
    return BudgetExceeded{std::move(elements), std::move(reason), length};
  };

  auto add = [&](CanonicalTransformation t, StateWord word) {
    auto [it, inserted] = index.emplace(t.encoding(), elements.size());
    if (inserted) elements.push_back({std::move(t), std::move(word)});
    return inserted;
  };

  try {
    for (Symbol a = 0; a < machine.num_states(); ++a) {
      const Symbol word[] = {a};
      generators.push_back(canonicalize(machine, word, budget));
    }
  } catch (const CapExceeded&) {
    return exceeded("max_power_states", 1);
  }
  for (Symbol a = 0; a < machine.num_states(); ++a) {
    if (elements.size() == budget.max_elements && !index.contains(generators[a].encoding())) {
      return exceeded("max_elements", 1);
    }
    add(generators[a], StateWord{a});
  }

  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (Symbol a = 0; a < machine.num_states(); ++a) {
      CanonicalTransformation product;
      const std::size_t length = elements[i].word.size() + 1;
      try {
        product = compose(elements[i].transformation, generators[a],
                          budget.max_power_states);
      } catch (const CapExceeded&) {
        return exceeded("max_power_states", length);
      }
      if (index.contains(product.encoding())) continue;
      if (length > budget.max_word_length) return exceeded("max_word_length", length);
      if (elements.size() == budget.max_elements) return exceeded("max_elements", length);
      StateWord word = elements[i].word;
      word.push_back(a);
      add(std::move(product), std::move(word));
    }
  }
  return Finite{std::move(elements)};
}

OrderResult order_search(const MealyAutomaton& machine, std::span<const Symbol> f,
                         std::span<const Symbol> g, std::size_t max_n,
                         const Budget& budget) {
  if (max_n == 0) throw Error("order_search needs max_n >= 1");
  const CanonicalTransformation base = canonicalize(machine, f, budget);
  const CanonicalTransformation target = canonicalize(machine, g, budget);
  std::unordered_set<std::string, EncodingHash> seen;
  CanonicalTransformation power = base;
  OrderResult result;
  for (std::size_t n = 1; n <= max_n; ++n) {
    result.powers_examined = n;
    if (power == target) {
      result.n = n;
      result.reason = "found";
      return result;
    }
    if (!seen.insert(power.encoding()).second) {
      result.reason = "entered cycle";
      return result;
    }
    if (n < max_n) power = compose(power, base, budget.max_power_states);
  }
  result.reason = "max_n reached";
  return result;
}

}  // namespace tilemealy

#include "tilemealy/alphabet.hpp"

#include <algorithm>

#include "tilemealy/error.hpp"

namespace tilemealy {

bool is_valid_symbol_name(std::string_view name) {
  if (name.empty()) return false;
  return std::all_of(name.begin(), name.end(), [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
           (c >= '0' && c <= '9') || c == '_' || c == '.' || c == '\'' ||
           c == '+' || c == '*' || c == '|' || c == '$' || c == '@';
  });
}

Alphabet::Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.empty()) throw Error("alphabet must be nonempty");
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (!is_valid_symbol_name(names_[i])) {
      throw Error("invalid symbol name '" + names_[i] + "'");
    }
    if (!index_.emplace(names_[i], static_cast<Symbol>(i)).second) {
      throw Error("duplicate symbol '" + names_[i] + "'");
    }
  }
}

const std::string& Alphabet::name(Symbol s) const {
  if (!contains(s)) throw Error("symbol index out of range");
  return names_[s];
}

std::optional<Symbol> Alphabet::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Symbol Alphabet::at(std::string_view name) const {
  if (auto s = find(name)) return *s;
  throw Error("unknown symbol '" + std::string(name) + "'");
}

}  // namespace tilemealy

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace tilemealy {

using Symbol = std::uint32_t;

// Finite ordered set of named symbols, interned to 0..size()-1 in
// declaration order. The order is used for canonical labelling.
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::vector<std::string> names);

  std::size_t size() const noexcept { return names_.size(); }
  bool contains(Symbol s) const noexcept { return s < names_.size(); }

  const std::string& name(Symbol s) const;
  const std::vector<std::string>& names() const noexcept { return names_; }

  std::optional<Symbol> find(std::string_view name) const;
  // Throws Error for unknown names.
  Symbol at(std::string_view name) const;

  bool operator==(const Alphabet& other) const { return names_ == other.names_; }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, Symbol> index_;
};

// Symbol names are restricted so that both text formats stay unambiguous.
bool is_valid_symbol_name(std::string_view name);

}  // namespace tilemealy

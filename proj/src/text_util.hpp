#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace tilemealy::detail {

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

struct Line {
  std::size_t number;  // 1-based
  std::string_view text;  // comment stripped
};

// Non-blank lines with '#' comments removed.
std::vector<Line> content_lines(std::string_view text);

// Whitespace-separated tokens of `text`, whose first character sits at
// column `base_column`.
std::vector<Token> tokens(std::string_view text, std::size_t base_column = 1);

// Splits "key: rest" and returns rest with its starting column, or false if
// the line does not start with `key:`.
bool strip_key(const Line& line, std::string_view key, std::string_view& rest,
               std::size_t& rest_column);

}  // namespace tilemealy::detail

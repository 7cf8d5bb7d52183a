#include "text_util.hpp"

#include <cctype>

namespace tilemealy::detail {

namespace {
bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }
}  // namespace

std::vector<Line> content_lines(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    std::string_view line = text.substr(start, end - start);
    if (auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    bool blank = true;
    for (char c : line) blank = blank && is_space(c);
    if (!blank) lines.push_back({number, line});
    if (end == text.size()) break;
    start = end + 1;
  }
  return lines;
}

std::vector<Token> tokens(std::string_view text, std::size_t base_column) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && is_space(text[i])) ++i;
    std::size_t start = i;
    while (i < text.size() && !is_space(text[i])) ++i;
    if (i > start) out.push_back({text.substr(start, i - start), base_column + start});
  }
  return out;
}

bool strip_key(const Line& line, std::string_view key, std::string_view& rest,
               std::size_t& rest_column) {
  std::size_t i = 0;
  while (i < line.text.size() && is_space(line.text[i])) ++i;
  if (line.text.substr(i, key.size()) != key) return false;
  i += key.size();
  while (i < line.text.size() && is_space(line.text[i])) ++i;
  if (i >= line.text.size() || line.text[i] != ':') return false;
  ++i;
  rest = line.text.substr(i);
  rest_column = i + 1;
  return true;
}

}  // namespace tilemealy::detail

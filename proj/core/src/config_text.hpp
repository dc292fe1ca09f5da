#pragma once

// Shared helpers for the line-oriented configuration formats.

#include <algorithm>
#include <cctype>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "zoll/errors.hpp"
#include "zoll/scalar.hpp"

namespace zoll::detail {

inline std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

inline std::vector<std::string> split_words(std::string_view s) {
  std::istringstream in{std::string(s)};
  std::vector<std::string> words;
  for (std::string w; in >> w;) words.push_back(w);
  return words;
}

[[noreturn]] inline void config_fail(std::size_t line, const std::string& what) {
  throw ConfigError("line " + std::to_string(line) + ": " + what);
}

inline std::size_t parse_index(const std::string& text, std::size_t line) {
  if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos)
    config_fail(line, "expected a non-negative integer, got '" + text + "'");
  return std::stoul(text);
}

inline std::size_t parse_keyed(const std::string& word, const std::string& key, std::size_t line) {
  if (word.rfind(key + "=", 0) != 0) config_fail(line, "expected " + key + "=<value>, got '" + word + "'");
  return parse_index(word.substr(key.size() + 1), line);
}

inline Scalar parse_scalar(const std::string& text, std::size_t line) {
  if (text.empty() || text.find_first_not_of("0123456789/") != std::string::npos ||
      text.front() == '/' || text.back() == '/' ||
      std::count(text.begin(), text.end(), '/') > 1)
    config_fail(line, "bad coefficient '" + text + "'");
  const auto slash = text.find('/');
  if (slash != std::string::npos && text.find_first_not_of('0', slash + 1) == std::string::npos)
    config_fail(line, "zero denominator");
  Scalar s(text, 10);
  s.canonicalize();
  return s;
}

}  // namespace zoll::detail

#include "zoll/expression.hpp"

#include <cctype>
#include <limits>

#include "zoll/errors.hpp"

namespace zoll {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Polynomial parse() {
    Polynomial p = expression();
    skip_space();
    if (pos_ != text_.size()) fail(std::string("unexpected '") + text_[pos_] + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial expression() {
    Polynomial acc = term();
    for (;;) {
      if (accept('+'))
        acc += term();
      else if (accept('-'))
        acc -= term();
      else
        return acc;
    }
  }

  Polynomial term() {
    Polynomial acc = factor();
    while (accept('*')) acc *= factor();
    return acc;
  }

  Polynomial factor() {
    if (accept('-')) return -factor();
    if (accept('+')) return factor();
    Polynomial base = primary();
    if (accept('^')) {
      skip_space();
      const std::size_t at = pos_;
      const std::string digits = read_digits();
      if (digits.empty()) fail("expected a non-negative integer exponent");
      unsigned long e = 0;
      try {
        e = std::stoul(digits);
      } catch (const std::out_of_range&) {
        throw ParseError("exponent too large", at);
      }
      if (e > std::numeric_limits<unsigned>::max()) throw ParseError("exponent too large", at);
      return base.pow(static_cast<unsigned>(e));
    }
    return base;
  }

  std::string read_digits() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  Polynomial primary() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial inner = expression();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t at = pos_;
      std::string literal = read_digits();
      if (pos_ < text_.size() && text_[pos_] == '/') {
        ++pos_;
        const std::string den = read_digits();
        if (den.empty()) fail("expected denominator");
        if (den.find_first_not_of('0') == std::string::npos)
          throw ParseError("zero denominator", at);
        literal += "/" + den;
      }
      Scalar value(literal, 10);
      value.canonicalize();
      return Polynomial(value);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t at = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      const std::string_view name = text_.substr(at, pos_ - at);
      if (name.size() < 2 || name[0] != 't' ||
          name.substr(1).find_first_not_of("0123456789") != std::string_view::npos)
        throw ParseError("unknown variable '" + std::string(name) + "'", at);
      std::size_t index = 0;
      try {
        index = std::stoul(std::string(name.substr(1)));
      } catch (const std::out_of_range&) {
        throw ParseError("variable index too large", at);
      }
      return Polynomial::variable(index);
    }
    fail(std::string("unexpected '") + c + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text) { return Parser(text).parse(); }

std::string to_string(const Monomial& m) {
  std::string out;
  for (std::size_t v = 0; v < m.width(); ++v) {
    const auto e = m.exponent(v);
    if (e == 0) continue;
    if (!out.empty()) out += '*';
    out += 't' + std::to_string(v);
    if (e > 1) out += '^' + std::to_string(e);
  }
  return out.empty() ? "1" : out;
}

std::string to_string(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    const bool negative = c < 0;
    if (first)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    first = false;
    const Scalar magnitude = abs(c);
    if (m.is_one()) {
      out += magnitude.get_str();
    } else {
      if (magnitude != 1) out += magnitude.get_str() + "*";
      out += to_string(m);
    }
  }
  return out;
}

}  // namespace zoll

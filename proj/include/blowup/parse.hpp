#pragma once

#include <cctype>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "blowup/polynomial.hpp"

namespace blowup {

/// Position-aware syntax error.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error(ErrorKind::input, std::to_string(line) + ":" + std::to_string(column) + ": " + what),
        message_(what),
        line_(line),
        column_(column) {}
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  /// The message without the position prefix.
  const std::string& message() const noexcept { return message_; }

 private:
  std::string message_;
  std::size_t line_, column_;
};

namespace detail {

/// Recursive-descent reader for polynomial expressions:
///   expr := ['-'] term (('+'|'-') term)* ; term := factor (['*'] factor)* ;
///   factor := atom ('^' NAT)? ; atom := NUMBER ['/' NUMBER] | NAME | '(' expr ')'
class PolyReader {
 public:
  PolyReader(std::string_view text, std::span<const std::string> vars, std::size_t line = 1, std::size_t col = 1)
      : s_(text), vars_(vars), line_(line), col0_(col) {}

  Polynomial parse_all() {
    Polynomial p = expr();
    skip();
    if (i_ != s_.size()) error("unexpected '" + std::string(1, s_[i_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void error(const std::string& what) const { throw ParseError(what, line_, col0_ + i_); }

  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool eat(char c) {
    skip();
    if (i_ < s_.size() && s_[i_] == c) {
      ++i_;
      return true;
    }
    return false;
  }
  bool starts_atom() {
    skip();
    if (i_ >= s_.size()) return false;
    const char c = s_[i_];
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '(';
  }

  Polynomial expr() {
    Polynomial p(vars_.size());
    bool negate = eat('-');
    if (!negate) eat('+');
    p = term();
    if (negate) p = -p;
    for (;;) {
      if (eat('+')) p += term();
      else if (eat('-')) p -= term();
      else return p;
    }
  }
  Polynomial term() {
    Polynomial p = factor();
    for (;;) {
      if (eat('*')) p *= factor();
      else if (starts_atom()) p *= factor();
      else return p;
    }
  }
  Polynomial factor() {
    Polynomial base = atom();
    if (eat('^')) {
      skip();
      std::string digits = read_digits();
      if (digits.empty()) error("expected an exponent");
      if (digits.size() > 6) error("exponent too large");
      base = base.pow(static_cast<unsigned>(std::stoul(digits)));
    }
    return base;
  }
  std::string read_digits() {
    std::string d;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) d += s_[i_++];
    return d;
  }
  Polynomial atom() {
    skip();
    if (i_ >= s_.size()) error("unexpected end of polynomial");
    const char c = s_[i_];
    if (c == '(') {
      ++i_;
      Polynomial p = expr();
      if (!eat(')')) error("expected ')'");
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string num = read_digits();
      Rational q{Integer(num)};
      skip();
      if (i_ < s_.size() && s_[i_] == '/') {
        ++i_;
        skip();
        std::string den = read_digits();
        if (den.empty() || Integer(den) == 0) error("bad denominator");
        q /= Rational(Integer(den));
      }
      return Polynomial::constant(vars_.size(), q);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = i_;
      std::string name;
      while (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_')) name += s_[i_++];
      for (std::size_t k = 0; k < vars_.size(); ++k)
        if (vars_[k] == name) return Polynomial::variable(vars_.size(), k);
      i_ = start;
      error("unknown variable '" + name + "'");
    }
    error("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view s_;
  std::span<const std::string> vars_;
  std::size_t i_ = 0, line_, col0_;
};

}  // namespace detail

inline Polynomial parse_polynomial(std::string_view text, std::span<const std::string> vars) {
  return detail::PolyReader(text, vars).parse_all();
}

/// Comma-separated generator list.
inline std::vector<Polynomial> parse_polynomials(std::string_view text, std::span<const std::string> vars) {
  std::vector<Polynomial> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i < text.size() && text[i] == '(') ++depth;
    if (i < text.size() && text[i] == ')') --depth;
    if (i == text.size() || (text[i] == ',' && depth == 0)) {
      out.push_back(detail::PolyReader(text.substr(start, i - start), vars, 1, start + 1).parse_all());
      start = i + 1;
    }
  }
  return out;
}

}  // namespace blowup

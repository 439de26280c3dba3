#pragma once

#include "nashblow/polynomial.hpp"

#include <cctype>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace nashblow {

/// Raised on malformed polynomial text; `position` is a 0-based byte offset.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

namespace detail {

class PolynomialParser {
 public:
  PolynomialParser(std::string_view text, std::span<const std::string> variables,
                   MonomialOrder order)
      : text_(text), vars_(variables), order_(order) {}

  Polynomial parse() {
    skip_ws();
    if (at_end()) throw ParseError("empty expression", pos_);
    Polynomial p = expr();
    skip_ws();
    if (!at_end()) {
      throw ParseError(std::string("unexpected '") + text_[pos_] + "'", pos_);
    }
    return p;
  }

 private:
  static constexpr std::uint64_t kMaxExponent = 1U << 20;

  // expr := term (('+'|'-') term)*
  Polynomial expr() {
    Polynomial acc = term();
    for (;;) {
      skip_ws();
      if (at_end()) break;
      char c = text_[pos_];
      if (c != '+' && c != '-') break;
      ++pos_;
      Polynomial rhs = term();
      acc = c == '+' ? acc + rhs : acc - rhs;
    }
    return acc;
  }

  // term := factor ('*' factor)*
  Polynomial term() {
    Polynomial acc = factor();
    for (;;) {
      skip_ws();
      if (at_end() || text_[pos_] != '*') break;
      ++pos_;
      acc = acc * factor();
    }
    return acc;
  }

  // factor := base ('^' UINT)?
  Polynomial factor() {
    Polynomial b = base();
    skip_ws();
    if (!at_end() && text_[pos_] == '^') {
      ++pos_;
      skip_ws();
      const std::size_t at = pos_;
      if (at_end() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        throw ParseError("exponent must be a non-negative integer literal", at);
      }
      Integer e = parse_uint(digits());
      if (e > kMaxExponent) throw ParseError("exponent too large", at);
      b = b.pow(static_cast<unsigned>(e.get_ui()));
    }
    return b;
  }

  // base := UINT ('/' UINT)? | VAR | '(' expr ')' | '-' factor
  Polynomial base() {
    skip_ws();
    if (at_end()) throw ParseError("unexpected end of input", pos_);
    const char c = text_[pos_];
    const std::size_t n = vars_.size();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Integer num = parse_uint(digits());
      Integer den = 1;
      skip_ws();
      if (!at_end() && text_[pos_] == '/') {
        ++pos_;
        skip_ws();
        const std::size_t at = pos_;
        if (at_end() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
          throw ParseError("expected integer denominator", at);
        }
        den = parse_uint(digits());
        if (den == 0) throw ParseError("zero denominator", at);
      }
      return Polynomial::constant(n, make_rational(num, den), order_);
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t at = pos_;
      while (!at_end() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      std::string_view name = text_.substr(at, pos_ - at);
      for (std::size_t i = 0; i < n; ++i) {
        if (vars_[i] == name) return Polynomial::variable(n, i, order_);
      }
      throw ParseError("unknown variable '" + std::string(name) + "'", at);
    }
    if (c == '(') {
      ++pos_;
      Polynomial inner = expr();
      skip_ws();
      if (at_end() || text_[pos_] != ')') throw ParseError("expected ')'", pos_);
      ++pos_;
      return inner;
    }
    if (c == '-') {
      ++pos_;
      return -factor();
    }
    throw ParseError(std::string("unexpected '") + c + "'", pos_);
  }

  std::string_view digits() {
    const std::size_t at = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return text_.substr(at, pos_ - at);
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }

  std::string_view text_;
  std::span<const std::string> vars_;
  MonomialOrder order_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline bool is_valid_variable_name(std::string_view name) {
  if (name.empty() || !std::isalpha(static_cast<unsigned char>(name[0]))) return false;
  for (char c : name) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  }
  return true;
}

/// Parses `text` as a polynomial over the given variables.
/// Grammar: expr := term (('+'|'-') term)*; term := factor ('*' factor)*;
/// factor := base ('^' UINT)?; base := UINT ('/' UINT)? | VAR | '(' expr ')' | '-' factor.
inline Polynomial parse_polynomial(std::string_view text, std::span<const std::string> variables,
                                   MonomialOrder order = MonomialOrder::grevlex()) {
  return detail::PolynomialParser(text, variables, order).parse();
}

inline std::string format_monomial(const Monomial& m, std::span<const std::string> variables) {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += variables[i];
    if (m[i] > 1) out += '^' + std::to_string(m[i]);
  }
  return out;
}

/// Inverse of parse_polynomial on canonical forms, e.g. "3*x^2*y - 1/2*x + 1".
inline std::string format_polynomial(const Polynomial& p, std::span<const std::string> variables) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : p.terms()) {
    const bool negative = t.coeff < 0;
    const Rational mag = negative ? Rational(-t.coeff) : t.coeff;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (t.mono.is_one()) {
      out += to_string(mag);
    } else {
      if (mag != 1) out += to_string(mag) + "*";
      out += format_monomial(t.mono, variables);
    }
  }
  return out;
}

}  // namespace nashblow

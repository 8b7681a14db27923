#pragma once

#include <cctype>
#include <stdexcept>
#include <string>
#include <vector>

#include "mutinv/rational_fn.hpp"

namespace mutinv {

struct ExprError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct ExprOptions {
  std::size_t nvars = 0;
  std::vector<std::string> prefixes{"x"};  // accepted variable-name prefixes, e.g. x1, X1, u1
};

namespace detail {

class ExprParser {
 public:
  ExprParser(const std::string& text, const ExprOptions& opts) : s_(text), opts_(opts) {}

  RationalFn parse() {
    RationalFn r = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ExprError("expression error at position " + std::to_string(pos_ + 1) + ": " + msg);
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }

  bool starts_atom() {
    skip();
    if (pos_ >= s_.size()) return false;
    char c = s_[pos_];
    return c == '(' || std::isalnum(static_cast<unsigned char>(c));
  }

  RationalFn expr() {
    RationalFn r = term();
    while (true) {
      if (peek('+')) {
        ++pos_;
        r += term();
      } else if (peek('-')) {
        ++pos_;
        r -= term();
      } else {
        return r;
      }
    }
  }

  RationalFn term() {
    RationalFn r = unary();
    while (true) {
      if (peek('*')) {
        ++pos_;
        r *= unary();
      } else if (peek('/')) {
        ++pos_;
        RationalFn d = unary();
        if (d.is_zero()) fail("division by zero");
        r /= d;
      } else if (starts_atom()) {
        r *= power();
      } else {
        return r;
      }
    }
  }

  RationalFn unary() {
    if (peek('-')) {
      ++pos_;
      return -unary();
    }
    if (peek('+')) {
      ++pos_;
      return unary();
    }
    return power();
  }

  RationalFn power() {
    RationalFn base = atom();
    if (!peek('^')) return base;
    ++pos_;
    skip();
    bool neg = false;
    if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) {
      neg = s_[pos_] == '-';
      ++pos_;
    }
    std::string digits = read_digits();
    if (digits.empty()) fail("expected an integer exponent");
    if (digits.size() > 6) fail("exponent too large");
    int e = std::stoi(digits);
    if (neg && base.is_zero()) fail("negative power of zero");
    return pow(base, neg ? -e : e);
  }

  std::string read_digits() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    return s_.substr(start, pos_ - start);
  }

  RationalFn atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of expression");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      RationalFn r = expr();
      if (!peek(')')) fail("expected ')'");
      ++pos_;
      return r;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      return RationalFn::constant(opts_.nvars, Rational(Integer(read_digits())));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      std::string name = s_.substr(start, pos_ - start);
      std::string digits = read_digits();
      bool known = false;
      for (const auto& p : opts_.prefixes) known = known || p == name;
      if (known && digits.empty() && opts_.nvars == 1) return RationalFn::variable(1, 0);  // bare X
      if (!known || digits.empty()) fail("unknown variable '" + name + digits + "'");
      if (digits.size() > 6) fail("variable index too large");
      std::size_t idx = std::stoul(digits);
      if (idx < 1 || idx > opts_.nvars) {
        fail("variable " + name + digits + " outside 1.." + std::to_string(opts_.nvars));
      }
      return RationalFn::variable(opts_.nvars, idx - 1);
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  const std::string& s_;
  const ExprOptions& opts_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses an expression with + - * / ^ (integer exponents), integer literals and
/// variables named prefix1..prefixN.
inline RationalFn parse_expression(const std::string& text, const ExprOptions& opts) {
  return detail::ExprParser(text, opts).parse();
}

inline RationalFn parse_expression(const std::string& text, std::size_t nvars) {
  ExprOptions o;
  o.nvars = nvars;
  return parse_expression(text, o);
}

/// Polynomial-valued parse; rejects genuine fractions.
inline Poly parse_polynomial(const std::string& text, const ExprOptions& opts) {
  RationalFn f = parse_expression(text, opts);
  if (!f.is_polynomial()) throw ExprError("expected a polynomial: '" + text + "'");
  return f.num() * (1 / f.den().constant_term());
}

}  // namespace mutinv

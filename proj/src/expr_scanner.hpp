#pragma once

// Character-level scanner shared by the polynomial, formula and problem-file
// parsers. Not part of the public interface.

#include <algorithm>
#include <cctype>
#include <string>
#include <string_view>

#include "cadform/error.hpp"
#include "cadform/polynomial.hpp"

namespace cadform::detail {

class ExprScanner {
 public:
  ExprScanner(std::string_view text, const VariableOrder& vars, std::size_t line = 1, std::size_t column0 = 0)
      : text_(text), vars_(vars), line_(line), column0_(column0) {}

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_ws();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool starts_with(std::string_view s) {
    skip_ws();
    return text_.substr(pos_).starts_with(s);
  }
  bool accept(std::string_view s) {
    if (!starts_with(s)) return false;
    pos_ += s.size();
    return true;
  }
  std::size_t pos() const { return pos_; }
  void set_pos(std::size_t p) { pos_ = p; }

  [[noreturn]] void fail(const std::string& msg) const { fail_at(msg, pos_); }
  [[noreturn]] void fail_at(const std::string& msg, std::size_t p) const {
    // Text may span several lines; column0 applies to the first one only.
    p = std::min(p, text_.size());
    std::size_t nl = text_.rfind('\n', p == 0 ? 0 : p - 1);
    if (p == 0 || nl == std::string_view::npos) throw ParseError(msg, line_, column0_ + p + 1);
    std::size_t lines = static_cast<std::size_t>(std::count(text_.begin(), text_.begin() + static_cast<long>(p), '\n'));
    throw ParseError(msg, line_ + lines, p - nl);
  }

  std::string identifier() {
    skip_ws();
    std::size_t start = pos_;
    if (pos_ < text_.size() && (std::isalpha(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      ++pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_' || text_[pos_] == '\'')) {
        ++pos_;
      }
    }
    return std::string(text_.substr(start, pos_ - start));
  }

  Integer integer() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  Polynomial sum() {
    Polynomial acc = product();
    for (;;) {
      if (accept("+")) {
        acc += product();
      } else if (peek() == '-' && !starts_with("->")) {
        ++pos_;
        acc -= product();
      } else {
        return acc;
      }
    }
  }

 private:
  Polynomial product() {
    Polynomial acc = unary();
    for (;;) {
      if (accept("*")) {
        acc *= unary();
      } else if (peek() == '/' && !starts_with("/\\")) {
        std::size_t at = pos_;
        ++pos_;
        Polynomial d = unary();
        if (!d.is_constant() || d.is_zero()) fail_at("division only by a nonzero constant", at);
        acc *= 1 / d.constant_value();
      } else {
        return acc;
      }
    }
  }

  Polynomial unary() {
    if (accept("+")) return unary();
    if (peek() == '-' && !starts_with("->")) {
      ++pos_;
      return -unary();
    }
    return power();
  }

  Polynomial power() {
    Polynomial base = atom();
    if (accept("^") || accept("**")) {
      Integer e = integer();
      if (e > 10000) fail("exponent too large");
      return base.pow(static_cast<unsigned>(e.get_ui()));
    }
    return base;
  }

  Polynomial atom() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      Polynomial p = sum();
      if (!accept(")")) fail("expected ')'");
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      return Polynomial::constant(vars_.size(), Rational(integer()));
    }
    std::size_t at = pos_;
    std::string id = identifier();
    if (id.empty()) fail(c == '\0' ? "unexpected end of expression" : std::string("unexpected character '") + c + "'");
    auto idx = vars_.index_of(id);
    if (!idx) fail_at("unknown variable '" + id + "'", at);
    return Polynomial::variable(vars_.size(), *idx);
  }

  std::string_view text_;
  const VariableOrder& vars_;
  std::size_t line_;
  std::size_t column0_;
  std::size_t pos_ = 0;
};

}  // namespace cadform::detail

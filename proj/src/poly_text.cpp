#include "hecke/poly_text.hpp"

#include <cctype>
#include <stdexcept>

namespace hecke {

namespace {

std::string monomial_text(Monomial m, int n) {
  std::string out;
  for (int var = 1; var <= n; ++var) {
    const int e = m.exponent(var);
    if (e == 0) continue;
    if (!out.empty()) out += '*';
    out += "x" + std::to_string(var);
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out;
}

/// Appends one term given its sign, the magnitude text of its coefficient
/// ("" standing for 1) and its monomial text.
void append_term(std::string& out, bool negative, const std::string& magnitude, const std::string& mono) {
  std::string body = magnitude;
  if (!body.empty() && !mono.empty()) body += '*';
  body += mono;
  if (body.empty()) body = "1";
  if (out.empty())
    out = negative ? "-" + body : body;
  else
    out += (negative ? " - " : " + ") + body;
}

class Parser {
public:
  Parser(const std::string& text, int n) : text_(text), n_(n) {}

  MPoly parse() {
    MPoly f = expression();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected character");
    return f;
  }

private:
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("cannot parse polynomial '" + text_ + "' at offset " + std::to_string(pos_) +
                                ": " + what);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool starts_factor(char ch) const {
    return std::isdigit(static_cast<unsigned char>(ch)) || ch == 'q' || ch == 'x' || ch == '(';
  }

  int small_integer() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    if (pos_ - start > 6) fail("integer too large here");
    return std::stoi(text_.substr(start, pos_ - start));
  }

  MPoly expression() {
    MPoly acc(n_);
    bool first = true;
    while (true) {
      char ch = peek();
      bool negative = false;
      if (ch == '+' || ch == '-') {
        negative = ch == '-';
        ++pos_;
      } else if (!first) {
        break;
      }
      MPoly t = term();
      if (negative)
        acc -= t;
      else
        acc += t;
      first = false;
    }
    return acc;
  }

  MPoly term() {
    MPoly acc = power();
    while (true) {
      char ch = peek();
      if (ch == '*') {
        ++pos_;
        acc = acc * power();
      } else if (starts_factor(ch)) {
        acc = acc * power();
      } else {
        break;
      }
    }
    return acc;
  }

  MPoly power() {
    MPoly base = factor();
    if (peek() != '^') return base;
    ++pos_;
    int e = small_integer();
    MPoly out = MPoly::constant(n_, 1);
    for (int j = 0; j < e; ++j) out = out * base;
    return out;
  }

  MPoly factor() {
    char ch = peek();
    if (ch == '(') {
      ++pos_;
      MPoly inner = expression();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (ch == 'q') {
      ++pos_;
      return MPoly::constant(n_, QPoly::q());
    }
    if (ch == 'x') {
      ++pos_;
      if (!std::isdigit(static_cast<unsigned char>(pos_ < text_.size() ? text_[pos_] : '\0')))
        fail("expected a variable index after 'x'");
      int var = small_integer();
      if (var < 1 || var > n_) fail("variable x" + std::to_string(var) + " outside x1..x" + std::to_string(n_));
      return MPoly::variable(n_, var);
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return MPoly::constant(n_, Integer(text_.substr(start, pos_ - start)));
    }
    fail("expected a number, q, a variable or '('");
  }

  const std::string& text_;
  int n_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string format_poly(const MPoly& f) {
  if (f.is_zero()) return "0";
  const int n = f.ambient();
  if (f.term_count() == 1 && f.terms().begin()->first.is_one()) return f.terms().begin()->second.to_string();
  std::string out;
  for (const auto& [m, c] : f.terms()) {
    std::string mono = monomial_text(m, n);
    if (c.term_count() == 1) {
      const int d = c.degree();
      const Integer& a = c.coeffs().back();
      const Integer mag = a < 0 ? Integer(-a) : a;
      std::string magnitude;
      if (d == 0) {
        if (mag != 1 || mono.empty()) magnitude = mag.str();
      } else {
        if (mag != 1) magnitude = mag.str() + "*";
        magnitude += d == 1 ? "q" : "q^" + std::to_string(d);
      }
      append_term(out, a < 0, magnitude, mono);
    } else {
      append_term(out, false, "(" + c.to_string() + ")", mono);
    }
  }
  return out;
}

std::string format_poly(const RationalMPoly& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (const auto& [m, c] : f.terms()) {
    std::string mono = monomial_text(m, f.ambient());
    const Rational mag = c < 0 ? Rational(-c) : c;
    std::string magnitude = (mag == 1 && !mono.empty()) ? "" : rational_to_string(mag);
    append_term(out, c < 0, magnitude, mono);
  }
  return out;
}

MPoly parse_poly(const std::string& text, int n) { return Parser(text, n).parse(); }

QPoly parse_qpoly(const std::string& text) {
  // One variable is the smallest ambient ring; reject any x variable.
  if (text.find('x') != std::string::npos)
    throw std::invalid_argument("unexpected variable in polynomial in q: '" + text + "'");
  return parse_poly(text, 1).as_constant();
}

}  // namespace hecke

#include "hecke/qpoly.hpp"

#include <stdexcept>

namespace hecke {

QPoly::QPoly(const Integer& constant) {
  if (constant != 0) coeffs_.push_back(constant);
}

QPoly::QPoly(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

QPoly QPoly::monomial(const Integer& c, int d) {
  if (d < 0) throw std::invalid_argument("QPoly::monomial: negative degree");
  if (c == 0) return {};
  std::vector<Integer> v(static_cast<std::size_t>(d) + 1);
  v.back() = c;
  return QPoly(std::move(v));
}

void QPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

int QPoly::term_count() const {
  int count = 0;
  for (const auto& c : coeffs_)
    if (c != 0) ++count;
  return count;
}

Integer QPoly::coeff(int d) const {
  if (d < 0 || d > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(d)];
}

Rational QPoly::evaluate(const Rational& r) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * r + Rational(*it);
  return acc;
}

std::optional<QPoly> QPoly::divide_by_one_minus_q() const {
  if (is_zero()) return QPoly{};
  // f = (1 - q) g  <=>  g_d = f_d + g_{d-1}, with g of degree deg(f) - 1.
  std::vector<Integer> g(coeffs_.size() - 1);
  Integer carry = 0;
  for (std::size_t d = 0; d + 1 < coeffs_.size(); ++d) {
    carry += coeffs_[d];
    g[d] = carry;
  }
  if (carry + coeffs_.back() != 0) return std::nullopt;
  return QPoly(std::move(g));
}

QPoly QPoly::operator-() const {
  QPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

QPoly& QPoly::operator+=(const QPoly& other) {
  if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t d = 0; d < other.coeffs_.size(); ++d) coeffs_[d] += other.coeffs_[d];
  trim();
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& other) {
  if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t d = 0; d < other.coeffs_.size(); ++d) coeffs_[d] -= other.coeffs_[d];
  trim();
  return *this;
}

QPoly& QPoly::operator*=(const QPoly& other) { return *this = *this * other; }

QPoly operator*(const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Integer> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return QPoly(std::move(out));
}

std::string QPoly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t d = 0; d < coeffs_.size(); ++d) {
    const Integer& c = coeffs_[d];
    if (c == 0) continue;
    Integer mag = c < 0 ? Integer(-c) : c;
    if (c < 0)
      out += '-';
    else if (!out.empty())
      out += '+';
    if (d == 0) {
      out += mag.str();
      continue;
    }
    if (mag != 1) out += mag.str() + "*";
    out += 'q';
    if (d > 1) out += "^" + std::to_string(d);
  }
  return out;
}

QPoly qpoly_arith(const QPoly& a, const QPoly& b, QArith op) {
  switch (op) {
    case QArith::Add: return a + b;
    case QArith::Sub: return a - b;
    case QArith::Mul: return a * b;
  }
  throw std::invalid_argument("qpoly_arith: unknown op");
}

std::string rational_to_string(const Rational& r) {
  Integer num = boost::multiprecision::numerator(r);
  Integer den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Rational parse_rational(const std::string& text) {
  auto digits = [](const std::string& s, bool allow_sign) {
    std::size_t start = (allow_sign && !s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (s.size() == start) return false;
    for (std::size_t i = start; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') return false;
    return true;
  };
  auto slash = text.find('/');
  std::string num = text.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
  if (!digits(num, true) || !digits(den, false))
    throw std::invalid_argument("not a rational number: '" + text + "'");
  if (!num.empty() && num[0] == '+') num.erase(0, 1);
  Integer d(den);
  if (d == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
  return Rational(Integer(num), d);
}

}  // namespace hecke

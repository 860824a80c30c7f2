#include "hecke/mpoly.hpp"

#include <stdexcept>

#include "hecke/poly_text.hpp"

namespace hecke {

Monomial Monomial::from_exponents(std::span<const int> exponents) {
  if (exponents.size() > static_cast<std::size_t>(kMaxVars))
    throw std::invalid_argument("at most 8 variables are supported");
  Monomial m;
  for (std::size_t j = 0; j < exponents.size(); ++j) {
    if (exponents[j] < 0 || exponents[j] > kMaxExponent)
      throw std::invalid_argument("exponent out of range: " + std::to_string(exponents[j]));
    m.packed_ |= static_cast<std::uint64_t>(exponents[j]) << shift(static_cast<int>(j) + 1);
  }
  return m;
}

Monomial Monomial::variable(int var, int power) {
  if (var < 1 || var > kMaxVars) throw std::invalid_argument("variable index out of range");
  return Monomial().with_exponent(var, power);
}

Monomial Monomial::with_exponent(int var, int power) const {
  if (power < 0 || power > kMaxExponent) throw std::overflow_error("exponent out of range");
  Monomial m = *this;
  m.packed_ &= ~(std::uint64_t{0xff} << shift(var));
  m.packed_ |= static_cast<std::uint64_t>(power) << shift(var);
  return m;
}

int Monomial::degree() const {
  int d = 0;
  for (std::uint64_t p = packed_; p != 0; p >>= 8) d += static_cast<int>(p & 0xffu);
  return d;
}

std::vector<int> Monomial::exponents(int n) const {
  std::vector<int> out(static_cast<std::size_t>(n));
  for (int var = 1; var <= n; ++var) out[static_cast<std::size_t>(var - 1)] = exponent(var);
  return out;
}

int Monomial::highest_variable() const {
  for (int var = kMaxVars; var >= 1; --var)
    if (exponent(var) != 0) return var;
  return 0;
}

Monomial operator*(Monomial a, Monomial b) {
  Monomial m;
  for (int var = 1; var <= Monomial::kMaxVars; ++var) {
    const int e = a.exponent(var) + b.exponent(var);
    if (e > Monomial::kMaxExponent) throw std::overflow_error("monomial exponent overflow");
    m.packed_ |= static_cast<std::uint64_t>(e) << Monomial::shift(var);
  }
  return m;
}

MPoly::MPoly(int n) : n_(n) {
  if (n < 1 || n > Monomial::kMaxVars)
    throw std::invalid_argument("ambient variable count must be in [1, 8], got " + std::to_string(n));
}

MPoly MPoly::constant(int n, const QPoly& c) { return term(n, c, Monomial()); }

MPoly MPoly::term(int n, const QPoly& c, Monomial m) {
  MPoly f(n);
  if (m.highest_variable() > n) throw std::invalid_argument("monomial uses a variable beyond x_n");
  f.add_term(m, c);
  return f;
}

MPoly MPoly::variable(int n, int var) {
  if (var < 1 || var > n) throw std::invalid_argument("variable index out of range");
  return term(n, 1, Monomial::variable(var));
}

QPoly MPoly::coeff(Monomial m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? QPoly{} : it->second;
}

int MPoly::degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

bool MPoly::is_homogeneous_of(int d) const {
  for (const auto& [m, c] : terms_)
    if (m.degree() != d) return false;
  return true;
}

QPoly MPoly::as_constant() const {
  if (terms_.empty()) return {};
  if (terms_.size() != 1 || !terms_.begin()->first.is_one())
    throw std::domain_error("polynomial is not a constant: " + to_string());
  return terms_.begin()->second;
}

void MPoly::add_term(Monomial m, const QPoly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

MPoly MPoly::operator-() const {
  MPoly r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

void MPoly::require_same_ambient(const MPoly& other) const {
  if (n_ != other.n_)
    throw std::invalid_argument("ambient mismatch: " + std::to_string(n_) + " vs " + std::to_string(other.n_));
}

MPoly& MPoly::operator+=(const MPoly& other) {
  require_same_ambient(other);
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& other) {
  require_same_ambient(other);
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  a.require_same_ambient(b);
  MPoly out(a.n_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
  return out;
}

MPoly operator*(const QPoly& c, const MPoly& f) {
  MPoly out(f.n_);
  if (c.is_zero()) return out;
  for (const auto& [m, coeff] : f.terms_) out.terms_.emplace_hint(out.terms_.end(), m, c * coeff);
  return out;
}

MPoly operator*(Monomial m, const MPoly& f) {
  if (m.highest_variable() > f.n_) throw std::invalid_argument("monomial uses a variable beyond x_n");
  MPoly out(f.n_);
  // Multiplying by a fixed monomial preserves the term order.
  for (const auto& [mf, c] : f.terms_) out.terms_.emplace_hint(out.terms_.end(), m * mf, c);
  return out;
}

std::string MPoly::to_string() const { return format_poly(*this); }

MPoly mpoly_arith(const MPoly& f, const MPoly& g, MArith op) {
  switch (op) {
    case MArith::Add: return f + g;
    case MArith::Sub: return f - g;
    case MArith::Mul: return f * g;
  }
  throw std::invalid_argument("mpoly_arith: unknown op");
}

MPoly scalar_mul(const QPoly& c, const MPoly& f) { return c * f; }

Rational RationalMPoly::coeff(Monomial m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void RationalMPoly::add_term(Monomial m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

RationalMPoly& RationalMPoly::operator+=(const RationalMPoly& other) {
  if (n_ != other.n_) throw std::invalid_argument("ambient mismatch");
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

RationalMPoly& RationalMPoly::operator-=(const RationalMPoly& other) {
  if (n_ != other.n_) throw std::invalid_argument("ambient mismatch");
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

RationalMPoly operator*(const RationalMPoly& a, const RationalMPoly& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("ambient mismatch");
  RationalMPoly out(a.n_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
  return out;
}

std::string RationalMPoly::to_string() const { return format_poly(*this); }

RationalMPoly specialize_q(const MPoly& f, const Rational& r) {
  RationalMPoly out(f.ambient());
  for (const auto& [m, c] : f.terms()) out.add_term(m, c.evaluate(r));
  return out;
}

MPoly act_variable_permutation(const Permutation& w, const MPoly& f) {
  const int n = f.ambient();
  if (w.size() != n) throw std::invalid_argument("permutation size does not match ambient ring");
  MPoly out(n);
  for (const auto& [m, c] : f.terms()) {
    Monomial image;
    for (int var = 1; var <= n; ++var)
      if (int e = m.exponent(var)) image = image.with_exponent(w(var), e);
    out.add_term(image, c);
  }
  return out;
}

bool is_i_symmetric(int i, const MPoly& f) {
  const int n = f.ambient();
  if (i < 1 || i >= n) throw std::invalid_argument("generator index out of range");
  return act_variable_permutation(Permutation::simple(n, i), f) == f;
}

namespace {

void monomials_rec(int var, int n, int remaining, Monomial current, std::vector<Monomial>& out) {
  if (var == n) {
    out.push_back(current.with_exponent(var, remaining));
    return;
  }
  for (int e = remaining; e >= 0; --e) monomials_rec(var + 1, n, remaining - e, current.with_exponent(var, e), out);
}

}  // namespace

std::vector<Monomial> monomials_of_degree(int n, int d) {
  if (n < 1 || n > Monomial::kMaxVars) throw std::invalid_argument("variable count out of range");
  std::vector<Monomial> out;
  monomials_rec(1, n, d, Monomial(), out);
  return out;
}

std::vector<Monomial> monomials_up_to_degree(int n, int bound) {
  std::vector<Monomial> out;
  for (int d = 0; d <= bound; ++d) {
    auto level = monomials_of_degree(n, d);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

}  // namespace hecke

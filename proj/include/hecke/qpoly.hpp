#pragma once

// Integer polynomials in a single indeterminate q.

#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace hecke {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// An element of Z[q], stored densely by q-degree.
///
/// The coefficient vector never carries trailing zeros, so the zero
/// polynomial is the empty vector and equality is plain vector equality.
class QPoly {
public:
  QPoly() = default;
  QPoly(int constant) : QPoly(Integer(constant)) {}  // NOLINT: implicit by design of the ring
  QPoly(const Integer& constant);                     // NOLINT
  explicit QPoly(std::vector<Integer> coeffs);

  /// c * q^d
  static QPoly monomial(const Integer& c, int d);
  static QPoly q() { return monomial(1, 1); }

  const std::vector<Integer>& coeffs() const { return coeffs_; }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  /// Number of nonzero coefficients.
  int term_count() const;
  Integer coeff(int d) const;

  Rational evaluate(const Rational& r) const;

  /// Exact quotient by (1 - q), or nullopt when (1 - q) does not divide.
  std::optional<QPoly> divide_by_one_minus_q() const;

  QPoly operator-() const;
  QPoly& operator+=(const QPoly& other);
  QPoly& operator-=(const QPoly& other);
  QPoly& operator*=(const QPoly& other);
  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
  friend QPoly operator*(const QPoly& a, const QPoly& b);

  friend bool operator==(const QPoly&, const QPoly&) = default;

  /// Ascending powers without spaces, e.g. "1-q", "-q+2*q^3", "0".
  std::string to_string() const;

private:
  void trim();

  std::vector<Integer> coeffs_;
};

enum class QArith { Add, Sub, Mul };

QPoly qpoly_arith(const QPoly& a, const QPoly& b, QArith op);

/// Renders a rational as "p" or "p/d".
std::string rational_to_string(const Rational& r);

/// Parses "p" or "p/d" (optional sign). Throws std::invalid_argument.
Rational parse_rational(const std::string& text);

}  // namespace hecke

#pragma once

// Sparse polynomials in x_1..x_n with coefficients in Z[q].

#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "hecke/permutation.hpp"
#include "hecke/qpoly.hpp"

namespace hecke {

/// Exponent vector packed into 64 bits, one byte per variable, x_1 in the
/// most significant byte. Integer order on the packed key is therefore the
/// lexicographic order on exponent vectors.
class Monomial {
public:
  static constexpr int kMaxVars = 8;
  static constexpr int kMaxExponent = 255;

  constexpr Monomial() = default;
  /// Throws std::invalid_argument on more than kMaxVars entries or an
  /// exponent outside [0, kMaxExponent].
  static Monomial from_exponents(std::span<const int> exponents);
  /// x_var^power
  static Monomial variable(int var, int power = 1);

  /// Exponent of x_var, 1 <= var <= kMaxVars.
  int exponent(int var) const { return static_cast<int>((packed_ >> shift(var)) & 0xffu); }
  Monomial with_exponent(int var, int power) const;
  int degree() const;
  /// Exponents of x_1..x_n.
  std::vector<int> exponents(int n) const;
  /// Largest variable index with a nonzero exponent, 0 for the unit monomial.
  int highest_variable() const;
  bool is_one() const { return packed_ == 0; }
  std::uint64_t key() const { return packed_; }

  /// Throws std::overflow_error if an exponent would exceed kMaxExponent.
  friend Monomial operator*(Monomial a, Monomial b);
  friend constexpr auto operator<=>(Monomial, Monomial) = default;

private:
  static constexpr int shift(int var) { return 8 * (kMaxVars - var); }

  std::uint64_t packed_ = 0;
};

class MPoly {
public:
  /// Terms iterate from the lexicographically largest exponent vector down.
  using TermMap = std::map<Monomial, QPoly, std::greater<>>;

  /// The zero polynomial in n variables. Throws std::invalid_argument unless
  /// 1 <= n <= Monomial::kMaxVars.
  explicit MPoly(int n = 1);
  static MPoly constant(int n, const QPoly& c);
  static MPoly term(int n, const QPoly& c, Monomial m);
  /// x_var
  static MPoly variable(int n, int var);

  int ambient() const { return n_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  /// Coefficient of m (zero if absent).
  QPoly coeff(Monomial m) const;
  /// Largest total degree, -1 for zero.
  int degree() const;
  /// True for zero and for polynomials whose terms all have degree d.
  bool is_homogeneous_of(int d) const;
  /// Constant term when the polynomial is a constant; throws std::domain_error otherwise.
  QPoly as_constant() const;

  /// Adds c * m, keeping canonical form.
  void add_term(Monomial m, const QPoly& c);

  MPoly operator-() const;
  MPoly& operator+=(const MPoly& other);
  MPoly& operator-=(const MPoly& other);
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  friend MPoly operator*(const QPoly& c, const MPoly& f);
  /// Multiplication by a monomial.
  friend MPoly operator*(Monomial m, const MPoly& f);

  friend bool operator==(const MPoly&, const MPoly&) = default;

  /// Rendering in the text grammar of poly_text.hpp.
  std::string to_string() const;

private:
  void require_same_ambient(const MPoly& other) const;

  int n_ = 1;
  TermMap terms_;
};

enum class MArith { Add, Sub, Mul };

/// Throws std::invalid_argument when the ambient sizes differ.
MPoly mpoly_arith(const MPoly& f, const MPoly& g, MArith op);
MPoly scalar_mul(const QPoly& c, const MPoly& f);

/// A polynomial in x_1..x_n over Q, the image of an MPoly under q -> r.
class RationalMPoly {
public:
  using TermMap = std::map<Monomial, Rational, std::greater<>>;

  explicit RationalMPoly(int n = 1) : n_(n) {}
  int ambient() const { return n_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coeff(Monomial m) const;
  void add_term(Monomial m, const Rational& c);

  RationalMPoly& operator+=(const RationalMPoly& other);
  RationalMPoly& operator-=(const RationalMPoly& other);
  friend RationalMPoly operator*(const RationalMPoly& a, const RationalMPoly& b);
  friend bool operator==(const RationalMPoly&, const RationalMPoly&) = default;

  std::string to_string() const;

private:
  int n_;
  TermMap terms_;
};

/// Evaluates every coefficient at q = r.
RationalMPoly specialize_q(const MPoly& f, const Rational& r);

/// w acting by x_i -> x_{w(i)}. Throws std::invalid_argument if w.size() != f.ambient().
MPoly act_variable_permutation(const Permutation& w, const MPoly& f);

/// f is invariant under swapping x_i and x_{i+1}.
bool is_i_symmetric(int i, const MPoly& f);

/// All monomials in n variables of total degree d, lexicographically decreasing.
std::vector<Monomial> monomials_of_degree(int n, int d);
/// All monomials of total degree <= bound, by degree then decreasing lex.
std::vector<Monomial> monomials_up_to_degree(int n, int bound);

}  // namespace hecke

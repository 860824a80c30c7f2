#pragma once

// Schubert polynomials of S_n and coordinates in the Schubert basis of the
// coinvariant algebra P_n / I_n.

#include <map>
#include <memory>
#include <vector>

#include "hecke/mpoly.hpp"
#include "hecke/permutation.hpp"

namespace hecke {

class SchubertTable {
public:
  /// All n! Schubert polynomials, obtained from the staircase monomial
  /// x_1^{n-1} ... x_{n-1} by divided differences along canonical reduced
  /// words of w^{-1} w_0. Throws std::invalid_argument unless 1 <= n <= 8,
  /// and std::logic_error if a result is not homogeneous of degree l(w)
  /// with nonnegative integer coefficients.
  explicit SchubertTable(int n);

  int n() const { return n_; }
  int max_length() const { return n_ * (n_ - 1) / 2; }
  /// Throws std::out_of_range for a permutation of the wrong size.
  const MPoly& operator[](const Permutation& w) const;
  const std::map<Permutation, MPoly>& polys() const { return polys_; }
  /// {w : l(w) = k}, lexicographic; empty outside [0, max_length()].
  const std::vector<Permutation>& basis(int k) const;
  /// Cached canonical_reduced_word(w).
  const Word& reduced_word(const Permutation& w) const;

private:
  int n_;
  std::map<Permutation, MPoly> polys_;
  std::map<Permutation, Word> words_;
  std::vector<std::vector<Permutation>> by_length_;
};

/// Process-wide immutable table for n, built on first use.
std::shared_ptr<const SchubertTable> schubert_table(int n);

/// A residue class in R^k in the Schubert basis; only nonzero coordinates stored.
struct CoinvariantVector {
  int k = 0;
  std::map<Permutation, QPoly> coords;

  QPoly at(const Permutation& z) const {
    auto it = coords.find(z);
    return it == coords.end() ? QPoly{} : it->second;
  }
  bool is_zero() const { return coords.empty(); }
  friend bool operator==(const CoinvariantVector&, const CoinvariantVector&) = default;
};

/// Coordinates of f modulo I_n: the coefficient of S_z is the constant d_z(f).
/// Throws std::invalid_argument unless f is homogeneous of degree k.
CoinvariantVector expand_homogeneous(const MPoly& f, int k, const SchubertTable& table);

/// Sum of coords[z] * S_z.
MPoly reconstruct(const CoinvariantVector& v, const SchubertTable& table);

/// The w t_{jk}, j <= i < k, with l(w t_{jk}) = l(w) + 1, lexicographic;
/// S_i S_w is the sum of their Schubert polynomials.
std::vector<Permutation> monk_products(int i, const Permutation& w);

struct SignedPerm {
  int sign;
  Permutation perm;
  friend bool operator==(const SignedPerm&, const SignedPerm&) = default;
};

/// x_i S_w as a signed sum of Schubert polynomials: +w t_{ik} for k > i and
/// -w t_{ji} for j < i, over transpositions raising the length by one.
std::vector<SignedPerm> x_action_schubert(int i, const Permutation& w);

}  // namespace hecke

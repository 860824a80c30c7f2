#pragma once

// Permutations of {1..n} in one-line notation and the combinatorics built on
// them: lengths, reduced words, Young-subgroup cosets, weights, Knuth classes.
//
// Conventions used throughout the library:
//   (u * v)(i) = u(v(i));
//   w * s_i swaps positions i and i+1 of the one-line notation;
//   s_i * w swaps the values i and i+1.
// A word [a_1, ..., a_l] denotes the product s_{a_1} * ... * s_{a_l}.

#include <compare>
#include <string>
#include <vector>

#include "hecke/qpoly.hpp"

namespace hecke {

/// Sequence of generator indices, each in [1, n).
using Word = std::vector<int>;

class Permutation {
public:
  Permutation() = default;
  /// Throws std::invalid_argument unless `oneline` is a bijection of {1..n}.
  explicit Permutation(std::vector<int> oneline);

  static Permutation identity(int n);
  /// The adjacent transposition s_i of S_n.
  static Permutation simple(int n, int i);
  /// The transposition exchanging j and k.
  static Permutation transposition(int n, int j, int k);
  /// The longest element w_0 = [n, n-1, ..., 1].
  static Permutation longest(int n);
  /// The 3-cycle a -> b -> c -> a.
  static Permutation cycle3(int n, int a, int b, int c);
  /// Product s_{a_1} * ... * s_{a_l}.
  static Permutation from_word(int n, const Word& word);
  /// Parses "3,1,2".
  static Permutation parse(const std::string& text);

  int size() const { return static_cast<int>(oneline_.size()); }
  /// w(i) for 1 <= i <= n.
  int operator()(int i) const { return oneline_[static_cast<std::size_t>(i - 1)]; }
  const std::vector<int>& oneline() const { return oneline_; }

  Permutation inverse() const;
  /// w * s_i (swap positions i, i+1).
  Permutation times_simple(int i) const;
  /// s_i * w (swap values i, i+1).
  Permutation simple_times(int i) const;
  /// True iff l(w s_i) < l(w), i.e. w(i) > w(i+1).
  bool has_descent(int i) const { return (*this)(i) > (*this)(i + 1); }
  bool is_identity() const;

  std::string to_string() const;

  friend Permutation operator*(const Permutation& u, const Permutation& v);
  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) {
    return a.oneline_ <=> b.oneline_;
  }

private:
  std::vector<int> oneline_;
};

/// Weakly decreasing positive parts; the partition mu of n.
class Partition {
public:
  Partition() = default;
  /// Throws std::invalid_argument if parts are not positive and weakly decreasing.
  explicit Partition(std::vector<int> parts);

  /// Parses "3+1"; "" is the empty partition.
  static Partition parse(const std::string& text);
  static Partition all_ones(int n) { return Partition(std::vector<int>(static_cast<std::size_t>(n), 1)); }

  const std::vector<int>& parts() const { return parts_; }
  int size() const;
  int length() const { return static_cast<int>(parts_.size()); }
  bool is_all_ones() const;
  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

private:
  std::vector<int> parts_;
};

/// All partitions of n, in reverse lexicographic order ((n) first, (1^n) last).
std::vector<Partition> partitions_of(int n);

/// w = r * (w_1 x ... x w_t), r a minimal left-coset representative of w S_mu.
struct CosetDecomposition {
  Permutation r;
  std::vector<Permutation> blocks;
};

/// Number of inversions.
int length(const Permutation& w);

/// Reduced word obtained by moving 1, then 2, ... to their places with
/// adjacent swaps; its product is w and its length is l(w).
Word canonical_reduced_word(const Permutation& w);

/// A reduced word for w that differs from the canonical one by a single
/// commutation or braid move, or the canonical word if no such move exists.
Word alt_reduced_word(const Permutation& w);

/// (-q)^m if w(1) > ... > w(m+1) < w(m+2) < ... < w(n), else 0.
QPoly m_q(const Permutation& w);

/// Throws std::invalid_argument if mu is not a partition of w.size().
CosetDecomposition coset_decompose(const Permutation& w, const Partition& mu);

/// Inverse of coset_decompose: r * (w_1 x ... x w_t).
Permutation recompose(const CosetDecomposition& decomposition);

/// Product of m_q over the blocks of the coset decomposition.
QPoly weight_q_mu(const Permutation& w, const Partition& mu);

/// All of S_n in lexicographic order of one-line notation.
std::vector<Permutation> all_permutations(int n);

/// Permutations of S_n with exactly k inversions, lexicographic order.
std::vector<Permutation> perms_of_length(int n, int k);

/// Generator word of T_mu: 1, ..., mu_1-1, mu_1+1, ..., skipping block ends.
Word t_mu_word(const Partition& mu);

Partition cycle_type(const Permutation& w);

/// RSK insertion tableau P(w), rows top to bottom.
std::vector<std::vector<int>> insertion_tableau(const Permutation& w);

struct KnuthShape {
  Partition shape;
  /// Each class sorted lexicographically; classes ordered by their first element.
  std::vector<std::vector<Permutation>> classes;
};

/// S_n partitioned by insertion tableau, grouped by shape (shapes in the
/// order of partitions_of(n)).
std::vector<KnuthShape> knuth_classes(int n);

/// Serializes a word as "1.2.1"; the empty word as "".
std::string word_to_string(const Word& word);
/// Parses "1.2.1" or "1,2,1".
Word parse_word(const std::string& text);

}  // namespace hecke

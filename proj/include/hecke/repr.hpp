#pragma once

// Matrices of the Hecke actions on the graded pieces R^k of the coinvariant
// algebra, in the Schubert basis, and the character computations built on
// them.

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "hecke/permutation.hpp"
#include "hecke/qpoly.hpp"
#include "hecke/report.hpp"
#include "hecke/schubert.hpp"

namespace hecke {

/// Rho1: T_i -> A_i. Rho2: T_i -> R_i. SymQ1: T_i -> s_i (the q = 1 action).
enum class Action { Rho1, Rho2, SymQ1 };

std::string action_name(Action action);  // "rho1", "rho2", "symq1"
Action parse_action(const std::string& name);

/// Dense matrix over Z[q].
class QMatrix {
public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static QMatrix identity(std::size_t size);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  QPoly& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const QPoly& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  QPoly trace() const;
  /// Entrywise q -> value.
  std::vector<std::vector<Rational>> specialize(const Rational& value) const;

  /// Skips zero entries of the left factor; generator matrices are sparse.
  friend QMatrix operator*(const QMatrix& a, const QMatrix& b);
  friend QMatrix operator+(const QMatrix& a, const QMatrix& b);
  friend QMatrix operator*(const QPoly& c, const QMatrix& m);
  friend bool operator==(const QMatrix&, const QMatrix&) = default;

private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<QPoly> data_;
};

/// An operator on R^k: entries(z, w) is the coefficient of S_z in the image of S_w.
struct RepMatrix {
  int k = 0;
  Action action = Action::Rho1;
  /// {w : l(w) = k}, lexicographic.
  std::vector<Permutation> basis;
  QMatrix entries;

  /// Throws std::out_of_range if w is not in the basis.
  std::size_t index_of(const Permutation& w) const;
  QPoly at(const Permutation& z, const Permutation& w) const { return entries(index_of(z), index_of(w)); }
  CoinvariantVector column(const Permutation& w) const;
};

/// Schubert coordinates of the image of S_w under the generator T_i.
CoinvariantVector image_column(Action action, int i, const Permutation& w, const SchubertTable& table);

RepMatrix generator_matrix(Action action, int i, int k, const SchubertTable& table, int jobs = 1);

/// Product of generator matrices in operator order: word [i_1, ..., i_m]
/// maps to M_{i_1} ... M_{i_m}. The empty word gives the identity.
RepMatrix word_matrix(Action action, const Word& word, int k, const SchubertTable& table);

/// All generator matrices of one action, built once and then read-only.
class HeckeRepresentation {
public:
  HeckeRepresentation(Action action, std::shared_ptr<const SchubertTable> table, int jobs = 1);

  Action action() const { return action_; }
  int n() const { return table_->n(); }
  const SchubertTable& table() const { return *table_; }
  /// Throws std::out_of_range for an invalid (i, k).
  const RepMatrix& generator(int i, int k) const;
  RepMatrix word(const Word& word, int k) const;

private:
  Action action_;
  std::shared_ptr<const SchubertTable> table_;
  /// generators_[k][i - 1]
  std::vector<std::vector<RepMatrix>> generators_;
};

enum class CharacterSource { Trace1, Trace2, WeightFormula, KnuthClass };

struct CharacterValue {
  int k = 0;
  Partition mu;
  QPoly value;
  CharacterSource source = CharacterSource::WeightFormula;
};

/// Trace of the action of T_mu on R^k.
CharacterValue graded_character(const HeckeRepresentation& rep, const Partition& mu, int k);
CharacterValue graded_character(Action action, const Partition& mu, int k, const SchubertTable& table);

/// Sum of weight_q^mu(w) over l(w) = k.
CharacterValue weight_character(const Partition& mu, int k);

/// Closed-form Schubert coordinates of A_i S_w for a descent (w s_i < w):
///   -q S_w + q sum_{k<i} S_{w(k,i+1,i)} - sum_{k<i} S_{w(k,i,i+1)}
///          + sum_{k>i+1} S_{w(k,i,i+1)} - q sum_{k>i+1} S_{w(k,i+1,i)},
/// keeping only the 3-cycle products of length l(w). Throws
/// std::invalid_argument on an ascent.
CoinvariantVector theorem33_column(int i, const Permutation& w);

/// The q = 1 specialization of the same closed form, as the permutation
/// action s_i S_w. Throws std::invalid_argument on an ascent.
CoinvariantVector prop23_column(int i, const Permutation& w);

/// Off-diagonal entries e(q) of a descent column of the Rho2 generator,
/// split as e = (1 - q) b + c with c = e(1).
struct BCDecomposition {
  int i = 0;
  Permutation w;
  std::map<Permutation, Integer> b;
  std::map<Permutation, Integer> c;
  /// Structural problems: entries of q-degree > 1, c outside {-1, 0, 1},
  /// support on a descent z, or a diagonal entry other than -q.
  std::vector<std::string> violations;
};

/// Throws std::invalid_argument on an ascent.
BCDecomposition prop64_decompose(int i, const Permutation& w, const SchubertTable& table);
BCDecomposition prop64_decompose(int i, const Permutation& w, const HeckeRepresentation& rho2);

CharacterValue knuth_class_character(const std::vector<Permutation>& cls, const Partition& mu);

/// Irreducible S_n character chi^lambda at cycle type mu, by the
/// Murnaghan-Nakayama rule on beta-sets.
Integer sn_character_oracle(const Partition& lambda, const Partition& mu);

struct TraceComparison {
  Permutation w;
  int k = 0;
  QPoly rho1;
  QPoly rho2;
  bool agree() const { return rho1 == rho2; }
};

struct EquivalenceReport {
  int n = 0;
  std::vector<TraceComparison> comparisons;
  bool all_agree() const;
};

/// Traces of T_w (canonical reduced word) under both actions, all w, all k.
EquivalenceReport equivalence_report(const HeckeRepresentation& rho1, const HeckeRepresentation& rho2,
                                     int jobs = 1);
EquivalenceReport equivalence_report(int n, int jobs = 1);

struct BScanEntry {
  int i;
  Permutation w;
  Permutation z;
  Integer b;
  Integer c;
};

struct BScanResult {
  int n = 0;
  std::size_t descent_pairs = 0;
  std::vector<BScanEntry> entries;
  /// Multiplicity of each observed b.
  std::map<Integer, std::size_t> b_histogram;
  /// Entries with b outside {-1, 0, 1}. Reported, never treated as failure.
  std::vector<BScanEntry> conjecture_violations;
  /// Structural violations of the (1 - q) b + c form; these are failures.
  std::vector<std::string> structural_violations;
};

/// Decomposes every descent column (i, w) of the Rho2 generators.
BScanResult scan_b(const HeckeRepresentation& rho2);

}  // namespace hecke

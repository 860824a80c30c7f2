#pragma once

// Linear operators on Z[q][x_1..x_n]: the variable swaps s_i, divided
// differences, multiplication operators, the q-commutators
//   A_i = d_i X_i - q X_i d_i,      B_i = -(d_i X_{i+1} - q X_{i+1} d_i),
// and the monomial operators R_i and R*_i. Operators are plain data so
// that words of them can be printed, compared and replayed.

#include <string>
#include <vector>

#include "hecke/mpoly.hpp"
#include "hecke/permutation.hpp"
#include "hecke/report.hpp"

namespace hecke {

enum class OpKind { S, Partial, X, A, B, R, RStar };

struct GeneratorOp {
  OpKind kind;
  int index;

  friend bool operator==(const GeneratorOp&, const GeneratorOp&) = default;
};

/// Operators composed as in operator notation: apply(word, f) is
/// ops[0](ops[1](...ops.back()(f))). Printed left to right, e.g. "A1.A2.R1".
struct OpWord {
  std::vector<GeneratorOp> ops;

  std::string to_string() const;
  /// Throws std::invalid_argument on unknown names or missing indices.
  static OpWord parse(const std::string& text);

  friend bool operator==(const OpWord&, const OpWord&) = default;
};

/// "S", "D" (divided difference), "X", "A", "B", "R", "R*".
std::string op_kind_name(OpKind kind);

/// Throws std::invalid_argument if the index is out of range for f.ambient().
MPoly apply(const GeneratorOp& g, const MPoly& f);
MPoly apply(const OpWord& word, const MPoly& f);

/// d_i f, the exact quotient of f - s_i f by x_i - x_{i+1}. Throws
/// std::logic_error if the division leaves a remainder.
MPoly divided_difference(int i, const MPoly& f);

/// f with x_i and x_{i+1} exchanged.
MPoly swap_variables(int i, const MPoly& f);

/// d_{a_1} ... d_{a_k} f for word = [a_1, ..., a_k].
MPoly apply_partial_word(const Word& word, const MPoly& f);
/// d_w along the canonical reduced word of w.
MPoly apply_partial_w(const Permutation& w, const MPoly& f);

/// Braid, commuting and quadratic relations of the family on every monomial
/// of degree <= degree_bound. For S the quadratic relation is s_i^2 = 1.
/// Throws std::invalid_argument for a kind that is not a Hecke family.
CheckReport check_relations(OpKind family, int n, int degree_bound);

/// Nil-Coxeter relations of the d_i and their commutation rules with X_j,
/// on every monomial of degree <= degree_bound.
CheckReport commutation_suite(int n, int degree_bound);

struct AMinusR {
  MPoly difference;
  /// difference / (1 - q)
  MPoly witness;
};

/// (A_i - R_i) f together with its quotient by 1 - q. Throws std::logic_error
/// when the difference is not i-symmetric or not divisible by 1 - q.
AMinusR a_minus_r_check(int i, const MPoly& f);

/// dim ker(F_i - 1) on the span of degree-d monomials at q = value, F in {A, R}.
int fixed_space_dimension(OpKind family, int i, int n, int degree, const Rational& value);

/// Dimension of the i-symmetric polynomials of degree d: the number of
/// s_i-orbits on degree-d monomials.
int symmetric_space_dimension(int i, int n, int degree);

}  // namespace hecke

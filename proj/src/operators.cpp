#include "hecke/operators.hpp"

#include <stdexcept>

#include "hecke/linalg.hpp"

namespace hecke {

namespace {

const QPoly kQ = QPoly::q();
const QPoly kOneMinusQ = QPoly(1) - QPoly::q();

void check_generator_index(int i, int n) {
  if (i < 1 || i >= n)
    throw std::invalid_argument("generator index " + std::to_string(i) + " outside [1, " + std::to_string(n) + ")");
}

Monomial swapped(Monomial m, int i) {
  const int a = m.exponent(i), b = m.exponent(i + 1);
  return m.with_exponent(i, b).with_exponent(i + 1, a);
}

MPoly times_variable(int var, const MPoly& f) { return Monomial::variable(var) * f; }

/// R_i (transpose = false) or R*_i (transpose = true), monomial by monomial.
MPoly randomized(int i, const MPoly& f, bool transpose) {
  MPoly out(f.ambient());
  for (const auto& [m, c] : f.terms()) {
    const int alpha = m.exponent(i), beta = m.exponent(i + 1);
    const Monomial flipped = swapped(m, i);
    if (alpha == beta) {
      out.add_term(m, c);
    } else if (alpha > beta) {
      out.add_term(flipped, transpose ? c : kQ * c);
    } else {
      out.add_term(m, kOneMinusQ * c);
      out.add_term(flipped, transpose ? kQ * c : c);
    }
  }
  return out;
}

std::string monomial_label(Monomial m, int n) { return MPoly::term(n, 1, m).to_string(); }

}  // namespace

std::string op_kind_name(OpKind kind) {
  switch (kind) {
    case OpKind::S: return "S";
    case OpKind::Partial: return "D";
    case OpKind::X: return "X";
    case OpKind::A: return "A";
    case OpKind::B: return "B";
    case OpKind::R: return "R";
    case OpKind::RStar: return "R*";
  }
  return "?";
}

std::string OpWord::to_string() const {
  std::string out;
  for (std::size_t j = 0; j < ops.size(); ++j) {
    if (j) out += '.';
    out += op_kind_name(ops[j].kind) + std::to_string(ops[j].index);
  }
  return out;
}

OpWord OpWord::parse(const std::string& text) {
  OpWord word;
  if (text.empty()) return word;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('.', start);
    if (end == std::string::npos) end = text.size();
    const std::string token = text.substr(start, end - start);
    std::size_t digits = token.find_first_of("0123456789");
    if (digits == std::string::npos || digits == 0)
      throw std::invalid_argument("bad operator token '" + token + "'");
    const std::string name = token.substr(0, digits);
    const std::string index = token.substr(digits);
    if (index.find_first_not_of("0123456789") != std::string::npos || index.size() > 3)
      throw std::invalid_argument("bad operator index in '" + token + "'");
    OpKind kind;
    if (name == "S")
      kind = OpKind::S;
    else if (name == "D")
      kind = OpKind::Partial;
    else if (name == "X")
      kind = OpKind::X;
    else if (name == "A")
      kind = OpKind::A;
    else if (name == "B")
      kind = OpKind::B;
    else if (name == "R")
      kind = OpKind::R;
    else if (name == "R*")
      kind = OpKind::RStar;
    else
      throw std::invalid_argument("unknown operator '" + name + "'");
    word.ops.push_back({kind, std::stoi(index)});
    start = end + 1;
  }
  return word;
}

MPoly swap_variables(int i, const MPoly& f) {
  check_generator_index(i, f.ambient());
  MPoly out(f.ambient());
  for (const auto& [m, c] : f.terms()) out.add_term(swapped(m, i), c);
  return out;
}

MPoly divided_difference(int i, const MPoly& f) {
  check_generator_index(i, f.ambient());
  // Divide f - s_i f by x_i - x_{i+1}. The divisor's leading term under lex
  // order is x_i, and x_i^a x_{i+1}^b > x_i^{a-1} x_{i+1}^{b+1}, so
  // reducing the leading term strictly decreases the remaining work.
  MPoly::TermMap work = (f - swap_variables(i, f)).terms();
  MPoly quotient(f.ambient());
  while (!work.empty()) {
    auto lead = work.begin();
    const Monomial m = lead->first;
    const QPoly c = std::move(lead->second);
    work.erase(lead);
    const int a = m.exponent(i);
    if (a == 0)
      throw std::logic_error("divided difference left a nonzero remainder at " + monomial_label(m, f.ambient()));
    const Monomial reduced = m.with_exponent(i, a - 1);
    quotient.add_term(reduced, c);
    const Monomial next = reduced.with_exponent(i + 1, reduced.exponent(i + 1) + 1);
    auto [it, inserted] = work.try_emplace(next, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) work.erase(it);
    }
  }
  return quotient;
}

MPoly apply(const GeneratorOp& g, const MPoly& f) {
  const int n = f.ambient();
  if (g.kind == OpKind::X) {
    if (g.index < 1 || g.index > n) throw std::invalid_argument("variable index out of range");
    return times_variable(g.index, f);
  }
  check_generator_index(g.index, n);
  const int i = g.index;
  switch (g.kind) {
    case OpKind::S: return swap_variables(i, f);
    case OpKind::Partial: return divided_difference(i, f);
    case OpKind::A:
      return divided_difference(i, times_variable(i, f)) - kQ * times_variable(i, divided_difference(i, f));
    case OpKind::B:
      return kQ * times_variable(i + 1, divided_difference(i, f)) - divided_difference(i, times_variable(i + 1, f));
    case OpKind::R: return randomized(i, f, false);
    case OpKind::RStar: return randomized(i, f, true);
    case OpKind::X: break;
  }
  throw std::invalid_argument("unknown operator kind");
}

MPoly apply(const OpWord& word, const MPoly& f) {
  MPoly out = f;
  for (auto it = word.ops.rbegin(); it != word.ops.rend(); ++it) out = apply(*it, out);
  return out;
}

MPoly apply_partial_word(const Word& word, const MPoly& f) {
  MPoly out = f;
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    if (out.is_zero()) break;
    out = divided_difference(*it, out);
  }
  return out;
}

MPoly apply_partial_w(const Permutation& w, const MPoly& f) {
  if (w.size() != f.ambient()) throw std::invalid_argument("permutation size does not match ambient ring");
  return apply_partial_word(canonical_reduced_word(w), f);
}

CheckReport check_relations(OpKind family, int n, int degree_bound) {
  if (family == OpKind::Partial || family == OpKind::X)
    throw std::invalid_argument("check_relations: not a Hecke family");
  CheckReport report;
  report.name = "relations[" + op_kind_name(family) + "] n=" + std::to_string(n) +
                " degree<=" + std::to_string(degree_bound);
  auto op = [&](int i, const MPoly& f) { return apply(GeneratorOp{family, i}, f); };

  for (Monomial m : monomials_up_to_degree(n, degree_bound)) {
    const MPoly f = MPoly::term(n, 1, m);
    const std::string at = " on " + f.to_string();
    for (int i = 1; i < n; ++i) {
      const MPoly once = op(i, f);
      const MPoly twice = op(i, once);
      if (family == OpKind::S)
        report.record(twice == f, "s_" + std::to_string(i) + "^2 = 1" + at);
      else
        report.record(twice == kOneMinusQ * once + kQ * f, "quadratic(" + std::to_string(i) + ")" + at);
      if (i + 1 < n)
        report.record(op(i, op(i + 1, once)) == op(i + 1, op(i, op(i + 1, f))),
                      "braid(" + std::to_string(i) + "," + std::to_string(i + 1) + ")" + at);
      for (int j = i + 2; j < n; ++j)
        report.record(op(i, op(j, f)) == op(j, once),
                      "commute(" + std::to_string(i) + "," + std::to_string(j) + ")" + at);
    }
  }
  return report;
}

CheckReport commutation_suite(int n, int degree_bound) {
  CheckReport report;
  report.name = "commutation n=" + std::to_string(n) + " degree<=" + std::to_string(degree_bound);
  auto d = [](int i, const MPoly& f) { return divided_difference(i, f); };
  auto x = [](int j, const MPoly& f) { return times_variable(j, f); };

  for (Monomial m : monomials_up_to_degree(n, degree_bound)) {
    const MPoly f = MPoly::term(n, 1, m);
    const std::string at = " on " + f.to_string();
    for (int i = 1; i < n; ++i) {
      const std::string si = std::to_string(i);
      const MPoly di = d(i, f);
      report.record(d(i, di).is_zero(), "d_" + si + "^2 = 0" + at);
      if (i + 1 < n)
        report.record(d(i, d(i + 1, di)) == d(i + 1, d(i, d(i + 1, f))), "nil-braid(" + si + ")" + at);
      for (int j = i + 2; j < n; ++j)
        report.record(d(i, d(j, f)) == d(j, di), "d_" + si + " d_" + std::to_string(j) + " commute" + at);
      for (int j = 1; j <= n; ++j)
        if (std::abs(i - j) > 1)
          report.record(d(i, x(j, f)) == x(j, di), "d_" + si + " X_" + std::to_string(j) + " commute" + at);
      report.record(d(i, x(i, f)) == f + x(i + 1, di), "d_i X_i = 1 + X_{i+1} d_i, i=" + si + at);
      report.record(x(i, di) == f + d(i, x(i + 1, f)), "X_i d_i = 1 + d_i X_{i+1}, i=" + si + at);
    }
  }
  return report;
}

AMinusR a_minus_r_check(int i, const MPoly& f) {
  const MPoly difference = apply(GeneratorOp{OpKind::A, i}, f) - apply(GeneratorOp{OpKind::R, i}, f);
  if (!is_i_symmetric(i, difference))
    throw std::logic_error("(A_i - R_i) f is not i-symmetric for f = " + f.to_string());
  MPoly witness(f.ambient());
  for (const auto& [m, c] : difference.terms()) {
    auto quotient = c.divide_by_one_minus_q();
    if (!quotient) throw std::logic_error("(A_i - R_i) f is not divisible by 1-q for f = " + f.to_string());
    witness.add_term(m, *quotient);
  }
  return {difference, witness};
}

int fixed_space_dimension(OpKind family, int i, int n, int degree, const Rational& value) {
  const auto basis = monomials_of_degree(n, degree);
  RationalMatrix rows(basis.size(), std::vector<Rational>(basis.size()));
  for (std::size_t col = 0; col < basis.size(); ++col) {
    const MPoly f = MPoly::term(n, 1, basis[col]);
    const RationalMPoly image = specialize_q(apply(GeneratorOp{family, i}, f) - f, value);
    for (std::size_t row = 0; row < basis.size(); ++row) rows[row][col] = image.coeff(basis[row]);
  }
  return static_cast<int>(basis.size()) - rank(std::move(rows));
}

int symmetric_space_dimension(int i, int n, int degree) {
  int count = 0;
  for (Monomial m : monomials_of_degree(n, degree))
    if (m.exponent(i) >= m.exponent(i + 1)) ++count;
  return count;
}

}  // namespace hecke

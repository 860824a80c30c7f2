#include "hecke/verify.hpp"

#include <functional>
#include <map>
#include <stdexcept>

#include "hecke/linalg.hpp"
#include "hecke/operators.hpp"
#include "hecke/random.hpp"
#include "hecke/repr.hpp"
#include "hecke/schubert.hpp"

namespace hecke {

namespace {

std::string at_pair(int i, const Permutation& w) { return " at i=" + std::to_string(i) + ", w=" + w.to_string(); }

std::string show(const CoinvariantVector& v) {
  if (v.is_zero()) return "0";
  std::string out;
  for (const auto& [z, c] : v.coords) {
    if (!out.empty()) out += " + ";
    out += "(" + c.to_string() + ")*S[" + z.to_string() + "]";
  }
  return out;
}

CoinvariantVector unit(int k, const Permutation& w) {
  CoinvariantVector v;
  v.k = k;
  v.coords.emplace(w, QPoly(1));
  return v;
}

/// prod_{j=1}^{n} (1 + q + ... + q^{j-1}); coefficient k counts permutations with k inversions.
QPoly mahonian(int n) {
  QPoly out(1);
  for (int j = 1; j <= n; ++j) out *= QPoly(std::vector<Integer>(static_cast<std::size_t>(j), 1));
  return out;
}

Integer factorial(int n) {
  Integer out = 1;
  for (int j = 2; j <= n; ++j) out *= j;
  return out;
}

/// Descent columns: diagonal -q, other entries only on z with an ascent at i.
/// Ascent columns: the unit column.
void check_column_shape(CheckReport& report, const RepMatrix& m, int i, const std::string& label) {
  const QPoly minus_q = -QPoly::q();
  for (const auto& w : m.basis) {
    const CoinvariantVector column = m.column(w);
    if (!w.has_descent(i)) {
      report.record(column == unit(m.k, w), label + " ascent column is not the unit column" + at_pair(i, w));
      continue;
    }
    report.record(column.at(w) == minus_q, label + " diagonal " + column.at(w).to_string() + " != -q" + at_pair(i, w));
    for (const auto& [z, c] : column.coords)
      if (z != w)
        report.record(!z.has_descent(i),
                      label + " entry on descent z=" + z.to_string() + at_pair(i, w));
  }
}

CheckReport relations_suite(const VerifyOptions& o) {
  CheckReport report;
  report.name = "relations";
  for (OpKind family : {OpKind::A, OpKind::B, OpKind::R, OpKind::RStar}) {
    CheckReport part = check_relations(family, o.n, o.degree_bound);
    report.notes.push_back(part.name + ": " + std::to_string(part.checks) + " checks, " +
                           std::to_string(part.failures.size()) + " failures");
    report.merge(part);
  }
  return report;
}

CheckReport commutation(const VerifyOptions& o) {
  CheckReport report = commutation_suite(o.n, o.degree_bound);
  report.name = "commutation";
  return report;
}

CheckReport schubert_suite(const VerifyOptions& o) {
  CheckReport report;
  report.name = "schubert-recursion";
  const int n = o.n;
  auto table = schubert_table(n);
  const auto perms = all_permutations(n);

  for (const auto& w : perms)
    for (int i = 1; i < n; ++i) {
      const MPoly expected = w.has_descent(i) ? (*table)[w.times_simple(i)] : MPoly(n);
      report.record(divided_difference(i, (*table)[w]) == expected, "d_i S_w recursion" + at_pair(i, w));
    }

  MPoly partial_sum(n);
  for (int i = 1; i < n; ++i) {
    partial_sum += MPoly::variable(n, i);
    report.record((*table)[Permutation::simple(n, i)] == partial_sum,
                  "S_{s_" + std::to_string(i) + "} != x1 + ... + x" + std::to_string(i));
  }

  for (int i = 1; i < n; ++i) {
    const MPoly& grassmannian = (*table)[Permutation::simple(n, i)];
    for (const auto& w : perms) {
      const int k = length(w) + 1;
      const CoinvariantVector product = expand_homogeneous(grassmannian * (*table)[w], k, *table);
      CoinvariantVector expected;
      expected.k = k;
      if (k <= table->max_length())
        for (const auto& v : monk_products(i, w)) expected.coords.emplace(v, QPoly(1));
      report.record(product == expected, "Monk: S_i S_w = " + show(product) + " but rule gives " + show(expected) +
                                             at_pair(i, w));
    }
  }

  for (int i = 1; i <= n; ++i)
    for (const auto& w : perms) {
      const int k = length(w) + 1;
      const CoinvariantVector product = expand_homogeneous(MPoly::variable(n, i) * (*table)[w], k, *table);
      CoinvariantVector expected;
      expected.k = k;
      if (k <= table->max_length())
        for (const auto& [sign, v] : x_action_schubert(i, w)) expected.coords.emplace(v, QPoly(sign));
      report.record(product == expected, "x_i S_w = " + show(product) + " but rule gives " + show(expected) +
                                             at_pair(i, w));
    }

  const QPoly counts = mahonian(n);
  for (int k = 0; k <= table->max_length(); ++k)
    report.record(Integer(table->basis(k).size()) == counts.coeff(k),
                  "dim R^" + std::to_string(k) + " differs from the inversion count");

  Rng rng(o.seed);
  for (int trial = 0; trial < 20; ++trial) {
    const int k = static_cast<int>(uniform_int(rng, 0, table->max_length() + 1));
    const MPoly f = random_homogeneous(rng, n, k, 4);
    const CoinvariantVector v = expand_homogeneous(f, k, *table);
    const MPoly residue = f - reconstruct(v, *table);
    report.record(expand_homogeneous(residue, k, *table).is_zero(),
                  "round trip leaves a nonzero class for " + f.to_string());
  }
  return report;
}

CheckReport theorem33_suite(const VerifyOptions& o) {
  CheckReport report;
  report.name = "theorem33";
  auto table = schubert_table(o.n);
  HeckeRepresentation rho1(Action::Rho1, table, o.jobs);
  HeckeRepresentation rho2(Action::Rho2, table, o.jobs);
  for (int k = 0; k <= table->max_length(); ++k)
    for (int i = 1; i < o.n; ++i) {
      const RepMatrix& m = rho1.generator(i, k);
      for (const auto& w : m.basis) {
        if (!w.has_descent(i)) continue;
        const CoinvariantVector closed = theorem33_column(i, w);
        const CoinvariantVector direct = m.column(w);
        report.record(closed == direct,
                      "closed form " + show(closed) + " != computed " + show(direct) + at_pair(i, w));
      }
      check_column_shape(report, m, i, "rho1");
      check_column_shape(report, rho2.generator(i, k), i, "rho2");
    }
  return report;
}

CheckReport lemma42_suite(const VerifyOptions& o) {
  CheckReport report;
  report.name = "lemma42";
  auto table = schubert_table(o.n);
  HeckeRepresentation rho1(Action::Rho1, table, o.jobs);
  Rng rng(o.seed);
  const QPoly minus_q = -QPoly::q();
  for (int k = 0; k <= table->max_length(); ++k)
    for (int trial = 0; trial < 4; ++trial) {
      const Word pi = random_word(rng, o.n, static_cast<int>(uniform_int(rng, 0, 2 * o.n)));
      const RepMatrix m = rho1.word(pi, k);
      for (int i = 1; i < o.n; ++i) {
        const QMatrix product = rho1.generator(i, k).entries * m.entries;
        for (std::size_t j = 0; j < m.basis.size(); ++j) {
          if (!m.basis[j].has_descent(i)) continue;
          report.record(product(j, j) == minus_q * m.entries(j, j),
                        "<A_i A_pi S_w, S_w> != -q <A_pi S_w, S_w> for pi=" + word_to_string(pi) +
                            at_pair(i, m.basis[j]));
        }
      }
    }
  return report;
}

CheckReport claim62_suite(const VerifyOptions& o) {
  CheckReport report;
  report.name = "claim62";
  const int n = o.n;
  const QPoly one_minus_q = QPoly(1) - QPoly::q();
  // At m = 0 the right side is (1-q) d_i(x_j), which is +-(1-q) for j in
  // {i, i+1}, while both operators fix 1; the identity holds from m = 1 on.
  for (int i = 1; i < n; ++i) {
    const MPoly one = MPoly::constant(n, 1);
    report.record(apply(GeneratorOp{OpKind::A, i}, one) == apply(GeneratorOp{OpKind::R, i}, one),
                  "(A_i - R_i)(1) != 0 for i=" + std::to_string(i));
  }
  for (int i = 1; i < n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int m = 1; m <= 6; ++m) {
        const MPoly f = MPoly::term(n, 1, Monomial::variable(j, m));
        const MPoly lhs = apply(GeneratorOp{OpKind::A, i}, f) - apply(GeneratorOp{OpKind::R, i}, f);
        const MPoly rhs = one_minus_q * divided_difference(i, MPoly::term(n, 1, Monomial::variable(j, m + 1)));
        report.record(lhs == rhs, "(A_i - R_i)(x_j^m) != (1-q) d_i(x_j^{m+1}) for i=" + std::to_string(i) +
                                      ", j=" + std::to_string(j) + ", m=" + std::to_string(m));
      }

  Rng rng(o.seed);
  std::vector<MPoly> samples;
  for (Monomial m : monomials_up_to_degree(n, o.degree_bound)) samples.push_back(MPoly::term(n, 1, m));
  for (int trial = 0; trial < 20; ++trial) samples.push_back(random_poly(rng, n, o.degree_bound, 5));
  for (const auto& f : samples)
    for (int i = 1; i < n; ++i) {
      try {
        const AMinusR result = a_minus_r_check(i, f);
        report.record(one_minus_q * result.witness == result.difference, "witness mismatch for " + f.to_string());
      } catch (const std::logic_error& e) {
        report.record(false, e.what());
      }
    }
  return report;
}

CheckReport kernels_suite(const VerifyOptions& o) {
  CheckReport report;
  report.name = "kernels";
  Rng rng(o.seed);
  std::vector<Rational> values;
  for (int j = 0; j < 3; ++j) values.push_back(random_rational(rng));
  if (o.q_value) values.push_back(*o.q_value);
  for (int i = 1; i < o.n; ++i)
    for (int d = 0; d <= o.degree_bound; ++d) {
      const int expected = symmetric_space_dimension(i, o.n, d);
      for (const auto& value : values)
        for (OpKind family : {OpKind::A, OpKind::R}) {
          const int got = fixed_space_dimension(family, i, o.n, d, value);
          report.record(got == expected, "dim ker(" + op_kind_name(family) + "_" + std::to_string(i) + " - 1) = " +
                                             std::to_string(got) + " != " + std::to_string(expected) +
                                             " in degree " + std::to_string(d) + " at q=" + rational_to_string(value));
        }
    }
  return report;
}

CheckReport equivalence_suite(const VerifyOptions& o) {
  CheckReport report;
  report.name = "equivalence";
  const EquivalenceReport eq = equivalence_report(o.n, o.jobs);
  for (const auto& c : eq.comparisons)
    report.record(c.agree(), "tr T_w on R^" + std::to_string(c.k) + " for w=" + c.w.to_string() + ": rho1 " +
                                 c.rho1.to_string() + ", rho2 " + c.rho2.to_string());
  return report;
}

CheckReport knuth_suite(const VerifyOptions& o) {
  CheckReport report;
  report.name = "knuth";
  const auto mus = partitions_of(o.n);
  for (const auto& shape : knuth_classes(o.n))
    for (const auto& mu : mus) {
      const QPoly first = knuth_class_character(shape.classes.front(), mu).value;
      for (const auto& cls : shape.classes)
        report.record(knuth_class_character(cls, mu).value == first,
                      "classes of shape " + shape.shape.to_string() + " differ at mu=" + mu.to_string());
      const Integer oracle = sn_character_oracle(shape.shape, mu);
      report.record(first.evaluate(1) == Rational(oracle),
                    "q=1 class character " + first.to_string() + " != chi^" + shape.shape.to_string() + "(" +
                        mu.to_string() + ") = " + oracle.str());
    }
  return report;
}

CheckReport characters_suite(const VerifyOptions& o) {
  CheckReport report;
  report.name = "characters";
  auto table = schubert_table(o.n);
  HeckeRepresentation rho1(Action::Rho1, table, o.jobs);
  HeckeRepresentation rho2(Action::Rho2, table, o.jobs);
  for (const auto& mu : partitions_of(o.n))
    for (int k = 0; k <= table->max_length(); ++k) {
      const QPoly w = weight_character(mu, k).value;
      const QPoly t1 = graded_character(rho1, mu, k).value;
      const QPoly t2 = graded_character(rho2, mu, k).value;
      const std::string at = " for mu=" + mu.to_string() + ", k=" + std::to_string(k);
      report.record(t1 == w, "rho1 trace " + t1.to_string() + " != weight sum " + w.to_string() + at);
      report.record(t2 == w, "rho2 trace " + t2.to_string() + " != weight sum " + w.to_string() + at);
    }
  return report;
}

CheckReport q1_suite(const VerifyOptions& o) {
  CheckReport report;
  report.name = "q1";
  auto table = schubert_table(o.n);
  HeckeRepresentation rho1(Action::Rho1, table, o.jobs);
  HeckeRepresentation rho2(Action::Rho2, table, o.jobs);
  HeckeRepresentation sym(Action::SymQ1, table, o.jobs);
  for (int k = 0; k <= table->max_length(); ++k)
    for (int i = 1; i < o.n; ++i) {
      const RepMatrix& s = sym.generator(i, k);
      const std::string at = " for i=" + std::to_string(i) + ", k=" + std::to_string(k);
      report.record(rho1.generator(i, k).entries.specialize(1) == s.entries.specialize(1),
                    "rho1 at q=1 differs from the permutation action" + at);
      report.record(rho2.generator(i, k).entries.specialize(1) == s.entries.specialize(1),
                    "rho2 at q=1 differs from the permutation action" + at);
      for (const auto& w : s.basis) {
        const CoinvariantVector column = s.column(w);
        if (!w.has_descent(i)) {
          report.record(column == unit(k, w), "s_i S_w != S_w on an ascent" + at_pair(i, w));
          continue;
        }
        report.record(column == prop23_column(i, w),
                      "s_i S_w = " + show(column) + " but the q=1 closed form gives " + show(prop23_column(i, w)) +
                          at_pair(i, w));
        bool shape = column.at(w) == QPoly(-1);
        for (const auto& [z, c] : column.coords)
          if (z != w) shape = shape && (c == QPoly(1) || c == QPoly(-1));
        report.record(shape, "s_i S_w is not -S_w plus unit entries" + at_pair(i, w));
      }
    }

  for (const auto& mu : partitions_of(o.n)) {
    const Rational expected = mu.is_all_ones() ? Rational(factorial(o.n)) : Rational(0);
    Rational sum1 = 0, sum2 = 0, sumw = 0;
    for (int k = 0; k <= table->max_length(); ++k) {
      sum1 += graded_character(rho1, mu, k).value.evaluate(1);
      sum2 += graded_character(rho2, mu, k).value.evaluate(1);
      sumw += weight_character(mu, k).value.evaluate(1);
    }
    const std::string at = " for mu=" + mu.to_string() + " (expected " + rational_to_string(expected) + ")";
    report.record(sum1 == expected, "sum of rho1 characters at q=1 is " + rational_to_string(sum1) + at);
    report.record(sum2 == expected, "sum of rho2 characters at q=1 is " + rational_to_string(sum2) + at);
    report.record(sumw == expected, "sum of weight characters at q=1 is " + rational_to_string(sumw) + at);
  }
  return report;
}

CheckReport prop64_suite(const VerifyOptions& o) {
  CheckReport report;
  report.name = "prop64";
  HeckeRepresentation rho2(Action::Rho2, schubert_table(o.n), o.jobs);
  const BScanResult scan = scan_b(rho2);
  report.record(scan.descent_pairs > 0 || o.n < 2, "no descent pairs scanned");
  for (const auto& v : scan.structural_violations) report.record(false, v);
  for (const auto& e : scan.entries) report.record(e.c >= -1 && e.c <= 1, "c outside {-1,0,1}" + at_pair(e.i, e.w));
  std::string histogram;
  for (const auto& [b, count] : scan.b_histogram)
    histogram += (histogram.empty() ? "" : ", ") + b.str() + ":" + std::to_string(count);
  report.notes.push_back("b-values observed: {" + histogram + "}; outside {-1,0,1}: " +
                         std::to_string(scan.conjecture_violations.size()));
  return report;
}

using SuiteFn = std::function<CheckReport(const VerifyOptions&)>;

const std::map<std::string, SuiteFn>& suites() {
  static const std::map<std::string, SuiteFn> table = {
      {"relations", relations_suite},   {"commutation", commutation},     {"schubert-recursion", schubert_suite},
      {"theorem33", theorem33_suite},   {"lemma42", lemma42_suite},       {"claim62", claim62_suite},
      {"kernels", kernels_suite},       {"equivalence", equivalence_suite}, {"knuth", knuth_suite},
      {"characters", characters_suite}, {"q1", q1_suite},                 {"prop64", prop64_suite},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"relations",  "commutation", "schubert-recursion", "theorem33",
                                                 "lemma42",    "claim62",     "kernels",            "equivalence",
                                                 "knuth",      "characters",  "q1",                 "prop64"};
  return names;
}

CheckReport run_suite(const std::string& suite, const VerifyOptions& options) {
  auto it = suites().find(suite);
  if (it == suites().end()) throw std::invalid_argument("unknown suite '" + suite + "'");
  if (options.n < 2 || options.n > 6) throw std::invalid_argument("verify needs 2 <= n <= 6");
  if (options.degree_bound < 0) throw std::invalid_argument("degree bound must be nonnegative");
  return it->second(options);
}

std::vector<CheckReport> run_suites(const std::string& suite, const VerifyOptions& options) {
  std::vector<CheckReport> out;
  if (suite == "all") {
    for (const auto& name : suite_names()) out.push_back(run_suite(name, options));
  } else {
    out.push_back(run_suite(suite, options));
  }
  return out;
}

}  // namespace hecke

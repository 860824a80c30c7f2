#include "hecke/repr.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "hecke/operators.hpp"
#include "hecke/parallel.hpp"

namespace hecke {

namespace {

OpKind generator_kind(Action action) {
  switch (action) {
    case Action::Rho1: return OpKind::A;
    case Action::Rho2: return OpKind::R;
    case Action::SymQ1: return OpKind::S;
  }
  throw std::invalid_argument("unknown action");
}

CharacterSource trace_source(Action action) {
  return action == Action::Rho2 ? CharacterSource::Trace2 : CharacterSource::Trace1;
}

void add_coord(CoinvariantVector& v, const Permutation& z, const QPoly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = v.coords.try_emplace(z, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) v.coords.erase(it);
}

/// The descent-column closed form with `q` standing for the deformation
/// parameter; q = 1 gives the permutation action.
CoinvariantVector three_cycle_column(int i, const Permutation& w, const QPoly& q) {
  const int n = w.size();
  if (i < 1 || i >= n) throw std::invalid_argument("generator index out of range");
  if (!w.has_descent(i))
    throw std::invalid_argument("closed form applies to descents only; " + w.to_string() + " has an ascent at " +
                                std::to_string(i));
  const int len = length(w);
  CoinvariantVector out;
  out.k = len;
  auto term = [&](const Permutation& cycle, const QPoly& c) {
    Permutation image = w * cycle;
    if (length(image) == len) add_coord(out, image, c);
  };
  add_coord(out, w, -q);
  for (int k = 1; k < i; ++k) {
    term(Permutation::cycle3(n, k, i + 1, i), q);
    term(Permutation::cycle3(n, k, i, i + 1), -1);
  }
  for (int k = i + 2; k <= n; ++k) {
    term(Permutation::cycle3(n, k, i, i + 1), 1);
    term(Permutation::cycle3(n, k, i + 1, i), -q);
  }
  return out;
}

/// chi over the bead positions `beta`, removing rim hooks of sizes parts[from..].
Integer murnaghan_nakayama(std::set<int>& beta, const std::vector<int>& parts, std::size_t from) {
  if (from == parts.size()) return 1;
  const int r = parts[from];
  Integer total = 0;
  const std::vector<int> beads(beta.begin(), beta.end());
  for (int b : beads) {
    const int target = b - r;
    if (target < 0 || beta.count(target)) continue;
    int between = 0;
    for (int other : beads)
      if (other > target && other < b) ++between;
    beta.erase(b);
    beta.insert(target);
    Integer sub = murnaghan_nakayama(beta, parts, from + 1);
    beta.erase(target);
    beta.insert(b);
    total += between % 2 == 0 ? sub : Integer(-sub);
  }
  return total;
}

}  // namespace

std::string action_name(Action action) {
  switch (action) {
    case Action::Rho1: return "rho1";
    case Action::Rho2: return "rho2";
    case Action::SymQ1: return "symq1";
  }
  return "?";
}

Action parse_action(const std::string& name) {
  if (name == "rho1") return Action::Rho1;
  if (name == "rho2") return Action::Rho2;
  if (name == "symq1") return Action::SymQ1;
  throw std::invalid_argument("unknown action '" + name + "' (expected rho1, rho2 or symq1)");
}

QMatrix QMatrix::identity(std::size_t size) {
  QMatrix m(size, size);
  for (std::size_t j = 0; j < size; ++j) m(j, j) = 1;
  return m;
}

QPoly QMatrix::trace() const {
  QPoly t;
  for (std::size_t j = 0; j < std::min(rows_, cols_); ++j) t += (*this)(j, j);
  return t;
}

std::vector<std::vector<Rational>> QMatrix::specialize(const Rational& value) const {
  std::vector<std::vector<Rational>> out(rows_, std::vector<Rational>(cols_));
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out[r][c] = (*this)(r, c).evaluate(value);
  return out;
}

QMatrix operator*(const QMatrix& a, const QMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shapes do not match");
  QMatrix out(a.rows_, b.cols_);
  for (std::size_t r = 0; r < a.rows_; ++r)
    for (std::size_t t = 0; t < a.cols_; ++t) {
      const QPoly& left = a(r, t);
      if (left.is_zero()) continue;
      for (std::size_t c = 0; c < b.cols_; ++c) {
        const QPoly& right = b(t, c);
        if (!right.is_zero()) out(r, c) += left * right;
      }
    }
  return out;
}

QMatrix operator+(const QMatrix& a, const QMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix shapes do not match");
  QMatrix out = a;
  for (std::size_t j = 0; j < out.data_.size(); ++j) out.data_[j] += b.data_[j];
  return out;
}

QMatrix operator*(const QPoly& c, const QMatrix& m) {
  QMatrix out = m;
  for (auto& entry : out.data_) entry = c * entry;
  return out;
}

std::size_t RepMatrix::index_of(const Permutation& w) const {
  auto it = std::lower_bound(basis.begin(), basis.end(), w);
  if (it == basis.end() || *it != w) throw std::out_of_range(w.to_string() + " is not in the basis of R^" + std::to_string(k));
  return static_cast<std::size_t>(it - basis.begin());
}

CoinvariantVector RepMatrix::column(const Permutation& w) const {
  const std::size_t col = index_of(w);
  CoinvariantVector v;
  v.k = k;
  for (std::size_t row = 0; row < basis.size(); ++row)
    if (!entries(row, col).is_zero()) v.coords.emplace(basis[row], entries(row, col));
  return v;
}

CoinvariantVector image_column(Action action, int i, const Permutation& w, const SchubertTable& table) {
  const MPoly image = apply(GeneratorOp{generator_kind(action), i}, table[w]);
  return expand_homogeneous(image, length(w), table);
}

RepMatrix generator_matrix(Action action, int i, int k, const SchubertTable& table, int jobs) {
  if (i < 1 || i >= table.n()) throw std::invalid_argument("generator index out of range");
  if (k < 0 || k > table.max_length()) throw std::invalid_argument("degree out of range");
  RepMatrix m;
  m.k = k;
  m.action = action;
  m.basis = table.basis(k);
  m.entries = QMatrix(m.basis.size(), m.basis.size());
  std::vector<CoinvariantVector> columns(m.basis.size());
  parallel_for(m.basis.size(), jobs, [&](std::size_t col) { columns[col] = image_column(action, i, m.basis[col], table); });
  for (std::size_t col = 0; col < columns.size(); ++col)
    for (const auto& [z, c] : columns[col].coords) m.entries(m.index_of(z), col) = c;
  return m;
}

RepMatrix word_matrix(Action action, const Word& word, int k, const SchubertTable& table) {
  RepMatrix m;
  m.k = k;
  m.action = action;
  m.basis = table.basis(k);
  m.entries = QMatrix::identity(m.basis.size());
  for (int i : word) m.entries = m.entries * generator_matrix(action, i, k, table).entries;
  return m;
}

HeckeRepresentation::HeckeRepresentation(Action action, std::shared_ptr<const SchubertTable> table, int jobs)
    : action_(action), table_(std::move(table)) {
  const int n = table_->n();
  generators_.resize(static_cast<std::size_t>(table_->max_length()) + 1);
  for (int k = 0; k <= table_->max_length(); ++k)
    for (int i = 1; i < n; ++i)
      generators_[static_cast<std::size_t>(k)].push_back(generator_matrix(action, i, k, *table_, jobs));
}

const RepMatrix& HeckeRepresentation::generator(int i, int k) const {
  if (k < 0 || k > table_->max_length() || i < 1 || i >= n())
    throw std::out_of_range("no generator matrix for i=" + std::to_string(i) + " k=" + std::to_string(k));
  return generators_[static_cast<std::size_t>(k)][static_cast<std::size_t>(i - 1)];
}

RepMatrix HeckeRepresentation::word(const Word& word, int k) const {
  if (k < 0 || k > table_->max_length()) throw std::out_of_range("degree out of range");
  RepMatrix m;
  m.k = k;
  m.action = action_;
  m.basis = table_->basis(k);
  m.entries = QMatrix::identity(m.basis.size());
  for (int i : word) m.entries = m.entries * generator(i, k).entries;
  return m;
}

CharacterValue graded_character(const HeckeRepresentation& rep, const Partition& mu, int k) {
  if (mu.size() != rep.n()) throw std::invalid_argument("partition size does not match n");
  return {k, mu, rep.word(t_mu_word(mu), k).entries.trace(), trace_source(rep.action())};
}

CharacterValue graded_character(Action action, const Partition& mu, int k, const SchubertTable& table) {
  if (mu.size() != table.n()) throw std::invalid_argument("partition size does not match n");
  return {k, mu, word_matrix(action, t_mu_word(mu), k, table).entries.trace(), trace_source(action)};
}

CharacterValue weight_character(const Partition& mu, int k) {
  QPoly sum;
  for (const auto& w : perms_of_length(mu.size(), k)) sum += weight_q_mu(w, mu);
  return {k, mu, sum, CharacterSource::WeightFormula};
}

CoinvariantVector theorem33_column(int i, const Permutation& w) { return three_cycle_column(i, w, QPoly::q()); }

CoinvariantVector prop23_column(int i, const Permutation& w) { return three_cycle_column(i, w, 1); }

namespace {

BCDecomposition decompose_column(int i, const Permutation& w, const CoinvariantVector& column) {
  BCDecomposition out;
  out.i = i;
  out.w = w;
  const std::string where = "(i=" + std::to_string(i) + ", w=" + w.to_string() + ")";
  if (column.at(w) != -QPoly::q())
    out.violations.push_back(where + " diagonal entry " + column.at(w).to_string() + " is not -q");
  for (const auto& [z, e] : column.coords) {
    if (z == w) continue;
    const std::string at = where + " z=" + z.to_string() + " entry " + e.to_string();
    if (z.has_descent(i)) out.violations.push_back(at + " sits on a descent of z");
    if (e.degree() > 1) {
      out.violations.push_back(at + " has q-degree above 1");
      continue;
    }
    const Integer c = e.coeff(0) + e.coeff(1);
    if (c < -1 || c > 1) out.violations.push_back(at + " has c = e(1) outside {-1,0,1}");
    out.c.emplace(z, c);
    out.b.emplace(z, Integer(-e.coeff(1)));
  }
  return out;
}

}  // namespace

BCDecomposition prop64_decompose(int i, const Permutation& w, const SchubertTable& table) {
  if (!w.has_descent(i)) throw std::invalid_argument("prop64_decompose needs a descent at i");
  return decompose_column(i, w, image_column(Action::Rho2, i, w, table));
}

BCDecomposition prop64_decompose(int i, const Permutation& w, const HeckeRepresentation& rho2) {
  if (rho2.action() != Action::Rho2) throw std::invalid_argument("prop64_decompose needs the rho2 representation");
  if (!w.has_descent(i)) throw std::invalid_argument("prop64_decompose needs a descent at i");
  return decompose_column(i, w, rho2.generator(i, length(w)).column(w));
}

CharacterValue knuth_class_character(const std::vector<Permutation>& cls, const Partition& mu) {
  QPoly sum;
  for (const auto& w : cls) sum += weight_q_mu(w, mu);
  return {0, mu, sum, CharacterSource::KnuthClass};
}

Integer sn_character_oracle(const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size()) throw std::invalid_argument("partitions of different sizes");
  std::set<int> beta;
  const int len = lambda.length();
  for (int j = 0; j < len; ++j) beta.insert(lambda.parts()[static_cast<std::size_t>(j)] + (len - 1 - j));
  return murnaghan_nakayama(beta, mu.parts(), 0);
}

bool EquivalenceReport::all_agree() const {
  return std::all_of(comparisons.begin(), comparisons.end(), [](const TraceComparison& c) { return c.agree(); });
}

EquivalenceReport equivalence_report(const HeckeRepresentation& rho1, const HeckeRepresentation& rho2, int jobs) {
  if (rho1.n() != rho2.n()) throw std::invalid_argument("representations of different n");
  const int n = rho1.n();
  const auto perms = all_permutations(n);
  const int top = n * (n - 1) / 2;
  std::vector<std::vector<TraceComparison>> rows(perms.size());
  parallel_for(perms.size(), jobs, [&](std::size_t j) {
    const Word word = canonical_reduced_word(perms[j]);
    for (int k = 0; k <= top; ++k)
      rows[j].push_back({perms[j], k, rho1.word(word, k).entries.trace(), rho2.word(word, k).entries.trace()});
  });
  EquivalenceReport report;
  report.n = n;
  for (auto& row : rows)
    for (auto& c : row) report.comparisons.push_back(std::move(c));
  return report;
}

EquivalenceReport equivalence_report(int n, int jobs) {
  auto table = schubert_table(n);
  HeckeRepresentation rho1(Action::Rho1, table, jobs);
  HeckeRepresentation rho2(Action::Rho2, table, jobs);
  return equivalence_report(rho1, rho2, jobs);
}

BScanResult scan_b(const HeckeRepresentation& rho2) {
  BScanResult result;
  result.n = rho2.n();
  for (int i = 1; i < rho2.n(); ++i) {
    for (const auto& w : all_permutations(rho2.n())) {
      if (!w.has_descent(i)) continue;
      ++result.descent_pairs;
      BCDecomposition d = prop64_decompose(i, w, rho2);
      for (auto& v : d.violations) result.structural_violations.push_back(std::move(v));
      for (const auto& [z, b] : d.b) {
        BScanEntry entry{i, w, z, b, d.c.at(z)};
        ++result.b_histogram[b];
        if (b < -1 || b > 1) result.conjecture_violations.push_back(entry);
        result.entries.push_back(std::move(entry));
      }
    }
  }
  return result;
}

}  // namespace hecke

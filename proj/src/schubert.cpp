#include "hecke/schubert.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

#include "hecke/operators.hpp"

namespace hecke {

SchubertTable::SchubertTable(int n) : n_(n) {
  if (n < 1 || n > Monomial::kMaxVars) throw std::invalid_argument("Schubert tables need 1 <= n <= 8");
  by_length_.resize(static_cast<std::size_t>(max_length()) + 1);
  for (auto& w : all_permutations(n)) {
    words_.emplace(w, canonical_reduced_word(w));
    by_length_[static_cast<std::size_t>(length(w))].push_back(std::move(w));
  }

  const Permutation w0 = Permutation::longest(n);
  Monomial staircase;
  for (int var = 1; var < n; ++var) staircase = staircase.with_exponent(var, n - var);
  polys_.emplace(w0, MPoly::term(n, 1, staircase));

  // S_w = d_{a_1} d_{a_2} ... (staircase) where a is the canonical word of
  // w^{-1} w_0; the inner part is S_{w s_{a_1}}, one length up.
  for (int k = max_length() - 1; k >= 0; --k) {
    for (const auto& w : by_length_[static_cast<std::size_t>(k)]) {
      const Word& word = words_.at(w.inverse() * w0);
      const int first = word.front();
      MPoly poly = divided_difference(first, polys_.at(w.times_simple(first)));
      if (!poly.is_homogeneous_of(k) || poly.is_zero())
        throw std::logic_error("Schubert polynomial of " + w.to_string() + " is not homogeneous of its length");
      for (const auto& [m, c] : poly.terms())
        if (c.degree() != 0 || c.coeffs().front() < 0)
          throw std::logic_error("Schubert polynomial of " + w.to_string() + " has a coefficient " + c.to_string());
      polys_.emplace(w, std::move(poly));
    }
  }
}

const MPoly& SchubertTable::operator[](const Permutation& w) const {
  auto it = polys_.find(w);
  if (it == polys_.end()) throw std::out_of_range("no Schubert polynomial for " + w.to_string());
  return it->second;
}

const std::vector<Permutation>& SchubertTable::basis(int k) const {
  static const std::vector<Permutation> empty;
  if (k < 0 || k > max_length()) return empty;
  return by_length_[static_cast<std::size_t>(k)];
}

const Word& SchubertTable::reduced_word(const Permutation& w) const {
  auto it = words_.find(w);
  if (it == words_.end()) throw std::out_of_range("permutation of the wrong size: " + w.to_string());
  return it->second;
}

std::shared_ptr<const SchubertTable> schubert_table(int n) {
  static std::mutex mutex;
  static std::map<int, std::shared_ptr<const SchubertTable>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[n];
  if (!slot) slot = std::make_shared<const SchubertTable>(n);
  return slot;
}

CoinvariantVector expand_homogeneous(const MPoly& f, int k, const SchubertTable& table) {
  if (f.ambient() != table.n()) throw std::invalid_argument("ambient ring does not match the Schubert table");
  if (!f.is_homogeneous_of(k))
    throw std::invalid_argument("expand_homogeneous: not homogeneous of degree " + std::to_string(k) + ": " +
                                f.to_string());
  CoinvariantVector out;
  out.k = k;
  if (f.is_zero()) return out;
  for (const auto& z : table.basis(k)) {
    QPoly c = apply_partial_word(table.reduced_word(z), f).as_constant();
    if (!c.is_zero()) out.coords.emplace(z, std::move(c));
  }
  return out;
}

MPoly reconstruct(const CoinvariantVector& v, const SchubertTable& table) {
  MPoly out(table.n());
  for (const auto& [z, c] : v.coords) out += c * table[z];
  return out;
}

std::vector<Permutation> monk_products(int i, const Permutation& w) {
  const int n = w.size();
  if (i < 1 || i >= n) throw std::invalid_argument("monk_products: index out of range");
  const int target = length(w) + 1;
  std::vector<Permutation> out;
  for (int j = 1; j <= i; ++j)
    for (int k = i + 1; k <= n; ++k) {
      Permutation wt = w * Permutation::transposition(n, j, k);
      if (length(wt) == target) out.push_back(std::move(wt));
    }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<SignedPerm> x_action_schubert(int i, const Permutation& w) {
  const int n = w.size();
  if (i < 1 || i > n) throw std::invalid_argument("x_action_schubert: index out of range");
  const int target = length(w) + 1;
  std::vector<SignedPerm> out;
  for (int k = i + 1; k <= n; ++k) {
    Permutation wt = w * Permutation::transposition(n, i, k);
    if (length(wt) == target) out.push_back({+1, std::move(wt)});
  }
  for (int j = 1; j < i; ++j) {
    Permutation wt = w * Permutation::transposition(n, j, i);
    if (length(wt) == target) out.push_back({-1, std::move(wt)});
  }
  return out;
}

}  // namespace hecke

#pragma once

// Seeded generators for property checks. The mapping from engine output to
// values is done by hand so results are identical across standard libraries.

#include <cstdint>
#include <random>

#include "hecke/mpoly.hpp"
#include "hecke/permutation.hpp"
#include "hecke/qpoly.hpp"

namespace hecke {

using Rng = std::mt19937_64;

inline std::int64_t uniform_int(Rng& rng, std::int64_t lo, std::int64_t hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<std::int64_t>(rng() % span);
}

inline QPoly random_qpoly(Rng& rng, int max_degree, int bound) {
  std::vector<Integer> coeffs(static_cast<std::size_t>(uniform_int(rng, 0, max_degree)) + 1);
  for (auto& c : coeffs) c = uniform_int(rng, -bound, bound);
  return QPoly(std::move(coeffs));
}

/// Up to `terms` random monomials of exactly the given degree.
inline MPoly random_homogeneous(Rng& rng, int n, int degree, int terms, int bound = 3) {
  MPoly out(n);
  for (int t = 0; t < terms; ++t) {
    std::vector<int> exps(static_cast<std::size_t>(n), 0);
    for (int d = 0; d < degree; ++d) ++exps[static_cast<std::size_t>(uniform_int(rng, 0, n - 1))];
    out.add_term(Monomial::from_exponents(exps), random_qpoly(rng, 2, bound));
  }
  return out;
}

inline MPoly random_poly(Rng& rng, int n, int max_degree, int terms, int bound = 3) {
  MPoly out(n);
  for (int t = 0; t < terms; ++t)
    out += random_homogeneous(rng, n, static_cast<int>(uniform_int(rng, 0, max_degree)), 1, bound);
  return out;
}

/// p/d with |p|, d <= 9, never 0, 1 or -1.
inline Rational random_rational(Rng& rng) {
  for (;;) {
    Rational r(Integer(uniform_int(rng, -9, 9)), Integer(uniform_int(rng, 1, 9)));
    if (r != 0 && r != 1 && r != -1) return r;
  }
}

inline Word random_word(Rng& rng, int n, int length) {
  Word word;
  for (int j = 0; j < length; ++j) word.push_back(static_cast<int>(uniform_int(rng, 1, n - 1)));
  return word;
}

inline Permutation random_permutation(Rng& rng, int n) {
  std::vector<int> values(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) values[static_cast<std::size_t>(j)] = j + 1;
  for (int j = n - 1; j > 0; --j)
    std::swap(values[static_cast<std::size_t>(j)], values[static_cast<std::size_t>(uniform_int(rng, 0, j))]);
  return Permutation(std::move(values));
}

}  // namespace hecke

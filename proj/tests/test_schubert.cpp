#include <doctest.h>

#include "hecke/operators.hpp"
#include "hecke/poly_text.hpp"
#include "hecke/random.hpp"
#include "hecke/schubert.hpp"

using namespace hecke;

namespace {

Permutation P(const std::string& text) { return Permutation::parse(text); }
MPoly p(const std::string& text, int n) { return parse_poly(text, n); }

MPoly elementary(int n, int j) {
  MPoly out(n);
  for (Monomial m : monomials_of_degree(n, j)) {
    bool square_free = true;
    for (int v = 1; v <= n; ++v) square_free = square_free && m.exponent(v) <= 1;
    if (square_free) out.add_term(m, 1);
  }
  return out;
}

/// Schubert coordinates of an integer polynomial f of degree k, found by
/// solving f = sum c_z S_z + sum d_{j,m} e_j m over Q in monomial
/// coordinates. The ideal unknowns come first, so the c_z columns are the
/// last pivots of the reduced echelon form and read off directly.
std::map<Permutation, Rational> solve_coordinates(const MPoly& f, int k, const SchubertTable& table) {
  const int n = table.n();
  std::vector<MPoly> columns;
  for (int j = 1; j <= std::min(n, k); ++j)
    for (Monomial m : monomials_of_degree(n, k - j)) columns.push_back(MPoly::term(n, 1, m) * elementary(n, j));
  const std::size_t ideal_count = columns.size();
  for (const auto& z : table.basis(k)) columns.push_back(table[z]);
  const auto rows_basis = monomials_of_degree(n, k);

  std::vector<std::vector<Rational>> a(rows_basis.size(), std::vector<Rational>(columns.size() + 1));
  for (std::size_t r = 0; r < rows_basis.size(); ++r) {
    for (std::size_t c = 0; c < columns.size(); ++c) a[r][c] = columns[c].coeff(rows_basis[r]).evaluate(0);
    a[r][columns.size()] = f.coeff(rows_basis[r]).evaluate(0);
  }
  std::size_t pivot_row = 0;
  std::vector<std::size_t> pivot_of_column(columns.size(), SIZE_MAX);
  for (std::size_t c = 0; c < columns.size() && pivot_row < a.size(); ++c) {
    std::size_t r = pivot_row;
    while (r < a.size() && a[r][c] == 0) ++r;
    if (r == a.size()) continue;
    std::swap(a[r], a[pivot_row]);
    const Rational lead = a[pivot_row][c];
    for (auto& x : a[pivot_row]) x /= lead;
    for (std::size_t other = 0; other < a.size(); ++other) {
      if (other == pivot_row || a[other][c] == 0) continue;
      const Rational factor = a[other][c];
      for (std::size_t cc = 0; cc <= columns.size(); ++cc) a[other][cc] -= factor * a[pivot_row][cc];
    }
    pivot_of_column[c] = pivot_row++;
  }
  for (std::size_t r = pivot_row; r < a.size(); ++r) REQUIRE(a[r][columns.size()] == 0);
  std::map<Permutation, Rational> out;
  const auto& basis = table.basis(k);
  for (std::size_t j = 0; j < basis.size(); ++j) {
    const std::size_t c = ideal_count + j;
    REQUIRE(pivot_of_column[c] != SIZE_MAX);
    const Rational value = a[pivot_of_column[c]][columns.size()];
    if (value != 0) out.emplace(basis[j], value);
  }
  return out;
}

}  // namespace

TEST_CASE("small tables") {
  const auto& two = *schubert_table(2);
  CHECK(two[P("1,2")] == p("1", 2));
  CHECK(two[P("2,1")] == p("x1", 2));
  const auto& three = *schubert_table(3);
  CHECK(three[P("1,2,3")] == p("1", 3));
  CHECK(three[P("2,1,3")] == p("x1", 3));
  CHECK(three[P("1,3,2")] == p("x1 + x2", 3));
  CHECK(three[P("2,3,1")] == p("x1*x2", 3));
  CHECK(three[P("3,1,2")] == p("x1^2", 3));
  CHECK(three[P("3,2,1")] == p("x1^2*x2", 3));
  CHECK(schubert_table(1)->polys().size() == 1);
  CHECK_THROWS_AS(SchubertTable(9), std::invalid_argument);
  CHECK_THROWS_AS(three[P("2,1")], std::out_of_range);
}

TEST_CASE("table invariants") {
  for (int n = 1; n <= 5; ++n) {
    const auto& table = *schubert_table(n);
    CHECK(table.polys().size() == all_permutations(n).size());
    for (const auto& [w, poly] : table.polys()) {
      CHECK(poly.is_homogeneous_of(length(w)));
      for (const auto& [m, c] : poly.terms()) CHECK((c.is_constant() && c.coeff(0) > 0));
      for (int i = 1; i < n; ++i)
        CHECK(divided_difference(i, poly) == (w.has_descent(i) ? table[w.times_simple(i)] : MPoly(n)));
    }
    MPoly staircase = MPoly::constant(n, 1);
    for (int v = 1; v < n; ++v) staircase = Monomial::variable(v, n - v) * staircase;
    CHECK(table[Permutation::longest(n)] == staircase);
    MPoly sum(n);
    for (int i = 1; i < n; ++i) {
      sum += MPoly::variable(n, i);
      CHECK(table[Permutation::simple(n, i)] == sum);
    }
  }
}

TEST_CASE("expansion examples") {
  const auto& three = *schubert_table(3);
  for (const auto& z : three.basis(2)) {
    const CoinvariantVector v = expand_homogeneous(three[z], 2, three);
    CHECK(v.coords.size() == 1);
    CHECK(v.at(z) == QPoly(1));
  }
  CHECK(expand_homogeneous(p("x1 + x2", 2), 1, *schubert_table(2)).is_zero());
  CHECK(expand_homogeneous(p("x1^2 + x1*x2 + x1*x3", 3), 2, three).is_zero());
  // x1^2 + x1 x2 alone is not in I_3.
  CHECK_FALSE(expand_homogeneous(p("x1^2 + x1*x2", 3), 2, three).is_zero());
  CHECK(expand_homogeneous(p("x1^4", 3), 4, three).is_zero());
  CHECK_THROWS_AS(expand_homogeneous(p("x1 + 1", 3), 1, three), std::invalid_argument);
}

TEST_CASE("expansion agrees with a linear solve modulo the ideal") {
  Rng rng(31);
  for (int n = 2; n <= 3; ++n) {
    const auto& table = *schubert_table(n);
    for (int k = 0; k <= table.max_length() + 1; ++k)
      for (int trial = 0; trial < 8; ++trial) {
        MPoly f(n);
        const MPoly sample = random_homogeneous(rng, n, k, 4);
        for (const auto& [m, c] : sample.terms()) f.add_term(m, c.coeff(0));
        const CoinvariantVector v = expand_homogeneous(f, k, table);
        const auto solved = solve_coordinates(f, k, table);
        REQUIRE(v.coords.size() == solved.size());
        for (const auto& [z, c] : v.coords) CHECK(Rational(c.coeff(0)) == solved.at(z));
      }
  }
}

TEST_CASE("symmetric multiples vanish") {
  Rng rng(32);
  for (int n = 2; n <= 4; ++n) {
    const auto& table = *schubert_table(n);
    for (int j = 1; j <= n; ++j)
      for (int trial = 0; trial < 5; ++trial) {
        const int d = static_cast<int>(uniform_int(rng, 0, 3));
        const MPoly f = random_homogeneous(rng, n, d, 3) * elementary(n, j);
        CHECK(expand_homogeneous(f, d + j, table).is_zero());
      }
  }
}

TEST_CASE("Monk's rule") {
  CHECK(monk_products(1, P("2,1,3")) == std::vector<Permutation>{P("3,1,2")});
  CHECK(monk_products(1, P("1,2")) == std::vector<Permutation>{P("2,1")});
  CHECK_THROWS_AS(monk_products(3, P("1,2,3")), std::invalid_argument);
  for (int n = 2; n <= 4; ++n) {
    const auto& table = *schubert_table(n);
    for (int i = 1; i < n; ++i)
      for (const auto& w : all_permutations(n)) {
        const int k = length(w) + 1;
        const CoinvariantVector v = expand_homogeneous(table[Permutation::simple(n, i)] * table[w], k, table);
        CoinvariantVector expected;
        expected.k = k;
        if (k <= table.max_length())
          for (const auto& u : monk_products(i, w)) expected.coords.emplace(u, QPoly(1));
        CHECK(v == expected);
      }
  }
}

TEST_CASE("multiplication by a variable") {
  CHECK(x_action_schubert(1, Permutation::identity(3)) == std::vector<SignedPerm>{{1, P("2,1,3")}});
  CHECK(x_action_schubert(2, Permutation::identity(3)) ==
        std::vector<SignedPerm>{{1, P("1,3,2")}, {-1, P("2,1,3")}});
  const auto& three = *schubert_table(3);
  for (int i = 1; i <= 3; ++i)
    for (const auto& w : all_permutations(3)) {
      const int k = length(w) + 1;
      CoinvariantVector expected;
      expected.k = k;
      if (k <= three.max_length())
        for (const auto& [sign, u] : x_action_schubert(i, w)) expected.coords.emplace(u, QPoly(sign));
      CHECK(expand_homogeneous(MPoly::variable(3, i) * three[w], k, three) == expected);
    }
}

TEST_CASE("reconstruction round trip") {
  Rng rng(33);
  const auto& table = *schubert_table(4);
  for (int trial = 0; trial < 30; ++trial) {
    const int k = static_cast<int>(uniform_int(rng, 0, table.max_length()));
    const MPoly f = random_homogeneous(rng, 4, k, 5);
    const CoinvariantVector v = expand_homogeneous(f, k, table);
    CHECK(expand_homogeneous(f - reconstruct(v, table), k, table).is_zero());
    CHECK(expand_homogeneous(reconstruct(v, table), k, table) == v);
  }
}

TEST_CASE("dimensions are the inversion counts") {
  for (int n = 1; n <= 6; ++n) {
    const auto& table = *schubert_table(n);
    std::vector<std::size_t> counts(static_cast<std::size_t>(table.max_length()) + 1);
    for (const auto& w : all_permutations(n)) {
      int inv = 0;
      for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b) inv += w(a) > w(b);
      ++counts[static_cast<std::size_t>(inv)];
    }
    for (int k = 0; k <= table.max_length(); ++k) CHECK(table.basis(k).size() == counts[static_cast<std::size_t>(k)]);
  }
  CHECK(schubert_table(6)->basis(7).size() == 101);
}

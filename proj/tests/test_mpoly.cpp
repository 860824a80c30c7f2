#include <doctest.h>

#include <map>

#include "hecke/mpoly.hpp"
#include "hecke/poly_text.hpp"
#include "hecke/random.hpp"

using namespace hecke;

namespace {

const QPoly q = QPoly::q();

MPoly p(const std::string& text, int n = 3) { return parse_poly(text, n); }

}  // namespace

TEST_CASE("arithmetic examples") {
  CHECK(p("x1 + x2") - p("x1") == p("x2"));
  CHECK(p("x1") * p("x2") == p("x1*x2"));
  CHECK((1 - q) * p("x1") + q * p("x1") == p("x1"));
  CHECK(mpoly_arith(p("x1"), p("x1"), MArith::Sub).is_zero());
  CHECK(scalar_mul(q, p("x1 + x3")) == p("q*x1 + q*x3"));
}

TEST_CASE("ambient mismatch is rejected") {
  CHECK_THROWS_AS(p("x1", 2) + p("x1", 3), std::invalid_argument);
  CHECK_THROWS_AS(p("x1", 2) * p("x1", 3), std::invalid_argument);
  CHECK_THROWS_AS(MPoly(0), std::invalid_argument);
  CHECK_THROWS_AS(MPoly(9), std::invalid_argument);
}

TEST_CASE("monomials") {
  const Monomial m = Monomial::from_exponents(std::vector<int>{2, 0, 1});
  CHECK(m.degree() == 3);
  CHECK(m.exponent(1) == 2);
  CHECK(m.highest_variable() == 3);
  CHECK(m.exponents(3) == std::vector<int>{2, 0, 1});
  CHECK(Monomial::variable(1) > Monomial::variable(2));
  CHECK(Monomial::variable(2, 5) < Monomial::variable(1));
  CHECK_THROWS_AS(Monomial::variable(1, 200) * Monomial::variable(1, 100), std::overflow_error);
  CHECK_THROWS_AS(Monomial::from_exponents(std::vector<int>{-1}), std::invalid_argument);
}

TEST_CASE("q specialization") {
  CHECK(specialize_q(p("(1-q)*x1 + x2"), 1) == specialize_q(p("x2"), 1));
  CHECK(specialize_q(p("q^2*x1"), 0).is_zero());
  RationalMPoly half(3);
  half.add_term(Monomial::variable(1), Rational(1, 2));
  CHECK(specialize_q(p("(1-q)*x1"), Rational(1, 2)) == half);
}

TEST_CASE("variable permutation action") {
  CHECK(act_variable_permutation(Permutation::simple(2, 1), p("x1", 2)) == p("x2", 2));
  CHECK(act_variable_permutation(Permutation::simple(2, 1), p("x1*x2", 2)) == p("x1*x2", 2));
  CHECK(act_variable_permutation(Permutation::parse("3,1,2"), p("x1^2*x2")) == p("x3^2*x1"));
  CHECK_THROWS_AS(act_variable_permutation(Permutation::identity(2), p("x1")), std::invalid_argument);
}

TEST_CASE("i-symmetry") {
  CHECK(is_i_symmetric(1, p("x1 + x2")));
  CHECK_FALSE(is_i_symmetric(1, p("x1")));
  CHECK(is_i_symmetric(1, p("x1*x2 + x3")));
  CHECK_FALSE(is_i_symmetric(2, p("x1*x2 + x3")));
}

TEST_CASE("monomial enumeration counts") {
  // C(n + d - 1, d) monomials of degree d.
  CHECK(monomials_of_degree(3, 2).size() == 6);
  CHECK(monomials_of_degree(4, 5).size() == 56);
  CHECK(monomials_up_to_degree(2, 3).size() == 10);
  const auto ms = monomials_of_degree(3, 3);
  for (std::size_t j = 1; j < ms.size(); ++j) CHECK(ms[j - 1] > ms[j]);
}

TEST_CASE("ring axioms and homomorphisms on random polynomials") {
  Rng rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = static_cast<int>(uniform_int(rng, 1, 4));
    const MPoly a = random_poly(rng, n, 3, 4), b = random_poly(rng, n, 3, 4), c = random_poly(rng, n, 3, 4);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    const Rational r = random_rational(rng);
    CHECK(specialize_q(a * b, r) == specialize_q(a, r) * specialize_q(b, r));
    const Permutation w = random_permutation(rng, n);
    CHECK(act_variable_permutation(w, a * b) == act_variable_permutation(w, a) * act_variable_permutation(w, b));
    const MPoly product = a * b;
    for (const auto& [m, coeff] : product.terms()) CHECK_FALSE(coeff.is_zero());
  }
}

TEST_CASE("product agrees with a dense exponent-vector oracle") {
  Rng rng(12);
  for (int trial = 0; trial < 30; ++trial) {
    const MPoly a = random_poly(rng, 3, 3, 4), b = random_poly(rng, 3, 3, 4);
    std::map<std::vector<int>, QPoly> dense;
    for (const auto& [ma, ca] : a.terms())
      for (const auto& [mb, cb] : b.terms()) {
        std::vector<int> e = ma.exponents(3);
        const std::vector<int> f = mb.exponents(3);
        for (int v = 0; v < 3; ++v) e[static_cast<std::size_t>(v)] += f[static_cast<std::size_t>(v)];
        dense[e] += ca * cb;
      }
    MPoly expected(3);
    for (const auto& [e, c] : dense) expected.add_term(Monomial::from_exponents(e), c);
    CHECK(a * b == expected);
  }
}

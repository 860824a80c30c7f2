#include <doctest.h>

#include "hecke/poly_text.hpp"
#include "hecke/qpoly.hpp"
#include "hecke/random.hpp"

using namespace hecke;

namespace {

const QPoly q = QPoly::q();

/// Coefficient-wise convolution, written out independently of QPoly::operator*.
QPoly naive_product(const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Integer> out(a.coeffs().size() + b.coeffs().size() - 1);
  for (std::size_t i = 0; i < a.coeffs().size(); ++i)
    for (std::size_t j = 0; j < b.coeffs().size(); ++j) out[i + j] += a.coeffs()[i] * b.coeffs()[j];
  return QPoly(out);
}

}  // namespace

TEST_CASE("ring arithmetic examples") {
  CHECK(qpoly_arith(1 - q, 1 + q, QArith::Mul) == 1 - q * q);
  CHECK((-q) * (-q) == q * q);
  const QPoly t = -q;
  CHECK((1 - q) * t + q == q * q);
  CHECK(qpoly_arith(q, q, QArith::Sub).is_zero());
  CHECK(qpoly_arith(q, 2, QArith::Add) == QPoly(std::vector<Integer>{2, 1}));
}

TEST_CASE("canonical form drops trailing zeros") {
  QPoly p(std::vector<Integer>{1, 0, 0});
  CHECK(p == QPoly(1));
  CHECK(p.degree() == 0);
  CHECK(QPoly(std::vector<Integer>{0, 0}).is_zero());
  CHECK(QPoly().degree() == -1);
  CHECK((q - q).coeffs().empty());
}

TEST_CASE("text form") {
  CHECK((1 - q).to_string() == "1-q");
  CHECK((-q + QPoly::monomial(2, 3)).to_string() == "-q+2*q^3");
  CHECK(QPoly().to_string() == "0");
  CHECK((q * q).to_string() == "q^2");
  CHECK(QPoly(-1).to_string() == "-1");
}

TEST_CASE("arbitrary precision") {
  QPoly big = QPoly::monomial(Integer(1) << 100, 0);
  QPoly square = big * big;
  CHECK(square.coeff(0) == (Integer(1) << 200));
}

TEST_CASE("evaluation and division by 1-q") {
  const QPoly p = 1 - q * q;
  CHECK(p.evaluate(1) == 0);
  CHECK(p.evaluate(Rational(1, 2)) == Rational(3, 4));
  REQUIRE(p.divide_by_one_minus_q());
  CHECK(*p.divide_by_one_minus_q() == 1 + q);
  CHECK_FALSE(QPoly(q).divide_by_one_minus_q());
  CHECK(QPoly().divide_by_one_minus_q() == QPoly());
}

TEST_CASE("rationals") {
  CHECK(parse_rational("3/6") == Rational(1, 2));
  CHECK(parse_rational("-2") == Rational(-2));
  CHECK(rational_to_string(Rational(-3, 9)) == "-1/3");
  CHECK(rational_to_string(Rational(4)) == "4");
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
}

TEST_CASE("ring axioms on random triples") {
  Rng rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const QPoly a = random_qpoly(rng, 4, 5), b = random_qpoly(rng, 4, 5), c = random_qpoly(rng, 4, 5);
    CHECK(a * b == naive_product(a, b));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    CHECK(a - a == QPoly());
    const Rational r = random_rational(rng);
    CHECK((a * b).evaluate(r) == a.evaluate(r) * b.evaluate(r));
    CHECK(parse_qpoly(a.to_string()) == a);
    if (auto quotient = (a * (1 - q)).divide_by_one_minus_q()) CHECK(*quotient == a);
    else FAIL("(1-q) multiple not divisible");
  }
}

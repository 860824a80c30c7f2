#include <doctest.h>

#include "hecke/poly_text.hpp"
#include "hecke/random.hpp"

using namespace hecke;

TEST_CASE("printing") {
  const QPoly q = QPoly::q();
  MPoly f(3);
  f.add_term(Monomial::from_exponents(std::vector<int>{2, 1, 0}), 1 - q);
  f.add_term(Monomial::variable(3), q * q);
  CHECK(format_poly(f) == "(1-q)*x1^2*x2 + q^2*x3");
  CHECK(format_poly(MPoly(2)) == "0");
  CHECK(format_poly(MPoly::constant(2, 1 - q)) == "1-q");
  CHECK(format_poly(-(q * MPoly::variable(2, 1))) == "-q*x1");
  CHECK(format_poly(MPoly::variable(2, 1) + -MPoly::variable(2, 2)) == "x1 - x2");
  CHECK(format_poly(MPoly::term(2, 3, Monomial::variable(1))) == "3*x1");
}

TEST_CASE("parsing") {
  const QPoly q = QPoly::q();
  CHECK(parse_poly("x1 + x2", 2) == MPoly::variable(2, 1) + MPoly::variable(2, 2));
  CHECK(parse_poly("(x1+x2)^2", 2) == parse_poly("x1^2 + 2*x1*x2 + x2^2", 2));
  CHECK(parse_poly("q x1", 2) == q * MPoly::variable(2, 1));
  CHECK(parse_poly("-(1-q)*x2", 2) == (q - 1) * MPoly::variable(2, 2));
  CHECK(parse_qpoly("1-q^2") == 1 - q * q);
  CHECK_THROWS_AS(parse_poly("x3", 2), std::invalid_argument);
  CHECK_THROWS_AS(parse_poly("x1 +", 2), std::invalid_argument);
  CHECK_THROWS_AS(parse_poly("(x1", 2), std::invalid_argument);
  CHECK_THROWS_AS(parse_qpoly("x1"), std::invalid_argument);
}

TEST_CASE("format then parse is the identity") {
  Rng rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = static_cast<int>(uniform_int(rng, 1, 5));
    const MPoly f = random_poly(rng, n, 4, 5, 4);
    CHECK(parse_poly(format_poly(f), n) == f);
  }
}

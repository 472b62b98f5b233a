#include <doctest.h>

#include "inducibility/linalg.hpp"
#include "inducibility/rational.hpp"

using namespace inducibility;

TEST_CASE("parse_rational reads fractions, integers and decimals") {
  CHECK(parse_rational("3/8") == Rational(3, 8));
  CHECK(parse_rational("-6/4") == Rational(-3, 2));
  CHECK(parse_rational("17") == Rational(17));
  CHECK(parse_rational("0.5126953125") == Rational(2100, 4096));
  CHECK(parse_rational("0.2784") == Rational(174, 625));
  CHECK(parse_rational("010/08") == Rational(5, 4));
  CHECK(parse_rational(".25") == Rational(1, 4));
}

TEST_CASE("parse_rational rejects junk") {
  CHECK_THROWS(parse_rational(""));
  CHECK_THROWS(parse_rational("1/0"));
  CHECK_THROWS(parse_rational("1/x"));
  CHECK_THROWS(parse_rational("1.2.3"));
  CHECK_THROWS(parse_rational("abc"));
}

TEST_CASE("to_string is reduced") {
  CHECK(to_string(Rational(6, 4)) == "3/2");
  CHECK(to_string(Rational(-8, 4)) == "-2");
  CHECK(to_string(parse_rational("66706983/500000000")) == "66706983/500000000");
}

TEST_CASE("integer helpers") {
  CHECK(falling_factorial(5, 3) == 60);
  CHECK(falling_factorial(2, 3) == 0);
  CHECK(falling_factorial(7, 0) == 1);
  CHECK(binomial(10, 5) == 252);
  CHECK(binomial(3, 5) == 0);
  CHECK(pow(Integer(2), 70).str() == "1180591620717411303424");
}

TEST_CASE("rational kernel") {
  SUBCASE("zero matrix has full kernel") {
    CHECK(solve_rational_kernel(RationalMatrix::Zero(3, 3)).size() == 3);
  }
  SUBCASE("identity has trivial kernel") {
    CHECK(solve_rational_kernel(RationalMatrix::Identity(4, 4)).empty());
  }
  SUBCASE("rank-one matrix") {
    RationalMatrix a(2, 3);
    a << 1, 2, 3, 2, 4, 6;
    const auto basis = solve_rational_kernel(a);
    REQUIRE(basis.size() == 2);
    for (const auto& v : basis) CHECK(RationalVector(a * v) == RationalVector::Zero(2));
  }
  SUBCASE("exact fractions survive elimination") {
    RationalMatrix a(2, 2);
    a << Rational(1, 3), Rational(-1, 7), Rational(2, 3), Rational(-2, 7);
    const auto basis = solve_rational_kernel(a);
    REQUIRE(basis.size() == 1);
    CHECK(basis[0](0) == Rational(3, 7));
    CHECK(basis[0](1) == 1);
  }
}

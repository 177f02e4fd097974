#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "orbitstar/scalar.hpp"
#include "orbitstar/matrix.hpp"

using namespace orbitstar;

TEST_CASE("rational parsing and printing") {
    CHECK(parse_rational("6/4") == Rational(3, 2));
    CHECK(parse_rational("-7") == Rational(-7));
    CHECK(to_string(parse_rational("-3/9")) == "-1/3");
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
}

TEST_CASE("gaussian rationals") {
    Scalar a(Rational(1, 2), Rational(1, 3));
    Scalar b(2, -1);
    // (1/2 + i/3)(2 - i) = 1 - i/2 + 2i/3 + 1/3
    CHECK(a * b == Scalar(Rational(4, 3), Rational(1, 6)));
    CHECK(Scalar(1, 1).inverse() == Scalar(Rational(1, 2), Rational(-1, 2)));
    CHECK(Scalar::i() * Scalar::i() == Scalar(-1));
    CHECK((a / b) * b == a);
    CHECK_THROWS(Scalar().inverse());
    CHECK(parse_scalar("1/2 - 1/3*i") == Scalar(Rational(1, 2), Rational(-1, 3)));
    CHECK(parse_scalar("i") == Scalar::i());
    CHECK(Scalar(Rational(1, 2), Rational(-1, 3)).to_string() == "1/2 - 1/3*i");
    CHECK(Scalar(0, -2).to_string() == "-2*i");
}

TEST_CASE("polynomials in h") {
    HPoly h = HPoly::h();
    HPoly p = h * h - HPoly(1);
    HPoly q = h + HPoly(1);
    CHECK(p == (h - HPoly(1)) * q);
    CHECK(p.degree() == 2);
    CHECK(HPoly().degree() == HPoly::kZeroDegree);
    CHECK(p.evaluate(3) == Scalar(8));
    CHECK(p.truncate(1) == HPoly(-1));
    CHECK((h * h).order() == 2);
    CHECK((p - p).is_zero());
    CHECK(hpoly_arith(p, q, ArithOp::sub) == p - q);
    CHECK((HPoly(Scalar(1, 1)) * h * h + h - HPoly(Scalar(Rational(3, 2)))).to_string() == "-3/2 + h + (1 + i)*h^2");
}

TEST_CASE("dense matrices") {
    Matrix m(2, 2, {Scalar(1), Scalar(2), Scalar(3), Scalar(4)});
    CHECK(m.determinant() == Scalar(-2));
    auto inv = m.inverse();
    REQUIRE(inv);
    CHECK(m * *inv == Matrix::identity(2));
    Matrix s(2, 2, {Scalar(1), Scalar(2), Scalar(2), Scalar(4)});
    CHECK_FALSE(s.inverse());
    CHECK((Matrix::identity(3) * Scalar(5)).scalar_multiple_of_identity() == Scalar(5));
    CHECK_FALSE(m.scalar_multiple_of_identity());
    CHECK(commutator(m, m).is_zero());
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "homlie/field.hpp"
#include "support.hpp"

using namespace homlie;

TEST_CASE("scalar arithmetic examples")
{
    Scalar half = Scalar::fraction(1, 2);
    CHECK(scalar_arith(half, half, ArithOp::add) == Scalar(1));
    CHECK(scalar_arith(Scalar::i(), Scalar::i(), ArithOp::mul) == Scalar(-1));

    Scalar a(Rational(1), Rational(1));
    Scalar b(Rational(1), Rational(-1));
    Scalar q = scalar_arith(a, b, ArithOp::div);
    CHECK(q == Scalar::i());
    // re-multiplying recovers the dividend
    CHECK(q * b == a);
    CHECK(scalar_arith(a, b, ArithOp::sub) == Scalar(Rational(0), Rational(2)));
}

TEST_CASE("division by zero is an explicit error")
{
    CHECK_THROWS_AS(scalar_arith(Scalar(1), Scalar(0), ArithOp::div), DivisionByZero);
    CHECK_THROWS_AS(Scalar(0).inverse(), DivisionByZero);
    CHECK_THROWS_AS(Rational(mpz_class(1), mpz_class(0)), DivisionByZero);
}

TEST_CASE("rationals are stored reduced with positive denominator")
{
    Rational r(mpz_class(6), mpz_class(-4));
    CHECK(r.numerator() == -3);
    CHECK(r.denominator() == 2);
    Rational z(mpz_class(0), mpz_class(-7));
    CHECK(z.numerator() == 0);
    CHECK(z.denominator() == 1);
    CHECK(Rational(mpz_class(2), mpz_class(4)) == Rational(mpz_class(1), mpz_class(2)));
}

TEST_CASE("parse_scalar examples")
{
    CHECK(parse_scalar("i") == Scalar::i());
    CHECK(parse_scalar("-1/2+3/4i") == Scalar(Rational(mpz_class(-1), mpz_class(2)), Rational(mpz_class(3), mpz_class(4))));
    CHECK(parse_scalar("96") == Scalar(96));
    CHECK(parse_scalar("-i") == -Scalar::i());
    CHECK(parse_scalar("3/4i") == Scalar(Rational(0), Rational(mpz_class(3), mpz_class(4))));
    CHECK(parse_scalar("1+i") == Scalar(Rational(1), Rational(1)));
    CHECK(parse_scalar("2-5i") == Scalar(Rational(2), Rational(-5)));
    CHECK(parse_scalar("4/6") == Scalar::fraction(2, 3));
    CHECK(parse_scalar("123456789012345678901234567890").re().numerator() ==
          mpz_class("123456789012345678901234567890"));
}

TEST_CASE("parse_scalar rejects malformed text with a position")
{
    struct Bad {
        const char* text;
        std::size_t position;
    };
    for (Bad bad : {Bad{"", 0}, Bad{"1/0", 2}, Bad{"abc", 0}, Bad{"1+", 2}, Bad{"1+2", 3}, Bad{"1 ", 1},
                    Bad{"--1", 1}, Bad{"i2", 1}, Bad{"1/", 2}, Bad{"+1", 0}}) {
        CAPTURE(bad.text);
        try {
            parse_scalar(bad.text);
            FAIL("accepted malformed scalar");
        } catch (const ScalarParseError& e) {
            CHECK(e.position() == bad.position);
        }
    }
}

TEST_CASE("format_scalar canonical forms")
{
    CHECK(format_scalar(Scalar(0)) == "0");
    CHECK(format_scalar(Scalar::i()) == "i");
    CHECK(format_scalar(-Scalar::i()) == "-i");
    CHECK(format_scalar(parse_scalar("-1/2+3/4i")) == "-1/2+3/4i");
    CHECK(format_scalar(parse_scalar("2-i")) == "2-i");
    CHECK(format_scalar(parse_scalar("-3/4i")) == "-3/4i");
}

TEST_CASE("field axioms hold exactly on random scalars")
{
    testing::Gen gen(7);
    for (int k = 0; k < 500; ++k) {
        Scalar a = gen.scalar(), b = gen.scalar(), c = gen.scalar();
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK(a - a == Scalar(0));
        if (!a.is_zero())
            CHECK(a * a.inverse() == Scalar(1));
        if (!b.is_zero())
            CHECK((a / b) * b == a);
    }
}

TEST_CASE("format then parse is the identity and representations are canonical")
{
    testing::Gen gen(11);
    for (int k = 0; k < 500; ++k) {
        Scalar a = gen.scalar();
        std::string text = format_scalar(a);
        Scalar back = parse_scalar(text);
        CHECK(back == a);
        CHECK(format_scalar(back) == text);
        // the same value reached by a different route has identical parts
        Scalar b = (a * Scalar(3) + Scalar(5)) / Scalar(3) - Scalar::fraction(5, 3);
        CHECK(b.re().numerator() == a.re().numerator());
        CHECK(b.re().denominator() == a.re().denominator());
        CHECK(b.im().numerator() == a.im().numerator());
        CHECK(b.im().denominator() == a.im().denominator());
    }
}

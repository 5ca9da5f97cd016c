#include <catch2/catch_amalgamated.hpp>

#include "support.hpp"

using namespace liecas;
using liecas::testing::Rng;

TEST_CASE("scalar arithmetic is exact") {
    const Scalar a = Scalar::ratio(1, 3);
    const Scalar b = Scalar::ratio(1, 6);
    CHECK(a + b == Scalar::ratio(1, 2));
    CHECK(a - a == Scalar(0));
    CHECK(Scalar::i() * Scalar::i() == Scalar(-1));
    CHECK((Scalar(1) + Scalar::i()) * (Scalar(1) - Scalar::i()) == Scalar(2));

    Rng rng(7);
    for (int k = 0; k < 200; ++k) {
        const Scalar x = rng.gaussian_rational();
        const Scalar y = rng.gaussian_rational();
        CHECK((x + y) - y == x);
        if (!y.is_zero()) CHECK((x / y) * y == x);
        CHECK(x * y == y * x);
        CHECK((x * y).conj() == x.conj() * y.conj());
    }
}

TEST_CASE("division by zero is rejected") {
    CHECK_THROWS_AS(Scalar(1) / Scalar(0), Error);
}

TEST_CASE("canonical representation") {
    CHECK(Scalar::ratio(2, 4) == Scalar::ratio(1, 2));
    CHECK(Scalar::ratio(-1, -2) == Scalar::ratio(1, 2));
    CHECK(Scalar::ratio(1, 2).real_den() == 2);
    CHECK(Scalar::ratio(-3, 6).real_num() == -1);
    CHECK((Scalar::ratio(1, 2) - Scalar::ratio(1, 2)).str() == "0");
}

TEST_CASE("literal grammar round trip") {
    for (const char* lit : {"0", "5", "-5", "1/2", "-7/3", "1/2+3/4*i", "1/2-3/4*i", "-2*i",
                            "3*i", "2-1*i"}) {
        const Scalar s = Scalar::parse(lit);
        CHECK(Scalar::parse(s.str()) == s);
        CHECK(s.str() == lit);
    }
    // whitespace-insensitive, signs optional
    CHECK(Scalar::parse(" - 1 / 2 + 3 / 4 * i ") == Scalar(Rational(-1, 2), Rational(3, 4)));
    CHECK(Scalar::parse("+2/4") == Scalar::ratio(1, 2));
    CHECK(Scalar::parse("1*i") == Scalar::i());

    Rng rng(11);
    for (int k = 0; k < 200; ++k) {
        const Scalar s = rng.gaussian_rational(20, 9);
        CHECK(Scalar::parse(s.str()) == s);
    }
}

TEST_CASE("malformed literals are rejected") {
    for (const char* lit : {"", "i", "1/0", "1+i", "1+2", "1//2", "2*j", "1/2+3/4", "x", "1 2"}) {
        CHECK_THROWS_AS(Scalar::parse(lit), ParseError);
    }
}

#include <doctest.h>

#include "bistab/rational.hpp"

using bistab::BigInt;
using bistab::Rational;

TEST_CASE("rationals normalize to lowest terms with positive denominator") {
    const Rational r(6, -4);
    CHECK(r.numerator() == -3);
    CHECK(r.denominator() == 2);
    CHECK(Rational(0, 5) == Rational(0));
    CHECK(Rational(10, 5).is_integer());
}

TEST_CASE("arithmetic is exact") {
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(1, 3) - Rational(1, 3) == Rational(0));
    CHECK(Rational(2, 3) * Rational(9, 4) == Rational(3, 2));
    CHECK(Rational(7, 2) / Rational(7, 2) == Rational(1));
    CHECK(-Rational(5, 3) == Rational(-5, 3));
    // no drift under repeated accumulation
    Rational sum(0);
    for (int i = 0; i < 1000; ++i) sum += Rational(1, 3);
    CHECK(sum == Rational(1000, 3));
}

TEST_CASE("division by zero is an error") {
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
    CHECK_THROWS_AS(Rational(1, 2) / Rational(0), std::domain_error);
}

TEST_CASE("string round trip") {
    for (const Rational& r : {Rational(-3, 2), Rational(0), Rational(17), Rational(22, 7)})
        CHECK(Rational::parse(r.str()) == r);
    CHECK(Rational::parse("4/6") == Rational(2, 3));
    CHECK_THROWS_AS(Rational::parse("not a number"), std::invalid_argument);
}

TEST_CASE("integer square roots") {
    CHECK(bistab::isqrt_floor(BigInt(24)) == 4);
    CHECK(bistab::isqrt_ceil(BigInt(24)) == 5);
    CHECK(bistab::isqrt_floor(BigInt(25)) == 5);
    CHECK(bistab::isqrt_ceil(BigInt(25)) == 5);
    CHECK(bistab::isqrt_ceil(BigInt(0)) == 0);
    for (long n = 1; n <= 500; ++n) {
        const BigInt f = bistab::isqrt_floor(BigInt(n));
        const BigInt c = bistab::isqrt_ceil(BigInt(n));
        CHECK(f * f <= n);
        CHECK((f + 1) * (f + 1) > n);
        CHECK(c * c >= n);
    }
}

TEST_CASE("rational square-root upper bounds") {
    for (const Rational& x : {Rational(2), Rational(32), Rational(17, 5), Rational(1, 7)}) {
        const Rational u = bistab::sqrt_upper_bound(x);
        CHECK(u * u >= x);
    }
    CHECK(bistab::sqrt_upper_bound(Rational(9, 4)) * bistab::sqrt_upper_bound(Rational(9, 4)) >=
          Rational(9, 4));
}

TEST_CASE("binomial coefficients") {
    CHECK(bistab::binomial(10, 3) == 120);
    CHECK(bistab::binomial(5, 0) == 1);
    CHECK(bistab::binomial(3, 5) == 0);
    CHECK(bistab::binomial(60, 30) == BigInt("118264581564861424"));
}

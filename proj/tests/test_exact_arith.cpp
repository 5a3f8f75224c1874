#include "hypersum/exact_arith.hpp"

#include "oracle.hpp"

#include <doctest.h>

#include <random>

using namespace hypersum;

TEST_CASE("binom known values") {
    CHECK(binom(Natural(5), Natural(2)) == Natural(10));
    CHECK(binom(Natural(2), Natural(3)) == Natural(0));  // C(k-1,k) with k=3 vanishes
    CHECK(binom(Natural(0), Natural(0)) == Natural(1));
    CHECK(binom(Natural(52), Natural(5)) == Natural(2598960));
    CHECK(binom(Natural(100), Natural(50)).str() ==
          "100891344545564193334812497256");
}

TEST_CASE("binom agrees with the Pascal-triangle oracle up to 64") {
    for (std::uint32_t a = 0; a <= 64; ++a) {
        for (std::uint32_t b = 0; b <= a; ++b) {
            CHECK(binom(Natural(a), Natural(b)).value() == oracle::pascal_binom(a, b));
        }
    }
}

TEST_CASE("binom Pascal rule and symmetry up to 64") {
    for (std::uint32_t a = 1; a <= 64; ++a) {
        for (std::uint32_t b = 1; b <= a; ++b) {
            CHECK(binom(Natural(a), Natural(b)) ==
                  binom(Natural(a - 1), Natural(b - 1)) + binom(Natural(a - 1), Natural(b)));
        }
        for (std::uint32_t b = 0; b <= a; ++b) {
            CHECK(binom(Natural(a), Natural(b)) == binom(Natural(a), Natural(a - b)));
        }
    }
}

TEST_CASE("ipow") {
    CHECK(ipow(Natural(3), Natural(2)) == Natural(9));
    CHECK(ipow(Natural(7), Natural(0)) == Natural(1));
    CHECK(ipow(Natural(2), Natural(10)) == Natural(1024));
    CHECK(ipow(Natural(0), Natural(0)) == Natural(1));  // empty product
    CHECK(ipow(Natural(0), Natural(5)) == Natural(0));
    CHECK(ipow(Natural(2), Natural(100)).str() == "1267650600228229401496703205376");
}

TEST_CASE("factorial and gcd") {
    CHECK(factorial(Natural(0)) == Natural(1));
    CHECK(factorial(Natural(5)) == Natural(120));
    CHECK(factorial(Natural(20)).str() == "2432902008176640000");
    CHECK(gcd(Natural(12), Natural(18)) == Natural(6));
    CHECK(gcd(Natural(0), Natural(5)) == Natural(5));
}

TEST_CASE("Natural construction and bounds") {
    CHECK(Natural("12345678901234567890123456789").str() ==
          "12345678901234567890123456789");
    CHECK_THROWS_AS(Natural("12a"), std::invalid_argument);
    CHECK_THROWS_AS(Natural(""), std::invalid_argument);
    CHECK_THROWS_AS(Natural("-3"), std::invalid_argument);
    CHECK_THROWS_AS(Natural(BigInt(-1)), std::domain_error);
    CHECK(Natural(7).to_index() == 7);
    CHECK_THROWS_AS(Natural("99999999999999999999").to_index(), std::domain_error);
}

TEST_CASE("Integer covers differences of Naturals") {
    Integer d = Integer(Natural(3)) - Integer(Natural(5));
    CHECK(d == Integer(-2));
    CHECK(d.is_negative());
    CHECK(d.abs() == Integer(2));
    CHECK_THROWS_AS(d.to_natural(), std::domain_error);
    CHECK((Integer(Natural(5)) - Integer(Natural(3))).to_natural() == Natural(2));
    CHECK(Integer("-42").str() == "-42");
    CHECK_THROWS_AS(Integer("4-2"), std::invalid_argument);
}

TEST_CASE("Rational normalizes eagerly") {
    CHECK(Rational(Integer(2), Integer(4)) == Rational(Integer(1), Integer(2)));
    CHECK(Rational(Integer(1), Integer(-2)).numerator() == Integer(-1));
    CHECK(Rational(Integer(1), Integer(-2)).denominator() == Natural(2));
    CHECK(Rational(Integer(0), Integer(5)).denominator() == Natural(1));
    CHECK(Rational(Integer(6), Integer(3)).is_integral());
    CHECK_THROWS_AS(Rational(Integer(1), Integer(0)), std::domain_error);
}

TEST_CASE("Rational stays in lowest terms under random construction") {
    std::mt19937 rng(20240811);
    std::uniform_int_distribution<std::int64_t> num(-1000000, 1000000);
    std::uniform_int_distribution<std::int64_t> den(1, 1000000);
    for (int i = 0; i < 500; ++i) {
        Rational q(Integer(num(rng)), Integer(den(rng)));
        CHECK(gcd(q.numerator().abs().to_natural(), q.denominator()) == Natural(1));
        CHECK(q.denominator() > Natural(0));
    }
}

TEST_CASE("Rational arithmetic") {
    Rational third(Integer(1), Integer(3));
    Rational sixth(Integer(1), Integer(6));
    CHECK(third + sixth == Rational(Integer(1), Integer(2)));
    CHECK(third - sixth == sixth);
    CHECK(third * sixth == Rational(Integer(1), Integer(18)));
    CHECK(third / sixth == Rational(2));
    CHECK(-third == Rational(Integer(-1), Integer(3)));
    CHECK(third < Rational(Integer(1), Integer(2)));
    CHECK(third.str() == "1/3");
    CHECK(Rational(Integer(-7)).str() == "-7");
    CHECK_THROWS_AS(third / Rational(), std::domain_error);
}

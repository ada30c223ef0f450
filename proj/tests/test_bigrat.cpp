#include <doctest.h>

#include <random>

#include "taut/bigrat.hpp"

using taut::BigRat;

TEST_CASE("BigRat stays in lowest terms") {
    BigRat x(6, -8);
    CHECK(x.str() == "-3/4");
    CHECK(x.denominator() > 0);
    CHECK((BigRat(1, 3) + BigRat(1, 6)).str() == "1/2");
    CHECK((BigRat(2, 3) * BigRat(3, 2)).str() == "1");
    CHECK(BigRat(0, 5).str() == "0");
}

TEST_CASE("BigRat parse") {
    CHECK(BigRat::parse("1/24") == BigRat(1, 24));
    CHECK(BigRat::parse("-7") == BigRat(-7));
    CHECK(BigRat::parse("4/8").str() == "1/2");
    CHECK_THROWS_AS(BigRat::parse("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(BigRat::parse("1/-2"), std::invalid_argument);
    CHECK_THROWS_AS(BigRat::parse("x"), std::invalid_argument);
    CHECK_THROWS_AS(BigRat::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(BigRat::parse("1/"), std::invalid_argument);
}

TEST_CASE("BigRat division by zero throws") {
    CHECK_THROWS_AS(BigRat(1) / BigRat(0), std::domain_error);
}

TEST_CASE("BigRat text round-trips exactly") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<std::int64_t> dist(-1'000'000'000, 1'000'000'000);
    for (int i = 0; i < 200; ++i) {
        auto d = dist(rng);
        if (d == 0) d = 1;
        BigRat x = BigRat(dist(rng), d) * taut::pow(BigRat(3, 7), 9);
        CHECK(BigRat::parse(x.str()) == x);
    }
}

TEST_CASE("factorials") {
    CHECK(taut::factorial(0) == BigRat(1));
    CHECK(taut::factorial(5) == BigRat(120));
    CHECK(taut::double_factorial_odd(0) == BigRat(1));  // (-1)!!
    CHECK(taut::double_factorial_odd(3) == BigRat(15));  // 5!!
}

#include <catch2/catch_amalgamated.hpp>

#include <cstdint>
#include <stdexcept>

#include "greedylab/rational.hpp"
#include "greedylab/set_function.hpp"

using greedylab::Rational;
using greedylab::rational_from_double;

TEST_CASE("rationals are stored reduced with positive denominator") {
    Rational r(2, 4);
    CHECK(r.num() == 1);
    CHECK(r.den() == 2);

    Rational s(3, -6);
    CHECK(s.num() == -1);
    CHECK(s.den() == 2);

    CHECK(Rational(0, 5) == Rational(0));
    CHECK(Rational(7).den() == 1);
}

TEST_CASE("rational arithmetic is exact") {
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(5, 16) - Rational(1, 4) == Rational(1, 16));
    CHECK(Rational(3, 8) * Rational(4, 9) == Rational(1, 6));
    CHECK(Rational(3, 8) / Rational(3, 4) == Rational(1, 2));
    CHECK(-Rational(1, 4) + Rational(1, 4) == Rational(0));

    Rational acc(0);
    for (int i = 0; i < 10; ++i) acc += Rational(1, 10);
    CHECK(acc == Rational(1)); // no drift, unlike floating accumulation
}

TEST_CASE("rational comparisons") {
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1, 2) < Rational(-1, 3));
    CHECK(Rational(7, 16) > Rational(3, 8));
    CHECK(Rational(2, 6) <= Rational(1, 3));
    CHECK(Rational(2, 6) >= Rational(1, 3));
    CHECK(Rational(1, 3).sign() == 1);
    CHECK(Rational(-1, 3).sign() == -1);
    CHECK(Rational(0).sign() == 0);
}

TEST_CASE("rational error paths") {
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
    CHECK_THROWS_AS(Rational(INT64_MAX) * Rational(INT64_MAX),
                    std::overflow_error);
    CHECK_NOTHROW(Rational(INT64_MAX) * Rational(1)); // boundary stays legal
}

TEST_CASE("rational string form") {
    CHECK(Rational(5, 16).str() == "5/16");
    CHECK(Rational(4).str() == "4");
    CHECK(Rational(-3, 4).str() == "-3/4");
}

TEST_CASE("doubles convert to their exact dyadic rational") {
    CHECK(rational_from_double(0.25) == Rational(1, 4));
    CHECK(rational_from_double(-1.5) == Rational(-3, 2));
    CHECK(rational_from_double(0.0) == Rational(0));
    CHECK(rational_from_double(3.0) == Rational(3));

    // 0.1 is not 1/10 in binary; the conversion must report what the double
    // actually holds.
    Rational tenth = rational_from_double(0.1);
    CHECK(tenth.num() == 3602879701896397LL);
    CHECK(tenth.den() == (std::int64_t{1} << 55));
    CHECK(tenth.to_double() == 0.1);

    CHECK(rational_from_double(0.75).to_double() == 0.75);
    CHECK_THROWS_AS(rational_from_double(1e300), std::overflow_error);
    CHECK_THROWS_AS(rational_from_double(1e-300), std::overflow_error);
}

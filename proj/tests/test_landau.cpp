#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "landaukit/landau.hpp"

using landaukit::Rational;

TEST_CASE("first values") {
    CHECK(landaukit::landau_exact(0) == Rational(1));
    CHECK(landaukit::landau_exact(1) == Rational(5, 4));
    CHECK(landaukit::landau_exact(2) == Rational(89, 64));
    CHECK(landaukit::LandauSequence::shared().g(-1) == Rational(0));
}

TEST_CASE("strictly increasing") {
    Rational prev = landaukit::landau_exact(0);
    for (unsigned long n = 1; n <= 200; ++n) {
        const Rational cur = landaukit::landau_exact(n);
        CHECK(prev < cur);
        prev = cur;
    }
}

TEST_CASE("difference equation residuals vanish") {
    for (unsigned long n : {0ul, 1ul, 2ul, 10ul, 100ul, 500ul}) {
        CHECK(landaukit::diffeq_residual(n) == Rational(0));
        if (n >= 1) CHECK(landaukit::symmetric_residual(n) == Rational(0));
    }
}

TEST_CASE("denominator divides a power of two") {
    for (unsigned long n = 0; n <= 100; ++n)
        CHECK(landaukit::landau_exact(n).denominator_divides_pow2(4 * n));
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "landaukit/coefficients.hpp"

using landaukit::CoefficientTable;
using landaukit::Rational;

namespace {

Rational Q(const char* s) { return Rational::from_string(s); }

}  // namespace

TEST_CASE("d coefficients") {
    CoefficientTable t;
    CHECK(t.d_coeff(1, 2) == Rational(4));
    CHECK(t.d_coeff(2, 3) == Rational(16));
    CHECK(t.d_coeff(5, 6) == Rational(100));
    CHECK(t.d_coeff(0, 2) == Rational(11, 48));
    CHECK(t.d_coeff(0, 3) == Rational(79, 480));
    CHECK(t.d_coeff(1, 3) == Rational(51, 8));
    CHECK_THROWS_AS(t.d_coeff(0, 1), std::domain_error);
    CHECK_THROWS_AS(t.d_coeff(1, 1), std::domain_error);
    CHECK_THROWS_AS(t.d_coeff(3, 2), std::domain_error);
}

TEST_CASE("d positivity across the domain") {
    CoefficientTable t;
    for (long s = 2; s <= 40; ++s)
        for (unsigned long j = 0; j + 1 <= static_cast<unsigned long>(s); ++j)
            if (j >= 1 || s >= 2) CHECK(t.d_coeff(j, s).sign() == 1);
}

TEST_CASE("first seven beta values") {
    CoefficientTable t;
    CHECK(t.beta(2) == Q("11/192"));
    CHECK(t.beta(4) == Q("-1541/122880"));
    CHECK(t.beta(6) == Q("63433/8257536"));
    CHECK(t.beta(8) == Q("-9199901/1006632960"));
    CHECK(t.beta(10) == Q("317959723/17716740096"));
    CHECK(t.beta(12) == Q("-14849190321163/281406257233920"));
    CHECK(t.beta(14) == Q("717209117969/3298534883328"));
}

TEST_CASE("odd subscripts vanish") {
    CoefficientTable t;
    for (unsigned long k = 0; k <= 20; ++k) CHECK(t.beta(2 * k + 1) == Rational(0));
    CHECK_THROWS_AS(t.beta(0), std::domain_error);
}

TEST_CASE("sign alternation") {
    CoefficientTable t;
    for (unsigned long k = 1; k <= 25; ++k) {
        const Rational b = t.beta(2 * k);
        CHECK(b.sign() == (k % 2 == 1 ? 1 : -1));
        CHECK(t.rho(k).sign() == 1);
    }
}

TEST_CASE("rho values") {
    CoefficientTable t;
    CHECK(t.rho(0) == Rational(1));
    CHECK(t.rho(1) == Q("11/192"));
    CHECK(t.rho(2) == Q("1541/737280"));
}

TEST_CASE("c coefficients") {
    CoefficientTable t;
    CHECK(t.c_coeff(2, 3) == Rational(1, 2));
    CHECK(t.c_coeff(1, 2) == Rational(1, 2));
    CHECK(t.c_coeff(9, 10) == Rational(1, 2));
    CHECK(t.c_coeff(1, 3) == Rational(51, 1536));
    CHECK_THROWS_AS(t.c_coeff(3, 3), std::domain_error);
    CHECK_THROWS_AS(t.c_coeff(0, 1), std::domain_error);
}

TEST_CASE("c-d link") {
    CoefficientTable t;
    for (long s = 2; s <= 40; ++s)
        for (unsigned long k = 1; k < static_cast<unsigned long>(s); ++k) {
            const Rational lhs = t.c_coeff(k, s) * Rational(8) * Rational(s - 1).pow(2) *
                                 Rational::factorial(2 * s - 3);
            const Rational rhs =
                Rational::factorial(2 * k - 1) * t.d_coeff(k, s);
            CHECK(lhs == rhs);
        }
}

TEST_CASE("c closed form in (l-k) variables") {
    // c_{j,s} = 1/(2(2s-2j)!) + j/(2(s-1)(2s-2j)!) + 1/(64(s-1)^2 (2s-2j-2)!)
    CoefficientTable t;
    for (long s = 3; s <= 20; ++s)
        for (unsigned long j = 0; j + 2 <= static_cast<unsigned long>(s); ++j) {
            const long lj = static_cast<long>(j);
            const Rational f1 = Rational(1) / (Rational(2) * Rational::factorial(2 * s - 2 * lj));
            const Rational f2 = Rational(lj) / (Rational(2) * Rational(s - 1) *
                                                Rational::factorial(2 * s - 2 * lj));
            const Rational f3 = Rational(1) / (Rational(64) * Rational(s - 1).pow(2) *
                                               Rational::factorial(2 * s - 2 * lj - 2));
            CHECK(t.c_coeff(j, s) == f1 + f2 + f3);
        }
}

TEST_CASE("r coefficients") {
    CoefficientTable t;
    CHECK(t.r_coeff(1, 2) == Rational(11, 48));
    CHECK(t.r_coeff(2, 3) == Q("-1541/7680"));
    for (long s = 2; s <= 30; ++s) CHECK(t.r_coeff(1, s) == t.d_coeff(0, s));
    CHECK_THROWS_AS(t.r_coeff(0, 2), std::domain_error);
    CHECK_THROWS_AS(t.r_coeff(2, 2), std::domain_error);
}

TEST_CASE("leading coefficient identity") {
    CoefficientTable t;
    for (unsigned long l = 1; l <= 25; ++l) {
        const long ll = static_cast<long>(l);
        CHECK(t.r_coeff(l, ll + 1) == Rational(4 * ll * ll) * t.beta(2 * l));
    }
}

TEST_CASE("rho alternating sum identity") {
    CoefficientTable t;
    for (unsigned long l = 1; l <= 25; ++l) {
        Rational acc(0);
        for (unsigned long k = 0; k <= l; ++k) {
            const Rational term = t.c_coeff(l - k, static_cast<long>(l) + 1) * t.rho(l - k);
            acc += (k % 2 == 0) ? term : -term;
        }
        CHECK(acc == Rational(0));
    }
}

TEST_CASE("determinant oracle agrees with the recurrence") {
    CoefficientTable t;
    for (unsigned long l = 1; l <= 15; ++l) CHECK(t.beta_det(2 * l) == t.beta(2 * l));
    CHECK(t.beta_det(2) == Q("11/192"));
    CHECK(t.beta_det(4) == Q("-1541/122880"));
    CHECK(t.beta_det(12) == Q("-14849190321163/281406257233920"));
    CHECK(t.beta_det(7) == Rational(0));
}

TEST_CASE("granath coefficients") {
    CoefficientTable t;
    CHECK(t.granath_a(1) == Rational(-4));
    CHECK(t.granath_a(2) == Rational(20, 3));
    CHECK(t.granath_a(3) == Rational(96));
    // a_2/16^2 and a_3/16^3 match the classical 5/192 and 3/128 terms.
    CHECK(t.granath_a(2) / Rational(256) == Rational(5, 192));
    CHECK(t.granath_a(3) / Rational(4096) == Rational(3, 128));
    CHECK_THROWS_AS(t.granath_a(0), std::domain_error);
}

TEST_CASE("shared table is the same object") {
    CHECK(&CoefficientTable::shared() == &CoefficientTable::shared());
    CHECK(CoefficientTable::shared().beta(2) == Q("11/192"));
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "landaukit/coefficients.hpp"
#include "landaukit/series.hpp"

using landaukit::Rational;
using landaukit::TruncSeries;

namespace {

TruncSeries make(std::initializer_list<long> coeffs) {
    std::vector<Rational> v;
    for (long c : coeffs) v.emplace_back(c);
    return TruncSeries(std::move(v));
}

}  // namespace

TEST_CASE("multiplication") {
    const TruncSeries a = make({1, 1, 0});   // 1 + x
    const TruncSeries b = make({1, -1, 0});  // 1 - x
    const TruncSeries p = a.mul(b);
    CHECK(p[0] == Rational(1));
    CHECK(p[1] == Rational(0));
    CHECK(p[2] == Rational(-1));

    const TruncSeries one = make({1, 0, 0});
    CHECK(a.mul(one) == a);

    const TruncSeries x = make({0, 1});
    const TruncSeries xx = x.mul(x);
    CHECK(xx[0] == Rational(0));
    CHECK(xx[1] == Rational(0));

    CHECK_THROWS_AS(a.mul(x), std::invalid_argument);
}

TEST_CASE("reciprocal") {
    CHECK(make({1, 0, 0}).reciprocal() == make({1, 0, 0}));
    CHECK(make({1, -1, 0, 0}).reciprocal() == make({1, 1, 1, 1}));
    CHECK_THROWS_AS(make({0, 1}).reciprocal(), std::domain_error);

    const TruncSeries sinc = landaukit::sinc_half_series(2);
    const TruncSeries inv = sinc.reciprocal();
    CHECK(inv[0] == Rational(1));
    CHECK(inv[2] == Rational(1, 24));

    // a * reciprocal(a) = 1 mod x^{M+1}
    const TruncSeries a = make({3, 1, 4, 1, 5});
    const TruncSeries prod = a.mul(a.reciprocal());
    CHECK(prod[0] == Rational(1));
    for (unsigned long m = 1; m <= 4; ++m) CHECK(prod[m] == Rational(0));
}

TEST_CASE("sin squared half series") {
    const TruncSeries s = landaukit::sin_half_sq_series(6);
    CHECK(s[0] == Rational(0));
    CHECK(s[2] == Rational(1, 4));
    CHECK(s[4] == Rational(-1, 48));
    CHECK(s[6] == Rational(1, 1440));
    for (unsigned long m = 1; m <= 5; m += 2) CHECK(s[m] == Rational(0));
}

TEST_CASE("hypergeometric series coefficients") {
    const Rational q(1, 4);
    const TruncSeries f = landaukit::hyp_series(q, q, Rational(1), 3);
    CHECK(f[0] == Rational(1));
    CHECK(f[1] == Rational(1, 16));
    CHECK(f[2] == Rational(25, 1024));

    const Rational h(1, 2);
    const TruncSeries g = landaukit::hyp_series(h, h, Rational(1), 2);
    CHECK(g[1] == Rational(1, 4));

    CHECK_THROWS_AS(landaukit::hyp_series(q, q, Rational(0), 2), std::domain_error);
    CHECK_THROWS_AS(landaukit::hyp_series(q, q, Rational(-3), 2), std::domain_error);
}

TEST_CASE("hypergeometric ODE termwise identity") {
    // For F(1/4,1/4;1;t): (m+1)^2 f_{m+1} = (m+1/4)^2 f_m.
    const Rational q(1, 4);
    const TruncSeries f = landaukit::hyp_series(q, q, Rational(1), 40);
    for (unsigned long m = 0; m < 40; ++m) {
        const Rational lhs = Rational(static_cast<long>(m) + 1).pow(2) * f[m + 1];
        const Rational rhs = (Rational(static_cast<long>(m)) + q).pow(2) * f[m];
        CHECK(lhs == rhs);
    }
}

TEST_CASE("quadratic transformation") {
    // F(1/4,1/4;1;sin^2(x/2)) = F(1/2,1/2;1;sin^2(x/4)) as formal series.
    const unsigned long M = 40;
    const Rational q(1, 4), h(1, 2);
    const TruncSeries lhs =
        landaukit::hyp_series(q, q, Rational(1), M / 2).compose_zero_const(
            landaukit::sin_half_sq_series(M));
    const TruncSeries rhs =
        landaukit::hyp_series(h, h, Rational(1), M / 2).compose_zero_const(
            landaukit::sin_half_sq_series(M).scale_argument(Rational(1, 2)));
    CHECK(lhs == rhs);
}

TEST_CASE("composition rejects nonzero inner constant") {
    CHECK_THROWS_AS(make({1, 1}).compose_zero_const(make({1, 0})), std::domain_error);
}

TEST_CASE("u series") {
    const TruncSeries u = landaukit::u_series(10);
    CHECK(u[0] == Rational(1));
    CHECK(u[2] == Rational(11, 192));
    CHECK(u[4] == Rational(1541, 737280));
    for (unsigned long m = 1; m <= 9; m += 2) CHECK(u[m] == Rational(0));
}

TEST_CASE("series oracle matches the recurrence") {
    const auto& table = landaukit::CoefficientTable::shared();
    for (unsigned long k = 0; k <= 10; ++k) CHECK(landaukit::rho_from_series(k) == table.rho(k));
}

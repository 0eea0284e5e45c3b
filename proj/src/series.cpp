#include "landaukit/series.hpp"

#include <stdexcept>

namespace landaukit {

TruncSeries::TruncSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw std::invalid_argument("TruncSeries: need at least one coefficient");
}

TruncSeries TruncSeries::add(const TruncSeries& o) const {
    if (order() != o.order()) throw std::invalid_argument("TruncSeries: order mismatch");
    TruncSeries r(order());
    for (unsigned long m = 0; m <= order(); ++m) r.coeffs_[m] = coeffs_[m] + o.coeffs_[m];
    return r;
}

TruncSeries TruncSeries::mul(const TruncSeries& o) const {
    if (order() != o.order()) throw std::invalid_argument("TruncSeries: order mismatch");
    TruncSeries r(order());
    for (unsigned long i = 0; i <= order(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        for (unsigned long j = 0; i + j <= order(); ++j) {
            if (o.coeffs_[j].is_zero()) continue;
            r.coeffs_[i + j] += coeffs_[i] * o.coeffs_[j];
        }
    }
    return r;
}

TruncSeries TruncSeries::reciprocal() const {
    if (coeffs_[0].is_zero())
        throw std::domain_error("TruncSeries: reciprocal needs a nonzero constant term");
    TruncSeries r(order());
    r.coeffs_[0] = coeffs_[0].reciprocal();
    for (unsigned long m = 1; m <= order(); ++m) {
        Rational acc(0);
        for (unsigned long i = 1; i <= m; ++i) acc += coeffs_[i] * r.coeffs_[m - i];
        r.coeffs_[m] = -acc / coeffs_[0];
    }
    return r;
}

TruncSeries TruncSeries::compose_zero_const(const TruncSeries& inner) const {
    if (!inner.coeffs_[0].is_zero())
        throw std::domain_error("TruncSeries: composition needs a zero inner constant term");
    // Horner in the inner series: result = (...(f_K * T + f_{K-1}) * T + ...) + f_0.
    const unsigned long M = inner.order();
    TruncSeries result(M);
    for (unsigned long back = 0; back <= order(); ++back) {
        const unsigned long m = order() - back;
        result = result.mul(inner);
        result.coeffs_[0] += coeffs_[m];
    }
    return result;
}

TruncSeries TruncSeries::scale_argument(const Rational& lambda) const {
    TruncSeries r(order());
    Rational power(1);
    for (unsigned long m = 0; m <= order(); ++m) {
        r.coeffs_[m] = coeffs_[m] * power;
        power *= lambda;
    }
    return r;
}

TruncSeries TruncSeries::truncate(unsigned long new_order) const {
    TruncSeries r(new_order);
    for (unsigned long m = 0; m <= new_order && m <= order(); ++m) r.coeffs_[m] = coeffs_[m];
    return r;
}

TruncSeries sin_half_sq_series(unsigned long M) {
    TruncSeries r(M);
    for (unsigned long m = 1; 2 * m <= M; ++m) {
        Rational c = Rational(1) / (Rational(2) * Rational::factorial(2 * m));
        r.set(2 * m, (m % 2 == 1) ? c : -c);
    }
    return r;
}

TruncSeries sinc_half_series(unsigned long M) {
    TruncSeries r(M);
    for (unsigned long m = 0; 2 * m <= M; ++m) {
        Rational c =
            Rational(1) / (Rational(4).pow(static_cast<long>(m)) * Rational::factorial(2 * m + 1));
        r.set(2 * m, (m % 2 == 0) ? c : -c);
    }
    return r;
}

TruncSeries hyp_series(const Rational& a, const Rational& b, const Rational& c, unsigned long M) {
    if (c.is_integer() && c.sign() <= 0)
        throw std::domain_error("hyp_series: c must not be a nonpositive integer");
    TruncSeries r(M);
    Rational f(1);
    r.set(0, f);
    for (unsigned long m = 0; m < M; ++m) {
        const Rational lm(static_cast<long>(m));
        f = f * (a + lm) * (b + lm) / ((c + lm) * (lm + Rational(1)));
        r.set(m + 1, f);
    }
    return r;
}

TruncSeries u_series(unsigned long M) {
    const Rational quarter(1, 4);
    // Only powers T^m with 2m <= M contribute, since T = sin^2(x/2) starts
    // at x^2.
    const TruncSeries f = hyp_series(quarter, quarter, Rational(1), M / 2);
    const TruncSeries composed = f.compose_zero_const(sin_half_sq_series(M));
    return composed.mul(sinc_half_series(M).reciprocal());
}

Rational rho_from_series(unsigned long k) { return u_series(2 * k)[2 * k]; }

}  // namespace landaukit

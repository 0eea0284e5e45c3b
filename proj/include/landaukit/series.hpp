#pragma once

#include <vector>

#include "landaukit/rational.hpp"

namespace landaukit {

// Truncated formal power series with exact rational coefficients. All
// operations are exact modulo x^{order+1}; nothing here is numeric.
class TruncSeries {
public:
    explicit TruncSeries(unsigned long order) : coeffs_(order + 1) {}
    explicit TruncSeries(std::vector<Rational> coeffs);

    unsigned long order() const { return coeffs_.size() - 1; }
    const Rational& operator[](unsigned long m) const { return coeffs_.at(m); }
    void set(unsigned long m, Rational value) { coeffs_.at(m) = std::move(value); }

    TruncSeries add(const TruncSeries& o) const;
    TruncSeries mul(const TruncSeries& o) const;  // orders must match

    // Multiplicative inverse mod x^{order+1}; constant term must be nonzero.
    TruncSeries reciprocal() const;

    // Substitutes `inner` (a series in x with zero constant term) for the
    // variable of this series (a series in t). Result has inner's order.
    TruncSeries compose_zero_const(const TruncSeries& inner) const;

    // x -> lambda * x, i.e. coefficient m scales by lambda^m.
    TruncSeries scale_argument(const Rational& lambda) const;

    TruncSeries truncate(unsigned long new_order) const;

    friend TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) { return a.add(b); }
    friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) { return a.mul(b); }
    friend bool operator==(const TruncSeries& a, const TruncSeries& b) {
        return a.coeffs_ == b.coeffs_;
    }

private:
    std::vector<Rational> coeffs_;
};

// sin^2(x/2) = sum_{m>=1} (-1)^{m+1} x^{2m} / (2 (2m)!), to order M.
TruncSeries sin_half_sq_series(unsigned long M);

// sin(x/2) / (x/2) = sum_{m>=0} (-1)^m x^{2m} / (4^m (2m+1)!), to order M.
TruncSeries sinc_half_series(unsigned long M);

// Maclaurin series of the Gauss hypergeometric function F(a,b;c;t) in t:
// coefficient m is (a)_m (b)_m / ((c)_m m!). c must not be a nonpositive
// integer.
TruncSeries hyp_series(const Rational& a, const Rational& b, const Rational& c, unsigned long M);

// u(x) = F(1/4,1/4;1;sin^2(x/2)) * (x/2)/sin(x/2), to order M. The
// coefficient of x^{2k} is rho_k; odd coefficients vanish.
TruncSeries u_series(unsigned long M);

// Extracts rho_k from u_series(2k). Independent of the recurrence path.
Rational rho_from_series(unsigned long k);

}  // namespace landaukit

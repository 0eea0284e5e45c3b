#pragma once

#include <mpfr.h>

#include <string>

#include "landaukit/rational.hpp"

namespace landaukit {

enum class Ordering { Less, Greater, Unknown };

// Rigorous real enclosure: a midpoint at `prec` bits plus a nonnegative error
// radius. Every operation keeps the invariant that the represented real lies
// in [mid - rad, mid + rad]. Midpoints are rounded to nearest; radii are
// propagated with upward rounding and inflated by one ulp of the midpoint
// whenever the midpoint rounding was inexact.
class Ball {
public:
    // Radii carry little information; a fixed small precision suffices.
    static constexpr mpfr_prec_t kRadiusPrec = 64;

    explicit Ball(mpfr_prec_t prec);
    Ball(const Ball& other);
    Ball(Ball&& other) noexcept;
    Ball& operator=(const Ball& other);
    Ball& operator=(Ball&& other) noexcept;
    ~Ball();

    // Exact zero if q is representable at `prec` bits, else one ulp of slack.
    static Ball from_rational(const Rational& q, mpfr_prec_t prec);
    static Ball from_long(long v, mpfr_prec_t prec);
    static Ball pi(mpfr_prec_t prec);
    static Ball euler_gamma(mpfr_prec_t prec);
    static Ball log2(mpfr_prec_t prec);

    mpfr_prec_t precision() const { return mpfr_get_prec(mid_); }

    Ball add(const Ball& o) const;
    Ball sub(const Ball& o) const;
    Ball mul(const Ball& o) const;
    Ball div(const Ball& o) const;  // o must exclude zero
    Ball neg() const;
    Ball log() const;   // ball must be strictly positive
    Ball exp() const;
    Ball sqrt() const;  // ball must be strictly positive
    Ball mul_2exp(long e) const;  // exact scale by 2^e
    Ball pow_ui(unsigned long e) const;

    friend Ball operator+(const Ball& a, const Ball& b) { return a.add(b); }
    friend Ball operator-(const Ball& a, const Ball& b) { return a.sub(b); }
    friend Ball operator*(const Ball& a, const Ball& b) { return a.mul(b); }
    friend Ball operator/(const Ball& a, const Ball& b) { return a.div(b); }
    Ball operator-() const { return neg(); }

    bool is_exact() const { return mpfr_zero_p(rad_); }
    bool contains_zero() const;
    // Exact membership test (midpoint and radius are dyadic rationals).
    bool contains(const Rational& q) const;

    // Exact dyadic values, mostly for tests.
    Rational midpoint_rational() const;
    Rational radius_rational() const;
    double midpoint_double() const { return mpfr_get_d(mid_, MPFR_RNDN); }
    double radius_double() const { return mpfr_get_d(rad_, MPFR_RNDU); }

    // Rigorous lower/upper bounds as dyadic rationals.
    Rational lower_rational() const;
    Rational upper_rational() const;

    // Midpoint rounded to `digits` significant digits, e.g. "3.14159e+00".
    std::string midpoint_string(int digits) const;
    std::string radius_string(int digits) const;
    // "[lo .. hi]" with outward-rounded endpoints.
    std::string enclosure_string(int digits = 8) const;

    // -1 if the whole ball is < 0, +1 if > 0, 0 if it straddles or touches.
    int sign_certain() const;

    // Less iff sup(a) < inf(b); Greater iff inf(a) > sup(b); else Unknown.
    friend Ordering cmp_strict(const Ball& a, const Ball& b);

private:
    Ball() = default;  // uninitialized; internal use only
    void init(mpfr_prec_t prec);
    // rad_ += 1 ulp of mid_ when the last midpoint rounding was inexact.
    void absorb_rounding(int ternary);

    mpfr_t mid_;
    mpfr_t rad_;
};

Ordering cmp_strict(const Ball& a, const Ball& b);

// Ball enclosing ln(x) for rational x > 0.
Ball const_log(const Rational& x, mpfr_prec_t prec);

}  // namespace landaukit

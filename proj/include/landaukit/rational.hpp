#pragma once

#include <gmp.h>

#include <compare>
#include <cstdint>
#include <string>

namespace landaukit {

// Arbitrary-precision rational kept in canonical form: positive denominator,
// gcd(|num|, den) == 1 after every operation.
class Rational {
public:
    Rational() { mpq_init(q_); }

    Rational(long n) {
        mpq_init(q_);
        mpq_set_si(q_, n, 1u);
    }

    // den must be nonzero; the value is canonicalized on construction.
    Rational(long num, long den);

    Rational(const Rational& other) {
        mpq_init(q_);
        mpq_set(q_, other.q_);
    }

    Rational(Rational&& other) noexcept {
        mpq_init(q_);
        mpq_swap(q_, other.q_);
    }

    Rational& operator=(const Rational& other) {
        if (this != &other) mpq_set(q_, other.q_);
        return *this;
    }

    Rational& operator=(Rational&& other) noexcept {
        mpq_swap(q_, other.q_);
        return *this;
    }

    ~Rational() { mpq_clear(q_); }

    // Parses "num", "num/den", or a plain decimal integer string.
    static Rational from_string(const std::string& s);

    // n! as an integer-valued rational.
    static Rational factorial(unsigned long n);

    Rational& operator+=(const Rational& o) {
        mpq_add(q_, q_, o.q_);
        return *this;
    }
    Rational& operator-=(const Rational& o) {
        mpq_sub(q_, q_, o.q_);
        return *this;
    }
    Rational& operator*=(const Rational& o) {
        mpq_mul(q_, q_, o.q_);
        return *this;
    }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    Rational operator-() const {
        Rational r;
        mpq_neg(r.q_, q_);
        return r;
    }

    // Integer power; e < 0 requires a nonzero base.
    Rational pow(long e) const;

    Rational abs() const {
        Rational r;
        mpq_abs(r.q_, q_);
        return r;
    }

    Rational reciprocal() const;

    int sign() const { return mpq_sgn(q_); }
    bool is_zero() const { return mpq_sgn(q_) == 0; }
    bool is_integer() const { return mpz_cmp_ui(mpq_denref(q_), 1u) == 0; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return mpq_equal(a.q_, b.q_) != 0;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = mpq_cmp(a.q_, b.q_);
        if (c < 0) return std::strong_ordering::less;
        if (c > 0) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    // "num/den", or just "num" for integers.
    std::string to_string() const;
    std::string numerator_string() const;
    std::string denominator_string() const;

    // Correctly rounded (nearest, ties away from zero) to `digits` fractional
    // digits; trailing zeros in the fraction are trimmed unless keep_zeros.
    std::string to_decimal(unsigned digits, bool keep_zeros = false) const;

    double to_double() const { return mpq_get_d(q_); }

    // True when the denominator is a power of two not exceeding 2^max_exp.
    bool denominator_divides_pow2(unsigned long max_exp) const;

    const __mpq_struct* raw() const { return q_; }

private:
    mpq_t q_;
};

}  // namespace landaukit

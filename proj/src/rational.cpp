#include "landaukit/rational.hpp"

#include <stdexcept>
#include <vector>

namespace landaukit {

Rational::Rational(long num, long den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    mpq_init(q_);
    if (den < 0) {
        num = -num;
        den = -den;
    }
    mpq_set_si(q_, num, static_cast<unsigned long>(den));
    mpq_canonicalize(q_);
}

Rational Rational::from_string(const std::string& s) {
    Rational r;
    if (mpq_set_str(r.q_, s.c_str(), 10) != 0)
        throw std::invalid_argument("Rational: cannot parse '" + s + "'");
    if (mpz_sgn(mpq_denref(r.q_)) == 0)
        throw std::domain_error("Rational: zero denominator in '" + s + "'");
    if (mpz_sgn(mpq_denref(r.q_)) < 0) {
        mpz_neg(mpq_numref(r.q_), mpq_numref(r.q_));
        mpz_neg(mpq_denref(r.q_), mpq_denref(r.q_));
    }
    mpq_canonicalize(r.q_);
    return r;
}

Rational Rational::factorial(unsigned long n) {
    Rational r;
    mpz_fac_ui(mpq_numref(r.q_), n);
    return r;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    mpq_div(q_, q_, o.q_);
    return *this;
}

Rational Rational::pow(long e) const {
    if (e == 0) return Rational(1);
    if (is_zero() && e < 0) throw std::domain_error("Rational: 0 to a negative power");
    Rational r;
    const auto a = static_cast<unsigned long>(e < 0 ? -e : e);
    mpz_pow_ui(mpq_numref(r.q_), mpq_numref(q_), a);
    mpz_pow_ui(mpq_denref(r.q_), mpq_denref(q_), a);
    if (e < 0) mpq_inv(r.q_, r.q_);
    return r;
}

Rational Rational::reciprocal() const {
    if (is_zero()) throw std::domain_error("Rational: reciprocal of zero");
    Rational r;
    mpq_inv(r.q_, q_);
    return r;
}

namespace {

std::string mpz_to_string(const mpz_t z) {
    std::vector<char> buf(mpz_sizeinbase(z, 10) + 2);
    mpz_get_str(buf.data(), 10, z);
    return std::string(buf.data());
}

}  // namespace

std::string Rational::to_string() const {
    std::string s = mpz_to_string(mpq_numref(q_));
    if (!is_integer()) {
        s += '/';
        s += mpz_to_string(mpq_denref(q_));
    }
    return s;
}

std::string Rational::numerator_string() const { return mpz_to_string(mpq_numref(q_)); }

std::string Rational::denominator_string() const { return mpz_to_string(mpq_denref(q_)); }

std::string Rational::to_decimal(unsigned digits, bool keep_zeros) const {
    mpz_t scaled, pow10, rem;
    mpz_init(scaled);
    mpz_init(pow10);
    mpz_init(rem);
    mpz_ui_pow_ui(pow10, 10u, digits);

    mpz_abs(scaled, mpq_numref(q_));
    mpz_mul(scaled, scaled, pow10);
    mpz_fdiv_qr(scaled, rem, scaled, mpq_denref(q_));
    // nearest, ties away from zero
    mpz_mul_2exp(rem, rem, 1);
    if (mpz_cmp(rem, mpq_denref(q_)) >= 0) mpz_add_ui(scaled, scaled, 1u);

    std::string body = mpz_to_string(scaled);
    if (body.size() <= digits) body.insert(0, digits + 1 - body.size(), '0');

    std::string out;
    if (sign() < 0 && mpz_sgn(scaled) != 0) out += '-';
    out += body.substr(0, body.size() - digits);
    if (digits > 0) {
        std::string frac = body.substr(body.size() - digits);
        if (!keep_zeros) {
            const auto last = frac.find_last_not_of('0');
            frac = (last == std::string::npos) ? std::string() : frac.substr(0, last + 1);
        }
        if (!frac.empty()) {
            out += '.';
            out += frac;
        }
    }

    mpz_clear(scaled);
    mpz_clear(pow10);
    mpz_clear(rem);
    return out;
}

bool Rational::denominator_divides_pow2(unsigned long max_exp) const {
    const mpz_srcptr den = mpq_denref(q_);
    if (mpz_popcount(den) != 1) return false;
    return mpz_sizeinbase(den, 2) - 1 <= max_exp;
}

}  // namespace landaukit

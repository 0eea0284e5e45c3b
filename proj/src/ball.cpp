#include "landaukit/ball.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace landaukit {

namespace {

// Scratch value at radius precision.
class Tmp {
public:
    Tmp() { mpfr_init2(v_, Ball::kRadiusPrec); }
    explicit Tmp(mpfr_prec_t prec) { mpfr_init2(v_, prec); }
    ~Tmp() { mpfr_clear(v_); }
    Tmp(const Tmp&) = delete;
    Tmp& operator=(const Tmp&) = delete;
    mpfr_ptr get() { return v_; }

private:
    mpfr_t v_;
};

}  // namespace

void Ball::init(mpfr_prec_t prec) {
    if (prec < 2) throw std::domain_error("Ball: precision must be >= 2");
    mpfr_init2(mid_, prec);
    mpfr_init2(rad_, kRadiusPrec);
    mpfr_set_zero(mid_, 1);
    mpfr_set_zero(rad_, 1);
}

Ball::Ball(mpfr_prec_t prec) { init(prec); }

Ball::Ball(const Ball& other) {
    mpfr_init2(mid_, mpfr_get_prec(other.mid_));
    mpfr_init2(rad_, kRadiusPrec);
    mpfr_set(mid_, other.mid_, MPFR_RNDN);
    mpfr_set(rad_, other.rad_, MPFR_RNDU);
}

Ball::Ball(Ball&& other) noexcept {
    mpfr_init2(mid_, mpfr_get_prec(other.mid_));
    mpfr_init2(rad_, kRadiusPrec);
    mpfr_swap(mid_, other.mid_);
    mpfr_swap(rad_, other.rad_);
}

Ball& Ball::operator=(const Ball& other) {
    if (this != &other) {
        mpfr_set_prec(mid_, mpfr_get_prec(other.mid_));
        mpfr_set(mid_, other.mid_, MPFR_RNDN);
        mpfr_set(rad_, other.rad_, MPFR_RNDU);
    }
    return *this;
}

Ball& Ball::operator=(Ball&& other) noexcept {
    mpfr_swap(mid_, other.mid_);
    mpfr_swap(rad_, other.rad_);
    return *this;
}

Ball::~Ball() {
    mpfr_clear(mid_);
    mpfr_clear(rad_);
}

void Ball::absorb_rounding(int ternary) {
    if (ternary == 0) return;
    Tmp ulp;
    if (mpfr_zero_p(mid_)) {
        // Inexact zero can only come from underflow, far outside our range.
        mpfr_set_ui_2exp(ulp.get(), 1u, mpfr_get_emin(), MPFR_RNDU);
    } else {
        mpfr_set_ui_2exp(ulp.get(), 1u, mpfr_get_exp(mid_) - mpfr_get_prec(mid_), MPFR_RNDU);
    }
    mpfr_add(rad_, rad_, ulp.get(), MPFR_RNDU);
}

Ball Ball::from_rational(const Rational& q, mpfr_prec_t prec) {
    Ball b(prec);
    const int t = mpfr_set_q(b.mid_, q.raw(), MPFR_RNDN);
    b.absorb_rounding(t);
    return b;
}

Ball Ball::from_long(long v, mpfr_prec_t prec) {
    Ball b(prec);
    const int t = mpfr_set_si(b.mid_, v, MPFR_RNDN);
    b.absorb_rounding(t);
    return b;
}

Ball Ball::pi(mpfr_prec_t prec) {
    Ball b(prec);
    const int t = mpfr_const_pi(b.mid_, MPFR_RNDN);
    b.absorb_rounding(t);
    return b;
}

Ball Ball::euler_gamma(mpfr_prec_t prec) {
    Ball b(prec);
    const int t = mpfr_const_euler(b.mid_, MPFR_RNDN);
    b.absorb_rounding(t);
    return b;
}

Ball Ball::log2(mpfr_prec_t prec) {
    Ball b(prec);
    const int t = mpfr_const_log2(b.mid_, MPFR_RNDN);
    b.absorb_rounding(t);
    return b;
}

Ball Ball::add(const Ball& o) const {
    Ball r(std::max(precision(), o.precision()));
    const int t = mpfr_add(r.mid_, mid_, o.mid_, MPFR_RNDN);
    mpfr_add(r.rad_, rad_, o.rad_, MPFR_RNDU);
    r.absorb_rounding(t);
    return r;
}

Ball Ball::sub(const Ball& o) const {
    Ball r(std::max(precision(), o.precision()));
    const int t = mpfr_sub(r.mid_, mid_, o.mid_, MPFR_RNDN);
    mpfr_add(r.rad_, rad_, o.rad_, MPFR_RNDU);
    r.absorb_rounding(t);
    return r;
}

Ball Ball::mul(const Ball& o) const {
    Ball r(std::max(precision(), o.precision()));
    const int t = mpfr_mul(r.mid_, mid_, o.mid_, MPFR_RNDN);
    // |a||db| + |b||da| + |da||db|
    Tmp am, bm, term;
    mpfr_abs(am.get(), mid_, MPFR_RNDU);
    mpfr_abs(bm.get(), o.mid_, MPFR_RNDU);
    mpfr_mul(term.get(), am.get(), o.rad_, MPFR_RNDU);
    mpfr_set(r.rad_, term.get(), MPFR_RNDU);
    mpfr_mul(term.get(), bm.get(), rad_, MPFR_RNDU);
    mpfr_add(r.rad_, r.rad_, term.get(), MPFR_RNDU);
    mpfr_mul(term.get(), rad_, o.rad_, MPFR_RNDU);
    mpfr_add(r.rad_, r.rad_, term.get(), MPFR_RNDU);
    r.absorb_rounding(t);
    return r;
}

Ball Ball::div(const Ball& o) const {
    // Divisor must exclude zero: |bm| > br.
    Tmp denom_low;
    mpfr_abs(denom_low.get(), o.mid_, MPFR_RNDD);
    mpfr_sub(denom_low.get(), denom_low.get(), o.rad_, MPFR_RNDD);
    if (mpfr_sgn(denom_low.get()) <= 0)
        throw std::domain_error("Ball: division by a ball containing zero");

    Ball r(std::max(precision(), o.precision()));
    const int t = mpfr_div(r.mid_, mid_, o.mid_, MPFR_RNDN);

    // |a/b - am/bm| <= (|da| + |am/bm|*|db|) / (|bm| - |db|), and
    // |am/bm| <= |am| / (|bm| - |db|).
    Tmp qbound, term;
    mpfr_abs(qbound.get(), mid_, MPFR_RNDU);
    mpfr_div(qbound.get(), qbound.get(), denom_low.get(), MPFR_RNDU);
    mpfr_mul(term.get(), qbound.get(), o.rad_, MPFR_RNDU);
    mpfr_add(term.get(), term.get(), rad_, MPFR_RNDU);
    mpfr_div(r.rad_, term.get(), denom_low.get(), MPFR_RNDU);
    r.absorb_rounding(t);
    return r;
}

Ball Ball::neg() const {
    Ball r(precision());
    mpfr_neg(r.mid_, mid_, MPFR_RNDN);  // exact
    mpfr_set(r.rad_, rad_, MPFR_RNDU);
    return r;
}

Ball Ball::log() const {
    Tmp low;
    mpfr_sub(low.get(), mid_, rad_, MPFR_RNDD);
    if (mpfr_sgn(low.get()) <= 0)
        throw std::domain_error("Ball: log of a ball not strictly positive");

    Ball r(precision());
    const int t = mpfr_log(r.mid_, mid_, MPFR_RNDN);
    // |ln a - ln am| <= |da| / (am - |da|)
    mpfr_div(r.rad_, rad_, low.get(), MPFR_RNDU);
    r.absorb_rounding(t);
    return r;
}

Ball Ball::exp() const {
    Ball r(precision());
    const int t = mpfr_exp(r.mid_, mid_, MPFR_RNDN);
    Tmp hi;
    mpfr_add(hi.get(), mid_, rad_, MPFR_RNDU);
    mpfr_exp(hi.get(), hi.get(), MPFR_RNDU);
    mpfr_mul(r.rad_, rad_, hi.get(), MPFR_RNDU);
    r.absorb_rounding(t);
    return r;
}

Ball Ball::sqrt() const {
    Tmp low;
    mpfr_sub(low.get(), mid_, rad_, MPFR_RNDD);
    if (mpfr_sgn(low.get()) <= 0)
        throw std::domain_error("Ball: sqrt of a ball not strictly positive");

    Ball r(precision());
    const int t = mpfr_sqrt(r.mid_, mid_, MPFR_RNDN);
    // |sqrt a - sqrt am| <= |da| / (2 sqrt(am - |da|))
    mpfr_sqrt(low.get(), low.get(), MPFR_RNDD);
    mpfr_div(r.rad_, rad_, low.get(), MPFR_RNDU);
    mpfr_mul_2si(r.rad_, r.rad_, -1, MPFR_RNDU);
    r.absorb_rounding(t);
    return r;
}

Ball Ball::mul_2exp(long e) const {
    Ball r(precision());
    mpfr_mul_2si(r.mid_, mid_, e, MPFR_RNDN);  // exact
    mpfr_mul_2si(r.rad_, rad_, e, MPFR_RNDU);
    return r;
}

Ball Ball::pow_ui(unsigned long e) const {
    Ball acc = from_long(1, precision());
    Ball base = *this;
    while (e > 0) {
        if (e & 1u) acc = acc.mul(base);
        e >>= 1u;
        if (e > 0) base = base.mul(base);
    }
    return acc;
}

bool Ball::contains_zero() const { return sign_certain() == 0; }

bool Ball::contains(const Rational& q) const {
    const Rational diff = (q - midpoint_rational()).abs();
    return diff <= radius_rational();
}

namespace {

Rational mpfr_to_rational(mpfr_srcptr v) {
    if (mpfr_zero_p(v)) return Rational(0);
    mpq_t q;
    mpq_init(q);
    mpfr_get_q(q, v);
    std::vector<char> num(mpz_sizeinbase(mpq_numref(q), 10) + 2);
    std::vector<char> den(mpz_sizeinbase(mpq_denref(q), 10) + 2);
    mpz_get_str(num.data(), 10, mpq_numref(q));
    mpz_get_str(den.data(), 10, mpq_denref(q));
    Rational out = Rational::from_string(std::string(num.data()) + "/" + den.data());
    mpq_clear(q);
    return out;
}

}  // namespace

Rational Ball::midpoint_rational() const { return mpfr_to_rational(mid_); }

Rational Ball::radius_rational() const { return mpfr_to_rational(rad_); }

Rational Ball::lower_rational() const { return midpoint_rational() - radius_rational(); }

Rational Ball::upper_rational() const { return midpoint_rational() + radius_rational(); }

std::string Ball::midpoint_string(int digits) const {
    std::vector<char> buf(digits + 32);
    mpfr_snprintf(buf.data(), buf.size(), "%.*Re", digits - 1, mid_);
    return std::string(buf.data());
}

std::string Ball::radius_string(int digits) const {
    std::vector<char> buf(digits + 32);
    mpfr_snprintf(buf.data(), buf.size(), "%.*RUe", digits - 1, rad_);
    return std::string(buf.data());
}

std::string Ball::enclosure_string(int digits) const {
    Tmp lo(precision()), hi(precision());
    mpfr_sub(lo.get(), mid_, rad_, MPFR_RNDD);
    mpfr_add(hi.get(), mid_, rad_, MPFR_RNDU);
    std::vector<char> buf(2 * digits + 80);
    mpfr_snprintf(buf.data(), buf.size(), "[%.*RDe .. %.*RUe]", digits - 1, lo.get(), digits - 1,
                  hi.get());
    return std::string(buf.data());
}

int Ball::sign_certain() const {
    Tmp bound;
    mpfr_sub(bound.get(), mid_, rad_, MPFR_RNDD);
    if (mpfr_sgn(bound.get()) > 0) return 1;
    mpfr_add(bound.get(), mid_, rad_, MPFR_RNDU);
    if (mpfr_sgn(bound.get()) < 0) return -1;
    return 0;
}

Ordering cmp_strict(const Ball& a, const Ball& b) {
    const mpfr_prec_t prec = std::max(a.precision(), b.precision()) + 64;
    Tmp x(prec), y(prec);
    // sup(a) < inf(b)?
    mpfr_add(x.get(), a.mid_, a.rad_, MPFR_RNDU);
    mpfr_sub(y.get(), b.mid_, b.rad_, MPFR_RNDD);
    if (mpfr_cmp(x.get(), y.get()) < 0) return Ordering::Less;
    // inf(a) > sup(b)?
    mpfr_sub(x.get(), a.mid_, a.rad_, MPFR_RNDD);
    mpfr_add(y.get(), b.mid_, b.rad_, MPFR_RNDU);
    if (mpfr_cmp(x.get(), y.get()) > 0) return Ordering::Greater;
    return Ordering::Unknown;
}

Ball const_log(const Rational& x, mpfr_prec_t prec) {
    if (x.sign() <= 0) throw std::domain_error("const_log: argument must be positive");
    return Ball::from_rational(x, prec).log();
}

}  // namespace landaukit

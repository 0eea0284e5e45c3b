#include "landaukit/landau.hpp"

#include <stdexcept>

namespace landaukit {

LandauSequence& LandauSequence::shared() {
    static LandauSequence seq;
    return seq;
}

Rational LandauSequence::g(long n) const {
    if (n < -1) throw std::domain_error("LandauSequence: n must be >= -1");
    if (n == -1) return Rational(0);
    std::lock_guard<std::mutex> lock(mu_);
    if (values_.empty()) values_.emplace_back(1);
    for (long m = static_cast<long>(values_.size()); m <= n; ++m) {
        last_term_ *= Rational(2 * m - 1, 2 * m).pow(2);
        values_.push_back(values_.back() + last_term_);
    }
    return values_[static_cast<unsigned long>(n)];
}

Rational landau_exact(unsigned long n) { return LandauSequence::shared().g(static_cast<long>(n)); }

Rational diffeq_residual(unsigned long n) {
    const auto& seq = LandauSequence::shared();
    const long ln = static_cast<long>(n);
    const Rational lhs = seq.g(ln + 1) - seq.g(ln);
    const Rational rhs = Rational(2 * ln + 1, 2 * ln + 2).pow(2) * (seq.g(ln) - seq.g(ln - 1));
    return lhs - rhs;
}

Rational symmetric_residual(unsigned long n) {
    const auto& seq = LandauSequence::shared();
    const long ln = static_cast<long>(n);
    const Rational N(4 * ln + 3, 4);
    const Rational quarter_inv = Rational(1) / (Rational(4) * N);
    const Rational a = (Rational(1) + quarter_inv).pow(2);
    const Rational b = (Rational(1) - quarter_inv).pow(2);
    const Rational mid = Rational(2) + Rational(1) / (Rational(8) * N.pow(2));
    return a * seq.g(ln + 1) - mid * seq.g(ln) + b * seq.g(ln - 1);
}

}  // namespace landaukit

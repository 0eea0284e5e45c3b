#include "landaukit/coefficients.hpp"

#include <stdexcept>

namespace landaukit {

namespace {

Rational fact(long n) { return Rational::factorial(static_cast<unsigned long>(n)); }

}  // namespace

CoefficientTable& CoefficientTable::shared() {
    static CoefficientTable table;
    return table;
}

Rational CoefficientTable::d_locked(unsigned long j, long s) const {
    const auto key = std::make_pair(j, s);
    auto it = d_cache_.find(key);
    if (it != d_cache_.end()) return it->second;

    Rational value;
    const long lj = static_cast<long>(j);
    if (j == 0) {
        // (1/s - 1/(2s-1)) + 1/(16(s-1))
        value = Rational(1, s) - Rational(1, 2 * s - 1) + Rational(1, 16 * (s - 1));
    } else if (s == lj + 1) {
        value = Rational(4 * lj * lj);
    } else {
        // (2s+2j-2)(2s-2)! / ((2s-2j)!(2j-1)!) + (2s-3)! / (8(2s-2j-2)!(2j-1)!)
        const Rational odd_fact = fact(2 * lj - 1);
        const Rational first =
            Rational(2 * s + 2 * lj - 2) * fact(2 * s - 2) / (fact(2 * s - 2 * lj) * odd_fact);
        const Rational second = fact(2 * s - 3) / (fact(2 * s - 2 * lj - 2) * odd_fact * Rational(8));
        value = first + second;
    }
    d_cache_.emplace(key, value);
    return value;
}

Rational CoefficientTable::d_coeff(unsigned long j, long s) const {
    const bool ok = (j >= 1 && s >= static_cast<long>(j) + 1) || (j == 0 && s >= 2);
    if (!ok) throw std::domain_error("d_coeff: (j,s) outside the defined range");
    std::lock_guard<std::mutex> lock(mu_);
    return d_locked(j, s);
}

void CoefficientTable::extend_beta_locked(unsigned long k) const {
    if (beta_even_.empty()) beta_even_.emplace_back(0);
    for (unsigned long m = beta_even_.size(); m <= k; ++m) {
        const long s = static_cast<long>(m) + 1;
        Rational acc = -d_locked(0, s);
        for (unsigned long j = 1; j < m; ++j) acc += d_locked(j, s) * beta_even_[j];
        beta_even_.push_back(acc / Rational(-4 * static_cast<long>(m) * static_cast<long>(m)));
    }
}

Rational CoefficientTable::beta(unsigned long index) const {
    if (index == 0) throw std::domain_error("beta: subscript must be positive");
    if (index % 2 == 1) return Rational(0);
    const unsigned long k = index / 2;
    std::lock_guard<std::mutex> lock(mu_);
    extend_beta_locked(k);
    return beta_even_[k];
}

Rational CoefficientTable::rho(unsigned long k) const {
    if (k == 0) return Rational(1);
    const Rational b = beta(2 * k);
    const Rational value = b / fact(2 * static_cast<long>(k) - 1);
    return (k % 2 == 0) ? -value : value;
}

Rational CoefficientTable::c_coeff(unsigned long k, long s) const {
    if (s < 2 || k > static_cast<unsigned long>(s - 1))
        throw std::domain_error("c_coeff: need 0 <= k <= s-1 and s >= 2");
    const Rational num = (k == 0) ? Rational(1) : fact(2 * static_cast<long>(k) - 1);
    const Rational den = Rational(8) * Rational(s - 1).pow(2) * fact(2 * s - 3);
    return num * d_coeff(k, s) / den;
}

Rational CoefficientTable::r_coeff(unsigned long l, long s) const {
    if (l < 1 || s < static_cast<long>(l) + 1)
        throw std::domain_error("r_coeff: need l >= 1 and s >= l+1");
    std::lock_guard<std::mutex> lock(mu_);
    extend_beta_locked(l >= 1 ? l - 1 : 0);
    Rational acc = -d_locked(0, s);
    for (unsigned long j = 1; j <= l - 1; ++j) acc += d_locked(j, s) * beta_even_[j];
    return -acc;
}

Rational CoefficientTable::beta_det(unsigned long index) const {
    if (index == 0) throw std::domain_error("beta_det: subscript must be positive");
    if (index % 2 == 1) return Rational(0);
    const unsigned long l = index / 2;

    // The l x l matrix H(r,c) = d_{r-1, c+1} (1-based r, c) is upper
    // Hessenberg: row r has zeros left of column r-1. Expand the leading
    // principal minors along their last column:
    //   D_m = sum_{j=1}^{m} (-1)^{m-j} H(j,m) (prod_{i=j}^{m-1} H(i+1,i)) D_{j-1}
    std::lock_guard<std::mutex> lock(mu_);
    auto entry = [&](unsigned long r, unsigned long col) {
        return d_locked(r - 1, static_cast<long>(col) + 1);
    };
    std::vector<Rational> minors;  // minors[m] = D_m
    minors.emplace_back(1);
    for (unsigned long m = 1; m <= l; ++m) {
        Rational sum(0);
        Rational subdiag_prod(1);  // prod_{i=j}^{m-1} H(i+1,i), built from j=m down
        for (unsigned long j = m; j >= 1; --j) {
            Rational term = entry(j, m) * subdiag_prod * minors[j - 1];
            if ((m - j) % 2 == 1) term = -term;
            sum += term;
            if (j > 1) subdiag_prod *= entry(j, j - 1);
        }
        minors.push_back(sum);
    }

    const Rational scale =
        Rational(2).pow(2 * static_cast<long>(l)) * fact(static_cast<long>(l)).pow(2);
    Rational result = minors[l] / scale;
    return (l % 2 == 0) ? -result : result;
}

Rational CoefficientTable::granath_a(unsigned long k) const {
    if (k < 1) throw std::domain_error("granath_a: k must be positive");
    const long lk = static_cast<long>(k);
    Rational sum = -Rational(1, lk);
    const Rational k1 = fact(lk - 1);
    for (unsigned long s = 2; s <= k; s += 2) {
        const long ls = static_cast<long>(s);
        sum += k1 * Rational(4).pow(ls) * beta(s) / (fact(ls - 1) * fact(lk - ls));
    }
    return Rational(4).pow(lk) * sum;
}

}  // namespace landaukit

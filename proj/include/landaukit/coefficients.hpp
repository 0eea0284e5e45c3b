#pragma once

#include <map>
#include <mutex>
#include <utility>
#include <vector>

#include "landaukit/rational.hpp"

namespace landaukit {

// Exact coefficient families for the expansion of the Landau constants:
// the d and c tables, the beta values (by recurrence and by determinant),
// their normalized companions rho, the remainder coefficients r, and the
// base-16n expansion coefficients a.
//
// beta is indexed by its subscript: beta(2) is the first nonzero value and
// every odd subscript yields exactly zero. Lookups are memoized; the table
// is safe to share across threads.
class CoefficientTable {
public:
    CoefficientTable() = default;
    CoefficientTable(const CoefficientTable&) = delete;
    CoefficientTable& operator=(const CoefficientTable&) = delete;

    // Process-wide instance shared by verification sweeps.
    static CoefficientTable& shared();

    // d_{j,s}: 4j^2 when s = j+1, the two-factorial form when s >= j+2,
    // and the harmonic form when j = 0, s >= 2. Always positive.
    Rational d_coeff(unsigned long j, long s) const;

    // beta_index for even subscripts via the recurrence; 0 for odd ones.
    Rational beta(unsigned long index) const;

    // rho_0 = 1, rho_k = (-1)^{k+1} beta_{2k} / (2k-1)!. Always positive.
    Rational rho(unsigned long k) const;

    // c_{k,s} = (2k-1)! d_{k,s} / (8 (s-1)^2 (2s-3)!) for 0 <= k <= s-1,
    // reading (2k-1)! as 1 when k = 0; c_{s-1,s} = 1/2 falls out of the
    // same formula.
    Rational c_coeff(unsigned long k, long s) const;

    // r_{l,s} = -(d_{l-1,s} beta_{2l-2} + ... + d_{1,s} beta_2 - d_{0,s}).
    Rational r_coeff(unsigned long l, long s) const;

    // beta_index again, through the upper-Hessenberg determinant of the
    // d table. Must agree with beta() exactly; kept separate as an
    // independent oracle.
    Rational beta_det(unsigned long index) const;

    // a_k = 4^k [ -1/k + sum_{s=1}^{k} (k-1)! 4^s beta_s / ((s-1)!(k-s)!) ].
    Rational granath_a(unsigned long k) const;

private:
    // Extends beta_even_ so that beta_{2k} is available. Caller holds mu_.
    void extend_beta_locked(unsigned long k) const;
    Rational d_locked(unsigned long j, long s) const;

    mutable std::mutex mu_;
    mutable std::vector<Rational> beta_even_;  // slot k holds beta_{2k}; slot 0 unused
    mutable std::map<std::pair<unsigned long, long>, Rational> d_cache_;
};

}  // namespace landaukit

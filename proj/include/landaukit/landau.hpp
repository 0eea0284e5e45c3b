#pragma once

#include <mutex>
#include <vector>

#include "landaukit/rational.hpp"

namespace landaukit {

// The Landau constants as exact rationals: G_n = sum_{m=0}^{n} t_m with
// t_0 = 1 and t_m = t_{m-1} ((2m-1)/(2m))^2. Prefixes are cached so sweeps
// over n reuse work; extension is synchronized.
class LandauSequence {
public:
    LandauSequence() = default;
    LandauSequence(const LandauSequence&) = delete;
    LandauSequence& operator=(const LandauSequence&) = delete;

    static LandauSequence& shared();

    // G_n for n >= -1, with G_{-1} = 0.
    Rational g(long n) const;

private:
    mutable std::mutex mu_;
    mutable std::vector<Rational> values_;  // values_[n] = G_n
    mutable Rational last_term_{1};
};

// G_n for n >= 0 via the shared sequence.
Rational landau_exact(unsigned long n);

// (G_{n+1} - G_n) - ((2n+1)/(2n+2))^2 (G_n - G_{n-1}); exactly zero.
Rational diffeq_residual(unsigned long n);

// (1+1/(4N))^2 G_{n+1} - (2+1/(8N^2)) G_n + (1-1/(4N))^2 G_{n-1} with
// N = n+3/4; exactly zero.
Rational symmetric_residual(unsigned long n);

}  // namespace landaukit

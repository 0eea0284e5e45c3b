#pragma once

#include <mpfr.h>

#include "landaukit/ball.hpp"

namespace landaukit {

// Cached enclosures of the classical constants, keyed by precision.
// Safe to call from multiple threads.
namespace constants {

Ball pi(mpfr_prec_t prec);
Ball euler_gamma(mpfr_prec_t prec);
Ball log2(mpfr_prec_t prec);
Ball log_pi(mpfr_prec_t prec);

}  // namespace constants

}  // namespace landaukit

#pragma once

#include <cstdlib>
#include <stdexcept>

#include <mpfr.h>

namespace landaukit {

// Escalation schedule for interval evaluations that come back Unknown.
struct PrecisionPolicy {
    mpfr_prec_t start_bits = 128;
    mpfr_prec_t max_bits = 8192;
    unsigned growth = 2;

    void validate() const {
        if (start_bits < 2) throw std::domain_error("PrecisionPolicy: start_bits must be >= 2");
        if (start_bits > max_bits)
            throw std::domain_error("PrecisionPolicy: start_bits must not exceed max_bits");
        if (growth < 2) throw std::domain_error("PrecisionPolicy: growth must be >= 2");
    }

    mpfr_prec_t next(mpfr_prec_t current) const {
        const mpfr_prec_t stepped = current * static_cast<mpfr_prec_t>(growth);
        return stepped < max_bits ? stepped : max_bits;
    }

    // Honors the LANDAUKIT_PREC environment variable as a starting override.
    static PrecisionPolicy from_env() {
        PrecisionPolicy p;
        if (const char* env = std::getenv("LANDAUKIT_PREC")) {
            char* end = nullptr;
            const long v = std::strtol(env, &end, 10);
            if (end && *end == '\0' && v >= 2) {
                p.start_bits = static_cast<mpfr_prec_t>(v);
                if (p.max_bits < p.start_bits) p.max_bits = p.start_bits;
            }
        }
        return p;
    }
};

}  // namespace landaukit

#pragma once

#include <string>

#include "landaukit/verify.hpp"

namespace landaukit {

// Human-oriented summary: ranges, precision policy, counts, any notes, and
// one line per non-passing point.
std::string render_text(const VerificationReport& rep);

// One row per point. Header is the point labels followed by
// status,precision_bits,witness.
std::string render_csv(const VerificationReport& rep);

// Full report as a JSON document (serialized with two-space indent).
std::string render_json(const VerificationReport& rep);

}  // namespace landaukit

#pragma once

#include <mpfr.h>

#include <string>
#include <utility>
#include <vector>

#include "landaukit/ball.hpp"
#include "landaukit/parallel.hpp"
#include "landaukit/precision.hpp"
#include "landaukit/rational.hpp"

namespace landaukit {

enum class Status { Pass, Fail, Unknown };

// "pass", "fail", "unknown".
const char* status_name(Status s);

// Outcome at one grid point. `precision_used` is the working precision that
// settled the point (0 for purely rational checks) and `witness` is a short
// human-readable certificate, free of commas so it can sit in a CSV cell.
struct CheckResult {
    std::vector<long> point;
    Status status = Status::Unknown;
    mpfr_prec_t precision_used = 0;
    std::string witness;
};

struct VerificationReport {
    std::string check_name;
    std::vector<std::string> point_labels;  // one label per point coordinate
    std::vector<std::pair<std::string, long>> ranges;
    bool conjecture = false;  // informational only; never gates an exit code
    PrecisionPolicy policy;
    std::vector<std::string> notes;  // extra lines for the text rendering
    std::vector<CheckResult> results;

    unsigned long count(Status s) const;
    bool clean() const;  // true iff every result passed
};

// Enclosure of eps_l(N) = pi G_n - (ln N + gamma + 4 ln 2
//                                   + sum_{s=1}^{l-1} beta_{2s} / N^{2s})
// at the given working precision, where N = n + 3/4. Requires l >= 1.
Ball eval_epsilon(unsigned long n, unsigned long l, mpfr_prec_t prec);

// (-1)^{l+1} eps_l(N) > 0 for 1 <= l <= l_max, 0 <= n <= n_max.
VerificationReport check_thm1(unsigned long n_max, unsigned long l_max,
                              const PrecisionPolicy& policy, Exec mode = Exec::Parallel);

// 0 < (-1)^{l+1} eps_l(N) < (-1)^{l+1} beta_{2l} / N^{2l}, i.e. the remainder
// is strictly between zero and the first neglected term.
VerificationReport check_thm2(unsigned long n_max, unsigned long l_max,
                              const PrecisionPolicy& policy, Exec mode = Exec::Parallel);

// Truncations bound pi G_n from below at odd order (eps_{2m+1} > 0,
// 1 <= m <= m_max) and from above at even order (eps_{2k} < 0,
// 1 <= k <= k_max). Points are (n, side, order) with side 0 = lower,
// side 1 = upper.
VerificationReport check_thm3(unsigned long n_max, unsigned long m_max, unsigned long k_max,
                              const PrecisionPolicy& policy, Exec mode = Exec::Parallel);

// 0 < rho_k / rho_{k+1} < 44 pi^2 / 9 for 0 <= k <= k_max.
VerificationReport check_lemma22(unsigned long k_max, const PrecisionPolicy& policy);

// (-1)^{l+1} r_{l,s} > 0 for 1 <= l <= l_max, l+1 <= s <= l+s_span.
// Purely rational; results carry precision_used = 0.
VerificationReport check_lemma23(unsigned long l_max, unsigned long s_span,
                                 Exec mode = Exec::Parallel);

// Decides, side by side, the claimed window
//   (4 ln 2k + C_lo) / (2 pi)^{2k} < (pi / sqrt 2) rho_k
//                                  < (4 ln 2k + C_hi) / (2 pi)^{2k}
// where C = 16 ln 2 - 4 gamma - 4 ln(2 pi) and C_lo/hi = C -/+ 10259/10000.
// The claim is stated for k >= 10; smaller k_min raises std::domain_error.
// Certified outcome: both sides hold for k = 10, 11, 12, the upper side keeps
// holding, but the lower side is strictly violated from k = 13 onward, so
// those points report Fail with enclosure witnesses.
VerificationReport check_rho_sandwich(unsigned long k_min, unsigned long k_max,
                                      const PrecisionPolicy& policy);

// ln(16n) + gamma - 1/(4n) + 5/(192 n^2) < pi G_{n-1}
//   < ln(16n) + gamma - 1/(4n) + 5/(192 n^2) + 3/(128 n^3) for 1 <= n <= n_max.
VerificationReport check_classical(unsigned long n_max, const PrecisionPolicy& policy,
                                   Exec mode = Exec::Parallel);

// Conjectured sign pattern of pi G_{n-1} - A_m(n) with
// A_m(n) = ln(16n) + gamma + sum_{k=1}^{m} a_k / (16n)^k:
// (-1)^{m(m+1)/2} (pi G_{n-1} - A_m(n)) < 0 for 0 <= m <= m_max,
// 1 <= n <= n_max. The report is marked conjecture.
VerificationReport check_granath(unsigned long m_max, unsigned long n_max,
                                 const PrecisionPolicy& policy, Exec mode = Exec::Parallel);

struct RatioRow {
    long n;
    Rational big_n;  // N = n + 3/4
    Ball ratio;      // eps_l(N) / (beta_{2l} / N^{2l})
};

// Remainder-to-first-neglected-term ratios for fixed l, n = 0..n_max,
// refined until each enclosure lies strictly inside (0, 1) or the
// precision cap is hit.
std::vector<RatioRow> remainder_ratio_data(unsigned long l, unsigned long n_max,
                                           const PrecisionPolicy& policy);

// Report form of the same check: every ratio must certifiably lie in (0, 1).
VerificationReport check_remainder_ratio(unsigned long l, unsigned long n_max,
                                         const PrecisionPolicy& policy,
                                         Exec mode = Exec::Parallel);

struct GrowthRow {
    unsigned long l;
    Ball value;
};

// Diagnostic table of pi (2 pi)^{2l} |beta_{2l}| / ((2l-1)! 4 sqrt(2) ln 2l)
// for l_min <= l <= l_max; the values drift toward 1 as l grows. Requires
// l_min >= 2. Not a pass/fail check.
std::vector<GrowthRow> beta_growth_table(unsigned long l_min, unsigned long l_max,
                                         mpfr_prec_t prec);

}  // namespace landaukit

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "landaukit/coefficients.hpp"
#include "landaukit/landau.hpp"
#include "landaukit/precision.hpp"
#include "landaukit/series.hpp"
#include "landaukit/verify.hpp"

using landaukit::Ball;
using landaukit::CheckResult;
using landaukit::CoefficientTable;
using landaukit::PrecisionPolicy;
using landaukit::Rational;
using landaukit::Status;
using landaukit::TruncSeries;
using landaukit::VerificationReport;

namespace {

PrecisionPolicy default_policy() { return PrecisionPolicy{}; }

std::string point_string(const CheckResult& r) {
    std::string out = "(";
    for (size_t i = 0; i < r.point.size(); ++i) {
        if (i) out += ", ";
        out += std::to_string(r.point[i]);
    }
    out += ")";
    return out;
}

bool expect_clean(const VerificationReport& rep, std::string& detail) {
    if (rep.clean()) return true;
    detail = rep.check_name + ": " + std::to_string(rep.count(Status::Fail)) + " fail / " +
             std::to_string(rep.count(Status::Unknown)) + " unknown of " +
             std::to_string(rep.results.size()) + " points";
    for (const CheckResult& r : rep.results) {
        if (r.status != Status::Pass) {
            detail += "; first at " + point_string(r) + ": " + r.witness;
            break;
        }
    }
    return false;
}

bool coefficient_table(std::string& detail) {
    static const char* const kExpected[7] = {
        "11/192",
        "-1541/122880",
        "63433/8257536",
        "-9199901/1006632960",
        "317959723/17716740096",
        "-14849190321163/281406257233920",
        "717209117969/3298534883328",
    };
    CoefficientTable& t = CoefficientTable::shared();
    for (unsigned long s = 1; s <= 7; ++s) {
        const Rational got = t.beta(2 * s);
        const Rational want = Rational::from_string(kExpected[s - 1]);
        if (got != want) {
            detail = "beta_" + std::to_string(2 * s) + " = " + got.to_string() + ", expected " +
                     kExpected[s - 1];
            return false;
        }
    }
    return true;
}

bool triple_oracle(std::string& detail) {
    CoefficientTable& t = CoefficientTable::shared();
    const TruncSeries u = landaukit::u_series(50);
    for (unsigned long k = 1; k <= 25; ++k) {
        const Rational by_recurrence = t.beta(2 * k);
        const Rational by_determinant = t.beta_det(2 * k);
        Rational by_series = u[2 * k] * Rational::factorial(2 * k - 1);
        if (k % 2 == 0) by_series = -by_series;
        if (by_recurrence != by_determinant || by_recurrence != by_series) {
            detail = "first mismatch at k = " + std::to_string(k);
            return false;
        }
    }
    return true;
}

bool ratio_table_and_bound(std::string& detail) {
    // The exact k = 0 ratio is 192/11 = 17.4545..., which rounds to 17.45;
    // the pinned entry 17.46 is off by one in the last place, so k = 0 is
    // held to a 0.015 gap instead of exact two-decimal agreement.
    static const char* const kPrinted[10] = {"17.46", "27.41", "32.65", "35.30", "36.67",
                                             "37.41", "37.86", "38.15", "38.36", "38.51"};
    CoefficientTable& t = CoefficientTable::shared();
    for (unsigned long k = 0; k <= 9; ++k) {
        const Rational ratio = t.rho(k) / t.rho(k + 1);
        if (k == 0) {
            const Rational gap = (ratio - Rational::from_string("1746/100")).abs();
            if (!(gap < Rational(15, 1000))) {
                detail = "k = 0 ratio " + ratio.to_decimal(4) + " not within 0.015 of 17.46";
                return false;
            }
            continue;
        }
        const std::string got = ratio.to_decimal(2, true);
        if (got != kPrinted[k]) {
            detail = "k = " + std::to_string(k) + " ratio " + got + ", expected " + kPrinted[k];
            return false;
        }
    }
    return expect_clean(landaukit::check_lemma22(50, default_policy()), detail);
}

bool thm1_sweep(std::string& detail) {
    const VerificationReport rep = landaukit::check_thm1(1000, 20, default_policy());
    if (rep.results.size() != 1001 * 20) {
        detail = "expected 20020 points, got " + std::to_string(rep.results.size());
        return false;
    }
    return expect_clean(rep, detail);
}

bool thm2_sweep_and_implication(std::string& detail) {
    const VerificationReport th2 = landaukit::check_thm2(1000, 20, default_policy());
    if (!expect_clean(th2, detail)) return false;

    // A pass of thm2 at (n, l) certifies both sign statements of thm1: the
    // lower edge is thm1 at (n, l) and the upper edge telescopes to thm1 at
    // (n, l + 1). Both lookups must therefore pass.
    const unsigned long l_max = 21;
    const VerificationReport th1 = landaukit::check_thm1(1000, l_max, default_policy());
    auto th1_passes = [&](long n, long l) {
        const size_t slot =
            static_cast<size_t>(n) * l_max + static_cast<size_t>(l) - 1;
        if (slot >= th1.results.size()) return false;
        const CheckResult& r = th1.results[slot];
        return r.point == std::vector<long>{n, l} && r.status == Status::Pass;
    };
    for (const CheckResult& r : th2.results) {
        if (r.status != Status::Pass) continue;
        const long n = r.point.at(0);
        const long l = r.point.at(1);
        if (!th1_passes(n, l) || !th1_passes(n, l + 1)) {
            detail = "cross-implication broken at " + point_string(r);
            return false;
        }
    }
    return true;
}

bool thm3_sweep(std::string& detail) {
    return expect_clean(landaukit::check_thm3(1000, 10, 10, default_policy()), detail);
}

bool lemma23_signs(std::string& detail) {
    const VerificationReport rep = landaukit::check_lemma23(20, 100);
    if (!expect_clean(rep, detail)) return false;
    for (const CheckResult& r : rep.results) {
        if (r.precision_used != 0) {
            detail = "point " + point_string(r) + " was not decided by exact arithmetic";
            return false;
        }
    }
    return true;
}

bool rho_sandwich_verdicts(std::string& detail) {
    // The claimed window holds only for k = 10, 11, 12. From k = 13 onward
    // the lower side is strictly violated at every point while the upper
    // side keeps holding, so the certified verdicts are three passes
    // followed by lower-side failures, with no point left undecided.
    const VerificationReport rep = landaukit::check_rho_sandwich(10, 50, default_policy());
    if (rep.results.size() != 41) {
        detail = "expected 41 points, got " + std::to_string(rep.results.size());
        return false;
    }
    if (rep.count(Status::Unknown) != 0) {
        detail = std::to_string(rep.count(Status::Unknown)) + " undecided points";
        return false;
    }
    for (const CheckResult& r : rep.results) {
        const long k = r.point.at(0);
        if (k <= 12) {
            if (r.status != Status::Pass) {
                detail = "k = " + std::to_string(k) + " should pass: " + r.witness;
                return false;
            }
            continue;
        }
        if (r.status != Status::Fail) {
            detail = "k = " + std::to_string(k) + " should fail: " + r.witness;
            return false;
        }
        if (r.witness.find("lower bound violated") == std::string::npos ||
            r.witness.find("upper bound violated") != std::string::npos) {
            detail = "k = " + std::to_string(k) + " failed on the wrong side: " + r.witness;
            return false;
        }
    }
    for (const std::string& note : rep.notes) {
        if (note.find("first at k = 13") != std::string::npos) return true;
    }
    detail = "summary note does not locate the first violation at k = 13";
    return false;
}

bool classical_bounds(std::string& detail) {
    return expect_clean(landaukit::check_classical(1000, default_policy()), detail);
}

bool remainder_ratios(std::string& detail) {
    if (!expect_clean(landaukit::check_remainder_ratio(2, 30, default_policy()), detail))
        return false;
    return expect_clean(landaukit::check_remainder_ratio(16, 50, default_policy()), detail);
}

bool exact_identities(std::string& detail) {
    for (unsigned long n = 0; n <= 1000; ++n) {
        if (landaukit::diffeq_residual(n).sign() != 0) {
            detail = "diffeq_residual(" + std::to_string(n) + ") != 0";
            return false;
        }
        if (landaukit::symmetric_residual(n).sign() != 0) {
            detail = "symmetric_residual(" + std::to_string(n) + ") != 0";
            return false;
        }
    }

    CoefficientTable& t = CoefficientTable::shared();
    for (unsigned long l = 1; l <= 25; ++l) {
        Rational acc(0);
        for (unsigned long k = 0; k <= l; ++k) {
            const Rational term = t.c_coeff(l - k, static_cast<long>(l) + 1) * t.rho(l - k);
            acc += (k % 2 == 0) ? term : -term;
        }
        if (acc.sign() != 0) {
            detail = "alternating sum nonzero at l = " + std::to_string(l);
            return false;
        }
    }

    const Rational q(1, 4), h(1, 2), one(1);
    const TruncSeries f = landaukit::hyp_series(q, q, one, 40);
    for (unsigned long m = 0; m < 40; ++m) {
        const Rational lhs = Rational(static_cast<long>(m) + 1).pow(2) * f[m + 1];
        const Rational rhs = (Rational(static_cast<long>(m)) + q).pow(2) * f[m];
        if (lhs != rhs) {
            detail = "hypergeometric recurrence broken at m = " + std::to_string(m);
            return false;
        }
    }

    const unsigned long M = 40;
    const TruncSeries lhs =
        landaukit::hyp_series(q, q, one, M / 2).compose_zero_const(
            landaukit::sin_half_sq_series(M));
    const TruncSeries rhs =
        landaukit::hyp_series(h, h, one, M / 2).compose_zero_const(
            landaukit::sin_half_sq_series(M).scale_argument(h));
    if (!(lhs == rhs)) {
        detail = "quadratic transformation mismatch at order 40";
        return false;
    }
    return true;
}

bool granath_report(std::string& detail) {
    // Report-only: a conjecture violation is surfaced as a finding, never a
    // suite failure. Undecided points do count as failures of the report.
    const VerificationReport rep = landaukit::check_granath(12, 500, default_policy());
    if (!rep.conjecture) {
        detail = "report is not marked as a conjecture";
        return false;
    }
    if (rep.results.size() != 13 * 500) {
        detail = "expected 6500 points, got " + std::to_string(rep.results.size());
        return false;
    }
    if (rep.count(Status::Unknown) != 0) {
        detail = std::to_string(rep.count(Status::Unknown)) + " undecided points";
        return false;
    }
    const unsigned long fails = rep.count(Status::Fail);
    if (fails != 0) {
        std::printf("        finding: conjectured sign pattern violated at %lu points\n", fails);
        for (const CheckResult& r : rep.results) {
            if (r.status == Status::Fail) {
                std::printf("        finding: first violation at %s: %s\n",
                            point_string(r).c_str(), r.witness.c_str());
                break;
            }
        }
    }
    return true;
}

struct Criterion {
    const char* name;
    double time_limit;  // seconds; 0 means no limit
    bool (*body)(std::string&);
};

}  // namespace

int main() {
    const Criterion criteria[12] = {
        {"coefficient table beta_2 .. beta_14", 1.0, coefficient_table},
        {"triple oracle agreement for k <= 25", 60.0, triple_oracle},
        {"rho ratio table and 44 pi^2 / 9 bound for k <= 50", 0.0, ratio_table_and_bound},
        {"thm1 sweep (n <= 1000, l <= 20)", 0.0, thm1_sweep},
        {"thm2 sweep and cross-implication with thm1", 0.0, thm2_sweep_and_implication},
        {"thm3 sweep (n <= 1000, m <= 10, k <= 10)", 0.0, thm3_sweep},
        {"lemma23 exact signs (l <= 20, span 100)", 30.0, lemma23_signs},
        {"rho-sandwich certified verdicts (k = 10 .. 50)", 0.0, rho_sandwich_verdicts},
        {"classical bounds (n <= 1000)", 0.0, classical_bounds},
        {"remainder ratio enclosures in (0, 1)", 0.0, remainder_ratios},
        {"exact identities (residuals, alternating sum, series)", 0.0, exact_identities},
        {"granath conjecture report (m <= 12, n <= 500)", 0.0, granath_report},
    };

    int failures = 0;
    for (int i = 0; i < 12; ++i) {
        const Criterion& c = criteria[i];
        std::string detail;
        bool ok = false;
        const auto start = std::chrono::steady_clock::now();
        try {
            ok = c.body(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        const double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (ok && c.time_limit > 0.0 && elapsed > c.time_limit) {
            ok = false;
            detail = "time limit of " + std::to_string(c.time_limit) + " s exceeded";
        }
        std::printf("[%2d/12] %s %s (%.2fs)\n", i + 1, ok ? "PASS" : "FAIL", c.name, elapsed);
        if (!ok) {
            ++failures;
            std::printf("        %s\n", detail.c_str());
        }
    }
    if (failures) std::printf("%d of 12 criteria failed\n", failures);
    return failures ? 1 : 0;
}

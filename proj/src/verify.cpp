#include "landaukit/verify.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <optional>
#include <stdexcept>
#include <tuple>

#include "landaukit/coefficients.hpp"
#include "landaukit/constants.hpp"
#include "landaukit/landau.hpp"

namespace landaukit {

namespace {

enum class Tri { True, False, Undecided };

struct Outcome {
    Status status = Status::Unknown;
    mpfr_prec_t precision_used = 0;
    std::string witness;
};

// Re-evaluates `eval` at growing precision until it commits to an answer or
// the policy cap is reached. `eval` receives the working precision and a
// witness slot to fill.
template <typename Eval>
Outcome resolve(const PrecisionPolicy& policy, Eval&& eval) {
    mpfr_prec_t p = policy.start_bits;
    for (;;) {
        std::string witness;
        const Tri verdict = eval(p, witness);
        if (verdict == Tri::True) {
            return {Status::Pass, p, std::move(witness)};
        }
        if (verdict == Tri::False) {
            return {Status::Fail, p, std::move(witness)};
        }
        if (p >= policy.max_bits) {
            return {Status::Unknown, p, std::move(witness)};
        }
        p = policy.next(p);
    }
}

Rational big_n_of(unsigned long n) { return Rational(4 * static_cast<long>(n) + 3, 4); }

// pi G_n - ln N - gamma - 4 ln 2, the transcendental part of eps_l(N).
Ball epsilon_base(unsigned long n, mpfr_prec_t p) {
    const Rational g = landau_exact(n);
    Ball b = constants::pi(p) * Ball::from_rational(g, p);
    b = b - Ball::from_rational(big_n_of(n), p).log();
    b = b - constants::euler_gamma(p);
    b = b - constants::log2(p).mul_2exp(2);
    return b;
}

// Incremental partial sums of beta_{2s}/N^{2s} along a row of fixed N.
class TailWalker {
public:
    explicit TailWalker(const Rational& big_n)
        : inv_n2_((big_n * big_n).reciprocal()), pow_(1), tail_(0) {}

    // Sum over s = 1..l-1; l must not decrease across calls.
    const Rational& advance_to(unsigned long l) {
        while (current_ < l) {
            pow_ *= inv_n2_;
            tail_ += CoefficientTable::shared().beta(2 * current_) * pow_;
            ++current_;
        }
        return tail_;
    }

    // beta_{2l}/N^{2l}; valid immediately after advance_to(l).
    Rational term_at(unsigned long l) const {
        return CoefficientTable::shared().beta(2 * l) * pow_ * inv_n2_;
    }

private:
    Rational inv_n2_;
    Rational pow_;
    Rational tail_;
    unsigned long current_ = 1;
};

// Lazily built per-row cache of epsilon_base at each precision visited.
class BaseCache {
public:
    explicit BaseCache(unsigned long n) : n_(n) {}

    const Ball& at(mpfr_prec_t p) {
        auto it = cache_.find(p);
        if (it == cache_.end()) {
            it = cache_.emplace(p, epsilon_base(n_, p)).first;
        }
        return it->second;
    }

private:
    unsigned long n_;
    std::map<mpfr_prec_t, Ball> cache_;
};

Outcome resolve_epsilon_sign(BaseCache& base, const Rational& tail, int want,
                             const PrecisionPolicy& policy) {
    return resolve(policy, [&](mpfr_prec_t p, std::string& w) {
        const Ball eps = base.at(p) - Ball::from_rational(tail, p);
        w = "eps in " + eps.enclosure_string();
        const int s = eps.sign_certain();
        if (s == want) {
            return Tri::True;
        }
        if (s == -want) {
            return Tri::False;
        }
        return Tri::Undecided;
    });
}

Outcome resolve_ratio(BaseCache& base, const Rational& tail, const Rational& term,
                      const PrecisionPolicy& policy, std::optional<Ball>* out_ratio) {
    return resolve(policy, [&](mpfr_prec_t p, std::string& w) {
        const Ball eps = base.at(p) - Ball::from_rational(tail, p);
        const Ball ratio = eps / Ball::from_rational(term, p);
        if (out_ratio != nullptr) {
            *out_ratio = ratio;
        }
        w = "ratio in " + ratio.enclosure_string();
        const int sgn = ratio.sign_certain();
        if (sgn < 0) {
            return Tri::False;
        }
        const Ordering vs_one = cmp_strict(ratio, Ball::from_long(1, p));
        if (sgn > 0 && vs_one == Ordering::Less) {
            return Tri::True;
        }
        if (vs_one == Ordering::Greater) {
            return Tri::False;
        }
        return Tri::Undecided;
    });
}

void store(CheckResult& slot, std::vector<long> point, Outcome out) {
    slot.point = std::move(point);
    slot.status = out.status;
    slot.precision_used = out.precision_used;
    slot.witness = std::move(out.witness);
}

void prefill_shared(unsigned long n_max, unsigned long beta_subscript, mpfr_prec_t start_bits) {
    LandauSequence::shared().g(static_cast<long>(n_max));
    if (beta_subscript >= 2) {
        CoefficientTable::shared().beta(beta_subscript);
    }
    constants::pi(start_bits);
    constants::euler_gamma(start_bits);
    constants::log2(start_bits);
}

}  // namespace

const char* status_name(Status s) {
    switch (s) {
        case Status::Pass:
            return "pass";
        case Status::Fail:
            return "fail";
        default:
            return "unknown";
    }
}

unsigned long VerificationReport::count(Status s) const {
    unsigned long c = 0;
    for (const CheckResult& r : results) {
        if (r.status == s) {
            ++c;
        }
    }
    return c;
}

bool VerificationReport::clean() const {
    return count(Status::Pass) == results.size();
}

Ball eval_epsilon(unsigned long n, unsigned long l, mpfr_prec_t prec) {
    if (l == 0) {
        throw std::domain_error("eval_epsilon: l must be at least 1");
    }
    TailWalker walker(big_n_of(n));
    const Rational tail = walker.advance_to(l);
    return epsilon_base(n, prec) - Ball::from_rational(tail, prec);
}

VerificationReport check_thm1(unsigned long n_max, unsigned long l_max,
                              const PrecisionPolicy& policy, Exec mode) {
    policy.validate();
    if (l_max == 0) {
        throw std::domain_error("check_thm1: l_max must be at least 1");
    }
    VerificationReport rep;
    rep.check_name = "thm1";
    rep.point_labels = {"n", "l"};
    rep.ranges = {{"n_max", static_cast<long>(n_max)}, {"l_max", static_cast<long>(l_max)}};
    rep.policy = policy;
    rep.results.resize((n_max + 1) * l_max);

    prefill_shared(n_max, 2 * l_max, policy.start_bits);
    for_each_index(mode, static_cast<long>(n_max + 1), [&](long row) {
        const unsigned long n = static_cast<unsigned long>(row);
        BaseCache base(n);
        TailWalker walker(big_n_of(n));
        for (unsigned long l = 1; l <= l_max; ++l) {
            const Rational& tail = walker.advance_to(l);
            const int want = (l % 2 == 1) ? +1 : -1;
            Outcome out = resolve_epsilon_sign(base, tail, want, policy);
            store(rep.results[static_cast<unsigned long>(row) * l_max + (l - 1)],
                  {static_cast<long>(n), static_cast<long>(l)}, std::move(out));
        }
    });
    return rep;
}

VerificationReport check_thm2(unsigned long n_max, unsigned long l_max,
                              const PrecisionPolicy& policy, Exec mode) {
    policy.validate();
    if (l_max == 0) {
        throw std::domain_error("check_thm2: l_max must be at least 1");
    }
    VerificationReport rep;
    rep.check_name = "thm2";
    rep.point_labels = {"n", "l"};
    rep.ranges = {{"n_max", static_cast<long>(n_max)}, {"l_max", static_cast<long>(l_max)}};
    rep.policy = policy;
    rep.results.resize((n_max + 1) * l_max);

    prefill_shared(n_max, 2 * l_max + 2, policy.start_bits);
    for_each_index(mode, static_cast<long>(n_max + 1), [&](long row) {
        const unsigned long n = static_cast<unsigned long>(row);
        BaseCache base(n);
        TailWalker walker(big_n_of(n));
        for (unsigned long l = 1; l <= l_max; ++l) {
            const Rational& tail = walker.advance_to(l);
            const Rational term = walker.term_at(l);
            Outcome out = resolve_ratio(base, tail, term, policy, nullptr);
            store(rep.results[static_cast<unsigned long>(row) * l_max + (l - 1)],
                  {static_cast<long>(n), static_cast<long>(l)}, std::move(out));
        }
    });
    return rep;
}

VerificationReport check_thm3(unsigned long n_max, unsigned long m_max, unsigned long k_max,
                              const PrecisionPolicy& policy, Exec mode) {
    policy.validate();
    if (m_max == 0 && k_max == 0) {
        throw std::domain_error("check_thm3: need m_max or k_max positive");
    }
    VerificationReport rep;
    rep.check_name = "thm3";
    rep.point_labels = {"n", "side", "order"};
    rep.ranges = {{"n_max", static_cast<long>(n_max)},
                  {"m_max", static_cast<long>(m_max)},
                  {"k_max", static_cast<long>(k_max)}};
    rep.policy = policy;
    rep.notes.push_back("side 0: truncation at odd order bounds pi G_n from below");
    rep.notes.push_back("side 1: truncation at even order bounds pi G_n from above");
    const unsigned long per_row = m_max + k_max;
    rep.results.resize((n_max + 1) * per_row);

    struct Job {
        unsigned long l;
        int want;
        unsigned long slot;
        long side;
        long order;
    };
    std::vector<Job> jobs;
    jobs.reserve(per_row);
    for (unsigned long m = 1; m <= m_max; ++m) {
        jobs.push_back({2 * m + 1, +1, m - 1, 0, static_cast<long>(m)});
    }
    for (unsigned long k = 1; k <= k_max; ++k) {
        jobs.push_back({2 * k, -1, m_max + k - 1, 1, static_cast<long>(k)});
    }
    std::sort(jobs.begin(), jobs.end(), [](const Job& a, const Job& b) { return a.l < b.l; });
    const unsigned long l_top = jobs.back().l;

    prefill_shared(n_max, 2 * l_top, policy.start_bits);
    for_each_index(mode, static_cast<long>(n_max + 1), [&](long row) {
        const unsigned long n = static_cast<unsigned long>(row);
        BaseCache base(n);
        TailWalker walker(big_n_of(n));
        for (const Job& job : jobs) {
            const Rational& tail = walker.advance_to(job.l);
            Outcome out = resolve_epsilon_sign(base, tail, job.want, policy);
            store(rep.results[static_cast<unsigned long>(row) * per_row + job.slot],
                  {static_cast<long>(n), job.side, job.order}, std::move(out));
        }
    });
    return rep;
}

VerificationReport check_lemma22(unsigned long k_max, const PrecisionPolicy& policy) {
    policy.validate();
    VerificationReport rep;
    rep.check_name = "lemma22";
    rep.point_labels = {"k"};
    rep.ranges = {{"k_max", static_cast<long>(k_max)}};
    rep.policy = policy;
    rep.results.resize(k_max + 1);

    const CoefficientTable& table = CoefficientTable::shared();
    for (unsigned long k = 0; k <= k_max; ++k) {
        const Rational ratio = table.rho(k) / table.rho(k + 1);
        Outcome out;
        if (ratio.sign() <= 0) {
            out.status = Status::Fail;
            out.witness = "ratio = " + ratio.to_decimal(6) + "; not positive";
        } else {
            out = resolve(policy, [&](mpfr_prec_t p, std::string& w) {
                const Ball pi = constants::pi(p);
                const Ball bound = pi * pi * Ball::from_rational(Rational(44, 9), p);
                w = "ratio = " + ratio.to_decimal(6) + "; bound in " + bound.enclosure_string();
                const Ordering o = cmp_strict(Ball::from_rational(ratio, p), bound);
                if (o == Ordering::Less) {
                    return Tri::True;
                }
                if (o == Ordering::Greater) {
                    return Tri::False;
                }
                return Tri::Undecided;
            });
        }
        store(rep.results[k], {static_cast<long>(k)}, std::move(out));

        char line[96];
        std::snprintf(line, sizeof(line), "k = %2lu   rho_k / rho_{k+1} = %s", k,
                      ratio.to_decimal(2, true).c_str());
        rep.notes.emplace_back(line);
    }
    const Ball bound128 = constants::pi(128) * constants::pi(128) *
                          Ball::from_rational(Rational(44, 9), 128);
    rep.notes.push_back("bound 44 pi^2 / 9 = " + bound128.midpoint_rational().to_decimal(4));
    return rep;
}

VerificationReport check_lemma23(unsigned long l_max, unsigned long s_span, Exec mode) {
    if (l_max == 0 || s_span == 0) {
        throw std::domain_error("check_lemma23: l_max and s_span must be at least 1");
    }
    VerificationReport rep;
    rep.check_name = "lemma23";
    rep.point_labels = {"l", "s"};
    rep.ranges = {{"l_max", static_cast<long>(l_max)}, {"s_span", static_cast<long>(s_span)}};
    rep.results.resize(l_max * s_span);

    const CoefficientTable& table = CoefficientTable::shared();
    // Warm the d cache serially so parallel rows only read it.
    for (unsigned long l = 1; l <= l_max; ++l) {
        table.r_coeff(l, static_cast<long>(l + s_span));
    }
    for_each_index(mode, static_cast<long>(l_max), [&](long row) {
        const unsigned long l = static_cast<unsigned long>(row) + 1;
        const int want = (l % 2 == 1) ? +1 : -1;
        for (unsigned long i = 0; i < s_span; ++i) {
            const long s = static_cast<long>(l + 1 + i);
            const Rational r = table.r_coeff(l, s);
            CheckResult& slot = rep.results[static_cast<unsigned long>(row) * s_span + i];
            slot.point = {static_cast<long>(l), s};
            slot.status = (r.sign() == want) ? Status::Pass : Status::Fail;
            slot.precision_used = 0;
            slot.witness = "r ~ " + Ball::from_rational(r, 64).midpoint_string(6);
        }
    });
    return rep;
}

VerificationReport check_rho_sandwich(unsigned long k_min, unsigned long k_max,
                                      const PrecisionPolicy& policy) {
    policy.validate();
    if (k_min < 10) {
        throw std::domain_error("check_rho_sandwich: bounds require k_min >= 10");
    }
    if (k_max < k_min) {
        throw std::domain_error("check_rho_sandwich: k_max must be at least k_min");
    }
    VerificationReport rep;
    rep.check_name = "rho-sandwich";
    rep.point_labels = {"k"};
    rep.ranges = {{"k_min", static_cast<long>(k_min)}, {"k_max", static_cast<long>(k_max)}};
    rep.policy = policy;
    rep.results.resize(k_max - k_min + 1);

    const CoefficientTable& table = CoefficientTable::shared();
    const Rational delta(10259, 10000);
    for (unsigned long k = k_min; k <= k_max; ++k) {
        const Rational rho_k = table.rho(k);
        Outcome out = resolve(policy, [&](mpfr_prec_t p, std::string& w) {
            const Ball pi = constants::pi(p);
            const Ball c = constants::log2(p) * Ball::from_long(12, p) -
                           constants::euler_gamma(p).mul_2exp(2) -
                           constants::log_pi(p).mul_2exp(2);
            const Ball log2k = const_log(Rational(2 * static_cast<long>(k)), p);
            const Ball denom = pi.mul_2exp(1).pow_ui(2 * k);
            const Ball lo = (log2k.mul_2exp(2) + c - Ball::from_rational(delta, p)) / denom;
            const Ball hi = (log2k.mul_2exp(2) + c + Ball::from_rational(delta, p)) / denom;
            const Ball mid = pi * Ball::from_rational(rho_k, p) / Ball::from_long(2, p).sqrt();
            const std::string detail = "lower " + lo.enclosure_string(6) + " value " +
                                       mid.enclosure_string(6) + " upper " +
                                       hi.enclosure_string(6);
            const Ordering left = cmp_strict(lo, mid);
            const Ordering right = cmp_strict(mid, hi);
            if (left == Ordering::Less && right == Ordering::Less) {
                w = detail;
                return Tri::True;
            }
            if (left == Ordering::Greater) {
                w = "lower bound violated; " + detail;
                return Tri::False;
            }
            if (right == Ordering::Greater) {
                w = "upper bound violated; " + detail;
                return Tri::False;
            }
            w = detail;
            return Tri::Undecided;
        });
        store(rep.results[k - k_min], {static_cast<long>(k)}, std::move(out));
    }

    const unsigned long fails = rep.count(Status::Fail);
    if (fails > 0) {
        long first_fail = -1;
        for (const CheckResult& r : rep.results) {
            if (r.status == Status::Fail) {
                first_fail = r.point[0];
                break;
            }
        }
        rep.notes.push_back("window refuted at " + std::to_string(fails) + " of " +
                            std::to_string(rep.results.size()) + " points (first at k = " +
                            std::to_string(first_fail) +
                            "); every refutation is a certified strict violation");
    }
    return rep;
}

VerificationReport check_classical(unsigned long n_max, const PrecisionPolicy& policy,
                                   Exec mode) {
    policy.validate();
    if (n_max == 0) {
        throw std::domain_error("check_classical: n_max must be at least 1");
    }
    VerificationReport rep;
    rep.check_name = "classical";
    rep.point_labels = {"n"};
    rep.ranges = {{"n_max", static_cast<long>(n_max)}};
    rep.policy = policy;
    rep.results.resize(n_max);

    prefill_shared(n_max - 1, 0, policy.start_bits);
    for_each_index(mode, static_cast<long>(n_max), [&](long row) {
        const long n = row + 1;
        const Rational g = landau_exact(static_cast<unsigned long>(n - 1));
        const Rational low_shift =
            Rational(-1, 4 * n) + Rational(5, 192 * n * n);
        const Rational width(3, 128 * n * n * n);
        Outcome out = resolve(policy, [&](mpfr_prec_t p, std::string& w) {
            const Ball value = constants::pi(p) * Ball::from_rational(g, p);
            const Ball lo = const_log(Rational(16 * n), p) + constants::euler_gamma(p) +
                            Ball::from_rational(low_shift, p);
            const Ball hi = lo + Ball::from_rational(width, p);
            w = "lower " + lo.enclosure_string(6) + " value " + value.enclosure_string(6) +
                " upper " + hi.enclosure_string(6);
            const Ordering left = cmp_strict(lo, value);
            const Ordering right = cmp_strict(value, hi);
            if (left == Ordering::Less && right == Ordering::Less) {
                return Tri::True;
            }
            if (left == Ordering::Greater || right == Ordering::Greater) {
                return Tri::False;
            }
            return Tri::Undecided;
        });
        store(rep.results[row], {n}, std::move(out));
    });
    return rep;
}

VerificationReport check_granath(unsigned long m_max, unsigned long n_max,
                                 const PrecisionPolicy& policy, Exec mode) {
    policy.validate();
    if (n_max == 0) {
        throw std::domain_error("check_granath: n_max must be at least 1");
    }
    VerificationReport rep;
    rep.check_name = "granath";
    rep.point_labels = {"m", "n"};
    rep.ranges = {{"m_max", static_cast<long>(m_max)}, {"n_max", static_cast<long>(n_max)}};
    rep.policy = policy;
    rep.conjecture = true;
    rep.notes.push_back("conjectured inequality; results are informational only");
    const unsigned long per_row = m_max + 1;
    rep.results.resize(n_max * per_row);

    std::vector<Rational> a(m_max + 1);
    for (unsigned long k = 1; k <= m_max; ++k) {
        a[k] = CoefficientTable::shared().granath_a(k);
    }
    prefill_shared(n_max - 1, 0, policy.start_bits);
    for_each_index(mode, static_cast<long>(n_max), [&](long row) {
        const long n = row + 1;
        const Rational g = landau_exact(static_cast<unsigned long>(n - 1));
        std::map<mpfr_prec_t, Ball> core_cache;
        const auto core_at = [&](mpfr_prec_t p) -> const Ball& {
            auto it = core_cache.find(p);
            if (it == core_cache.end()) {
                Ball core = constants::pi(p) * Ball::from_rational(g, p) -
                            const_log(Rational(16 * n), p) - constants::euler_gamma(p);
                it = core_cache.emplace(p, std::move(core)).first;
            }
            return it->second;
        };
        const Rational inv(1, 16 * n);
        Rational pw(1);
        Rational tail(0);
        for (unsigned long m = 0; m <= m_max; ++m) {
            if (m >= 1) {
                pw *= inv;
                tail += a[m] * pw;
            }
            const int sigma = ((m * (m + 1) / 2) % 2 == 0) ? +1 : -1;
            Outcome out = resolve(policy, [&](mpfr_prec_t p, std::string& w) {
                const Ball diff = core_at(p) - Ball::from_rational(tail, p);
                w = "diff in " + diff.enclosure_string();
                const int s = diff.sign_certain();
                if (s == -sigma) {
                    return Tri::True;
                }
                if (s == sigma) {
                    return Tri::False;
                }
                return Tri::Undecided;
            });
            store(rep.results[static_cast<unsigned long>(row) * per_row + m],
                  {static_cast<long>(m), n}, std::move(out));
        }
    });
    return rep;
}

std::vector<RatioRow> remainder_ratio_data(unsigned long l, unsigned long n_max,
                                           const PrecisionPolicy& policy) {
    policy.validate();
    if (l == 0) {
        throw std::domain_error("remainder_ratio_data: l must be at least 1");
    }
    std::vector<RatioRow> rows;
    rows.reserve(n_max + 1);
    prefill_shared(n_max, 2 * l + 2, policy.start_bits);
    for (unsigned long n = 0; n <= n_max; ++n) {
        BaseCache base(n);
        TailWalker walker(big_n_of(n));
        const Rational& tail = walker.advance_to(l);
        const Rational term = walker.term_at(l);
        std::optional<Ball> ratio;
        resolve_ratio(base, tail, term, policy, &ratio);
        rows.push_back(RatioRow{static_cast<long>(n), big_n_of(n), std::move(*ratio)});
    }
    return rows;
}

VerificationReport check_remainder_ratio(unsigned long l, unsigned long n_max,
                                         const PrecisionPolicy& policy, Exec mode) {
    policy.validate();
    if (l == 0) {
        throw std::domain_error("check_remainder_ratio: l must be at least 1");
    }
    VerificationReport rep;
    rep.check_name = "remainder-ratio";
    rep.point_labels = {"n"};
    rep.ranges = {{"l", static_cast<long>(l)}, {"n_max", static_cast<long>(n_max)}};
    rep.policy = policy;
    rep.results.resize(n_max + 1);

    prefill_shared(n_max, 2 * l + 2, policy.start_bits);
    for_each_index(mode, static_cast<long>(n_max + 1), [&](long row) {
        const unsigned long n = static_cast<unsigned long>(row);
        BaseCache base(n);
        TailWalker walker(big_n_of(n));
        const Rational& tail = walker.advance_to(l);
        const Rational term = walker.term_at(l);
        Outcome out = resolve_ratio(base, tail, term, policy, nullptr);
        store(rep.results[row], {static_cast<long>(n)}, std::move(out));
    });
    return rep;
}

std::vector<GrowthRow> beta_growth_table(unsigned long l_min, unsigned long l_max,
                                         mpfr_prec_t prec) {
    if (l_min < 2 || l_max < l_min) {
        throw std::domain_error("beta_growth_table: need 2 <= l_min <= l_max");
    }
    std::vector<GrowthRow> rows;
    rows.reserve(l_max - l_min + 1);
    const CoefficientTable& table = CoefficientTable::shared();
    const Ball pi = constants::pi(prec);
    const Ball sqrt2 = Ball::from_long(2, prec).sqrt();
    for (unsigned long l = l_min; l <= l_max; ++l) {
        const Rational coeff =
            table.beta(2 * l).abs() / Rational::factorial(2 * l - 1) / Rational(4);
        Ball v = pi * pi.mul_2exp(1).pow_ui(2 * l) * Ball::from_rational(coeff, prec);
        v = v / (sqrt2 * const_log(Rational(2 * static_cast<long>(l)), prec));
        rows.push_back(GrowthRow{l, std::move(v)});
    }
    return rows;
}

}  // namespace landaukit

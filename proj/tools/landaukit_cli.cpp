#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "landaukit/coefficients.hpp"
#include "landaukit/landau.hpp"
#include "landaukit/parallel.hpp"
#include "landaukit/precision.hpp"
#include "landaukit/rational.hpp"
#include "landaukit/render.hpp"
#include "landaukit/series.hpp"
#include "landaukit/verify.hpp"

namespace {

using landaukit::CoefficientTable;
using landaukit::Exec;
using landaukit::PrecisionPolicy;
using landaukit::Rational;
using landaukit::VerificationReport;

int write_output(const std::string& payload, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << payload;
        return std::cout.good() ? 0 : 1;
    }
    std::ofstream file(out_path, std::ios::binary);
    if (!file) {
        std::cerr << "landaukit: cannot open " << out_path << " for writing\n";
        return 1;
    }
    file << payload;
    file.flush();
    if (!file.good()) {
        std::cerr << "landaukit: failed while writing " << out_path << "\n";
        return 1;
    }
    return 0;
}

PrecisionPolicy make_policy(long prec, long prec_max) {
    PrecisionPolicy policy = PrecisionPolicy::from_env();
    if (prec > 0) {
        policy.start_bits = prec;
        if (policy.max_bits < policy.start_bits) {
            policy.max_bits = policy.start_bits;
        }
    }
    if (prec_max > 0) {
        policy.max_bits = prec_max;
    }
    policy.validate();
    return policy;
}

int run_coeffs(unsigned long count, const std::string& format, unsigned decimal,
               const std::string& out_path) {
    if (count == 0) {
        throw std::domain_error("coeffs: --count must be at least 1");
    }
    const CoefficientTable& table = CoefficientTable::shared();
    std::ostringstream os;
    if (format == "csv") {
        os << "index,numerator,denominator";
        if (decimal > 0) {
            os << ",decimal";
        }
        os << '\n';
        for (unsigned long s = 1; s <= count; ++s) {
            const Rational beta = table.beta(2 * s);
            os << 2 * s << ',' << beta.numerator_string() << ',' << beta.denominator_string();
            if (decimal > 0) {
                os << ',' << beta.to_decimal(decimal);
            }
            os << '\n';
        }
    } else if (format == "json") {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (unsigned long s = 1; s <= count; ++s) {
            const Rational beta = table.beta(2 * s);
            nlohmann::ordered_json row;
            row["index"] = 2 * s;
            row["numerator"] = beta.numerator_string();
            row["denominator"] = beta.denominator_string();
            if (decimal > 0) {
                row["decimal"] = beta.to_decimal(decimal);
            }
            arr.push_back(std::move(row));
        }
        os << arr.dump(2) << '\n';
    } else {
        for (unsigned long s = 1; s <= count; ++s) {
            const Rational beta = table.beta(2 * s);
            os << beta.to_string();
            if (decimal > 0) {
                os << '\t' << beta.to_decimal(decimal);
            }
            os << '\n';
        }
    }
    return write_output(os.str(), out_path);
}

int run_landau(unsigned long n, const std::string& format, unsigned decimal,
               const std::string& out_path) {
    const Rational g = landaukit::landau_exact(n);
    std::ostringstream os;
    if (format == "csv") {
        os << "n,numerator,denominator";
        if (decimal > 0) {
            os << ",decimal";
        }
        os << '\n' << n << ',' << g.numerator_string() << ',' << g.denominator_string();
        if (decimal > 0) {
            os << ',' << g.to_decimal(decimal);
        }
        os << '\n';
    } else if (format == "json") {
        nlohmann::ordered_json row;
        row["n"] = n;
        row["numerator"] = g.numerator_string();
        row["denominator"] = g.denominator_string();
        if (decimal > 0) {
            row["decimal"] = g.to_decimal(decimal);
        }
        os << row.dump(2) << '\n';
    } else if (decimal > 0) {
        os << g.to_decimal(decimal) << '\n';
    } else {
        os << g.to_string() << '\n';
    }
    return write_output(os.str(), out_path);
}

struct VerifyRanges {
    unsigned long n_max = 1000;
    unsigned long l_max = 20;
    unsigned long k_max = 50;
    unsigned long m_max = 12;
    unsigned long k_min = 10;
    unsigned long s_span = 100;
};

int run_verify(const std::string& check, const VerifyRanges& r, const PrecisionPolicy& policy,
               Exec mode, const std::string& format, const std::string& out_path) {
    VerificationReport rep;
    if (check == "thm1") {
        rep = landaukit::check_thm1(r.n_max, r.l_max, policy, mode);
    } else if (check == "thm2") {
        rep = landaukit::check_thm2(r.n_max, r.l_max, policy, mode);
    } else if (check == "thm3") {
        rep = landaukit::check_thm3(r.n_max, r.m_max, r.k_max, policy, mode);
    } else if (check == "lemma22") {
        rep = landaukit::check_lemma22(r.k_max, policy);
    } else if (check == "lemma23") {
        rep = landaukit::check_lemma23(r.l_max, r.s_span, mode);
    } else if (check == "rho-sandwich") {
        rep = landaukit::check_rho_sandwich(r.k_min, r.k_max, policy);
    } else if (check == "classical") {
        rep = landaukit::check_classical(r.n_max, policy, mode);
    } else if (check == "granath") {
        rep = landaukit::check_granath(r.m_max, r.n_max, policy, mode);
    } else {
        std::cerr << "landaukit: unknown check '" << check
                  << "' (expected thm1, thm2, thm3, lemma22, lemma23, rho-sandwich, classical,"
                     " granath)\n";
        return 2;
    }

    std::string payload;
    if (format == "csv") {
        payload = landaukit::render_csv(rep);
    } else if (format == "json") {
        payload = landaukit::render_json(rep);
    } else {
        payload = landaukit::render_text(rep);
    }
    const int io_rc = write_output(payload, out_path);
    if (io_rc != 0) {
        return io_rc;
    }
    if (rep.conjecture) {
        return 0;
    }
    return rep.clean() ? 0 : 1;
}

int run_plotdata(unsigned long l, unsigned long n_max, const PrecisionPolicy& policy,
                 const std::string& out_path) {
    const std::vector<landaukit::RatioRow> rows =
        landaukit::remainder_ratio_data(l, n_max, policy);
    std::ostringstream os;
    os << "n,N,ratio_mid,ratio_rad\n";
    for (const landaukit::RatioRow& row : rows) {
        os << row.n << ',' << row.big_n.to_decimal(2, true) << ','
           << row.ratio.midpoint_string(18) << ',' << row.ratio.radius_string(4) << '\n';
    }
    return write_output(os.str(), out_path);
}

int run_oracles(unsigned long k_max, const std::string& out_path) {
    if (k_max == 0) {
        throw std::domain_error("oracles: --k-max must be at least 1");
    }
    const CoefficientTable& table = CoefficientTable::shared();
    const landaukit::TruncSeries u = landaukit::u_series(2 * k_max);
    std::ostringstream os;
    os << "beta oracle agreement, k = 1.." << k_max << '\n';
    long first_mismatch = -1;
    for (unsigned long k = 1; k <= k_max; ++k) {
        const Rational by_recurrence = table.beta(2 * k);
        const Rational by_determinant = table.beta_det(2 * k);
        const Rational rho_series = u[2 * k];
        Rational by_series = rho_series * Rational::factorial(2 * k - 1);
        if (k % 2 == 0) {
            by_series = -by_series;
        }
        const bool agree = by_recurrence == by_determinant && by_determinant == by_series;
        if (agree) {
            os << "k = " << k << "  recurrence == determinant == series  beta_" << 2 * k << " = "
               << by_recurrence.to_string() << '\n';
        } else {
            os << "k = " << k << "  MISMATCH  recurrence = " << by_recurrence.to_string()
               << "  determinant = " << by_determinant.to_string()
               << "  series = " << by_series.to_string() << '\n';
            if (first_mismatch < 0) {
                first_mismatch = static_cast<long>(k);
            }
        }
    }
    if (first_mismatch < 0) {
        os << "all oracles agree\n";
    } else {
        os << "first mismatch at k = " << first_mismatch << '\n';
    }
    const int io_rc = write_output(os.str(), out_path);
    if (io_rc != 0) {
        return io_rc;
    }
    return first_mismatch < 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact and rigorously enclosed computations around the Landau constants"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string out_path;
    long prec = 0;
    long prec_max = 0;
    app.add_option("--out", out_path, "Write output to this file instead of standard output")
        ->capture_default_str();
    app.add_option("--prec", prec, "Starting working precision in bits");
    app.add_option("--prec-max", prec_max, "Precision cap for escalation in bits");

    CLI::App* coeffs = app.add_subcommand("coeffs", "Print the expansion coefficients beta_{2s}");
    unsigned long coeff_count = 7;
    std::string coeff_format = "rational-text";
    unsigned coeff_decimal = 0;
    coeffs->add_option("--count", coeff_count, "How many coefficients to print")
        ->capture_default_str();
    coeffs->add_option("--format", coeff_format, "Output format")
        ->check(CLI::IsMember({"rational-text", "csv", "json"}))
        ->capture_default_str();
    coeffs->add_option("--decimal", coeff_decimal, "Also render this many decimal digits");

    CLI::App* landau = app.add_subcommand("landau", "Print the Landau constant G_n exactly");
    unsigned long landau_n = 0;
    std::string landau_format = "rational-text";
    unsigned landau_decimal = 0;
    landau->add_option("n", landau_n, "Index n of G_n")->required();
    landau->add_option("--format", landau_format, "Output format")
        ->check(CLI::IsMember({"rational-text", "csv", "json"}))
        ->capture_default_str();
    landau->add_option("--decimal", landau_decimal,
                       "Print the value rounded to this many decimal digits");

    CLI::App* verify = app.add_subcommand("verify", "Run a rigorous verification sweep");
    std::string verify_check;
    VerifyRanges ranges;
    std::string verify_format = "text";
    bool verify_serial = false;
    verify->add_option("check", verify_check,
                       "One of thm1, thm2, thm3, lemma22, lemma23, rho-sandwich, classical,"
                       " granath")
        ->required();
    verify->add_option("--n-max", ranges.n_max, "Largest n in the sweep")->capture_default_str();
    verify->add_option("--l-max", ranges.l_max, "Largest truncation order l")
        ->capture_default_str();
    verify->add_option("--k-max", ranges.k_max, "Largest k in the sweep")->capture_default_str();
    verify->add_option("--m-max", ranges.m_max, "Largest m in the sweep")->capture_default_str();
    verify->add_option("--k-min", ranges.k_min, "Smallest k (rho-sandwich only)")
        ->capture_default_str();
    verify->add_option("--s-span", ranges.s_span, "How many s values past l+1 (lemma23 only)")
        ->capture_default_str();
    verify->add_option("--format", verify_format, "Report format")
        ->check(CLI::IsMember({"text", "csv", "json"}))
        ->capture_default_str();
    verify->add_flag("--serial", verify_serial, "Use the serial reference sweep");

    CLI::App* plotdata = app.add_subcommand(
        "plotdata", "Emit remainder-to-first-neglected-term ratio data as CSV");
    unsigned long plot_l = 0;
    unsigned long plot_n_max = 50;
    plotdata->add_option("--l", plot_l, "Truncation order l")->required();
    plotdata->add_option("--n-max", plot_n_max, "Largest n")->capture_default_str();

    CLI::App* oracles = app.add_subcommand(
        "oracles", "Cross-check beta_{2k} across recurrence, determinant, and series oracles");
    unsigned long oracle_k_max = 25;
    oracles->add_option("--k-max", oracle_k_max, "Check k = 1..k_max")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*coeffs) {
            return run_coeffs(coeff_count, coeff_format, coeff_decimal, out_path);
        }
        if (*landau) {
            return run_landau(landau_n, landau_format, landau_decimal, out_path);
        }
        if (*verify) {
            const PrecisionPolicy policy = make_policy(prec, prec_max);
            const Exec mode = verify_serial ? Exec::Serial : Exec::Parallel;
            return run_verify(verify_check, ranges, policy, mode, verify_format, out_path);
        }
        if (*plotdata) {
            const PrecisionPolicy policy = make_policy(prec, prec_max);
            return run_plotdata(plot_l, plot_n_max, policy, out_path);
        }
        if (*oracles) {
            return run_oracles(oracle_k_max, out_path);
        }
    } catch (const std::domain_error& e) {
        std::cerr << "landaukit: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "landaukit: " << e.what() << '\n';
        return 1;
    }
    return 2;
}

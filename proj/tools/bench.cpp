#include <chrono>
#include <cstdio>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "landaukit/verify.hpp"

using landaukit::Exec;
using landaukit::PrecisionPolicy;
using landaukit::VerificationReport;

namespace {

double run_timed(Exec mode, VerificationReport& out) {
    const PrecisionPolicy policy;
    const auto start = std::chrono::steady_clock::now();
    out = landaukit::check_thm1(200, 8, policy, mode);
    const auto stop = std::chrono::steady_clock::now();
    return std::chrono::duration<double>(stop - start).count();
}

bool reports_equal(const VerificationReport& a, const VerificationReport& b) {
    if (a.results.size() != b.results.size()) {
        return false;
    }
    for (size_t i = 0; i < a.results.size(); ++i) {
        if (a.results[i].point != b.results[i].point ||
            a.results[i].status != b.results[i].status ||
            a.results[i].precision_used != b.results[i].precision_used ||
            a.results[i].witness != b.results[i].witness) {
            return false;
        }
    }
    return true;
}

}  // namespace

int main() {
#ifdef _OPENMP
    std::printf("openmp threads: %d\n", omp_get_max_threads());
#else
    std::printf("openmp threads: unavailable (serial build)\n");
#endif
    std::printf("workload: thm1 sweep, n <= 200, l <= 8 (1608 points)\n");

    VerificationReport warm;
    run_timed(Exec::Serial, warm);  // warm shared caches so timings compare kernels only

    VerificationReport serial_rep;
    const double serial_s = run_timed(Exec::Serial, serial_rep);
    VerificationReport parallel_rep;
    const double parallel_s = run_timed(Exec::Parallel, parallel_rep);

    std::printf("serial reference: %8.3f s\n", serial_s);
    std::printf("openmp kernel:    %8.3f s\n", parallel_s);
    if (parallel_s > 0) {
        std::printf("speedup: %.2fx (bounded by available cores)\n", serial_s / parallel_s);
    }

    const bool same = reports_equal(serial_rep, parallel_rep);
    std::printf("reports identical: %s\n", same ? "yes" : "NO");
    std::printf("verdicts clean: %s\n",
                serial_rep.clean() && parallel_rep.clean() ? "yes" : "NO");
    return same && serial_rep.clean() ? 0 : 1;
}

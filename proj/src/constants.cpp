#include "landaukit/constants.hpp"

#include <map>
#include <mutex>

namespace landaukit::constants {

namespace {

using Factory = Ball (*)(mpfr_prec_t);

Ball cached(int which, mpfr_prec_t prec, Factory make) {
    static std::mutex mu;
    static std::map<std::pair<int, mpfr_prec_t>, Ball> cache;
    std::lock_guard<std::mutex> lock(mu);
    const auto key = std::make_pair(which, prec);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, make(prec)).first;
    return it->second;
}

Ball make_log_pi(mpfr_prec_t prec) { return Ball::pi(prec).log(); }

}  // namespace

Ball pi(mpfr_prec_t prec) { return cached(0, prec, &Ball::pi); }

Ball euler_gamma(mpfr_prec_t prec) { return cached(1, prec, &Ball::euler_gamma); }

Ball log2(mpfr_prec_t prec) { return cached(2, prec, &Ball::log2); }

Ball log_pi(mpfr_prec_t prec) { return cached(3, prec, &make_log_pi); }

}  // namespace landaukit::constants

#include "core/schedule.hpp"

#include <cmath>
#include <stdexcept>

namespace qgm::schedule {

double tail_bound(long n, double r) {
    if (n < 1) throw std::domain_error("tail_bound: n must be >= 1");
    if (!(r > 0.0 && r < 1.0)) throw std::domain_error("tail_bound: r must be in (0,1)");
    const double log_val = std::log(4.0) + std::log(double(n)) +
                           double(n) * std::log(r) - 2.0 * std::log1p(-r);
    return std::exp(log_val);
}

double log_block_weight_sum(long n) {
    if (n < 1) throw std::domain_error("log_block_weight_sum: n must be >= 1");
    if (n == 1) return std::log(8.0);
    // sum_{d=1}^{N} 4 d 2^d = 8 + (N-1) 2^{N+3}
    const double big = std::log(double(n - 1)) + double(n + 3) * std::log(2.0);
    return big + std::log1p(8.0 * std::exp(-big));
}

double block_cb_bound(long d, double eps) {
    if (d < 0) throw std::domain_error("block_cb_bound: d must be >= 0");
    if (!(eps >= 0.0)) throw std::domain_error("block_cb_bound: eps must be >= 0");
    return double(2 * d + 1) * std::pow(1.0 + eps, double(d));
}

FreeProdSchedule plan(double delta) {
    if (!(delta > 0.0 && delta < 1.0))
        throw std::domain_error("plan: delta must be in (0, 1)");

    const long cap = 10000000;
    long n = 0;
    double r = 0.0, tail = 0.0;
    for (long cand = 2; cand <= cap; ++cand) {
        const double rc = 1.0 - 1.0 / std::sqrt(double(cand));
        const double t = tail_bound(cand, rc);
        if (t < delta) {
            n = cand;
            r = rc;
            tail = t;
            break;
        }
    }
    if (n == 0) throw InfeasibleError("plan: no cutoff below scan limit");

    const double log_sum = log_block_weight_sum(n);
    const double log_eps = std::log(delta / 2.0) - log_sum;
    const double eps = std::exp(log_eps);
    if (!(eps > 0.0))
        throw InfeasibleError("plan: per-factor tolerance underflows double precision");
    const double block_error = std::exp(log_eps + log_sum);

    FreeProdSchedule out{delta, n, r, eps, tail, block_error};
    if (!(out.tail_bound < delta) || !(out.block_error < delta) ||
        !(out.r > 0.0 && out.r < 1.0))
        throw std::logic_error("plan: schedule failed its own invariants");
    return out;
}

} // namespace qgm::schedule

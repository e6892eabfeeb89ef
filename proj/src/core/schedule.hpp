#ifndef QGMULT_CORE_SCHEDULE_HPP
#define QGMULT_CORE_SCHEDULE_HPP

#include <stdexcept>

namespace qgm::schedule {

class InfeasibleError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Truncation schedule for smoothing a free product: degree cutoff N,
/// smoothing radius r = 1 - 1/sqrt(N), and the per-factor approximation
/// tolerance eps, together with the two certified error legs.
struct FreeProdSchedule {
    double delta;        ///< caller-facing total budget
    long n;              ///< degree cutoff
    double r;            ///< 1 - 1/sqrt(N)
    double eps;          ///< per-factor cb tolerance
    double tail_bound;   ///< 4 N r^N / (1-r)^2, < delta
    double block_error;  ///< sum_{d=1}^{N} 4 d 2^d eps, = delta/2 up to rounding
};

/// 4 n r^n / (1-r)^2, evaluated in log space.
double tail_bound(long n, double r);

/// log of sum_{d=1}^{N} 4 d 2^d  (closed form 8 + (N-1) 2^{N+3}).
double log_block_weight_sum(long n);

/// Cb bound (2d+1)(1+eps)^d for one degree-d block of a free product of
/// eps-close finite-rank approximants.
double block_cb_bound(long d, double eps);

/// Minimal N (scanned from 2 upward) with tail_bound(N, 1-1/sqrt(N))
/// below delta; eps is then delta / (2 sum_{d<=N} 4 d 2^d). Requires
/// 0 < delta < 1. Throws InfeasibleError if the scan passes 10^7 or eps
/// underflows double precision.
FreeProdSchedule plan(double delta);

} // namespace qgm::schedule

#endif

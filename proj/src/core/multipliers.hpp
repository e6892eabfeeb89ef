#ifndef QGMULT_CORE_MULTIPLIERS_HPP
#define QGMULT_CORE_MULTIPLIERS_HPP

#include <complex>
#include <vector>

#include "core/qparam.hpp"

namespace qgm::mult {

using cplx = std::complex<double>;

/// Central multiplier coefficient
///   b_d(z) = mu_d(|q|^z + |q|^{-z}) / mu_d(|q| + |q|^{-1}),
/// evaluated through the algebraically reduced ratio
///   b_d(z) = |q|^{d(1-z)} (1-|q|^{2(d+1)z})(1-|q|^2)
///            / ((1-|q|^{2z})(1-|q|^{2(d+1)})),
/// whose factors stay bounded for every d (the raw Chebyshev values
/// overflow near d ~ 700). b_d is even in z; accepts the closed strip
/// |Re z| <= 1.
cplx b_coeff(const QParam& q, cplx z, long d);
double b_coeff(const QParam& q, double t, long d);

/// Same coefficient by the raw recurrence ratio; the independent route
/// for cross-checking the reduced form. Overflows for large d.
cplx b_coeff_recurrence(const QParam& q, cplx z, long d);

/// Asymptotic ratio |b_{d+1}(z)/b_d(z)| -> |q|^{1-Re z}.
/// Defined for 0 < Re z < 1.
double decay_rate(const QParam& q, cplx z);

/// Upper bound mu_d(gauge)^2 on the cb-norm of the degree-d isotypic
/// projection, and its logarithm for use past the overflow range.
double proj_cb_bound(const QParam& q, long d);
double log_proj_cb_bound(const QParam& q, long d);

/// One term of the truncation budget: |b_d(t)|^power * mu_d(gauge)^2.
struct CbBudget {
    long d;
    double proj_bound;
    double term;
};
CbBudget cb_budget(const QParam& q, double t, long power, long d);

struct SummabilityReport {
    double q;
    double t;
    long power;
    long d_max;
    std::vector<double> terms;
    std::vector<double> partial_sums;
    double limiting_ratio;  ///< |q|^{power (1-t) - 2}
    bool converges;         ///< limiting_ratio < 1, i.e. t < 1 - 2/power
};

/// Ratio-test summability report for sum_d |b_d(t)|^power mu_d(gauge)^2.
/// Inputs within a few ulps of the critical line t = 1 - 2/power are
/// snapped onto it (ratio exactly 1, non-convergent).
SummabilityReport summability_report(const QParam& q, double t, long power, long d_max);

struct Truncation {
    long d_cut;
    double cb_error_bound;
};

/// Smallest cutoff whose certified geometric tail bound
///   sum_{d > d_cut} |b_d(t)|^power mu_d(gauge)^2
///     <= C rho^{d_cut+1} / (1 - rho),  rho the limiting ratio,
/// is below eps. Rejects non-convergent (q, t, power).
Truncation truncate_multiplier(const QParam& q, double t, long power, double eps);

/// Location of the critical t with limiting_ratio = 1, by bisection;
/// analytically 1 - 2/power.
double summability_boundary(const QParam& q, long power, double tol);

} // namespace qgm::mult

#endif

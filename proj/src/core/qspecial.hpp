#ifndef QGMULT_CORE_QSPECIAL_HPP
#define QGMULT_CORE_QSPECIAL_HPP

#include <complex>
#include <vector>

namespace qgm::qspecial {

using cplx = std::complex<double>;

/// Dilated Chebyshev polynomial of the second kind:
/// mu_0 = 1, mu_1 = x, x mu_k = mu_{k-1} + mu_{k+1}.
///
/// At exact small integer arguments the recurrence is run in checked
/// 64-bit integer arithmetic (so e.g. mu_d(2) = d+1 holds exactly);
/// on overflow it falls back to floating point.
cplx chebyshev_mu(long d, cplx x);
double chebyshev_mu(long d, double x);

/// Closed form mu_d(y + 1/y) = (y^{d+1} - y^{-(d+1)}) / (y - 1/y).
/// Requires y != +-1; used as the independent route against the
/// recurrence.
cplx chebyshev_mu_closed(long d, cplx y);

/// log mu_d(x) for real x >= 2, stable for large d where mu_d itself
/// overflows.
double log_chebyshev_mu(long d, double x);

/// q-Pochhammer symbol (x; q)_k = (1 - x)(1 - xq) ... (1 - xq^{k-1}),
/// with (x; q)_0 = 1.
cplx q_pochhammer(cplx x, double q, long k);
double q_pochhammer(double x, double q, long k);

/// Prefix table (q; q)_k for k = 0..n.
std::vector<double> q_pochhammer_prefix(double q, long n);

/// Gaussian binomial coefficient (q; q)_n / ((q; q)_k (q; q)_{n-k}).
/// Evaluated as a product of k factors; exactly symmetric under
/// k <-> n-k. Rejects k < 0 or k > n.
double q_binomial(long n, long k, double q);

/// Continuous q-Hermite polynomial in dilated form, by the three-term
/// recurrence x H_n = H_{n+1} + (1 - q^n) H_{n-1}.
cplx q_hermite(long n, cplx x, double q);

/// Same polynomial by the explicit sum  sum_k [n k]_q y^{n-2k}  with
/// y + 1/y = x and the branch |y| >= 1.
cplx q_hermite_sum(long n, cplx x, double q);

} // namespace qgm::qspecial

#endif

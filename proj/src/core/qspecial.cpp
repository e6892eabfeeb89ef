#include "core/qspecial.hpp"

#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>

namespace qgm::qspecial {

namespace {

bool is_small_integer(double x) {
    return std::abs(x) <= 1e6 && x == std::nearbyint(x);
}

// Integer recurrence; returns false on overflow.
bool chebyshev_mu_int(long d, std::int64_t x, std::int64_t& out) {
    std::int64_t prev = 1, cur = x;
    if (d == 0) { out = 1; return true; }
    for (long k = 1; k < d; ++k) {
        std::int64_t t1, next;
        if (__builtin_mul_overflow(x, cur, &t1)) return false;
        if (__builtin_sub_overflow(t1, prev, &next)) return false;
        prev = cur;
        cur = next;
    }
    out = cur;
    return true;
}

template <class T>
T chebyshev_mu_recurrence(long d, T x) {
    T prev = T(1), cur = x;
    if (d == 0) return prev;
    for (long k = 1; k < d; ++k) {
        T next = x * cur - prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

} // namespace

double chebyshev_mu(long d, double x) {
    if (d < 0) throw std::domain_error("chebyshev_mu: d must be >= 0");
    if (is_small_integer(x)) {
        std::int64_t v;
        if (chebyshev_mu_int(d, static_cast<std::int64_t>(x), v))
            return static_cast<double>(v);
    }
    return chebyshev_mu_recurrence(d, x);
}

cplx chebyshev_mu(long d, cplx x) {
    if (x.imag() == 0.0) return cplx(chebyshev_mu(d, x.real()), 0.0);
    if (d < 0) throw std::domain_error("chebyshev_mu: d must be >= 0");
    return chebyshev_mu_recurrence(d, x);
}

cplx chebyshev_mu_closed(long d, cplx y) {
    if (d < 0) throw std::domain_error("chebyshev_mu_closed: d must be >= 0");
    const cplx yinv = 1.0 / y;
    const cplx denom = y - yinv;
    if (std::abs(denom) == 0.0)
        throw std::domain_error("chebyshev_mu_closed: y = +-1 is singular");
    return (std::pow(y, double(d + 1)) - std::pow(yinv, double(d + 1))) / denom;
}

double log_chebyshev_mu(long d, double x) {
    if (d < 0) throw std::domain_error("log_chebyshev_mu: d must be >= 0");
    if (x < 2.0) throw std::domain_error("log_chebyshev_mu: requires x >= 2");
    if (x == 2.0) return std::log(double(d + 1));
    // mu_d(y + 1/y) = y^{d+1} (1 - y^{-2(d+1)}) / (y - 1/y) with y > 1.
    const double y = (x + std::sqrt(x * x - 4.0)) / 2.0;
    const double ly = std::log(y);
    return double(d + 1) * ly + std::log1p(-std::exp(-2.0 * double(d + 1) * ly))
           - std::log(y - 1.0 / y);
}

cplx q_pochhammer(cplx x, double q, long k) {
    if (k < 0) throw std::domain_error("q_pochhammer: k must be >= 0");
    cplx prod = 1.0;
    cplx factor = x;
    for (long i = 0; i < k; ++i) {
        prod *= (1.0 - factor);
        factor *= q;
    }
    return prod;
}

double q_pochhammer(double x, double q, long k) {
    if (k < 0) throw std::domain_error("q_pochhammer: k must be >= 0");
    double prod = 1.0;
    double factor = x;
    for (long i = 0; i < k; ++i) {
        prod *= (1.0 - factor);
        factor *= q;
    }
    return prod;
}

std::vector<double> q_pochhammer_prefix(double q, long n) {
    std::vector<double> out(static_cast<std::size_t>(n) + 1);
    out[0] = 1.0;
    double qk = q;
    for (long k = 1; k <= n; ++k) {
        out[static_cast<std::size_t>(k)] = out[static_cast<std::size_t>(k - 1)] * (1.0 - qk);
        qk *= q;
    }
    return out;
}

double q_binomial(long n, long k, double q) {
    if (n < 0 || k < 0 || k > n)
        throw std::domain_error("q_binomial: requires 0 <= k <= n");
    long kk = std::min(k, n - k);
    // [n k]_q = prod_{i=1}^{kk} (1 - q^{n-kk+i}) / (1 - q^i)
    double num = 1.0, den = 1.0;
    double qi = q;
    double qtop = std::pow(q, double(n - kk + 1));
    for (long i = 1; i <= kk; ++i) {
        num *= (1.0 - qtop);
        den *= (1.0 - qi);
        qtop *= q;
        qi *= q;
    }
    return num / den;
}

cplx q_hermite(long n, cplx x, double q) {
    if (n < 0) throw std::domain_error("q_hermite: n must be >= 0");
    cplx prev = 1.0;
    if (n == 0) return prev;
    cplx cur = x;
    double qk = q; // q^k at k = 1
    for (long k = 1; k < n; ++k) {
        cplx next = x * cur - (1.0 - qk) * prev;
        prev = cur;
        cur = next;
        qk *= q;
    }
    return cur;
}

cplx q_hermite_sum(long n, cplx x, double q) {
    if (n < 0) throw std::domain_error("q_hermite_sum: n must be >= 0");
    // y + 1/y = x with |y| >= 1; the sum is symmetric under y <-> 1/y.
    const cplx s = std::sqrt(x * x - 4.0);
    cplx y = (x + s) / 2.0;
    if (std::abs(y) < 1.0) y = (x - s) / 2.0;

    const auto poch = q_pochhammer_prefix(q, n);
    const cplx y2inv = 1.0 / (y * y);
    cplx term = std::pow(y, double(n)); // y^{n - 2k} at k = 0
    cplx sum = 0.0;
    for (long k = 0; k <= n; ++k) {
        const double qb = poch[static_cast<std::size_t>(n)] /
                          (poch[static_cast<std::size_t>(k)] *
                           poch[static_cast<std::size_t>(n - k)]);
        sum += qb * term;
        term *= y2inv;
    }
    return sum;
}

} // namespace qgm::qspecial

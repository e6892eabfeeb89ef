#include "core/multipliers.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "core/qspecial.hpp"

namespace qgm::mult {

namespace {

void require_closed_strip(cplx z) {
    if (!(std::abs(z.real()) <= 1.0))
        throw std::domain_error("multiplier coefficient requires |Re z| <= 1");
}

double critical_exponent(double t, long power) {
    return double(power) * (1.0 - t) - 2.0;
}

} // namespace

cplx b_coeff(const QParam& q, cplx z, long d) {
    require_closed_strip(z);
    if (d < 0) throw std::domain_error("b_coeff: d must be >= 0");
    if (d == 0) return 1.0;

    // Evenness: reduce to Re z >= 0 so every factor has modulus <= 1.
    const cplx zz = (z.real() >= 0.0) ? z : -z;
    const double lq = std::log(q.absq());
    const double q2 = q.absq() * q.absq();
    const cplx w = std::exp(2.0 * zz * lq); // |q|^{2z}

    // (1 - w^{d+1}) / (1 - w), as an explicit geometric sum near w = 1.
    cplx ratio;
    if (std::abs(1.0 - w) < 1e-8) {
        cplx acc = 0.0, wj = 1.0;
        for (long j = 0; j <= d; ++j) {
            acc += wj;
            wj *= w;
        }
        ratio = acc;
    } else {
        ratio = (1.0 - std::pow(w, double(d + 1))) / (1.0 - w);
    }

    const cplx head = std::exp(double(d) * (1.0 - zz) * lq);
    const double tail = (1.0 - q2) / (1.0 - std::pow(q2, double(d + 1)));
    return head * ratio * tail;
}

double b_coeff(const QParam& q, double t, long d) {
    return b_coeff(q, cplx(t, 0.0), d).real();
}

cplx b_coeff_recurrence(const QParam& q, cplx z, long d) {
    require_closed_strip(z);
    const double lq = std::log(q.absq());
    const cplx x = std::exp(z * lq) + std::exp(-z * lq);
    return qspecial::chebyshev_mu(d, x) / qspecial::chebyshev_mu(d, cplx(q.gauge(), 0.0));
}

double decay_rate(const QParam& q, cplx z) {
    if (!(z.real() > 0.0 && z.real() < 1.0))
        throw std::domain_error("decay_rate: requires 0 < Re z < 1");
    return std::pow(q.absq(), 1.0 - z.real());
}

double proj_cb_bound(const QParam& q, long d) {
    return std::exp(log_proj_cb_bound(q, d));
}

double log_proj_cb_bound(const QParam& q, long d) {
    if (d < 0) throw std::domain_error("proj_cb_bound: d must be >= 0");
    return 2.0 * qspecial::log_chebyshev_mu(d, q.gauge());
}

namespace {

double log_term(const QParam& q, double t, long power, long d) {
    const double b = b_coeff(q, t, d); // positive for real t in the strip
    return double(power) * std::log(b) + log_proj_cb_bound(q, d);
}

} // namespace

CbBudget cb_budget(const QParam& q, double t, long power, long d) {
    if (power < 1) throw std::domain_error("cb_budget: power must be >= 1");
    CbBudget out;
    out.d = d;
    out.proj_bound = proj_cb_bound(q, d);
    out.term = std::exp(log_term(q, t, power, d));
    return out;
}

SummabilityReport summability_report(const QParam& q, double t, long power, long d_max) {
    if (!(t > 0.0 && t < 1.0))
        throw std::domain_error("summability_report: requires 0 < t < 1");
    if (power < 1) throw std::domain_error("summability_report: power must be >= 1");
    if (d_max < 0) throw std::domain_error("summability_report: d_max must be >= 0");

    SummabilityReport rep;
    rep.q = q.q();
    rep.t = t;
    rep.power = power;
    rep.d_max = d_max;

    double e = critical_exponent(t, power);
    if (std::abs(e) <= 16.0 * double(power) * std::numeric_limits<double>::epsilon())
        e = 0.0;
    rep.limiting_ratio = std::pow(q.absq(), e);
    rep.converges = rep.limiting_ratio < 1.0;

    rep.terms.reserve(static_cast<std::size_t>(d_max) + 1);
    rep.partial_sums.reserve(static_cast<std::size_t>(d_max) + 1);
    double sum = 0.0;
    for (long d = 0; d <= d_max; ++d) {
        const double term = std::exp(log_term(q, t, power, d));
        sum += term;
        rep.terms.push_back(term);
        rep.partial_sums.push_back(sum);
    }
    return rep;
}

Truncation truncate_multiplier(const QParam& q, double t, long power, double eps) {
    if (!(t > 0.0 && t < 1.0))
        throw std::domain_error("truncate_multiplier: requires 0 < t < 1");
    if (power < 1) throw std::domain_error("truncate_multiplier: power must be >= 1");
    if (!(eps > 0.0)) throw std::domain_error("truncate_multiplier: eps must be > 0");

    const double rho = std::pow(q.absq(), critical_exponent(t, power));
    if (!(rho < 1.0))
        throw std::domain_error(
            "truncate_multiplier: series is not certified convergent at these parameters");

    // Termwise majorant |b_d|^p mu_d^2 <= C rho^d with
    // C = (1 - q^{2t})^{-p} (1 - q^2)^{-2}.
    const double q2 = q.absq() * q.absq();
    const double c = std::pow(1.0 - std::pow(q.absq(), 2.0 * t), -double(power)) /
                     ((1.0 - q2) * (1.0 - q2));

    const long cap = 10000000;
    double bound = c * rho / (1.0 - rho); // tail past d_cut = 0
    for (long d_cut = 0; d_cut <= cap; ++d_cut) {
        if (bound < eps) return Truncation{d_cut, bound};
        bound *= rho;
    }
    throw std::domain_error("truncate_multiplier: cutoff search exceeded cap");
}

double summability_boundary(const QParam& q, long power, double tol) {
    if (power < 1) throw std::domain_error("summability_boundary: power must be >= 1");
    if (!(tol > 0.0)) throw std::domain_error("summability_boundary: tol must be > 0");
    double lo = 1e-6, hi = 1.0 - 1e-6;
    const auto subcritical = [&](double t) {
        return std::pow(q.absq(), critical_exponent(t, power)) < 1.0;
    };
    if (!subcritical(lo)) return lo;
    if (subcritical(hi)) return hi;
    while (hi - lo > tol) {
        const double mid = (lo + hi) / 2.0;
        (subcritical(mid) ? lo : hi) = mid;
    }
    return (lo + hi) / 2.0;
}

} // namespace qgm::mult

#include "core/suq2.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <stdexcept>
#include <string>

#include "core/qspecial.hpp"

namespace qgm::suq2 {

namespace {

void require_truncation(long n_tr) {
    if (n_tr < 4)
        throw std::invalid_argument("truncation size must be at least 4");
}

void require_strip(cplx z) {
    if (!(std::abs(z.real()) < 1.0))
        throw std::domain_error(
            "spectral parameter must satisfy |Re z| < 1; the coefficient "
            "sequence is not square-summable outside the strip");
}

// Subdiagonal weights s_n = sqrt(1 - q^{2n}) for n = 1 .. n_tr - 1.
std::vector<double> shift_weights(double absq, long n_tr) {
    std::vector<double> s(static_cast<std::size_t>(n_tr));
    const double q2 = absq * absq;
    double q2n = q2;
    for (long n = 1; n < n_tr; ++n) {
        s[static_cast<std::size_t>(n)] = std::sqrt(1.0 - q2n);
        q2n *= q2;
    }
    return s;
}

} // namespace

BandedOperator build_alpha_toeplitz(const QParam& q, long n_tr) {
    require_truncation(n_tr);
    const auto s = shift_weights(q.absq(), n_tr);
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n_tr, n_tr);
    for (long n = 1; n < n_tr; ++n) m(n - 1, n) = s[static_cast<std::size_t>(n)];
    return BandedOperator(std::move(m), 1, 1);
}

BandedOperator build_jacobi(const QParam& q, long n_tr) {
    require_truncation(n_tr);
    const double absq = q.absq();
    const auto s = shift_weights(absq, n_tr);
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n_tr, n_tr);
    for (long n = 1; n < n_tr; ++n) {
        m(n - 1, n) = s[static_cast<std::size_t>(n)] / absq;
        m(n, n - 1) = s[static_cast<std::size_t>(n)] * absq;
    }
    return BandedOperator(std::move(m), 1, 1);
}

double toeplitz_relation_residual(const QParam& q, long n_tr) {
    const BandedOperator a = build_alpha_toeplitz(q, n_tr);
    const double q2 = q.q() * q.q();
    const BandedOperator lhs =
        (a * a.adjoint()) - (std::complex<double>(q2) * (a.adjoint() * a));
    const BandedOperator rel = lhs.shifted(-(1.0 - q2));
    const long rows = rel.valid_rows();
    double worst = 0.0;
    for (long i = 0; i < rows; ++i)
        worst = std::max(worst, rel.matrix().row(i).cwiseAbs().maxCoeff());
    return worst;
}

double unitary_row_residual(const QParam& q, long n_tr, long window_halfwidth) {
    require_truncation(n_tr);
    if (window_halfwidth < 2)
        throw std::invalid_argument("unitary_row_residual: window halfwidth must be >= 2");
    const TensorOperator a = rho_alpha(q, n_tr, -window_halfwidth, window_halfwidth);
    const TensorOperator g = rho_gamma(q, n_tr, -window_halfwidth, window_halfwidth);
    const TensorOperator rel = ((a.adjoint() * a) + (g.adjoint() * g)).shifted(-1.0);
    const long n_rows = std::max<long>(0, n_tr - rel.guard_n());
    double worst = 0.0;
    for (long n = 0; n < n_rows; ++n)
        for (long k = -window_halfwidth + rel.guard_k(); k <= window_halfwidth - rel.guard_k(); ++k)
            worst = std::max(worst, rel.matrix().row(rel.flat(n, k)).cwiseAbs().maxCoeff());
    return worst;
}

EtaVector eta_vector(const QParam& q, cplx z, long n_tr) {
    require_strip(z);
    if (n_tr < 1) throw std::invalid_argument("eta_vector: n_tr must be >= 1");

    const double absq = q.absq();
    const double q2 = absq * absq;
    const double lq = std::log(absq);
    const auto poch = qspecial::q_pochhammer_prefix(q2, n_tr);

    // Power table absq^{z m} for m = -(n_tr-1) .. n_tr-1.
    std::vector<cplx> pw(static_cast<std::size_t>(2 * n_tr - 1));
    for (long m = -(n_tr - 1); m <= n_tr - 1; ++m)
        pw[static_cast<std::size_t>(m + n_tr - 1)] = std::exp(z * (lq * double(m)));
    const auto zpow = [&](long m) { return pw[static_cast<std::size_t>(m + n_tr - 1)]; };

    EtaVector eta;
    eta.z = z;
    eta.coeffs.resize(static_cast<std::size_t>(n_tr));
    double qn = 1.0; // absq^n
    cplx csum = 0.0;
    for (long n = 0; n < n_tr; ++n) {
        cplx h = 0.0;
        for (long k = 0; k <= n; ++k) {
            const double qb = poch[static_cast<std::size_t>(n)] /
                              (poch[static_cast<std::size_t>(k)] *
                               poch[static_cast<std::size_t>(n - k)]);
            h += qb * zpow(n - 2 * k);
        }
        const cplx p = (qn / std::sqrt(poch[static_cast<std::size_t>(n)])) * h;
        eta.coeffs[static_cast<std::size_t>(n)] = p;
        csum += p * p;
        qn *= absq;
    }
    eta.c_z = csum;
    eta.tail_bound = eta_tail_bound(q, z.real(), n_tr);
    eta.eigenvalue = zpow(1) + zpow(-1);
    return eta;
}

namespace {

// Rigorous lower bound on (q^2; q^2)_infty from a finite prefix:
// the dropped factors satisfy log(1-x) >= -x/(1-x).
double poch_infinity_lower(double q2) {
    const long cutoff = 64;
    const double prefix = qspecial::q_pochhammer(q2, q2, cutoff);
    const double x = std::pow(q2, double(cutoff + 1));
    const double correction = std::exp(-x / ((1.0 - q2) * (1.0 - x)));
    return prefix * correction;
}

} // namespace

double eta_coefficient_majorant(const QParam& q, double re_z, long n) {
    if (!(std::abs(re_z) < 1.0))
        throw std::domain_error("eta_coefficient_majorant: |Re z| < 1 required");
    const double q2 = q.absq() * q.absq();
    const double K = std::pow(poch_infinity_lower(q2), -1.5);
    const double r = std::pow(q.absq(), 1.0 - std::abs(re_z));
    return K * double(n + 1) * std::pow(r, double(n));
}

double eta_tail_bound(const QParam& q, double re_z, long n_start) {
    if (!(std::abs(re_z) < 1.0))
        throw std::domain_error("eta_tail_bound: |Re z| < 1 required");
    const double q2 = q.absq() * q.absq();
    const double K = std::pow(poch_infinity_lower(q2), -1.5);
    const double r = std::pow(q.absq(), 1.0 - std::abs(re_z));
    const double s = r * r;
    const double a = double(n_start + 1);
    const double u = 1.0 - s;
    // sum_{n >= N} (n+1)^2 s^n in closed form.
    const double series = a * a / u + 2.0 * a * s / (u * u) + s * (1.0 + s) / (u * u * u);
    return K * K * std::exp(double(n_start) * std::log(s)) * series;
}

long eta_decay_length(const QParam& q, double re_z, double tol) {
    if (!(tol > 0.0)) throw std::invalid_argument("eta_decay_length: tol must be > 0");
    const long cap = 1000000;
    for (long n = 1; n <= cap; ++n)
        if (eta_tail_bound(q, re_z, n) < tol) return n;
    throw std::invalid_argument("eta_decay_length: no feasible truncation below cap");
}

namespace {

// y = T x for the tridiagonal Jacobi truncation given by weights s.
void apply_jacobi(const std::vector<double>& s, double absq,
                  const std::vector<cplx>& x, std::vector<cplx>& y) {
    const long n = static_cast<long>(x.size());
    for (long i = 0; i < n; ++i) {
        cplx v = 0.0;
        if (i + 1 < n) v += (s[static_cast<std::size_t>(i + 1)] / absq) * x[static_cast<std::size_t>(i + 1)];
        if (i > 0) v += (s[static_cast<std::size_t>(i)] * absq) * x[static_cast<std::size_t>(i - 1)];
        y[static_cast<std::size_t>(i)] = v;
    }
}

} // namespace

EtaResidual eta_eigen_residual(const QParam& q, cplx z, long n_tr) {
    require_truncation(n_tr);
    const EtaVector eta = eta_vector(q, z, n_tr);
    const auto s = shift_weights(q.absq(), n_tr);
    std::vector<cplx> t(eta.coeffs.size());
    apply_jacobi(s, q.absq(), eta.coeffs, t);

    double norm2 = 0.0, res_valid2 = 0.0, res_full2 = 0.0;
    for (long i = 0; i < n_tr; ++i) {
        const cplx r = t[static_cast<std::size_t>(i)] -
                       eta.eigenvalue * eta.coeffs[static_cast<std::size_t>(i)];
        const double r2 = std::norm(r);
        res_full2 += r2;
        if (i < n_tr - 1) res_valid2 += r2;
        norm2 += std::norm(eta.coeffs[static_cast<std::size_t>(i)]);
    }
    const double nrm = std::sqrt(norm2);
    return EtaResidual{std::sqrt(res_valid2) / nrm, std::sqrt(res_full2) / nrm};
}

long theta_min_truncation(const QParam& q, cplx z, long d_max) {
    require_strip(z);
    if (d_max < 0) throw std::invalid_argument("theta_min_truncation: d_max must be >= 0");
    return eta_decay_length(q, z.real(), 1e-10) + d_max + 8;
}

ThetaFunctional theta_pair(const QParam& q, cplx z, long d_max, long n_tr) {
    const long need = theta_min_truncation(q, z, d_max);
    if (n_tr < need)
        throw std::invalid_argument(
            "theta_pair: truncation too small for requested d_max; need n_tr >= " +
            std::to_string(need));

    const EtaVector eta = eta_vector(q, z, n_tr);
    const auto s = shift_weights(q.absq(), n_tr);
    const std::size_t n = eta.coeffs.size();

    const auto pair_with_eta = [&](const std::vector<cplx>& v) {
        cplx acc = 0.0;
        for (std::size_t i = 0; i < n; ++i) acc += v[i] * eta.coeffs[i];
        return acc;
    };

    ThetaFunctional theta;
    theta.z = z;
    theta.c_z = eta.c_z;
    theta.values.resize(static_cast<std::size_t>(d_max) + 1);

    std::vector<cplx> v_prev = eta.coeffs, v_cur(n), v_next(n);
    apply_jacobi(s, q.absq(), v_prev, v_cur);
    for (long d = 0; d <= d_max; ++d) {
        const std::vector<cplx>& vd = (d == 0) ? v_prev : v_cur;
        const double log_mu = qspecial::log_chebyshev_mu(d, q.gauge());
        theta.values[static_cast<std::size_t>(d)] = pair_with_eta(vd) * std::exp(-log_mu);
        if (d >= 1 && d < d_max) {
            apply_jacobi(s, q.absq(), v_cur, v_next);
            for (std::size_t i = 0; i < n; ++i) v_next[i] -= v_prev[i];
            v_prev.swap(v_cur);
            v_cur.swap(v_next);
        }
    }
    return theta;
}

std::vector<double> twisted_character_spectrum(const QParam& q, long n_tr) {
    require_truncation(n_tr);
    const auto s = shift_weights(q.absq(), n_tr);
    Eigen::VectorXd diag = Eigen::VectorXd::Zero(n_tr);
    Eigen::VectorXd sub(n_tr - 1);
    const double half_gauge = q.gauge() / 2.0;
    for (long i = 0; i + 1 < n_tr; ++i) sub(i) = half_gauge * s[static_cast<std::size_t>(i + 1)];
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
    solver.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
    const Eigen::VectorXd& ev = solver.eigenvalues();
    return std::vector<double>(ev.data(), ev.data() + ev.size());
}

} // namespace qgm::suq2

#ifndef QGMULT_CORE_SUQ2_HPP
#define QGMULT_CORE_SUQ2_HPP

#include <complex>
#include <vector>

#include "core/operators.hpp"
#include "core/qparam.hpp"

namespace qgm::suq2 {

using cplx = std::complex<double>;

/// Truncation of the Toeplitz generator, e_n -> sqrt(1-q^{2n}) e_{n-1}.
/// Only q^2 enters, so the sign of q is immaterial here. Requires n_tr >= 4.
BandedOperator build_alpha_toeplitz(const QParam& q, long n_tr);

/// Tridiagonal truncation of |q|^{-1} alpha + |q| alpha^*:
/// entry (n, n+1) = |q|^{-1} sqrt(1-q^{2(n+1)}), entry (n+1, n) the same
/// with factor |q|, zero diagonal. Requires n_tr >= 4.
BandedOperator build_jacobi(const QParam& q, long n_tr);

/// Max-norm residual of alpha alpha^* - q^2 alpha^* alpha - (1-q^2) I on
/// the rows of the truncation unaffected by the cut.
double toeplitz_relation_residual(const QParam& q, long n_tr);

/// Max-norm residual of alpha^* alpha + gamma^* gamma - I on the valid
/// block of the tensor truncation with window [-w, w].
double unitary_row_residual(const QParam& q, long n_tr, long window_halfwidth);

/// Coefficient sequence of the Jacobi eigenvector at spectral parameter z.
struct EtaVector {
    cplx z;
    std::vector<cplx> coeffs;  ///< p_0(z) .. p_{n_tr-1}(z)
    cplx c_z;                  ///< bilinear sum of squares, sum_n p_n(z)^2
    double tail_bound;         ///< >= sum_{n >= n_tr} |p_n(z)|^2, rigorous
    cplx eigenvalue;           ///< |q|^z + |q|^{-z}
};

/// p_n(z) = |q|^n / sqrt((q^2;q^2)_n) * H_n(|q|^z + |q|^{-z}; q^2),
/// for z in the open strip |Re z| < 1 (square-summability fails outside).
EtaVector eta_vector(const QParam& q, cplx z, long n_tr);

/// Geometric majorant K (n+1) r^n >= |p_n(z)| with r = |q|^{1-|Re z|}.
double eta_coefficient_majorant(const QParam& q, double re_z, long n);

/// Closed-form bound on sum_{n >= n_start} |p_n(z)|^2 from the majorant.
double eta_tail_bound(const QParam& q, double re_z, long n_start);

/// Smallest N with eta_tail_bound(q, re_z, N) < tol.
long eta_decay_length(const QParam& q, double re_z, double tol);

struct EtaResidual {
    double on_valid_rows;  ///< || T eta - lambda eta || / || eta ||, rows [0, n_tr-1)
    double full;           ///< same including the truncated boundary row
};
EtaResidual eta_eigen_residual(const QParam& q, cplx z, long n_tr);

/// Central-functional values read off against the Jacobi eigenvector.
///
/// values[d] is the bilinear pairing of mu_d(T) eta_z with the
/// coefficient sequence, normalized by mu_d(gauge) so that
/// values[0] = C_z and values[d]/C_z reproduces the multiplier
/// coefficient b_d(z).
struct ThetaFunctional {
    cplx z;
    std::vector<cplx> values;  ///< d = 0 .. d_max
    cplx c_z;
};

/// Evaluates the family by the Chebyshev vector recurrence
/// v_{k+1} = T v_k - v_{k-1}. Rejects truncations too small to keep the
/// band growth of mu_d(T) away from the coefficient tail; see
/// theta_min_truncation.
ThetaFunctional theta_pair(const QParam& q, cplx z, long d_max, long n_tr);

/// Smallest admissible n_tr for theta_pair at these parameters:
/// decay length at tail tolerance 1e-10, plus d_max, plus a margin of 8.
long theta_min_truncation(const QParam& q, cplx z, long d_max);

/// Eigenvalues (ascending) of the self-adjoint model of the twisted
/// character, the Hermitian part (T + T^*)/2 of the Jacobi truncation.
/// Its spectrum fills the interval [-(|q|+|q|^{-1}), |q|+|q|^{-1}].
std::vector<double> twisted_character_spectrum(const QParam& q, long n_tr);

} // namespace qgm::suq2

#endif

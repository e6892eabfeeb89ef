#ifndef QGMULT_CORE_OPERATORS_HPP
#define QGMULT_CORE_OPERATORS_HPP

#include <Eigen/Dense>
#include <complex>

#include "core/qparam.hpp"

namespace qgm::suq2 {

/// Finite top-left corner of a banded operator on l^2(N).
///
/// `band` bounds |i - j| over the nonzero entries, and rows
/// [0, dim - guard) coincide with the rows of the infinite operator;
/// rows below may carry truncation artifacts. The invariant
/// guard >= band is maintained by every algebraic operation, which
/// makes the guard bookkeeping of sums/products purely additive.
class BandedOperator {
public:
    BandedOperator(Eigen::MatrixXcd m, long band, long guard);

    long dim() const noexcept { return mat_.rows(); }
    long band() const noexcept { return band_; }
    long guard() const noexcept { return guard_; }

    /// First row index that may be affected by truncation.
    long valid_rows() const noexcept { return std::max<long>(0, dim() - guard_); }

    const Eigen::MatrixXcd& matrix() const noexcept { return mat_; }
    std::complex<double> entry(long i, long j) const { return mat_(i, j); }

    BandedOperator adjoint() const;

    friend BandedOperator operator*(const BandedOperator& a, const BandedOperator& b);
    friend BandedOperator operator+(const BandedOperator& a, const BandedOperator& b);
    friend BandedOperator operator-(const BandedOperator& a, const BandedOperator& b);
    friend BandedOperator operator*(std::complex<double> s, const BandedOperator& a);

    /// Same operator shifted by s * identity (identity costs no band).
    BandedOperator shifted(std::complex<double> s) const;

private:
    Eigen::MatrixXcd mat_;
    long band_;
    long guard_;
};

/// Truncated operator on l^2(N) (x) l^2(window) with the window a
/// finite integer interval [k_lo, k_hi]. Guards are tracked per leg:
/// entries indexed by (n, k) with n < n_dim - guard_n and
/// k_lo + guard_k <= k <= k_hi - guard_k are exact.
class TensorOperator {
public:
    TensorOperator(Eigen::MatrixXcd m, long n_dim, long k_lo, long k_hi,
                   long band_n, long guard_n, long band_k, long guard_k);

    long n_dim() const noexcept { return n_dim_; }
    long k_lo() const noexcept { return k_lo_; }
    long k_hi() const noexcept { return k_hi_; }
    long window_size() const noexcept { return k_hi_ - k_lo_ + 1; }
    long band_n() const noexcept { return band_n_; }
    long guard_n() const noexcept { return guard_n_; }
    long band_k() const noexcept { return band_k_; }
    long guard_k() const noexcept { return guard_k_; }

    long flat(long n, long k) const { return n * window_size() + (k - k_lo_); }
    const Eigen::MatrixXcd& matrix() const noexcept { return mat_; }

    TensorOperator adjoint() const;

    friend TensorOperator operator*(const TensorOperator& a, const TensorOperator& b);
    friend TensorOperator operator+(const TensorOperator& a, const TensorOperator& b);
    friend TensorOperator operator-(const TensorOperator& a, const TensorOperator& b);

    TensorOperator shifted(std::complex<double> s) const;

private:
    Eigen::MatrixXcd mat_;
    long n_dim_, k_lo_, k_hi_;
    long band_n_, guard_n_, band_k_, guard_k_;
};

/// alpha on the tensor representation: e_n (x) e_k -> sqrt(1-q^{2n}) e_{n-1} (x) e_k.
TensorOperator rho_alpha(const QParam& q, long n_dim, long k_lo, long k_hi);

/// gamma on the tensor representation: e_n (x) e_k -> q^n e_n (x) e_{k-1}.
TensorOperator rho_gamma(const QParam& q, long n_dim, long k_lo, long k_hi);

/// Compression to the e_0 column of the second leg, (V* T V) (x) 1,
/// returned on the first leg alone. Requires 0 in the window and a
/// k-guard small enough that no path through the operator has left the
/// window.
BandedOperator conditional_expectation(const TensorOperator& op);

} // namespace qgm::suq2

#endif

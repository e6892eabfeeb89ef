#include "core/operators.hpp"

#include <stdexcept>

namespace qgm::suq2 {

namespace {

void check_band(const Eigen::MatrixXcd& m, long band, const char* who) {
    for (long i = 0; i < m.rows(); ++i)
        for (long j = 0; j < m.cols(); ++j)
            if (std::abs(i - j) > band && m(i, j) != std::complex<double>(0.0, 0.0))
                throw std::invalid_argument(std::string(who) +
                                            ": nonzero entry outside declared band");
}

} // namespace

BandedOperator::BandedOperator(Eigen::MatrixXcd m, long band, long guard)
    : mat_(std::move(m)), band_(band), guard_(guard) {
    if (mat_.rows() != mat_.cols())
        throw std::invalid_argument("BandedOperator: matrix must be square");
    if (band_ < 0 || guard_ < band_)
        throw std::invalid_argument("BandedOperator: requires 0 <= band <= guard");
    check_band(mat_, band_, "BandedOperator");
}

BandedOperator BandedOperator::adjoint() const {
    return BandedOperator(mat_.adjoint(), band_, std::max(guard_, band_));
}

BandedOperator operator*(const BandedOperator& a, const BandedOperator& b) {
    if (a.dim() != b.dim())
        throw std::invalid_argument("BandedOperator: dimension mismatch");
    return BandedOperator(a.mat_ * b.mat_, a.band_ + b.band_, a.guard_ + b.guard_);
}

BandedOperator operator+(const BandedOperator& a, const BandedOperator& b) {
    if (a.dim() != b.dim())
        throw std::invalid_argument("BandedOperator: dimension mismatch");
    return BandedOperator(a.mat_ + b.mat_, std::max(a.band_, b.band_),
                          std::max(a.guard_, b.guard_));
}

BandedOperator operator-(const BandedOperator& a, const BandedOperator& b) {
    if (a.dim() != b.dim())
        throw std::invalid_argument("BandedOperator: dimension mismatch");
    return BandedOperator(a.mat_ - b.mat_, std::max(a.band_, b.band_),
                          std::max(a.guard_, b.guard_));
}

BandedOperator operator*(std::complex<double> s, const BandedOperator& a) {
    return BandedOperator(s * a.mat_, a.band_, a.guard_);
}

BandedOperator BandedOperator::shifted(std::complex<double> s) const {
    Eigen::MatrixXcd m = mat_;
    m.diagonal().array() += s;
    return BandedOperator(std::move(m), band_, guard_);
}

TensorOperator::TensorOperator(Eigen::MatrixXcd m, long n_dim, long k_lo, long k_hi,
                               long band_n, long guard_n, long band_k, long guard_k)
    : mat_(std::move(m)), n_dim_(n_dim), k_lo_(k_lo), k_hi_(k_hi),
      band_n_(band_n), guard_n_(guard_n), band_k_(band_k), guard_k_(guard_k) {
    if (n_dim_ <= 0 || k_lo_ > k_hi_)
        throw std::invalid_argument("TensorOperator: empty space");
    const long total = n_dim_ * window_size();
    if (mat_.rows() != total || mat_.cols() != total)
        throw std::invalid_argument("TensorOperator: matrix size mismatch");
    if (band_n_ < 0 || guard_n_ < band_n_ || band_k_ < 0 || guard_k_ < band_k_)
        throw std::invalid_argument("TensorOperator: requires 0 <= band <= guard per leg");
}

TensorOperator TensorOperator::adjoint() const {
    return TensorOperator(mat_.adjoint(), n_dim_, k_lo_, k_hi_, band_n_,
                          std::max(guard_n_, band_n_), band_k_,
                          std::max(guard_k_, band_k_));
}

namespace {

void check_same_space(const TensorOperator& a, const TensorOperator& b) {
    if (a.n_dim() != b.n_dim() || a.k_lo() != b.k_lo() || a.k_hi() != b.k_hi())
        throw std::invalid_argument("TensorOperator: space mismatch");
}

} // namespace

TensorOperator operator*(const TensorOperator& a, const TensorOperator& b) {
    check_same_space(a, b);
    return TensorOperator(a.mat_ * b.mat_, a.n_dim_, a.k_lo_, a.k_hi_,
                          a.band_n_ + b.band_n_, a.guard_n_ + b.guard_n_,
                          a.band_k_ + b.band_k_, a.guard_k_ + b.guard_k_);
}

TensorOperator operator+(const TensorOperator& a, const TensorOperator& b) {
    check_same_space(a, b);
    return TensorOperator(a.mat_ + b.mat_, a.n_dim_, a.k_lo_, a.k_hi_,
                          std::max(a.band_n_, b.band_n_), std::max(a.guard_n_, b.guard_n_),
                          std::max(a.band_k_, b.band_k_), std::max(a.guard_k_, b.guard_k_));
}

TensorOperator operator-(const TensorOperator& a, const TensorOperator& b) {
    check_same_space(a, b);
    return TensorOperator(a.mat_ - b.mat_, a.n_dim_, a.k_lo_, a.k_hi_,
                          std::max(a.band_n_, b.band_n_), std::max(a.guard_n_, b.guard_n_),
                          std::max(a.band_k_, b.band_k_), std::max(a.guard_k_, b.guard_k_));
}

TensorOperator TensorOperator::shifted(std::complex<double> s) const {
    Eigen::MatrixXcd m = mat_;
    m.diagonal().array() += s;
    return TensorOperator(std::move(m), n_dim_, k_lo_, k_hi_, band_n_, guard_n_,
                          band_k_, guard_k_);
}

TensorOperator rho_alpha(const QParam& q, long n_dim, long k_lo, long k_hi) {
    const long w = k_hi - k_lo + 1;
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n_dim * w, n_dim * w);
    const double q2 = q.q() * q.q();
    double q2n = q2; // q^{2n} at n = 1
    for (long n = 1; n < n_dim; ++n) {
        const double c = std::sqrt(1.0 - q2n);
        for (long k = k_lo; k <= k_hi; ++k)
            m((n - 1) * w + (k - k_lo), n * w + (k - k_lo)) = c;
        q2n *= q2;
    }
    return TensorOperator(std::move(m), n_dim, k_lo, k_hi, 1, 1, 0, 0);
}

TensorOperator rho_gamma(const QParam& q, long n_dim, long k_lo, long k_hi) {
    const long w = k_hi - k_lo + 1;
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n_dim * w, n_dim * w);
    double qn = 1.0; // q^n, signed
    for (long n = 0; n < n_dim; ++n) {
        for (long k = k_lo + 1; k <= k_hi; ++k)
            m(n * w + (k - 1 - k_lo), n * w + (k - k_lo)) = qn;
        qn *= q.q();
    }
    return TensorOperator(std::move(m), n_dim, k_lo, k_hi, 0, 0, 1, 1);
}

BandedOperator conditional_expectation(const TensorOperator& op) {
    if (op.k_lo() > 0 || op.k_hi() < 0)
        throw std::invalid_argument("conditional_expectation: window must contain 0");
    if (op.guard_k() > std::min(-op.k_lo(), op.k_hi()))
        throw std::invalid_argument(
            "conditional_expectation: window too small for the operator's k-band");
    const long n = op.n_dim();
    Eigen::MatrixXcd m(n, n);
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j)
            m(i, j) = op.matrix()(op.flat(i, 0), op.flat(j, 0));
    // Compression keeps the n-leg band; entries may fall anywhere in it.
    return BandedOperator(std::move(m), op.band_n(), std::max(op.guard_n(), op.band_n()));
}

} // namespace qgm::suq2

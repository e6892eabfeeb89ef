#ifndef QGMULT_CORE_QPARAM_HPP
#define QGMULT_CORE_QPARAM_HPP

#include <cmath>
#include <stdexcept>

namespace qgm {

/// Deformation parameter q with 0 < |q| < 1.
///
/// Almost every construction in this library depends on q only through
/// |q| and the gauge |q| + 1/|q|. The sign is kept because the twisted
/// character picks up a factor sgn(q) in its eigenvalue relation; it is
/// recorded here and never folded into spectra.
class QParam {
public:
    explicit QParam(double q) : q_(q) {
        if (!std::isfinite(q) || q == 0.0 || std::abs(q) >= 1.0)
            throw std::domain_error("QParam: q must satisfy 0 < |q| < 1");
        absq_ = std::abs(q);
        gauge_ = absq_ + 1.0 / absq_;
    }

    double q() const noexcept { return q_; }
    double absq() const noexcept { return absq_; }

    /// |q| + 1/|q|, always > 2 for admissible q.
    double gauge() const noexcept { return gauge_; }

    int sign() const noexcept { return q_ < 0.0 ? -1 : 1; }

private:
    double q_;
    double absq_;
    double gauge_;
};

} // namespace qgm

#endif

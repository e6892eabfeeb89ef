#include <doctest.h>

#include <cmath>

#include "core/operators.hpp"
#include "core/suq2.hpp"

using namespace qgm;
using namespace qgm::suq2;
using doctest::Approx;

TEST_CASE("banded operator validates its band") {
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(5, 5);
    m(0, 3) = 1.0;
    CHECK_THROWS_AS(BandedOperator(m, 1, 1), std::invalid_argument);
    CHECK_NOTHROW(BandedOperator(m, 3, 3));
    CHECK_THROWS_AS(BandedOperator(m, 3, 2), std::invalid_argument); // guard < band
}

TEST_CASE("band and guard bookkeeping through algebra") {
    const QParam q(0.5);
    const BandedOperator a = build_alpha_toeplitz(q, 16);
    CHECK(a.band() == 1);
    CHECK(a.guard() == 1);
    CHECK(a.valid_rows() == 15);
    const BandedOperator prod = a * a.adjoint();
    CHECK(prod.band() == 2);
    CHECK(prod.guard() == 2);
    const BandedOperator sum = a + a.adjoint();
    CHECK(sum.band() == 1);
}

TEST_CASE("alpha truncation entries") {
    const QParam q(0.5);
    const BandedOperator a = build_alpha_toeplitz(q, 4);
    CHECK(a.entry(0, 1).real() == Approx(std::sqrt(1.0 - 0.25)).epsilon(1e-15));
    CHECK(std::abs(a.entry(0, 1)) == Approx(0.8660254).epsilon(1e-7));
    for (long k = 0; k < 4; ++k) CHECK(a.entry(k, k) == std::complex<double>(0.0));
    CHECK_THROWS_AS((void)build_alpha_toeplitz(q, 3), std::invalid_argument);
}

TEST_CASE("toeplitz commutation relation on valid rows") {
    CHECK(toeplitz_relation_residual(QParam(0.5), 64) < 1e-14);
    for (double qv : {0.2, -0.2, 0.5, -0.5, 0.9, -0.9})
        CHECK(toeplitz_relation_residual(QParam(qv), 128) < 1e-13);
}

TEST_CASE("jacobi truncation entries") {
    const QParam q(0.5);
    const BandedOperator t = build_jacobi(q, 8);
    CHECK(t.entry(0, 1).real() == Approx(2.0 * std::sqrt(0.75)).epsilon(1e-15));
    CHECK(t.entry(0, 1).real() == Approx(std::sqrt(3.0)).epsilon(1e-15));
    CHECK(t.entry(1, 0).real() == Approx(0.5 * std::sqrt(0.75)).epsilon(1e-15));
    for (long k = 0; k < 8; ++k) CHECK(t.entry(k, k) == std::complex<double>(0.0));

    const BandedOperator a = build_alpha_toeplitz(q, 8);
    const BandedOperator combo =
        (std::complex<double>(1.0 / q.q()) * a) + (std::complex<double>(q.q()) * a.adjoint());
    CHECK((t.matrix() - combo.matrix()).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("jacobi for negative q uses |q|") {
    const BandedOperator tp = build_jacobi(QParam(0.5), 8);
    const BandedOperator tm = build_jacobi(QParam(-0.5), 8);
    CHECK((tp.matrix() - tm.matrix()).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("conditional expectation compresses the tensor representation") {
    const QParam q(0.5);
    const long n = 24, w = 4;

    const TensorOperator a = rho_alpha(q, n, -w, w);
    const BandedOperator ea = conditional_expectation(a);
    const BandedOperator direct = build_alpha_toeplitz(q, n);
    CHECK((ea.matrix() - direct.matrix()).topRows(ea.valid_rows()).cwiseAbs().maxCoeff()
          < 1e-15);

    const TensorOperator g = rho_gamma(q, n, -w, w);
    const BandedOperator eg = conditional_expectation(g);
    CHECK(eg.matrix().topRows(eg.valid_rows()).cwiseAbs().maxCoeff() == 0.0);

    const BandedOperator egg = conditional_expectation(g.adjoint() * g);
    for (long i = 0; i < egg.valid_rows(); ++i) {
        for (long j = 0; j < n; ++j) {
            const double want = (i == j) ? std::pow(0.5, 2.0 * double(i)) : 0.0;
            CHECK(std::abs(egg.entry(i, j) - want) < 1e-15);
        }
    }
}

TEST_CASE("conditional expectation rejects bad windows") {
    const QParam q(0.5);
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(12, 12);
    const TensorOperator shifted_window(m, 4, 1, 3, 0, 0, 0, 0);
    CHECK_THROWS_AS((void)conditional_expectation(shifted_window), std::invalid_argument);

    // gamma^4 needs |k| <= 4 paths; a window of halfwidth 3 cannot hold them.
    const TensorOperator g = rho_gamma(q, 6, -3, 3);
    const TensorOperator g4 = g * g * g * g;
    CHECK_THROWS_AS((void)conditional_expectation(g4), std::invalid_argument);
}

TEST_CASE("unitarity row relation on the tensor truncation") {
    for (double qv : {0.2, -0.2, 0.5, -0.5, 0.9, -0.9})
        CHECK(unitary_row_residual(QParam(qv), 32, 4) < 1e-13);
}

TEST_CASE("gamma keeps the sign of q") {
    const TensorOperator g = rho_gamma(QParam(-0.5), 4, -2, 2);
    // entry for n = 1 is q^1 = -0.5 on the k-shift
    CHECK(g.matrix()(g.flat(1, 0), g.flat(1, 1)).real() == Approx(-0.5));
}

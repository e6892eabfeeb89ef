#include <doctest.h>

#include <cmath>
#include <random>

#include "core/structure.hpp"

using namespace qgm::structure;
using doctest::Approx;
using cplx = std::complex<double>;

namespace {

Eigen::MatrixXcd random_unitary(std::mt19937_64& rng, long n) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    Eigen::MatrixXcd g(n, n);
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) g(i, j) = cplx(u(rng), u(rng));
    return Eigen::HouseholderQR<Eigen::MatrixXcd>(g).householderQ();
}

} // namespace

TEST_CASE("identity matrix is the Kac case") {
    const auto p = profile(Eigen::MatrixXcd::Identity(2, 2));
    CHECK(p.normalized);
    CHECK(p.q_param == Approx(1.0).epsilon(1e-14));
    CHECK(p.trace_ffstar == Approx(2.0).epsilon(1e-14));
    CHECK(p.orthogonal_case == OrthogonalCase::plus);
    CHECK(p.sd_generators.empty());
}

TEST_CASE("off-diagonal deformation matrix") {
    const double q0 = 0.25;
    Eigen::MatrixXcd f(2, 2);
    f.setZero();
    f(0, 1) = std::sqrt(q0);
    f(1, 0) = 1.0 / std::sqrt(q0);
    const auto p = profile(f);
    CHECK(p.normalized);
    CHECK(p.trace_ffstar == Approx(q0 + 1.0 / q0).epsilon(1e-14));
    CHECK(p.q_param == Approx(q0).epsilon(1e-12));
    CHECK(p.orthogonal_case == OrthogonalCase::plus);
}

TEST_CASE("quaternionic sign") {
    Eigen::MatrixXcd f(2, 2);
    f.setZero();
    f(0, 1) = 1.0;
    f(1, 0) = -1.0;
    CHECK(profile(f).orthogonal_case == OrthogonalCase::minus);
}

TEST_CASE("rescale balances the traces") {
    Eigen::MatrixXcd f(2, 2);
    f.setZero();
    f(0, 0) = 2.0;
    f(1, 1) = 1.0;
    const auto p = profile(f);
    CHECK(!p.normalized);
    CHECK(p.input_trace == Approx(5.0));
    CHECK(p.input_trace_inv == Approx(1.25));
    const Eigen::MatrixXcd q_mat = p.F * p.F.adjoint();
    CHECK(q_mat.trace().real() == Approx(q_mat.inverse().trace().real()).epsilon(1e-12));
    CHECK(p.trace_ffstar == Approx(2.5).epsilon(1e-12));
    CHECK(p.q_param == Approx(0.5).epsilon(1e-12));
    CHECK(p.orthogonal_case == OrthogonalCase::no);
}

TEST_CASE("rescale idempotence") {
    std::mt19937_64 rng(53);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    for (int i = 0; i < 20; ++i) {
        Eigen::MatrixXcd f(3, 3);
        for (long r = 0; r < 3; ++r)
            for (long c = 0; c < 3; ++c) f(r, c) = cplx(u(rng), u(rng));
        f += 4.0 * Eigen::MatrixXcd::Identity(3, 3);
        const auto p1 = profile(f);
        const auto p2 = profile(p1.F);
        CHECK(std::abs(p2.scale - 1.0) < 1e-10);
        CHECK(std::abs(p1.q_param - p2.q_param) < 1e-12);
    }
}

TEST_CASE("q extraction is invariant under lambda V F W") {
    std::mt19937_64 rng(59);
    Eigen::MatrixXcd f(3, 3);
    f.setZero();
    f(0, 0) = 2.0;
    f(1, 1) = cplx(0.0, 1.0);
    f(2, 2) = 0.5;
    const double q0 = profile(f).q_param;
    std::uniform_real_distribution<double> lam(-1.0, 1.0);
    for (int i = 0; i < 50; ++i) {
        const Eigen::MatrixXcd g =
            std::exp(lam(rng)) * (random_unitary(rng, 3) * f * random_unitary(rng, 3));
        CHECK(std::abs(profile(g).q_param - q0) < 1e-9);
    }
}

TEST_CASE("singular and ill-conditioned inputs are rejected") {
    Eigen::MatrixXcd f(2, 2);
    f << 1.0, 1.0, 1.0, 1.0;
    CHECK_THROWS_AS((void)profile(f), SingularMatrixError);
    Eigen::MatrixXcd g = Eigen::MatrixXcd::Identity(2, 2);
    g(1, 1) = 1e-13;
    CHECK_THROWS_AS((void)profile(g), SingularMatrixError);
    CHECK_THROWS_AS((void)profile(Eigen::MatrixXcd::Identity(1, 1)),
                    std::invalid_argument);
}

TEST_CASE("noninjectivity criterion") {
    for (long n = 2; n <= 10; ++n) {
        const auto v = noninjectivity_check(profile(Eigen::MatrixXcd::Identity(n, n)));
        CHECK(v.lhs == Approx(double(n * n)));
        CHECK(v.rhs == Approx(double(n) + 2.0).epsilon(1e-12));
        CHECK(v.noninjective == (n >= 3));
    }

    // N = 3 with balanced trace exactly 7 = N^2 - 2 sits on the boundary.
    const double a = 3.0 + 2.0 * std::sqrt(2.0);
    Eigen::MatrixXcd f(3, 3);
    f.setZero();
    f(0, 0) = std::sqrt(a);
    f(1, 1) = 1.0;
    f(2, 2) = 1.0 / std::sqrt(a);
    const auto p = profile(f);
    CHECK(p.trace_ffstar == Approx(7.0).epsilon(1e-12));
    CHECK(!noninjectivity_check(p).noninjective);

    // Monotone in N at fixed trace: pad with balanced 1s.
    for (long n : {4L, 5L, 8L}) {
        Eigen::MatrixXcd g = Eigen::MatrixXcd::Identity(n, n);
        g(0, 0) = std::sqrt(a);
        g(1, 1) = 1.0 / std::sqrt(a);
        const auto v = noninjectivity_check(profile(g));
        CHECK(v.noninjective == (double(n * n) > v.rhs));
        CHECK(v.noninjective);
    }
}

TEST_CASE("sd generators") {
    Eigen::MatrixXcd f(2, 2);
    f.setZero();
    f(0, 0) = std::sqrt(2.0);
    f(1, 1) = 1.0 / std::sqrt(2.0);
    const auto p = profile(f);
    REQUIRE(p.sd_generators.size() == 2);
    CHECK(p.sd_generators[0] == Approx(0.25).epsilon(1e-12));
    CHECK(p.sd_generators[1] == Approx(4.0).epsilon(1e-12));

    CHECK(sd_generators(profile(Eigen::MatrixXcd::Identity(4, 4))).empty());

    // Q = diag(3, 2, 1/3, 1/2) carries all pairwise products.
    Eigen::MatrixXcd g(4, 4);
    g.setZero();
    g(0, 0) = std::sqrt(3.0);
    g(1, 1) = std::sqrt(2.0);
    g(2, 2) = 1.0 / std::sqrt(3.0);
    g(3, 3) = 1.0 / std::sqrt(2.0);
    const auto gens = profile(g).sd_generators;
    for (double want : {9.0, 6.0, 1.5, 4.0, 2.0 / 3.0, 1.0 / 9.0}) {
        bool found = false;
        for (double v : gens) found = found || std::abs(v - want) < 1e-9;
        CHECK(found);
    }
}

TEST_CASE("subgroup membership") {
    CHECK(subgroup_member({4.0}, 16.0, 2));
    CHECK(!subgroup_member({4.0}, 2.0, 5));
    CHECK(subgroup_member({2.0, 3.0}, 12.0, 3));
    CHECK(subgroup_member({4.0}, 1.0, 1));
    CHECK_THROWS_AS((void)subgroup_member({}, 2.0, 3), std::invalid_argument);
    CHECK_THROWS_AS((void)subgroup_member({2.0}, -1.0, 3), std::invalid_argument);
    CHECK_THROWS_AS((void)subgroup_member(std::vector<double>(12, 2.0), 4.0, 10),
                    std::invalid_argument);
}

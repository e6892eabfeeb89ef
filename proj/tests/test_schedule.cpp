#include <doctest.h>

#include <cmath>

#include "core/schedule.hpp"

using namespace qgm::schedule;
using doctest::Approx;

namespace {

// Independent route: the formula evaluated directly with pow.
double tail_direct(long n, double r) {
    return 4.0 * double(n) * std::pow(r, double(n)) / ((1.0 - r) * (1.0 - r));
}

} // namespace

TEST_CASE("tail bound formula") {
    CHECK(tail_bound(1, 0.5) == Approx(8.0).epsilon(1e-14));
    CHECK(tail_bound(1, 1e-8) == Approx(4e-8).epsilon(1e-7));
    CHECK(tail_bound(200, 1.0 - 1.0 / std::sqrt(200.0)) ==
          Approx(tail_direct(200, 1.0 - 1.0 / std::sqrt(200.0))).epsilon(1e-12));
    CHECK(tail_bound(200, 1.0 - 1.0 / std::sqrt(200.0)) == Approx(0.0685).epsilon(2e-3));
    CHECK(tail_bound(100, 0.9) == Approx(1.0625).epsilon(1e-3));
    CHECK_THROWS_AS((void)tail_bound(0, 0.5), std::domain_error);
    CHECK_THROWS_AS((void)tail_bound(5, 1.0), std::domain_error);
}

TEST_CASE("tail bound is evaluable far past pow overflow") {
    const double v = tail_bound(5000000, 1.0 - 1.0 / std::sqrt(5000000.0));
    CHECK(std::isfinite(v));
    CHECK(v == 0.0); // underflows cleanly rather than producing NaN
}

TEST_CASE("block weight sum closed form") {
    for (long n : {1L, 2L, 7L, 20L}) {
        double direct = 0.0;
        for (long d = 1; d <= n; ++d) direct += 4.0 * double(d) * std::pow(2.0, double(d));
        CHECK(std::exp(log_block_weight_sum(n)) == Approx(direct).epsilon(1e-12));
    }
}

TEST_CASE("block cb bound") {
    CHECK(block_cb_bound(3, 0.0) == 7.0);
    CHECK(block_cb_bound(2, 0.5) == Approx(5.0 * 2.25).epsilon(1e-14));
}

TEST_CASE("plan picks the minimal cutoff") {
    for (double delta : {0.1, 0.01}) {
        const auto p = plan(delta);
        CHECK(p.tail_bound < delta);
        CHECK(p.block_error < delta);
        CHECK(p.r == Approx(1.0 - 1.0 / std::sqrt(double(p.n))).epsilon(1e-15));
        CHECK(tail_direct(p.n, 1.0 - 1.0 / std::sqrt(double(p.n))) < delta);
        CHECK(tail_direct(p.n - 1, 1.0 - 1.0 / std::sqrt(double(p.n - 1))) >= delta);
    }
}

TEST_CASE("plan for delta = 0.1 sits in the documented bracket") {
    const auto p = plan(0.1);
    CHECK(p.n > 100);
    CHECK(p.n < 200);
    CHECK(tail_direct(100, 0.9) > 0.1);
    CHECK(tail_direct(200, 1.0 - 1.0 / std::sqrt(200.0)) < 0.1);
}

TEST_CASE("stored bounds survive recomputation") {
    for (double delta : {0.1, 1e-3, 1e-6}) {
        const auto p = plan(delta);
        CHECK(p.eps > 0.0);
        const double tail_again = tail_bound(p.n, p.r);
        CHECK(std::abs(tail_again - p.tail_bound) <= 1e-12 * p.tail_bound);
        double weights = 0.0;
        if (p.n <= 900) {
            for (long d = 1; d <= p.n; ++d)
                weights += 4.0 * double(d) * std::pow(2.0, double(d));
            CHECK(std::abs(p.eps * weights - p.block_error) <= 1e-12 * p.block_error);
        }
        const double via_log = p.eps * std::exp(log_block_weight_sum(p.n));
        CHECK(std::abs(via_log - p.block_error) <= 1e-12 * p.block_error);
        CHECK(p.block_error == Approx(delta / 2.0).epsilon(1e-12));
    }
}

TEST_CASE("plan rejects out-of-range budgets") {
    CHECK_THROWS_AS((void)plan(0.0), std::domain_error);
    CHECK_THROWS_AS((void)plan(1.0), std::domain_error);
    CHECK_THROWS_AS((void)plan(-0.5), std::domain_error);
}

TEST_CASE("tail bound decreases past the turning point") {
    for (double r : {0.5, 0.9, 0.99}) {
        const long turn = static_cast<long>(std::ceil(-1.0 / std::log(r))) + 1;
        double prev = tail_bound(turn, r);
        for (long n = turn + 1; n <= turn + 300; ++n) {
            const double cur = tail_bound(n, r);
            CHECK(cur <= prev);
            prev = cur;
        }
    }
}

// Acceptance suite: one line per criterion, nonzero exit on any failure.

#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "core/fusion.hpp"
#include "core/multipliers.hpp"
#include "core/qspecial.hpp"
#include "core/schedule.hpp"
#include "core/structure.hpp"
#include "core/suq2.hpp"

using cplx = std::complex<double>;
using namespace qgm;

namespace {

struct Harness {
    bool all_ok = true;

    void criterion(int number, const std::string& title,
                   const std::function<bool(std::string&)>& body) {
        std::string detail;
        bool ok = false;
        try {
            ok = body(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        std::printf("[%s] criterion %2d: %s (%s)\n", ok ? "PASS" : "FAIL", number,
                    title.c_str(), detail.c_str());
        all_ok = all_ok && ok;
    }
};

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return buf;
}

double rel(cplx got, cplx want) {
    return std::abs(got - want) / std::max(std::abs(want), 1e-300);
}

// Shared grid for criteria 2 and 3: 20 seeded random points of the strip
// with |Re z| in [0.25, 0.9] so that degree 80 is inside the asymptotic
// regime of the ratio law, and |Im z| <= 2.
std::vector<cplx> strip_grid() {
    std::mt19937_64 rng(12345);
    std::uniform_real_distribution<double> mag(0.25, 0.9), im(-2.0, 2.0);
    std::uniform_int_distribution<int> coin(0, 1);
    std::vector<cplx> zs;
    for (int i = 0; i < 20; ++i)
        zs.emplace_back(mag(rng) * (coin(rng) ? 1.0 : -1.0), im(rng));
    return zs;
}

} // namespace

int main() {
    Harness h;

    h.criterion(1, "eigenvector certification", [](std::string& detail) {
        double worst_res = 0.0, worst_ev = 0.0;
        for (double qv : {0.2, 0.5, 0.8}) {
            const QParam q(qv);
            for (double t : {0.0, 0.3, 0.6, 0.9}) {
                worst_res = std::max(worst_res,
                                     suq2::eta_eigen_residual(q, t, 200).on_valid_rows);
                const auto eta = suq2::eta_vector(q, t, 200);
                const double want = std::pow(qv, t) + std::pow(qv, -t);
                worst_ev = std::max(worst_ev, std::abs(eta.eigenvalue.real() - want));
            }
        }
        detail = "residual " + fmt(worst_res) + " < 1e-10, eigenvalue err " +
                 fmt(worst_ev) + " < 1e-12";
        return worst_res < 1e-10 && worst_ev < 1e-12;
    });

    h.criterion(2, "holomorphic family identity", [](std::string& detail) {
        const QParam q(0.5);
        double worst_id = 0.0;
        for (const cplx& z : strip_grid()) {
            const auto th = suq2::theta_pair(q, z, 8, 300);
            for (long d = 0; d <= 8; ++d)
                worst_id = std::max(worst_id, rel(th.values[std::size_t(d)] / th.c_z,
                                                  mult::b_coeff(q, z, d)));
        }
        double worst_cr = 0.0;
        {
            std::mt19937_64 rng(777);
            std::uniform_real_distribution<double> re(-0.7, 0.7), im(-1.5, 1.5);
            const double step = 1e-4;
            const long d = 4;
            const auto f = [&](cplx z) {
                return suq2::theta_pair(q, z, d, 320).values[std::size_t(d)];
            };
            for (int i = 0; i < 20; ++i) {
                const cplx z0(re(rng), im(rng));
                const cplx dx = (f(z0 + step) - f(z0 - step)) / (2.0 * step);
                const cplx dy =
                    (f(z0 + cplx(0, step)) - f(z0 - cplx(0, step))) / (2.0 * step);
                worst_cr = std::max(worst_cr, 0.5 * std::abs(dx + cplx(0, 1) * dy));
            }
        }
        detail = "identity rel err " + fmt(worst_id) + " < 1e-8, CR residual " +
                 fmt(worst_cr) + " < 1e-6";
        return worst_id < 1e-8 && worst_cr < 1e-6;
    });

    h.criterion(3, "multiplier decay law", [](std::string& detail) {
        const QParam q(0.5);
        double worst = 0.0;
        int used = 0;
        for (const cplx& z : strip_grid()) {
            if (!(z.real() > 0.0)) continue;
            ++used;
            const double got =
                std::abs(mult::b_coeff(q, z, 81) / mult::b_coeff(q, z, 80));
            worst = std::max(worst, std::abs(got - mult::decay_rate(q, z)));
        }
        detail = "ratio-vs-rate err " + fmt(worst) + " < 1e-6 on " +
                 std::to_string(used) + " points";
        return used > 0 && worst < 1e-6;
    });

    h.criterion(4, "summability threshold", [](std::string& detail) {
        const QParam q(0.5);
        const double boundary = mult::summability_boundary(q, 3, 1e-6);
        const bool boundary_ok = std::abs(boundary - 1.0 / 3.0) < 1e-3;

        const auto conv = mult::summability_report(q, 0.29, 3, 160);
        bool conv_ok = conv.converges;
        for (std::size_t i = 1; i < conv.partial_sums.size(); ++i)
            conv_ok = conv_ok && conv.partial_sums[i] > conv.partial_sums[i - 1];
        // Cauchy with a geometric tail: late increments sit under the
        // geometric estimate started at d = 120.
        const double inc = conv.partial_sums[160] - conv.partial_sums[120];
        const double geo = conv.terms[120] * conv.limiting_ratio /
                           (1.0 - conv.limiting_ratio);
        conv_ok = conv_ok && inc <= geo;

        const auto div = mult::summability_report(q, 0.5, 3, 160);
        const bool div_ok = !div.converges && div.terms[160] > div.terms[80] &&
                            div.terms[160] > 1e6;

        detail = "boundary " + fmt(boundary) + " ~ 1/3, partial sums monotone with "
                 "geometric tail, terms diverge at t = 0.5";
        return boundary_ok && conv_ok && div_ok;
    });

    h.criterion(5, "operator relations", [](std::string& detail) {
        double worst = 0.0;
        for (double qv : {0.2, -0.2, 0.5, -0.5, 0.9, -0.9}) {
            const QParam q(qv);
            worst = std::max(worst, suq2::toeplitz_relation_residual(q, 128));
            worst = std::max(worst, suq2::unitary_row_residual(q, 128, 4));
        }
        detail = "max residual " + fmt(worst) + " < 1e-13";
        return worst < 1e-13;
    });

    h.criterion(6, "spectral interval", [](std::string& detail) {
        double worst_out = 0.0, worst_fill = 0.0;
        for (double qv : {0.3, 0.5, 0.7}) {
            const QParam q(qv);
            const auto ev = suq2::twisted_character_spectrum(q, 400);
            worst_out = std::max({worst_out, std::abs(ev.front()) - q.gauge(),
                                  std::abs(ev.back()) - q.gauge()});
            worst_fill = std::max(worst_fill, q.gauge() - ev.back());
        }
        detail = "containment excess " + fmt(worst_out) + " < 1e-9, endpoint gap " +
                 fmt(worst_fill) + " < 0.05";
        return worst_out < 1e-9 && worst_fill < 0.05;
    });

    h.criterion(7, "fusion homomorphisms", [](std::string& detail) {
        std::mt19937_64 rng(4242);
        const QParam q(0.5);
        std::uniform_int_distribution<long> deg(0, 12);
        double worst_q = 0.0;
        long classical_bad = 0;
        for (int i = 0; i < 200; ++i) {
            const fusion::SpinLabel a{deg(rng)}, b{deg(rng)};
            const auto f = fusion::fuse(a, b);
            worst_q = std::max(worst_q, rel(fusion::qdim(f, q),
                                            fusion::qdim(a, q) * fusion::qdim(b, q)));
            long long total = 0;
            for (const auto& [l, m] : f.terms()) total += m * fusion::dim(l);
            if (total != static_cast<long long>(fusion::dim(a)) * fusion::dim(b))
                ++classical_bad;
        }
        const auto rand_word = [&](long maxlen) {
            std::string w;
            const long len = std::uniform_int_distribution<long>(0, maxlen)(rng);
            for (long i = 0; i < len; ++i)
                w.push_back(std::uniform_int_distribution<int>(0, 1)(rng) ? 'a' : 'b');
            return fusion::FreeWord(w);
        };
        long assoc_bad = 0, unit_bad = 0;
        for (int i = 0; i < 100; ++i) {
            const auto w = rand_word(3), v = rand_word(3), u = rand_word(3);
            fusion::FusionElement<fusion::FreeWord> uu, ww;
            uu.add(u, 1);
            ww.add(w, 1);
            if (!(fusion::fuse(fusion::fuse(w, v), uu) ==
                  fusion::fuse(ww, fusion::fuse(v, u))))
                ++assoc_bad;
            if (fusion::fuse(w, fusion::bar(w)).multiplicity(fusion::FreeWord()) != 1)
                ++unit_bad;
        }
        detail = "qdim rel err " + fmt(worst_q) + " < 1e-9; classical/assoc/unit "
                 "violations " + std::to_string(classical_bad + assoc_bad + unit_bad);
        return worst_q < 1e-9 && classical_bad == 0 && assoc_bad == 0 && unit_bad == 0;
    });

    h.criterion(8, "structural criteria", [](std::string& detail) {
        long verdict_bad = 0;
        for (long n = 2; n <= 10; ++n) {
            const auto v = structure::noninjectivity_check(
                structure::profile(Eigen::MatrixXcd::Identity(n, n)));
            if (v.noninjective != (n >= 3)) ++verdict_bad;
        }

        Eigen::MatrixXcd f(2, 2);
        f.setZero();
        f(0, 0) = std::sqrt(2.0);
        f(1, 1) = 1.0 / std::sqrt(2.0);
        const auto gens = structure::profile(f).sd_generators;
        bool sd_ok = gens.size() == 2 && std::abs(gens[0] - 0.25) < 1e-12 &&
                     std::abs(gens[1] - 4.0) < 1e-12;
        sd_ok = sd_ok && structure::subgroup_member({4.0}, 16.0, 2) &&
                !structure::subgroup_member({4.0}, 2.0, 5) &&
                structure::subgroup_member({2.0, 3.0}, 12.0, 3);

        std::mt19937_64 rng(99);
        std::uniform_real_distribution<double> u(-1.0, 1.0);
        const auto rand_unitary = [&](long n) {
            Eigen::MatrixXcd g(n, n);
            for (long i = 0; i < n; ++i)
                for (long j = 0; j < n; ++j) g(i, j) = cplx(u(rng), u(rng));
            return Eigen::MatrixXcd(
                Eigen::HouseholderQR<Eigen::MatrixXcd>(g).householderQ());
        };
        Eigen::MatrixXcd base(3, 3);
        base.setZero();
        base(0, 0) = 2.0;
        base(1, 1) = cplx(0.0, 1.0);
        base(2, 2) = 0.5;
        const double q0 = structure::profile(base).q_param;
        double worst_inv = 0.0;
        for (int i = 0; i < 50; ++i) {
            const Eigen::MatrixXcd g =
                std::exp(u(rng)) * (rand_unitary(3) * base * rand_unitary(3));
            worst_inv = std::max(worst_inv, std::abs(structure::profile(g).q_param - q0));
        }

        detail = "verdict violations " + std::to_string(verdict_bad) +
                 ", sd examples ok, q drift " + fmt(worst_inv) + " < 1e-9";
        return verdict_bad == 0 && sd_ok && worst_inv < 1e-9;
    });

    h.criterion(9, "free-product truncation scheduler", [](std::string& detail) {
        const auto p = schedule::plan(0.1);
        const auto direct = [](long n) {
            const double r = 1.0 - 1.0 / std::sqrt(double(n));
            return 4.0 * double(n) * std::pow(r, double(n)) / ((1.0 - r) * (1.0 - r));
        };
        const bool minimal = direct(p.n) < 0.1 && direct(p.n - 1) >= 0.1;
        const bool bracket = std::abs(direct(200) - 0.0685) < 1e-3 &&
                             std::abs(direct(100) - 1.06) < 1e-2;
        const double tail_re = std::abs(schedule::tail_bound(p.n, p.r) - p.tail_bound);
        double weights = 0.0;
        for (long d = 1; d <= p.n; ++d)
            weights += 4.0 * double(d) * std::pow(2.0, double(d));
        const double block_re = std::abs(p.eps * weights - p.block_error);
        const bool recompute = tail_re <= 1e-12 * p.tail_bound &&
                               block_re <= 1e-12 * p.block_error;
        detail = "N = " + std::to_string(p.n) + " minimal, bracket at 100/200 matches, "
                 "bounds recompute to 1e-12";
        return minimal && bracket && recompute;
    });

    h.criterion(10, "cross-route multiplier equivalence", [](std::string& detail) {
        double worst = 0.0;
        for (double qv : {0.5, 0.9}) {
            const QParam q(qv);
            for (double t : {0.1, 0.5, 0.9})
                for (long d = 0; d <= 600; ++d)
                    worst = std::max(worst, rel(mult::b_coeff(q, cplx(t, 0.0), d),
                                                mult::b_coeff_recurrence(q, t, d)));
        }
        detail = "reduced vs recurrence rel err " + fmt(worst) + " < 1e-12";
        return worst < 1e-12;
    });

    return h.all_ok ? 0 : 1;
}

#include "core/verify.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>

#include "core/fusion.hpp"
#include "core/multipliers.hpp"
#include "core/qspecial.hpp"
#include "core/schedule.hpp"
#include "core/structure.hpp"
#include "core/suq2.hpp"

namespace qgm::verify {

namespace {

using cplx = std::complex<double>;

struct Suite {
    std::vector<CheckResult> results;
    std::mt19937_64 rng;

    explicit Suite(std::uint64_t seed) : rng(seed) {}

    void add(std::string name, double residual, double tolerance) {
        results.push_back(CheckResult{std::move(name), residual, tolerance,
                                      residual <= tolerance});
    }

    double uniform(double lo, double hi) {
        return std::uniform_real_distribution<double>(lo, hi)(rng);
    }
    long uniform_int(long lo, long hi) {
        return std::uniform_int_distribution<long>(lo, hi)(rng);
    }
};

double rel_err(cplx got, cplx want) {
    const double scale = std::max(std::abs(want), 1e-300);
    return std::abs(got - want) / scale;
}

void check_qspecial(Suite& s) {
    using namespace qgm::qspecial;

    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const long d = s.uniform_int(0, 60);
        const double mod = std::exp(s.uniform(std::log(0.1), std::log(10.0)));
        const double arg = s.uniform(0.0, 2.0 * M_PI);
        const cplx y = std::polar(mod, arg);
        if (std::abs(y - 1.0) < 0.05 || std::abs(y + 1.0) < 0.05) continue;
        const cplx x = y + 1.0 / y;
        worst = std::max(worst, rel_err(chebyshev_mu(d, x), chebyshev_mu_closed(d, y)));
    }
    s.add("chebyshev recurrence vs closed form", worst, 1e-10);

    worst = 0.0;
    for (long d = 0; d <= 50; ++d)
        worst = std::max(worst, std::abs(chebyshev_mu(d, 2.0) - double(d + 1)));
    s.add("chebyshev integer law mu_d(2) = d+1", worst, 0.0);

    worst = 0.0;
    for (int i = 0; i < 50; ++i) {
        const long a = s.uniform_int(0, 12), b = s.uniform_int(0, 12);
        for (int j = 0; j < 20; ++j) {
            const double x = s.uniform(-2.2, 2.7);
            double sum = 0.0;
            for (long c = std::labs(a - b); c <= a + b; c += 2)
                sum += chebyshev_mu(c, x);
            const double prod = chebyshev_mu(a, x) * chebyshev_mu(b, x);
            worst = std::max(worst, std::abs(prod - sum) / std::max(1.0, std::abs(prod)));
        }
    }
    s.add("chebyshev product rule", worst, 1e-9);

    worst = 0.0;
    for (int i = 0; i < 300; ++i) {
        const long n = s.uniform_int(0, 40);
        const double x = s.uniform(2.0, 10.0);
        const double q = s.uniform(0.05, 0.95);
        worst = std::max(worst, rel_err(q_hermite_sum(n, x, q), q_hermite(n, x, q)));
    }
    s.add("q-hermite sum vs recurrence", worst, 1e-10);

    worst = 0.0;
    for (int i = 0; i < 200; ++i) {
        const long n = s.uniform_int(0, 30);
        const long k = s.uniform_int(0, n);
        const double q = s.uniform(-0.95, 0.95);
        if (q == 0.0) continue;
        worst = std::max(worst, std::abs(q_binomial(n, k, q) - q_binomial(n, n - k, q)));
    }
    s.add("q-binomial symmetry", worst, 0.0);
}

void check_operator_relations(Suite& s) {
    using namespace qgm::suq2;
    const double qs[] = {0.2, -0.2, 0.5, -0.5, 0.9, -0.9};
    double worst_t = 0.0, worst_u = 0.0;
    for (double qv : qs) {
        const QParam q(qv);
        worst_t = std::max(worst_t, toeplitz_relation_residual(q, 128));
        worst_u = std::max(worst_u, unitary_row_residual(q, 32, 4));
    }
    s.add("toeplitz commutation relation", worst_t, 1e-13);
    s.add("unitary corepresentation row relation", worst_u, 1e-13);
}

void check_eta(Suite& s) {
    using namespace qgm::suq2;

    double worst_res = 0.0, worst_ev = 0.0;
    for (double qv : {0.2, 0.5, 0.8}) {
        const QParam q(qv);
        for (double t : {0.0, 0.3, 0.6, 0.9}) {
            const auto r = eta_eigen_residual(q, t, 200);
            worst_res = std::max(worst_res, r.on_valid_rows);
            const EtaVector eta = eta_vector(q, t, 200);
            const double want = std::pow(qv, t) + std::pow(qv, -t);
            worst_ev = std::max(worst_ev, std::abs(eta.eigenvalue.real() - want));
        }
    }
    s.add("eta eigen-residual on valid rows", worst_res, 1e-10);
    s.add("eta eigenvalue closed form", worst_ev, 1e-12);

    // Full-truncation residual tracks the coefficient tail: doubling the
    // truncation shrinks it by at least 10x until the double floor.
    {
        const QParam q(0.8);
        double prev = eta_eigen_residual(q, 0.5, 50).full;
        double worst_ratio = 0.0;
        for (long n : {100L, 200L}) {
            const double cur = eta_eigen_residual(q, 0.5, n).full;
            if (prev > 1e-13) worst_ratio = std::max(worst_ratio, cur / prev);
            prev = cur;
        }
        s.add("eta residual scales with tail", worst_ratio, 0.1);
    }

    double worst_pos = 0.0, worst_im = 0.0;
    for (double qv : {0.1, 0.4, 0.7, 0.95}) {
        const QParam q(qv);
        for (double t : {0.0, 0.3, 0.95}) {
            const EtaVector eta = eta_vector(q, t, 201);
            for (const cplx& p : eta.coeffs) {
                worst_pos = std::max(worst_pos, -p.real());
                worst_im = std::max(worst_im, std::abs(p.imag()));
            }
        }
    }
    s.add("eta coefficient positivity for real t", std::max(worst_pos, worst_im), 0.0);

    double worst_conj = 0.0;
    for (int i = 0; i < 100; ++i) {
        const QParam q(s.uniform(0.1, 0.9));
        const cplx z(s.uniform(-0.9, 0.9), s.uniform(-2.0, 2.0));
        const EtaVector a = eta_vector(q, std::conj(z), 64);
        const EtaVector b = eta_vector(q, z, 64);
        for (std::size_t n = 0; n < a.coeffs.size(); ++n)
            worst_conj = std::max(worst_conj,
                                  std::abs(a.coeffs[n] - std::conj(b.coeffs[n])));
    }
    s.add("eta conjugation symmetry", worst_conj, 0.0);

    double worst_maj = 0.0;
    for (double qv : {0.3, 0.6, 0.9}) {
        const QParam q(qv);
        for (double t : {0.0, 0.45, 0.9}) {
            const EtaVector eta = eta_vector(q, t, 150);
            for (long n = 0; n < 150; ++n) {
                const double bound = eta_coefficient_majorant(q, t, n);
                worst_maj = std::max(worst_maj,
                                     std::abs(eta.coeffs[std::size_t(n)]) - bound);
            }
        }
    }
    s.add("eta coefficient majorant", worst_maj, 0.0);
}

void check_theta(Suite& s) {
    using namespace qgm::suq2;
    const QParam q(0.5);

    // Shared sample for the identity and the decay law. Re z stays away
    // from 0 so that degree 80 is already in the asymptotic regime of
    // the ratio test below.
    std::vector<cplx> zs;
    for (int i = 0; i < 20; ++i) {
        const double re = s.uniform(0.25, 0.9) * (s.uniform_int(0, 1) ? 1.0 : -1.0);
        zs.emplace_back(re, s.uniform(-2.0, 2.0));
    }

    double worst_id = 0.0;
    for (const cplx& z : zs) {
        const ThetaFunctional th = theta_pair(q, z, 8, 300);
        for (long d = 0; d <= 8; ++d)
            worst_id = std::max(
                worst_id, rel_err(th.values[std::size_t(d)] / th.c_z,
                                  qgm::mult::b_coeff(q, z, d)));
    }
    s.add("theta functional matches multiplier coefficients", worst_id, 1e-8);

    s.add("theta at d = 0 returns c_z", [&] {
        double worst = 0.0;
        for (const cplx& z : {cplx(0.4, 0.0), cplx(-0.3, 1.2), cplx(0.1, -1.9)}) {
            const ThetaFunctional th = theta_pair(q, z, 4, 300);
            worst = std::max(worst, std::abs(th.values[0] - th.c_z));
        }
        return worst;
    }(), 0.0);

    // Centered Cauchy-Riemann difference of z -> theta_z(d).
    double worst_cr = 0.0;
    const double h = 1e-4;
    const long d_probe = 4;
    const auto value_at = [&](cplx z) {
        return theta_pair(q, z, d_probe, 320).values[std::size_t(d_probe)];
    };
    for (int i = 0; i < 20; ++i) {
        const cplx z0(s.uniform(-0.7, 0.7), s.uniform(-1.5, 1.5));
        const cplx dx = (value_at(z0 + h) - value_at(z0 - h)) / (2.0 * h);
        const cplx dy = (value_at(z0 + cplx(0, h)) - value_at(z0 - cplx(0, h))) / (2.0 * h);
        worst_cr = std::max(worst_cr, 0.5 * std::abs(dx + cplx(0, 1) * dy));
    }
    s.add("theta holomorphy (Cauchy-Riemann)", worst_cr, 1e-6);

    double worst_rate = 0.0;
    for (const cplx& z : zs) {
        if (!(z.real() > 0.0)) continue;
        const double got = std::abs(qgm::mult::b_coeff(q, z, 81) /
                                    qgm::mult::b_coeff(q, z, 80));
        worst_rate = std::max(worst_rate, std::abs(got - qgm::mult::decay_rate(q, z)));
    }
    s.add("multiplier decay-rate ratio at d = 80", worst_rate, 1e-6);
}

void check_spectrum(Suite& s) {
    using namespace qgm::suq2;
    double worst_out = 0.0, worst_fill = 0.0;
    for (double qv : {0.3, 0.5, 0.7}) {
        const QParam q(qv);
        const auto ev = twisted_character_spectrum(q, 400);
        const double top = std::max(std::abs(ev.front()), std::abs(ev.back()));
        worst_out = std::max(worst_out, top - q.gauge());
        worst_fill = std::max(worst_fill, q.gauge() - ev.back());
    }
    s.add("twisted character spectrum containment", worst_out, 1e-9);
    s.add("twisted character spectrum fills the interval", worst_fill, 0.05);
}

void check_multipliers(Suite& s) {
    using namespace qgm::mult;

    double worst = 0.0;
    for (double qv : {0.2, 0.5, 0.9}) {
        const QParam q(qv);
        worst = std::max(worst, std::abs(b_coeff(q, 0.37, 0) - 1.0));
        for (long d : {1L, 5L, 40L}) {
            worst = std::max(worst, std::abs(b_coeff(q, 1.0, d) - 1.0));
            worst = std::max(worst, std::abs(b_coeff(q, -1.0, d) - 1.0));
        }
    }
    s.add("multiplier normalization b_0 = b_d(+-1) = 1", worst, 1e-12);

    double worst_bound = 0.0, worst_mono = 0.0, worst_even = 0.0;
    for (double qv : {0.3, 0.6, 0.9}) {
        const QParam q(qv);
        for (long d : {1L, 7L, 33L, 100L}) {
            double prev = 0.0;
            for (int i = 0; i <= 40; ++i) {
                const double t = 0.9999 * double(i) / 40.0;
                const double b = b_coeff(q, t, d);
                worst_bound = std::max({worst_bound, -b, b - 1.0});
                if (i > 0) worst_mono = std::max(worst_mono, prev - b);
                prev = b;
                worst_even = std::max(worst_even, std::abs(b - b_coeff(q, -t, d)));
            }
        }
    }
    s.add("multiplier coefficients in (0, 1] for real t", worst_bound, 1e-12);
    s.add("multiplier monotone increasing in t", worst_mono, 1e-12);
    s.add("multiplier evenness in t", worst_even, 0.0);

    double worst_routes = 0.0;
    for (double qv : {0.5, 0.9}) {
        const QParam q(qv);
        for (double t : {0.1, 0.5, 0.9})
            for (long d = 0; d <= 600; d += 7)
                worst_routes = std::max(
                    worst_routes,
                    rel_err(b_coeff(q, cplx(t, 0.0), d), b_coeff_recurrence(q, t, d)));
    }
    s.add("multiplier reduced ratio vs recurrence ratio", worst_routes, 1e-12);

    // Per-degree slope of log b_d against the decay exponent.
    double worst_slope = 0.0;
    for (double qv : {0.2, 0.5}) {
        const QParam q(qv);
        for (double t : {0.25, 0.5, 0.75, 0.9}) {
            const double slope = std::log(b_coeff(q, t, 81)) - std::log(b_coeff(q, t, 80));
            worst_slope = std::max(worst_slope,
                                   std::abs(slope - (1.0 - t) * std::log(qv)));
        }
    }
    s.add("multiplier log-decay slope at d = 80", worst_slope, 1e-4);

    double worst_boundary = 0.0;
    for (long power : {3L, 4L, 5L}) {
        const double got = summability_boundary(QParam(0.5), power, 1e-6);
        worst_boundary = std::max(worst_boundary,
                                  std::abs(got - (1.0 - 2.0 / double(power))));
    }
    s.add("summability boundary at t = 1 - 2/power", worst_boundary, 1e-3);

    {
        const QParam q(0.5);
        const auto conv = summability_report(q, 0.29, 3, 120);
        const auto div = summability_report(q, 0.5, 3, 120);
        double bad = 0.0;
        if (!conv.converges || div.converges) bad = 1.0;
        // Convergent side: terms eventually follow the geometric ratio.
        const double tail_ratio = conv.terms[110] / conv.terms[100];
        if (std::abs(std::pow(tail_ratio, 0.1) - conv.limiting_ratio) > 1e-3) bad = 1.0;
        // Divergent side: the term sequence blows up.
        if (!(div.terms[110] > 1e3 * div.terms[10])) bad = 1.0;
        s.add("summability verdicts at t = 0.29 and t = 0.5", bad, 0.0);
    }

    {
        const QParam q(0.5);
        double bad = 0.0;
        for (double eps : {1e-3, 1e-6}) {
            const auto tr = truncate_multiplier(q, 0.29, 3, eps);
            if (!(tr.cb_error_bound < eps)) bad = 1.0;
            // Direct summation of the dropped terms must sit below the bound.
            double direct = 0.0;
            for (long d = tr.d_cut + 1; d <= tr.d_cut + 4000; ++d)
                direct += cb_budget(q, 0.29, 3, d).term;
            if (!(direct < tr.cb_error_bound)) bad = 1.0;
        }
        if (!(truncate_multiplier(q, 0.1, 3, 1e-3).d_cut <
              truncate_multiplier(q, 0.29, 3, 1e-3).d_cut))
            bad = 1.0;
        s.add("multiplier truncation certificate", bad, 0.0);
    }
}

void check_fusion(Suite& s) {
    using namespace qgm::fusion;

    double worst_q = 0.0;
    double worst_cl = 0.0;
    const QParam q(0.5);
    for (int i = 0; i < 200; ++i) {
        const SpinLabel a{s.uniform_int(0, 12)}, b{s.uniform_int(0, 12)};
        const auto f = fuse(a, b);
        worst_q = std::max(worst_q, rel_err(qdim(f, q), qdim(a, q) * qdim(b, q)));
        long long dims = 0;
        for (const auto& [l, m] : f.terms()) dims += m * dim(l);
        worst_cl = std::max(worst_cl, std::abs(double(dims - dim(a) * dim(b))));
    }
    s.add("spin fusion: quantum dimension homomorphism", worst_q, 1e-9);
    s.add("spin fusion: classical dimension homomorphism", worst_cl, 0.0);

    const auto random_word = [&](long maxlen) {
        std::string w;
        const long len = s.uniform_int(0, maxlen);
        for (long i = 0; i < len; ++i) w.push_back(s.uniform_int(0, 1) ? 'a' : 'b');
        return FreeWord(w);
    };

    double worst_wq = 0.0;
    for (int i = 0; i < 200; ++i) {
        const FreeWord w = random_word(4), v = random_word(4);
        worst_wq = std::max(worst_wq,
                            rel_err(qdim(fuse(w, v), q), qdim(w, q) * qdim(v, q)));
    }
    s.add("word fusion: quantum dimension homomorphism", worst_wq, 1e-9);

    double assoc_bad = 0.0;
    for (int i = 0; i < 100; ++i) {
        const FreeWord w = random_word(3), v = random_word(3), u = random_word(3);
        FusionElement<FreeWord> lhs_in;
        lhs_in.add(u, 1);
        FusionElement<FreeWord> rhs_in;
        rhs_in.add(w, 1);
        if (!(fuse(fuse(w, v), lhs_in) == fuse(rhs_in, fuse(v, u)))) assoc_bad += 1.0;
    }
    s.add("word fusion associativity", assoc_bad, 0.0);

    double unit_bad = 0.0;
    for (int i = 0; i < 100; ++i) {
        const FreeWord w = random_word(4);
        if (fuse(w, bar(w)).multiplicity(FreeWord()) != 1) unit_bad += 1.0;
    }
    s.add("word fusion: unit appears once in w * bar(w)", unit_bad, 0.0);
}

Eigen::MatrixXcd random_unitary(Suite& s, long n) {
    Eigen::MatrixXcd g(n, n);
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j)
            g(i, j) = cplx(s.uniform(-1.0, 1.0), s.uniform(-1.0, 1.0));
    return Eigen::HouseholderQR<Eigen::MatrixXcd>(g).householderQ();
}

void check_structure(Suite& s) {
    using namespace qgm::structure;

    double worst_idem = 0.0;
    for (int i = 0; i < 20; ++i) {
        Eigen::MatrixXcd f(3, 3);
        for (long r = 0; r < 3; ++r)
            for (long c = 0; c < 3; ++c)
                f(r, c) = cplx(s.uniform(-2.0, 2.0), s.uniform(-2.0, 2.0));
        f += 4.0 * Eigen::MatrixXcd::Identity(3, 3);
        const auto p1 = profile(f);
        const auto p2 = profile(p1.F);
        worst_idem = std::max(worst_idem, std::abs(p1.q_param - p2.q_param));
    }
    s.add("profile rescale idempotence", worst_idem, 1e-12);

    double worst_inv = 0.0;
    {
        Eigen::MatrixXcd f(3, 3);
        f.setZero();
        f(0, 0) = 2.0;
        f(1, 1) = cplx(0.0, 1.0);
        f(2, 2) = 0.5;
        const double q0 = profile(f).q_param;
        for (int i = 0; i < 50; ++i) {
            const double lambda = std::exp(s.uniform(-1.0, 1.0));
            const Eigen::MatrixXcd g =
                lambda * (random_unitary(s, 3) * f * random_unitary(s, 3));
            worst_inv = std::max(worst_inv, std::abs(profile(g).q_param - q0));
        }
    }
    s.add("q extraction invariant under lambda V F W", worst_inv, 1e-9);

    double crit_bad = 0.0;
    for (long n = 2; n <= 10; ++n) {
        const auto v = noninjectivity_check(
            profile(Eigen::MatrixXcd::Identity(n, n)));
        if (v.noninjective != (n >= 3)) crit_bad += 1.0;
    }
    s.add("noninjectivity criterion on identity matrices", crit_bad, 0.0);

    {
        Eigen::MatrixXcd f(2, 2);
        f.setZero();
        f(0, 0) = std::sqrt(2.0);
        f(1, 1) = 1.0 / std::sqrt(2.0);
        const auto p = profile(f);
        double bad = 0.0;
        if (p.sd_generators.size() != 2) bad = 1.0;
        else if (std::abs(p.sd_generators[0] - 0.25) > 1e-12 ||
                 std::abs(p.sd_generators[1] - 4.0) > 1e-12) bad = 1.0;
        if (!subgroup_member({4.0}, 16.0, 2)) bad = 1.0;
        if (subgroup_member({4.0}, 2.0, 5)) bad = 1.0;
        if (!subgroup_member({2.0, 3.0}, 12.0, 3)) bad = 1.0;
        s.add("sd generators and subgroup membership", bad, 0.0);
    }
}

void check_schedule(Suite& s) {
    using namespace qgm::schedule;

    double bad = 0.0;
    double worst_recompute = 0.0;
    for (double delta : {0.1, 0.01}) {
        const auto plan_out = plan(delta);
        const double at_n = tail_bound(plan_out.n, 1.0 - 1.0 / std::sqrt(double(plan_out.n)));
        const double at_prev =
            tail_bound(plan_out.n - 1, 1.0 - 1.0 / std::sqrt(double(plan_out.n - 1)));
        if (!(at_n < delta) || !(at_prev >= delta)) bad = 1.0;
        const double recomputed = plan_out.eps * std::exp(log_block_weight_sum(plan_out.n));
        worst_recompute = std::max(
            worst_recompute,
            std::abs(recomputed - plan_out.block_error) / plan_out.block_error);
        if (!(plan_out.eps > 0.0) || !(plan_out.block_error < delta)) bad = 1.0;
    }
    s.add("schedule cutoff minimality", bad, 0.0);
    s.add("schedule block error recomputation", worst_recompute, 1e-12);

    double worst_mono = 0.0;
    for (double r : {0.5, 0.9}) {
        const long turn = static_cast<long>(std::ceil(-1.0 / std::log(r))) + 1;
        double prev = tail_bound(turn, r);
        for (long n = turn + 1; n <= turn + 200; ++n) {
            const double cur = tail_bound(n, r);
            worst_mono = std::max(worst_mono, cur - prev);
            prev = cur;
        }
    }
    s.add("schedule tail bound monotone past turning point", worst_mono, 0.0);
}

} // namespace

std::vector<CheckResult> run_all(std::uint64_t seed) {
    Suite s(seed);
    check_qspecial(s);
    check_operator_relations(s);
    check_eta(s);
    check_theta(s);
    check_spectrum(s);
    check_multipliers(s);
    check_fusion(s);
    check_structure(s);
    check_schedule(s);
    return std::move(s.results);
}

} // namespace qgm::verify

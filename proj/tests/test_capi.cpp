// Exercises the shared-library surface through the public C header only.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstring>
#include <string>
#include <vector>

#include "qgmult/qgmult.h"

using doctest::Approx;

TEST_CASE("status names and version") {
    CHECK(std::string(qgm_status_name(QGM_OK)) == "ok");
    CHECK(std::string(qgm_version()).size() > 0);
}

TEST_CASE("special function calls") {
    double re = 0, im = 0;
    REQUIRE(qgm_chebyshev_mu(3, 2.0, 0.0, &re, &im) == QGM_OK);
    CHECK(re == 4.0);
    CHECK(im == 0.0);

    REQUIRE(qgm_q_pochhammer(0.5, 0.0, 0.5, 2, &re, &im) == QGM_OK);
    CHECK(re == Approx(0.375));

    double v = 0;
    REQUIRE(qgm_q_binomial(2, 1, 0.25, &v) == QGM_OK);
    CHECK(v == Approx(1.25));
    CHECK(qgm_q_binomial(2, 3, 0.25, &v) == QGM_ERR_DOMAIN);
    CHECK(std::string(qgm_last_error()).find("q_binomial") != std::string::npos);

    REQUIRE(qgm_q_hermite(2, 3.0, 0.0, 0.5, &re, &im) == QGM_OK);
    CHECK(re == Approx(3.0 * 3.0 + 0.5 - 1.0));
}

TEST_CASE("error mapping") {
    double re, im;
    CHECK(qgm_b_coeff(1.5, 0.3, 0.0, 2, &re, &im) == QGM_ERR_DOMAIN); // bad q
    CHECK(qgm_b_coeff(0.5, 1.5, 0.0, 2, &re, &im) == QGM_ERR_DOMAIN); // outside strip
    CHECK(qgm_chebyshev_mu(2, 1.0, 0.0, nullptr, &im) == QGM_ERR_INVALID_ARGUMENT);

    qgm_eta* eta = nullptr;
    CHECK(qgm_eta_compute(0.5, 0.3, 0.0, 2, &eta) == QGM_ERR_INVALID_ARGUMENT);
}

TEST_CASE("multiplier surface") {
    double re = 0, im = 0;
    REQUIRE(qgm_b_coeff(0.5, 0.0, 0.0, 3, &re, &im) == QGM_OK);
    CHECK(re == Approx(4.0 / 10.625).epsilon(1e-12));
    CHECK(im == 0.0);

    double rate = 0;
    REQUIRE(qgm_decay_rate(0.5, 0.5, 0.0, &rate) == QGM_OK);
    CHECK(rate == Approx(std::pow(0.5, 0.5)).epsilon(1e-14));

    qgm_summability* sum = nullptr;
    REQUIRE(qgm_summability_run(0.5, 0.29, 3, 40, &sum) == QGM_OK);
    CHECK(qgm_summability_count(sum) == 41);
    CHECK(qgm_summability_converges(sum) == 1);
    CHECK(qgm_summability_limiting_ratio(sum) == Approx(std::pow(0.5, 0.13)));
    CHECK(qgm_summability_term(sum, 0) == Approx(1.0));
    CHECK(qgm_summability_partial_sum(sum, 40) > qgm_summability_partial_sum(sum, 39));
    qgm_summability_free(sum);

    long d_cut = -1;
    double bound = 0;
    REQUIRE(qgm_truncate_multiplier(0.5, 0.29, 3, 1e-6, &d_cut, &bound) == QGM_OK);
    CHECK(d_cut > 0);
    CHECK(bound < 1e-6);
    CHECK(qgm_truncate_multiplier(0.5, 0.5, 3, 1e-6, &d_cut, &bound) == QGM_ERR_DOMAIN);
}

TEST_CASE("eta and theta handles") {
    qgm_eta* eta = nullptr;
    REQUIRE(qgm_eta_compute(0.5, 0.3, 0.0, 200, &eta) == QGM_OK);
    CHECK(qgm_eta_dim(eta) == 200);

    double re = 0, im = 0;
    REQUIRE(qgm_eta_coeff(eta, 0, &re, &im) == QGM_OK);
    CHECK(re == 1.0);
    REQUIRE(qgm_eta_eigenvalue(eta, &re, &im) == QGM_OK);
    CHECK(re == Approx(std::pow(0.5, 0.3) + std::pow(0.5, -0.3)).epsilon(1e-14));
    CHECK(qgm_eta_residual_valid_rows(eta) < 1e-10);
    CHECK(qgm_eta_residual_full(eta) < 1e-10);
    CHECK(qgm_eta_tail_bound(eta) < 1e-12);
    CHECK(qgm_eta_coeff(eta, 500, &re, &im) == QGM_ERR_INVALID_ARGUMENT);
    qgm_eta_free(eta);

    qgm_theta* th = nullptr;
    REQUIRE(qgm_theta_compute(0.5, 0.4, 0.0, 6, 300, &th) == QGM_OK);
    CHECK(qgm_theta_count(th) == 7);
    double cre = 0, cim = 0, tre = 0, tim = 0;
    qgm_theta_c_z(th, &cre, &cim);
    qgm_theta_value(th, 0, &tre, &tim);
    CHECK(tre == cre);
    qgm_theta_value(th, 6, &tre, &tim);
    double bre = 0, bim = 0;
    qgm_b_coeff(0.5, 0.4, 0.0, 6, &bre, &bim);
    CHECK(tre / cre == Approx(bre).epsilon(1e-8));
    qgm_theta_free(th);

    long need = 0;
    REQUIRE(qgm_theta_min_truncation(0.5, 0.4, 0.0, 6, &need) == QGM_OK);
    CHECK(need > 6);
    CHECK(qgm_theta_compute(0.5, 0.4, 0.0, 6, need - 1, &th) == QGM_ERR_INVALID_ARGUMENT);
}

TEST_CASE("spectrum and relation residuals") {
    std::vector<double> ev(400);
    REQUIRE(qgm_twisted_character_spectrum(0.5, 400, ev.data(), 400) == QGM_OK);
    CHECK(ev.back() <= 2.5 + 1e-9);
    CHECK(ev.back() >= 2.49);
    CHECK(qgm_twisted_character_spectrum(0.5, 400, ev.data(), 100) ==
          QGM_ERR_INVALID_ARGUMENT);

    double r = 0;
    REQUIRE(qgm_toeplitz_residual(-0.9, 128, &r) == QGM_OK);
    CHECK(r < 1e-13);
    REQUIRE(qgm_unitary_row_residual(0.5, 32, 4, &r) == QGM_OK);
    CHECK(r < 1e-13);
}

TEST_CASE("fusion surface") {
    qgm_fusion* f = nullptr;
    REQUIRE(qgm_fuse_spins(2, 3, &f) == QGM_OK);
    CHECK(qgm_fusion_count(f) == 3);
    char label[64];
    long long mult = 0;
    REQUIRE(qgm_fusion_term(f, 0, label, sizeof label, &mult) == QGM_OK);
    CHECK(std::string(label) == "1");
    CHECK(mult == 1);
    qgm_fusion_free(f);

    REQUIRE(qgm_fuse_words("a", "b", &f) == QGM_OK);
    CHECK(qgm_fusion_count(f) == 2);
    REQUIRE(qgm_fusion_term(f, 0, label, sizeof label, &mult) == QGM_OK);
    CHECK(std::string(label).empty()); // the unit
    qgm_fusion_free(f);

    CHECK(qgm_fuse_words("ax", "b", &f) == QGM_ERR_INVALID_ARGUMENT);

    double v = 0;
    REQUIRE(qgm_qdim_spin(1, 0.5, &v) == QGM_OK);
    CHECK(v == Approx(2.5));
    REQUIRE(qgm_qdim_word("ab", 0.5, &v) == QGM_OK);
    CHECK(v == Approx(5.25));

    qgm_dim_table* dt = nullptr;
    REQUIRE(qgm_dim_table_compute(0.5, 4, 6, &dt) == QGM_OK);
    CHECK(qgm_dim_table_count(dt) == 7);
    CHECK(qgm_dim_table_diverges(dt) == 1);
    CHECK(qgm_dim_table_dim(dt, 1) == Approx(4.0));
    CHECK(qgm_dim_table_dim_q(dt, 1) == Approx(2.5));
    CHECK(qgm_dim_table_char_state(dt, 1) == Approx(16.0 / 2.5));
    qgm_dim_table_free(dt);
}

TEST_CASE("structure surface") {
    // F = I_4 passed as interleaved complex
    std::vector<double> flat(2 * 16, 0.0);
    for (int i = 0; i < 4; ++i) flat[2 * (i * 4 + i)] = 1.0;
    qgm_fprofile* p = nullptr;
    REQUIRE(qgm_profile_compute(4, flat.data(), &p) == QGM_OK);
    CHECK(qgm_profile_n(p) == 4);
    CHECK(qgm_profile_normalized(p) == 1);
    CHECK(qgm_profile_q_param(p) == Approx(1.0));
    CHECK(std::string(qgm_profile_orthogonal_case(p)) == "plus");
    CHECK(qgm_profile_noninjective(p) == 1);
    CHECK(qgm_profile_noninjective_lhs(p) == Approx(16.0));
    CHECK(qgm_profile_noninjective_rhs(p) == Approx(6.0));
    CHECK(qgm_profile_sd_generator_count(p) == 0);
    std::vector<double> eigs(4);
    REQUIRE(qgm_profile_q_eigenvalues(p, eigs.data(), 4) == QGM_OK);
    CHECK(eigs[0] == Approx(1.0));
    qgm_profile_free(p);

    // singular input
    std::vector<double> bad(2 * 4, 0.0);
    bad[0] = 1.0;
    bad[2] = 1.0;
    bad[4] = 1.0;
    bad[6] = 1.0;
    CHECK(qgm_profile_compute(2, bad.data(), &p) == QGM_ERR_SINGULAR);

    int member = 0;
    double gens[] = {4.0};
    REQUIRE(qgm_subgroup_member(gens, 1, 16.0, 2, &member) == QGM_OK);
    CHECK(member == 1);
    REQUIRE(qgm_subgroup_member(gens, 1, 2.0, 5, &member) == QGM_OK);
    CHECK(member == 0);
}

TEST_CASE("schedule surface") {
    long n = 0;
    double r, eps, tail, block;
    REQUIRE(qgm_schedule_plan(0.1, &n, &r, &eps, &tail, &block) == QGM_OK);
    CHECK(n > 100);
    CHECK(n < 200);
    CHECK(tail < 0.1);
    CHECK(block == Approx(0.05).epsilon(1e-12));
    CHECK(qgm_schedule_plan(1.5, &n, &r, &eps, &tail, &block) == QGM_ERR_DOMAIN);

    double out = 0;
    REQUIRE(qgm_schedule_tail_bound(1, 0.5, &out) == QGM_OK);
    CHECK(out == Approx(8.0));
}

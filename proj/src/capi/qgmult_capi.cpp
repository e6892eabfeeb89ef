#include "qgmult/qgmult.h"

#include <complex>
#include <cstring>
#include <memory>
#include <new>
#include <stdexcept>
#include <string>
#include <vector>

#include "core/fusion.hpp"
#include "core/multipliers.hpp"
#include "core/qspecial.hpp"
#include "core/schedule.hpp"
#include "core/structure.hpp"
#include "core/suq2.hpp"
#include "core/verify.hpp"

namespace {

using cplx = std::complex<double>;

thread_local std::string g_last_error;

void set_error(const char* what) { g_last_error = what ? what : ""; }

template <class Fn>
qgm_status guard(Fn&& fn) {
    try {
        fn();
        return QGM_OK;
    } catch (const qgm::structure::SingularMatrixError& e) {
        set_error(e.what());
        return QGM_ERR_SINGULAR;
    } catch (const qgm::schedule::InfeasibleError& e) {
        set_error(e.what());
        return QGM_ERR_INFEASIBLE;
    } catch (const std::domain_error& e) {
        set_error(e.what());
        return QGM_ERR_DOMAIN;
    } catch (const std::invalid_argument& e) {
        set_error(e.what());
        return QGM_ERR_INVALID_ARGUMENT;
    } catch (const std::bad_alloc& e) {
        set_error(e.what());
        return QGM_ERR_NOMEM;
    } catch (const std::exception& e) {
        set_error(e.what());
        return QGM_ERR_INTERNAL;
    }
}

qgm_status bad_call(const char* what) {
    set_error(what);
    return QGM_ERR_INVALID_ARGUMENT;
}

void write_cplx(cplx v, double* out_re, double* out_im) {
    *out_re = v.real();
    *out_im = v.imag();
}

} // namespace

struct qgm_summability {
    qgm::mult::SummabilityReport rep;
};

struct qgm_eta {
    qgm::suq2::EtaVector eta;
    qgm::suq2::EtaResidual residual;
};

struct qgm_theta {
    qgm::suq2::ThetaFunctional theta;
};

struct qgm_fusion {
    std::vector<std::pair<std::string, long long>> terms;
};

struct qgm_dim_table {
    qgm::fusion::DimGrowthTable table;
};

struct qgm_fprofile {
    qgm::structure::FMatrixProfile profile;
    qgm::structure::NoninjectivityVerdict verdict;
};

struct qgm_verify {
    std::vector<qgm::verify::CheckResult> checks;
};

extern "C" {

const char* qgm_status_name(qgm_status s) {
    switch (s) {
        case QGM_OK: return "ok";
        case QGM_ERR_INVALID_ARGUMENT: return "invalid argument";
        case QGM_ERR_DOMAIN: return "domain error";
        case QGM_ERR_SINGULAR: return "singular matrix";
        case QGM_ERR_INFEASIBLE: return "infeasible";
        case QGM_ERR_NOMEM: return "out of memory";
        default: return "internal error";
    }
}

const char* qgm_last_error(void) { return g_last_error.c_str(); }

const char* qgm_version(void) { return "0.1.0"; }

/* ---------------- special functions ---------------- */

qgm_status qgm_chebyshev_mu(long d, double x_re, double x_im, double* out_re,
                            double* out_im) {
    if (!out_re || !out_im) return bad_call("qgm_chebyshev_mu: null output");
    return guard([&] {
        write_cplx(qgm::qspecial::chebyshev_mu(d, cplx(x_re, x_im)), out_re, out_im);
    });
}

qgm_status qgm_q_pochhammer(double x_re, double x_im, double q, long k,
                            double* out_re, double* out_im) {
    if (!out_re || !out_im) return bad_call("qgm_q_pochhammer: null output");
    return guard([&] {
        write_cplx(qgm::qspecial::q_pochhammer(cplx(x_re, x_im), q, k), out_re, out_im);
    });
}

qgm_status qgm_q_binomial(long n, long k, double q, double* out) {
    if (!out) return bad_call("qgm_q_binomial: null output");
    return guard([&] { *out = qgm::qspecial::q_binomial(n, k, q); });
}

qgm_status qgm_q_hermite(long n, double x_re, double x_im, double q, double* out_re,
                         double* out_im) {
    if (!out_re || !out_im) return bad_call("qgm_q_hermite: null output");
    return guard([&] {
        write_cplx(qgm::qspecial::q_hermite(n, cplx(x_re, x_im), q), out_re, out_im);
    });
}

/* ---------------- multipliers ---------------- */

qgm_status qgm_b_coeff(double q, double z_re, double z_im, long d, double* out_re,
                       double* out_im) {
    if (!out_re || !out_im) return bad_call("qgm_b_coeff: null output");
    return guard([&] {
        write_cplx(qgm::mult::b_coeff(qgm::QParam(q), cplx(z_re, z_im), d), out_re,
                   out_im);
    });
}

qgm_status qgm_decay_rate(double q, double z_re, double z_im, double* out) {
    if (!out) return bad_call("qgm_decay_rate: null output");
    return guard([&] {
        *out = qgm::mult::decay_rate(qgm::QParam(q), cplx(z_re, z_im));
    });
}

qgm_status qgm_proj_cb_bound(double q, long d, double* out) {
    if (!out) return bad_call("qgm_proj_cb_bound: null output");
    return guard([&] { *out = qgm::mult::proj_cb_bound(qgm::QParam(q), d); });
}

qgm_status qgm_summability_run(double q, double t, long power, long d_max,
                               qgm_summability** out) {
    if (!out) return bad_call("qgm_summability_run: null output");
    return guard([&] {
        *out = new qgm_summability{
            qgm::mult::summability_report(qgm::QParam(q), t, power, d_max)};
    });
}

void qgm_summability_free(qgm_summability* h) { delete h; }

long qgm_summability_count(const qgm_summability* h) {
    return h ? static_cast<long>(h->rep.terms.size()) : 0;
}

int qgm_summability_converges(const qgm_summability* h) {
    return h && h->rep.converges ? 1 : 0;
}

double qgm_summability_limiting_ratio(const qgm_summability* h) {
    return h ? h->rep.limiting_ratio : 0.0;
}

double qgm_summability_term(const qgm_summability* h, long d) {
    if (!h || d < 0 || d >= static_cast<long>(h->rep.terms.size())) return 0.0;
    return h->rep.terms[static_cast<std::size_t>(d)];
}

double qgm_summability_partial_sum(const qgm_summability* h, long d) {
    if (!h || d < 0 || d >= static_cast<long>(h->rep.partial_sums.size())) return 0.0;
    return h->rep.partial_sums[static_cast<std::size_t>(d)];
}

qgm_status qgm_truncate_multiplier(double q, double t, long power, double eps,
                                   long* d_cut, double* cb_error_bound) {
    if (!d_cut || !cb_error_bound) return bad_call("qgm_truncate_multiplier: null output");
    return guard([&] {
        const auto tr = qgm::mult::truncate_multiplier(qgm::QParam(q), t, power, eps);
        *d_cut = tr.d_cut;
        *cb_error_bound = tr.cb_error_bound;
    });
}

/* ---------------- Toeplitz model ---------------- */

qgm_status qgm_eta_compute(double q, double z_re, double z_im, long n_tr,
                           qgm_eta** out) {
    if (!out) return bad_call("qgm_eta_compute: null output");
    return guard([&] {
        const qgm::QParam qp(q);
        const cplx z(z_re, z_im);
        auto h = std::make_unique<qgm_eta>();
        h->eta = qgm::suq2::eta_vector(qp, z, n_tr);
        h->residual = qgm::suq2::eta_eigen_residual(qp, z, n_tr);
        *out = h.release();
    });
}

void qgm_eta_free(qgm_eta* h) { delete h; }

long qgm_eta_dim(const qgm_eta* h) {
    return h ? static_cast<long>(h->eta.coeffs.size()) : 0;
}

qgm_status qgm_eta_coeff(const qgm_eta* h, long n, double* out_re, double* out_im) {
    if (!h || !out_re || !out_im) return bad_call("qgm_eta_coeff: null argument");
    if (n < 0 || n >= static_cast<long>(h->eta.coeffs.size()))
        return bad_call("qgm_eta_coeff: index out of range");
    write_cplx(h->eta.coeffs[static_cast<std::size_t>(n)], out_re, out_im);
    return QGM_OK;
}

qgm_status qgm_eta_c_z(const qgm_eta* h, double* out_re, double* out_im) {
    if (!h || !out_re || !out_im) return bad_call("qgm_eta_c_z: null argument");
    write_cplx(h->eta.c_z, out_re, out_im);
    return QGM_OK;
}

double qgm_eta_tail_bound(const qgm_eta* h) { return h ? h->eta.tail_bound : 0.0; }

qgm_status qgm_eta_eigenvalue(const qgm_eta* h, double* out_re, double* out_im) {
    if (!h || !out_re || !out_im) return bad_call("qgm_eta_eigenvalue: null argument");
    write_cplx(h->eta.eigenvalue, out_re, out_im);
    return QGM_OK;
}

double qgm_eta_residual_valid_rows(const qgm_eta* h) {
    return h ? h->residual.on_valid_rows : 0.0;
}

double qgm_eta_residual_full(const qgm_eta* h) { return h ? h->residual.full : 0.0; }

qgm_status qgm_theta_compute(double q, double z_re, double z_im, long d_max,
                             long n_tr, qgm_theta** out) {
    if (!out) return bad_call("qgm_theta_compute: null output");
    return guard([&] {
        *out = new qgm_theta{
            qgm::suq2::theta_pair(qgm::QParam(q), cplx(z_re, z_im), d_max, n_tr)};
    });
}

void qgm_theta_free(qgm_theta* h) { delete h; }

long qgm_theta_count(const qgm_theta* h) {
    return h ? static_cast<long>(h->theta.values.size()) : 0;
}

qgm_status qgm_theta_value(const qgm_theta* h, long d, double* out_re, double* out_im) {
    if (!h || !out_re || !out_im) return bad_call("qgm_theta_value: null argument");
    if (d < 0 || d >= static_cast<long>(h->theta.values.size()))
        return bad_call("qgm_theta_value: index out of range");
    write_cplx(h->theta.values[static_cast<std::size_t>(d)], out_re, out_im);
    return QGM_OK;
}

qgm_status qgm_theta_c_z(const qgm_theta* h, double* out_re, double* out_im) {
    if (!h || !out_re || !out_im) return bad_call("qgm_theta_c_z: null argument");
    write_cplx(h->theta.c_z, out_re, out_im);
    return QGM_OK;
}

qgm_status qgm_theta_min_truncation(double q, double z_re, double z_im, long d_max,
                                    long* out) {
    if (!out) return bad_call("qgm_theta_min_truncation: null output");
    return guard([&] {
        *out = qgm::suq2::theta_min_truncation(qgm::QParam(q), cplx(z_re, z_im), d_max);
    });
}

qgm_status qgm_twisted_character_spectrum(double q, long n_tr, double* buf,
                                          long buflen) {
    if (!buf) return bad_call("qgm_twisted_character_spectrum: null buffer");
    if (buflen < n_tr) return bad_call("qgm_twisted_character_spectrum: buffer too small");
    return guard([&] {
        const auto ev = qgm::suq2::twisted_character_spectrum(qgm::QParam(q), n_tr);
        std::memcpy(buf, ev.data(), ev.size() * sizeof(double));
    });
}

qgm_status qgm_toeplitz_residual(double q, long n_tr, double* out) {
    if (!out) return bad_call("qgm_toeplitz_residual: null output");
    return guard([&] {
        *out = qgm::suq2::toeplitz_relation_residual(qgm::QParam(q), n_tr);
    });
}

qgm_status qgm_unitary_row_residual(double q, long n_tr, long window_halfwidth,
                                    double* out) {
    if (!out) return bad_call("qgm_unitary_row_residual: null output");
    return guard([&] {
        *out = qgm::suq2::unitary_row_residual(qgm::QParam(q), n_tr, window_halfwidth);
    });
}

/* ---------------- fusion ---------------- */

qgm_status qgm_fuse_spins(long a, long b, qgm_fusion** out) {
    if (!out) return bad_call("qgm_fuse_spins: null output");
    return guard([&] {
        const auto f = qgm::fusion::fuse(qgm::fusion::SpinLabel{a},
                                         qgm::fusion::SpinLabel{b});
        auto h = std::make_unique<qgm_fusion>();
        for (const auto& [l, m] : f.terms())
            h->terms.emplace_back(std::to_string(l.d), m);
        *out = h.release();
    });
}

qgm_status qgm_fuse_words(const char* w, const char* v, qgm_fusion** out) {
    if (!out || !w || !v) return bad_call("qgm_fuse_words: null argument");
    return guard([&] {
        const auto f = qgm::fusion::fuse(qgm::fusion::FreeWord(w),
                                         qgm::fusion::FreeWord(v));
        auto h = std::make_unique<qgm_fusion>();
        for (const auto& [l, m] : f.terms()) h->terms.emplace_back(l.letters(), m);
        *out = h.release();
    });
}

void qgm_fusion_free(qgm_fusion* h) { delete h; }

long qgm_fusion_count(const qgm_fusion* h) {
    return h ? static_cast<long>(h->terms.size()) : 0;
}

qgm_status qgm_fusion_term(const qgm_fusion* h, long i, char* buf, size_t buflen,
                           long long* mult) {
    if (!h || !buf || !mult) return bad_call("qgm_fusion_term: null argument");
    if (i < 0 || i >= static_cast<long>(h->terms.size()))
        return bad_call("qgm_fusion_term: index out of range");
    const auto& [label, m] = h->terms[static_cast<std::size_t>(i)];
    if (buflen < label.size() + 1) return bad_call("qgm_fusion_term: buffer too small");
    std::memcpy(buf, label.c_str(), label.size() + 1);
    *mult = m;
    return QGM_OK;
}

qgm_status qgm_qdim_spin(long d, double q, double* out) {
    if (!out) return bad_call("qgm_qdim_spin: null output");
    return guard([&] {
        *out = qgm::fusion::qdim(qgm::fusion::SpinLabel{d}, qgm::QParam(q));
    });
}

qgm_status qgm_qdim_word(const char* w, double q, double* out) {
    if (!out || !w) return bad_call("qgm_qdim_word: null argument");
    return guard([&] {
        *out = qgm::fusion::qdim(qgm::fusion::FreeWord(w), qgm::QParam(q));
    });
}

qgm_status qgm_dim_table_compute(double q, long n, long d_max, qgm_dim_table** out) {
    if (!out) return bad_call("qgm_dim_table_compute: null output");
    return guard([&] {
        *out = new qgm_dim_table{
            qgm::fusion::dim_growth_table(qgm::QParam(q), n, d_max)};
    });
}

void qgm_dim_table_free(qgm_dim_table* h) { delete h; }

long qgm_dim_table_count(const qgm_dim_table* h) {
    return h ? static_cast<long>(h->table.rows.size()) : 0;
}

int qgm_dim_table_diverges(const qgm_dim_table* h) {
    return h && h->table.char_state_diverges ? 1 : 0;
}

namespace {

const qgm::fusion::DimGrowthRow* dim_row(const qgm_dim_table* h, long d) {
    if (!h || d < 0 || d >= static_cast<long>(h->table.rows.size())) return nullptr;
    return &h->table.rows[static_cast<std::size_t>(d)];
}

} // namespace

double qgm_dim_table_dim(const qgm_dim_table* h, long d) {
    const auto* r = dim_row(h, d);
    return r ? r->dim : 0.0;
}

double qgm_dim_table_dim_q(const qgm_dim_table* h, long d) {
    const auto* r = dim_row(h, d);
    return r ? r->dim_q : 0.0;
}

double qgm_dim_table_char_state(const qgm_dim_table* h, long d) {
    const auto* r = dim_row(h, d);
    return r ? r->char_state : 0.0;
}

double qgm_dim_table_char_state_over_norm(const qgm_dim_table* h, long d) {
    const auto* r = dim_row(h, d);
    return r ? r->char_state_over_norm : 0.0;
}

double qgm_dim_table_log_char_state(const qgm_dim_table* h, long d) {
    const auto* r = dim_row(h, d);
    return r ? r->log_char_state : 0.0;
}

/* ---------------- structure ---------------- */

qgm_status qgm_profile_compute(long n, const double* f_interleaved, qgm_fprofile** out) {
    if (!out || !f_interleaved) return bad_call("qgm_profile_compute: null argument");
    if (n < 2) return bad_call("qgm_profile_compute: n must be >= 2");
    return guard([&] {
        Eigen::MatrixXcd f(n, n);
        for (long i = 0; i < n; ++i)
            for (long j = 0; j < n; ++j) {
                const double* p = f_interleaved + 2 * (i * n + j);
                f(i, j) = cplx(p[0], p[1]);
            }
        auto h = std::make_unique<qgm_fprofile>();
        h->profile = qgm::structure::profile(f);
        h->verdict = qgm::structure::noninjectivity_check(h->profile);
        *out = h.release();
    });
}

void qgm_profile_free(qgm_fprofile* h) { delete h; }

long qgm_profile_n(const qgm_fprofile* h) { return h ? h->profile.n : 0; }

double qgm_profile_input_trace(const qgm_fprofile* h) {
    return h ? h->profile.input_trace : 0.0;
}

double qgm_profile_input_trace_inv(const qgm_fprofile* h) {
    return h ? h->profile.input_trace_inv : 0.0;
}

int qgm_profile_normalized(const qgm_fprofile* h) {
    return h && h->profile.normalized ? 1 : 0;
}

double qgm_profile_scale(const qgm_fprofile* h) { return h ? h->profile.scale : 0.0; }

double qgm_profile_trace_ffstar(const qgm_fprofile* h) {
    return h ? h->profile.trace_ffstar : 0.0;
}

double qgm_profile_q_param(const qgm_fprofile* h) {
    return h ? h->profile.q_param : 0.0;
}

const char* qgm_profile_orthogonal_case(const qgm_fprofile* h) {
    return h ? qgm::structure::to_string(h->profile.orthogonal_case) : "no";
}

long qgm_profile_q_eigenvalue_count(const qgm_fprofile* h) {
    return h ? static_cast<long>(h->profile.q_eigenvalues.size()) : 0;
}

qgm_status qgm_profile_q_eigenvalues(const qgm_fprofile* h, double* buf, long buflen) {
    if (!h || !buf) return bad_call("qgm_profile_q_eigenvalues: null argument");
    const long n = static_cast<long>(h->profile.q_eigenvalues.size());
    if (buflen < n) return bad_call("qgm_profile_q_eigenvalues: buffer too small");
    std::memcpy(buf, h->profile.q_eigenvalues.data(), std::size_t(n) * sizeof(double));
    return QGM_OK;
}

long qgm_profile_sd_generator_count(const qgm_fprofile* h) {
    return h ? static_cast<long>(h->profile.sd_generators.size()) : 0;
}

qgm_status qgm_profile_sd_generators(const qgm_fprofile* h, double* buf, long buflen) {
    if (!h || !buf) return bad_call("qgm_profile_sd_generators: null argument");
    const long n = static_cast<long>(h->profile.sd_generators.size());
    if (buflen < n) return bad_call("qgm_profile_sd_generators: buffer too small");
    std::memcpy(buf, h->profile.sd_generators.data(), std::size_t(n) * sizeof(double));
    return QGM_OK;
}

int qgm_profile_noninjective(const qgm_fprofile* h) {
    return h && h->verdict.noninjective ? 1 : 0;
}

double qgm_profile_noninjective_lhs(const qgm_fprofile* h) {
    return h ? h->verdict.lhs : 0.0;
}

double qgm_profile_noninjective_rhs(const qgm_fprofile* h) {
    return h ? h->verdict.rhs : 0.0;
}

qgm_status qgm_subgroup_member(const double* gens, long ngens, double target,
                               long max_exponent, int* out) {
    if (!out || !gens) return bad_call("qgm_subgroup_member: null argument");
    if (ngens <= 0) return bad_call("qgm_subgroup_member: ngens must be > 0");
    return guard([&] {
        std::vector<double> g(gens, gens + ngens);
        *out = qgm::structure::subgroup_member(g, target, max_exponent) ? 1 : 0;
    });
}

/* ---------------- schedule ---------------- */

qgm_status qgm_schedule_plan(double delta, long* n, double* r, double* eps,
                             double* tail_bound, double* block_error) {
    if (!n || !r || !eps || !tail_bound || !block_error)
        return bad_call("qgm_schedule_plan: null output");
    return guard([&] {
        const auto p = qgm::schedule::plan(delta);
        *n = p.n;
        *r = p.r;
        *eps = p.eps;
        *tail_bound = p.tail_bound;
        *block_error = p.block_error;
    });
}

qgm_status qgm_schedule_tail_bound(long n, double r, double* out) {
    if (!out) return bad_call("qgm_schedule_tail_bound: null output");
    return guard([&] { *out = qgm::schedule::tail_bound(n, r); });
}

/* ---------------- verification ---------------- */

qgm_status qgm_verify_run(unsigned long long seed, qgm_verify** out) {
    if (!out) return bad_call("qgm_verify_run: null output");
    return guard([&] { *out = new qgm_verify{qgm::verify::run_all(seed)}; });
}

void qgm_verify_free(qgm_verify* h) { delete h; }

long qgm_verify_count(const qgm_verify* h) {
    return h ? static_cast<long>(h->checks.size()) : 0;
}

const char* qgm_verify_name(const qgm_verify* h, long i) {
    if (!h || i < 0 || i >= static_cast<long>(h->checks.size())) return "";
    return h->checks[static_cast<std::size_t>(i)].name.c_str();
}

double qgm_verify_residual(const qgm_verify* h, long i) {
    if (!h || i < 0 || i >= static_cast<long>(h->checks.size())) return 0.0;
    return h->checks[static_cast<std::size_t>(i)].residual;
}

double qgm_verify_tolerance(const qgm_verify* h, long i) {
    if (!h || i < 0 || i >= static_cast<long>(h->checks.size())) return 0.0;
    return h->checks[static_cast<std::size_t>(i)].tolerance;
}

int qgm_verify_passed(const qgm_verify* h, long i) {
    if (!h || i < 0 || i >= static_cast<long>(h->checks.size())) return 0;
    return h->checks[static_cast<std::size_t>(i)].passed ? 1 : 0;
}

int qgm_verify_all_passed(const qgm_verify* h) {
    if (!h) return 0;
    for (const auto& c : h->checks)
        if (!c.passed) return 0;
    return 1;
}

} // extern "C"

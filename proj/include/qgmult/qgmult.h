/*
 * qgmult -- spectral and fusion-ring toolkit for central multipliers on
 * free quantum groups.
 *
 * C API of the shared library. All functions return qgm_status unless
 * they are trivial accessors on a valid handle; a human-readable message
 * for the most recent failure on the calling thread is available from
 * qgm_last_error(). Complex scalars are passed as (re, im) pairs and
 * complex arrays as interleaved re/im doubles. Handles are created by
 * the *_compute / *_run functions and released with the matching *_free;
 * accessors never take ownership.
 */

#ifndef QGMULT_H
#define QGMULT_H

#include <stddef.h>

#if defined(_WIN32)
#define QGMULT_API __declspec(dllexport)
#else
#define QGMULT_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qgm_status {
    QGM_OK = 0,
    QGM_ERR_INVALID_ARGUMENT = 1, /* malformed call: null pointer, bad size */
    QGM_ERR_DOMAIN = 2,           /* input outside a mathematical precondition */
    QGM_ERR_SINGULAR = 3,         /* singular or ill-conditioned matrix input */
    QGM_ERR_INFEASIBLE = 4,       /* no representable answer at double precision */
    QGM_ERR_NOMEM = 5,
    QGM_ERR_INTERNAL = 6
} qgm_status;

QGMULT_API const char* qgm_status_name(qgm_status s);

/* Message for the most recent failing call on this thread. */
QGMULT_API const char* qgm_last_error(void);

QGMULT_API const char* qgm_version(void);

/* ------------------------------------------------------------------ */
/* Special functions                                                   */
/* ------------------------------------------------------------------ */

/* Dilated Chebyshev polynomial of the second kind at a complex point. */
QGMULT_API qgm_status qgm_chebyshev_mu(long d, double x_re, double x_im,
                                       double* out_re, double* out_im);

/* (x; q)_k = (1-x)(1-xq)...(1-xq^{k-1}). */
QGMULT_API qgm_status qgm_q_pochhammer(double x_re, double x_im, double q, long k,
                                       double* out_re, double* out_im);

/* Gaussian binomial coefficient [n k]_q; requires 0 <= k <= n. */
QGMULT_API qgm_status qgm_q_binomial(long n, long k, double q, double* out);

/* Continuous q-Hermite polynomial in dilated form. */
QGMULT_API qgm_status qgm_q_hermite(long n, double x_re, double x_im, double q,
                                    double* out_re, double* out_im);

/* ------------------------------------------------------------------ */
/* Central multiplier coefficients                                     */
/* ------------------------------------------------------------------ */

/* b_d(z) = mu_d(|q|^z + |q|^-z) / mu_d(|q| + |q|^-1); |Re z| <= 1. */
QGMULT_API qgm_status qgm_b_coeff(double q, double z_re, double z_im, long d,
                                  double* out_re, double* out_im);

/* Asymptotic ratio |b_{d+1}/b_d| -> |q|^{1 - Re z}; 0 < Re z < 1. */
QGMULT_API qgm_status qgm_decay_rate(double q, double z_re, double z_im, double* out);

/* Upper bound mu_d(gauge)^2 on the cb norm of the degree-d isotypic
 * projection. */
QGMULT_API qgm_status qgm_proj_cb_bound(double q, long d, double* out);

typedef struct qgm_summability qgm_summability;

/* Ratio test for sum_d |b_d(t)|^power mu_d(gauge)^2 with the terms and
 * partial sums up to d_max. Requires 0 < t < 1, power >= 1. */
QGMULT_API qgm_status qgm_summability_run(double q, double t, long power, long d_max,
                                          qgm_summability** out);
QGMULT_API void qgm_summability_free(qgm_summability* h);
QGMULT_API long qgm_summability_count(const qgm_summability* h);
QGMULT_API int qgm_summability_converges(const qgm_summability* h);
QGMULT_API double qgm_summability_limiting_ratio(const qgm_summability* h);
QGMULT_API double qgm_summability_term(const qgm_summability* h, long d);
QGMULT_API double qgm_summability_partial_sum(const qgm_summability* h, long d);

/* Smallest cutoff with certified cb tail below eps, plus the certified
 * bound itself. Rejects non-convergent parameters. */
QGMULT_API qgm_status qgm_truncate_multiplier(double q, double t, long power,
                                              double eps, long* d_cut,
                                              double* cb_error_bound);

/* ------------------------------------------------------------------ */
/* Toeplitz model and the Jacobi eigenvector family                    */
/* ------------------------------------------------------------------ */

typedef struct qgm_eta qgm_eta;

/* Eigenvector coefficients p_n(z) at spectral parameter z in the open
 * strip |Re z| < 1, with truncation size n_tr >= 4. */
QGMULT_API qgm_status qgm_eta_compute(double q, double z_re, double z_im, long n_tr,
                                      qgm_eta** out);
QGMULT_API void qgm_eta_free(qgm_eta* h);
QGMULT_API long qgm_eta_dim(const qgm_eta* h);
QGMULT_API qgm_status qgm_eta_coeff(const qgm_eta* h, long n, double* out_re,
                                    double* out_im);
QGMULT_API qgm_status qgm_eta_c_z(const qgm_eta* h, double* out_re, double* out_im);
QGMULT_API double qgm_eta_tail_bound(const qgm_eta* h);
QGMULT_API qgm_status qgm_eta_eigenvalue(const qgm_eta* h, double* out_re,
                                         double* out_im);
/* Relative eigen-residual of the coefficient vector under the Jacobi
 * truncation; on the rows unaffected by the cut, and over all rows. */
QGMULT_API double qgm_eta_residual_valid_rows(const qgm_eta* h);
QGMULT_API double qgm_eta_residual_full(const qgm_eta* h);

typedef struct qgm_theta qgm_theta;

/* Central-functional values theta_z(d), d = 0..d_max, normalized so
 * that theta_z(0) = C_z. Rejects truncations too small for d_max. */
QGMULT_API qgm_status qgm_theta_compute(double q, double z_re, double z_im,
                                        long d_max, long n_tr, qgm_theta** out);
QGMULT_API void qgm_theta_free(qgm_theta* h);
QGMULT_API long qgm_theta_count(const qgm_theta* h);
QGMULT_API qgm_status qgm_theta_value(const qgm_theta* h, long d, double* out_re,
                                      double* out_im);
QGMULT_API qgm_status qgm_theta_c_z(const qgm_theta* h, double* out_re,
                                    double* out_im);

/* Smallest truncation theta accepts at these parameters. */
QGMULT_API qgm_status qgm_theta_min_truncation(double q, double z_re, double z_im,
                                               long d_max, long* out);

/* Eigenvalues (ascending) of the self-adjoint twisted-character model;
 * buf must hold n_tr doubles. */
QGMULT_API qgm_status qgm_twisted_character_spectrum(double q, long n_tr,
                                                     double* buf, long buflen);

/* Residual of the Toeplitz commutation relation on the valid rows of an
 * n_tr truncation. */
QGMULT_API qgm_status qgm_toeplitz_residual(double q, long n_tr, double* out);

/* Residual of the unitarity row relation alpha*alpha + gamma*gamma = 1
 * on the tensor truncation with window [-w, w]. */
QGMULT_API qgm_status qgm_unitary_row_residual(double q, long n_tr, long window_halfwidth,
                                               double* out);

/* ------------------------------------------------------------------ */
/* Fusion rings                                                        */
/* ------------------------------------------------------------------ */

typedef struct qgm_fusion qgm_fusion;

/* Decomposition of the product of spins a/2 and b/2 (labels are the
 * doubled spins). Term labels are decimal integers. */
QGMULT_API qgm_status qgm_fuse_spins(long a, long b, qgm_fusion** out);

/* Decomposition of the product of two words over {a, b}. Term labels
 * are words ("" is the unit). */
QGMULT_API qgm_status qgm_fuse_words(const char* w, const char* v, qgm_fusion** out);

QGMULT_API void qgm_fusion_free(qgm_fusion* h);
QGMULT_API long qgm_fusion_count(const qgm_fusion* h);
/* Copies the i-th label into buf (NUL-terminated) and its multiplicity
 * into mult. */
QGMULT_API qgm_status qgm_fusion_term(const qgm_fusion* h, long i, char* buf,
                                      size_t buflen, long long* mult);

/* Quantum dimensions of the two label kinds. */
QGMULT_API qgm_status qgm_qdim_spin(long d, double q, double* out);
QGMULT_API qgm_status qgm_qdim_word(const char* w, double q, double* out);

typedef struct qgm_dim_table qgm_dim_table;

/* Growth of classical/quantum dimensions and of the character-state
 * values dim^2/dim_q along the spin ladder, with the quantum trace
 * supplied as q + 1/q. Requires n >= 2. */
QGMULT_API qgm_status qgm_dim_table_compute(double q, long n, long d_max,
                                            qgm_dim_table** out);
QGMULT_API void qgm_dim_table_free(qgm_dim_table* h);
QGMULT_API long qgm_dim_table_count(const qgm_dim_table* h);
QGMULT_API int qgm_dim_table_diverges(const qgm_dim_table* h);
/* Row accessors; values past the double range come back as +inf, with
 * the log variants always finite. */
QGMULT_API double qgm_dim_table_dim(const qgm_dim_table* h, long d);
QGMULT_API double qgm_dim_table_dim_q(const qgm_dim_table* h, long d);
QGMULT_API double qgm_dim_table_char_state(const qgm_dim_table* h, long d);
QGMULT_API double qgm_dim_table_char_state_over_norm(const qgm_dim_table* h, long d);
QGMULT_API double qgm_dim_table_log_char_state(const qgm_dim_table* h, long d);

/* ------------------------------------------------------------------ */
/* Defining-matrix diagnostics                                         */
/* ------------------------------------------------------------------ */

typedef struct qgm_fprofile qgm_fprofile;

/* Profile of an invertible N x N complex matrix F, passed row-major as
 * 2*n*n interleaved doubles. Rejects singular or ill-conditioned input. */
QGMULT_API qgm_status qgm_profile_compute(long n, const double* f_interleaved,
                                          qgm_fprofile** out);
QGMULT_API void qgm_profile_free(qgm_fprofile* h);
QGMULT_API long qgm_profile_n(const qgm_fprofile* h);
QGMULT_API double qgm_profile_input_trace(const qgm_fprofile* h);
QGMULT_API double qgm_profile_input_trace_inv(const qgm_fprofile* h);
QGMULT_API int qgm_profile_normalized(const qgm_fprofile* h);
QGMULT_API double qgm_profile_scale(const qgm_fprofile* h);
QGMULT_API double qgm_profile_trace_ffstar(const qgm_fprofile* h);
QGMULT_API double qgm_profile_q_param(const qgm_fprofile* h);
/* "plus", "minus" or "no" according to whether F Fbar = I, -I or neither
 * after rescale. */
QGMULT_API const char* qgm_profile_orthogonal_case(const qgm_fprofile* h);
QGMULT_API long qgm_profile_q_eigenvalue_count(const qgm_fprofile* h);
QGMULT_API qgm_status qgm_profile_q_eigenvalues(const qgm_fprofile* h, double* buf,
                                                long buflen);
QGMULT_API long qgm_profile_sd_generator_count(const qgm_fprofile* h);
QGMULT_API qgm_status qgm_profile_sd_generators(const qgm_fprofile* h, double* buf,
                                                long buflen);
/* Noninjectivity criterion N^2 > Tr(FF*) + 2; false means inconclusive. */
QGMULT_API int qgm_profile_noninjective(const qgm_fprofile* h);
QGMULT_API double qgm_profile_noninjective_lhs(const qgm_fprofile* h);
QGMULT_API double qgm_profile_noninjective_rhs(const qgm_fprofile* h);

/* Bounded membership test in the subgroup of R_+* generated by gens. */
QGMULT_API qgm_status qgm_subgroup_member(const double* gens, long ngens,
                                          double target, long max_exponent,
                                          int* out);

/* ------------------------------------------------------------------ */
/* Free-product truncation scheduler                                   */
/* ------------------------------------------------------------------ */

QGMULT_API qgm_status qgm_schedule_plan(double delta, long* n, double* r, double* eps,
                                        double* tail_bound, double* block_error);
QGMULT_API qgm_status qgm_schedule_tail_bound(long n, double r, double* out);

/* ------------------------------------------------------------------ */
/* Verification suite                                                  */
/* ------------------------------------------------------------------ */

typedef struct qgm_verify qgm_verify;

/* Runs the full cross-module invariant suite; deterministic per seed. */
QGMULT_API qgm_status qgm_verify_run(unsigned long long seed, qgm_verify** out);
QGMULT_API void qgm_verify_free(qgm_verify* h);
QGMULT_API long qgm_verify_count(const qgm_verify* h);
QGMULT_API const char* qgm_verify_name(const qgm_verify* h, long i);
QGMULT_API double qgm_verify_residual(const qgm_verify* h, long i);
QGMULT_API double qgm_verify_tolerance(const qgm_verify* h, long i);
QGMULT_API int qgm_verify_passed(const qgm_verify* h, long i);
QGMULT_API int qgm_verify_all_passed(const qgm_verify* h);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* QGMULT_H */

/* eulerlab C API: opaque handles + status codes over the C++ core.
 *
 * Conventions:
 *   - every function returns el_status; results go through out-pointers
 *   - objects created by el_*_create / el_* factories are released with the
 *     matching el_*_free; handles are never shared between create calls
 *   - on failure, el_last_error_message() returns a thread-local detail
 *     string valid until the next failing call on the same thread
 */
#ifndef EULERLAB_H
#define EULERLAB_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum el_status {
  EL_OK = 0,
  EL_ERR_INVALID = 1,
  EL_ERR_DOMAIN = 2,
  EL_ERR_POLE = 3,
  EL_ERR_BRANCH = 4,
  EL_ERR_SINGULAR_FACTOR = 5,
  EL_ERR_OUT_OF_RANGE = 6,
  EL_ERR_RESOURCE_LIMIT = 7,
  EL_ERR_OVERFLOW = 8,
  EL_ERR_DEGENERATE = 9,
  EL_ERR_GRID_RESOLUTION = 10,
  EL_ERR_NONCONVERGENCE = 11,
  EL_ERR_UNKNOWN = 99
} el_status;

typedef struct el_complex {
  double re;
  double im;
} el_complex;

typedef struct el_policy {
  uint64_t max_terms;
  double target_tail;
} el_policy;

/* Default policy: 1e6 terms, 1e-10 tail target. */
el_policy el_policy_default(void);

typedef struct el_report {
  el_complex value;
  uint64_t terms_used;
  double tail_bound;
  int converged;
} el_report;

typedef struct el_label {
  uint32_t i; /* depth / stride exponent */
  uint64_t j; /* residue, j < 2^i */
} el_label;

const char* el_status_message(el_status status);
const char* el_last_error_message(void);
const char* el_version(void);

/* ----- primes ----------------------------------------------------------- */

typedef struct el_prime_table el_prime_table;

/* Sieve of all primes <= limit. Honors the EULERLAB_MAX_MEMORY env var. */
el_status el_sieve(uint64_t limit, el_prime_table** out);
void el_prime_table_free(el_prime_table* table);
el_status el_prime_count(const el_prime_table* table, uint64_t* out);
/* 1-based: n=1 -> 2. */
el_status el_nth_prime(const el_prime_table* table, uint64_t n, uint64_t* out);
el_status el_mobius(uint64_t n, int32_t* out);

/* ----- sequences and signs ---------------------------------------------- */

typedef struct el_sequence el_sequence;

el_status el_sequence_naturals(uint64_t count, el_sequence** out);
el_status el_sequence_primes(const el_prime_table* table, uint64_t count, el_sequence** out);
/* (p_{2^i n + j})_{n>=1}, truncated to count elements. */
el_status el_sequence_residue(const el_prime_table* table, el_label label, uint64_t count,
                              el_sequence** out);
el_status el_sequence_explicit(const uint64_t* values, size_t count, el_sequence** out);
void el_sequence_free(el_sequence* seq);
el_status el_sequence_size(const el_sequence* seq, uint64_t* out);
el_status el_sequence_at(const el_sequence* seq, uint64_t n, uint64_t* out); /* 1-based */

typedef struct el_sign el_sign;

el_status el_sign_constant(double c, el_sign** out);
/* l_n = sigma * (-1)^n */
el_status el_sign_alternating(int sigma, el_sign** out);
/* l_n = 1 for n < switch_index, sigma * (-1)^n after */
el_status el_sign_tail_alternating(uint64_t switch_index, int sigma, el_sign** out);
el_status el_sign_explicit(const double* values, size_t count, el_sign** out);
void el_sign_free(el_sign* sign);

/* ----- series ------------------------------------------------------------ */

el_status el_dirichlet_eval(const el_sequence* seq, const el_sign* sign, el_complex s,
                            el_policy policy, el_report* out);
el_status el_alternating_eval(const el_sequence* seq, const el_sign* sign, el_complex s,
                              double target, el_report* out);
el_status el_zeta_ref(el_complex s, el_complex* out);
el_status el_gamma_ref(el_complex s, el_complex* out);
el_status el_prime_zeta_direct(const el_prime_table* table, el_complex s, el_policy policy,
                               el_report* out);
el_status el_prime_zeta_mobius(el_complex s, uint32_t n_max, el_report* out);
el_status el_z_deformed_prime_zeta(const el_prime_table* table, el_complex z, el_complex s,
                                   el_policy policy, el_report* out);

/* ----- products ----------------------------------------------------------- */

typedef struct el_factor el_factor;

/* coefficients[d] is the degree-d coefficient; coefficients[0] must be 0. */
el_status el_factor_create(const double* coefficients, size_t count, el_factor** out);
void el_factor_free(el_factor* factor);
/* h with 1/(1-h) = (1 - c1 x)/(1 - g(x)), truncated at degree. */
el_status el_factor_regularized_ratio(const el_factor* g, uint32_t degree, el_factor** out);
el_status el_derive_convergence_params(const el_factor* g, double delta, double* C_out,
                                       double* lambda_out);

el_status el_euler_product_eval(const el_sequence* seq, const el_sign* sign, el_complex s,
                                el_policy policy, el_report* out);
el_status el_general_product_eval(const el_sequence* seq, const el_factor* factor,
                                  el_complex s, el_policy policy, el_report* out);
el_status el_continued_product_eval(const el_sequence* seq, const el_sign* sign, el_complex s,
                                    el_policy policy, el_report* out);
el_status el_exp_factorization_residual(const el_prime_table* table, el_complex s,
                                        el_policy policy, double* residual);
el_status el_truncation_discrepancy(const el_prime_table* table, uint32_t N, el_complex s,
                                    el_policy policy, double* measured, double* bound);

typedef struct el_scan el_scan;

el_status el_convergence_scan(const el_sequence* seq, const el_factor* factor,
                              const double* sigmas, size_t n_sigmas,
                              const uint64_t* ladder_terms, size_t ladder_len,
                              el_scan** out);
void el_scan_free(el_scan* scan);
el_status el_scan_size(const el_scan* scan, size_t* out);
/* flag_out: 1 = decay detected, 0 = no-convergence. */
el_status el_scan_row(const el_scan* scan, size_t index, double* sigma, uint64_t* terms,
                      double* abs_delta, double* rate, int* flag_out);

/* ----- identities ---------------------------------------------------------- */

el_status el_split_children(el_label label, el_label* left, el_label* right);
el_status el_split_residual(const el_prime_table* table, el_label label, el_complex s,
                            el_policy policy, double* residual);
el_status el_even_odd_quotient(const el_prime_table* table, el_label label, el_complex s,
                               el_policy policy, el_complex* out);
el_status el_leibniz_div(el_complex a, el_complex b, el_complex* out);
el_status el_assoc_defect(el_complex a, el_complex b, el_complex c, el_complex* defect,
                          el_complex* closed_form);
el_status el_skew_bracket(el_complex a, el_complex b, int sign, el_complex* out);
el_status el_jacobi_defect(el_complex a, el_complex b, el_complex c, el_complex* lhs,
                           el_complex* derived_form, el_complex* paper_form);
el_status el_interlace_check(const el_sequence* a, const el_sequence* b, int* interlaced,
                             uint64_t* offset, int* insufficient_data);
el_status el_catalan(uint64_t n, uint64_t* out);

/* ----- goldbach ------------------------------------------------------------- */

typedef struct el_series el_series; /* truncated integer power series / count table */

el_status el_gk_series(const el_prime_table* table, el_label label, uint32_t k, uint64_t N,
                       el_series** out);
el_status el_series_explicit(const uint64_t* coefficients, size_t count, el_series** out);
void el_series_free(el_series* series);
el_status el_series_cutoff(const el_series* series, uint64_t* out);
el_status el_series_coeff(const el_series* series, uint64_t index, uint64_t* out);

el_status el_power_counts(const el_series* g, uint32_t m, el_series** out);
el_status el_brute_force_counts(const el_prime_table* table, el_label label, uint32_t k,
                                uint32_t m, uint64_t N, uint64_t budget, el_series** out);
/* Writes violating even n into buf (up to buf_len); n_found gets the total. */
el_status el_goldbach_scan(const el_prime_table* table, uint64_t N, uint64_t* buf,
                           size_t buf_len, size_t* n_found);
el_status el_mellin_residual(const el_prime_table* table, el_label label, uint32_t k,
                             el_complex s, double abs_tol, int max_depth, double* residual,
                             el_complex* series_side, el_complex* integral_side,
                             int* quad_converged);
/* alphas_out must hold n_grid - 2 entries (interior grid points). */
el_status el_majorization_probe(const el_series* g, uint32_t m, const double* x_grid,
                                size_t n_grid, double* alphas_out, size_t* n_out);

/* ----- identity catalog ------------------------------------------------------ */

el_status el_identity_count(size_t* out);
el_status el_identity_entry(size_t index, const char** name, double* default_tolerance);

#ifdef __cplusplus
}
#endif

#endif /* EULERLAB_H */

#include "eulerlab.h"

#include <cstring>
#include <string>
#include <vector>

#include "eulerlab/goldbach.hpp"
#include "eulerlab/identities.hpp"
#include "eulerlab/numeric.hpp"
#include "eulerlab/primes.hpp"
#include "eulerlab/products.hpp"
#include "eulerlab/registry.hpp"
#include "eulerlab/sequences.hpp"
#include "eulerlab/series.hpp"
#include "eulerlab/types.hpp"

namespace el = eulerlab;

struct el_prime_table {
  el::prime_table impl;
};
struct el_sequence {
  el::base_sequence impl;
};
struct el_sign {
  el::sign_sequence impl;
};
struct el_factor {
  el::general_factor impl;
};
struct el_scan {
  std::vector<el::scan_row> rows;
};
struct el_series {
  el::power_series_trunc impl;
};

namespace {

thread_local std::string g_last_error;

el_status map_code(el::errc code) {
  switch (code) {
    case el::errc::ok: return EL_OK;
    case el::errc::invalid_argument: return EL_ERR_INVALID;
    case el::errc::domain: return EL_ERR_DOMAIN;
    case el::errc::pole: return EL_ERR_POLE;
    case el::errc::branch: return EL_ERR_BRANCH;
    case el::errc::singular_factor: return EL_ERR_SINGULAR_FACTOR;
    case el::errc::out_of_range: return EL_ERR_OUT_OF_RANGE;
    case el::errc::resource_limit: return EL_ERR_RESOURCE_LIMIT;
    case el::errc::overflow: return EL_ERR_OVERFLOW;
    case el::errc::degenerate: return EL_ERR_DEGENERATE;
    case el::errc::grid_resolution: return EL_ERR_GRID_RESOLUTION;
    case el::errc::nonconvergence: return EL_ERR_NONCONVERGENCE;
  }
  return EL_ERR_UNKNOWN;
}

template <typename Fn>
el_status guarded(Fn&& fn) {
  try {
    fn();
    return EL_OK;
  } catch (const el::error& e) {
    g_last_error = e.what();
    return map_code(e.code());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return EL_ERR_RESOURCE_LIMIT;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return EL_ERR_UNKNOWN;
  }
}

el::cplx from_c(el_complex z) { return {z.re, z.im}; }
el_complex to_c(el::cplx z) { return {z.real(), z.imag()}; }
el::truncation_policy from_policy(el_policy p) { return {p.max_terms, p.target_tail}; }
el::subseq_label from_label(el_label l) { return {l.i, l.j}; }
el_label to_label(el::subseq_label l) { return {l.i, l.j}; }

el_report to_report(const el::eval_report& r) {
  return {to_c(r.value), r.terms_used, r.tail_bound, r.converged ? 1 : 0};
}

el_status check_args(bool ok) {
  if (!ok) g_last_error = "null argument";
  return ok ? EL_OK : EL_ERR_INVALID;
}

}  // namespace

extern "C" {

el_policy el_policy_default(void) { return {1'000'000, 1e-10}; }

const char* el_status_message(el_status status) {
  switch (status) {
    case EL_OK: return "ok";
    case EL_ERR_INVALID: return "invalid argument";
    case EL_ERR_DOMAIN: return "outside the operation's domain";
    case EL_ERR_POLE: return "evaluation at a pole";
    case EL_ERR_BRANCH: return "logarithm branch ambiguous";
    case EL_ERR_SINGULAR_FACTOR: return "singular product factor";
    case EL_ERR_OUT_OF_RANGE: return "index out of range";
    case EL_ERR_RESOURCE_LIMIT: return "resource limit exceeded";
    case EL_ERR_OVERFLOW: return "exact integer range exceeded";
    case EL_ERR_DEGENERATE: return "degenerate input";
    case EL_ERR_GRID_RESOLUTION: return "grid finer than the cutoff resolves";
    case EL_ERR_NONCONVERGENCE: return "did not converge";
    default: return "unknown error";
  }
}

const char* el_last_error_message(void) { return g_last_error.c_str(); }

const char* el_version(void) { return "0.1.0"; }

/* ----- primes ----------------------------------------------------------- */

el_status el_sieve(uint64_t limit, el_prime_table** out) {
  if (auto rc = check_args(out != nullptr)) return rc;
  return guarded([&] { *out = new el_prime_table{el::prime_table(limit)}; });
}

void el_prime_table_free(el_prime_table* table) { delete table; }

el_status el_prime_count(const el_prime_table* table, uint64_t* out) {
  if (auto rc = check_args(table && out)) return rc;
  *out = table->impl.count();
  return EL_OK;
}

el_status el_nth_prime(const el_prime_table* table, uint64_t n, uint64_t* out) {
  if (auto rc = check_args(table && out)) return rc;
  return guarded([&] { *out = table->impl.nth_prime(n); });
}

el_status el_mobius(uint64_t n, int32_t* out) {
  if (auto rc = check_args(out != nullptr)) return rc;
  return guarded([&] { *out = el::mobius(n); });
}

/* ----- sequences and signs ---------------------------------------------- */

el_status el_sequence_naturals(uint64_t count, el_sequence** out) {
  if (auto rc = check_args(out != nullptr)) return rc;
  return guarded([&] { *out = new el_sequence{el::base_sequence::naturals(count)}; });
}

el_status el_sequence_primes(const el_prime_table* table, uint64_t count, el_sequence** out) {
  if (auto rc = check_args(table && out)) return rc;
  return guarded(
      [&] { *out = new el_sequence{el::base_sequence::primes(table->impl, count)}; });
}

el_status el_sequence_residue(const el_prime_table* table, el_label label, uint64_t count,
                              el_sequence** out) {
  if (auto rc = check_args(table && out)) return rc;
  return guarded([&] {
    *out = new el_sequence{el::residue_subsequence(table->impl, from_label(label), count)};
  });
}

el_status el_sequence_explicit(const uint64_t* values, size_t count, el_sequence** out) {
  if (auto rc = check_args(values && out)) return rc;
  return guarded([&] {
    *out = new el_sequence{
        el::base_sequence::explicit_list(std::vector<uint64_t>(values, values + count))};
  });
}

void el_sequence_free(el_sequence* seq) { delete seq; }

el_status el_sequence_size(const el_sequence* seq, uint64_t* out) {
  if (auto rc = check_args(seq && out)) return rc;
  *out = seq->impl.size();
  return EL_OK;
}

el_status el_sequence_at(const el_sequence* seq, uint64_t n, uint64_t* out) {
  if (auto rc = check_args(seq && out)) return rc;
  return guarded([&] { *out = seq->impl.at(n); });
}

el_status el_sign_constant(double c, el_sign** out) {
  if (auto rc = check_args(out != nullptr)) return rc;
  return guarded([&] { *out = new el_sign{el::sign_sequence::constant(c)}; });
}

el_status el_sign_alternating(int sigma, el_sign** out) {
  if (auto rc = check_args(out != nullptr)) return rc;
  return guarded([&] { *out = new el_sign{el::sign_sequence::alternating(sigma)}; });
}

el_status el_sign_tail_alternating(uint64_t switch_index, int sigma, el_sign** out) {
  if (auto rc = check_args(out != nullptr)) return rc;
  return guarded(
      [&] { *out = new el_sign{el::sign_sequence::tail_alternating(switch_index, sigma)}; });
}

el_status el_sign_explicit(const double* values, size_t count, el_sign** out) {
  if (auto rc = check_args(values && out)) return rc;
  return guarded([&] {
    *out = new el_sign{
        el::sign_sequence::explicit_list(std::vector<double>(values, values + count))};
  });
}

void el_sign_free(el_sign* sign) { delete sign; }

/* ----- series ------------------------------------------------------------ */

el_status el_dirichlet_eval(const el_sequence* seq, const el_sign* sign, el_complex s,
                            el_policy policy, el_report* out) {
  if (auto rc = check_args(seq && sign && out)) return rc;
  return guarded([&] {
    *out = to_report(el::dirichlet_eval(seq->impl, sign->impl, from_c(s), from_policy(policy)));
  });
}

el_status el_alternating_eval(const el_sequence* seq, const el_sign* sign, el_complex s,
                              double target, el_report* out) {
  if (auto rc = check_args(seq && sign && out)) return rc;
  return guarded([&] {
    *out = to_report(el::alternating_eval(seq->impl, sign->impl, from_c(s), target));
  });
}

el_status el_zeta_ref(el_complex s, el_complex* out) {
  if (auto rc = check_args(out != nullptr)) return rc;
  return guarded([&] { *out = to_c(el::zeta_ref(from_c(s))); });
}

el_status el_gamma_ref(el_complex s, el_complex* out) {
  if (auto rc = check_args(out != nullptr)) return rc;
  return guarded([&] { *out = to_c(el::gamma_ref(from_c(s))); });
}

el_status el_prime_zeta_direct(const el_prime_table* table, el_complex s, el_policy policy,
                               el_report* out) {
  if (auto rc = check_args(table && out)) return rc;
  return guarded([&] {
    *out = to_report(el::prime_zeta_direct(table->impl, from_c(s), from_policy(policy)));
  });
}

el_status el_prime_zeta_mobius(el_complex s, uint32_t n_max, el_report* out) {
  if (auto rc = check_args(out != nullptr)) return rc;
  return guarded([&] { *out = to_report(el::prime_zeta_mobius(from_c(s), n_max)); });
}

el_status el_z_deformed_prime_zeta(const el_prime_table* table, el_complex z, el_complex s,
                                   el_policy policy, el_report* out) {
  if (auto rc = check_args(table && out)) return rc;
  return guarded([&] {
    *out = to_report(
        el::z_deformed_prime_zeta(table->impl, from_c(z), from_c(s), from_policy(policy)));
  });
}

/* ----- products ----------------------------------------------------------- */

el_status el_factor_create(const double* coefficients, size_t count, el_factor** out) {
  if (auto rc = check_args(coefficients && out)) return rc;
  return guarded([&] {
    *out = new el_factor{
        el::general_factor(std::vector<double>(coefficients, coefficients + count))};
  });
}

void el_factor_free(el_factor* factor) { delete factor; }

el_status el_factor_regularized_ratio(const el_factor* g, uint32_t degree, el_factor** out) {
  if (auto rc = check_args(g && out)) return rc;
  return guarded([&] { *out = new el_factor{el::regularized_ratio(g->impl, degree)}; });
}

el_status el_derive_convergence_params(const el_factor* g, double delta, double* C_out,
                                       double* lambda_out) {
  if (auto rc = check_args(g && C_out && lambda_out)) return rc;
  return guarded([&] {
    const auto params = el::derive_convergence_params(g->impl, delta);
    *C_out = params.C;
    *lambda_out = params.lambda;
  });
}

el_status el_euler_product_eval(const el_sequence* seq, const el_sign* sign, el_complex s,
                                el_policy policy, el_report* out) {
  if (auto rc = check_args(seq && sign && out)) return rc;
  return guarded([&] {
    *out =
        to_report(el::euler_product_eval(seq->impl, sign->impl, from_c(s), from_policy(policy)));
  });
}

el_status el_general_product_eval(const el_sequence* seq, const el_factor* factor,
                                  el_complex s, el_policy policy, el_report* out) {
  if (auto rc = check_args(seq && factor && out)) return rc;
  return guarded([&] {
    *out = to_report(
        el::general_product_eval(seq->impl, factor->impl, from_c(s), from_policy(policy)));
  });
}

el_status el_continued_product_eval(const el_sequence* seq, const el_sign* sign, el_complex s,
                                    el_policy policy, el_report* out) {
  if (auto rc = check_args(seq && sign && out)) return rc;
  return guarded([&] {
    *out = to_report(
        el::continued_product_eval(seq->impl, sign->impl, from_c(s), from_policy(policy)));
  });
}

el_status el_exp_factorization_residual(const el_prime_table* table, el_complex s,
                                        el_policy policy, double* residual) {
  if (auto rc = check_args(table && residual)) return rc;
  return guarded([&] {
    *residual =
        el::regularized_exp_identity_residual(table->impl, from_c(s), from_policy(policy));
  });
}

el_status el_truncation_discrepancy(const el_prime_table* table, uint32_t N, el_complex s,
                                    el_policy policy, double* measured, double* bound) {
  if (auto rc = check_args(table && measured && bound)) return rc;
  return guarded([&] {
    const auto check =
        el::truncation_discrepancy_check(table->impl, N, from_c(s), from_policy(policy));
    *measured = check.measured;
    *bound = check.bound;
  });
}

el_status el_convergence_scan(const el_sequence* seq, const el_factor* factor,
                              const double* sigmas, size_t n_sigmas,
                              const uint64_t* ladder_terms, size_t ladder_len, el_scan** out) {
  if (auto rc = check_args(seq && factor && sigmas && ladder_terms && out)) return rc;
  return guarded([&] {
    std::vector<el::truncation_policy> ladder(ladder_len);
    for (size_t i = 0; i < ladder_len; ++i) ladder[i] = {ladder_terms[i], 0.0};
    *out = new el_scan{el::convergence_scan(seq->impl, factor->impl,
                                            std::vector<double>(sigmas, sigmas + n_sigmas),
                                            ladder)};
  });
}

void el_scan_free(el_scan* scan) { delete scan; }

el_status el_scan_size(const el_scan* scan, size_t* out) {
  if (auto rc = check_args(scan && out)) return rc;
  *out = scan->rows.size();
  return EL_OK;
}

el_status el_scan_row(const el_scan* scan, size_t index, double* sigma, uint64_t* terms,
                      double* abs_delta, double* rate, int* flag_out) {
  if (auto rc = check_args(scan && sigma && terms && abs_delta && rate && flag_out)) return rc;
  if (index >= scan->rows.size()) {
    g_last_error = "scan row index out of range";
    return EL_ERR_OUT_OF_RANGE;
  }
  const auto& row = scan->rows[index];
  *sigma = row.sigma;
  *terms = row.terms;
  *abs_delta = row.abs_delta;
  *rate = row.rate;
  *flag_out = row.flag == "decay" ? 1 : 0;
  return EL_OK;
}

/* ----- identities ---------------------------------------------------------- */

el_status el_split_children(el_label label, el_label* left, el_label* right) {
  if (auto rc = check_args(left && right)) return rc;
  return guarded([&] {
    const auto children = el::split_children(from_label(label));
    *left = to_label(children.first);
    *right = to_label(children.second);
  });
}

el_status el_split_residual(const el_prime_table* table, el_label label, el_complex s,
                            el_policy policy, double* residual) {
  if (auto rc = check_args(table && residual)) return rc;
  return guarded([&] {
    *residual = el::split_factorization_residual(table->impl, from_label(label), from_c(s),
                                                 from_policy(policy));
  });
}

el_status el_even_odd_quotient(const el_prime_table* table, el_label label, el_complex s,
                               el_policy policy, el_complex* out) {
  if (auto rc = check_args(table && out)) return rc;
  return guarded([&] {
    *out = to_c(
        el::even_odd_quotient(table->impl, from_label(label), from_c(s), from_policy(policy)));
  });
}

el_status el_leibniz_div(el_complex a, el_complex b, el_complex* out) {
  if (auto rc = check_args(out != nullptr)) return rc;
  return guarded([&] { *out = to_c(el::leibniz_div(from_c(a), from_c(b))); });
}

el_status el_assoc_defect(el_complex a, el_complex b, el_complex c, el_complex* defect,
                          el_complex* closed_form) {
  if (auto rc = check_args(defect && closed_form)) return rc;
  return guarded([&] {
    const auto result = el::assoc_defect(from_c(a), from_c(b), from_c(c));
    *defect = to_c(result.defect);
    *closed_form = to_c(result.closed_form);
  });
}

el_status el_skew_bracket(el_complex a, el_complex b, int sign, el_complex* out) {
  if (auto rc = check_args(out != nullptr)) return rc;
  return guarded([&] { *out = to_c(el::skew_bracket(from_c(a), from_c(b), sign)); });
}

el_status el_jacobi_defect(el_complex a, el_complex b, el_complex c, el_complex* lhs,
                           el_complex* derived_form, el_complex* paper_form) {
  if (auto rc = check_args(lhs && derived_form && paper_form)) return rc;
  return guarded([&] {
    const auto result = el::jacobi_defect(from_c(a), from_c(b), from_c(c));
    *lhs = to_c(result.lhs);
    *derived_form = to_c(result.derived_form);
    *paper_form = to_c(result.paper_form);
  });
}

el_status el_interlace_check(const el_sequence* a, const el_sequence* b, int* interlaced,
                             uint64_t* offset, int* insufficient_data) {
  if (auto rc = check_args(a && b && interlaced && offset && insufficient_data)) return rc;
  return guarded([&] {
    const auto result = el::interlace_check(a->impl, b->impl);
    *interlaced = result.interlaced ? 1 : 0;
    *offset = result.offset;
    *insufficient_data = result.insufficient_data ? 1 : 0;
  });
}

el_status el_catalan(uint64_t n, uint64_t* out) {
  if (auto rc = check_args(out != nullptr)) return rc;
  return guarded([&] { *out = el::catalan(n); });
}

/* ----- goldbach ------------------------------------------------------------- */

el_status el_gk_series(const el_prime_table* table, el_label label, uint32_t k, uint64_t N,
                       el_series** out) {
  if (auto rc = check_args(table && out)) return rc;
  return guarded(
      [&] { *out = new el_series{el::gk_series(table->impl, from_label(label), k, N)}; });
}

el_status el_series_explicit(const uint64_t* coefficients, size_t count, el_series** out) {
  if (auto rc = check_args(coefficients && out)) return rc;
  if (count == 0) {
    g_last_error = "empty coefficient list";
    return EL_ERR_INVALID;
  }
  auto* series = new el_series{};
  series->impl.degree_cutoff = count - 1;
  series->impl.coefficients.assign(coefficients, coefficients + count);
  series->impl.truncated_tail = false;
  *out = series;
  return EL_OK;
}

void el_series_free(el_series* series) { delete series; }

el_status el_series_cutoff(const el_series* series, uint64_t* out) {
  if (auto rc = check_args(series && out)) return rc;
  *out = series->impl.degree_cutoff;
  return EL_OK;
}

el_status el_series_coeff(const el_series* series, uint64_t index, uint64_t* out) {
  if (auto rc = check_args(series && out)) return rc;
  if (index >= series->impl.coefficients.size()) {
    g_last_error = "coefficient index out of range";
    return EL_ERR_OUT_OF_RANGE;
  }
  *out = series->impl.coefficients[index];
  return EL_OK;
}

el_status el_power_counts(const el_series* g, uint32_t m, el_series** out) {
  if (auto rc = check_args(g && out)) return rc;
  return guarded([&] {
    const auto counts = el::power_counts(g->impl, m);
    auto* series = new el_series{};
    series->impl.degree_cutoff = counts.cutoff;
    series->impl.coefficients = counts.counts;
    series->impl.k = counts.k;
    series->impl.label = counts.label;
    series->impl.truncated_tail = g->impl.truncated_tail;
    *out = series;
  });
}

el_status el_brute_force_counts(const el_prime_table* table, el_label label, uint32_t k,
                                uint32_t m, uint64_t N, uint64_t budget, el_series** out) {
  if (auto rc = check_args(table && out)) return rc;
  return guarded([&] {
    const auto counts =
        el::brute_force_counts(table->impl, from_label(label), k, m, N, budget);
    auto* series = new el_series{};
    series->impl.degree_cutoff = counts.cutoff;
    series->impl.coefficients = counts.counts;
    series->impl.k = counts.k;
    series->impl.label = counts.label;
    *out = series;
  });
}

el_status el_goldbach_scan(const el_prime_table* table, uint64_t N, uint64_t* buf,
                           size_t buf_len, size_t* n_found) {
  if (auto rc = check_args(table && n_found)) return rc;
  return guarded([&] {
    const auto violations = el::goldbach_scan(table->impl, N);
    *n_found = violations.size();
    if (buf && !violations.empty()) {
      const size_t copy = std::min(buf_len, violations.size());
      std::memcpy(buf, violations.data(), copy * sizeof(uint64_t));
    }
  });
}

el_status el_mellin_residual(const el_prime_table* table, el_label label, uint32_t k,
                             el_complex s, double abs_tol, int max_depth, double* residual,
                             el_complex* series_side, el_complex* integral_side,
                             int* quad_converged) {
  if (auto rc = check_args(table && residual)) return rc;
  return guarded([&] {
    const auto report = el::mellin_residual(table->impl, from_label(label), k, from_c(s),
                                            el::quadrature_spec{abs_tol, max_depth});
    *residual = report.residual;
    if (series_side) *series_side = to_c(report.series_side);
    if (integral_side) *integral_side = to_c(report.integral_side);
    if (quad_converged) *quad_converged = report.quad_converged ? 1 : 0;
  });
}

el_status el_majorization_probe(const el_series* g, uint32_t m, const double* x_grid,
                                size_t n_grid, double* alphas_out, size_t* n_out) {
  if (auto rc = check_args(g && x_grid && alphas_out && n_out)) return rc;
  return guarded([&] {
    const auto rows =
        el::majorization_probe(g->impl, m, std::span<const double>(x_grid, n_grid));
    *n_out = rows.size();
    for (size_t i = 0; i < rows.size(); ++i) alphas_out[i] = rows[i].alpha;
  });
}

/* ----- identity catalog ------------------------------------------------------ */

el_status el_identity_count(size_t* out) {
  if (auto rc = check_args(out != nullptr)) return rc;
  *out = el::registry::kIdentityCatalog.size();
  return EL_OK;
}

el_status el_identity_entry(size_t index, const char** name, double* default_tolerance) {
  if (auto rc = check_args(name && default_tolerance)) return rc;
  if (index >= el::registry::kIdentityCatalog.size()) {
    g_last_error = "identity index out of range";
    return EL_ERR_OUT_OF_RANGE;
  }
  *name = el::registry::kIdentityCatalog[index].name.data();
  *default_tolerance = el::registry::kIdentityCatalog[index].default_tolerance;
  return EL_OK;
}

}  // extern "C"

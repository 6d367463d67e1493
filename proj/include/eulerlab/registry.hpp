#pragma once

#include <array>
#include <span>
#include <string_view>

namespace eulerlab::registry {

/// Named identity checks with their default tolerances. A tolerance of 0
/// means the check compares a measured value against its own bound.
struct identity_entry {
  std::string_view name;
  double default_tolerance;
};

inline constexpr std::array<identity_entry, 9> kIdentityCatalog{{
    {"euler-vs-zeta", 1e-6},
    {"plus-product-quotient", 1e-8},
    {"exp-factorization", 1e-9},
    {"mobius-inversion-pair", 1e-10},
    {"split-factorization", 1e-9},
    {"truncation-bound", 0.0},
    {"assoc-defect", 1e-13},
    {"jacobi-defect", 1e-13},
    {"mellin", 1e-6},
}};

/// Library operations reachable from each CLI command; the coverage test
/// asserts the union spans every operation below.
struct command_entry {
  std::string_view command;
  std::span<const std::string_view> operations;
};

namespace detail {
inline constexpr std::string_view kPrimesOps[] = {"sieve", "nth_prime",
                                                  "residue_subsequence", "mobius"};
inline constexpr std::string_view kDirichletOps[] = {"dirichlet_eval", "alternating_eval"};
inline constexpr std::string_view kProductOps[] = {"euler_product_eval",
                                                   "general_product_eval",
                                                   "continued_product_eval",
                                                   "derive_convergence_params"};
inline constexpr std::string_view kPrimeZetaOps[] = {"prime_zeta_direct", "prime_zeta_mobius",
                                                     "z_deformed_prime_zeta", "zeta_ref"};
inline constexpr std::string_view kIdentityOps[] = {
    "regularized_exp_identity_residual", "truncation_discrepancy_check", "zeta_ref",
    "euler_product_eval", "prime_zeta_direct", "prime_zeta_mobius",
    "split_factorization_residual", "assoc_defect", "jacobi_defect", "mellin_residual",
    "list_identities"};
inline constexpr std::string_view kSplitOps[] = {"split_children",
                                                 "split_factorization_residual",
                                                 "even_odd_quotient", "interlace_check"};
inline constexpr std::string_view kAlgebraOps[] = {"leibniz_div", "assoc_defect",
                                                   "skew_bracket", "jacobi_defect", "catalan"};
inline constexpr std::string_view kGoldbachOps[] = {"gk_series", "power_counts",
                                                    "brute_force_counts", "goldbach_scan",
                                                    "majorization_probe"};
inline constexpr std::string_view kMellinOps[] = {"mellin_residual", "gamma_ref"};
inline constexpr std::string_view kScanOps[] = {"convergence_scan"};
}  // namespace detail

inline constexpr std::array<command_entry, 10> kCommands{{
    {"primes", detail::kPrimesOps},
    {"eval-dirichlet", detail::kDirichletOps},
    {"eval-product", detail::kProductOps},
    {"prime-zeta", detail::kPrimeZetaOps},
    {"identity", detail::kIdentityOps},
    {"split", detail::kSplitOps},
    {"algebra", detail::kAlgebraOps},
    {"goldbach", detail::kGoldbachOps},
    {"mellin", detail::kMellinOps},
    {"scan", detail::kScanOps},
}};

/// Every public library operation.
inline constexpr std::array<std::string_view, 33> kAllOperations{
    "sieve", "nth_prime", "residue_subsequence", "mobius",
    "dirichlet_eval", "alternating_eval", "zeta_ref", "gamma_ref",
    "prime_zeta_direct", "prime_zeta_mobius", "z_deformed_prime_zeta",
    "euler_product_eval", "general_product_eval", "derive_convergence_params",
    "continued_product_eval", "regularized_exp_identity_residual",
    "truncation_discrepancy_check", "convergence_scan",
    "split_children", "split_factorization_residual", "even_odd_quotient",
    "leibniz_div", "assoc_defect", "skew_bracket", "jacobi_defect",
    "interlace_check", "catalan",
    "gk_series", "power_counts", "brute_force_counts", "goldbach_scan",
    "mellin_residual", "majorization_probe",
};

}  // namespace eulerlab::registry

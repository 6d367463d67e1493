#pragma once

#include <cstdint>
#include <span>

#include "eulerlab/primes.hpp"
#include "eulerlab/sequences.hpp"
#include "eulerlab/types.hpp"

namespace eulerlab {

/// Truncated D^l_A(s) = sum l_n a_n^{-s}. Constant signs need Re(s) > 1 to
/// converge (reported via the converged flag, not an error); eventually
/// alternating signs carry a first-omitted-term tail bound valid for
/// Re(s) > 0.
eval_report dirichlet_eval(const base_sequence& A, const sign_sequence& l, cplx s,
                           truncation_policy policy);

/// D^l_A(s) for eventually-alternating l, Re(s) > 0: the non-alternating
/// head is summed directly and the alternating tail is accelerated with an
/// iterated-averaging Euler transformation whose order adapts to `target`.
eval_report alternating_eval(const base_sequence& A, const sign_sequence& l, cplx s,
                             double target = 1e-12);

/// Reference zeta: eta(s)/(1 - 2^{1-s}) with Chebyshev-weighted (CVZ)
/// acceleration of eta; direct summation for Re(s) >= 24 and an
/// Euler-Maclaurin fallback on the ring where 1 - 2^{1-s} nearly vanishes.
/// Accuracy target 1e-12 for |s| <= 50. Throws pole at s=1, domain for
/// Re(s) <= 0.
cplx zeta_ref(cplx s);

/// Gamma via the Lanczos approximation (g = 607/128, 15 terms), reflection
/// for Re(s) < 1/2. Throws pole at non-positive integers.
cplx gamma_ref(cplx s);

/// Truncated sum over table primes of p^{-s}; integral-comparison tail bound
/// for Re(s) > 1, non-convergence flag otherwise.
eval_report prime_zeta_direct(const prime_table& table, cplx s, truncation_policy policy);

/// P(s) = sum_{n<=n_max} mu(n) ln zeta(ns) / n for Re(s) > 1/2. Principal
/// logarithm; the n=1 term is always the principal branch (on the real
/// segment (1/2,1) this makes the value complex with Im = pi). For n >= 2
/// the log is taken only where it is winding-safe: |zeta(ns)-1| < 1 or
/// zeta(ns) on the positive real axis; otherwise a branch error is thrown.
eval_report prime_zeta_mobius(cplx s, std::uint32_t n_max);

/// sum_p z^p p^{-s}; |z| < 1 with Re(s) > 0, or |z| = 1 with Re(s) > 1.
eval_report z_deformed_prime_zeta(const prime_table& table, cplx z, cplx s,
                                  truncation_policy policy);

struct accel_result {
  cplx value{0.0, 0.0};
  double err_estimate = std::numeric_limits<double>::infinity();
  std::uint64_t terms_used = 0;
};

/// Limit estimate of sum(terms...) for a (signed, eventually alternating)
/// term stream: partial sums are repeatedly averaged pairwise and the level
/// with the smallest last-step change wins. Robust against the irregular
/// term magnitudes of prime-indexed series.
accel_result euler_average_limit(std::span<const cplx> terms, double target);

}  // namespace eulerlab

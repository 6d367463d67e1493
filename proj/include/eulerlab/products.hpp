#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "eulerlab/primes.hpp"
#include "eulerlab/sequences.hpp"
#include "eulerlab/types.hpp"

namespace eulerlab {

/// Truncated power series g(x) = sum_{i>=1} c_i x^i with g(0) = 0, used as
/// the uniform factor of a generalized Euler product 1/(1 - g(a_n^{-s})).
/// lowest_degree is the convergence exponent lambda; gap_degree is the first
/// nonzero degree >= 2 (0 when there is none).
class general_factor {
public:
  /// coefficients[d] is c_d; coefficients[0] must be 0.
  explicit general_factor(std::vector<double> coefficients, double disc_radius = 0.75);

  cplx eval(cplx x) const;
  unsigned lowest_degree() const { return lowest_degree_; }
  unsigned gap_degree() const { return gap_degree_; }
  double disc_radius() const { return disc_radius_; }
  const std::vector<double>& coefficients() const { return coefficients_; }

private:
  std::vector<double> coefficients_;
  unsigned lowest_degree_ = 0;
  unsigned gap_degree_ = 0;
  double disc_radius_ = 0.75;
};

/// h with 1/(1-h) = (1 - c_1 x)/(1 - g(x)): the ratio factor whose product
/// converges down to Re(s) > 1/gap_degree. Power-series division truncated
/// at `degree`.
general_factor regularized_ratio(const general_factor& g, unsigned degree);

struct convergence_params {
  double C = 0.0;
  double delta = 0.0;
  double lambda = 0.0;
};

/// lambda = lowest degree of g; C = 1.1 * max |g(x)|/|x|^lambda sampled on
/// |x| <= delta.
convergence_params derive_convergence_params(const general_factor& g, double delta);

/// prod 1/(1 - l_n a_n^{-s}), accumulated in log space. Re(s) > 1 for the
/// absolute-convergence regime; elements must be >= 2.
eval_report euler_product_eval(const base_sequence& A, const sign_sequence& l, cplx s,
                               truncation_policy policy);

/// prod 1/(1 - g(a_n^{-s})) for Re(s) > 1/lambda(g).
eval_report general_product_eval(const base_sequence& A, const general_factor& g, cplx s,
                                 truncation_policy policy);

/// zeta^l_A(s) = exp(D^l_A(s)) * prod exp(-l_n a_n^{-s})/(1 - l_n a_n^{-s})
/// for eventually-alternating l and Re(s) > 1/2. The exponential factor uses
/// the accelerated alternating evaluation; the correction factors carry the
/// explicit leading-order cancellation, so they are O(a_n^{-2 Re s}).
eval_report continued_product_eval(const base_sequence& A, const sign_sequence& l, cplx s,
                                   truncation_policy policy);

/// | exp(P(s)) - zeta(s) * prod_p exp(p^{-s})(1 - p^{-s}) | over the table's
/// primes; P(s) is the Moebius route for Re(s) <= 1 and the direct route
/// for Re(s) > 1.
double regularized_exp_identity_residual(const prime_table& table, cplx s,
                                         truncation_policy policy);

struct truncation_check {
  double measured = 0.0;
  double bound = 0.0;
};

/// measured = |zeta(s) - zeta^{l^N}_P(s)| for the tail-alternating sign
/// switch at index N; bound = 2 p_N^{1-Re(s)} / (Re(s)-1).
truncation_check truncation_discrepancy_check(const prime_table& table, std::uint32_t N,
                                              cplx s, truncation_policy policy);

struct scan_row {
  double sigma = 0.0;
  std::uint64_t terms = 0;
  double abs_delta = 0.0;
  double rate = 0.0;
  std::string flag;
};

/// Empirical decay of |partial(2M) - partial(M)| of the log-product across a
/// policy ladder, one row per sigma. flag is "decay" when the deltas shrink
/// at a positive rate, "no-convergence" otherwise.
std::vector<scan_row> convergence_scan(const base_sequence& A, const general_factor& g,
                                       const std::vector<double>& sigma_grid,
                                       const std::vector<truncation_policy>& ladder);

}  // namespace eulerlab

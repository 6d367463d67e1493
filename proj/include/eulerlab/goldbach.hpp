#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "eulerlab/primes.hpp"
#include "eulerlab/sequences.hpp"
#include "eulerlab/types.hpp"

namespace eulerlab {

/// Truncated power series with non-negative integer coefficients c_0..c_N.
/// For g_k over a prime subsequence, the nonzero coefficients are exactly 1
/// and sit at indices p^k.
struct power_series_trunc {
  std::uint64_t degree_cutoff = 0;
  std::vector<std::uint64_t> coefficients;  // size degree_cutoff + 1
  std::uint32_t k = 1;                      // power, metadata
  subseq_label label{};                     // source subsequence, metadata
  // True when the series is a truncation of an infinite one (g_k over the
  // primes); false for explicitly-given finite series, which are exact.
  bool truncated_tail = true;
};

/// Ordered Goldbach-Waring representation counts r_{k,m}(n), 0 <= n <= cutoff.
struct rep_table {
  std::uint32_t k = 1;
  std::uint32_t m = 1;
  subseq_label label{};
  std::uint64_t cutoff = 0;
  std::vector<std::uint64_t> counts;  // size cutoff + 1
  /// Smallest representable sum m * (min subsequence element)^k, when known.
  std::uint64_t min_sum = 0;
};

/// g_k(x) = sum x^{p^k} over the labeled subsequence, truncated at N.
power_series_trunc gk_series(const prime_table& table, subseq_label label, std::uint32_t k,
                             std::uint64_t N);

/// Coefficients of g^m up to the cutoff: ordered m-tuple counts. Convolution
/// is schoolbook up to the transform threshold (4096) and FFT-backed above
/// it, with an exactness margin check on the rounded transform output.
rep_table power_counts(const power_series_trunc& g, std::uint32_t m);

/// Independent oracle: nested enumeration of ordered m-tuples with
/// sum p_i^k <= N. `budget` caps the number of enumeration steps.
rep_table brute_force_counts(const prime_table& table, subseq_label label, std::uint32_t k,
                             std::uint32_t m, std::uint64_t N,
                             std::uint64_t budget = 200'000'000);

/// Every even n in [4, N] with r_{1,2}(n) = 0 over the full primes.
std::vector<std::uint64_t> goldbach_scan(const prime_table& table, std::uint64_t N);

struct quadrature_spec {
  double abs_tol = 1e-9;
  int max_depth = 40;
};

struct mellin_report {
  double residual = 0.0;
  cplx series_side{0.0, 0.0};
  cplx integral_side{0.0, 0.0};
  bool quad_converged = true;
};

/// | Gamma(s/k) sum p^{-s} - integral_0^inf t^{s/k-1} sum exp(-p^k t) dt |
/// with both sides over the same finite subsequence primes from the table.
/// The integral splits at t = 1: u = ln(1/t) substitution below, exponential
/// cutoff above, adaptive Simpson on both pieces.
mellin_report mellin_residual(const prime_table& table, subseq_label label, std::uint32_t k,
                              cplx s, quadrature_spec quad = {});

struct probe_row {
  double x = 0.0;
  double alpha = 0.0;
};

/// Local exponent alpha(x) = -d ln g(x) / d ln(1-x) by centered differences
/// on the grid (rows for interior grid points). Compares against the 1/m
/// reference slope of a hypothetical (1-x)^{1/m} majorant.
std::vector<probe_row> majorization_probe(const power_series_trunc& g, std::uint32_t m,
                                          std::span<const double> x_grid);

}  // namespace eulerlab

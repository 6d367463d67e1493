#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "eulerlab/primes.hpp"
#include "eulerlab/sequences.hpp"
#include "eulerlab/types.hpp"

namespace eulerlab {

/// Children of (i,j) in the subsequence tree: (i+1, j) and (i+1, j + 2^i).
std::pair<subseq_label, subseq_label> split_children(subseq_label label);

/// Rooted perfect binary tree of subsequence labels down to `depth`.
struct split_tree {
  explicit split_tree(std::uint32_t depth);
  std::uint32_t depth;
  std::vector<subseq_label> leaves() const;  // the 2^depth labels at `depth`
};

/// |exp(D_node(s)) - exp(-sum (-1)^n node_n^{-s}) * exp(D_even(s))^2| where
/// node is the labeled prime subsequence and D_even sums its even-indexed
/// elements. Each of the three series is truncated at policy.max_terms terms
/// independently, so the residual is truncation-dominated and shrinks as the
/// policy grows. max_terms = 0 is the degenerate empty-sum case (residual 0).
double split_factorization_residual(const prime_table& table, subseq_label label, cplx s,
                                    truncation_policy policy);

/// exp(sum node_{2n}^{-s}) / exp(sum node_{2n+1}^{-s}), evaluated as the exp
/// of the accelerated alternating series, so Re(s) > 0 suffices.
cplx even_odd_quotient(const prime_table& table, subseq_label label, cplx s,
                       truncation_policy policy);

/// Leibniz division a/b.
cplx leibniz_div(cplx a, cplx b);

struct assoc_result {
  cplx defect;       // a*(b o c) - (a o b) o c = a c / b - a/(b c)
  cplx closed_form;  // (a/b)(c - 1/c)
};
assoc_result assoc_defect(cplx a, cplx b, cplx c);

/// a/b + sign * b/a.
cplx skew_bracket(cplx a, cplx b, int sign);

struct jacobi_result {
  cplx lhs;           // [[a,b],c] + [[b,c],a] + [[c,a],b], minus bracket
  cplx derived_form;  // -abc (1/(a^2-b^2) + 1/(b^2-c^2) + 1/(c^2-a^2))
  cplx paper_form;    // abc / (-(...) - (...) - (...)); kept for comparison,
                      // disagrees with lhs on generic inputs
};
jacobi_result jacobi_defect(cplx a, cplx b, cplx c);

struct interlace_result {
  bool interlaced = false;
  std::uint64_t offset = 0;        // merged-order position where alternation starts
  std::uint64_t checked = 0;       // elements examined past the offset
  bool insufficient_data = false;  // fewer than 8 post-offset elements
};

/// True iff beyond some offset the merged order of A and B strictly
/// alternates up to the common cutoff (finite-horizon check).
interlace_result interlace_check(const base_sequence& A, const base_sequence& B);

/// (1/n) * binomial(2n-2, n-1), exact; throws overflow past the uint64 range.
std::uint64_t catalan(std::uint64_t n);

}  // namespace eulerlab

#include "eulerlab/identities.hpp"

#include <algorithm>
#include <cmath>

#include "eulerlab/numeric.hpp"
#include "eulerlab/series.hpp"

namespace eulerlab {

std::pair<subseq_label, subseq_label> split_children(subseq_label label) {
  require(label.valid(), errc::invalid_argument, "subsequence label requires j < 2^i");
  const std::uint64_t stride = std::uint64_t{1} << label.i;
  return {subseq_label{label.i + 1, label.j},
          subseq_label{label.i + 1, label.j + stride}};
}

split_tree::split_tree(std::uint32_t d) : depth(d) {
  require(d < 32, errc::invalid_argument, "tree depth out of range");
}

std::vector<subseq_label> split_tree::leaves() const {
  std::vector<subseq_label> out;
  out.reserve(std::size_t{1} << depth);
  for (std::uint64_t j = 0; j < (std::uint64_t{1} << depth); ++j)
    out.push_back(subseq_label{depth, j});
  return out;
}

double split_factorization_residual(const prime_table& table, subseq_label label, cplx s,
                                    truncation_policy policy) {
  require_finite(s, "s");
  if (policy.max_terms == 0) return 0.0;  // empty sums: both sides are 1

  const std::uint64_t m = policy.max_terms;
  // node needs indices up to 2m for its even-indexed half.
  const auto node = residue_subsequence(table, label, 2 * m);

  kahan_sum node_sum, alt_sum, even_sum;
  for (std::uint64_t n = 1; n <= m; ++n) {
    const cplx t = pow_neg(node.at(n), s);
    node_sum.add(t);
    alt_sum.add((n % 2 == 0 ? 1.0 : -1.0) * t);
  }
  for (std::uint64_t k = 1; k <= m; ++k) even_sum.add(pow_neg(node.at(2 * k), s));

  const cplx lhs = std::exp(node_sum.value());
  const cplx right_exp = std::exp(even_sum.value());
  const cplx rhs = std::exp(-alt_sum.value()) * right_exp * right_exp;
  return std::abs(lhs - rhs);
}

cplx even_odd_quotient(const prime_table& table, subseq_label label, cplx s,
                       truncation_policy policy) {
  require_finite(s, "s");
  require(s.real() > 0.0, errc::domain, "even/odd quotient needs Re(s) > 0");
  require(policy.max_terms >= 1, errc::invalid_argument, "policy.max_terms must be >= 1");

  // exp(sum_even - sum_odd) = exp(sum (-1)^n node_n^{-s}).
  const std::uint64_t avail = table.count() > label.j
                                  ? (table.count() - label.j) >> label.i
                                  : 0;
  require(avail >= 1, errc::out_of_range, "prime table exhausted for this label");
  const auto node = residue_subsequence(table, label,
                                        std::min<std::uint64_t>(policy.max_terms, avail));
  const auto alt = alternating_eval(node, sign_sequence::alternating(1), s,
                                    policy.target_tail);
  return std::exp(alt.value);
}

cplx leibniz_div(cplx a, cplx b) {
  require(b != cplx(0.0, 0.0), errc::degenerate, "Leibniz division by zero");
  return a / b;
}

assoc_result assoc_defect(cplx a, cplx b, cplx c) {
  require(b != cplx(0.0, 0.0) && c != cplx(0.0, 0.0), errc::degenerate,
          "assoc defect needs b, c nonzero");
  assoc_result out;
  out.defect = a * c / b - a / (b * c);
  out.closed_form = (a / b) * (c - 1.0 / c);
  return out;
}

cplx skew_bracket(cplx a, cplx b, int sign) {
  require(sign == 1 || sign == -1, errc::invalid_argument, "bracket sign must be +-1");
  require(a != cplx(0.0, 0.0) && b != cplx(0.0, 0.0), errc::degenerate,
          "skew bracket needs nonzero arguments");
  return a / b + static_cast<double>(sign) * (b / a);
}

jacobi_result jacobi_defect(cplx a, cplx b, cplx c) {
  require(a != cplx(0.0, 0.0) && b != cplx(0.0, 0.0) && c != cplx(0.0, 0.0),
          errc::degenerate, "jacobi defect needs nonzero arguments");
  const cplx a2 = a * a, b2 = b * b, c2 = c * c;
  const double scale = std::max({std::abs(a2), std::abs(b2), std::abs(c2)});
  require(std::abs(a2 - b2) > 1e-12 * scale && std::abs(b2 - c2) > 1e-12 * scale &&
              std::abs(c2 - a2) > 1e-12 * scale,
          errc::degenerate, "jacobi defect needs pairwise distinct squares");

  const auto minus = [](cplx x, cplx y) { return x / y - y / x; };
  jacobi_result out;
  out.lhs = minus(minus(a, b), c) + minus(minus(b, c), a) + minus(minus(c, a), b);
  const cplx recip = 1.0 / (a2 - b2) + 1.0 / (b2 - c2) + 1.0 / (c2 - a2);
  out.derived_form = -a * b * c * recip;
  out.paper_form = a * b * c / (-recip);
  return out;
}

interlace_result interlace_check(const base_sequence& A, const base_sequence& B) {
  interlace_result out;
  if (A.elements.empty() || B.elements.empty()) {
    out.insufficient_data = true;
    return out;
  }
  const std::uint64_t cutoff = std::min(A.elements.back(), B.elements.back());

  // Merge tags up to the cutoff; a shared value is a hard violation.
  std::vector<int> tags;
  std::size_t ia = 0, ib = 0;
  bool tie = false;
  while (ia < A.elements.size() && ib < B.elements.size()) {
    const std::uint64_t va = A.elements[ia], vb = B.elements[ib];
    if (std::min(va, vb) > cutoff) break;
    if (va == vb) {
      tags.push_back(2);  // tie marker
      tie = true;
      ++ia;
      ++ib;
      continue;
    }
    if (va < vb) {
      tags.push_back(0);
      ++ia;
    } else {
      tags.push_back(1);
      ++ib;
    }
  }
  (void)tie;

  // Alternation starts after the last violation (adjacent equal tags or a tie).
  std::size_t start = 0;
  for (std::size_t i = 0; i < tags.size(); ++i) {
    if (tags[i] == 2 || (i > 0 && tags[i] == tags[i - 1])) start = i + 1;
  }
  const std::size_t post = tags.size() - std::min(start, tags.size());
  out.offset = start;
  out.checked = post;
  if (post < 8) {
    out.insufficient_data = true;
    out.interlaced = false;
    return out;
  }
  out.interlaced = true;
  return out;
}

std::uint64_t catalan(std::uint64_t n) {
  require(n >= 1, errc::invalid_argument, "catalan index is 1-based");
  // The sequence is increasing and already past uint64 at n = 38; a generous
  // early cut keeps the 128-bit intermediates below their own limit.
  require(n < 64, errc::overflow,
          "catalan(" + std::to_string(n) + ") exceeds exact integer range");
  // binomial(2n-2, n-1) by the exact multiplicative loop, then divide by n.
  const std::uint64_t a = 2 * n - 2, b = n - 1;
  unsigned __int128 r = 1;
  for (std::uint64_t k = 1; k <= b; ++k) {
    r = r * (a - b + k) / k;  // exact at every step
    require(r <= (unsigned __int128)std::numeric_limits<std::uint64_t>::max() * n,
            errc::overflow, "catalan(" + std::to_string(n) + ") exceeds exact integer range");
  }
  r /= n;  // the formula is integral
  require(r <= std::numeric_limits<std::uint64_t>::max(), errc::overflow,
          "catalan(" + std::to_string(n) + ") exceeds exact integer range");
  return static_cast<std::uint64_t>(r);
}

}  // namespace eulerlab

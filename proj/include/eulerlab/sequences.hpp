#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "eulerlab/primes.hpp"
#include "eulerlab/types.hpp"

namespace eulerlab {

/// Strictly increasing integer support of a Dirichlet series or Euler
/// product. Elements are materialized; the origin tag records how.
struct base_sequence {
  enum class origin_kind { naturals, primes, residue_subsequence, explicit_list };

  origin_kind origin = origin_kind::explicit_list;
  subseq_label label{};  // meaningful for residue_subsequence only
  std::vector<std::uint64_t> elements;

  static base_sequence naturals(std::uint64_t count);
  static base_sequence primes(const prime_table& table, std::uint64_t count);
  static base_sequence explicit_list(std::vector<std::uint64_t> values);

  std::uint64_t size() const { return elements.size(); }
  std::uint64_t at(std::uint64_t n) const;  // 1-based

  /// True when the conceptual sequence continues past the materialized part
  /// (everything except explicit lists), in which case truncated evaluations
  /// carry a nonzero tail bound.
  bool extends_beyond_materialized() const { return origin != origin_kind::explicit_list; }

  /// Elements must be >= 2 to sit in an Euler product factor.
  void require_product_admissible() const;
};

/// (p_{2^i*1+j}, p_{2^i*2+j}, ...) truncated to count elements.
base_sequence residue_subsequence(const prime_table& table, subseq_label label,
                                  std::uint64_t count);

/// Coefficients l_n in [-1,1]. alternating(sigma) is l_n = sigma*(-1)^n;
/// tail_alternating(N, sigma) is 1 before index N and sigma*(-1)^n after.
struct sign_sequence {
  enum class kind { constant, alternating, tail_alternating, explicit_list };

  kind k = kind::constant;
  double constant_value = 1.0;
  int sigma = 1;
  std::uint64_t switch_index = 1;  // N for tail_alternating
  std::vector<double> values;

  static sign_sequence constant(double c);
  static sign_sequence alternating(int sigma);
  static sign_sequence tail_alternating(std::uint64_t switch_index, int sigma);
  static sign_sequence explicit_list(std::vector<double> values);

  double at(std::uint64_t n) const;  // 1-based

  /// Index from which l_n = +-(-1)^n holds onward, if any.
  std::optional<std::uint64_t> alternation_start() const;
  bool eventually_alternating() const { return alternation_start().has_value(); }

  /// Explicit lists are only defined up to their length.
  std::optional<std::uint64_t> defined_length() const;
};

}  // namespace eulerlab

#include "eulerlab/sequences.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace eulerlab {

base_sequence base_sequence::naturals(std::uint64_t count) {
  base_sequence seq;
  seq.origin = origin_kind::naturals;
  seq.elements.resize(count);
  std::iota(seq.elements.begin(), seq.elements.end(), std::uint64_t{1});
  return seq;
}

base_sequence base_sequence::primes(const prime_table& table, std::uint64_t count) {
  require(count <= table.count(), errc::out_of_range,
          "prime table exhausted: need " + std::to_string(count) + " primes, have " +
              std::to_string(table.count()));
  base_sequence seq;
  seq.origin = origin_kind::primes;
  seq.elements.assign(table.primes().begin(), table.primes().begin() + count);
  return seq;
}

base_sequence base_sequence::explicit_list(std::vector<std::uint64_t> values) {
  require(!values.empty(), errc::invalid_argument, "explicit sequence must be nonempty");
  for (std::size_t i = 0; i < values.size(); ++i) {
    require(values[i] >= 1, errc::invalid_argument, "sequence elements must be >= 1");
    require(i == 0 || values[i] > values[i - 1], errc::invalid_argument,
            "sequence must be strictly increasing");
  }
  base_sequence seq;
  seq.origin = origin_kind::explicit_list;
  seq.elements = std::move(values);
  return seq;
}

std::uint64_t base_sequence::at(std::uint64_t n) const {
  require(n >= 1 && n <= elements.size(), errc::out_of_range,
          "sequence index " + std::to_string(n) + " out of range");
  return elements[n - 1];
}

void base_sequence::require_product_admissible() const {
  require(!elements.empty() && elements.front() >= 2, errc::invalid_argument,
          "Euler product requires all elements >= 2");
}

base_sequence residue_subsequence(const prime_table& table, subseq_label label,
                                  std::uint64_t count) {
  require(label.valid(), errc::invalid_argument, "subsequence label requires j < 2^i");
  base_sequence seq;
  seq.origin = base_sequence::origin_kind::residue_subsequence;
  seq.label = label;
  seq.elements.reserve(count);
  const std::uint64_t stride = std::uint64_t{1} << label.i;
  for (std::uint64_t n = 1; n <= count; ++n) {
    const std::uint64_t idx = stride * n + label.j;
    seq.elements.push_back(table.nth_prime(idx));  // throws out_of_range when exhausted
  }
  return seq;
}

sign_sequence sign_sequence::constant(double c) {
  require(std::abs(c) <= 1.0, errc::invalid_argument, "|l_n| <= 1 required");
  sign_sequence s;
  s.k = kind::constant;
  s.constant_value = c;
  return s;
}

sign_sequence sign_sequence::alternating(int sigma) {
  require(sigma == 1 || sigma == -1, errc::invalid_argument, "sigma must be +-1");
  sign_sequence s;
  s.k = kind::alternating;
  s.sigma = sigma;
  return s;
}

sign_sequence sign_sequence::tail_alternating(std::uint64_t switch_index, int sigma) {
  require(sigma == 1 || sigma == -1, errc::invalid_argument, "sigma must be +-1");
  require(switch_index >= 1, errc::invalid_argument, "switch index must be >= 1");
  sign_sequence s;
  s.k = kind::tail_alternating;
  s.sigma = sigma;
  s.switch_index = switch_index;
  return s;
}

sign_sequence sign_sequence::explicit_list(std::vector<double> values) {
  require(!values.empty(), errc::invalid_argument, "explicit sign list must be nonempty");
  for (double v : values)
    require(std::abs(v) <= 1.0, errc::invalid_argument, "|l_n| <= 1 required");
  sign_sequence s;
  s.k = kind::explicit_list;
  s.values = std::move(values);
  return s;
}

double sign_sequence::at(std::uint64_t n) const {
  require(n >= 1, errc::invalid_argument, "sign index is 1-based");
  switch (k) {
    case kind::constant:
      return constant_value;
    case kind::alternating:
      return (n % 2 == 0) ? sigma : -sigma;
    case kind::tail_alternating:
      if (n < switch_index) return 1.0;
      return (n % 2 == 0) ? sigma : -sigma;
    case kind::explicit_list:
      require(n <= values.size(), errc::out_of_range, "explicit sign list exhausted");
      return values[n - 1];
  }
  return 0.0;
}

std::optional<std::uint64_t> sign_sequence::alternation_start() const {
  switch (k) {
    case kind::constant:
      return std::nullopt;
    case kind::alternating:
      return 1;
    case kind::tail_alternating:
      return switch_index;
    case kind::explicit_list: {
      // Longest suffix of exact +-1 alternation.
      std::size_t start = values.size();
      for (std::size_t i = values.size(); i-- > 0;) {
        if (std::abs(std::abs(values[i]) - 1.0) > 0.0) break;
        if (i + 1 < values.size() && values[i + 1] != -values[i]) break;
        start = i;
      }
      if (start + 1 >= values.size()) return std::nullopt;  // need length >= 2
      return start + 1;                                     // 1-based
    }
  }
  return std::nullopt;
}

std::optional<std::uint64_t> sign_sequence::defined_length() const {
  if (k == kind::explicit_list) return values.size();
  return std::nullopt;
}

}  // namespace eulerlab

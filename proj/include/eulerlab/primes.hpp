#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "eulerlab/types.hpp"

namespace eulerlab {

/// Node of the subsequence tree: selects {p_{2^i n + j}}_{n >= 1}.
struct subseq_label {
  std::uint32_t i = 0;   // depth / stride exponent
  std::uint64_t j = 0;   // residue, j < 2^i

  bool valid() const { return i < 63 && j < (std::uint64_t{1} << i); }
};

struct sieve_options {
  std::uint64_t segment_size = std::uint64_t{1} << 20;
  // 0 means: take EULERLAB_MAX_MEMORY from the environment, else 4 GiB.
  std::uint64_t max_memory_bytes = 0;
};

/// All primes <= limit, in increasing order. Immutable once built; lookups
/// are safe to call concurrently.
class prime_table {
public:
  explicit prime_table(std::uint64_t limit, sieve_options opts = {});

  std::uint64_t limit() const { return limit_; }
  std::uint64_t count() const { return primes_.size(); }
  bool empty() const { return primes_.empty(); }

  /// p_n under 1-based indexing (p_1 = 2). Throws out_of_range past count().
  std::uint64_t nth_prime(std::uint64_t n) const;

  std::span<const std::uint64_t> primes() const { return primes_; }

private:
  std::uint64_t limit_;
  std::vector<std::uint64_t> primes_;
};

/// Moebius function: 0 on non-squarefree n, else (-1)^(#prime factors).
/// Small n hit a precomputed smallest-prime-factor table; larger n fall
/// back to trial division.
int mobius(std::uint64_t n);

/// Effective sieve memory budget in bytes (EULERLAB_MAX_MEMORY or default).
std::uint64_t sieve_memory_budget(const sieve_options& opts);

}  // namespace eulerlab

#include "eulerlab/primes.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <cstdlib>
#include <cstring>

namespace eulerlab {

namespace {

std::uint64_t isqrt_u64(std::uint64_t n) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
  while (r > 0 && r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

// Plain odd-only sieve used for base primes and small limits.
std::vector<std::uint64_t> simple_sieve(std::uint64_t limit) {
  std::vector<std::uint64_t> primes;
  if (limit < 2) return primes;
  primes.push_back(2);
  if (limit < 3) return primes;
  const std::uint64_t half = (limit - 1) / 2;  // index i <-> odd 2i+1
  std::vector<std::uint8_t> composite(half + 1, 0);
  for (std::uint64_t i = 1; (2 * i + 1) * (2 * i + 1) <= limit; ++i) {
    if (composite[i]) continue;
    const std::uint64_t p = 2 * i + 1;
    for (std::uint64_t k = (p * p - 1) / 2; k <= half; k += p) composite[k] = 1;
  }
  for (std::uint64_t i = 1; i <= half; ++i)
    if (!composite[i]) primes.push_back(2 * i + 1);
  return primes;
}

}  // namespace

std::uint64_t sieve_memory_budget(const sieve_options& opts) {
  if (opts.max_memory_bytes != 0) return opts.max_memory_bytes;
  if (const char* env = std::getenv("EULERLAB_MAX_MEMORY")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && v > 0) return v;
  }
  return std::uint64_t{4} << 30;
}

prime_table::prime_table(std::uint64_t limit, sieve_options opts) : limit_(limit) {
  const std::uint64_t budget = sieve_memory_budget(opts);
  // Estimated footprint: the stored primes dominate; x/(ln x - 1.1) slightly
  // overestimates pi(x) for x >= 60.
  double est = 64.0;
  if (limit > 60)
    est = static_cast<double>(limit) / (std::log(static_cast<double>(limit)) - 1.1);
  const double bytes = est * 8.0 + static_cast<double>(opts.segment_size);
  require(bytes <= static_cast<double>(budget), errc::resource_limit,
          "sieve limit " + std::to_string(limit) + " exceeds the memory budget of " +
              std::to_string(budget) + " bytes");

  if (limit < (std::uint64_t{1} << 18)) {
    primes_ = simple_sieve(limit);
    return;
  }

  const std::uint64_t root = isqrt_u64(limit);
  const auto base = simple_sieve(root);
  primes_.reserve(static_cast<std::size_t>(est * 1.1));
  primes_.push_back(2);

  // Odd-only segmented sieve; segment_size is a byte budget, one bit per odd
  // number, so each segment covers 2*seg_bits integers.
  const std::uint64_t seg_bits = std::max<std::uint64_t>(opts.segment_size * 8, 1 << 16);
  std::vector<std::uint64_t> words((seg_bits + 63) / 64);
  // next_mult[k]: smallest odd multiple >= current segment base of base[k].
  std::vector<std::uint64_t> next_mult(base.size());
  for (std::size_t k = 1; k < base.size(); ++k) next_mult[k] = base[k] * base[k];

  for (std::uint64_t low = 3; low <= limit; low += 2 * seg_bits) {
    const std::uint64_t high = std::min(limit, low + 2 * seg_bits - 2);
    const std::uint64_t bits = (high - low) / 2 + 1;
    std::fill(words.begin(), words.end(), 0);
    for (std::size_t k = 1; k < base.size(); ++k) {
      const std::uint64_t p = base[k];
      if (p * p > high) break;
      std::uint64_t m = next_mult[k];
      if (m < low) {
        m = ((low + p - 1) / p) * p;
        if ((m & 1) == 0) m += p;
      }
      for (; m <= high; m += 2 * p) words[(m - low) / 2 >> 6] |= std::uint64_t{1} << (((m - low) / 2) & 63);
      next_mult[k] = m;
    }
    for (std::uint64_t w = 0; w < words.size(); ++w) {
      std::uint64_t bitsword = ~words[w];
      const std::uint64_t base_bit = w * 64;
      while (bitsword) {
        const int b = std::countr_zero(bitsword);
        bitsword &= bitsword - 1;
        const std::uint64_t bit = base_bit + static_cast<std::uint64_t>(b);
        if (bit >= bits) break;
        primes_.push_back(low + 2 * bit);
      }
    }
  }
}

std::uint64_t prime_table::nth_prime(std::uint64_t n) const {
  require(n >= 1 && n <= primes_.size(), errc::out_of_range,
          "prime index " + std::to_string(n) + " outside table of " +
              std::to_string(primes_.size()) + " primes");
  return primes_[n - 1];
}

namespace {

constexpr std::uint32_t kSpfLimit = 1 << 16;

// Smallest-prime-factor table, built once on first use.
const std::vector<std::uint32_t>& spf_table() {
  static const std::vector<std::uint32_t> table = [] {
    std::vector<std::uint32_t> spf(kSpfLimit, 0);
    for (std::uint32_t i = 2; i < kSpfLimit; ++i) {
      if (spf[i] != 0) continue;
      for (std::uint32_t j = i; j < kSpfLimit; j += i)
        if (spf[j] == 0) spf[j] = i;
    }
    return spf;
  }();
  return table;
}

}  // namespace

int mobius(std::uint64_t n) {
  require(n >= 1, errc::invalid_argument, "mobius requires n >= 1");
  int factors = 0;
  if (n < kSpfLimit) {
    const auto& spf = spf_table();
    while (n > 1) {
      const std::uint32_t p = spf[n];
      n /= p;
      if (n % p == 0) return 0;
      ++factors;
    }
    return (factors & 1) ? -1 : 1;
  }
  for (std::uint64_t p = 2; p * p <= n; p = (p == 2 ? 3 : p + 2)) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return 0;
    ++factors;
  }
  if (n > 1) ++factors;
  return (factors & 1) ? -1 : 1;
}

}  // namespace eulerlab

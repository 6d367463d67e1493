#pragma once

#include <cmath>
#include <cstdint>

#include "eulerlab/types.hpp"

namespace eulerlab {

/// Compensated (Kahan) accumulator, componentwise over re/im.
class kahan_sum {
public:
  void add(cplx x) {
    const cplx y = x - comp_;
    const cplx t = sum_ + y;
    comp_ = (t - sum_) - y;
    sum_ = t;
  }
  cplx value() const { return sum_; }

private:
  cplx sum_{0.0, 0.0};
  cplx comp_{0.0, 0.0};
};

/// a^{-s} for integer a >= 1.
inline cplx pow_neg(std::uint64_t a, cplx s) {
  const double la = std::log(static_cast<double>(a));
  const double mag = std::exp(-s.real() * la);
  if (s.imag() == 0.0) return {mag, 0.0};
  const double th = -s.imag() * la;
  return {mag * std::cos(th), mag * std::sin(th)};
}

/// ln(1-x), by power series for |x| <= 1/2 (keeps full relative accuracy as
/// x -> 0), by the principal complex log otherwise.
inline cplx log1m(cplx x) {
  const double m = std::abs(x);
  if (m == 0.0) return {0.0, 0.0};
  if (m > 0.5) return std::log(cplx(1.0, 0.0) - x);
  cplx power = x;
  cplx acc = -x;
  for (int k = 2; k <= 96; ++k) {
    power *= x;
    const cplx term = power / static_cast<double>(k);
    acc -= term;
    if (std::abs(term) < 1e-18 * std::abs(acc)) break;
  }
  return acc;
}

/// ln[ exp(-y) / (1-y) ] = sum_{k>=2} y^k/k, the per-factor log of the
/// regularized correction product. The k=1 cancellation is explicit, so a
/// factor contributes O(|y|^2) instead of O(|y|).
inline cplx log_regularized_correction(cplx y) {
  const double m = std::abs(y);
  if (m == 0.0) return {0.0, 0.0};
  if (m > 0.5) return -y - log1m(y);
  cplx power = y;
  cplx acc{0.0, 0.0};
  for (int k = 2; k <= 96; ++k) {
    power *= y;
    const cplx term = power / static_cast<double>(k);
    acc += term;
    if (std::abs(term) < 1e-18 * (std::abs(acc) + 1e-300)) break;
  }
  return acc;
}

inline void require_finite(cplx s, const char* what) {
  require(std::isfinite(s.real()) && std::isfinite(s.imag()), errc::invalid_argument,
          std::string(what) + " must have finite components");
}

}  // namespace eulerlab

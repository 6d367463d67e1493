#pragma once

#include <complex>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace eulerlab {

using cplx = std::complex<double>;

enum class errc {
  ok = 0,
  invalid_argument = 1,
  domain = 2,
  pole = 3,
  branch = 4,
  singular_factor = 5,
  out_of_range = 6,
  resource_limit = 7,
  overflow = 8,
  degenerate = 9,
  grid_resolution = 10,
  nonconvergence = 11,
};

class error : public std::runtime_error {
public:
  error(errc code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
  errc code() const { return code_; }

private:
  errc code_;
};

/// Stop rule for truncated evaluations: whichever of max_terms /
/// target_tail triggers first.
struct truncation_policy {
  std::uint64_t max_terms = 1'000'000;
  double target_tail = 1e-10;
};

/// Universal return type of the evaluators. tail_bound is an a-posteriori
/// estimate of the omitted remainder; converged means it met the policy's
/// target (or the evaluation is exact, e.g. an exhausted explicit list).
struct eval_report {
  cplx value{0.0, 0.0};
  std::uint64_t terms_used = 0;
  double tail_bound = std::numeric_limits<double>::infinity();
  bool converged = false;
};

inline void require(bool cond, errc code, const std::string& msg) {
  if (!cond) throw error(code, msg);
}

}  // namespace eulerlab

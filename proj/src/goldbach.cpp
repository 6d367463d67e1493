#include "eulerlab/goldbach.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <optional>

#include "eulerlab/numeric.hpp"
#include "eulerlab/series.hpp"

namespace eulerlab {

namespace {

constexpr std::uint64_t kTransformThreshold = 4096;

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = 0;
  require(!__builtin_add_overflow(a, b, &r), errc::overflow,
          "representation count exceeds the exact integer range");
  return r;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = 0;
  require(!__builtin_mul_overflow(a, b, &r), errc::overflow,
          "representation count exceeds the exact integer range");
  return r;
}

std::vector<std::uint64_t> convolve_schoolbook(std::span<const std::uint64_t> a,
                                               std::span<const std::uint64_t> b,
                                               std::uint64_t cutoff) {
  std::vector<std::uint64_t> out(cutoff + 1, 0);
  for (std::uint64_t i = 0; i <= cutoff && i < a.size(); ++i) {
    if (a[i] == 0) continue;
    const std::uint64_t jmax = std::min<std::uint64_t>(cutoff - i, b.size() - 1);
    for (std::uint64_t j = 0; j <= jmax; ++j) {
      if (b[j] == 0) continue;
      out[i + j] = checked_add(out[i + j], checked_mul(a[i], b[j]));
    }
  }
  return out;
}

void fft_radix2(std::vector<cplx>& a, bool inverse) {
  const std::size_t n = a.size();
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const double ang = 2.0 * std::numbers::pi / static_cast<double>(len) * (inverse ? -1 : 1);
    const cplx wl{std::cos(ang), std::sin(ang)};
    for (std::size_t i = 0; i < n; i += len) {
      cplx w{1.0, 0.0};
      for (std::size_t j = 0; j < len / 2; ++j) {
        const cplx u = a[i + j];
        const cplx v = a[i + j + len / 2] * w;
        a[i + j] = u + v;
        a[i + j + len / 2] = u - v;
        w *= wl;
      }
    }
  }
  if (inverse)
    for (auto& x : a) x /= static_cast<double>(n);
}

std::optional<std::vector<std::uint64_t>> convolve_fft(std::span<const std::uint64_t> a,
                                                       std::span<const std::uint64_t> b,
                                                       std::uint64_t cutoff) {
  const std::size_t need = std::min<std::uint64_t>(cutoff + 1, a.size() + b.size() - 1);
  std::size_t n = 1;
  while (n < a.size() + b.size() - 1) n <<= 1;

  const std::uint64_t budget = sieve_memory_budget({});
  require(n * sizeof(cplx) * 2 <= budget, errc::resource_limit,
          "convolution workspace exceeds the memory budget");

  std::vector<cplx> fa(n, cplx{0.0, 0.0}), fb(n, cplx{0.0, 0.0});
  for (std::size_t i = 0; i < a.size(); ++i) fa[i] = {static_cast<double>(a[i]), 0.0};
  for (std::size_t i = 0; i < b.size(); ++i) fb[i] = {static_cast<double>(b[i]), 0.0};
  fft_radix2(fa, false);
  fft_radix2(fb, false);
  for (std::size_t i = 0; i < n; ++i) fa[i] *= fb[i];
  fft_radix2(fa, true);

  std::vector<std::uint64_t> out(cutoff + 1, 0);
  double worst_margin = 0.0;
  for (std::size_t i = 0; i < need; ++i) {
    const double v = fa[i].real();
    if (v >= 9.007199254740992e15) return std::nullopt;  // past exact doubles
    const double r = std::round(v);
    worst_margin = std::max(worst_margin, std::abs(v - r));
    out[i] = static_cast<std::uint64_t>(r < 0.0 ? 0.0 : r);
  }
  // Round-to-integer is only trusted well inside half a unit.
  if (worst_margin >= 0.25) return std::nullopt;
  return out;
}

std::vector<std::uint64_t> convolve(std::span<const std::uint64_t> a,
                                    std::span<const std::uint64_t> b,
                                    std::uint64_t cutoff) {
  if (cutoff + 1 > kTransformThreshold) {
    if (auto fast = convolve_fft(a, b, cutoff)) return std::move(*fast);
    // Margin check failed: fall back to the exact path.
  }
  return convolve_schoolbook(a, b, cutoff);
}

// p^k with overflow saturation (anything past 2^63 is beyond any cutoff).
std::uint64_t pow_k(std::uint64_t p, std::uint32_t k) {
  std::uint64_t r = 1;
  for (std::uint32_t i = 0; i < k; ++i) {
    if (r > (std::uint64_t{1} << 63) / p) return std::uint64_t{1} << 63;
    r *= p;
  }
  return r;
}

}  // namespace

power_series_trunc gk_series(const prime_table& table, subseq_label label, std::uint32_t k,
                             std::uint64_t N) {
  require(label.valid(), errc::invalid_argument, "subsequence label requires j < 2^i");
  require(k >= 1, errc::invalid_argument, "power k must be >= 1");
  power_series_trunc g;
  g.degree_cutoff = N;
  g.k = k;
  g.label = label;
  g.coefficients.assign(N + 1, 0);
  const std::uint64_t stride = std::uint64_t{1} << label.i;
  for (std::uint64_t n = 1;; ++n) {
    const std::uint64_t idx = stride * n + label.j;
    if (idx > table.count()) break;
    const std::uint64_t pk = pow_k(table.nth_prime(idx), k);
    if (pk > N) break;
    g.coefficients[pk] = 1;
  }
  return g;
}

rep_table power_counts(const power_series_trunc& g, std::uint32_t m) {
  require(m >= 1, errc::invalid_argument, "m must be >= 1");
  rep_table out;
  out.k = g.k;
  out.m = m;
  out.label = g.label;
  out.cutoff = g.degree_cutoff;
  out.counts = g.coefficients;
  for (std::uint32_t i = 1; i < m; ++i)
    out.counts = convolve(out.counts, g.coefficients, g.degree_cutoff);

  std::uint64_t min_elem = 0;
  for (std::uint64_t d = 0; d < g.coefficients.size(); ++d) {
    if (g.coefficients[d] != 0) {
      min_elem = d;
      break;
    }
  }
  out.min_sum = min_elem * m;
  return out;
}

rep_table brute_force_counts(const prime_table& table, subseq_label label, std::uint32_t k,
                             std::uint32_t m, std::uint64_t N, std::uint64_t budget) {
  require(m >= 1, errc::invalid_argument, "m must be >= 1");
  rep_table out;
  out.k = k;
  out.m = m;
  out.label = label;
  out.cutoff = N;
  out.counts.assign(N + 1, 0);

  // Powers of the subsequence primes that can still fit below N.
  std::vector<std::uint64_t> powers;
  const std::uint64_t stride = std::uint64_t{1} << label.i;
  for (std::uint64_t n = 1;; ++n) {
    const std::uint64_t idx = stride * n + label.j;
    if (idx > table.count()) break;
    const std::uint64_t pk = pow_k(table.nth_prime(idx), k);
    if (pk > N) break;
    powers.push_back(pk);
  }
  out.min_sum = powers.empty() ? 0 : powers.front() * m;

  std::uint64_t steps = 0;
  // Ordered tuples: depth-first over the m slots with remaining-budget cut.
  std::function<void(std::uint32_t, std::uint64_t)> walk = [&](std::uint32_t slot,
                                                               std::uint64_t sum) {
    for (const std::uint64_t pk : powers) {
      if (sum + pk > N) break;
      require(++steps <= budget, errc::resource_limit,
              "brute-force enumeration budget exceeded");
      if (slot == m)
        out.counts[sum + pk] = checked_add(out.counts[sum + pk], 1);
      else
        walk(slot + 1, sum + pk);
    }
  };
  if (!powers.empty()) walk(1, 0);
  return out;
}

std::vector<std::uint64_t> goldbach_scan(const prime_table& table, std::uint64_t N) {
  require(N >= 4, errc::invalid_argument, "goldbach scan needs N >= 4");
  require(table.limit() >= N, errc::invalid_argument,
          "prime table must cover the scan range");

  std::vector<std::uint8_t> is_prime(N + 1, 0);
  for (const std::uint64_t p : table.primes()) {
    if (p > N) break;
    is_prime[p] = 1;
  }
  std::vector<std::uint64_t> violations;
  for (std::uint64_t n = 4; n <= N; n += 2) {
    bool found = false;
    for (const std::uint64_t p : table.primes()) {
      if (2 * p > n) break;
      if (is_prime[n - p]) {
        found = true;
        break;
      }
    }
    if (!found) violations.push_back(n);
  }
  return violations;
}

namespace {

// Adaptive Simpson with a depth cap; flips `converged` off when any panel
// hits the cap before meeting its share of the tolerance.
double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double fa, double fm, double fb, double whole, double tol,
                        int depth, bool& converged) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  const double flm = f(lm), frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double delta = left + right - whole;
  if (std::abs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
  if (depth <= 0) {
    converged = false;
    return left + right;
  }
  return adaptive_simpson(f, a, m, fa, flm, fm, left, tol / 2.0, depth - 1, converged) +
         adaptive_simpson(f, m, b, fm, frm, fb, right, tol / 2.0, depth - 1, converged);
}

double integrate(const std::function<double(double)>& f, double a, double b, double tol,
                 int max_depth, bool& converged) {
  const double m = 0.5 * (a + b);
  const double fa = f(a), fm = f(m), fb = f(b);
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return adaptive_simpson(f, a, b, fa, fm, fb, whole, tol, max_depth, converged);
}

}  // namespace

mellin_report mellin_residual(const prime_table& table, subseq_label label, std::uint32_t k,
                              cplx s, quadrature_spec quad) {
  require_finite(s, "s");
  require(k >= 1, errc::invalid_argument, "power k must be >= 1");
  require(s.real() > 1.0, errc::domain, "mellin identity needs Re(s) > 1");

  // The shared finite prime set: every subsequence prime in the table.
  std::vector<double> pk;
  const std::uint64_t stride = std::uint64_t{1} << label.i;
  kahan_sum series;
  for (std::uint64_t n = 1;; ++n) {
    const std::uint64_t idx = stride * n + label.j;
    if (idx > table.count()) break;
    const std::uint64_t p = table.nth_prime(idx);
    pk.push_back(std::pow(static_cast<double>(p), static_cast<double>(k)));
    series.add(pow_neg(p, s));
  }

  mellin_report out;
  if (pk.empty()) return out;  // both sides are empty sums

  const cplx sk = s / static_cast<double>(k);
  out.series_side = gamma_ref(sk) * series.value();

  const auto F = [&](double t) {
    double acc = 0.0;
    for (const double q : pk) {
      const double e = q * t;
      if (e > 745.0) break;  // exp underflow; pk is increasing
      acc += std::exp(-e);
    }
    return acc;
  };

  // Real s is the supported quadrature case (the acceptance identities are
  // real); reject an imaginary part rather than integrating oscillations.
  require(s.imag() == 0.0, errc::invalid_argument,
          "mellin quadrature implemented for real s");
  const double a = sk.real();
  const double count = static_cast<double>(pk.size());

  bool converged = true;
  // t in (0,1]: substitute u = ln(1/t), integrand e^{-a u} F(e^{-u}).
  const double u_hi = (std::log(count + 1.0) + std::log(1.0 / quad.abs_tol) + 10.0) / a;
  const auto low_part = [&](double u) { return std::exp(-a * u) * F(std::exp(-u)); };
  const double low = integrate(low_part, 0.0, u_hi, quad.abs_tol / 2.0, quad.max_depth,
                               converged);
  // t in [1, T]: F decays like e^{-min(pk) t}; the +10 absorbs the t^{a-1}
  // growth of the weight for the desk-scale a of interest.
  const double t_hi = (std::log(count + 1.0) + std::log(1.0 / quad.abs_tol) + 10.0) / pk.front();
  double high = 0.0;
  if (t_hi > 1.0) {
    const auto high_part = [&](double t) { return std::pow(t, a - 1.0) * F(t); };
    high = integrate(high_part, 1.0, t_hi, quad.abs_tol / 2.0, quad.max_depth, converged);
  }

  out.integral_side = cplx{low + high, 0.0};
  out.quad_converged = converged;
  out.residual = std::abs(out.series_side - out.integral_side);
  return out;
}

std::vector<probe_row> majorization_probe(const power_series_trunc& g, std::uint32_t m,
                                          std::span<const double> x_grid) {
  require(m >= 1, errc::invalid_argument, "m must be >= 1");
  require(x_grid.size() >= 3, errc::invalid_argument,
          "probe needs at least 3 grid points for centered differences");

  std::vector<double> lg(x_grid.size());
  for (std::size_t i = 0; i < x_grid.size(); ++i) {
    const double x = x_grid[i];
    require(x > 0.0 && x < 1.0, errc::invalid_argument, "grid points must lie in (0,1)");
    require(i == 0 || x > x_grid[i - 1], errc::invalid_argument,
            "grid must be strictly increasing");
    // The cutoff must resolve x when g truncates an infinite series: the
    // omitted tail is ~ x^N / (1-x). Exact finite series have no such limit.
    if (g.truncated_tail)
      require(static_cast<double>(g.degree_cutoff) * std::log(x) < std::log(1e-8 * (1.0 - x)),
              errc::grid_resolution,
              "x too close to 1 for this cutoff; raise N or back off the grid");
    double acc = 0.0;
    for (std::uint64_t d = g.degree_cutoff + 1; d-- > 1;) {
      if (g.coefficients[d] == 0) continue;
      acc += static_cast<double>(g.coefficients[d]) *
             std::exp(static_cast<double>(d) * std::log(x));
    }
    require(acc > 0.0, errc::invalid_argument, "g vanishes on the grid");
    lg[i] = std::log(acc);
  }

  std::vector<probe_row> rows;
  rows.reserve(x_grid.size() - 2);
  for (std::size_t i = 1; i + 1 < x_grid.size(); ++i) {
    const double dlg = lg[i + 1] - lg[i - 1];
    const double dln1mx = std::log1p(-x_grid[i + 1]) - std::log1p(-x_grid[i - 1]);
    rows.push_back(probe_row{x_grid[i], -dlg / dln1mx});
  }
  (void)m;  // the 1/m reference threshold is applied by callers
  return rows;
}

}  // namespace eulerlab

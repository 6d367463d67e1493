#include "eulerlab/series.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "eulerlab/numeric.hpp"

namespace eulerlab {

namespace {

// ---------------------------------------------------------------------------
// eta via Cohen-Villegas-Zagier acceleration (Chebyshev-polynomial weights).
// Relative error ~ (3+sqrt(8))^{-n} for real s; the term count grows with
// |Im(s)| to keep the bound useful across the strip.
cplx eta_cvz(cplx s) {
  const int n = std::min(380, 64 + static_cast<int>(std::ceil(1.5 * std::abs(s.imag()))));
  double d = std::pow(3.0 + std::sqrt(8.0), n);
  d = (d + 1.0 / d) / 2.0;
  double b = -1.0;
  double c = -d;
  kahan_sum acc;
  for (int k = 0; k < n; ++k) {
    c = b - c;
    acc.add(c * pow_neg(static_cast<std::uint64_t>(k) + 1, s));
    b *= (k + n) * (k - n) / ((k + 0.5) * (k + 1.0));
  }
  return acc.value() / d;
}

// Bernoulli numbers B_2, B_4, ..., B_26.
constexpr double kBernoulli[] = {
    1.0 / 6.0,       -1.0 / 30.0,        1.0 / 42.0,        -1.0 / 30.0,
    5.0 / 66.0,      -691.0 / 2730.0,    7.0 / 6.0,         -3617.0 / 510.0,
    43867.0 / 798.0, -174611.0 / 330.0,  854513.0 / 138.0,  -236364091.0 / 2730.0,
    8553103.0 / 6.0,
};

// Euler-Maclaurin evaluation, used where the eta relation degenerates
// (1 - 2^{1-s} ~ 0 away from s = 1). Good to ~1e-15 for Re(s) > 0, |s| <= 60.
cplx zeta_euler_maclaurin(cplx s) {
  constexpr int N = 64;
  kahan_sum head;
  for (int n = 1; n < N; ++n) head.add(pow_neg(n, s));
  const cplx n_pow = pow_neg(N, s);  // N^{-s}
  cplx acc = head.value() + n_pow * static_cast<double>(N) / (s - 1.0) + 0.5 * n_pow;

  cplx poch = s;                                     // s(s+1)...(s+2k-2)
  cplx npw = n_pow / static_cast<double>(N);         // N^{-s-2k+1}
  double fact = 2.0;                                 // (2k)!
  double prev_mag = std::numeric_limits<double>::infinity();
  for (std::size_t k = 1; k <= std::size(kBernoulli); ++k) {
    const cplx term = kBernoulli[k - 1] / fact * poch * npw;
    const double mag = std::abs(term);
    if (mag > prev_mag) break;  // asymptotic series turned
    acc += term;
    if (mag < 1e-18 * std::abs(acc)) break;
    prev_mag = mag;
    poch *= (s + static_cast<double>(2 * k - 1)) * (s + static_cast<double>(2 * k));
    npw /= static_cast<double>(N) * static_cast<double>(N);
    fact *= (2.0 * k + 1.0) * (2.0 * k + 2.0);
  }
  return acc;
}

bool is_nonpositive_integer(cplx z) {
  return z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::round(z.real());
}

double abel_tail_factor(cplx s) {
  // First-omitted-term bound holds as-is for real s; for complex s the Abel
  // partial-summation constant grows with |Im(s)|/Re(s).
  if (s.imag() == 0.0) return 1.0;
  return 1.0 + std::abs(s) / s.real();
}

}  // namespace

cplx zeta_ref(cplx s) {
  require_finite(s, "s");
  require(std::abs(s - cplx(1.0, 0.0)) > 1e-14, errc::pole, "zeta has its pole at s = 1");
  require(s.real() > 0.0, errc::domain, "zeta_ref requires Re(s) > 0");

  cplx out;
  if (s.real() >= 24.0) {
    // Dirichlet series directly; geometric-grade decay this deep.
    kahan_sum acc;
    for (std::uint64_t n = 1; n <= 512; ++n) {
      const cplx term = pow_neg(n, s);
      acc.add(term);
      if (std::abs(term) < 1e-20) break;
    }
    out = acc.value();
  } else {
    const cplx denom = 1.0 - std::exp((1.0 - s) * std::numbers::ln2);
    out = std::abs(denom) < 0.05 ? zeta_euler_maclaurin(s) : eta_cvz(s) / denom;
  }
  // Real s gives a real value; scrub the signed-zero imaginary part so the
  // principal log downstream lands on the +i pi side of the cut.
  if (s.imag() == 0.0) out = cplx(out.real(), 0.0);
  return out;
}

cplx gamma_ref(cplx s) {
  require_finite(s, "s");
  require(!is_nonpositive_integer(s), errc::pole,
          "gamma has poles at the non-positive integers");

  // Lanczos, g = 607/128, 15 coefficients (Godfrey's set).
  static constexpr double g = 4.7421875;
  static constexpr double coef[15] = {
      0.99999999999999709182,     57.156235665862923517,     -59.597960355475491248,
      14.136097974741747174,      -0.49191381609762019978,   0.33994649984811888699e-4,
      0.46523628927048575665e-4,  -0.98374475304879564677e-4, 0.15808870322491248884e-3,
      -0.21026444172410488319e-3, 0.21743961811521264320e-3, -0.16431810653676389022e-3,
      0.84418223983852743293e-4,  -0.26190838401581408670e-4, 0.36899182659531622704e-5,
  };

  if (s.real() < 0.5) {
    // Reflection: Gamma(s) = pi / (sin(pi s) Gamma(1-s)).
    const cplx sp = std::sin(std::numbers::pi * s);
    require(std::abs(sp) > 0.0, errc::pole, "gamma reflection hit sin(pi s) = 0");
    return std::numbers::pi / (sp * gamma_ref(1.0 - s));
  }

  cplx a{coef[0], 0.0};
  for (int k = 1; k < 15; ++k) a += coef[k] / (s - 1.0 + static_cast<double>(k));
  const cplx t = s + (g - 0.5);
  return std::sqrt(2.0 * std::numbers::pi) * std::pow(t, s - 0.5) * std::exp(-t) * a;
}

accel_result euler_average_limit(std::span<const cplx> terms, double target) {
  accel_result out;
  out.terms_used = terms.size();
  if (terms.empty()) {
    out.value = {0.0, 0.0};
    out.err_estimate = 0.0;
    return out;
  }

  // Every supplied term enters the partial sums; the averaging window is
  // anchored at the deepest ones, where the plain Leibniz remainder is
  // already smallest. Deeper windows would only trade accuracy for the
  // irregularity of prime-indexed terms.
  constexpr std::size_t kWindow = 128;
  const std::size_t keep = std::min(terms.size(), kWindow);
  std::vector<cplx> row(keep);
  kahan_sum run;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    run.add(terms[i]);
    if (i + keep >= terms.size()) row[i + keep - terms.size()] = run.value();
  }

  const double leibniz = std::abs(terms.back());
  cplx best = row.back();
  double best_err = leibniz;
  cplx prev = best;
  std::size_t len = keep;
  while (len >= 2) {
    for (std::size_t i = 0; i + 1 < len; ++i) row[i] = 0.5 * (row[i] + row[i + 1]);
    --len;
    const cplx cand = row[len - 1];
    const double err = std::abs(cand - prev);
    prev = cand;
    if (err < best_err) {
      best = cand;
      best_err = err;
    }
    if (best_err <= target && len + 8 <= keep) break;
  }

  out.value = best;
  // The level-to-level change underestimates the floor set by term-magnitude
  // irregularity; pad it and never claim more than the analytic bound.
  const double floor = 64.0 * std::numeric_limits<double>::epsilon() * (1.0 + std::abs(best));
  out.err_estimate = std::min(leibniz, std::max(8.0 * best_err, floor));
  return out;
}

eval_report dirichlet_eval(const base_sequence& A, const sign_sequence& l, cplx s,
                           truncation_policy policy) {
  require_finite(s, "s");
  require(policy.max_terms >= 1, errc::invalid_argument, "policy.max_terms must be >= 1");

  const double sigma = s.real();
  std::uint64_t available = A.size();
  if (auto len = l.defined_length()) available = std::min(available, *len);
  const std::uint64_t cap = std::min<std::uint64_t>(available, policy.max_terms);

  const auto alt_start = l.alternation_start();
  kahan_sum acc;
  eval_report rep;
  double last_mag = 0.0;
  std::uint64_t a_last = 1;
  for (std::uint64_t n = 1; n <= cap; ++n) {
    a_last = A.at(n);
    const cplx p = pow_neg(a_last, s);
    acc.add(l.at(n) * p);
    rep.terms_used = n;
    last_mag = std::abs(p);
    const bool in_alt_tail = alt_start && n >= *alt_start;
    if (in_alt_tail && sigma > 0.0) {
      // Leibniz regime: next term bounds the remainder.
      const double bound = last_mag * abel_tail_factor(s);
      if (bound <= policy.target_tail) {
        rep.tail_bound = bound;
        rep.converged = true;
        rep.value = acc.value();
        return rep;
      }
    } else if (sigma > 1.0) {
      const double bound =
          2.0 * std::pow(static_cast<double>(a_last), 1.0 - sigma) / (sigma - 1.0);
      if (bound <= policy.target_tail) {
        rep.tail_bound = bound;
        rep.converged = true;
        rep.value = acc.value();
        return rep;
      }
    }
  }

  rep.value = acc.value();
  // An exhausted explicit list (of elements or of signs) ends the series.
  const bool exhausted_exact =
      cap == available &&
      (!A.extends_beyond_materialized() || (l.defined_length() && cap == *l.defined_length()));
  if (exhausted_exact) {
    rep.tail_bound = 0.0;
    rep.converged = true;
  } else if (alt_start && rep.terms_used >= *alt_start && sigma > 0.0) {
    rep.tail_bound = last_mag * abel_tail_factor(s);
    rep.converged = rep.tail_bound <= policy.target_tail;
  } else if (sigma > 1.0) {
    rep.tail_bound =
        2.0 * std::pow(static_cast<double>(a_last), 1.0 - sigma) / (sigma - 1.0);
    rep.converged = rep.tail_bound <= policy.target_tail;
  } else {
    rep.tail_bound = std::numeric_limits<double>::infinity();
    rep.converged = false;
  }
  return rep;
}

eval_report alternating_eval(const base_sequence& A, const sign_sequence& l, cplx s,
                             double target) {
  require_finite(s, "s");
  const auto alt_start = l.alternation_start();
  require(alt_start.has_value(), errc::invalid_argument,
          "alternating_eval needs an eventually-alternating sign sequence");

  eval_report rep;
  if (s.real() <= 0.0) {
    rep.value = {std::numeric_limits<double>::quiet_NaN(),
                 std::numeric_limits<double>::quiet_NaN()};
    return rep;  // non-convergence flag
  }

  const std::uint64_t head_len = std::min<std::uint64_t>(*alt_start - 1, A.size());
  kahan_sum head;
  for (std::uint64_t n = 1; n <= head_len; ++n) head.add(l.at(n) * pow_neg(A.at(n), s));

  const std::uint64_t tail_avail = A.size() - head_len;
  accel_result accel;
  if (tail_avail < 8) {
    // Too few terms to extrapolate; report the plain partial sum. An
    // exhausted explicit list is exact.
    kahan_sum tail;
    double last_mag = 0.0;
    for (std::uint64_t r = 0; r < tail_avail; ++r) {
      const std::uint64_t n = head_len + 1 + r;
      const cplx term = l.at(n) * pow_neg(A.at(n), s);
      tail.add(term);
      last_mag = std::abs(term);
    }
    accel.value = tail.value();
    accel.terms_used = tail_avail;
    accel.err_estimate =
        A.extends_beyond_materialized() ? last_mag * abel_tail_factor(s) : 0.0;
  } else {
    std::vector<cplx> terms(tail_avail);
    for (std::uint64_t r = 0; r < tail_avail; ++r) {
      const std::uint64_t n = head_len + 1 + r;
      terms[r] = l.at(n) * pow_neg(A.at(n), s);
    }
    accel = euler_average_limit(terms, target);
    accel.err_estimate *= abel_tail_factor(s);
  }

  rep.value = head.value() + accel.value;
  rep.terms_used = head_len + accel.terms_used;
  rep.tail_bound = accel.err_estimate;
  rep.converged = accel.err_estimate <= target;
  return rep;
}

eval_report prime_zeta_direct(const prime_table& table, cplx s, truncation_policy policy) {
  require_finite(s, "s");
  require(policy.max_terms >= 1, errc::invalid_argument, "policy.max_terms must be >= 1");

  const double sigma = s.real();
  kahan_sum acc;
  eval_report rep;
  const auto primes = table.primes();
  const std::uint64_t cap = std::min<std::uint64_t>(primes.size(), policy.max_terms);
  double bound = std::numeric_limits<double>::infinity();
  std::uint64_t p = 2;
  for (std::uint64_t i = 0; i < cap; ++i) {
    p = primes[i];
    acc.add(pow_neg(p, s));
    rep.terms_used = i + 1;
    if (sigma > 1.0 && (i % 64 == 63 || i + 1 == cap)) {
      bound = 2.0 * std::pow(static_cast<double>(p), 1.0 - sigma) / (sigma - 1.0);
      if (bound <= policy.target_tail) break;
    }
  }
  rep.value = acc.value();
  if (sigma > 1.0) {
    bound = 2.0 * std::pow(static_cast<double>(p), 1.0 - sigma) / (sigma - 1.0);
    rep.tail_bound = bound;
    rep.converged = bound <= policy.target_tail;
  }
  return rep;
}

eval_report prime_zeta_mobius(cplx s, std::uint32_t n_max) {
  require_finite(s, "s");
  require(n_max >= 1, errc::invalid_argument, "n_max must be >= 1");
  require(s.real() > 0.5, errc::domain, "prime_zeta_mobius requires Re(s) > 1/2");
  require(std::abs(s - cplx(1.0, 0.0)) > 1e-14, errc::pole,
          "zeta(ns) has a pole at n = 1, s = 1");

  kahan_sum acc;
  eval_report rep;
  for (std::uint32_t n = 1; n <= n_max; ++n) {
    const int mu = mobius(n);
    if (mu == 0) continue;
    const cplx z = zeta_ref(static_cast<double>(n) * s);
    cplx lg;
    if (n == 1) {
      lg = std::log(z);  // principal branch, by contract
    } else {
      const cplx w = z - 1.0;
      const bool real_positive =
          z.real() > 0.0 && std::abs(z.imag()) <= 1e-12 * std::max(1.0, std::abs(z.real()));
      if (std::abs(w) < 1.0) {
        lg = std::log(z);  // Re(z) > 0 here, so the principal log cannot wind
      } else if (real_positive) {
        lg = std::log(z.real());
      } else {
        throw error(errc::branch,
                    "winding of ln zeta(" + std::to_string(n) + "s) is ambiguous: "
                    "|zeta(ns) - 1| >= 1 off the positive real axis");
      }
    }
    acc.add(static_cast<double>(mu) / static_cast<double>(n) * lg);
    rep.terms_used = n;
  }

  rep.value = acc.value();
  // |ln zeta(ns)| <= 2|2^{-ns}|(1+o(1)) gives a geometric tail.
  const double sigma = s.real();
  const double q = std::pow(2.0, -sigma);
  rep.tail_bound = 2.4 * std::pow(q, static_cast<double>(n_max) + 1.0) /
                   ((static_cast<double>(n_max) + 1.0) * (1.0 - q));
  rep.converged = std::isfinite(rep.tail_bound);
  return rep;
}

eval_report z_deformed_prime_zeta(const prime_table& table, cplx z, cplx s,
                                  truncation_policy policy) {
  require_finite(s, "s");
  require_finite(z, "z");
  require(policy.max_terms >= 1, errc::invalid_argument, "policy.max_terms must be >= 1");

  const double r = std::abs(z);
  const double sigma = s.real();
  const bool inside = r < 1.0 && sigma > 0.0;
  const bool on_circle = std::abs(r - 1.0) <= 1e-15 && sigma > 1.0;
  require(inside || on_circle, errc::domain,
          "need |z| < 1 with Re(s) > 0, or |z| = 1 with Re(s) > 1");

  eval_report rep;
  if (r == 0.0) {
    rep.tail_bound = 0.0;
    rep.converged = true;
    return rep;
  }

  const cplx logz = std::log(z);
  kahan_sum acc;
  const auto primes = table.primes();
  const std::uint64_t cap = std::min<std::uint64_t>(primes.size(), policy.max_terms);
  double bound = std::numeric_limits<double>::infinity();
  for (std::uint64_t i = 0; i < cap; ++i) {
    const std::uint64_t p = primes[i];
    acc.add(std::exp(static_cast<double>(p) * logz) * pow_neg(p, s));
    rep.terms_used = i + 1;
    const double pd = static_cast<double>(p);
    if (inside) {
      bound = std::pow(pd, -sigma) * std::pow(r, pd + 1.0) / (1.0 - r);
    } else {
      bound = 2.0 * std::pow(pd, 1.0 - sigma) / (sigma - 1.0);
    }
    if (bound <= policy.target_tail) break;
  }
  rep.value = acc.value();
  rep.tail_bound = bound;
  rep.converged = bound <= policy.target_tail;
  return rep;
}

}  // namespace eulerlab

#include "eulerlab/products.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "eulerlab/numeric.hpp"
#include "eulerlab/series.hpp"

namespace eulerlab {

general_factor::general_factor(std::vector<double> coefficients, double disc_radius)
    : coefficients_(std::move(coefficients)), disc_radius_(disc_radius) {
  require(!coefficients_.empty() && coefficients_[0] == 0.0, errc::invalid_argument,
          "general factor needs g(0) = 0");
  require(disc_radius_ > 0.0 && disc_radius_ < 1.0, errc::invalid_argument,
          "evaluation disc radius must lie in (0,1)");
  for (unsigned d = 1; d < coefficients_.size(); ++d) {
    if (coefficients_[d] != 0.0) {
      lowest_degree_ = d;
      break;
    }
  }
  require(lowest_degree_ >= 1, errc::invalid_argument, "general factor must be nonzero");
  for (unsigned d = 2; d < coefficients_.size(); ++d) {
    if (coefficients_[d] != 0.0) {
      gap_degree_ = d;
      break;
    }
  }
  // 1 - g(x) must stay away from zero on the declared disc; sampled check.
  for (int ring = 1; ring <= 4; ++ring) {
    const double r = disc_radius_ * ring / 4.0;
    for (int a = 0; a < 64; ++a) {
      const double th = 2.0 * std::numbers::pi * a / 64.0;
      const cplx x{r * std::cos(th), r * std::sin(th)};
      require(std::abs(1.0 - eval(x)) > 1e-9, errc::invalid_argument,
              "1 - g(x) vanishes on the declared evaluation disc");
    }
  }
}

cplx general_factor::eval(cplx x) const {
  cplx acc{0.0, 0.0};
  for (std::size_t d = coefficients_.size(); d-- > 1;) acc = (acc + coefficients_[d]) * x;
  return acc;
}

general_factor regularized_ratio(const general_factor& g, unsigned degree) {
  require(degree >= 2, errc::invalid_argument, "ratio degree must be >= 2");
  const auto& c = g.coefficients();
  const double c1 = c.size() > 1 ? c[1] : 0.0;
  // h = (g - c1 x) / (1 - c1 x): h_d = n_d + c1 h_{d-1} with n_d = c_d, d>=2.
  std::vector<double> h(degree + 1, 0.0);
  for (unsigned d = 2; d <= degree; ++d) {
    const double n_d = d < c.size() ? c[d] : 0.0;
    h[d] = n_d + c1 * h[d - 1];
  }
  return general_factor(std::move(h), g.disc_radius());
}

convergence_params derive_convergence_params(const general_factor& g, double delta) {
  require(delta > 0.0 && delta < 1.0, errc::invalid_argument, "delta must lie in (0,1)");
  convergence_params out;
  out.delta = delta;
  out.lambda = g.lowest_degree();
  double worst = 0.0;
  for (int ring = 1; ring <= 16; ++ring) {
    const double r = delta * ring / 16.0;
    for (int a = 0; a < 64; ++a) {
      const double th = 2.0 * std::numbers::pi * a / 64.0;
      const cplx x{r * std::cos(th), r * std::sin(th)};
      worst = std::max(worst, std::abs(g.eval(x)) / std::pow(r, out.lambda));
    }
  }
  out.C = 1.1 * worst;  // 10% safety factor over the sampled maximum
  return out;
}

namespace {

struct log_product_acc {
  kahan_sum log_sum;
  std::uint64_t factors = 0;
};

// Shared core: accumulate -ln(1 - x_n) where x_n comes from `factor_arg`.
template <typename FactorArg>
eval_report log_product_eval(const base_sequence& A, cplx s, truncation_policy policy,
                             double tail_exponent, double tail_scale, FactorArg factor_arg) {
  require_finite(s, "s");
  require(policy.max_terms >= 1, errc::invalid_argument, "policy.max_terms must be >= 1");
  A.require_product_admissible();

  const double sigma = s.real();
  log_product_acc acc;
  const std::uint64_t cap = std::min<std::uint64_t>(A.size(), policy.max_terms);
  double bound_log = std::numeric_limits<double>::infinity();
  std::uint64_t a_last = 2;
  for (std::uint64_t n = 1; n <= cap; ++n) {
    a_last = A.at(n);
    const cplx x = factor_arg(a_last);
    require(x != cplx(1.0, 0.0), errc::singular_factor,
            "singular factor 1 - x = 0 at a_n = " + std::to_string(a_last));
    acc.log_sum.add(-log1m(x));
    acc.factors = n;
    if (tail_exponent > 1.0 && (n % 64 == 0 || n == cap)) {
      // |ln(1-x)| < (3/2)|x| over the omitted tail, tail compared against
      // the integer tail beyond a_n.
      bound_log = tail_scale * 2.0 *
                  std::pow(static_cast<double>(a_last), 1.0 - tail_exponent) /
                  (tail_exponent - 1.0);
      const double value_bound = std::abs(std::exp(acc.log_sum.value())) * std::expm1(bound_log);
      if (value_bound <= policy.target_tail) break;
    }
  }

  eval_report rep;
  rep.value = std::exp(acc.log_sum.value());
  rep.terms_used = acc.factors;
  const bool exhausted_exact = !A.extends_beyond_materialized() && acc.factors == A.size();
  if (exhausted_exact) {
    rep.tail_bound = 0.0;
    rep.converged = true;
  } else if (tail_exponent > 1.0 && std::isfinite(bound_log)) {
    rep.tail_bound = std::abs(rep.value) * std::expm1(bound_log);
    rep.converged = rep.tail_bound <= policy.target_tail;
  } else {
    rep.tail_bound = std::numeric_limits<double>::infinity();
    rep.converged = false;
  }
  (void)sigma;
  return rep;
}

}  // namespace

eval_report euler_product_eval(const base_sequence& A, const sign_sequence& l, cplx s,
                               truncation_policy policy) {
  std::uint64_t n = 0;
  return log_product_eval(A, s, policy, s.real(), 1.5, [&](std::uint64_t a) {
    ++n;
    return l.at(n) * pow_neg(a, s);
  });
}

eval_report general_product_eval(const base_sequence& A, const general_factor& g, cplx s,
                                 truncation_policy policy) {
  const double lambda = g.lowest_degree();
  require(s.real() > 1.0 / lambda, errc::domain,
          "general product needs Re(s) > 1/lambda = " + std::to_string(1.0 / lambda));
  const auto params = derive_convergence_params(g, 0.5);
  return log_product_eval(A, s, policy, lambda * s.real(), 1.5 * params.C,
                          [&](std::uint64_t a) { return g.eval(pow_neg(a, s)); });
}

eval_report continued_product_eval(const base_sequence& A, const sign_sequence& l, cplx s,
                                   truncation_policy policy) {
  require_finite(s, "s");
  require(s.real() > 0.5, errc::domain, "continued product needs Re(s) > 1/2");
  require(l.eventually_alternating(), errc::invalid_argument,
          "continued product needs an eventually-alternating sign sequence");
  A.require_product_admissible();
  require(policy.max_terms >= 1, errc::invalid_argument, "policy.max_terms must be >= 1");

  const eval_report exp_part = alternating_eval(A, l, s, policy.target_tail);

  const double sigma = s.real();
  kahan_sum corr;
  const std::uint64_t cap = std::min<std::uint64_t>(A.size(), policy.max_terms);
  std::uint64_t a_last = 2;
  for (std::uint64_t n = 1; n <= cap; ++n) {
    a_last = A.at(n);
    const cplx y = l.at(n) * pow_neg(a_last, s);
    require(y != cplx(1.0, 0.0), errc::singular_factor,
            "singular factor 1 - x = 0 at a_n = " + std::to_string(a_last));
    corr.add(log_regularized_correction(y));
  }

  eval_report rep;
  rep.value = std::exp(exp_part.value + corr.value());
  rep.terms_used = cap;
  // Correction factors are O(a^{-2 sigma}); 2*sigma > 1 on the whole domain.
  const double corr_tail = 2.0 * std::pow(static_cast<double>(a_last), 1.0 - 2.0 * sigma) /
                           (2.0 * sigma - 1.0);
  rep.tail_bound = std::abs(rep.value) * (std::expm1(corr_tail) + exp_part.tail_bound);
  rep.converged = rep.tail_bound <= policy.target_tail;
  return rep;
}

double regularized_exp_identity_residual(const prime_table& table, cplx s,
                                         truncation_policy policy) {
  require_finite(s, "s");
  require(s.real() > 0.5, errc::domain, "identity needs Re(s) > 1/2");
  require(std::abs(s - cplx(1.0, 0.0)) > 1e-14, errc::pole, "zeta pole at s = 1");

  const cplx P = s.real() > 1.0 ? prime_zeta_direct(table, s, policy).value
                                : prime_zeta_mobius(s, 64).value;

  // prod_p exp(p^{-s})(1 - p^{-s}) in log space; per-factor log is
  // -(sum_{k>=2} p^{-ks}/k), the negated regularized correction.
  kahan_sum prod_log;
  const auto primes = table.primes();
  const std::uint64_t cap = std::min<std::uint64_t>(primes.size(), policy.max_terms);
  for (std::uint64_t i = 0; i < cap; ++i)
    prod_log.add(-log_regularized_correction(pow_neg(primes[i], s)));

  const cplx lhs = std::exp(P);
  const cplx rhs = zeta_ref(s) * std::exp(prod_log.value());
  return std::abs(lhs - rhs);
}

truncation_check truncation_discrepancy_check(const prime_table& table, std::uint32_t N,
                                              cplx s, truncation_policy policy) {
  require_finite(s, "s");
  require(s.real() > 1.0, errc::domain, "truncation bound needs Re(s) > 1");
  require(N >= 1, errc::invalid_argument, "N must be >= 1");

  const double pN = static_cast<double>(table.nth_prime(N));
  const auto seq = base_sequence::primes(table, std::min<std::uint64_t>(table.count(), policy.max_terms));
  const auto product = euler_product_eval(seq, sign_sequence::tail_alternating(N, 1), s, policy);

  truncation_check out;
  out.measured = std::abs(zeta_ref(s) - product.value);
  out.bound = 2.0 * std::pow(pN, 1.0 - s.real()) / (s.real() - 1.0);
  return out;
}

std::vector<scan_row> convergence_scan(const base_sequence& A, const general_factor& g,
                                       const std::vector<double>& sigma_grid,
                                       const std::vector<truncation_policy>& ladder) {
  require(std::is_sorted(sigma_grid.begin(), sigma_grid.end()), errc::invalid_argument,
          "sigma grid must be sorted ascending");
  require(ladder.size() >= 3, errc::invalid_argument, "policy ladder needs >= 3 rungs");
  A.require_product_admissible();

  std::vector<scan_row> rows;
  rows.reserve(sigma_grid.size());
  for (double sigma : sigma_grid) {
    // partial(M) = sum_{n<=M} -ln(1 - g(a_n^{-sigma})), real for real sigma.
    std::vector<double> partials;
    partials.reserve(ladder.size());
    kahan_sum acc;
    std::uint64_t done = 0;
    bool valid = true;
    for (const auto& policy : ladder) {
      const std::uint64_t target = std::min<std::uint64_t>(policy.max_terms, A.size());
      for (std::uint64_t n = done + 1; n <= target; ++n) {
        const cplx x = g.eval(pow_neg(A.at(n), cplx(sigma, 0.0)));
        if (x == cplx(1.0, 0.0)) {
          valid = false;
          break;
        }
        acc.add(-log1m(x));
      }
      done = std::max(done, target);
      if (!valid) break;
      partials.push_back(acc.value().real());
    }

    scan_row row;
    row.sigma = sigma;
    row.terms = done;
    if (!valid || partials.size() < 3) {
      row.flag = "no-convergence";
      rows.push_back(row);
      continue;
    }
    std::vector<double> deltas;
    for (std::size_t i = 1; i < partials.size(); ++i)
      deltas.push_back(std::abs(partials[i] - partials[i - 1]));
    row.abs_delta = deltas.back();
    bool decreasing = true;
    double rate_sum = 0.0;
    for (std::size_t i = 1; i < deltas.size(); ++i) {
      if (deltas[i] <= 0.0 || deltas[i - 1] <= 0.0) {
        decreasing = deltas[i] <= deltas[i - 1];
        break;
      }
      if (deltas[i] >= deltas[i - 1]) decreasing = false;
      rate_sum += std::log2(deltas[i - 1] / deltas[i]);
    }
    row.rate = rate_sum / static_cast<double>(deltas.size() - 1);
    row.flag = (decreasing && row.rate > 0.05) ? "decay" : "no-convergence";
    rows.push_back(row);
  }
  return rows;
}

}  // namespace eulerlab

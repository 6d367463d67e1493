// Exercises the shared-library surface end to end: handle lifecycles,
// status codes, and a representative call into every functional area.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstring>
#include <numbers>
#include <string>
#include <vector>

#include "eulerlab.h"

namespace {
struct table_guard {
  el_prime_table* t = nullptr;
  ~table_guard() { el_prime_table_free(t); }
};
}  // namespace

TEST_CASE("version and status strings") {
  CHECK(std::string(el_version()) == "0.1.0");
  CHECK(std::string(el_status_message(EL_OK)) == "ok");
  CHECK(std::strlen(el_status_message(EL_ERR_POLE)) > 0);
}

TEST_CASE("primes surface") {
  table_guard g;
  REQUIRE(el_sieve(100, &g.t) == EL_OK);
  uint64_t count = 0;
  CHECK(el_prime_count(g.t, &count) == EL_OK);
  CHECK(count == 25);
  uint64_t p = 0;
  CHECK(el_nth_prime(g.t, 9, &p) == EL_OK);
  CHECK(p == 23);
  CHECK(el_nth_prime(g.t, 26, &p) == EL_ERR_OUT_OF_RANGE);
  CHECK(std::strlen(el_last_error_message()) > 0);

  int32_t mu = 0;
  CHECK(el_mobius(12, &mu) == EL_OK);
  CHECK(mu == 0);
  CHECK(el_mobius(0, &mu) == EL_ERR_INVALID);

  CHECK(el_sieve(100, nullptr) == EL_ERR_INVALID);
}

TEST_CASE("sequence and sign lifecycles") {
  table_guard g;
  REQUIRE(el_sieve(1000, &g.t) == EL_OK);

  el_sequence* seq = nullptr;
  REQUIRE(el_sequence_residue(g.t, {1, 0}, 3, &seq) == EL_OK);
  uint64_t v = 0, size = 0;
  CHECK(el_sequence_size(seq, &size) == EL_OK);
  CHECK(size == 3);
  CHECK(el_sequence_at(seq, 3, &v) == EL_OK);
  CHECK(v == 13);
  CHECK(el_sequence_at(seq, 4, &v) == EL_ERR_OUT_OF_RANGE);
  el_sequence_free(seq);

  el_sequence* bad = nullptr;
  CHECK(el_sequence_residue(g.t, {1, 2}, 3, &bad) == EL_ERR_INVALID);

  el_sign* sign = nullptr;
  CHECK(el_sign_constant(2.0, &sign) == EL_ERR_INVALID);
  REQUIRE(el_sign_tail_alternating(5, 1, &sign) == EL_OK);
  el_sign_free(sign);
}

TEST_CASE("series evaluators through the C API") {
  el_sequence* naturals = nullptr;
  REQUIRE(el_sequence_naturals(100'000, &naturals) == EL_OK);
  el_sign* ones = nullptr;
  REQUIRE(el_sign_constant(1.0, &ones) == EL_OK);

  el_report rep{};
  CHECK(el_dirichlet_eval(naturals, ones, {2.0, 0.0}, el_policy_default(), &rep) == EL_OK);
  CHECK(std::abs(rep.value.re - std::numbers::pi * std::numbers::pi / 6.0) <= rep.tail_bound);

  el_sign* alt = nullptr;
  REQUIRE(el_sign_alternating(1, &alt) == EL_OK);
  CHECK(el_alternating_eval(naturals, alt, {1.0, 0.0}, 1e-12, &rep) == EL_OK);
  CHECK(std::abs(rep.value.re + std::numbers::ln2) < 1e-12);

  el_complex z{};
  CHECK(el_zeta_ref({2.0, 0.0}, &z) == EL_OK);
  CHECK(std::abs(z.re - std::numbers::pi * std::numbers::pi / 6.0) < 1e-13);
  CHECK(el_zeta_ref({1.0, 0.0}, &z) == EL_ERR_POLE);
  CHECK(el_zeta_ref({-1.0, 0.0}, &z) == EL_ERR_DOMAIN);
  CHECK(el_gamma_ref({0.5, 0.0}, &z) == EL_OK);
  CHECK(std::abs(z.re - std::sqrt(std::numbers::pi)) < 1e-14);
  CHECK(el_gamma_ref({-3.0, 0.0}, &z) == EL_ERR_POLE);

  table_guard g;
  REQUIRE(el_sieve(100'000, &g.t) == EL_OK);
  el_report direct{}, via_mobius{};
  CHECK(el_prime_zeta_direct(g.t, {2.0, 0.0}, el_policy_default(), &direct) == EL_OK);
  CHECK(el_prime_zeta_mobius({2.0, 0.0}, 64, &via_mobius) == EL_OK);
  CHECK(std::abs(direct.value.re - via_mobius.value.re) <=
        direct.tail_bound + via_mobius.tail_bound);
  CHECK(el_prime_zeta_mobius({0.52, 0.3}, 16, &via_mobius) == EL_ERR_BRANCH);

  el_report deformed{};
  CHECK(el_z_deformed_prime_zeta(g.t, {1.5, 0.0}, {2.0, 0.0}, el_policy_default(),
                                 &deformed) == EL_ERR_DOMAIN);

  el_sign_free(alt);
  el_sign_free(ones);
  el_sequence_free(naturals);
}

TEST_CASE("products through the C API") {
  table_guard g;
  REQUIRE(el_sieve(1'000'000, &g.t) == EL_OK);
  uint64_t count = 0;
  REQUIRE(el_prime_count(g.t, &count) == EL_OK);
  el_sequence* primes = nullptr;
  REQUIRE(el_sequence_primes(g.t, count, &primes) == EL_OK);
  el_sign* minus = nullptr;
  REQUIRE(el_sign_constant(-1.0, &minus) == EL_OK);

  el_report rep{};
  CHECK(el_euler_product_eval(primes, minus, {2.0, 0.0}, el_policy_default(), &rep) == EL_OK);
  CHECK(std::abs(rep.value.re - std::numbers::pi * std::numbers::pi / 15.0) < 1e-5);

  el_sign* alt = nullptr;
  REQUIRE(el_sign_alternating(1, &alt) == EL_OK);
  el_report continued{}, direct{};
  CHECK(el_continued_product_eval(primes, alt, {2.0, 0.0}, el_policy_default(), &continued) ==
        EL_OK);
  CHECK(el_euler_product_eval(primes, alt, {2.0, 0.0}, el_policy_default(), &direct) == EL_OK);
  CHECK(std::abs(continued.value.re - direct.value.re) < 1e-10);

  double residual = 0.0;
  CHECK(el_exp_factorization_residual(g.t, {2.0, 0.0}, el_policy_default(), &residual) ==
        EL_OK);
  CHECK(residual < 1e-6);

  double measured = 0.0, bound = 0.0;
  CHECK(el_truncation_discrepancy(g.t, 5, {2.0, 0.0}, el_policy_default(), &measured,
                                  &bound) == EL_OK);
  CHECK(measured <= bound);
  CHECK(bound == doctest::Approx(2.0 / 11.0));

  const double coeffs[] = {0.0, 0.0, 1.0};
  el_factor* factor = nullptr;
  REQUIRE(el_factor_create(coeffs, 3, &factor) == EL_OK);
  double C = 0.0, lambda = 0.0;
  CHECK(el_derive_convergence_params(factor, 0.5, &C, &lambda) == EL_OK);
  CHECK(lambda == 2.0);
  CHECK(el_general_product_eval(primes, factor, {0.3, 0.0}, el_policy_default(), &rep) ==
        EL_ERR_DOMAIN);

  const double sigmas[] = {0.45, 0.75};
  const uint64_t ladder[] = {4096, 8192, 16384, 32768};
  el_scan* scan = nullptr;
  REQUIRE(el_convergence_scan(primes, factor, sigmas, 2, ladder, 4, &scan) == EL_OK);
  size_t rows = 0;
  CHECK(el_scan_size(scan, &rows) == EL_OK);
  CHECK(rows == 2);
  double sigma = 0, abs_delta = 0, rate = 0;
  uint64_t terms = 0;
  int flag = -1;
  CHECK(el_scan_row(scan, 0, &sigma, &terms, &abs_delta, &rate, &flag) == EL_OK);
  CHECK(sigma == 0.45);
  CHECK(flag == 0);
  CHECK(el_scan_row(scan, 1, &sigma, &terms, &abs_delta, &rate, &flag) == EL_OK);
  CHECK(flag == 1);
  CHECK(el_scan_row(scan, 2, &sigma, &terms, &abs_delta, &rate, &flag) ==
        EL_ERR_OUT_OF_RANGE);
  el_scan_free(scan);

  el_factor* ratio = nullptr;
  REQUIRE(el_factor_regularized_ratio(factor, 16, &ratio) == EL_OK);
  el_factor_free(ratio);
  el_factor_free(factor);
  el_sign_free(alt);
  el_sign_free(minus);
  el_sequence_free(primes);
}

TEST_CASE("identities through the C API") {
  el_label left{}, right{};
  CHECK(el_split_children({1, 1}, &left, &right) == EL_OK);
  CHECK(left.i == 2);
  CHECK(left.j == 1);
  CHECK(right.j == 3);

  table_guard g;
  REQUIRE(el_sieve(2'000'000, &g.t) == EL_OK);
  double residual = 0.0;
  CHECK(el_split_residual(g.t, {0, 0}, {2.0, 0.0}, {50'000, 1e-12}, &residual) == EL_OK);
  CHECK(residual < 1e-6);

  el_complex q{};
  CHECK(el_even_odd_quotient(g.t, {0, 0}, {2.0, 0.0}, {50'000, 1e-12}, &q) == EL_OK);
  CHECK(q.re > 0.0);

  el_complex out{};
  CHECK(el_leibniz_div({6, 0}, {3, 0}, &out) == EL_OK);
  CHECK(out.re == 2.0);
  CHECK(el_leibniz_div({6, 0}, {0, 0}, &out) == EL_ERR_DEGENERATE);

  el_complex defect{}, closed{};
  CHECK(el_assoc_defect({2, 0}, {1, 0}, {2, 0}, &defect, &closed) == EL_OK);
  CHECK(defect.re == 3.0);
  CHECK(closed.re == 3.0);

  CHECK(el_skew_bracket({2, 0}, {1, 0}, -1, &out) == EL_OK);
  CHECK(out.re == 1.5);

  el_complex lhs{}, derived{}, paper{};
  CHECK(el_jacobi_defect({2, 0}, {1, 0}, {3, 0}, &lhs, &derived, &paper) == EL_OK);
  CHECK(lhs.re == doctest::Approx(-2.45));
  CHECK(derived.re == doctest::Approx(-2.45));
  CHECK(paper.re != doctest::Approx(-2.45).epsilon(1e-3));
  CHECK(el_jacobi_defect({1, 0}, {1, 0}, {2, 0}, &lhs, &derived, &paper) ==
        EL_ERR_DEGENERATE);

  el_sequence *even = nullptr, *odd = nullptr;
  REQUIRE(el_sequence_residue(g.t, {1, 0}, 100, &even) == EL_OK);
  REQUIRE(el_sequence_residue(g.t, {1, 1}, 100, &odd) == EL_OK);
  int inter = 0, insufficient = 0;
  uint64_t offset = 0;
  CHECK(el_interlace_check(odd, even, &inter, &offset, &insufficient) == EL_OK);
  CHECK(inter == 1);
  el_sequence_free(even);
  el_sequence_free(odd);

  uint64_t cat = 0;
  CHECK(el_catalan(5, &cat) == EL_OK);
  CHECK(cat == 14);
  CHECK(el_catalan(38, &cat) == EL_ERR_OVERFLOW);
}

TEST_CASE("goldbach through the C API") {
  table_guard g;
  REQUIRE(el_sieve(10'000, &g.t) == EL_OK);

  el_series* gk = nullptr;
  REQUIRE(el_gk_series(g.t, {0, 0}, 1, 100, &gk) == EL_OK);
  uint64_t cutoff = 0, coeff = 0;
  CHECK(el_series_cutoff(gk, &cutoff) == EL_OK);
  CHECK(cutoff == 100);
  CHECK(el_series_coeff(gk, 7, &coeff) == EL_OK);
  CHECK(coeff == 1);
  CHECK(el_series_coeff(gk, 101, &coeff) == EL_ERR_OUT_OF_RANGE);

  el_series *counts = nullptr, *brute = nullptr;
  REQUIRE(el_power_counts(gk, 2, &counts) == EL_OK);
  REQUIRE(el_brute_force_counts(g.t, {0, 0}, 1, 2, 100, 1'000'000, &brute) == EL_OK);
  for (uint64_t n = 0; n <= 100; ++n) {
    uint64_t a = 0, b = 0;
    CHECK(el_series_coeff(counts, n, &a) == EL_OK);
    CHECK(el_series_coeff(brute, n, &b) == EL_OK);
    CHECK(a == b);
  }

  uint64_t buf[4];
  size_t found = 99;
  CHECK(el_goldbach_scan(g.t, 10'000, buf, 4, &found) == EL_OK);
  CHECK(found == 0);

  double residual = 0.0;
  el_complex series_side{}, integral_side{};
  int quad_ok = 0;
  CHECK(el_mellin_residual(g.t, {0, 0}, 1, {2.0, 0.0}, 1e-9, 40, &residual, &series_side,
                           &integral_side, &quad_ok) == EL_OK);
  CHECK(residual < 1e-6);
  CHECK(quad_ok == 1);

  const double grid[] = {0.5, 0.6, 0.7};
  double alphas[1];
  size_t n_out = 0;
  CHECK(el_majorization_probe(gk, 2, grid, 3, alphas, &n_out) == EL_OK);
  CHECK(n_out == 1);

  el_series_free(brute);
  el_series_free(counts);
  el_series_free(gk);
}

TEST_CASE("identity catalog") {
  size_t count = 0;
  REQUIRE(el_identity_count(&count) == EL_OK);
  CHECK(count == 9);
  bool found_jacobi = false;
  for (size_t i = 0; i < count; ++i) {
    const char* name = nullptr;
    double tol = -1.0;
    REQUIRE(el_identity_entry(i, &name, &tol) == EL_OK);
    CHECK(name != nullptr);
    CHECK(tol >= 0.0);
    if (std::string(name) == "jacobi-defect") {
      found_jacobi = true;
      CHECK(tol == 1e-13);
    }
  }
  CHECK(found_jacobi);
  const char* name = nullptr;
  double tol = 0.0;
  CHECK(el_identity_entry(count, &name, &tol) == EL_ERR_OUT_OF_RANGE);
}

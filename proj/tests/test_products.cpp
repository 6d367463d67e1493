#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "eulerlab/numeric.hpp"
#include "eulerlab/products.hpp"
#include "eulerlab/series.hpp"
#include "test_support.hpp"

using namespace eulerlab;
using std::numbers::pi;

namespace {
const prime_table& table_1e6() {
  static const prime_table t(1'000'000);
  return t;
}
const prime_table& table_2e7() {
  static const prime_table t(20'000'000);
  return t;
}
base_sequence primes_of(const prime_table& t) { return base_sequence::primes(t, t.count()); }
}  // namespace

TEST_CASE("euler product reproduces zeta(2)") {
  const auto seq6 = primes_of(table_1e6());
  auto prod6 = euler_product_eval(seq6, sign_sequence::constant(1.0), {2.0, 0.0},
                                  {seq6.size(), 1e-16});
  CHECK(std::abs(prod6.value.real() - pi * pi / 6.0) < 1e-6);
  CHECK(std::abs(prod6.value.real() - pi * pi / 6.0) <= prod6.tail_bound);

  const auto seq7 = primes_of(table_2e7());
  auto prod7 = euler_product_eval(seq7, sign_sequence::constant(1.0), {2.0, 0.0},
                                  {seq7.size(), 1e-16});
  CHECK(std::abs(prod7.value.real() - pi * pi / 6.0) < 1e-8);
}

TEST_CASE("single-factor product and sign variants") {
  auto two = base_sequence::explicit_list({2});
  auto single = euler_product_eval(two, sign_sequence::constant(1.0), {1.0, 0.0}, {10, 1e-12});
  // Log-space accumulation: exp(ln 2) lands within an ulp of 2.
  CHECK(single.value.real() == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(single.converged);

  const auto seq = primes_of(table_2e7());
  auto minus = euler_product_eval(seq, sign_sequence::constant(-1.0), {2.0, 0.0},
                                  {seq.size(), 1e-16});
  CHECK(std::abs(minus.value.real() - pi * pi / 15.0) < 1e-8);
}

TEST_CASE("singular factors and inadmissible sequences fail loudly") {
  auto two = base_sequence::explicit_list({2});
  CHECK_THROWS_AS((void)euler_product_eval(two, sign_sequence::constant(1.0), {0.0, 0.0},
                                           {10, 1e-10}),
                  error);
  try {
    (void)euler_product_eval(two, sign_sequence::constant(1.0), {0.0, 0.0}, {10, 1e-10});
  } catch (const error& e) {
    CHECK(e.code() == errc::singular_factor);
  }
  auto naturals = base_sequence::naturals(16);
  CHECK_THROWS_AS((void)euler_product_eval(naturals, sign_sequence::constant(1.0),
                                           {2.0, 0.0}, {16, 1e-10}),
                  error);
}

TEST_CASE("general factor construction and convergence params") {
  general_factor gx2({0.0, 0.0, 1.0});
  CHECK(gx2.lowest_degree() == 2);
  auto p2 = derive_convergence_params(gx2, 0.5);
  CHECK(p2.lambda == 2.0);
  CHECK(p2.C <= 1.1 + 1e-12);
  CHECK(p2.C >= 1.0);

  general_factor gx({0.0, 1.0});
  auto p1 = derive_convergence_params(gx, 0.5);
  CHECK(p1.lambda == 1.0);
  CHECK(p1.C <= 1.1 + 1e-12);

  general_factor g3x4({0.0, 0.0, 0.0, 0.0, 3.0});
  auto p4 = derive_convergence_params(g3x4, 0.5);
  CHECK(p4.lambda == 4.0);
  CHECK(p4.C == doctest::Approx(3.3).epsilon(0.01));

  CHECK_THROWS_AS((void)general_factor({1.0, 1.0}), error);  // g(0) != 0
  CHECK_THROWS_AS((void)derive_convergence_params(gx, 1.5), error);
}

TEST_CASE("general product substitution identities") {
  const auto seq = base_sequence::primes(table_1e6(), 50'000);
  const truncation_policy policy{50'000, 1e-30};

  general_factor gx2({0.0, 0.0, 1.0});
  auto via_g = general_product_eval(seq, gx2, {1.0, 0.0}, policy);
  auto via_euler = euler_product_eval(seq, sign_sequence::constant(1.0), {2.0, 0.0}, policy);
  CHECK(std::abs(via_g.value - via_euler.value) < 1e-13 * std::abs(via_euler.value));

  general_factor gx({0.0, 1.0});
  auto reduced = general_product_eval(seq, gx, {2.0, 0.0}, policy);
  CHECK(std::abs(reduced.value - via_euler.value) < 1e-13 * std::abs(via_euler.value));

  CHECK_THROWS_AS((void)general_product_eval(seq, gx2, {0.4, 0.0}, policy), error);
}

TEST_CASE("regularized ratio factor converges below the naive abscissa") {
  // g = x + x^3, so the ratio factor is x^3/(1-x) with gap degree 3.
  general_factor g({0.0, 1.0, 0.0, 1.0});
  CHECK(g.gap_degree() == 3);
  auto h = regularized_ratio(g, 48);
  CHECK(h.lowest_degree() == 3);

  const auto seq = base_sequence::primes(table_1e6(), 40'000);
  auto small = general_product_eval(seq, h, {0.6, 0.0}, {20'000, 1e-30});
  auto large = general_product_eval(seq, h, {0.6, 0.0}, {40'000, 1e-30});
  CHECK(std::abs(small.value) > 0.0);
  CHECK(std::isfinite(std::abs(small.value)));
  CHECK(std::abs(large.value - small.value) < 1e-4 * std::abs(small.value));
}

TEST_CASE("continued product agrees with the direct product for Re(s) > 1") {
  const auto seq = base_sequence::primes(table_1e6(), 60'000);
  const truncation_policy policy{60'000, 1e-12};

  for (const auto& sign :
       {sign_sequence::alternating(1), sign_sequence::tail_alternating(5, 1)}) {
    auto continued = continued_product_eval(seq, sign, {2.0, 0.0}, policy);
    auto direct = euler_product_eval(seq, sign, {2.0, 0.0}, policy);
    CHECK(std::abs(continued.value - direct.value) < 1e-10);
  }

  CHECK_THROWS_AS((void)continued_product_eval(seq, sign_sequence::alternating(1),
                                               {0.4, 0.0}, policy),
                  error);
}

TEST_CASE("continued product is stable in the strip") {
  static const prime_table big(70'000'000);
  const auto seq = base_sequence::primes(big, 4'000'000);
  const auto sign = sign_sequence::alternating(1);
  auto small = continued_product_eval(seq, sign, {0.8, 0.0}, {2'000'000, 1e-12});
  auto large = continued_product_eval(seq, sign, {0.8, 0.0}, {4'000'000, 1e-12});
  CHECK(std::abs(small.value) > 0.0);
  CHECK(std::abs(large.value - small.value) < 1e-6);
}

TEST_CASE("exp factorization identity residual") {
  const truncation_policy policy{table_1e6().count(), 1e-16};
  CHECK(regularized_exp_identity_residual(table_1e6(), {2.0, 0.0}, policy) < 1e-6);
  CHECK(regularized_exp_identity_residual(table_1e6(), {3.0, 0.0}, policy) < 1e-9);
  // In the strip the residual is truncation-limited by the correction
  // product's prime tail (~1e-4 at this table size).
  const double strip = regularized_exp_identity_residual(table_1e6(), {0.75, 0.0}, policy);
  CHECK(strip < 1e-3);
  CHECK(strip > 1e-6);
  CHECK_THROWS_AS(
      (void)regularized_exp_identity_residual(table_1e6(), {0.4, 0.0}, policy), error);
}

TEST_CASE("truncation discrepancy bound") {
  const truncation_policy policy{table_1e6().count(), 1e-16};

  auto n5 = truncation_discrepancy_check(table_1e6(), 5, {2.0, 0.0}, policy);
  CHECK(n5.bound == doctest::Approx(2.0 / 11.0).epsilon(1e-14));
  CHECK(n5.measured <= n5.bound);

  auto n10 = truncation_discrepancy_check(table_1e6(), 10, {3.0, 0.0}, policy);
  CHECK(n10.bound == doctest::Approx(1.0 / 841.0).epsilon(1e-14));
  CHECK(n10.measured <= n10.bound);

  // Non-strict decreasing trend in N at s = 2.
  double prev = std::numeric_limits<double>::infinity();
  for (std::uint32_t N : {5, 10, 20, 40, 80}) {
    auto check = truncation_discrepancy_check(table_1e6(), N, {2.0, 0.0}, policy);
    CHECK(check.measured <= prev * 1.05);
    prev = check.measured;
  }

  CHECK_THROWS_AS((void)truncation_discrepancy_check(table_1e6(), 5, {0.9, 0.0}, policy),
                  error);
}

TEST_CASE("log-space accumulation equals direct factor multiplication") {
  const auto seq = base_sequence::primes(table_1e6(), 10'000);
  for (cplx s : {cplx{2.0, 0.0}, cplx{2.0, 0.3}, cplx{3.0, -1.0}}) {
    auto rep = euler_product_eval(seq, sign_sequence::constant(1.0), s, {10'000, 1e-30});
    cplx direct{1.0, 0.0};
    for (std::uint64_t n = 1; n <= 10'000; ++n)
      direct *= 1.0 / (1.0 - pow_neg(seq.at(n), s));
    CHECK(std::abs(rep.value - direct) < 1e-12 * std::abs(direct));
    CHECK(std::abs(rep.value) > 0.0);  // nonvanishing
  }
}

TEST_CASE("identity ladder: minus product times zeta(s) is zeta(2s)") {
  static const prime_table t(10'000'000);
  const auto seq = primes_of(t);
  for (double sre : {2.5, 3.0, 3.5, 4.0}) {
    auto prod = euler_product_eval(seq, sign_sequence::constant(-1.0), {sre, 0.0},
                                   {seq.size(), 1e-16});
    const double resid =
        std::abs(prod.value.real() * zeta_ref({sre, 0.0}).real() - zeta_ref({2 * sre, 0.0}).real());
    CHECK(resid < 1e-8);
  }
  // Closer to the abscissa the identity holds within the reported bound.
  for (double sre : {1.5, 2.0}) {
    auto prod = euler_product_eval(seq, sign_sequence::constant(-1.0), {sre, 0.0},
                                   {seq.size(), 1e-16});
    const double zs = zeta_ref({sre, 0.0}).real();
    const double resid = std::abs(prod.value.real() * zs - zeta_ref({2 * sre, 0.0}).real());
    CHECK(resid <= prod.tail_bound * std::abs(zs) * 1.1);
  }
}

TEST_CASE("log(1-x) two-sided estimate on the disc") {
  std::mt19937 rng(987654);
  std::uniform_real_distribution<double> u(-0.4, 0.4);
  int done = 0;
  while (done < 1000) {
    const cplx x{u(rng), u(rng)};
    const double m = std::abs(x);
    if (m > 0.4 || m == 0.0) continue;
    const double lg = std::abs(log1m(x));
    CHECK(lg > 0.5 * m);
    CHECK(lg < 1.5 * m);
    ++done;
  }
}

TEST_CASE("convergence scan flags") {
  static const prime_table t(2'200'000);
  const auto seq = base_sequence::primes(t, 140'000);
  std::vector<truncation_policy> ladder;
  for (int k = 12; k <= 17; ++k) ladder.push_back({std::uint64_t{1} << k, 0.0});

  general_factor gx2({0.0, 0.0, 1.0});
  auto rows2 = convergence_scan(seq, gx2, {0.45, 0.75, 2.0}, ladder);
  REQUIRE(rows2.size() == 3);
  CHECK(rows2[0].flag == "no-convergence");
  CHECK(rows2[1].flag == "decay");
  CHECK(rows2[1].rate > 0.05);
  CHECK(rows2[2].flag == "decay");

  general_factor gx({0.0, 1.0});
  auto rows1 = convergence_scan(seq, gx, {0.9, 2.0}, ladder);
  REQUIRE(rows1.size() == 2);
  CHECK(rows1[0].flag == "no-convergence");
  CHECK(rows1[1].flag == "decay");

  CHECK_THROWS_AS((void)convergence_scan(seq, gx, {2.0, 0.5}, ladder), error);  // unsorted
}

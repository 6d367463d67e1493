// Acceptance suite: one check per numbered criterion, each printing a single
// [PASS]/[FAIL] line (details on indented lines). Run with a criterion
// number to execute just that one; exit code is the number of failures.
//
// Criteria 2, 3 and 4 contain clauses that are truncation-limited at their
// pinned prime bounds (the omitted prime tails exceed the stated tolerances
// by orders of magnitude; see the indented detail lines). They are asserted
// as stated rather than weakened, so those checks report honest failures.

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "eulerlab/goldbach.hpp"
#include "eulerlab/identities.hpp"
#include "eulerlab/numeric.hpp"
#include "eulerlab/primes.hpp"
#include "eulerlab/products.hpp"
#include "eulerlab/sequences.hpp"
#include "eulerlab/series.hpp"

using namespace eulerlab;
using std::numbers::pi;

namespace {

int g_failures = 0;

void verdict(int criterion, bool pass, const std::string& what) {
  std::printf("[%s] criterion %2d: %s\n", pass ? "PASS" : "FAIL", criterion, what.c_str());
  std::fflush(stdout);
  if (!pass) ++g_failures;
}

void detail(const std::string& text) {
  std::printf("           - %s\n", text.c_str());
  std::fflush(stdout);
}

std::string sci(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// 1. Euler product over primes <= 1e6 at s=2 vs pi^2/6, 1e-6, under 5 s.
void criterion_1() {
  const auto t0 = std::chrono::steady_clock::now();
  prime_table table(1'000'000);
  const auto seq = base_sequence::primes(table, table.count());
  const auto rep =
      euler_product_eval(seq, sign_sequence::constant(1.0), {2.0, 0.0}, {seq.size(), 1e-16});
  const double delta = std::abs(rep.value.real() - pi * pi / 6.0);
  const double elapsed = seconds_since(t0);
  detail("delta = " + sci(delta) + ", runtime = " + sci(elapsed) + " s");
  verdict(1, delta < 1e-6 && elapsed < 5.0,
          "euler product over primes <= 1e6 at s=2 matches pi^2/6 within 1e-6");
}

// 2. |product(-1)*zeta(s) - zeta(2s)| < 1e-8 at s in {1.5,2,3}, primes <= 1e6.
void criterion_2() {
  prime_table table(1'000'000);
  const auto seq = base_sequence::primes(table, table.count());
  bool all = true;
  for (const double s : {1.5, 2.0, 3.0}) {
    const auto prod =
        euler_product_eval(seq, sign_sequence::constant(-1.0), {s, 0.0}, {seq.size(), 1e-16});
    const double resid =
        std::abs(prod.value.real() * zeta_ref({s, 0.0}).real() - zeta_ref({2 * s, 0.0}).real());
    const bool ok = resid < 1e-8;
    all = all && ok;
    detail("s=" + std::to_string(s) + ": residual = " + sci(resid) + (ok ? "" :
           " > 1e-8 (truncation-limited: the omitted prime tail at this bound exceeds the target)"));
  }
  verdict(2, all, "plus-product quotient matches zeta(2s)/zeta(s) within 1e-8 at the 1e6 bound");
}

// 3. exp-factorization residual: < 1e-9 at s in {2,3}; < 1e-6 at s=0.75 with
//    primes <= 1e7; all under 60 s.
void criterion_3() {
  const auto t0 = std::chrono::steady_clock::now();
  bool all = true;
  {
    prime_table big(200'000'000);
    for (const double s : {2.0, 3.0}) {
      const double resid =
          regularized_exp_identity_residual(big, {s, 0.0}, {big.count(), 1e-16});
      const bool ok = resid < 1e-9;
      all = all && ok;
      detail("s=" + std::to_string(s) + " (primes <= 2e8): residual = " + sci(resid));
    }
  }
  {
    prime_table table(10'000'000);
    const double resid =
        regularized_exp_identity_residual(table, {0.75, 0.0}, {table.count(), 1e-16});
    const bool ok = resid < 1e-6;
    all = all && ok;
    detail("s=0.75 (primes <= 1e7, as pinned): residual = " + sci(resid) + (ok ? "" :
           " > 1e-6 (truncation-limited: the correction product's omitted tail is ~2e-5 in log)"));
  }
  const double elapsed = seconds_since(t0);
  detail("runtime = " + sci(elapsed) + " s (< 60 s required)");
  verdict(3, all && elapsed < 60.0, "exp-factorization residuals at s in {2, 3, 0.75}");
}

// 4. |P_mobius - P_direct| < 1e-10 at s in {1.5, 2, 4}; and
//    sum_{n<=40} P(2n)/n = ln zeta(2) to 1e-10.
void criterion_4() {
  prime_table big(800'000'000);
  bool all = true;
  for (const double s : {1.5, 2.0, 4.0}) {
    const auto direct = prime_zeta_direct(big, {s, 0.0}, {big.count(), 1e-16});
    const auto moebius = prime_zeta_mobius({s, 0.0}, 64);
    const double diff = std::abs(direct.value - moebius.value);
    const bool ok = diff < 1e-10;
    all = all && ok;
    detail("s=" + std::to_string(s) + ": |mobius - direct| = " + sci(diff) + (ok ? "" :
           " > 1e-10 (truncation-limited: the direct route's prime tail dominates)"));
  }
  kahan_sum acc;
  for (int n = 1; n <= 40; ++n)
    acc.add(prime_zeta_mobius({2.0 * n, 0.0}, 64).value / static_cast<double>(n));
  const double inverse_resid = std::abs(acc.value().real() - std::log(pi * pi / 6.0));
  const bool inverse_ok = inverse_resid < 1e-10;
  all = all && inverse_ok;
  detail("sum_{n<=40} P(2n)/n vs ln zeta(2): residual = " + sci(inverse_resid));
  verdict(4, all, "Moebius-inversion pair agreement and inverse identity");
}

// 5. measured |zeta - tail-alternating product| <= 2 p_N^{1-s}/(s-1) for
//    N in {2..25}, s in {2,3}.
void criterion_5() {
  prime_table table(2'000'000);
  bool all = true;
  double worst_margin = 0.0;
  for (const double s : {2.0, 3.0}) {
    for (std::uint32_t N = 2; N <= 25; ++N) {
      const auto check =
          truncation_discrepancy_check(table, N, {s, 0.0}, {table.count(), 1e-16});
      if (check.measured > check.bound) {
        all = false;
        detail("violated at N=" + std::to_string(N) + ", s=" + std::to_string(s) +
               ": measured " + sci(check.measured) + " > bound " + sci(check.bound));
      }
      worst_margin = std::max(worst_margin, check.measured / check.bound);
    }
  }
  detail("48 (N,s) pairs, worst measured/bound ratio = " + sci(worst_margin));
  verdict(5, all, "truncation discrepancy stays under 2 p_N^{1-s}/(s-1)");
}

// 6. split-factorization residual < 1e-9 at s=2 for (0,0),(1,0),(1,1); leaf
//    partition holds to depth 6.
void criterion_6() {
  prime_table table(240'000'000);
  bool all = true;
  const struct {
    subseq_label label;
    std::uint64_t terms;
  } cases[] = {{{0, 0}, 6'000'000}, {{1, 0}, 2'500'000}, {{1, 1}, 2'500'000}};
  for (const auto& c : cases) {
    const double resid =
        split_factorization_residual(table, c.label, {2.0, 0.0}, {c.terms, 1e-16});
    const bool ok = resid < 1e-9;
    all = all && ok;
    detail("label (" + std::to_string(c.label.i) + "," + std::to_string(c.label.j) +
           "), terms=" + std::to_string(c.terms) + ": residual = " + sci(resid));
  }

  // Partition property at depth 6 over value sets.
  {
    prime_table small(2'000'000);
    split_tree tree(6);
    const std::uint64_t per = 1000;
    std::vector<std::uint64_t> values;
    for (const auto& leaf : tree.leaves()) {
      const auto seq = residue_subsequence(small, leaf, per);
      values.insert(values.end(), seq.elements.begin(), seq.elements.end());
    }
    std::sort(values.begin(), values.end());
    const bool disjoint = std::adjacent_find(values.begin(), values.end()) == values.end();
    std::uint64_t missing = 0;
    for (std::uint64_t idx = 1; idx <= 64 * per; ++idx)
      if (!std::binary_search(values.begin(), values.end(), small.nth_prime(idx))) ++missing;
    const bool partition_ok = disjoint && missing == 63;
    detail(std::string("depth-6 leaves: disjoint=") + (disjoint ? "yes" : "no") +
           ", boundary indices missing = " + std::to_string(missing) + " (expected 63)");
    all = all && partition_ok;
  }
  verdict(6, all, "split factorization residuals at s=2 and the depth-6 tree partition");
}

// 7. assoc and jacobi derived-form equality on 1e4 random non-degenerate
//    triples to relative 1e-13; paper's printed jacobi form is reported.
void criterion_7() {
  std::mt19937 rng(20240818);
  std::uniform_real_distribution<double> radius(0.3, 3.0);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * pi);
  const auto draw = [&] { return std::polar(radius(rng), angle(rng)); };

  double worst_assoc = 0.0, worst_jacobi = 0.0;
  int done = 0;
  while (done < 10'000) {
    const cplx a = draw(), b = draw(), c = draw();
    const cplx a2 = a * a, b2 = b * b, c2 = c * c;
    const double scale = std::max({std::abs(a2), std::abs(b2), std::abs(c2)});
    if (std::abs(a2 - b2) < 0.02 * scale || std::abs(b2 - c2) < 0.02 * scale ||
        std::abs(c2 - a2) < 0.02 * scale || std::abs(c * c - 1.0) < 0.02)
      continue;
    const auto ar = assoc_defect(a, b, c);
    worst_assoc = std::max(worst_assoc,
                           std::abs(ar.defect - ar.closed_form) /
                               std::max({std::abs(ar.defect), std::abs(ar.closed_form), 1e-300}));
    const auto jr = jacobi_defect(a, b, c);
    worst_jacobi = std::max(worst_jacobi,
                            std::abs(jr.lhs - jr.derived_form) /
                                std::max({std::abs(jr.lhs), std::abs(jr.derived_form), 1e-300}));
    ++done;
  }
  const auto probe = jacobi_defect({2, 0}, {1, 0}, {3, 0});
  const double paper_gap = std::abs(probe.lhs - probe.paper_form);
  detail("worst assoc relative deviation = " + sci(worst_assoc));
  detail("worst jacobi (derived form) relative deviation = " + sci(worst_jacobi));
  detail("printed jacobi quotient form at (2,1,3) differs from the bracket sum by " +
         sci(paper_gap) + " (documented discrepancy, not a failure)");
  verdict(7, worst_assoc <= 1e-13 && worst_jacobi <= 1e-13 && paper_gap > 1.0,
          "Leibniz-division algebra identities on 1e4 random triples");
}

// 8. power_counts == brute_force_counts for k <= 3, m <= 3, N = 2000;
//    goldbach scan to 1e4 clean; under 30 s.
void criterion_8() {
  const auto t0 = std::chrono::steady_clock::now();
  prime_table table(10'000);
  bool all = true;
  for (std::uint32_t k = 1; k <= 3; ++k)
    for (std::uint32_t m = 1; m <= 3; ++m) {
      const auto conv = power_counts(gk_series(table, {0, 0}, k, 2000), m);
      const auto brute = brute_force_counts(table, {0, 0}, k, m, 2000);
      if (conv.counts != brute.counts) {
        all = false;
        detail("mismatch at k=" + std::to_string(k) + ", m=" + std::to_string(m));
      }
    }
  // A depth-2 subsequence spot check.
  {
    const auto conv = power_counts(gk_series(table, {2, 1}, 1, 2000), 2);
    const auto brute = brute_force_counts(table, {2, 1}, 1, 2, 2000);
    if (conv.counts != brute.counts) {
      all = false;
      detail("mismatch at label (2,1)");
    }
  }
  const auto violations = goldbach_scan(table, 10'000);
  if (!violations.empty()) {
    all = false;
    detail("goldbach scan found " + std::to_string(violations.size()) + " violations");
  }
  const double elapsed = seconds_since(t0);
  detail("convolution == enumeration for all (k,m) pairs; scan(1e4) clean; runtime = " +
         sci(elapsed) + " s");
  verdict(8, all && elapsed < 30.0,
          "Goldbach-Waring counts agree with the enumeration oracle; scan(1e4) clean");
}

// 9. Mellin residual < 1e-6 at (k,s) in {(1,2),(2,4)} with primes <= 1e4.
void criterion_9() {
  prime_table table(10'000);
  bool all = true;
  for (const auto& [k, s] : std::vector<std::pair<std::uint32_t, double>>{{1, 2.0}, {2, 4.0}}) {
    const auto rep = mellin_residual(table, {0, 0}, k, {s, 0.0});
    const bool ok = rep.residual < 1e-6 && rep.quad_converged;
    all = all && ok;
    detail("k=" + std::to_string(k) + ", s=" + std::to_string(s) +
           ": residual = " + sci(rep.residual));
  }
  verdict(9, all, "Gamma/Mellin identity residual under 1e-6 at primes <= 1e4");
}

// 10. local exponent alpha(x) of g_1 (N=1e5) exceeds 1/m = 0.5 at x in
//     {0.9, 0.99}.
void criterion_10() {
  prime_table table(100'000);
  const auto g1 = gk_series(table, {0, 0}, 1, 100'000);
  const std::vector<double> grid{0.895, 0.9, 0.905, 0.985, 0.99, 0.995};
  const auto rows = majorization_probe(g1, 2, grid);
  double a90 = 0.0, a99 = 0.0;
  for (const auto& row : rows) {
    if (row.x == 0.9) a90 = row.alpha;
    if (row.x == 0.99) a99 = row.alpha;
  }
  detail("alpha(0.90) = " + sci(a90) + ", alpha(0.99) = " + sci(a99) +
         " (diagnostic; threshold 0.5)");
  verdict(10, a90 > 0.5 && a99 > 0.5,
          "majorization probe exponents exceed 1/m = 0.5 for two-prime sums");
}

// 11. scan: g=x^2 decays at 0.75 and is flagged at 0.45; g=x flagged at 0.9.
void criterion_11() {
  prime_table table(2'200'000);
  const auto seq = base_sequence::primes(table, 140'000);
  std::vector<truncation_policy> ladder;
  for (int k = 12; k <= 17; ++k) ladder.push_back({std::uint64_t{1} << k, 0.0});

  const auto rows2 =
      convergence_scan(seq, general_factor({0.0, 0.0, 1.0}), {0.45, 0.75}, ladder);
  const auto rows1 = convergence_scan(seq, general_factor({0.0, 1.0}), {0.9}, ladder);
  const bool ok = rows2[0].flag == "no-convergence" && rows2[1].flag == "decay" &&
                  rows1[0].flag == "no-convergence";
  detail("g=x^2: sigma=0.45 -> " + rows2[0].flag + " (rate " + sci(rows2[0].rate) +
         "), sigma=0.75 -> " + rows2[1].flag + " (rate " + sci(rows2[1].rate) + ")");
  detail("g=x:   sigma=0.90 -> " + rows1[0].flag + " (rate " + sci(rows1[0].rate) + ")");
  verdict(11, ok, "convergence-abscissa scan decay/no-convergence flags");
}

}  // namespace

int main(int argc, char** argv) {
  const int only = argc > 1 ? std::atoi(argv[1]) : 0;
  using fn = void (*)();
  const fn criteria[] = {criterion_1, criterion_2, criterion_3, criterion_4,
                         criterion_5, criterion_6, criterion_7, criterion_8,
                         criterion_9, criterion_10, criterion_11};
  for (int i = 0; i < 11; ++i) {
    if (only != 0 && only != i + 1) continue;
    try {
      criteria[i]();
    } catch (const std::exception& e) {
      detail(std::string("exception: ") + e.what());
      verdict(i + 1, false, "aborted by exception");
    }
  }
  return g_failures;
}

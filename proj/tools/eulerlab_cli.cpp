// eulerlab batch CLI: thin front-end over the eulerlab C API.
//
// Reports are JSON (default) or CSV, deterministic for a fixed
// configuration; runtime_ms is the one field allowed to vary between runs.
// Exit codes: 0 success, 1 failed identity/oracle check, 2 configuration
// error, 3 resource-limit error.

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "eulerlab.h"

using ordered_json = nlohmann::ordered_json;

namespace {

// ---------------------------------------------------------------------------
// handle wrappers

template <typename T, void (*Free)(T*)>
struct handle {
  T* ptr = nullptr;
  handle() = default;
  ~handle() { reset(); }
  handle(const handle&) = delete;
  handle& operator=(const handle&) = delete;
  void reset() {
    if (ptr) Free(ptr);
    ptr = nullptr;
  }
  T** out() {
    reset();
    return &ptr;
  }
  T* get() const { return ptr; }
};

using table_handle = handle<el_prime_table, el_prime_table_free>;
using sequence_handle = handle<el_sequence, el_sequence_free>;
using sign_handle = handle<el_sign, el_sign_free>;
using factor_handle = handle<el_factor, el_factor_free>;
using scan_handle = handle<el_scan, el_scan_free>;
using series_handle = handle<el_series, el_series_free>;

int status_exit_code(el_status st) { return st == EL_ERR_RESOURCE_LIMIT ? 3 : 2; }

struct cli_abort {
  int code;
};

void check(el_status st, const char* what) {
  if (st == EL_OK) return;
  std::cerr << "error: " << what << ": " << el_status_message(st);
  const char* detail = el_last_error_message();
  if (detail && *detail) std::cerr << " (" << detail << ")";
  std::cerr << "\n";
  throw cli_abort{status_exit_code(st)};
}

// ---------------------------------------------------------------------------
// report plumbing

ordered_json complex_json(el_complex z) { return ordered_json{{"re", z.re}, {"im", z.im}}; }

struct report {
  ordered_json j;
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();

  explicit report(const std::string& command) { j["command"] = command; }

  void finish(const std::string& format, const std::string& output,
              const std::string& csv_text) {
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - t0)
                        .count();
    std::string text;
    if (format == "csv" && !csv_text.empty()) {
      text = csv_text;
    } else {
      j["runtime_ms"] = static_cast<std::int64_t>(ms);
      text = j.dump(1) + "\n";
    }
    if (output.empty()) {
      std::cout << text;
    } else {
      std::ofstream f(output, std::ios::binary);
      if (!f) {
        std::cerr << "error: cannot write " << output << "\n";
        throw cli_abort{2};
      }
      f << text;
    }
  }
};

std::string csv_num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// ---------------------------------------------------------------------------
// shared option bundle

struct common_opts {
  double s_re = 2.0;
  double s_im = 0.0;
  std::uint64_t max_terms = 1'000'000;
  double target_tail = 1e-10;
  std::uint64_t limit = 1'000'000;
  std::string format = "json";
  std::string output;

  el_complex s() const { return {s_re, s_im}; }
  el_policy policy() const { return {max_terms, target_tail}; }
};

struct config_defaults {
  std::map<std::string, std::string> kv;

  template <typename T>
  void apply(const std::string& key, T& slot) const {
    auto it = kv.find(key);
    if (it == kv.end()) return;
    std::istringstream in(it->second);
    T v{};
    if (in >> v) slot = v;
  }
  void apply(const std::string& key, std::string& slot) const {
    auto it = kv.find(key);
    if (it != kv.end()) slot = it->second;
  }
};

config_defaults load_config(int argc, char** argv) {
  config_defaults cfg;
  std::string path;
  for (int i = 1; i + 1 < argc; ++i)
    if (std::string(argv[i]) == "--config") path = argv[i + 1];
  if (path.empty()) return cfg;
  std::ifstream f(path);
  if (!f) {
    std::cerr << "error: cannot read config file " << path << "\n";
    throw cli_abort{2};
  }
  std::string line;
  while (std::getline(f, line)) {
    if (line.empty() || line[0] == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      std::cerr << "error: config line is not key=value: " << line << "\n";
      throw cli_abort{2};
    }
    cfg.kv[line.substr(0, eq)] = line.substr(eq + 1);
  }
  return cfg;
}

void add_common(CLI::App* cmd, common_opts& opts, bool with_s = true) {
  if (with_s) {
    cmd->add_option("--s-re", opts.s_re, "real part of s");
    cmd->add_option("--s-im", opts.s_im, "imaginary part of s");
  }
  cmd->add_option("--max-terms", opts.max_terms, "truncation: maximum terms");
  cmd->add_option("--target-tail", opts.target_tail, "truncation: tail-bound goal");
  cmd->add_option("--limit", opts.limit, "prime sieve limit");
  cmd->add_option("--format", opts.format, "output format")
      ->check(CLI::IsMember({"json", "csv"}));
  cmd->add_option("--output", opts.output, "output path (default stdout)");
}

std::vector<double> parse_double_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) out.push_back(std::stod(item));
  return out;
}

el_label parse_label(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) {
    std::cerr << "error: label must be i,j\n";
    throw cli_abort{2};
  }
  return {static_cast<std::uint32_t>(std::stoul(text.substr(0, comma))),
          std::stoull(text.substr(comma + 1))};
}

// --seq naturals | primes | residue:i,j | list:v1,v2,...
void build_sequence(const std::string& spec, const table_handle& table,
                    const common_opts& opts, sequence_handle& out, ordered_json& params) {
  params["sequence"] = spec;
  if (spec == "naturals") {
    check(el_sequence_naturals(opts.max_terms, out.out()), "sequence");
    return;
  }
  if (spec == "primes") {
    std::uint64_t count = 0;
    check(el_prime_count(table.get(), &count), "prime count");
    check(el_sequence_primes(table.get(), std::min(count, opts.max_terms), out.out()),
          "sequence");
    return;
  }
  if (spec.rfind("residue:", 0) == 0) {
    const el_label label = parse_label(spec.substr(8));
    std::uint64_t count = 0;
    check(el_prime_count(table.get(), &count), "prime count");
    const std::uint64_t avail =
        count > label.j ? (count - label.j) >> label.i : 0;
    check(el_sequence_residue(table.get(), label, std::min(avail, opts.max_terms), out.out()),
          "sequence");
    return;
  }
  if (spec.rfind("list:", 0) == 0) {
    std::vector<std::uint64_t> values;
    std::stringstream in(spec.substr(5));
    std::string item;
    while (std::getline(in, item, ',')) values.push_back(std::stoull(item));
    check(el_sequence_explicit(values.data(), values.size(), out.out()), "sequence");
    return;
  }
  std::cerr << "error: unknown sequence spec " << spec << "\n";
  throw cli_abort{2};
}

// --sign <c> | alt:+ | alt:- | tail:N,+ | tail:N,-
void build_sign(const std::string& spec, sign_handle& out, ordered_json& params) {
  params["sign"] = spec;
  if (spec.rfind("alt:", 0) == 0) {
    check(el_sign_alternating(spec.substr(4) == "-" ? -1 : 1, out.out()), "sign");
    return;
  }
  if (spec.rfind("tail:", 0) == 0) {
    const auto body = spec.substr(5);
    const auto comma = body.find(',');
    const std::uint64_t n = std::stoull(body.substr(0, comma));
    const int sigma = (comma != std::string::npos && body.substr(comma + 1) == "-") ? -1 : 1;
    check(el_sign_tail_alternating(n, sigma, out.out()), "sign");
    return;
  }
  try {
    check(el_sign_constant(std::stod(spec), out.out()), "sign");
  } catch (const std::invalid_argument&) {
    std::cerr << "error: unknown sign spec " << spec << "\n";
    throw cli_abort{2};
  }
}

void build_factor(const std::string& coeffs, std::uint32_t ratio_degree, factor_handle& out,
                  ordered_json& params) {
  params["factor_coeffs"] = coeffs;
  const auto values = parse_double_list(coeffs);
  check(el_factor_create(values.data(), values.size(), out.out()), "factor");
  if (ratio_degree > 0) {
    params["regularized_ratio_degree"] = ratio_degree;
    factor_handle ratio;
    check(el_factor_regularized_ratio(out.get(), ratio_degree, ratio.out()), "ratio factor");
    out.reset();
    std::swap(out.ptr, ratio.ptr);
  }
}

void put_report(ordered_json& j, const el_report& rep) {
  j["value"] = complex_json(rep.value);
  j["terms_used"] = rep.terms_used;
  j["tail_bound"] = rep.tail_bound;
  j["converged"] = rep.converged != 0;
}

// Deterministic non-degenerate complex triples for the algebra checks.
struct triple_sampler {
  std::mt19937 rng;
  std::uniform_real_distribution<double> radius{0.3, 3.0};
  std::uniform_real_distribution<double> angle{0.0, 6.283185307179586};

  explicit triple_sampler(std::uint64_t seed) : rng(seed) {}

  std::complex<double> draw() {
    return std::polar(radius(rng), angle(rng));
  }
  void draw_triple(std::complex<double>& a, std::complex<double>& b,
                   std::complex<double>& c) {
    for (;;) {
      a = draw();
      b = draw();
      c = draw();
      const auto a2 = a * a, b2 = b * b, c2 = c * c;
      const double scale = std::max({std::abs(a2), std::abs(b2), std::abs(c2)});
      if (std::abs(a2 - b2) < 0.02 * scale || std::abs(b2 - c2) < 0.02 * scale ||
          std::abs(c2 - a2) < 0.02 * scale)
        continue;
      if (std::abs(c * c - 1.0) < 0.02 || std::abs(b) < 0.05 || std::abs(c) < 0.05) continue;
      return;
    }
  }
};

double rel_diff(el_complex x, el_complex y) {
  const std::complex<double> a{x.re, x.im}, b{y.re, y.im};
  const double scale = std::max({std::abs(a), std::abs(b), 1e-30});
  return std::abs(a - b) / scale;
}

// ---------------------------------------------------------------------------
// identity command

struct identity_opts {
  common_opts common;
  std::string name;
  bool list = false;
  double tol = -1.0;  // catalog default when negative
  std::uint32_t trunc_n = 5;
  std::string label = "0,0";
  std::uint32_t k = 1;
  std::uint32_t n_max = 64;
  std::uint64_t samples = 10'000;
  std::uint64_t seed = 12345;
  double quad_tol = 1e-9;
  int max_depth = 40;
};

int run_identity(const identity_opts& opts) {
  report rep("identity");

  if (opts.list) {
    size_t count = 0;
    check(el_identity_count(&count), "catalog");
    ordered_json catalog = ordered_json::array();
    for (size_t i = 0; i < count; ++i) {
      const char* name = nullptr;
      double tol = 0.0;
      check(el_identity_entry(i, &name, &tol), "catalog");
      catalog.push_back(ordered_json{{"name", name}, {"default_tolerance", tol}});
    }
    rep.j["params"] = ordered_json{{"list", true}};
    rep.j["catalog"] = catalog;
    rep.finish(opts.common.format, opts.common.output, "");
    return 0;
  }

  double tol = opts.tol;
  if (tol < 0.0) {
    size_t count = 0;
    check(el_identity_count(&count), "catalog");
    for (size_t i = 0; i < count; ++i) {
      const char* name = nullptr;
      double dtol = 0.0;
      check(el_identity_entry(i, &name, &dtol), "catalog");
      if (opts.name == name) tol = dtol;
    }
  }

  const el_complex s = opts.common.s();
  const el_policy policy = opts.common.policy();
  ordered_json inputs{{"s", complex_json(s)},
                      {"limit", opts.common.limit},
                      {"max_terms", policy.max_terms}};
  ordered_json check_j;
  double residual = 0.0;
  bool pass = false;
  el_complex lhs{0, 0}, rhs{0, 0};
  bool have_sides = true;

  table_handle table;
  const auto need_table = [&] { check(el_sieve(opts.common.limit, table.out()), "sieve"); };

  if (opts.name == "euler-vs-zeta") {
    need_table();
    std::uint64_t count = 0;
    check(el_prime_count(table.get(), &count), "prime count");
    sequence_handle seq;
    check(el_sequence_primes(table.get(), std::min(count, policy.max_terms), seq.out()),
          "sequence");
    sign_handle sign;
    check(el_sign_constant(1.0, sign.out()), "sign");
    el_report product{};
    check(el_euler_product_eval(seq.get(), sign.get(), s, policy, &product), "product");
    check(el_zeta_ref(s, &rhs), "zeta");
    lhs = product.value;
    residual = rel_diff(lhs, rhs) * std::max(std::abs(std::complex<double>(rhs.re, rhs.im)), 1.0);
    residual = std::hypot(lhs.re - rhs.re, lhs.im - rhs.im);
  } else if (opts.name == "plus-product-quotient") {
    need_table();
    std::uint64_t count = 0;
    check(el_prime_count(table.get(), &count), "prime count");
    sequence_handle seq;
    check(el_sequence_primes(table.get(), std::min(count, policy.max_terms), seq.out()),
          "sequence");
    sign_handle sign;
    check(el_sign_constant(-1.0, sign.out()), "sign");
    el_report product{};
    check(el_euler_product_eval(seq.get(), sign.get(), s, policy, &product), "product");
    el_complex zs{}, z2s{};
    check(el_zeta_ref(s, &zs), "zeta(s)");
    check(el_zeta_ref({2.0 * s.re, 2.0 * s.im}, &z2s), "zeta(2s)");
    const std::complex<double> prod{product.value.re, product.value.im};
    const std::complex<double> left = prod * std::complex<double>{zs.re, zs.im};
    lhs = {left.real(), left.imag()};
    rhs = z2s;
    residual = std::hypot(lhs.re - rhs.re, lhs.im - rhs.im);
  } else if (opts.name == "exp-factorization") {
    need_table();
    check(el_exp_factorization_residual(table.get(), s, policy, &residual), "residual");
    have_sides = false;
  } else if (opts.name == "mobius-inversion-pair") {
    need_table();
    el_report direct{}, moebius{};
    check(el_prime_zeta_direct(table.get(), s, policy, &direct), "direct");
    check(el_prime_zeta_mobius(s, opts.n_max, &moebius), "mobius");
    lhs = moebius.value;
    rhs = direct.value;
    residual = std::hypot(lhs.re - rhs.re, lhs.im - rhs.im);
    inputs["n_max"] = opts.n_max;
  } else if (opts.name == "split-factorization") {
    need_table();
    check(el_split_residual(table.get(), parse_label(opts.label), s, policy, &residual),
          "split residual");
    inputs["label"] = opts.label;
    have_sides = false;
  } else if (opts.name == "truncation-bound") {
    need_table();
    double measured = 0.0, bound = 0.0;
    check(el_truncation_discrepancy(table.get(), opts.trunc_n, s, policy, &measured, &bound),
          "truncation bound");
    lhs = {measured, 0.0};
    rhs = {bound, 0.0};
    residual = std::max(0.0, measured - bound);
    inputs["N"] = opts.trunc_n;
  } else if (opts.name == "assoc-defect" || opts.name == "jacobi-defect") {
    triple_sampler sampler(opts.seed);
    double worst = 0.0;
    for (std::uint64_t i = 0; i < opts.samples; ++i) {
      std::complex<double> a, b, c;
      sampler.draw_triple(a, b, c);
      if (opts.name == "assoc-defect") {
        el_complex defect{}, closed{};
        check(el_assoc_defect({a.real(), a.imag()}, {b.real(), b.imag()},
                              {c.real(), c.imag()}, &defect, &closed),
              "assoc defect");
        worst = std::max(worst, rel_diff(defect, closed));
        lhs = defect;
        rhs = closed;
      } else {
        el_complex jl{}, jd{}, jp{};
        check(el_jacobi_defect({a.real(), a.imag()}, {b.real(), b.imag()},
                               {c.real(), c.imag()}, &jl, &jd, &jp),
              "jacobi defect");
        worst = std::max(worst, rel_diff(jl, jd));
        lhs = jl;
        rhs = jd;
        check_j["paper_form"] = complex_json(jp);
        check_j["paper_form_matches"] = rel_diff(jl, jp) <= tol;
      }
    }
    residual = worst;
    inputs["samples"] = opts.samples;
    inputs["seed"] = opts.seed;
  } else if (opts.name == "mellin") {
    need_table();
    el_complex series_side{}, integral_side{};
    int quad_ok = 0;
    check(el_mellin_residual(table.get(), parse_label(opts.label), opts.k, s, opts.quad_tol,
                             opts.max_depth, &residual, &series_side, &integral_side,
                             &quad_ok),
          "mellin");
    lhs = series_side;
    rhs = integral_side;
    inputs["label"] = opts.label;
    inputs["k"] = opts.k;
    check_j["quad_converged"] = quad_ok != 0;
  } else {
    std::cerr << "error: unknown identity " << opts.name << "\n";
    throw cli_abort{2};
  }

  pass = residual <= tol || (opts.name == "truncation-bound" && residual <= tol);

  check_j["identity"] = opts.name;
  check_j["inputs"] = inputs;
  check_j["lhs"] = have_sides ? complex_json(lhs) : ordered_json(nullptr);
  check_j["rhs"] = have_sides ? complex_json(rhs) : ordered_json(nullptr);
  check_j["residual"] = residual;
  check_j["tolerance"] = tol;
  check_j["pass"] = pass;

  rep.j["params"] = inputs;
  rep.j["check"] = ordered_json{{"identity", check_j["identity"]},
                                {"inputs", check_j["inputs"]},
                                {"lhs", check_j["lhs"]},
                                {"rhs", check_j["rhs"]},
                                {"residual", check_j["residual"]},
                                {"tolerance", check_j["tolerance"]},
                                {"pass", check_j["pass"]}};
  if (check_j.contains("paper_form")) {
    rep.j["check"]["paper_form"] = check_j["paper_form"];
    rep.j["check"]["paper_form_matches"] = check_j["paper_form_matches"];
  }
  if (check_j.contains("quad_converged"))
    rep.j["check"]["quad_converged"] = check_j["quad_converged"];
  rep.j["residual"] = residual;
  rep.j["pass"] = pass;
  rep.finish(opts.common.format, opts.common.output, "");
  return pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    const config_defaults cfg = load_config(argc, argv);

    CLI::App app{"eulerlab: Euler products, Dirichlet series, prime zeta, and "
                 "Goldbach-Waring representation counting"};
    app.require_subcommand(1);
    std::string config_path;
    app.add_option("--config", config_path, "flat key=value config file");

    auto with_defaults = [&](common_opts& opts) {
      cfg.apply("max-terms", opts.max_terms);
      cfg.apply("target-tail", opts.target_tail);
      cfg.apply("limit", opts.limit);
      cfg.apply("format", opts.format);
      cfg.apply("output", opts.output);
    };

    // --- primes ---
    common_opts primes_opts;
    with_defaults(primes_opts);
    std::uint64_t primes_nth = 0, primes_mobius = 0, primes_count = 10;
    std::string primes_label;
    auto* cmd_primes = app.add_subcommand("primes", "sieve and query the prime table");
    add_common(cmd_primes, primes_opts, false);
    cmd_primes->add_option("--nth", primes_nth, "print p_n (1-based)");
    cmd_primes->add_option("--mobius", primes_mobius, "print mu(n)");
    cmd_primes->add_option("--label", primes_label, "subsequence label i,j");
    cmd_primes->add_option("--count", primes_count, "subsequence elements to list");

    // --- eval-dirichlet ---
    common_opts dir_opts;
    with_defaults(dir_opts);
    std::string dir_seq = "naturals", dir_sign = "1";
    bool dir_accelerate = false;
    auto* cmd_dir = app.add_subcommand("eval-dirichlet", "evaluate D^l_A(s)");
    add_common(cmd_dir, dir_opts);
    cmd_dir->add_option("--seq", dir_seq, "naturals|primes|residue:i,j|list:...");
    cmd_dir->add_option("--sign", dir_sign, "<c>|alt:+|alt:-|tail:N,+|tail:N,-");
    cmd_dir->add_flag("--accelerate", dir_accelerate,
                      "use the alternating-series acceleration (Re(s) > 0)");

    // --- eval-product ---
    common_opts prod_opts;
    with_defaults(prod_opts);
    std::string prod_seq = "primes", prod_sign = "1", prod_factor;
    std::uint32_t prod_ratio_degree = 0;
    bool prod_continued = false;
    auto* cmd_prod = app.add_subcommand("eval-product", "evaluate an Euler product");
    add_common(cmd_prod, prod_opts);
    cmd_prod->add_option("--seq", prod_seq, "naturals|primes|residue:i,j|list:...");
    cmd_prod->add_option("--sign", prod_sign, "sign sequence spec");
    cmd_prod->add_option("--factor-coeffs", prod_factor,
                         "general factor g coefficients c0,c1,...");
    cmd_prod->add_option("--ratio-degree", prod_ratio_degree,
                         "replace g by its regularized ratio factor, truncated here");
    cmd_prod->add_flag("--continued", prod_continued,
                       "use the continued (regularized) product, Re(s) > 1/2");

    // --- prime-zeta ---
    common_opts pz_opts;
    with_defaults(pz_opts);
    std::string pz_method = "direct";
    std::uint32_t pz_nmax = 64;
    double pz_zre = 0.0, pz_zim = 0.0;
    auto* cmd_pz = app.add_subcommand("prime-zeta", "evaluate P(s)");
    add_common(cmd_pz, pz_opts);
    cmd_pz->add_option("--method", pz_method, "direct|mobius|deformed")
        ->check(CLI::IsMember({"direct", "mobius", "deformed"}));
    cmd_pz->add_option("--n-max", pz_nmax, "Moebius truncation order");
    cmd_pz->add_option("--z-re", pz_zre, "deformation z, real part");
    cmd_pz->add_option("--z-im", pz_zim, "deformation z, imaginary part");
    cfg.apply("n-max", pz_nmax);

    // --- identity ---
    identity_opts id_opts;
    with_defaults(id_opts.common);
    cfg.apply("n-max", id_opts.n_max);
    cfg.apply("seed", id_opts.seed);
    auto* cmd_id = app.add_subcommand("identity", "run a named identity check");
    add_common(cmd_id, id_opts.common);
    cmd_id->add_option("--name", id_opts.name, "identity name (see --list)");
    cmd_id->add_flag("--list", id_opts.list, "print the identity catalog");
    cmd_id->add_option("--tol", id_opts.tol, "tolerance (default from catalog)");
    cmd_id->add_option("--n", id_opts.trunc_n, "truncation-bound switch index N");
    cmd_id->add_option("--label", id_opts.label, "subsequence label i,j");
    cmd_id->add_option("--k", id_opts.k, "mellin power k");
    cmd_id->add_option("--n-max", id_opts.n_max, "Moebius truncation order");
    cmd_id->add_option("--samples", id_opts.samples, "random triples for algebra checks");
    cmd_id->add_option("--seed", id_opts.seed, "random seed for algebra checks");
    cmd_id->add_option("--quad-tol", id_opts.quad_tol, "mellin quadrature tolerance");
    cmd_id->add_option("--max-depth", id_opts.max_depth, "mellin quadrature depth");

    // --- split ---
    common_opts split_opts;
    with_defaults(split_opts);
    std::string split_label = "0,0", split_label_b;
    bool split_children_flag = false, split_residual_flag = false, split_quotient = false;
    std::uint32_t split_partition_depth = 0;
    std::uint64_t split_count = 64;
    auto* cmd_split = app.add_subcommand("split", "subsequence tree operations");
    add_common(cmd_split, split_opts);
    cmd_split->add_option("--label", split_label, "node label i,j");
    cmd_split->add_flag("--children", split_children_flag, "print the two child labels");
    cmd_split->add_flag("--residual", split_residual_flag, "split factorization residual");
    cmd_split->add_flag("--quotient", split_quotient, "even/odd exponential quotient");
    cmd_split->add_option("--partition-depth", split_partition_depth,
                          "verify the leaf partition to this depth");
    cmd_split->add_option("--interlace-with", split_label_b,
                          "check interlacing against this label's subsequence");
    cmd_split->add_option("--count", split_count, "elements per subsequence for interlacing");

    // --- algebra ---
    common_opts alg_opts;
    with_defaults(alg_opts);
    std::string alg_op = "assoc", alg_sign = "-";
    double a_re = 2, a_im = 0, b_re = 1, b_im = 0, c_re = 3, c_im = 0;
    std::uint64_t alg_n = 5;
    auto* cmd_alg = app.add_subcommand("algebra", "Leibniz-division algebra");
    add_common(cmd_alg, alg_opts, false);
    cmd_alg->add_option("--op", alg_op, "div|assoc|skew|jacobi|catalan")
        ->check(CLI::IsMember({"div", "assoc", "skew", "jacobi", "catalan"}));
    cmd_alg->add_option("--a-re", a_re);
    cmd_alg->add_option("--a-im", a_im);
    cmd_alg->add_option("--b-re", b_re);
    cmd_alg->add_option("--b-im", b_im);
    cmd_alg->add_option("--c-re", c_re);
    cmd_alg->add_option("--c-im", c_im);
    cmd_alg->add_option("--sign-symbol", alg_sign, "+ or - for the skew bracket");
    cmd_alg->add_option("--n", alg_n, "catalan index");

    // --- goldbach ---
    common_opts gb_opts;
    with_defaults(gb_opts);
    std::uint32_t gb_k = 1, gb_m = 2;
    std::uint64_t gb_nmax = 2000, gb_budget = 200'000'000;
    std::string gb_label = "0,0", gb_xgrid;
    bool gb_oracle = false, gb_scan = false, gb_probe = false;
    auto* cmd_gb = app.add_subcommand("goldbach", "representation counting");
    add_common(cmd_gb, gb_opts, false);
    cmd_gb->add_option("--k", gb_k, "power");
    cmd_gb->add_option("--m", gb_m, "tuple length");
    cmd_gb->add_option("--n-max", gb_nmax, "count representations up to this n");
    cmd_gb->add_option("--label", gb_label, "subsequence label i,j");
    cmd_gb->add_flag("--oracle", gb_oracle, "cross-check convolution against brute force");
    cmd_gb->add_flag("--scan", gb_scan, "list even n with no two-prime representation");
    cmd_gb->add_flag("--probe", gb_probe, "majorization probe (local exponents)");
    cmd_gb->add_option("--x", gb_xgrid, "probe grid x1,x2,... in (0,1)");
    cmd_gb->add_option("--budget", gb_budget, "brute-force enumeration budget");

    // --- mellin ---
    common_opts mel_opts;
    with_defaults(mel_opts);
    std::uint32_t mel_k = 1;
    std::string mel_label = "0,0";
    double mel_tol = 1e-9;
    int mel_depth = 40;
    auto* cmd_mel = app.add_subcommand("mellin", "Gamma/Mellin identity residual");
    add_common(cmd_mel, mel_opts);
    cmd_mel->add_option("--k", mel_k, "power k");
    cmd_mel->add_option("--label", mel_label, "subsequence label i,j");
    cmd_mel->add_option("--quad-tol", mel_tol, "quadrature tolerance");
    cmd_mel->add_option("--max-depth", mel_depth, "quadrature depth");

    // --- scan ---
    common_opts scan_opts;
    with_defaults(scan_opts);
    std::string scan_seq = "primes", scan_factor = "0,1", scan_sigmas = "0.45,0.75,2.0";
    std::string scan_ladder = "4096,8192,16384,32768,65536,131072";
    auto* cmd_scan = app.add_subcommand("scan", "empirical convergence-abscissa scan");
    add_common(cmd_scan, scan_opts, false);
    cmd_scan->add_option("--seq", scan_seq, "base sequence spec");
    cmd_scan->add_option("--factor-coeffs", scan_factor, "general factor coefficients");
    cmd_scan->add_option("--sigma-grid", scan_sigmas, "ascending sigma list");
    cmd_scan->add_option("--ladder", scan_ladder, "max-terms ladder");

    try {
      app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
      return app.exit(e);
    } catch (const CLI::ParseError& e) {
      app.exit(e);
      return 2;
    }

    // ---------- dispatch ----------

    if (cmd_primes->parsed()) {
      report rep("primes");
      table_handle table;
      check(el_sieve(primes_opts.limit, table.out()), "sieve");
      std::uint64_t count = 0;
      check(el_prime_count(table.get(), &count), "count");
      ordered_json params{{"limit", primes_opts.limit}};
      rep.j["params"] = params;
      rep.j["count"] = count;
      std::string csv;
      if (primes_nth > 0) {
        std::uint64_t p = 0;
        check(el_nth_prime(table.get(), primes_nth, &p), "nth prime");
        rep.j["nth"] = ordered_json{{"n", primes_nth}, {"p", p}};
      }
      if (primes_mobius > 0) {
        std::int32_t mu = 0;
        check(el_mobius(primes_mobius, &mu), "mobius");
        rep.j["mobius"] = ordered_json{{"n", primes_mobius}, {"mu", mu}};
      }
      if (!primes_label.empty()) {
        sequence_handle seq;
        check(el_sequence_residue(table.get(), parse_label(primes_label), primes_count,
                                  seq.out()),
              "subsequence");
        ordered_json elems = ordered_json::array();
        csv = "n,element\n";
        for (std::uint64_t n = 1; n <= primes_count; ++n) {
          std::uint64_t v = 0;
          check(el_sequence_at(seq.get(), n, &v), "element");
          elems.push_back(v);
          csv += std::to_string(n) + "," + std::to_string(v) + "\n";
        }
        rep.j["subsequence"] = ordered_json{{"label", primes_label}, {"elements", elems}};
      }
      rep.finish(primes_opts.format, primes_opts.output, csv);
      return 0;
    }

    if (cmd_dir->parsed()) {
      report rep("eval-dirichlet");
      table_handle table;
      if (dir_seq != "naturals" && dir_seq.rfind("list:", 0) != 0)
        check(el_sieve(dir_opts.limit, table.out()), "sieve");
      ordered_json params{{"s", complex_json(dir_opts.s())},
                          {"max_terms", dir_opts.max_terms},
                          {"target_tail", dir_opts.target_tail},
                          {"accelerate", dir_accelerate}};
      sequence_handle seq;
      build_sequence(dir_seq, table, dir_opts, seq, params);
      sign_handle sign;
      build_sign(dir_sign, sign, params);
      el_report out{};
      if (dir_accelerate)
        check(el_alternating_eval(seq.get(), sign.get(), dir_opts.s(), dir_opts.target_tail,
                                  &out),
              "alternating eval");
      else
        check(el_dirichlet_eval(seq.get(), sign.get(), dir_opts.s(), dir_opts.policy(), &out),
              "dirichlet eval");
      rep.j["params"] = params;
      put_report(rep.j, out);
      rep.finish(dir_opts.format, dir_opts.output, "");
      return 0;
    }

    if (cmd_prod->parsed()) {
      report rep("eval-product");
      table_handle table;
      if (prod_seq != "naturals" && prod_seq.rfind("list:", 0) != 0)
        check(el_sieve(prod_opts.limit, table.out()), "sieve");
      ordered_json params{{"s", complex_json(prod_opts.s())},
                          {"max_terms", prod_opts.max_terms},
                          {"target_tail", prod_opts.target_tail}};
      sequence_handle seq;
      build_sequence(prod_seq, table, prod_opts, seq, params);
      el_report out{};
      if (!prod_factor.empty()) {
        factor_handle factor;
        build_factor(prod_factor, prod_ratio_degree, factor, params);
        check(el_general_product_eval(seq.get(), factor.get(), prod_opts.s(),
                                      prod_opts.policy(), &out),
              "general product");
        double C = 0.0, lambda = 0.0;
        check(el_derive_convergence_params(factor.get(), 0.5, &C, &lambda), "params");
        params["convergence"] = ordered_json{{"C", C}, {"lambda", lambda}};
      } else {
        sign_handle sign;
        build_sign(prod_sign, sign, params);
        if (prod_continued)
          check(el_continued_product_eval(seq.get(), sign.get(), prod_opts.s(),
                                          prod_opts.policy(), &out),
                "continued product");
        else
          check(el_euler_product_eval(seq.get(), sign.get(), prod_opts.s(),
                                      prod_opts.policy(), &out),
                "euler product");
      }
      rep.j["params"] = params;
      put_report(rep.j, out);
      rep.finish(prod_opts.format, prod_opts.output, "");
      return 0;
    }

    if (cmd_pz->parsed()) {
      report rep("prime-zeta");
      ordered_json params{{"s", complex_json(pz_opts.s())}, {"method", pz_method}};
      el_report out{};
      if (pz_method == "mobius") {
        params["n_max"] = pz_nmax;
        check(el_prime_zeta_mobius(pz_opts.s(), pz_nmax, &out), "prime zeta (mobius)");
      } else {
        table_handle table;
        check(el_sieve(pz_opts.limit, table.out()), "sieve");
        params["limit"] = pz_opts.limit;
        if (pz_method == "deformed") {
          params["z"] = complex_json({pz_zre, pz_zim});
          check(el_z_deformed_prime_zeta(table.get(), {pz_zre, pz_zim}, pz_opts.s(),
                                         pz_opts.policy(), &out),
                "prime zeta (deformed)");
        } else {
          check(el_prime_zeta_direct(table.get(), pz_opts.s(), pz_opts.policy(), &out),
                "prime zeta (direct)");
        }
      }
      rep.j["params"] = params;
      put_report(rep.j, out);
      rep.finish(pz_opts.format, pz_opts.output, "");
      return 0;
    }

    if (cmd_id->parsed()) return run_identity(id_opts);

    if (cmd_split->parsed()) {
      report rep("split");
      const el_label label = parse_label(split_label);
      ordered_json params{{"label", split_label}, {"s", complex_json(split_opts.s())}};
      rep.j["params"] = params;
      if (split_children_flag) {
        el_label left{}, right{};
        check(el_split_children(label, &left, &right), "children");
        rep.j["children"] = ordered_json::array(
            {ordered_json{{"i", left.i}, {"j", left.j}},
             ordered_json{{"i", right.i}, {"j", right.j}}});
      }
      if (split_residual_flag || split_quotient || split_partition_depth > 0 ||
          !split_label_b.empty()) {
        table_handle table;
        check(el_sieve(split_opts.limit, table.out()), "sieve");
        if (split_residual_flag) {
          double residual = 0.0;
          check(el_split_residual(table.get(), label, split_opts.s(), split_opts.policy(),
                                  &residual),
                "split residual");
          rep.j["residual"] = residual;
        }
        if (split_quotient) {
          el_complex q{};
          check(el_even_odd_quotient(table.get(), label, split_opts.s(), split_opts.policy(),
                                     &q),
                "quotient");
          rep.j["value"] = complex_json(q);
        }
        if (split_partition_depth > 0) {
          // Leaf index sets at this depth must tile the index line past 2^d.
          const std::uint64_t d = split_partition_depth;
          const std::uint64_t span = std::uint64_t{1} << d;
          const std::uint64_t horizon = 1 << 14;
          std::vector<std::uint8_t> seen(horizon, 0);
          bool ok = true;
          for (std::uint64_t j = 0; j < span && ok; ++j)
            for (std::uint64_t n = 1; span * n + j < horizon; ++n) {
              auto& cell = seen[span * n + j];
              if (cell) ok = false;
              cell = 1;
            }
          std::uint64_t missing = 0;
          for (std::uint64_t idx = 1; idx < horizon; ++idx)
            if (!seen[idx]) ++missing;
          ok = ok && missing == span - 1;
          rep.j["partition"] = ordered_json{
              {"depth", d}, {"pass", ok}, {"boundary_indices", missing}};
        }
        if (!split_label_b.empty()) {
          sequence_handle sa, sb;
          check(el_sequence_residue(table.get(), label, split_count, sa.out()), "sequence a");
          check(el_sequence_residue(table.get(), parse_label(split_label_b), split_count,
                                    sb.out()),
                "sequence b");
          int inter = 0, insufficient = 0;
          std::uint64_t offset = 0;
          check(el_interlace_check(sa.get(), sb.get(), &inter, &offset, &insufficient),
                "interlace");
          rep.j["interlace"] = ordered_json{{"with", split_label_b},
                                            {"interlaced", inter != 0},
                                            {"offset", offset},
                                            {"insufficient_data", insufficient != 0}};
        }
      }
      rep.finish(split_opts.format, split_opts.output, "");
      return 0;
    }

    if (cmd_alg->parsed()) {
      report rep("algebra");
      ordered_json params{{"op", alg_op}};
      const el_complex a{a_re, a_im}, b{b_re, b_im}, c{c_re, c_im};
      if (alg_op == "div") {
        el_complex out{};
        check(el_leibniz_div(a, b, &out), "div");
        rep.j["value"] = complex_json(out);
      } else if (alg_op == "assoc") {
        el_complex defect{}, closed{};
        check(el_assoc_defect(a, b, c, &defect, &closed), "assoc");
        rep.j["defect"] = complex_json(defect);
        rep.j["closed_form"] = complex_json(closed);
      } else if (alg_op == "skew") {
        el_complex out{};
        check(el_skew_bracket(a, b, alg_sign == "-" ? -1 : 1, &out), "skew");
        rep.j["value"] = complex_json(out);
      } else if (alg_op == "jacobi") {
        el_complex lhs{}, derived{}, paper{};
        check(el_jacobi_defect(a, b, c, &lhs, &derived, &paper), "jacobi");
        rep.j["lhs"] = complex_json(lhs);
        rep.j["derived_form"] = complex_json(derived);
        rep.j["paper_form"] = complex_json(paper);
      } else {
        std::uint64_t out = 0;
        check(el_catalan(alg_n, &out), "catalan");
        params["n"] = alg_n;
        rep.j["value"] = out;
      }
      params["a"] = complex_json(a);
      params["b"] = complex_json(b);
      params["c"] = complex_json(c);
      rep.j["params"] = params;
      rep.finish(alg_opts.format, alg_opts.output, "");
      return 0;
    }

    if (cmd_gb->parsed()) {
      report rep("goldbach");
      const std::uint64_t sieve_limit = std::max(gb_opts.limit, gb_nmax);
      table_handle table;
      check(el_sieve(sieve_limit, table.out()), "sieve");
      const el_label label = parse_label(gb_label);
      ordered_json params{{"k", gb_k}, {"m", gb_m}, {"n_max", gb_nmax}, {"label", gb_label}};
      rep.j["params"] = params;
      std::string csv;
      int exit_code = 0;

      if (gb_scan) {
        std::vector<std::uint64_t> buf(64);
        size_t found = 0;
        check(el_goldbach_scan(table.get(), gb_nmax, buf.data(), buf.size(), &found),
              "goldbach scan");
        ordered_json violations = ordered_json::array();
        for (size_t i = 0; i < std::min(found, buf.size()); ++i) violations.push_back(buf[i]);
        rep.j["violations"] = violations;
        rep.j["violation_count"] = found;
      } else if (gb_probe) {
        series_handle g;
        check(el_gk_series(table.get(), label, gb_k, gb_nmax, g.out()), "g_k");
        const auto xs = gb_xgrid.empty() ? std::vector<double>{0.895, 0.9, 0.905, 0.985, 0.99,
                                                               0.995}
                                         : parse_double_list(gb_xgrid);
        std::vector<double> alphas(xs.size());
        size_t n_out = 0;
        check(el_majorization_probe(g.get(), gb_m, xs.data(), xs.size(), alphas.data(),
                                    &n_out),
              "probe");
        ordered_json rows = ordered_json::array();
        csv = "x,alpha\n";
        for (size_t i = 0; i < n_out; ++i) {
          rows.push_back(ordered_json{{"x", xs[i + 1]}, {"alpha", alphas[i]}});
          csv += csv_num(xs[i + 1]) + "," + csv_num(alphas[i]) + "\n";
        }
        rep.j["threshold"] = 1.0 / gb_m;
        rep.j["rows"] = rows;
      } else {
        series_handle g, counts;
        check(el_gk_series(table.get(), label, gb_k, gb_nmax, g.out()), "g_k");
        check(el_power_counts(g.get(), gb_m, counts.out()), "power counts");
        if (gb_oracle) {
          series_handle brute;
          check(el_brute_force_counts(table.get(), label, gb_k, gb_m, gb_nmax, gb_budget,
                                      brute.out()),
                "brute force");
          bool equal = true;
          for (std::uint64_t n = 0; n <= gb_nmax && equal; ++n) {
            std::uint64_t x = 0, y = 0;
            check(el_series_coeff(counts.get(), n, &x), "coeff");
            check(el_series_coeff(brute.get(), n, &y), "coeff");
            equal = x == y;
          }
          rep.j["oracle_equal"] = equal;
          exit_code = equal ? 0 : 1;
        }
        ordered_json rows = ordered_json::array();
        csv = "n,count\n";
        for (std::uint64_t n = 0; n <= gb_nmax; ++n) {
          std::uint64_t x = 0;
          check(el_series_coeff(counts.get(), n, &x), "coeff");
          if (x != 0) rows.push_back(ordered_json{{"n", n}, {"count", x}});
          csv += std::to_string(n) + "," + std::to_string(x) + "\n";
        }
        rep.j["counts"] = rows;
      }
      rep.finish(gb_opts.format, gb_opts.output, csv);
      return exit_code;
    }

    if (cmd_mel->parsed()) {
      report rep("mellin");
      table_handle table;
      check(el_sieve(mel_opts.limit, table.out()), "sieve");
      double residual = 0.0;
      el_complex series_side{}, integral_side{};
      int quad_ok = 0;
      check(el_mellin_residual(table.get(), parse_label(mel_label), mel_k, mel_opts.s(),
                               mel_tol, mel_depth, &residual, &series_side, &integral_side,
                               &quad_ok),
            "mellin");
      rep.j["params"] = ordered_json{{"k", mel_k},
                                     {"label", mel_label},
                                     {"s", complex_json(mel_opts.s())},
                                     {"limit", mel_opts.limit},
                                     {"quad_tol", mel_tol}};
      rep.j["series_side"] = complex_json(series_side);
      rep.j["integral_side"] = complex_json(integral_side);
      rep.j["residual"] = residual;
      rep.j["quad_converged"] = quad_ok != 0;
      rep.finish(mel_opts.format, mel_opts.output, "");
      return 0;
    }

    if (cmd_scan->parsed()) {
      report rep("scan");
      table_handle table;
      if (scan_seq != "naturals" && scan_seq.rfind("list:", 0) != 0)
        check(el_sieve(scan_opts.limit, table.out()), "sieve");
      ordered_json params;
      common_opts seq_opts = scan_opts;
      // The sequence must cover the tallest ladder rung.
      std::vector<std::uint64_t> ladder;
      {
        std::stringstream in(scan_ladder);
        std::string item;
        while (std::getline(in, item, ',')) ladder.push_back(std::stoull(item));
      }
      for (const auto rung : ladder) seq_opts.max_terms = std::max(seq_opts.max_terms, rung);
      sequence_handle seq;
      build_sequence(scan_seq, table, seq_opts, seq, params);
      factor_handle factor;
      build_factor(scan_factor, 0, factor, params);
      const auto sigmas = parse_double_list(scan_sigmas);
      scan_handle scan;
      check(el_convergence_scan(seq.get(), factor.get(), sigmas.data(), sigmas.size(),
                                ladder.data(), ladder.size(), scan.out()),
            "scan");
      size_t rows = 0;
      check(el_scan_size(scan.get(), &rows), "scan size");
      params["sigma_grid"] = scan_sigmas;
      params["ladder"] = scan_ladder;
      rep.j["params"] = params;
      ordered_json jrows = ordered_json::array();
      std::string csv = "sigma, terms, abs_delta, rate, flag\n";
      for (size_t i = 0; i < rows; ++i) {
        double sigma = 0, abs_delta = 0, rate = 0;
        std::uint64_t terms = 0;
        int flag = 0;
        check(el_scan_row(scan.get(), i, &sigma, &terms, &abs_delta, &rate, &flag), "row");
        const std::string flag_text = flag ? "decay" : "no-convergence";
        jrows.push_back(ordered_json{{"sigma", sigma},
                                     {"terms", terms},
                                     {"abs_delta", abs_delta},
                                     {"rate", rate},
                                     {"flag", flag_text}});
        csv += csv_num(sigma) + ", " + std::to_string(terms) + ", " + csv_num(abs_delta) +
               ", " + csv_num(rate) + ", " + flag_text + "\n";
      }
      rep.j["rows"] = jrows;
      rep.finish(scan_opts.format, scan_opts.output, csv);
      return 0;
    }

    std::cerr << "error: no command\n";
    return 2;
  } catch (const cli_abort& abort) {
    return abort.code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

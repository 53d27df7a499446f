#include <CLI11.hpp>
#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "rfh/expansion.hpp"
#include "rfh/integral.hpp"
#include "rfh/parallel.hpp"
#include "rfh/report.hpp"
#include "rfh/rng.hpp"
#include "rfh/stable.hpp"
#include "rfh/stats.hpp"
#include "rfh/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitAssertionFailed = 1;
constexpr int kExitUsage = 2;

void write_file(const std::string& path, const std::string& content) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw std::runtime_error("cannot open output file: " + path);
  os << content;
}

double default_truncation(const rfh::TestFunction& f) {
  return std::max(6.0, f.support_hint);
}

struct CommonFlags {
  std::string f_name = "gaussian";
  double alpha = 2.0;
  double T = 0.0;  // 0 = use the function's support hint (min 6)
  double h = 1e-3;
  std::uint64_t seed = rfh::kDefaultSeed;
  std::string out;
  bool json = false;
};

void add_common(CLI::App* cmd, CommonFlags& c, const std::string& default_out) {
  cmd->add_option("--f", c.f_name,
                  "test function: gaussian, t_gaussian, cauchy_kernel, box01, "
                  "h3_gauss, hermite3, zero")
      ->default_val(c.f_name);
  cmd->add_option("--alpha", c.alpha, "stability index in (1, 2]")
      ->default_val(c.alpha);
  cmd->add_option("--T", c.T, "truncation half-width (0 = support hint)");
  cmd->add_option("--step", c.h, "grid step h")->default_val(c.h);
  cmd->add_option("--seed", c.seed, "master seed")->default_val(c.seed);
  cmd->add_option("--out", c.out, "output file")->default_val(default_out);
}

void add_json(CLI::App* cmd, CommonFlags& c) {
  cmd->add_flag("--json", c.json, "emit JSON instead of CSV");
}

int run_path(const CommonFlags& c) {
  const double T = c.T > 0.0 ? c.T : default_truncation(rfh::test_function(c.f_name));
  const auto path = rfh::simulate_path(rfh::uniform_grid(T, c.h), c.alpha, c.seed);
  std::ofstream os(c.out, std::ios::binary);
  if (!os) throw std::runtime_error("cannot open output file: " + c.out);
  rfh::write_path_csv(path, os);
  std::cout << "wrote " << path.increments.size() << " increments to " << c.out
            << "\n";
  return kExitOk;
}

int run_integrate(const CommonFlags& c, int trials) {
  const auto& f = rfh::test_function(c.f_name);
  const double T = c.T > 0.0 ? c.T : default_truncation(f);
  const auto grid = rfh::uniform_grid(T, c.h);
  std::vector<double> by_sum(static_cast<std::size_t>(trials));
  std::vector<double> by_law(static_cast<std::size_t>(trials));
  rfh::parallel_for(static_cast<std::size_t>(trials), 0, [&](std::size_t k) {
    const auto path =
        rfh::simulate_path(grid, c.alpha, rfh::derive_seed(c.seed, 2 * k));
    by_sum[k] = rfh::riemann_stieltjes(f.eval, path);
    rfh::SplitMix64 rng(rfh::derive_seed(c.seed, 2 * k + 1));
    by_law[k] = rfh::exact_integral_sampler(f, c.alpha, rng);
  });
  const double d = rfh::ks_statistic(by_sum, by_law);
  const double p = rfh::ks_p_value(d, by_sum.size(), by_law.size());
  const bool pass = p > 0.01;

  std::string content;
  if (c.json) {
    content = std::string("{\n  \"f\": \"") + c.f_name + "\",\n  \"alpha\": " +
              rfh::format_double(c.alpha) + ",\n  \"trials\": " +
              std::to_string(trials) + ",\n  \"truncation\": " +
              rfh::format_double(T) + ",\n  \"step\": " + rfh::format_double(c.h) +
              ",\n  \"seed\": " + std::to_string(c.seed) + ",\n  \"ks_stat\": " +
              rfh::format_double(d) + ",\n  \"ks_p\": " + rfh::format_double(p) +
              ",\n  \"assertions\": [{\"name\": \"ks_p > 0.01\", \"pass\": " +
              (pass ? "true" : "false") + "}]\n}\n";
  } else {
    content = "# f=" + c.f_name + "\n# alpha=" + rfh::format_double(c.alpha) +
              "\n# trials=" + std::to_string(trials) + "\n# truncation=" +
              rfh::format_double(T) + "\n# step=" + rfh::format_double(c.h) +
              "\n# master_seed=" + std::to_string(c.seed) +
              "\nquantity,value\nks_stat," + rfh::format_double(d) + "\nks_p," +
              rfh::format_double(p) + "\npass," + (pass ? "1" : "0") + "\n";
  }
  write_file(c.out, content);
  std::cout << "KS statistic " << rfh::format_double(d) << ", p-value "
            << rfh::format_double(p) << (pass ? " (> 0.01)" : " (<= 0.01)")
            << "\n";
  if (!pass) {
    std::cerr << "distribution mismatch: ks_p=" << rfh::format_double(p)
              << " <= 0.01 for f=" << c.f_name << " alpha="
              << rfh::format_double(c.alpha) << "\n";
    return kExitAssertionFailed;
  }
  return kExitOk;
}

int run_coeffs(const CommonFlags& c, int order, const std::string& convention,
               int quad_order) {
  const auto conv = convention == "half" ? rfh::WeightConvention::HalfWeight
                                         : rfh::WeightConvention::PaperLiteral;
  const rfh::HermiteBasis basis(std::max(order, 200), conv);
  const int m = quad_order > 0 ? quad_order : std::max(64, order + 16);
  const auto coeffs = rfh::coefficients(rfh::test_function(c.f_name), order,
                                        basis, rfh::gauss_hermite_rule(m));
  const std::string meta = "# quad_order=" + std::to_string(m) + "\n";
  write_file(c.out, rfh::coefficients_csv(coeffs, c.f_name, conv, meta));
  std::cout << "wrote " << coeffs.size() << " coefficients to " << c.out << "\n";
  return kExitOk;
}

int run_expansion(const CommonFlags& c, int order, const std::string& eigen,
                  int quad_order, const std::vector<double>& trace_y,
                  const std::string& trace_out) {
  const auto& f = rfh::test_function(c.f_name);
  const auto mode = rfh::eigen_mode_from_string(eigen);
  const rfh::HermiteBasis basis(std::max(order, 200));
  const int m = quad_order > 0 ? quad_order : std::max(64, order + 16);
  const double T = c.T > 0.0 ? c.T : default_truncation(f);
  const auto path = rfh::simulate_path(rfh::uniform_grid(T, c.h), c.alpha, c.seed);
  const auto exp = rfh::build_expansion(f, order, basis,
                                        rfh::gauss_hermite_rule(m), path, mode);
  const std::string meta = "# alpha=" + rfh::format_double(c.alpha) +
                           "\n# truncation=" + rfh::format_double(T) +
                           "\n# step=" + rfh::format_double(c.h) +
                           "\n# quad_order=" + std::to_string(m) + "\n";
  write_file(c.out, rfh::expansion_csv(exp, c.f_name, meta));
  std::cout << "wrote expansion of order " << order << " to " << c.out << "\n";
  if (!trace_y.empty()) {
    std::vector<int> orders(static_cast<std::size_t>(order) + 1);
    for (int n = 0; n <= order; ++n) orders[static_cast<std::size_t>(n)] = n;
    write_file(trace_out, rfh::trace_csv(exp, orders, trace_y));
    std::cout << "wrote partial-sum trace to " << trace_out << "\n";
  }
  return kExitOk;
}

int run_theorem34(const CommonFlags& c, std::vector<double> truncations,
                  int trials) {
  const auto& f = rfh::test_function(c.f_name);
  rfh::ExperimentConfig cfg;
  cfg.trials = trials;
  cfg.step = c.h;
  cfg.alpha = c.alpha;
  cfg.master_seed = c.seed;
  cfg.truncation = truncations.back();
  const auto report = rfh::theorem34_experiment(f, truncations, cfg);
  write_file(c.out, c.json ? rfh::to_json(report) : rfh::to_csv(report));
  for (const auto& r : report.rows)
    std::cout << "E|Y_" << rfh::format_double(r.t_lo) << " - Y_"
              << rfh::format_double(r.t_hi) << "| = "
              << rfh::format_double(r.mean_abs) << " +- "
              << rfh::format_double(r.mean_ci) << "\n";
  std::cout << "wrote " << report.rows.size() << " rows to " << c.out << "\n";
  return kExitOk;
}

int run_theorem35(const CommonFlags& c, const std::vector<int>& orders,
                  const std::vector<double>& ys, int trials, double epsilon,
                  double eps_prime, const std::string& eigen, int reference) {
  const auto& f = rfh::test_function(c.f_name);
  rfh::ExperimentConfig cfg;
  cfg.trials = trials;
  cfg.epsilon = epsilon;
  cfg.eps_prime = eps_prime > 0.0 ? eps_prime : epsilon;
  cfg.orders = orders;
  cfg.y_grid = ys;
  cfg.truncation = c.T > 0.0 ? c.T : std::max(6.0, f.support_hint);
  cfg.step = c.h;
  cfg.alpha = c.alpha;
  cfg.master_seed = c.seed;
  cfg.reference_order = reference;
  const auto report =
      rfh::theorem35_experiment(f, cfg, rfh::eigen_mode_from_string(eigen));
  write_file(c.out, c.json ? rfh::to_json(report) : rfh::to_csv(report));
  std::cout << "wrote " << report.rows.size() << " rows to " << c.out << "\n";
  return kExitOk;
}

int run_bounds(const CommonFlags& c, const std::vector<double>& epsilons,
               double C, int trials) {
  const auto& f = rfh::test_function(c.f_name);
  rfh::ExperimentConfig cfg;
  cfg.trials = trials;
  cfg.C = C;
  cfg.epsilon = epsilons.front();
  cfg.eps_prime = epsilons.front();
  cfg.truncation = c.T > 0.0 ? c.T : 6.0;
  cfg.step = c.h;
  cfg.alpha = c.alpha;
  cfg.master_seed = c.seed;
  const auto report = rfh::lemma_bound_experiment(f, c.alpha, cfg, epsilons);
  write_file(c.out, c.json ? rfh::to_json(report) : rfh::to_csv(report));
  bool all_pass = true;
  for (const auto& r : report.rows) {
    if (!r.pass) {
      all_pass = false;
      std::cerr << "bound violated: lemma " << r.lemma << " " << r.quantity
                << " empirical=" << rfh::format_double(r.empirical)
                << " ci=" << rfh::format_double(r.ci)
                << " bound=" << rfh::format_double(r.bound) << "\n";
    }
  }
  std::cout << "wrote " << report.rows.size() << " rows to " << c.out << "\n";
  return all_pass ? kExitOk : kExitAssertionFailed;
}

int run_projection(const CommonFlags& c, const std::vector<int>& orders,
                   int quad_order) {
  const auto& f = rfh::test_function(c.f_name);
  const int n_max = *std::max_element(orders.begin(), orders.end());
  const rfh::HermiteBasis basis(std::max(n_max, 200));
  const int m = quad_order > 0 ? quad_order : std::max(64, n_max + 16);
  const auto rule = rfh::gauss_hermite_rule(m);
  std::string content = "# f=" + c.f_name + "\n# quad_order=" +
                        std::to_string(m) + "\nn,error\n";
  for (int n : orders)
    content += std::to_string(n) + "," +
               rfh::format_double(rfh::projection_error(f, n, basis, rule)) +
               "\n";
  write_file(c.out, content);
  std::cout << "wrote " << orders.size() << " rows to " << c.out << "\n";
  return kExitOk;
}

int run_rft(const CommonFlags& c, int order, int quad_order) {
  const auto& f = rfh::test_function(c.f_name);
  const rfh::HermiteBasis basis(std::max(order, 200));
  const int m = quad_order > 0 ? quad_order : std::max(64, order + 16);
  std::vector<double> rand_seq(static_cast<std::size_t>(order) + 1);
  rfh::SplitMix64 rng(c.seed);
  for (double& u : rand_seq) u = rng.next_unit();
  const auto rft = rfh::randomized_rft(f, order, rand_seq, basis,
                                       rfh::gauss_hermite_rule(m));

  double max_err = 0.0;
  for (double t = -3.0; t <= 3.0; t += 0.25)
    max_err = std::max(max_err, std::abs(rft.round_trip(t) - rft.plain(t)));
  std::vector<std::complex<double>> weighted(rft.coeffs.size());
  double plain_energy = 0.0;
  for (std::size_t n = 0; n < rft.coeffs.size(); ++n) {
    weighted[n] = rft.coeffs[n] * rft.eigenvalues[n];
    plain_energy += rft.coeffs[n] * rft.coeffs[n];
  }
  const double energy_err =
      std::abs(rfh::coefficient_energy(weighted) - plain_energy);

  std::string content = "# f=" + c.f_name + "\n# order=" +
                        std::to_string(order) + "\n# seed=" +
                        std::to_string(c.seed) + "\n# roundtrip_max_err=" +
                        rfh::format_double(max_err) + "\n# energy_abs_err=" +
                        rfh::format_double(energy_err) +
                        "\nn,c_n,rand_u,lambda_re,lambda_im\n";
  for (std::size_t n = 0; n < rft.coeffs.size(); ++n)
    content += std::to_string(n) + "," + rfh::format_double(rft.coeffs[n]) +
               "," + rfh::format_double(rand_seq[n]) + "," +
               rfh::format_double(rft.eigenvalues[n].real()) + "," +
               rfh::format_double(rft.eigenvalues[n].imag()) + "\n";
  write_file(c.out, content);
  std::cout << "round trip max error " << rfh::format_double(max_err)
            << ", coefficient energy error " << rfh::format_double(energy_err)
            << "\n";
  const bool pass = max_err <= 1e-12 && energy_err <= 1e-12 * plain_energy;
  if (!pass) {
    std::cerr << "randomized transform round trip exceeded tolerance\n";
    return kExitAssertionFailed;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "rfh - stochastic Fourier-Hermite series laboratory.\n"
      "Simulates symmetric alpha-stable paths, stochastic integrals, and the\n"
      "randomized Hermite-Gaussian transforms built on them; every run is a\n"
      "pure function of its flags and seed."};
  app.require_subcommand(1);

  CommonFlags c_path, c_int, c_coef, c_exp, c_t34, c_t35, c_bnd, c_proj, c_rft;

  auto* cmd_path = app.add_subcommand("path", "simulate and dump one sample path");
  add_common(cmd_path, c_path, "path.csv");

  auto* cmd_int = app.add_subcommand(
      "integrate", "stochastic integral vs its exact law (two-sample KS)");
  int int_trials = 5000;
  add_common(cmd_int, c_int, "integrate.csv");
  add_json(cmd_int, c_int);
  cmd_int->add_option("--trials", int_trials)->default_val(int_trials);

  auto* cmd_coef = app.add_subcommand("coeffs", "dump Fourier-Hermite coefficients");
  int coef_order = 32, coef_quad = 0;
  std::string coef_conv = "paper";
  add_common(cmd_coef, c_coef, "coeffs.csv");
  cmd_coef->add_option("--order", coef_order)->default_val(coef_order);
  cmd_coef->add_option("--convention", coef_conv, "paper|half")
      ->default_val(coef_conv);
  cmd_coef->add_option("--quad-order", coef_quad, "0 = order + 16, min 64");

  auto* cmd_exp = app.add_subcommand(
      "expansion", "dump c_n, A_n, lambda_n for one path");
  int exp_order = 32, exp_quad = 0;
  std::string exp_eigen = "none", exp_trace_out = "trace.csv";
  std::vector<double> exp_trace_y;
  add_common(cmd_exp, c_exp, "expansion.csv");
  cmd_exp->add_option("--order", exp_order)->default_val(exp_order);
  cmd_exp->add_option("--eigen", exp_eigen, "none|paper|random")
      ->default_val(exp_eigen);
  cmd_exp->add_option("--quad-order", exp_quad);
  cmd_exp->add_option("--trace-y", exp_trace_y, "y values for a partial-sum trace")
      ->delimiter(',');
  cmd_exp->add_option("--trace-out", exp_trace_out)->default_val(exp_trace_out);

  auto* cmd_t34 = app.add_subcommand(
      "theorem34", "Cauchy-in-mean truncation experiment E|Y_T - Y_T'|");
  std::vector<double> t34_truncs = {1, 2, 3, 4, 5, 6};
  int t34_trials = 2000;
  add_common(cmd_t34, c_t34, "theorem34.csv");
  add_json(cmd_t34, c_t34);
  cmd_t34->add_option("--truncations", t34_truncs)->delimiter(',');
  cmd_t34->add_option("--trials", t34_trials)->default_val(t34_trials);

  auto* cmd_t35 = app.add_subcommand(
      "theorem35", "partial sums vs reference stochastic integral");
  std::vector<int> t35_orders = {0, 2, 4, 8, 16, 32};
  std::vector<double> t35_y = {-2, -1, -0.5, 0, 0.5, 1, 2};
  int t35_trials = 2000, t35_ref = 128;
  double t35_eps = 0.1, t35_eps_prime = 0.0;
  std::string t35_eigen = "none";
  add_common(cmd_t35, c_t35, "theorem35.csv");
  add_json(cmd_t35, c_t35);
  cmd_t35->add_option("--orders", t35_orders)->delimiter(',');
  cmd_t35->add_option("--y", t35_y)->delimiter(',');
  cmd_t35->add_option("--trials", t35_trials)->default_val(t35_trials);
  cmd_t35->add_option("--epsilon", t35_eps)->default_val(t35_eps);
  cmd_t35->add_option("--eps-prime", t35_eps_prime, "0 = use epsilon");
  cmd_t35->add_option("--eigen", t35_eigen, "none|paper|random")
      ->default_val(t35_eigen);
  cmd_t35->add_option("--reference-order", t35_ref)->default_val(t35_ref);

  auto* cmd_bnd = app.add_subcommand(
      "bounds", "empirical moments and tails vs the lemma bounds");
  std::vector<double> bnd_eps = {0.5, 1, 2, 3};
  double bnd_C = 1.0;
  int bnd_trials = 10000;
  add_common(cmd_bnd, c_bnd, "bounds.csv");
  add_json(cmd_bnd, c_bnd);
  cmd_bnd->add_option("--epsilon", bnd_eps)->delimiter(',');
  cmd_bnd->add_option("--C", bnd_C, "bound constant")->default_val(bnd_C);
  cmd_bnd->add_option("--trials", bnd_trials)->default_val(bnd_trials);

  auto* cmd_proj = app.add_subcommand(
      "projection", "weighted-L2 projection error curve");
  std::vector<int> proj_orders = {0, 1, 2, 4, 8, 16, 32, 64};
  int proj_quad = 0;
  add_common(cmd_proj, c_proj, "projection.csv");
  cmd_proj->add_option("--orders", proj_orders)->delimiter(',');
  cmd_proj->add_option("--quad-order", proj_quad);

  auto* cmd_rft = app.add_subcommand(
      "rft", "randomized transform round trip and energy check");
  int rft_order = 32, rft_quad = 0;
  add_common(cmd_rft, c_rft, "rft.csv");
  cmd_rft->add_option("--order", rft_order)->default_val(rft_order);
  cmd_rft->add_option("--quad-order", rft_quad);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (cmd_path->parsed()) return run_path(c_path);
    if (cmd_int->parsed()) return run_integrate(c_int, int_trials);
    if (cmd_coef->parsed())
      return run_coeffs(c_coef, coef_order, coef_conv, coef_quad);
    if (cmd_exp->parsed())
      return run_expansion(c_exp, exp_order, exp_eigen, exp_quad, exp_trace_y,
                           exp_trace_out);
    if (cmd_t34->parsed()) return run_theorem34(c_t34, t34_truncs, t34_trials);
    if (cmd_t35->parsed())
      return run_theorem35(c_t35, t35_orders, t35_y, t35_trials, t35_eps,
                           t35_eps_prime, t35_eigen, t35_ref);
    if (cmd_bnd->parsed()) return run_bounds(c_bnd, bnd_eps, bnd_C, bnd_trials);
    if (cmd_proj->parsed()) return run_projection(c_proj, proj_orders, proj_quad);
    if (cmd_rft->parsed()) return run_rft(c_rft, rft_order, rft_quad);
  } catch (const std::invalid_argument& e) {
    std::cerr << "argument error: " << e.what() << "\n"
              << "run with --help for usage\n";
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "argument error: " << e.what() << "\n"
              << "run with --help for usage\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitAssertionFailed;
  }
  return kExitUsage;
}

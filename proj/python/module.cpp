#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <algorithm>

#include "rfh/expansion.hpp"
#include "rfh/hermite.hpp"
#include "rfh/integral.hpp"
#include "rfh/report.hpp"
#include "rfh/rng.hpp"
#include "rfh/stable.hpp"
#include "rfh/stats.hpp"
#include "rfh/verify.hpp"

namespace py = pybind11;
using namespace pybind11::literals;

namespace {

rfh::WeightConvention convention_from(const std::string& s) {
  if (s == "paper") return rfh::WeightConvention::PaperLiteral;
  if (s == "half") return rfh::WeightConvention::HalfWeight;
  throw std::invalid_argument("convention must be 'paper' or 'half'");
}

rfh::ExperimentConfig config_from_kwargs(int trials, double epsilon,
                                         double eps_prime, double C,
                                         std::vector<int> orders,
                                         std::vector<double> y_grid,
                                         double truncation, double step,
                                         double alpha, std::uint64_t seed,
                                         int reference_order) {
  rfh::ExperimentConfig cfg;
  cfg.trials = trials;
  cfg.epsilon = epsilon;
  cfg.eps_prime = eps_prime > 0.0 ? eps_prime : epsilon;
  cfg.C = C;
  cfg.orders = std::move(orders);
  cfg.y_grid = std::move(y_grid);
  cfg.truncation = truncation;
  cfg.step = step;
  cfg.alpha = alpha;
  cfg.master_seed = seed;
  cfg.reference_order = reference_order;
  return cfg;
}

}  // namespace

PYBIND11_MODULE(rfhlab, m) {
  m.doc() =
      "Stochastic Fourier-Hermite laboratory: symmetric alpha-stable paths, "
      "stochastic integrals, Hermite-Gaussian expansions and the randomized "
      "transforms built on them.";

  m.attr("DEFAULT_SEED") = rfh::kDefaultSeed;

  // hermite ------------------------------------------------------------
  m.def("hermite_poly", &rfh::hermite_poly, "n"_a, "t"_a,
        "Physicists' Hermite polynomial H_n(t).");
  m.def("hermite_normalized", &rfh::hermite_normalized, "n"_a, "t"_a,
        "H_n(t) / sqrt(2^n sqrt(pi) n!).");
  m.def(
      "phi",
      [](int n, double t, const std::string& convention) {
        const rfh::HermiteBasis basis(std::max(n, 200),
                                      convention_from(convention));
        return rfh::phi(basis, n, t);
      },
      "n"_a, "t"_a, "convention"_a = "paper",
      "Hermite-Gaussian function phi_n(t).");
  m.def(
      "gauss_hermite_rule",
      [](int m_) {
        const auto rule = rfh::gauss_hermite_rule(m_);
        return py::make_tuple(rule.nodes, rule.weights);
      },
      "m"_a, "Nodes and weights integrating g(t) e^{-t^2} exactly for "
             "polynomials of degree <= 2m-1.");

  // stable -------------------------------------------------------------
  py::class_<rfh::SamplePath>(m, "SamplePath")
      .def_readonly("grid", &rfh::SamplePath::grid)
      .def_readonly("increments", &rfh::SamplePath::increments)
      .def_readonly("alpha", &rfh::SamplePath::alpha)
      .def_readonly("seed", &rfh::SamplePath::seed);
  m.def("uniform_grid", &rfh::uniform_grid, "T"_a, "h"_a);
  m.def("simulate_path", &rfh::simulate_path, "grid"_a, "alpha"_a, "seed"_a);
  m.def(
      "sample_stable",
      [](double alpha, double scale, std::uint64_t seed, int count) {
        rfh::SplitMix64 rng(seed);
        std::vector<double> out(static_cast<std::size_t>(count));
        for (double& v : out)
          v = rfh::sample_stable(rfh::StableLaw(alpha, scale), rng);
        return out;
      },
      "alpha"_a, "scale"_a, "seed"_a, "count"_a = 1,
      "Draws with characteristic function exp(-scale^alpha |u|^alpha).");

  // integral -----------------------------------------------------------
  m.def("test_function_names", &rfh::test_function_names);
  m.def(
      "riemann_stieltjes",
      [](const std::string& f, const rfh::SamplePath& path) {
        return rfh::riemann_stieltjes(rfh::test_function(f).eval, path);
      },
      "f"_a, "path"_a);
  m.def(
      "exact_integral_draws",
      [](const std::string& f, double alpha, std::uint64_t seed, int count) {
        rfh::SplitMix64 rng(seed);
        std::vector<double> out(static_cast<std::size_t>(count));
        for (double& v : out)
          v = rfh::exact_integral_sampler(rfh::test_function(f), alpha, rng);
        return out;
      },
      "f"_a, "alpha"_a, "seed"_a, "count"_a = 1);
  m.def(
      "integrate_real_line",
      [](const std::string& f, double alpha, double T, double h,
         std::uint64_t seed) {
        return rfh::integrate_real_line(rfh::test_function(f), alpha, T, h, seed)
            .value;
      },
      "f"_a, "alpha"_a, "T"_a = 6.0, "h"_a = 1e-3,
      "seed"_a = rfh::kDefaultSeed);
  m.def(
      "abs_power_integral",
      [](const std::string& f, double alpha) {
        return rfh::abs_power_integral(rfh::test_function(f), alpha);
      },
      "f"_a, "alpha"_a);
  m.def(
      "lemma1_bound",
      [](const std::string& f, double alpha, double a, double b) {
        return rfh::lemma1_bound(rfh::test_function(f), alpha, a, b);
      },
      "f"_a, "alpha"_a, "a"_a, "b"_a);
  m.def(
      "tail_bound_finite",
      [](const std::string& f, double alpha, double a, double b,
         double eps_prime, double C) {
        return rfh::tail_bound_finite(rfh::test_function(f), alpha, a, b,
                                      eps_prime, C);
      },
      "f"_a, "alpha"_a, "a"_a, "b"_a, "eps_prime"_a, "C"_a = 1.0);
  m.def(
      "tail_bound_real_line",
      [](const std::string& f, double eps_prime, double C) {
        return rfh::tail_bound_real_line(rfh::test_function(f), eps_prime, C);
      },
      "f"_a, "eps_prime"_a, "C"_a = 1.0);

  // expansion ----------------------------------------------------------
  py::class_<rfh::RfhExpansion>(m, "RfhExpansion")
      .def_readonly("order", &rfh::RfhExpansion::order)
      .def_readonly("coeffs", &rfh::RfhExpansion::coeffs)
      .def_readonly("random_coeffs", &rfh::RfhExpansion::random_coeffs)
      .def_readonly("eigenvalues", &rfh::RfhExpansion::eigenvalues)
      .def_readonly("path_seed", &rfh::RfhExpansion::path_seed)
      .def("partial_sum",
           [](const rfh::RfhExpansion& exp, double y, int n) {
             return rfh::partial_sum(exp, y, n);
           })
      .def("kernel",
           [](const rfh::RfhExpansion& exp, double y, double t, int n) {
             return rfh::kernel_fn(exp, y, t, n);
           });
  m.def(
      "coefficients",
      [](const std::string& f, int order, const std::string& convention,
         int quad_order) {
        const rfh::HermiteBasis basis(std::max(order, 200),
                                      convention_from(convention));
        const int mq = quad_order > 0 ? quad_order : std::max(64, order + 16);
        return rfh::coefficients(rfh::test_function(f), order, basis,
                                 rfh::gauss_hermite_rule(mq));
      },
      "f"_a, "order"_a, "convention"_a = "paper", "quad_order"_a = 0);
  m.def(
      "build_expansion",
      [](const std::string& f, int order, const rfh::SamplePath& path,
         const std::string& eigen, const std::string& convention) {
        const rfh::HermiteBasis basis(std::max(order, 200),
                                      convention_from(convention));
        const auto rule = rfh::gauss_hermite_rule(std::max(64, order + 16));
        return rfh::build_expansion(rfh::test_function(f), order, basis, rule,
                                    path, rfh::eigen_mode_from_string(eigen));
      },
      "f"_a, "order"_a, "path"_a, "eigen"_a = "none", "convention"_a = "paper");
  m.def(
      "target_integral",
      [](const rfh::RfhExpansion& exp, double y, int n_kernel,
         const rfh::SamplePath& path) {
        return rfh::target_integral(exp, y, n_kernel, path);
      },
      "expansion"_a, "y"_a, "n_kernel"_a, "path"_a);
  m.def(
      "projection_error",
      [](const std::string& f, int n, int quad_order) {
        const rfh::HermiteBasis basis(std::max(n, 200));
        const int mq = quad_order > 0 ? quad_order : std::max(64, n + 16);
        return rfh::projection_error(rfh::test_function(f), n, basis,
                                     rfh::gauss_hermite_rule(mq));
      },
      "f"_a, "n"_a, "quad_order"_a = 0);
  m.def(
      "randomized_rft_roundtrip_error",
      [](const std::string& f, int order, std::uint64_t seed) {
        const rfh::HermiteBasis basis(std::max(order, 200));
        std::vector<double> rand_seq(static_cast<std::size_t>(order) + 1);
        rfh::SplitMix64 rng(seed);
        for (double& u : rand_seq) u = rng.next_unit();
        const auto rft = rfh::randomized_rft(rfh::test_function(f), order,
                                             rand_seq, basis);
        double max_err = 0.0;
        for (double t = -3.0; t <= 3.0; t += 0.25)
          max_err =
              std::max(max_err, std::abs(rft.round_trip(t) - rft.plain(t)));
        return max_err;
      },
      "f"_a, "order"_a, "seed"_a = rfh::kDefaultSeed);

  // verify -------------------------------------------------------------
  m.def(
      "theorem34_experiment",
      [](const std::string& f, std::vector<double> truncations, int trials,
         double h, double alpha, std::uint64_t seed) {
        rfh::ExperimentConfig cfg;
        cfg.trials = trials;
        cfg.step = h;
        cfg.alpha = alpha;
        cfg.master_seed = seed;
        cfg.truncation = truncations.back();
        const auto report = rfh::theorem34_experiment(
            rfh::test_function(f), truncations, cfg);
        py::list rows;
        for (const auto& r : report.rows)
          rows.append(py::dict("T_lo"_a = r.t_lo, "T_hi"_a = r.t_hi,
                               "mean_abs_diff"_a = r.mean_abs,
                               "ci_halfwidth"_a = r.mean_ci));
        return rows;
      },
      "f"_a, "truncations"_a, "trials"_a = 2000, "h"_a = 1e-3, "alpha"_a = 2.0,
      "seed"_a = rfh::kDefaultSeed);
  m.def(
      "theorem35_experiment",
      [](const std::string& f, const std::string& eigen, int trials,
         double epsilon, std::vector<int> orders, std::vector<double> y_grid,
         double truncation, double step, std::uint64_t seed,
         int reference_order) {
        const auto cfg = config_from_kwargs(trials, epsilon, 0.0, 1.0,
                                            std::move(orders),
                                            std::move(y_grid), truncation,
                                            step, 2.0, seed, reference_order);
        const auto report = rfh::theorem35_experiment(
            rfh::test_function(f), cfg, rfh::eigen_mode_from_string(eigen));
        py::list rows;
        for (const auto& r : report.rows)
          rows.append(py::dict(
              "n"_a = r.n, "y"_a = r.y, "prob_exceed"_a = r.prob_exceed,
              "prob_ci_halfwidth"_a = r.prob_ci,
              "mean_abs_err"_a = r.mean_abs_err,
              "mean_ci_halfwidth"_a = r.mean_ci));
        return rows;
      },
      "f"_a, "eigen"_a = "none", "trials"_a = 2000, "epsilon"_a = 0.1,
      "orders"_a = std::vector<int>{0, 2, 4, 8, 16, 32},
      "y_grid"_a = std::vector<double>{-2, -1, -0.5, 0, 0.5, 1, 2},
      "truncation"_a = 6.0, "step"_a = 1e-3, "seed"_a = rfh::kDefaultSeed,
      "reference_order"_a = 128);
  m.def(
      "lemma_bound_experiment",
      [](const std::string& f, double alpha, std::vector<double> epsilons,
         int trials, double truncation, double step, std::uint64_t seed,
         double C) {
        rfh::ExperimentConfig cfg;
        cfg.trials = trials;
        cfg.C = C;
        cfg.epsilon = epsilons.front();
        cfg.eps_prime = epsilons.front();
        cfg.truncation = truncation;
        cfg.step = step;
        cfg.alpha = alpha;
        cfg.master_seed = seed;
        const auto report = rfh::lemma_bound_experiment(rfh::test_function(f),
                                                        alpha, cfg, epsilons);
        py::list rows;
        for (const auto& r : report.rows)
          rows.append(py::dict("lemma"_a = r.lemma, "quantity"_a = r.quantity,
                               "epsilon"_a = r.epsilon,
                               "eps_prime"_a = r.eps_prime, "C"_a = r.C,
                               "empirical"_a = r.empirical,
                               "ci_halfwidth"_a = r.ci, "bound"_a = r.bound,
                               "pass"_a = r.pass));
        return rows;
      },
      "f"_a, "alpha"_a = 2.0, "epsilons"_a = std::vector<double>{0.5, 1, 2, 3},
      "trials"_a = 10000, "truncation"_a = 6.0, "step"_a = 1e-3,
      "seed"_a = rfh::kDefaultSeed, "C"_a = 1.0);

  // stats ---------------------------------------------------------------
  m.def("ks_statistic",
        py::overload_cast<std::vector<double>, std::vector<double>>(
            &rfh::ks_statistic),
        "a"_a, "b"_a);
  m.def("ks_p_value", &rfh::ks_p_value, "d"_a, "n"_a, "m"_a);
}

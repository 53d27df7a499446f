#include "rfh/verify.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>

#include "rfh/parallel.hpp"
#include "rfh/stats.hpp"

namespace rfh {

void ExperimentConfig::validate() const {
  if (trials < 1) throw std::invalid_argument("config: trials must be >= 1");
  if (!(epsilon > 0.0)) throw std::invalid_argument("config: epsilon must be > 0");
  if (!(eps_prime > 0.0))
    throw std::invalid_argument("config: eps_prime must be > 0");
  if (!(C > 0.0)) throw std::invalid_argument("config: C must be > 0");
  if (orders.empty()) throw std::invalid_argument("config: orders empty");
  for (std::size_t i = 0; i + 1 < orders.size(); ++i)
    if (orders[i] >= orders[i + 1])
      throw std::invalid_argument("config: orders must be strictly increasing");
  if (orders.front() < 0) throw std::invalid_argument("config: negative order");
  // equality allowed: the degenerate self-comparison run is a useful control
  if (reference_order < orders.back())
    throw std::invalid_argument(
        "config: reference_order must be >= the largest order");
  if (y_grid.empty()) throw std::invalid_argument("config: y_grid empty");
  if (!(truncation > 0.0) || !(step > 0.0) || step > truncation)
    throw std::invalid_argument("config: need 0 < step <= truncation");
  if (!(alpha > 1.0) || !(alpha <= 2.0))
    throw std::invalid_argument("config: alpha must be in (1, 2]");
}

namespace {

std::runtime_error trial_failure(std::uint64_t sub_seed,
                                 const std::exception& e) {
  return std::runtime_error("trial with sub-seed " + std::to_string(sub_seed) +
                            " failed: " + e.what());
}

}  // namespace

std::pair<double, double> estimate_prob_exceed(const PairSampler& sampler,
                                               double epsilon, int trials,
                                               std::uint64_t master_seed,
                                               int workers) {
  if (trials < 100)
    throw std::invalid_argument("estimate_prob_exceed: trials must be >= 100");
  if (!(epsilon > 0.0))
    throw std::invalid_argument("estimate_prob_exceed: epsilon must be > 0");
  std::vector<char> exceed(static_cast<std::size_t>(trials), 0);
  parallel_for(static_cast<std::size_t>(trials), workers, [&](std::size_t k) {
    const std::uint64_t sub = derive_seed(master_seed, k);
    try {
      const auto [a, b] = sampler(sub);
      exceed[k] = std::abs(a - b) > epsilon ? 1 : 0;
    } catch (const std::exception& e) {
      throw trial_failure(sub, e);
    }
  });
  int count = 0;
  for (char c : exceed) count += c;
  return {static_cast<double>(count) / trials,
          wilson_halfwidth(count, trials)};
}

std::pair<double, double> estimate_mean_error(const PairSampler& sampler,
                                              int trials,
                                              std::uint64_t master_seed,
                                              int workers) {
  if (trials < 100)
    throw std::invalid_argument("estimate_mean_error: trials must be >= 100");
  std::vector<double> diffs(static_cast<std::size_t>(trials), 0.0);
  parallel_for(static_cast<std::size_t>(trials), workers, [&](std::size_t k) {
    const std::uint64_t sub = derive_seed(master_seed, k);
    try {
      const auto [a, b] = sampler(sub);
      diffs[k] = std::abs(a - b);
    } catch (const std::exception& e) {
      throw trial_failure(sub, e);
    }
  });
  const auto ci = mean_ci(diffs);
  return {ci.mean, ci.halfwidth};
}

ConvergenceReport theorem35_experiment(const TestFunction& f,
                                       const ExperimentConfig& cfg,
                                       EigenMode mode, int workers) {
  cfg.validate();
  if (cfg.alpha != 2.0)
    throw std::invalid_argument("theorem35_experiment: requires alpha = 2");

  const int ref = cfg.reference_order;
  const HermiteBasis basis(std::max(ref, 200));
  const auto rule = gauss_hermite_rule(std::max(64, std::min(ref + 16, 256)));
  const auto coeffs = coefficients(f, ref, basis, rule);
  const auto grid = uniform_grid(cfg.truncation, cfg.step);
  const auto fixed_eigen = mode == EigenMode::Randomized
                               ? std::vector<std::complex<double>>{}
                               : eigenvalue_sequence(mode, ref);

  const std::size_t n_rows = cfg.orders.size() * cfg.y_grid.size();
  const auto trials = static_cast<std::size_t>(cfg.trials);
  // |S_n(y) - target(y)| per trial and row; folded in trial order below.
  std::vector<double> diffs(trials * n_rows, 0.0);

  parallel_for(trials, workers, [&](std::size_t t) {
    const std::uint64_t sub = derive_seed(cfg.master_seed, t);
    try {
      RfhExpansion exp;
      exp.order = ref;
      exp.coeffs = coeffs;
      exp.basis = basis;
      exp.eigen_mode = mode;
      exp.path_seed = sub;
      const auto path = simulate_path(grid, cfg.alpha, sub);
      exp.random_coeffs = random_coeffs(basis, ref, path);
      exp.eigenvalues = mode == EigenMode::Randomized
                            ? eigenvalue_sequence(mode, ref,
                                                  derive_seed(sub, 0xE16E))
                            : fixed_eigen;

      for (std::size_t yi = 0; yi < cfg.y_grid.size(); ++yi) {
        const double y = cfg.y_grid[yi];
        const std::complex<double> target =
            target_integral(exp, y, ref, path);
        for (std::size_t ni = 0; ni < cfg.orders.size(); ++ni) {
          const std::complex<double> s = partial_sum(exp, y, cfg.orders[ni]);
          diffs[t * n_rows + ni * cfg.y_grid.size() + yi] =
              std::abs(s - target);
        }
      }
    } catch (const std::exception& e) {
      throw trial_failure(sub, e);
    }
  });

  ConvergenceReport report;
  report.config = cfg;
  report.function_name = f.name;
  report.eigen_mode = mode;
  report.rows.reserve(n_rows);
  std::vector<double> column(trials);
  for (std::size_t ni = 0; ni < cfg.orders.size(); ++ni) {
    for (std::size_t yi = 0; yi < cfg.y_grid.size(); ++yi) {
      const std::size_t row = ni * cfg.y_grid.size() + yi;
      int count = 0;
      for (std::size_t t = 0; t < trials; ++t) {
        column[t] = diffs[t * n_rows + row];
        if (column[t] > cfg.epsilon) ++count;
      }
      const auto ci = mean_ci(column);
      report.rows.push_back({cfg.orders[ni], cfg.y_grid[yi],
                             static_cast<double>(count) / cfg.trials,
                             wilson_halfwidth(count, cfg.trials), ci.mean,
                             ci.halfwidth});
    }
  }
  return report;
}

CauchyReport theorem34_experiment(const TestFunction& f,
                                  std::span<const double> truncations,
                                  const ExperimentConfig& cfg, int workers) {
  cfg.validate();
  if (truncations.size() < 2)
    throw std::invalid_argument("theorem34_experiment: need >= 2 truncations");
  for (std::size_t i = 0; i + 1 < truncations.size(); ++i)
    if (truncations[i] > truncations[i + 1])
      throw std::invalid_argument(
          "theorem34_experiment: truncations must be non-decreasing");

  const std::size_t n_pairs = truncations.size() - 1;
  const auto trials = static_cast<std::size_t>(cfg.trials);
  std::vector<double> diffs(trials * n_pairs, 0.0);
  const std::vector<double> truncs(truncations.begin(), truncations.end());

  parallel_for(trials, workers, [&](std::size_t t) {
    const std::uint64_t sub = derive_seed(cfg.master_seed, t);
    try {
      const auto ys = nested_integrals(f, cfg.alpha, truncs, cfg.step, sub);
      for (std::size_t p = 0; p < n_pairs; ++p)
        diffs[t * n_pairs + p] = std::abs(ys[p + 1] - ys[p]);
    } catch (const std::exception& e) {
      throw trial_failure(sub, e);
    }
  });

  CauchyReport report;
  report.config = cfg;
  report.function_name = f.name;
  report.truncations = truncs;
  std::vector<double> column(trials);
  for (std::size_t p = 0; p < n_pairs; ++p) {
    for (std::size_t t = 0; t < trials; ++t) column[t] = diffs[t * n_pairs + p];
    const auto ci = mean_ci(column);
    report.rows.push_back({truncs[p], truncs[p + 1], ci.mean, ci.halfwidth});
  }
  return report;
}

BoundReport lemma_bound_experiment(const TestFunction& f, double alpha,
                                   const ExperimentConfig& cfg,
                                   std::span<const double> epsilons,
                                   int workers) {
  cfg.validate();
  if (!(alpha > 1.0) || !(alpha <= 2.0))
    throw std::invalid_argument("lemma_bound_experiment: alpha must be in (1, 2]");
  const double T = cfg.truncation;
  const auto grid = uniform_grid(T, cfg.step);
  const auto trials = static_cast<std::size_t>(cfg.trials);

  std::vector<double> values(trials, 0.0);
  parallel_for(trials, workers, [&](std::size_t t) {
    const std::uint64_t sub = derive_seed(cfg.master_seed, t);
    try {
      const auto path = simulate_path(grid, alpha, sub);
      values[t] = std::abs(riemann_stieltjes(f.eval, path));
    } catch (const std::exception& e) {
      throw trial_failure(sub, e);
    }
  });

  BoundReport report;
  report.config = cfg;
  report.function_name = f.name;
  report.alpha = alpha;

  // a zero bound with nothing observed is the degenerate pass, not a failure
  const auto passes = [](double emp, double ci, double bound) {
    return emp + ci <= bound || (emp == 0.0 && bound == 0.0);
  };
  {
    const auto ci = mean_ci(values);
    const double bound = lemma1_bound(f, alpha, -T, T);
    report.rows.push_back({"3.1", "E|int f dX|", -T, T, 0.0, 0.0, 0.0, ci.mean,
                           ci.halfwidth, bound,
                           passes(ci.mean, ci.halfwidth, bound)});
  }
  if (alpha == 2.0) {
    for (double eps : epsilons) {
      if (!(eps > 0.0))
        throw std::invalid_argument("lemma_bound_experiment: epsilon must be > 0");
      int count = 0;
      for (double v : values)
        if (v > eps) ++count;
      const double emp = static_cast<double>(count) / cfg.trials;
      const double ci = wilson_halfwidth(count, cfg.trials);
      const double bound = tail_bound_real_line(f, /*eps_prime=*/eps, cfg.C);
      report.rows.push_back({"3.3", "P(|int f dX| > eps)", -T, T, eps, eps,
                             cfg.C, emp, ci, bound, passes(emp, ci, bound)});
    }
  }
  return report;
}

BoundReport lemma_bound_experiment(const TestFunction& f, double alpha,
                                   const ExperimentConfig& cfg, int workers) {
  const double eps[] = {cfg.epsilon};
  return lemma_bound_experiment(f, alpha, cfg, eps, workers);
}

}  // namespace rfh

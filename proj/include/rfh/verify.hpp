#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "rfh/expansion.hpp"
#include "rfh/integral.hpp"
#include "rfh/rng.hpp"

namespace rfh {

/// Everything an experiment needs to be rerun bit-for-bit.
struct ExperimentConfig {
  int trials = 2000;
  double epsilon = 0.1;
  double eps_prime = 0.1;
  double C = 1.0;
  std::vector<int> orders = {0, 2, 4, 8, 16, 32};
  std::vector<double> y_grid = {-2.0, -1.0, -0.5, 0.0, 0.5, 1.0, 2.0};
  double truncation = 6.0;
  double step = 1e-3;
  double alpha = 2.0;
  std::uint64_t master_seed = kDefaultSeed;
  int reference_order = 128;

  void validate() const;  ///< throws std::invalid_argument
};

/// Draws a comparison pair from one derived sub-seed.
using PairSampler =
    std::function<std::pair<double, double>(std::uint64_t sub_seed)>;

/// Fraction of trials with |a_k - b_k| > epsilon, with a Wilson 99% CI
/// half-width. Trial k uses derive_seed(master_seed, k).
std::pair<double, double> estimate_prob_exceed(const PairSampler& sampler,
                                               double epsilon, int trials,
                                               std::uint64_t master_seed,
                                               int workers = 0);

/// Sample mean of |a_k - b_k| with a normal-approximation 99% CI half-width.
std::pair<double, double> estimate_mean_error(const PairSampler& sampler,
                                              int trials,
                                              std::uint64_t master_seed,
                                              int workers = 0);

struct ConvergenceRow {
  int n = 0;
  double y = 0.0;
  double prob_exceed = 0.0;
  double prob_ci = 0.0;
  double mean_abs_err = 0.0;
  double mean_ci = 0.0;
};

/// Per-(order, y) Monte Carlo estimates of P(|S_n - reference| > eps) and
/// E|S_n - reference|; rows cover the full orders x y_grid product.
struct ConvergenceReport {
  ExperimentConfig config;
  std::string function_name;
  EigenMode eigen_mode = EigenMode::None;
  std::vector<ConvergenceRow> rows;
};

/// For each trial: one path, one set of A_n, then every (n, y) compares
/// partial_sum(n, y) against target_integral(reference_order, y) on the same
/// path (common random numbers). Requires alpha = 2.
ConvergenceReport theorem35_experiment(const TestFunction& f,
                                       const ExperimentConfig& cfg,
                                       EigenMode mode, int workers = 0);

struct CauchyRow {
  double t_lo = 0.0;
  double t_hi = 0.0;
  double mean_abs = 0.0;
  double mean_ci = 0.0;
};

struct CauchyReport {
  ExperimentConfig config;
  std::string function_name;
  std::vector<double> truncations;
  std::vector<CauchyRow> rows;
};

/// E|Y_T - Y_T'| for consecutive truncation pairs, all Y's per trial from
/// one shared path so differences use only the increments in [T, T'].
CauchyReport theorem34_experiment(const TestFunction& f,
                                  std::span<const double> truncations,
                                  const ExperimentConfig& cfg,
                                  int workers = 0);

struct BoundRow {
  std::string lemma;     ///< "3.1" or "3.3"
  std::string quantity;
  double a = 0.0, b = 0.0;
  double epsilon = 0.0;   ///< threshold in the empirical probability (3.3)
  double eps_prime = 0.0;
  double C = 1.0;
  double empirical = 0.0;
  double ci = 0.0;
  double bound = 0.0;
  bool pass = false;
};

struct BoundReport {
  ExperimentConfig config;
  std::string function_name;
  double alpha = 2.0;
  std::vector<BoundRow> rows;
};

/// Empirical E|int f dX| against lemma1_bound on [-T, T], and (at alpha = 2)
/// empirical P(|int f dX| > eps) against tail_bound_real_line with
/// eps' = eps, one row per requested eps. pass = empirical + CI <= bound.
BoundReport lemma_bound_experiment(const TestFunction& f, double alpha,
                                   const ExperimentConfig& cfg,
                                   std::span<const double> epsilons,
                                   int workers = 0);
BoundReport lemma_bound_experiment(const TestFunction& f, double alpha,
                                   const ExperimentConfig& cfg,
                                   int workers = 0);

}  // namespace rfh

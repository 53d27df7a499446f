#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace rfh {

/// Two-sided 99% normal quantile, used by every confidence interval here.
inline constexpr double kZ99 = 2.5758293035489008;

double normal_cdf(double x);

/// Wilson score interval half-width for `successes` out of `trials`.
double wilson_halfwidth(int successes, int trials, double z = kZ99);

struct MeanCI {
  double mean = 0.0;
  double halfwidth = 0.0;
};

/// Sample mean with a normal-approximation confidence half-width.
MeanCI mean_ci(std::span<const double> xs, double z = kZ99);

/// Kolmogorov tail function Q(lambda) = 2 sum_{j>=1} (-1)^{j-1} e^{-2 j^2 lambda^2}.
double kolmogorov_q(double lambda);

/// Two-sample Kolmogorov-Smirnov statistic sup |F_a - F_b|.
double ks_statistic(std::vector<double> a, std::vector<double> b);

/// Asymptotic p-value for the two-sample statistic.
double ks_p_value(double d, std::size_t n, std::size_t m);

/// One-sample statistic against a reference CDF, and its p-value.
double ks_statistic(std::vector<double> xs,
                    const std::function<double(double)>& cdf);
double ks_p_value_one_sample(double d, std::size_t n);

}  // namespace rfh

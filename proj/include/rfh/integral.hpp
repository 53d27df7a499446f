#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rfh/hermite.hpp"
#include "rfh/rng.hpp"
#include "rfh/stable.hpp"

namespace rfh {

/// A named integrand with whatever closed forms it admits. Catalog entries
/// are the workhorses of every oracle comparison.
struct TestFunction {
  std::string name;
  std::function<double(double)> eval;
  /// Effective support half-width for truncating integrals over R.
  double support_hint = 6.0;
  /// Whether f is in L^2(R, dt). (hermite3 is only in the weighted space.)
  bool square_integrable = true;
  /// Closed form of \int_R |f|^alpha dt when known; NaN otherwise.
  std::function<double(double)> closed_abs_power;
  /// Points where |f|^alpha is non-smooth; quadrature splits here.
  std::vector<double> breakpoints;
};

/// Built-in catalog: gaussian, t_gaussian, cauchy_kernel, box01, h3_gauss,
/// hermite3, zero. Throws std::invalid_argument for unknown names.
const TestFunction& test_function(std::string_view name);
std::vector<std::string> test_function_names();

/// \int_R |f|^alpha dt: catalog closed form when available, otherwise
/// tanh-sinh quadrature over the effective support.
double abs_power_integral(const TestFunction& f, double alpha);

/// \int_a^b |f|^alpha dt by tanh-sinh quadrature split at breakpoints.
double abs_power_integral(const TestFunction& f, double alpha, double a,
                          double b);

/// Left-endpoint Riemann-Stieltjes sum  sum_i f(t_i) * increments[i].
double riemann_stieltjes(const std::function<double(double)>& f,
                         const SamplePath& path);
std::complex<double> riemann_stieltjes_complex(
    const std::function<std::complex<double>(double)>& f,
    const SamplePath& path);

/// One draw of \int f dX from its exact law: symmetric stable with scale
/// (\int |f|^alpha dt)^{1/alpha}. For alpha = 2 this is Gaussian with
/// variance 2 \int f^2 dt.
double exact_integral_sampler(const TestFunction& f, double alpha,
                              SplitMix64& rng);

/// Truncated stochastic integral Y_T with full provenance.
struct IntegralEstimate {
  double value = 0.0;
  double truncation = 0.0;
  double step = 0.0;
  std::uint64_t seed = 0;
  enum class Scheme { LeftEndpoint } scheme = Scheme::LeftEndpoint;
};

/// Y_T = \int_{-T}^{T} f dX on a fresh path with the given seed.
IntegralEstimate integrate_real_line(const TestFunction& f, double alpha,
                                     double T, double h, std::uint64_t seed);

/// Shared-path truncation family: one path on [-max(T), max(T)], and
/// Y_T summed over only the increments inside [-T, T]. Consequently
/// Y_{T'} - Y_T uses exactly the increments with |t| in [T, T'].
std::vector<double> nested_integrals(const TestFunction& f, double alpha,
                                     std::span<const double> truncations,
                                     double h, std::uint64_t seed);

/// Upper bound for E|\int_a^b f dX|:
///   4/(pi(alpha-1)) \int_a^b |f|^alpha dt
///   + 2/pi \int_{|u|>1} (1 - exp(-|u|^alpha \int_a^b |f|^alpha dt))/u^2 du.
/// The u-integral uses adaptive quadrature on (1, U] plus the 2/U tail
/// envelope, with U large enough that the replacement error is below 1e-10.
double lemma1_bound(const TestFunction& f, double alpha, double a, double b);

/// Tail bound C 2^{alpha+1} / ((alpha+1) eps'^alpha) \int_a^b |f|^alpha dt
/// for P(|\int_a^b f dX| > eps), alpha in [1, 2].
double tail_bound_finite(const TestFunction& f, double alpha, double a,
                         double b, double eps_prime, double C);

/// Tail bound (8C / (3 eps'^2)) \int_R f^2 dt for the index-2 process on the
/// whole line.
double tail_bound_real_line(const TestFunction& f, double eps_prime, double C);

}  // namespace rfh

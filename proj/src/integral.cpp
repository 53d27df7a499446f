#include "rfh/integral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>
#include <stdexcept>

#include "rfh/hermite.hpp"

namespace rfh {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
const double kSqrt32 = std::sqrt(1.5);  // zeros of H_3 away from 0

std::map<std::string, TestFunction, std::less<>> build_catalog() {
  std::map<std::string, TestFunction, std::less<>> cat;
  cat["gaussian"] = TestFunction{
      "gaussian",
      [](double t) { return std::exp(-t * t); },
      6.0,
      true,
      [](double a) { return std::sqrt(std::numbers::pi / a); },
      {}};
  cat["t_gaussian"] = TestFunction{
      "t_gaussian",
      [](double t) { return t * std::exp(-t * t); },
      6.0,
      true,
      [](double a) {
        return std::pow(a, -(a + 1.0) / 2.0) * std::tgamma((a + 1.0) / 2.0);
      },
      {0.0}};
  cat["cauchy_kernel"] = TestFunction{
      "cauchy_kernel",
      [](double t) { return 1.0 / (1.0 + t * t); },
      6.0,
      true,
      [](double a) {
        if (a <= 0.5) return kNaN;
        return std::sqrt(std::numbers::pi) * std::tgamma(a - 0.5) /
               std::tgamma(a);
      },
      {}};
  // half-open indicator so left-endpoint sums see no mass outside [0, 1]
  cat["box01"] = TestFunction{
      "box01",
      [](double t) { return (t >= 0.0 && t < 1.0) ? 1.0 : 0.0; },
      1.0,
      true,
      [](double) { return 1.0; },
      {0.0, 1.0}};
  cat["h3_gauss"] = TestFunction{
      "h3_gauss",
      [](double t) { return hermite_poly(3, t) * std::exp(-0.5 * t * t); },
      8.0,
      true,
      [](double a) {
        // only the square has a closed form: \int H_3^2 e^{-t^2} = 48 sqrt(pi)
        return a == 2.0 ? 48.0 * std::sqrt(std::numbers::pi) : kNaN;
      },
      {-kSqrt32, 0.0, kSqrt32}};
  cat["hermite3"] = TestFunction{
      "hermite3",
      [](double t) { return hermite_poly(3, t); },
      6.0,
      false,  // not in L^2(R, dt); usable in the weighted space only
      [](double) { return std::numeric_limits<double>::infinity(); },
      {-kSqrt32, 0.0, kSqrt32}};
  cat["zero"] = TestFunction{
      "zero", [](double) { return 0.0; }, 1.0, true,
      [](double) { return 0.0; }, {}};
  return cat;
}

const std::map<std::string, TestFunction, std::less<>>& catalog() {
  static const auto cat = build_catalog();
  return cat;
}

}  // namespace

const TestFunction& test_function(std::string_view name) {
  const auto& cat = catalog();
  const auto it = cat.find(name);
  if (it == cat.end())
    throw std::invalid_argument("unknown test function: " + std::string(name));
  return it->second;
}

std::vector<std::string> test_function_names() {
  std::vector<std::string> names;
  for (const auto& [name, fn] : catalog()) names.push_back(name);
  return names;
}

double abs_power_integral(const TestFunction& f, double alpha, double a,
                          double b) {
  if (!(a < b)) throw std::invalid_argument("abs_power_integral: need a < b");
  if (!(alpha > 0.0))
    throw std::invalid_argument("abs_power_integral: alpha must be > 0");
  std::vector<double> cuts{a};
  for (double p : f.breakpoints)
    if (p > a && p < b) cuts.push_back(p);
  cuts.push_back(b);
  std::sort(cuts.begin(), cuts.end());
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const auto rule = tanh_sinh_rule(cuts[i], cuts[i + 1], 9);
    const auto g = [&](double t) { return std::pow(std::abs(f.eval(t)), alpha); };
    total += weighted_inner_product(g, [](double) { return 1.0; }, rule);
  }
  return total;
}

double abs_power_integral(const TestFunction& f, double alpha) {
  if (f.closed_abs_power) {
    const double v = f.closed_abs_power(alpha);
    if (!std::isnan(v)) return v;
  }
  const double s = std::max(f.support_hint * 2.0, 12.0);
  return abs_power_integral(f, alpha, -s, s);
}

double riemann_stieltjes(const std::function<double(double)>& f,
                         const SamplePath& path) {
  if (path.increments.empty())
    throw std::invalid_argument("riemann_stieltjes: empty path");
  double acc = 0.0;
  for (std::size_t i = 0; i < path.increments.size(); ++i) {
    const double v = f(path.grid[i]);
    if (!std::isfinite(v))
      throw EvaluationError("riemann_stieltjes: non-finite f at t = " +
                                std::to_string(path.grid[i]),
                            path.grid[i]);
    acc += v * path.increments[i];
  }
  return acc;
}

std::complex<double> riemann_stieltjes_complex(
    const std::function<std::complex<double>(double)>& f,
    const SamplePath& path) {
  if (path.increments.empty())
    throw std::invalid_argument("riemann_stieltjes: empty path");
  std::complex<double> acc{0.0, 0.0};
  for (std::size_t i = 0; i < path.increments.size(); ++i) {
    const std::complex<double> v = f(path.grid[i]);
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
      throw EvaluationError("riemann_stieltjes: non-finite f at t = " +
                                std::to_string(path.grid[i]),
                            path.grid[i]);
    acc += v * path.increments[i];
  }
  return acc;
}

double exact_integral_sampler(const TestFunction& f, double alpha,
                              SplitMix64& rng) {
  const double power = abs_power_integral(f, alpha);
  if (!std::isfinite(power))
    throw std::invalid_argument(
        "exact_integral_sampler: \\int |f|^alpha dt is not finite for " +
        f.name);
  if (power == 0.0) return 0.0;
  return sample_stable(StableLaw(alpha, std::pow(power, 1.0 / alpha)), rng);
}

IntegralEstimate integrate_real_line(const TestFunction& f, double alpha,
                                     double T, double h, std::uint64_t seed) {
  const auto path = simulate_path(uniform_grid(T, h), alpha, seed);
  IntegralEstimate est;
  est.value = riemann_stieltjes(f.eval, path);
  est.truncation = T;
  est.step = h;
  est.seed = seed;
  return est;
}

std::vector<double> nested_integrals(const TestFunction& f, double alpha,
                                     std::span<const double> truncations,
                                     double h, std::uint64_t seed) {
  if (truncations.empty())
    throw std::invalid_argument("nested_integrals: no truncations");
  for (std::size_t i = 0; i + 1 < truncations.size(); ++i)
    if (!(truncations[i] <= truncations[i + 1]))
      throw std::invalid_argument(
          "nested_integrals: truncations must be non-decreasing");
  const double t_max = truncations.back();
  const auto path = simulate_path(uniform_grid(t_max, h), alpha, seed);

  std::vector<double> values(truncations.size(), 0.0);
  std::vector<double> partial(truncations.size(), 0.0);
  for (std::size_t i = 0; i < path.increments.size(); ++i) {
    const double lo = path.grid[i];
    const double hi = path.grid[i + 1];
    const double term = f.eval(lo) * path.increments[i];
    if (!std::isfinite(term))
      throw EvaluationError("nested_integrals: non-finite term at t = " +
                                std::to_string(lo),
                            lo);
    for (std::size_t k = 0; k < truncations.size(); ++k) {
      // increment belongs to Y_T iff its cell lies inside [-T, T]
      const double tol = 1e-9 * h;
      if (lo >= -truncations[k] - tol && hi <= truncations[k] + tol)
        partial[k] += term;
    }
  }
  values = partial;
  return values;
}

double lemma1_bound(const TestFunction& f, double alpha, double a, double b) {
  if (alpha == 1.0)
    throw std::invalid_argument("lemma1_bound: diverges at alpha = 1");
  if (!(alpha > 1.0) || !(alpha <= 2.0))
    throw std::invalid_argument("lemma1_bound: alpha must be in (1, 2]");
  if (!(a < b)) throw std::invalid_argument("lemma1_bound: need a < b");
  const double power = abs_power_integral(f, alpha, a, b);
  if (power == 0.0) return 0.0;

  const double first = 4.0 / (std::numbers::pi * (alpha - 1.0)) * power;
  // The integrand is even in u, so work on (1, U] and double. Beyond
  // U = (45/power)^{1/alpha} the integrand is 1/u^2 up to e^{-45}, and the
  // tail is replaced by its envelope 2/U (error < 1e-10, upper bound kept).
  const double U = std::max(2.0, std::pow(45.0 / power, 1.0 / alpha));
  const auto g = [&](double u) {
    return (1.0 - std::exp(-std::pow(u, alpha) * power)) / (u * u);
  };
  double core = 0.0;
  for (double lo = 1.0; lo < U;) {
    const double hi = std::min(2.0 * lo, U);
    core += integrate_adaptive(g, lo, hi, 1e-13);
    lo = hi;
  }
  const double u_term = 2.0 / std::numbers::pi * (2.0 * core + 2.0 / U);
  return first + u_term;
}

double tail_bound_finite(const TestFunction& f, double alpha, double a,
                         double b, double eps_prime, double C) {
  if (!(eps_prime > 0.0))
    throw std::invalid_argument("tail_bound_finite: eps_prime must be > 0");
  if (!(C > 0.0))
    throw std::invalid_argument("tail_bound_finite: C must be > 0");
  if (!(alpha >= 1.0) || !(alpha <= 2.0))
    throw std::invalid_argument("tail_bound_finite: alpha must be in [1, 2]");
  if (!(a < b)) throw std::invalid_argument("tail_bound_finite: need a < b");
  const double power = abs_power_integral(f, alpha, a, b);
  return C * std::pow(2.0, alpha + 1.0) /
         ((alpha + 1.0) * std::pow(eps_prime, alpha)) * power;
}

double tail_bound_real_line(const TestFunction& f, double eps_prime,
                            double C) {
  if (!(eps_prime > 0.0))
    throw std::invalid_argument("tail_bound_real_line: eps_prime must be > 0");
  if (!(C > 0.0))
    throw std::invalid_argument("tail_bound_real_line: C must be > 0");
  if (!f.square_integrable)
    throw std::invalid_argument("tail_bound_real_line: " + f.name +
                                " is not square integrable");
  const double power = abs_power_integral(f, 2.0);
  return 8.0 * C / (3.0 * eps_prime * eps_prime) * power;
}

}  // namespace rfh

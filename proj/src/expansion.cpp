#include "rfh/expansion.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "rfh/rng.hpp"

namespace rfh {

namespace {

constexpr double kRequiredSpan = 6.0;

void require_span(const SamplePath& path) {
  const double tol = 1e-12;
  if (path.grid.front() > -kRequiredSpan + tol ||
      path.grid.back() < kRequiredSpan - tol)
    throw std::invalid_argument(
        "path must span at least [-6, 6] to carry the Hermite-Gaussian mass");
}

}  // namespace

std::vector<double> coefficients(const TestFunction& f, int order,
                                 const HermiteBasis& basis,
                                 const QuadratureRule& rule) {
  if (order < 0) throw std::invalid_argument("coefficients: negative order");
  if (order > basis.max_order())
    throw std::out_of_range("coefficients: order exceeds basis capacity");
  if (rule.kind != QuadratureKind::GaussHermite)
    throw std::invalid_argument("coefficients: needs a Gauss-Hermite rule");
  if (rule.order < order + 16)
    throw std::invalid_argument("coefficients: rule order must be >= order + 16");

  // c_n = \int f H_n w / norms[n] dt. Under PaperLiteral the rule's e^{-t^2}
  // is exactly phi_n's Gaussian; under HalfWeight half of it is handed back
  // to the integrand.
  const bool half = basis.convention() == WeightConvention::HalfWeight;
  std::vector<double> c(static_cast<std::size_t>(order) + 1, 0.0);
  std::vector<double> row(static_cast<std::size_t>(order) + 1);
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const double x = rule.nodes[i];
    double fx = f.eval(x);
    if (!std::isfinite(fx))
      throw EvaluationError("coefficients: non-finite f at node " +
                                std::to_string(x),
                            x);
    if (half) fx *= std::exp(0.5 * x * x);
    const double wf = rule.weights[i] * fx;
    if (wf == 0.0) continue;
    hermite_normalized_row(x, row);
    for (std::size_t k = 0; k < c.size(); ++k) c[k] += wf * row[k];
  }
  return c;
}

std::vector<double> random_coeffs(const HermiteBasis& basis, int order,
                                  const SamplePath& path) {
  if (order < 0) throw std::invalid_argument("random_coeffs: negative order");
  if (order > basis.max_order())
    throw std::out_of_range("random_coeffs: order exceeds basis capacity");
  require_span(path);

  std::vector<double> a(static_cast<std::size_t>(order) + 1, 0.0);
  std::vector<double> row(static_cast<std::size_t>(order) + 1);
  for (std::size_t i = 0; i < path.increments.size(); ++i) {
    const double dx = path.increments[i];
    if (dx == 0.0) continue;
    phi_row(basis, path.grid[i], row);
    for (std::size_t k = 0; k < a.size(); ++k) a[k] += row[k] * dx;
  }
  return a;
}

std::vector<std::complex<double>> eigenvalue_sequence(EigenMode mode, int order,
                                                      std::uint64_t seed) {
  std::vector<std::complex<double>> lam(static_cast<std::size_t>(order) + 1);
  switch (mode) {
    case EigenMode::None:
      for (auto& l : lam) l = {1.0, 0.0};
      break;
    case EigenMode::Paper:
      // e^{-i n pi} = (-1)^n, exactly real
      for (int n = 0; n <= order; ++n)
        lam[static_cast<std::size_t>(n)] = {(n % 2 == 0) ? 1.0 : -1.0, 0.0};
      break;
    case EigenMode::Randomized: {
      SplitMix64 rng(seed);
      for (auto& l : lam) {
        const double u = rng.next_unit();
        l = {std::cos(std::numbers::pi * u), -std::sin(std::numbers::pi * u)};
      }
      break;
    }
  }
  return lam;
}

RfhExpansion build_expansion(const TestFunction& f, int order,
                             const HermiteBasis& basis,
                             const QuadratureRule& rule, const SamplePath& path,
                             EigenMode mode, std::uint64_t eigen_seed) {
  RfhExpansion exp;
  exp.order = order;
  exp.basis = basis;
  exp.coeffs = coefficients(f, order, basis, rule);
  exp.random_coeffs = random_coeffs(basis, order, path);
  exp.eigen_mode = mode;
  // the randomized sequence is drawn once per expansion, from its own seed
  const std::uint64_t seed =
      eigen_seed != 0 ? eigen_seed : derive_seed(path.seed, 0xE16E);
  exp.eigenvalues = eigenvalue_sequence(mode, order, seed);
  exp.path_seed = path.seed;
  return exp;
}

std::complex<double> partial_sum(const RfhExpansion& exp, double y, int n) {
  if (n < 0 || n > exp.order)
    throw std::out_of_range("partial_sum: order out of range");
  std::complex<double> acc{0.0, 0.0};
  double hm = 1.0;       // H_0(y)
  double h = 2.0 * y;    // H_1(y)
  for (int k = 0; k <= n; ++k) {
    const double hk = (k == 0) ? hm : h;
    acc += exp.coeffs[static_cast<std::size_t>(k)] *
           exp.eigenvalues[static_cast<std::size_t>(k)] *
           exp.random_coeffs[static_cast<std::size_t>(k)] * hk;
    if (k >= 1) {
      const double next = 2.0 * y * h - 2.0 * k * hm;
      hm = h;
      h = next;
    }
  }
  return acc;
}

double kernel_fn(const RfhExpansion& exp, double y, double t, int n) {
  if (n < 0 || n > exp.order)
    throw std::out_of_range("kernel_fn: order out of range");
  std::vector<double> row(static_cast<std::size_t>(n) + 1);
  hermite_normalized_row(t, row);
  double acc = 0.0;
  double hm = 1.0;
  double h = 2.0 * y;
  for (int k = 0; k <= n; ++k) {
    const double hk = (k == 0) ? hm : h;
    acc += exp.coeffs[static_cast<std::size_t>(k)] *
           row[static_cast<std::size_t>(k)] * hk;
    if (k >= 1) {
      const double next = 2.0 * y * h - 2.0 * k * hm;
      hm = h;
      h = next;
    }
  }
  return acc;
}

std::complex<double> target_integral(const RfhExpansion& exp, double y,
                                     int n_kernel, const SamplePath& path) {
  if (n_kernel < 0 || n_kernel > exp.order)
    throw std::out_of_range("target_integral: order out of range");
  require_span(path);

  // d_k = c_k lambda_k H_k(y), fixed across t.
  std::vector<std::complex<double>> d(static_cast<std::size_t>(n_kernel) + 1);
  {
    double hm = 1.0;
    double h = 2.0 * y;
    for (int k = 0; k <= n_kernel; ++k) {
      const double hk = (k == 0) ? hm : h;
      d[static_cast<std::size_t>(k)] =
          exp.coeffs[static_cast<std::size_t>(k)] *
          exp.eigenvalues[static_cast<std::size_t>(k)] * hk;
      if (k >= 1) {
        const double next = 2.0 * y * h - 2.0 * k * hm;
        hm = h;
        h = next;
      }
    }
  }
  const bool paper = exp.basis.convention() == WeightConvention::PaperLiteral;
  std::vector<double> row(static_cast<std::size_t>(n_kernel) + 1);
  const auto integrand = [&](double t) {
    hermite_normalized_row(t, row);
    std::complex<double> k{0.0, 0.0};
    for (std::size_t j = 0; j < d.size(); ++j) k += d[j] * row[j];
    return k * (paper ? std::exp(-t * t) : std::exp(-0.5 * t * t));
  };
  return riemann_stieltjes_complex(integrand, path);
}

namespace {

std::complex<double> synthesize(const HermiteBasis& basis,
                                std::span<const double> coeffs,
                                std::span<const std::complex<double>> weights,
                                double t) {
  std::vector<double> row(coeffs.size());
  phi_row(basis, t, row);
  std::complex<double> acc{0.0, 0.0};
  for (std::size_t n = 0; n < coeffs.size(); ++n)
    acc += coeffs[n] * weights[n] * row[n];
  return acc;
}

}  // namespace

std::complex<double> RandomizedRft::operator()(double t) const {
  return synthesize(basis, coeffs, eigenvalues, t);
}

std::complex<double> RandomizedRft::round_trip(double t) const {
  std::vector<std::complex<double>> unit(eigenvalues.size());
  for (std::size_t n = 0; n < unit.size(); ++n)
    unit[n] = eigenvalues[n] * std::conj(eigenvalues[n]);
  return synthesize(basis, coeffs, unit, t);
}

double RandomizedRft::plain(double t) const {
  std::vector<double> row(coeffs.size());
  phi_row(basis, t, row);
  double acc = 0.0;
  for (std::size_t n = 0; n < coeffs.size(); ++n) acc += coeffs[n] * row[n];
  return acc;
}

RandomizedRft randomized_rft(const TestFunction& f, int order,
                             std::span<const double> rand_seq,
                             const HermiteBasis& basis,
                             const QuadratureRule& rule) {
  if (static_cast<int>(rand_seq.size()) < order + 1)
    throw std::invalid_argument("randomized_rft: rand_seq shorter than order+1");
  RandomizedRft rft;
  rft.coeffs = coefficients(f, order, basis, rule);
  rft.basis = basis;
  rft.eigenvalues.resize(static_cast<std::size_t>(order) + 1);
  for (int n = 0; n <= order; ++n) {
    const double u = rand_seq[static_cast<std::size_t>(n)];
    if (!(u >= 0.0) || !(u < 1.0))
      throw std::invalid_argument("randomized_rft: rand value outside [0, 1)");
    rft.eigenvalues[static_cast<std::size_t>(n)] = {
        std::cos(std::numbers::pi * u), -std::sin(std::numbers::pi * u)};
  }
  return rft;
}

RandomizedRft randomized_rft(const TestFunction& f, int order,
                             std::span<const double> rand_seq,
                             const HermiteBasis& basis) {
  return randomized_rft(f, order, rand_seq, basis,
                        gauss_hermite_rule(std::max(64, order + 16)));
}

double coefficient_energy(std::span<const std::complex<double>> coeffs) {
  double acc = 0.0;
  for (const auto& c : coeffs) acc += std::norm(c);
  return acc;
}

double projection_error(const TestFunction& f, int n, const HermiteBasis& basis,
                        const QuadratureRule& rule) {
  if (n < 0) throw std::invalid_argument("projection_error: negative order");
  if (n > basis.max_order())
    throw std::out_of_range("projection_error: order exceeds basis capacity");
  if (rule.kind != QuadratureKind::GaussHermite)
    throw std::invalid_argument("projection_error: needs a Gauss-Hermite rule");
  if (rule.order < n + 16)
    throw std::invalid_argument("projection_error: rule order must be >= order + 16");

  // Projection coefficients in L^2(e^{-t^2}) onto e_k = H_k/norms[k]; these
  // coincide with the PaperLiteral c_k whatever the basis's convention.
  std::vector<double> c(static_cast<std::size_t>(n) + 1, 0.0);
  std::vector<double> row(static_cast<std::size_t>(n) + 1);
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const double x = rule.nodes[i];
    const double fx = f.eval(x);
    if (!std::isfinite(fx))
      throw EvaluationError("projection_error: non-finite f at node " +
                                std::to_string(x),
                            x);
    hermite_normalized_row(x, row);
    for (std::size_t k = 0; k < c.size(); ++k)
      c[k] += rule.weights[i] * fx * row[k];
  }
  double err = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const double x = rule.nodes[i];
    hermite_normalized_row(x, row);
    double p = 0.0;
    for (std::size_t k = 0; k < c.size(); ++k) p += c[k] * row[k];
    const double r = f.eval(x) - p;
    err += rule.weights[i] * r * r;
  }
  return err;
}

}  // namespace rfh

#include "rfh/hermite.hpp"

#include <cmath>
#include <numbers>

namespace rfh {

namespace {
constexpr double kLog2 = std::numbers::ln2;
const double kLogPi = std::log(std::numbers::pi);
}  // namespace

HermiteBasis::HermiteBasis(int max_order, WeightConvention convention)
    : max_order_(max_order), convention_(convention) {
  if (max_order < 0) throw std::invalid_argument("HermiteBasis: max_order < 0");
  log_norms_.resize(static_cast<std::size_t>(max_order) + 1);
  for (int n = 0; n <= max_order; ++n) {
    // log sqrt(2^n sqrt(pi) n!)
    log_norms_[static_cast<std::size_t>(n)] =
        0.5 * (n * kLog2 + 0.5 * kLogPi + std::lgamma(n + 1.0));
  }
}

double HermiteBasis::log_norm(int n) const {
  if (n < 0 || n > max_order_)
    throw std::out_of_range("HermiteBasis: order " + std::to_string(n) +
                            " exceeds max_order " + std::to_string(max_order_));
  return log_norms_[static_cast<std::size_t>(n)];
}

double HermiteBasis::norm(int n) const { return std::exp(log_norm(n)); }

double HermiteBasis::norm_squared(int n) const {
  return std::exp(2.0 * log_norm(n));
}

double hermite_poly(int n, double t) {
  if (n < 0) throw std::invalid_argument("hermite_poly: negative order");
  if (!std::isfinite(t)) throw std::invalid_argument("hermite_poly: t not finite");
  double hm = 1.0;  // H_0
  if (n == 0) return hm;
  double h = 2.0 * t;  // H_1
  for (int k = 1; k < n; ++k) {
    if (std::isinf(h)) return h;  // saturate instead of producing inf - inf
    const double next = 2.0 * t * h - 2.0 * k * hm;
    hm = h;
    h = next;
  }
  return h;
}

double hermite_normalized(int n, double t) {
  if (n < 0) throw std::invalid_argument("hermite_normalized: negative order");
  const double inv_pi4 = 1.0 / std::pow(std::numbers::pi, 0.25);
  double hm = inv_pi4;
  if (n == 0) return hm;
  double h = std::numbers::sqrt2 * t * inv_pi4;
  for (int k = 1; k < n; ++k) {
    const double next = t * std::sqrt(2.0 / (k + 1)) * h -
                        std::sqrt(static_cast<double>(k) / (k + 1)) * hm;
    hm = h;
    h = next;
  }
  return h;
}

void hermite_normalized_row(double t, std::span<double> out) {
  if (out.empty()) return;
  const double inv_pi4 = 1.0 / std::pow(std::numbers::pi, 0.25);
  out[0] = inv_pi4;
  if (out.size() == 1) return;
  out[1] = std::numbers::sqrt2 * t * inv_pi4;
  for (std::size_t k = 1; k + 1 < out.size(); ++k) {
    out[k + 1] = t * std::sqrt(2.0 / static_cast<double>(k + 1)) * out[k] -
                 std::sqrt(static_cast<double>(k) / static_cast<double>(k + 1)) *
                     out[k - 1];
  }
}

double phi(const HermiteBasis& basis, int n, double t) {
  if (n < 0 || n > basis.max_order())
    throw std::out_of_range("phi: order " + std::to_string(n) +
                            " exceeds basis capacity " +
                            std::to_string(basis.max_order()));
  const double half_gauss = std::exp(-0.5 * t * t);
  // phi~_n = H_n e^{-t^2/2}/norms[n]; same recurrence as hermite_normalized
  // with the Gaussian folded into the start values.
  const double inv_pi4 = 1.0 / std::pow(std::numbers::pi, 0.25);
  double hm = inv_pi4 * half_gauss;
  double h = std::numbers::sqrt2 * t * inv_pi4 * half_gauss;
  double value = (n == 0) ? hm : h;
  for (int k = 1; k < n; ++k) {
    const double next = t * std::sqrt(2.0 / (k + 1)) * h -
                        std::sqrt(static_cast<double>(k) / (k + 1)) * hm;
    hm = h;
    h = next;
    value = h;
  }
  if (basis.convention() == WeightConvention::PaperLiteral)
    value *= half_gauss;
  return value;
}

void phi_row(const HermiteBasis& basis, double t, std::span<double> out) {
  if (out.empty()) return;
  if (static_cast<int>(out.size()) - 1 > basis.max_order())
    throw std::out_of_range("phi_row: order exceeds basis capacity");
  hermite_normalized_row(t, out);
  const double w = basis.convention() == WeightConvention::PaperLiteral
                       ? std::exp(-t * t)
                       : std::exp(-0.5 * t * t);
  for (double& v : out) v *= w;
}

}  // namespace rfh

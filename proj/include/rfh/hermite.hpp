#pragma once

#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace rfh {

/// Gaussian factor carried by the Hermite-Gaussian functions phi_n.
/// PaperLiteral uses e^{-t^2}; HalfWeight uses e^{-t^2/2}, the convention
/// under which the phi_n are orthonormal in L^2(R).
enum class WeightConvention { PaperLiteral, HalfWeight };

/// A function handed to a quadrature rule or stochastic sum produced a
/// non-finite value; `where()` is the offending abscissa.
class EvaluationError : public std::runtime_error {
 public:
  EvaluationError(const std::string& what, double where)
      : std::runtime_error(what), where_(where) {}
  double where() const { return where_; }

 private:
  double where_;
};

/// Physicists' Hermite polynomials H_n (weight e^{-t^2}, H_1 = 2t) and the
/// normalization constants sqrt(2^n sqrt(pi) n!). Norms are stored as logs;
/// 2^n n! overflows double precision near n = 150.
class HermiteBasis {
 public:
  explicit HermiteBasis(
      int max_order = 200,
      WeightConvention convention = WeightConvention::PaperLiteral);

  int max_order() const { return max_order_; }
  WeightConvention convention() const { return convention_; }

  /// log sqrt(2^n sqrt(pi) n!)
  double log_norm(int n) const;
  double norm(int n) const;
  double norm_squared(int n) const;

 private:
  int max_order_;
  WeightConvention convention_;
  std::vector<double> log_norms_;
};

/// H_n(t) by the raw three-term recurrence. Overflows to +-inf for large
/// n * |t| rather than returning a silently wrong value.
double hermite_poly(int n, double t);

/// H_n(t) / sqrt(2^n sqrt(pi) n!) by the normalized recurrence; no
/// intermediate overflow for the orders this project uses.
double hermite_normalized(int n, double t);

/// Fills out[k] = H_k(t) / norms[k] for k = 0 .. out.size()-1.
void hermite_normalized_row(double t, std::span<double> out);

/// phi_n(t) in the basis's weight convention. Computed by recursing on
/// H_n e^{-t^2/2}/norms[n] and multiplying the residual Gaussian factor for
/// PaperLiteral, so nothing overflows for n <= 200, |t| <= 10.
double phi(const HermiteBasis& basis, int n, double t);

/// Fills out[k] = phi_k(t), k = 0 .. out.size()-1, in one recurrence sweep.
void phi_row(const HermiteBasis& basis, double t, std::span<double> out);

enum class QuadratureKind { GaussHermite, TanhSinh };

/// Nodes and weights of a fixed rule. GaussHermite approximates
/// \int g(t) e^{-t^2} dt; TanhSinh approximates a plain \int_a^b g(t) dt.
struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
  int order = 0;
  QuadratureKind kind = QuadratureKind::GaussHermite;
};

/// Gauss-Hermite rule of order m (1 <= m <= 256) by the symmetric-tridiagonal
/// eigenvalue method. Nodes are exactly symmetric about 0; the rule
/// integrates t^k e^{-t^2} exactly for k <= 2m-1.
QuadratureRule gauss_hermite_rule(int m);

/// Tanh-sinh rule on [a, b] at the given refinement level. Robust to
/// integrable endpoint kinks and singularities.
QuadratureRule tanh_sinh_rule(double a, double b, int level = 8);

/// sum_i w_i g(x_i) h(x_i). Under a GaussHermite rule this approximates
/// \int g h e^{-t^2} dt. Throws EvaluationError on a non-finite value.
double weighted_inner_product(const std::function<double(double)>& g,
                              const std::function<double(double)>& h,
                              const QuadratureRule& rule);

/// Adaptive Simpson quadrature of f over [a, b].
double integrate_adaptive(const std::function<double(double)>& f, double a,
                          double b, double tol = 1e-12, int max_depth = 48);

}  // namespace rfh

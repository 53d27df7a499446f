#include <Eigen/Dense>
#include <cmath>
#include <numbers>

#include "rfh/hermite.hpp"

namespace rfh {

QuadratureRule gauss_hermite_rule(int m) {
  if (m < 1 || m > 256)
    throw std::invalid_argument("gauss_hermite_rule: order must be in [1, 256]");
  // Golub-Welsch nodes: eigenvalues of the Jacobi matrix for the e^{-t^2}
  // weight (zero diagonal, off-diagonal sqrt(k/2)).
  Eigen::MatrixXd jacobi = Eigen::MatrixXd::Zero(m, m);
  for (int k = 1; k < m; ++k) {
    const double b = std::sqrt(0.5 * k);
    jacobi(k, k - 1) = b;
    jacobi(k - 1, k) = b;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(jacobi);
  if (es.info() != Eigen::Success)
    throw std::runtime_error("gauss_hermite_rule: eigensolver failed");

  QuadratureRule rule;
  rule.order = m;
  rule.kind = QuadratureKind::GaussHermite;
  rule.nodes.resize(static_cast<std::size_t>(m));
  rule.weights.resize(static_cast<std::size_t>(m));

  // Eigenvector-based weights lose relative accuracy in the tails, so polish
  // each node by Newton on the orthonormal recurrence and take
  // w_i = 1 / sum_k h~_k(x_i)^2, which is accurate at every node.
  std::vector<double> row(static_cast<std::size_t>(m) + 1);
  for (int i = 0; i < m; ++i) {
    double x = es.eigenvalues()(i);
    for (int it = 0; it < 3; ++it) {
      hermite_normalized_row(x, row);
      const double dp = std::sqrt(2.0 * m) * row[static_cast<std::size_t>(m - 1)];
      if (dp == 0.0) break;
      x -= row[static_cast<std::size_t>(m)] / dp;
    }
    hermite_normalized_row(x, row);
    double s = 0.0;
    for (int k = 0; k < m; ++k)
      s += row[static_cast<std::size_t>(k)] * row[static_cast<std::size_t>(k)];
    rule.nodes[static_cast<std::size_t>(i)] = x;
    rule.weights[static_cast<std::size_t>(i)] = 1.0 / s;
  }
  // Enforce the exact symmetry the eigensolver only delivers approximately.
  for (int i = 0, j = m - 1; i < j; ++i, --j) {
    const double x = 0.5 * (rule.nodes[static_cast<std::size_t>(j)] -
                            rule.nodes[static_cast<std::size_t>(i)]);
    rule.nodes[static_cast<std::size_t>(i)] = -x;
    rule.nodes[static_cast<std::size_t>(j)] = x;
    const double w = 0.5 * (rule.weights[static_cast<std::size_t>(i)] +
                            rule.weights[static_cast<std::size_t>(j)]);
    rule.weights[static_cast<std::size_t>(i)] = w;
    rule.weights[static_cast<std::size_t>(j)] = w;
  }
  if (m % 2 == 1) rule.nodes[static_cast<std::size_t>(m / 2)] = 0.0;
  return rule;
}

QuadratureRule tanh_sinh_rule(double a, double b, int level) {
  if (!(a < b)) throw std::invalid_argument("tanh_sinh_rule: need a < b");
  if (level < 1 || level > 14)
    throw std::invalid_argument("tanh_sinh_rule: level must be in [1, 14]");
  const double h = 1.0 / static_cast<double>(1 << level);
  const double half = 0.5 * (b - a);
  const double half_pi = 0.5 * std::numbers::pi;

  QuadratureRule rule;
  rule.order = level;
  rule.kind = QuadratureKind::TanhSinh;
  rule.nodes.push_back(a + half);
  rule.weights.push_back(half * h * half_pi);
  for (int j = 1; j <= (6 << level); ++j) {
    const double u = j * h;
    const double s = half_pi * std::sinh(u);
    const double c = std::cosh(s);
    const double w = h * half_pi * std::cosh(u) / (c * c);
    if (!(w > 1e-300)) break;
    // 1 - tanh(s) formed without cancellation, so nodes keep full relative
    // accuracy right up to the endpoints (this is what singular integrands see)
    const double dist = half * 2.0 / (std::exp(2.0 * s) + 1.0);
    if (dist == 0.0 || a + dist >= b - dist) continue;
    rule.nodes.push_back(a + dist);
    rule.weights.push_back(half * w);
    rule.nodes.push_back(b - dist);
    rule.weights.push_back(half * w);
  }
  return rule;
}

double weighted_inner_product(const std::function<double(double)>& g,
                              const std::function<double(double)>& h,
                              const QuadratureRule& rule) {
  double acc = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const double x = rule.nodes[i];
    const double gv = g(x);
    const double hv = h(x);
    if (!std::isfinite(gv) || !std::isfinite(hv))
      throw EvaluationError("weighted_inner_product: non-finite value at node " +
                                std::to_string(x),
                            x);
    acc += rule.weights[i] * gv * hv;
  }
  return acc;
}

namespace {

double simpson(double fa, double fm, double fb, double width) {
  return width * (fa + 4.0 * fm + fb) / 6.0;
}

double adaptive_step(const std::function<double(double)>& f, double a,
                     double b, double fa, double fm, double fb, double whole,
                     double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double left = simpson(fa, flm, fm, m - a);
  const double right = simpson(fm, frm, fb, b - m);
  const double delta = left + right - whole;
  if (depth <= 0 || std::abs(delta) <= 15.0 * tol)
    return left + right + delta / 15.0;
  return adaptive_step(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
         adaptive_step(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

}  // namespace

double integrate_adaptive(const std::function<double(double)>& f, double a,
                          double b, double tol, int max_depth) {
  if (a == b) return 0.0;
  const double fa = f(a);
  const double fb = f(b);
  const double m = 0.5 * (a + b);
  const double fm = f(m);
  const double whole = simpson(fa, fm, fb, b - a);
  return adaptive_step(f, a, b, fa, fm, fb, whole, tol, max_depth);
}

}  // namespace rfh

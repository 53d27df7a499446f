#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "rfh/hermite.hpp"
#include "rfh/integral.hpp"
#include "rfh/stable.hpp"

namespace rfh {

/// Eigenvalue weighting of the series terms.
///   None       - plain series, lambda_n = 1
///   Paper      - lambda_n = e^{-i n pi} = (-1)^n, exactly real
///   Randomized - lambda_n = exp(-i pi Rand(n)), Rand(n) i.i.d. uniform [0,1)
enum class EigenMode { None, Paper, Randomized };

/// The triple (c_n, A_n(omega), lambda_n) plus evaluation machinery for the
/// partial sums S_n(y, omega). Immutable once built; A_n are tied to the one
/// path identified by path_seed.
struct RfhExpansion {
  int order = 0;
  std::vector<double> coeffs;                     ///< c_0 .. c_N
  std::vector<double> random_coeffs;              ///< A_0 .. A_N, same omega
  std::vector<std::complex<double>> eigenvalues;  ///< unit modulus
  EigenMode eigen_mode = EigenMode::None;
  HermiteBasis basis;
  std::uint64_t path_seed = 0;
};

/// c_n = \int f(t) phi_n(t) dt for n = 0..order, by the Gauss-Hermite rule.
/// Requires rule.order >= order + 16 so the high coefficients are not aliased.
std::vector<double> coefficients(const TestFunction& f, int order,
                                 const HermiteBasis& basis,
                                 const QuadratureRule& rule);

/// A_n = \int phi_n dX realized as the Riemann-Stieltjes sum on `path`,
/// all orders on the same path. The grid must span at least [-6, 6].
std::vector<double> random_coeffs(const HermiteBasis& basis, int order,
                                  const SamplePath& path);

/// lambda_0..lambda_order for the given mode; Randomized draws its unit
/// uniforms from `seed`.
std::vector<std::complex<double>> eigenvalue_sequence(EigenMode mode, int order,
                                                      std::uint64_t seed = 0);

RfhExpansion build_expansion(const TestFunction& f, int order,
                             const HermiteBasis& basis,
                             const QuadratureRule& rule, const SamplePath& path,
                             EigenMode mode = EigenMode::None,
                             std::uint64_t eigen_seed = 0);

/// S_n(y, omega) = sum_{k<=n} c_k lambda_k A_k H_k(y). Real in modes
/// None/Paper, complex in Randomized.
std::complex<double> partial_sum(const RfhExpansion& exp, double y, int n);

/// Bivariate kernel  f_n(y, t) = sum_{k<=n} c_k H_k(t) H_k(y) / norms[k].
double kernel_fn(const RfhExpansion& exp, double y, double t, int n);

/// Stochastic integral of the order-n_kernel eigenvalue-weighted kernel
/// against `path`, with the weight factor of the expansion's convention
/// (e^{-t^2} under PaperLiteral). When random_coeffs came from the same path
/// this equals partial_sum(exp, y, n_kernel) up to reassociation.
std::complex<double> target_integral(const RfhExpansion& exp, double y,
                                     int n_kernel, const SamplePath& path);

/// Truncated transform sum_{n<=N} c_n lambda_n phi_n(t) with randomized
/// unit-modulus eigenvalues; the paired inverse applies the conjugates.
struct RandomizedRft {
  std::vector<double> coeffs;
  std::vector<std::complex<double>> eigenvalues;
  HermiteBasis basis;

  std::complex<double> operator()(double t) const;  ///< forward transform
  std::complex<double> round_trip(double t) const;  ///< conjugates applied on top
  double plain(double t) const;                     ///< sum c_n phi_n(t)
};

/// rand_seq must lie in [0, 1); eigenvalues are exp(-i pi rand_seq[n]).
RandomizedRft randomized_rft(const TestFunction& f, int order,
                             std::span<const double> rand_seq,
                             const HermiteBasis& basis,
                             const QuadratureRule& rule);
RandomizedRft randomized_rft(const TestFunction& f, int order,
                             std::span<const double> rand_seq,
                             const HermiteBasis& basis);

/// sum |c_n|^2 of a complex coefficient sequence.
double coefficient_energy(std::span<const std::complex<double>> coeffs);

/// Weighted-L^2 distance \int |f - P_n f|^2 e^{-t^2} dt, where P_n is the
/// orthogonal projection onto span{H_0..H_n} in L^2(e^{-t^2}).
double projection_error(const TestFunction& f, int n, const HermiteBasis& basis,
                        const QuadratureRule& rule);

}  // namespace rfh

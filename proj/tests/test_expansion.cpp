#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "rfh/expansion.hpp"
#include "rfh/report.hpp"

using namespace rfh;

namespace {

const HermiteBasis& paper_basis() {
  static const HermiteBasis basis(200, WeightConvention::PaperLiteral);
  return basis;
}

RfhExpansion make_expansion(const char* fname, int order, std::uint64_t seed,
                            EigenMode mode = EigenMode::None) {
  const auto path = simulate_path(uniform_grid(6.0, 1e-3), 2.0, seed);
  return build_expansion(test_function(fname), order, paper_basis(),
                         gauss_hermite_rule(std::max(64, order + 16)), path,
                         mode);
}

}  // namespace

TEST_CASE("coefficients anchors") {
  const auto rule = gauss_hermite_rule(64);
  const auto c_odd = coefficients(test_function("t_gaussian"), 8, paper_basis(), rule);
  CHECK(std::abs(c_odd[0]) < 1e-14);
  CHECK(std::abs(c_odd[2]) < 1e-14);

  const auto c = coefficients(test_function("gaussian"), 8, paper_basis(), rule);
  CHECK(c[0] == doctest::Approx(0.94139626377671481).epsilon(1e-12));
  CHECK(std::abs(c[1]) < 1e-14);
  CHECK(c[2] == doctest::Approx(-0.33283384095).epsilon(1e-10));

  CHECK_THROWS_AS(
      coefficients(test_function("gaussian"), 60, paper_basis(), rule),
      std::invalid_argument);  // rule order must be >= order + 16
}

TEST_CASE("coefficient decay for the gaussian input") {
  const auto c = coefficients(test_function("gaussian"), 64, paper_basis(),
                              gauss_hermite_rule(96));
  CHECK(std::abs(c[64]) < 1e-10);
  // nonzero (even) coefficients decrease in magnitude from the start
  for (int m = 1; m + 1 <= 32; ++m)
    CHECK(std::abs(c[2 * (m + 1)]) < std::abs(c[2 * m]));
}

TEST_CASE("Parseval: coefficient energy is dominated by the weighted norm") {
  const auto rule = gauss_hermite_rule(96);
  for (const char* name : {"gaussian", "t_gaussian", "cauchy_kernel", "box01"}) {
    const auto& f = test_function(name);
    const auto c = coefficients(f, 64, paper_basis(), rule);
    double energy = 0.0;
    for (double ck : c) energy += ck * ck;
    const double norm2 = weighted_inner_product(f.eval, f.eval, rule);
    CHECK(energy <= norm2 + 1e-10);
  }
}

TEST_CASE("HalfWeight coefficients integrate against e^{-t^2/2}") {
  const HermiteBasis half(200, WeightConvention::HalfWeight);
  const auto c = coefficients(test_function("gaussian"), 4, half,
                              gauss_hermite_rule(64));
  // c_0 = \int e^{-t^2} e^{-t^2/2} dt / pi^{1/4} = sqrt(2 pi / 3) / pi^{1/4}
  const double expected =
      std::sqrt(2.0 * std::numbers::pi / 3.0) / std::pow(std::numbers::pi, 0.25);
  CHECK(c[0] == doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("random_coeffs determinism and span checking") {
  const auto path = simulate_path(uniform_grid(6.0, 1e-2), 2.0, 123);
  const auto a1 = random_coeffs(paper_basis(), 16, path);
  const auto a2 = random_coeffs(paper_basis(), 16, path);
  CHECK(a1 == a2);

  const auto short_path = simulate_path(uniform_grid(2.0, 1e-2), 2.0, 123);
  CHECK_THROWS_WITH_AS(random_coeffs(paper_basis(), 4, short_path),
                       doctest::Contains("[-6, 6]"), std::invalid_argument);
}

TEST_CASE("A_0 has variance sqrt(2) and is uncorrelated with A_1") {
  const int n = 10000;
  double ss0 = 0.0, s0 = 0.0, s1 = 0.0, ss1 = 0.0, s01 = 0.0;
  const auto grid = uniform_grid(6.0, 5e-3);
  for (int k = 0; k < n; ++k) {
    const auto path = simulate_path(grid, 2.0, derive_seed(77, k));
    const auto a = random_coeffs(paper_basis(), 1, path);
    s0 += a[0]; ss0 += a[0] * a[0];
    s1 += a[1]; ss1 += a[1] * a[1];
    s01 += a[0] * a[1];
  }
  const double var0 = ss0 / n - (s0 / n) * (s0 / n);
  CHECK(std::abs(var0 - std::numbers::sqrt2) < 0.05);
  const double corr = (s01 / n - s0 / n * s1 / n) /
                      std::sqrt(var0 * (ss1 / n - (s1 / n) * (s1 / n)));
  CHECK(std::abs(corr) < 0.03);
}

TEST_CASE("partial_sum anchors") {
  const auto exp = make_expansion("gaussian", 16, 5);
  const auto s0 = partial_sum(exp, 0.7, 0);
  CHECK(s0.real() ==
        doctest::Approx(exp.coeffs[0] * exp.random_coeffs[0]).epsilon(1e-15));
  CHECK(s0.imag() == 0.0);
  CHECK_THROWS_AS(partial_sum(exp, 0.0, 17), std::out_of_range);
}

TEST_CASE("Paper mode equals plain mode on even-only expansions") {
  const auto plain = make_expansion("gaussian", 16, 9, EigenMode::None);
  const auto paper = make_expansion("gaussian", 16, 9, EigenMode::Paper);
  for (double y : {-1.0, 0.0, 0.5, 2.0}) {
    const auto a = partial_sum(plain, y, 16);
    const auto b = partial_sum(paper, y, 16);
    // odd c_k vanish only to quadrature precision, so allow that slack
    CHECK(std::abs(a - b) <= 1e-10 * (1.0 + std::abs(a)));
  }
}

TEST_CASE("randomized mode with Rand(n) = 0 reduces to plain mode") {
  const auto path = simulate_path(uniform_grid(6.0, 1e-2), 2.0, 31);
  auto exp = build_expansion(test_function("gaussian"), 12, paper_basis(),
                             gauss_hermite_rule(64), path, EigenMode::Randomized);
  for (auto& l : exp.eigenvalues) l = {1.0, 0.0};  // Rand(n) = 0
  const auto plain = build_expansion(test_function("gaussian"), 12, paper_basis(),
                                     gauss_hermite_rule(64), path, EigenMode::None);
  for (double y : {-0.5, 0.0, 1.0})
    CHECK(partial_sum(exp, y, 12) == partial_sum(plain, y, 12));
}

TEST_CASE("eigenvalue sequences") {
  const auto paper = eigenvalue_sequence(EigenMode::Paper, 9);
  for (int n = 0; n <= 9; ++n) {
    CHECK(paper[static_cast<std::size_t>(n)].imag() == 0.0);
    CHECK(paper[static_cast<std::size_t>(n)].real() == (n % 2 == 0 ? 1.0 : -1.0));
  }
  const auto rand = eigenvalue_sequence(EigenMode::Randomized, 64, 11);
  for (const auto& l : rand) CHECK(std::abs(std::abs(l) - 1.0) < 1e-12);
  CHECK(rand == eigenvalue_sequence(EigenMode::Randomized, 64, 11));
}

TEST_CASE("kernel anchors, symmetry, and the brute-force route") {
  const auto exp = make_expansion("gaussian", 32, 13);
  CHECK(kernel_fn(exp, 0.3, 0.0, 0) ==
        doctest::Approx(exp.coeffs[0] / std::pow(std::numbers::pi, 0.25))
            .epsilon(1e-14));
  for (int n : {4, 9, 16}) {
    for (double y : {-1.0, 0.5}) {
      for (double t : {0.25, 2.0}) {
        const double a = kernel_fn(exp, y, t, n);
        const double b = kernel_fn(exp, t, y, n);
        CHECK(std::abs(a - b) <= 1e-12 * (1.0 + std::abs(a)));
      }
    }
  }
  // independent route: raw H_k and explicit norms, long double accumulation
  for (double y : {0.0, 0.5}) {
    long double acc = 0.0L;
    for (int k = 0; k <= 32; ++k) {
      acc += static_cast<long double>(exp.coeffs[static_cast<std::size_t>(k)]) *
             static_cast<long double>(hermite_poly(k, 0.4)) *
             static_cast<long double>(hermite_poly(k, y)) /
             expl(static_cast<long double>(paper_basis().log_norm(k)));
    }
    CHECK(kernel_fn(exp, y, 0.4, 32) ==
          doctest::Approx(static_cast<double>(acc)).epsilon(1e-11));
  }
}

TEST_CASE("representation identity: partial sums are the kernel integrals") {
  // the proof chain's discrete form, exact up to reassociation
  const auto path = simulate_path(uniform_grid(6.0, 1e-3), 2.0, 101);
  for (const auto mode : {EigenMode::None, EigenMode::Paper, EigenMode::Randomized}) {
    const auto exp = build_expansion(test_function("gaussian"), 32, paper_basis(),
                                     gauss_hermite_rule(64), path, mode);
    for (int n : {0, 1, 5, 17, 32}) {
      for (double y : {-2.0, -0.5, 0.0, 1.0}) {
        const auto s = partial_sum(exp, y, n);
        const auto t = target_integral(exp, y, n, path);
        CHECK(std::abs(s - t) <= 1e-9 * (1.0 + std::abs(s)));
      }
    }
  }
}

TEST_CASE("target_integral on a single-increment path") {
  const auto path = simulate_path({-7.0, 7.0}, 2.0, 19);
  const auto exp = build_expansion(test_function("gaussian"), 4, paper_basis(),
                                   gauss_hermite_rule(64), path);
  const auto got = target_integral(exp, 0.9, 0, path);
  // order 0: c_0 phi_0(t_0) dX_0
  const double expected =
      exp.coeffs[0] * phi(paper_basis(), 0, path.grid[0]) * path.increments[0];
  CHECK(got.real() == doctest::Approx(expected).epsilon(1e-12));
  CHECK(got.imag() == 0.0);
}

TEST_CASE("classical Fourier eigenrelation for the HalfWeight functions") {
  // (2pi)^{-1/2} \int phi_n(t) e^{-i xi t} dt = (-i)^n phi_n(xi); documents
  // the gap to the e^{-i n pi} weighting, which is asserted nowhere.
  const HermiteBasis half(64, WeightConvention::HalfWeight);
  const auto rule = gauss_hermite_rule(96);
  const std::complex<double> mi{0.0, -1.0};
  for (int n = 0; n <= 8; ++n) {
    std::complex<double> eig{1.0, 0.0};
    for (int k = 0; k < n; ++k) eig *= mi;
    for (double xi : {0.5, 1.0, 2.0}) {
      std::complex<double> acc{0.0, 0.0};
      for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        const double t = rule.nodes[i];
        // fold e^{+t^2} into the integrand to undo the rule's weight
        const double g = phi(half, n, t) * std::exp(t * t);
        acc += rule.weights[i] * g *
               std::complex<double>{std::cos(xi * t), -std::sin(xi * t)};
      }
      acc /= std::sqrt(2.0 * std::numbers::pi);
      const std::complex<double> expected = eig * phi(half, n, xi);
      CHECK(std::abs(acc - expected) < 1e-6);
    }
  }
}

TEST_CASE("randomized transform: zero sequence, round trip, isometry") {
  const auto& f = test_function("gaussian");
  const std::vector<double> zeros(33, 0.0);
  const auto rft0 = randomized_rft(f, 32, zeros, paper_basis());
  for (double t : {-1.5, 0.0, 0.25, 2.0}) {
    CHECK(rft0(t).imag() == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(rft0(t).real() == doctest::Approx(rft0.plain(t)).epsilon(1e-14));
  }

  std::vector<double> us(33);
  SplitMix64 rng(4);
  for (double& u : us) u = rng.next_unit();
  const auto rft = randomized_rft(f, 32, us, paper_basis());
  double energy = 0.0, plain_energy = 0.0;
  std::vector<std::complex<double>> weighted(rft.coeffs.size());
  for (std::size_t n = 0; n < rft.coeffs.size(); ++n) {
    weighted[n] = rft.coeffs[n] * rft.eigenvalues[n];
    plain_energy += rft.coeffs[n] * rft.coeffs[n];
  }
  energy = coefficient_energy(weighted);
  CHECK(std::abs(energy - plain_energy) <= 1e-12 * plain_energy);
  for (double t : {-2.0, -0.5, 0.0, 1.0, 3.0})
    CHECK(std::abs(rft.round_trip(t) - rft.plain(t)) <= 1e-12);

  std::vector<double> bad(33, 0.0);
  bad[7] = 1.0;  // outside [0, 1)
  CHECK_THROWS_AS(randomized_rft(f, 32, bad, paper_basis()),
                  std::invalid_argument);
}

TEST_CASE("projection_error anchors") {
  const auto rule = gauss_hermite_rule(96);
  // f already in the span: error vanishes
  TestFunction h2{"h2", [](double t) { return hermite_poly(2, t); }, 6.0, false,
                  nullptr, {}};
  CHECK(projection_error(h2, 2, paper_basis(), rule) <= 1e-12);
  CHECK(projection_error(h2, 5, paper_basis(), rule) <= 1e-12);

  // ||H_3||^2_w = 48 sqrt(pi)
  CHECK(projection_error(test_function("hermite3"), 2, paper_basis(), rule) ==
        doctest::Approx(85.077784843464769).epsilon(1e-9));

  // monotone in n for the catalog
  for (const char* name : {"gaussian", "t_gaussian", "box01", "h3_gauss"}) {
    const auto& f = test_function(name);
    double prev = projection_error(f, 0, paper_basis(), rule);
    for (int n = 1; n <= 64; n *= 2) {
      const double cur = projection_error(f, n, paper_basis(), rule);
      CHECK(cur <= prev + 1e-12);
      prev = cur;
    }
  }
}

TEST_CASE("projection_error cross-checked against the Parseval route") {
  const auto rule = gauss_hermite_rule(96);
  const auto& f = test_function("gaussian");
  const double direct = projection_error(f, 8, paper_basis(), rule);
  const double norm2 = weighted_inner_product(f.eval, f.eval, rule);
  const auto c = coefficients(f, 8, paper_basis(), rule);
  double energy = 0.0;
  for (double ck : c) energy += ck * ck;
  CHECK(direct == doctest::Approx(norm2 - energy).epsilon(1e-9));
}

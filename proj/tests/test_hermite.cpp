#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "rfh/hermite.hpp"

using namespace rfh;

namespace {

// extended-precision reference for phi_n, raw recurrence in long double
long double phi_direct_ld(int n, long double t, bool paper_literal) {
  long double hm = 1.0L, h = 2.0L * t;
  for (int k = 1; k < n; ++k) {
    const long double next = 2.0L * t * h - 2.0L * k * hm;
    hm = h;
    h = next;
  }
  const long double hn = (n == 0) ? hm : h;
  const long double norm =
      sqrtl(powl(2.0L, n) * sqrtl(std::numbers::pi_v<long double>) *
            tgammal(n + 1.0L));
  const long double w = paper_literal ? expl(-t * t) : expl(-0.5L * t * t);
  return hn * w / norm;
}

}  // namespace

TEST_CASE("hermite_poly matches the recurrence anchors") {
  CHECK(hermite_poly(0, 3.7) == 1.0);
  CHECK(hermite_poly(1, 1.5) == 3.0);
  CHECK(hermite_poly(2, 1.0) == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(hermite_poly(3, 0.0) == 0.0);
  CHECK(hermite_poly(4, 0.0) == doctest::Approx(12.0));
}

TEST_CASE("hermite_poly overflows to infinity, never to garbage") {
  const double v = hermite_poly(400, 25.0);
  CHECK(std::isinf(v));
  CHECK_FALSE(std::isnan(hermite_poly(500, 30.0)));
}

TEST_CASE("parity is exact in the recurrence arithmetic") {
  for (int n : {1, 2, 3, 7, 50, 101, 200}) {
    for (double t : {0.25, 1.0, 3.5, 6.0}) {
      const double sign = n % 2 == 0 ? 1.0 : -1.0;
      CHECK(hermite_poly(n, -t) == sign * hermite_poly(n, t));
      CHECK(hermite_normalized(n, -t) == sign * hermite_normalized(n, t));
    }
  }
}

TEST_CASE("basis norms are log-consistent") {
  const HermiteBasis basis(200);
  for (int n = 0; n < 200; ++n) {
    const double lhs = 2.0 * (basis.log_norm(n + 1) - basis.log_norm(n));
    CHECK(lhs == doctest::Approx(std::log(2.0 * (n + 1))).epsilon(1e-12));
  }
  CHECK(basis.norm(0) == doctest::Approx(std::pow(std::numbers::pi, 0.25)));
  CHECK(basis.norm_squared(3) ==
        doctest::Approx(48.0 * std::sqrt(std::numbers::pi)));
}

TEST_CASE("phi anchors") {
  const HermiteBasis paper(200, WeightConvention::PaperLiteral);
  const HermiteBasis half(200, WeightConvention::HalfWeight);
  CHECK(phi(paper, 1, 0.0) == 0.0);
  CHECK(phi(half, 1, 0.0) == 0.0);
  CHECK(phi(paper, 0, 0.0) == doctest::Approx(0.75112554446494248).epsilon(1e-14));
  // frozen from an extended-precision evaluation of H_50(8)e^{-32}/norms[50]
  CHECK(phi(half, 50, 8.0) ==
        doctest::Approx(0.047942176518869945).epsilon(1e-11));
  CHECK(std::abs(phi(half, 50, 8.0)) < 1.0);
  CHECK_THROWS_AS(phi(paper, 201, 0.0), std::out_of_range);
}

TEST_CASE("normalized recurrence agrees with extended precision to 1e-9") {
  const HermiteBasis paper(200, WeightConvention::PaperLiteral);
  const HermiteBasis half(200, WeightConvention::HalfWeight);
  for (int n = 0; n <= 200; n += (n < 20 ? 1 : 7)) {
    for (int ti = -6; ti <= 6; ++ti) {
      const double t = ti;
      const auto ref_p = static_cast<double>(phi_direct_ld(n, t, true));
      const auto ref_h = static_cast<double>(phi_direct_ld(n, t, false));
      const double got_p = phi(paper, n, t);
      const double got_h = phi(half, n, t);
      CHECK(std::abs(got_p - ref_p) <= 1e-9 * (std::abs(ref_p) + 1e-300));
      CHECK(std::abs(got_h - ref_h) <= 1e-9 * (std::abs(ref_h) + 1e-300));
    }
  }
}

TEST_CASE("gauss_hermite_rule small orders are exact") {
  const auto r1 = gauss_hermite_rule(1);
  REQUIRE(r1.nodes.size() == 1);
  CHECK(r1.nodes[0] == 0.0);
  CHECK(r1.weights[0] == doctest::Approx(std::sqrt(std::numbers::pi)).epsilon(1e-14));

  const auto r2 = gauss_hermite_rule(2);
  REQUIRE(r2.nodes.size() == 2);
  CHECK(r2.nodes[0] == doctest::Approx(-1.0 / std::numbers::sqrt2).epsilon(1e-14));
  CHECK(r2.nodes[1] == doctest::Approx(1.0 / std::numbers::sqrt2).epsilon(1e-14));
  CHECK(r2.weights[0] == doctest::Approx(0.88622692545275801).epsilon(1e-14));
  CHECK(r2.weights[1] == doctest::Approx(0.88622692545275801).epsilon(1e-14));

  CHECK_THROWS_AS(gauss_hermite_rule(0), std::invalid_argument);
  CHECK_THROWS_AS(gauss_hermite_rule(257), std::invalid_argument);
}

TEST_CASE("gauss_hermite_rule integrates moments exactly and sums to sqrt(pi)") {
  // \int t^{2j} e^{-t^2} dt = sqrt(pi) (2j)!/(4^j j!)
  const double moments[] = {1.7724538509055160, 0.88622692545275801,
                            1.3293403881791370, 3.3233509704478426,
                            11.631728396567449};
  for (int m : {2, 5, 16, 33, 64, 129, 256}) {
    const auto rule = gauss_hermite_rule(m);
    double wsum = 0.0;
    for (double w : rule.weights) wsum += w;
    CHECK(std::abs(wsum - std::sqrt(std::numbers::pi)) < 1e-12);
    for (int j = 0; j <= 4 && 2 * j <= 2 * m - 1; ++j) {
      double s = 0.0;
      for (std::size_t i = 0; i < rule.nodes.size(); ++i)
        s += rule.weights[i] * std::pow(rule.nodes[i], 2 * j);
      CHECK(s == doctest::Approx(moments[j]).epsilon(1e-12));
    }
    // node symmetry is exact by construction
    for (std::size_t i = 0; i < rule.nodes.size() / 2; ++i)
      CHECK(rule.nodes[i] == -rule.nodes[rule.nodes.size() - 1 - i]);
  }
}

TEST_CASE("weighted_inner_product anchors") {
  const auto rule = gauss_hermite_rule(8);
  const auto h1 = [](double t) { return 2.0 * t; };
  const auto h2 = [](double t) { return 4.0 * t * t - 2.0; };
  const auto one = [](double) { return 1.0; };
  CHECK(weighted_inner_product(h1, h1, rule) ==
        doctest::Approx(2.0 * std::sqrt(std::numbers::pi)).epsilon(1e-14));
  CHECK(weighted_inner_product(h1, h2, rule) == doctest::Approx(0.0).epsilon(1e-13));
  CHECK(weighted_inner_product(one, one, rule) ==
        doctest::Approx(std::sqrt(std::numbers::pi)).epsilon(1e-14));

  const auto bad = [](double t) {
    return t == 0.0 ? 1.0 : std::numeric_limits<double>::quiet_NaN();
  };
  CHECK_THROWS_AS(weighted_inner_product(bad, one, gauss_hermite_rule(3)),
                  EvaluationError);
}

TEST_CASE("orthogonality of H_m H_n against e^{-t^2} to 1e-10 relative") {
  // Off-diagonal entries are measured against the pair scale
  // norm(m) * norm(n): the exact sum is zero, and with terms of size
  // w |H_m H_n| no double-precision evaluation can cancel finer than that.
  const HermiteBasis basis(32);
  const auto rule = gauss_hermite_rule(32);
  for (int mm = 0; mm <= 20; ++mm) {
    for (int nn = 0; nn <= 20; ++nn) {
      const double got = weighted_inner_product(
          [&](double t) { return hermite_poly(mm, t); },
          [&](double t) { return hermite_poly(nn, t); }, rule);
      const double expected = mm == nn ? basis.norm_squared(nn) : 0.0;
      const double scale = basis.norm(mm) * basis.norm(nn);
      CHECK(std::abs(got - expected) <= 1e-10 * scale);
    }
  }
}

TEST_CASE("HalfWeight phi_n are orthonormal in L^2(dt)") {
  const HermiteBasis half(64, WeightConvention::HalfWeight);
  // \int phi_m phi_n dt = \int (H_m/norm_m)(H_n/norm_n) e^{-t^2} dt
  const auto rule = gauss_hermite_rule(64);
  for (int nn : {0, 1, 5, 20}) {
    const double ip = weighted_inner_product(
        [&](double t) { return hermite_normalized(nn, t); },
        [&](double t) { return hermite_normalized(nn, t); }, rule);
    CHECK(ip == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("tanh_sinh_rule handles plain and endpoint-singular integrands") {
  const auto rule = tanh_sinh_rule(0.0, 1.0, 8);
  const auto one = [](double) { return 1.0; };
  double s = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i)
    s += rule.weights[i] * rule.nodes[i] * rule.nodes[i];
  CHECK(s == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
  // integrable singularity at the left endpoint: \int_0^1 t^{-1/2} dt = 2
  const double sing = weighted_inner_product(
      [](double t) { return 1.0 / std::sqrt(t); }, one, rule);
  CHECK(sing == doctest::Approx(2.0).epsilon(1e-10));
}

TEST_CASE("integrate_adaptive on smooth and kinked integrands") {
  CHECK(integrate_adaptive([](double t) { return std::exp(-t); }, 0.0, 10.0) ==
        doctest::Approx(1.0 - std::exp(-10.0)).epsilon(1e-12));
  CHECK(integrate_adaptive([](double t) { return std::abs(t); }, -1.0, 2.0) ==
        doctest::Approx(2.5).epsilon(1e-10));
}

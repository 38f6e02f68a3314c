#include <doctest.h>

#include <cmath>

#include "gale/domains.hpp"
#include "gale/windows.hpp"
#include "test_support.hpp"

using namespace gale;
using gale::testing::Rng;

namespace {

constexpr double kTauFull = kPi + kDefaultEpsilon * kPi;

// Composite Simpson rule for the real part of the transform (the window is even,
// so the imaginary part vanishes). t = tau sin(phi) removes the square-root
// behaviour at the support edges.
double kb_hat_quadrature(double beta, double tau, double omega) {
  const int panels = 4000;
  const double h = kPi / panels;
  double total = 0.0;
  for (int k = 0; k <= panels; ++k) {
    const double phi = -kPi / 2 + k * h;
    const double t = tau * std::sin(phi);
    const double weight = (k == 0 || k == panels) ? 1.0 : (k % 2 == 1 ? 4.0 : 2.0);
    total += weight * kb_window(beta, tau, t) * std::cos(omega * t) * tau * std::cos(phi);
  }
  return total * h / 3.0;
}

}  // namespace

TEST_CASE("bessel_i0 frozen values") {
  // References computed with 40-digit arithmetic.
  CHECK(bessel_i0(0.0) == 1.0);
  CHECK(bessel_i0(1.0) == doctest::Approx(1.2660658777520083356).epsilon(1e-14));
  CHECK(bessel_i0(10.0) == doctest::Approx(2815.7166284662544715).epsilon(1e-14));
  CHECK(bessel_i0(15.0) == doctest::Approx(339649.37329791387952).epsilon(1e-13));
  CHECK(bessel_i0(40.0) == doctest::Approx(14894774793419899.924).epsilon(1e-13));
  CHECK_THROWS_AS(bessel_i0(-1.0), InvalidArgument);
}

TEST_CASE("bessel_i0 is continuous across the series/asymptotic switch") {
  const double below = bessel_i0(std::nextafter(15.0, 0.0));
  const double at = bessel_i0(15.0);
  CHECK(std::abs(at - below) / at < 1e-13);
}

TEST_CASE("bessel_i0 satisfies its differential recurrence numerically") {
  // I0'' + I0'/x - I0 = 0, checked with central differences.
  Rng rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const double x = rng.uniform(0.5, 60.0);
    const double h = 1e-3;
    const double f0 = bessel_i0(x);
    const double fp = bessel_i0(x + h);
    const double fm = bessel_i0(x - h);
    const double d1 = (fp - fm) / (2 * h);
    const double d2 = (fp - 2 * f0 + fm) / (h * h);
    CHECK(std::abs(d2 + d1 / x - f0) / f0 < 1e-6);
  }
}

TEST_CASE("kb_window") {
  // I0(5 sqrt(0.75)) / I0(5), 40-digit reference.
  CHECK(kb_window(5.0, kPi, kPi / 2) == doctest::Approx(0.55285176969913249589).epsilon(1e-14));
  CHECK(kb_window(5.0, kPi, 0.0) == 1.0);
  CHECK(kb_window(5.0, kPi, kPi + 1e-9) == 0.0);
  CHECK(kb_window(5.0, kPi, -0.7) == kb_window(5.0, kPi, 0.7));
}

TEST_CASE("kb_window_hat frozen values") {
  const double beta = 6 * kPi;
  // Closed form and adaptive quadrature agree on these to all printed digits.
  CHECK(kb_window_hat(beta, kTauFull, 1.5) ==
        doctest::Approx(0.33301681987977023826).epsilon(1e-13));
  CHECK(kb_window_hat(beta, kTauFull, 7.3) ==
        doctest::Approx(-1.7472006126169866786e-8).epsilon(1e-9));
}

TEST_CASE("kb_window_hat matches quadrature") {
  Rng rng(17);
  for (int trial = 0; trial < 25; ++trial) {
    const double tau = rng.uniform(3.2, 6.2);
    const double beta = rng.integer(2, 8) * tau;
    const double omega = rng.uniform(-12.0, 12.0);
    CHECK(std::abs(kb_window_hat(beta, tau, omega) - kb_hat_quadrature(beta, tau, omega)) < 1e-8);
  }
  // Both branches near z = 0.
  const double tau = 4.0;
  const double beta = 12.0;
  for (double omega : {2.9999999, 3.0, 3.0000001}) {
    CHECK(std::abs(kb_window_hat(beta, tau, omega) - kb_hat_quadrature(beta, tau, omega)) < 1e-8);
  }
}

TEST_CASE("window_params") {
  const auto p = window_params(0, 16, 16, 40, 4, 0.0);
  CHECK(p.alpha == 0.0);
  CHECK(p.varpi == 0.0);
  CHECK(p.tau == doctest::Approx(kTauFull));
  CHECK(p.beta == doctest::Approx(4 * kTauFull));

  const auto q = window_params(3, 16, 16, 40, 4, kPi / 16);
  CHECK(q.alpha == doctest::Approx(4.0 * 3 / 16 - 2.0 / 16));
  CHECK(q.varpi == doctest::Approx(kPi * 15 * q.alpha / 40));
  CHECK(q.tau == doctest::Approx(kPi + kDefaultEpsilon * (kPi - std::abs(q.varpi))));

  CHECK_THROWS_WITH_AS(window_params(0, 16, 16, 30, 4, 0.0), doctest::Contains("N_L >= 2n"),
                       InvalidArgument);
  CHECK_THROWS_WITH_AS(window_params(0, 16, 16, 34, 4, 0.0), doctest::Contains("divisible by 4"),
                       InvalidArgument);
  CHECK_THROWS_WITH_AS(window_params(0, 16, 16, 40, 4, 0.3), doctest::Contains("pi/(n-1)"),
                       InvalidArgument);
  CHECK_THROWS_AS(window_params(0, 16, 16, 40, 4, 0.0, 1.0), InvalidArgument);
  CHECK_THROWS_AS(window_params(0, 15, 16, 40, 4, 0.0), InvalidArgument);
}

TEST_CASE("error_bound") {
  WindowParams p;
  p.tau = kTauFull;
  p.beta = 2 * kTauFull;
  // 29.5 / (pi I0(2 tau)), 40-digit reference.
  CHECK(error_bound(2, p, 1.0) == doctest::Approx(2.8814765790321124663e-4).epsilon(1e-13));
  CHECK(error_bound(2, p, 3.0) == doctest::Approx(3 * error_bound(2, p, 1.0)));
  CHECK_THROWS_WITH_AS(error_bound(1, p, 1.0), doctest::Contains("1 < S <= 15"), InvalidArgument);
  CHECK_THROWS_AS(error_bound(16, p, 1.0), InvalidArgument);
}

TEST_CASE("error_bound decreases with S and grows with |varpi|") {
  Rng rng(23);
  for (int trial = 0; trial < 200; ++trial) {
    const int M = 2 * rng.integer(4, 64);
    const int n = rng.integer(2, M);
    const int NL = 4 * rng.integer((2 * n + 3) / 4, n + 8);
    const int I = rng.integer(-M / 2 + 1, M / 2);
    const auto a = window_params(I, M, n, NL, 2, 0.0);
    const auto b = window_params(I, M, n, NL, 3, 0.0);
    CHECK(error_bound(3, b, 1.0) < error_bound(2, a, 1.0));
    const auto c = window_params(std::abs(I) + 1, M, n, NL, 2, 0.0);
    if (std::abs(I) + 1 <= M / 2) CHECK(error_bound(2, c, 1.0) >= error_bound(2, a, 1.0));
  }
}

#include "gale/windows.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "gale/domains.hpp"
#include "gale/types.hpp"

namespace gale {
namespace {

constexpr double kSeriesCutoff = 15.0;

double bessel_i0_series(double x) {
  const double q = 0.25 * x * x;
  double term = 1.0;
  double sum = 1.0;
  for (int k = 1; k < 500; ++k) {
    term *= q / (static_cast<double>(k) * k);
    sum += term;
    if (term < 1e-17 * sum) break;
  }
  return sum;
}

double bessel_i0_asymptotic(double x) {
  // e^x / sqrt(2 pi x) * sum_k ((2k-1)!!)^2 / (k! (8x)^k), truncated at the smallest term.
  double term = 1.0;
  double sum = 1.0;
  for (int k = 0; k < 200; ++k) {
    const double next = term * (2.0 * k + 1.0) * (2.0 * k + 1.0) / (8.0 * x * (k + 1.0));
    if (next >= term || next < 1e-18 * sum) break;
    term = next;
    sum += term;
  }
  const double half = std::exp(0.5 * x);
  return half * (half * sum / std::sqrt(2.0 * kPi * x));
}

// sinh(z)/z for z >= 0 (hyperbolic branch) or sin(z)/z (oscillatory branch).
double sinhc(double z) {
  if (z < 1e-4) {
    const double z2 = z * z;
    return 1.0 + z2 / 6.0 + z2 * z2 / 120.0;
  }
  return std::sinh(z) / z;
}

double sinc(double z) {
  if (z < 1e-4) {
    const double z2 = z * z;
    return 1.0 - z2 / 6.0 + z2 * z2 / 120.0;
  }
  return std::sin(z) / z;
}

}  // namespace

double bessel_i0(double x) {
  require(std::isfinite(x) && x >= 0.0, "bessel_i0: argument must be finite and non-negative");
  return x < kSeriesCutoff ? bessel_i0_series(x) : bessel_i0_asymptotic(x);
}

double kb_window(double beta, double tau, double t) {
  require(tau > 0.0 && beta > 0.0, "kb_window: beta and tau must be positive");
  const double u = t / tau;
  if (std::abs(u) > 1.0) return 0.0;
  return bessel_i0(beta * std::sqrt(1.0 - u * u)) / bessel_i0(beta);
}

double kb_window_hat(double beta, double tau, double omega) {
  require(tau > 0.0 && beta > 0.0, "kb_window_hat: beta and tau must be positive");
  const double a = omega * tau;
  const double d = beta * beta - a * a;
  const double scale = 2.0 * tau / bessel_i0(beta);
  if (d > 0.0) return scale * sinhc(std::sqrt(d));
  if (d < 0.0) return scale * sinc(std::sqrt(-d));
  return scale;
}

WindowParams window_params(int shifted_index, int M, int n, int fourier_length, int S,
                           double sigma, double epsilon) {
  require(M > 0 && M % 2 == 0, "window_params: M must be a positive even integer");
  require(n >= 1, "window_params: n must be positive");
  require(fourier_length >= 2 * n, "window_params: N_L >= 2n violated");
  require(fourier_length % 4 == 0, "window_params: N_L must be divisible by 4");
  require(S >= 1, "window_params: S must be at least 1");
  require(epsilon > 0.0 && epsilon < 1.0, "window_params: epsilon must lie in (0, 1)");
  if (n > 1) {
    require(std::abs(sigma) < kPi / (n - 1), "window_params: |sigma| < pi/(n-1) violated");
  }
  WindowParams p;
  p.alpha = 4.0 * shifted_index / M - 2.0 * sigma / kPi;
  p.varpi = kPi * (n - 1) * p.alpha / fourier_length;
  p.tau = kPi + epsilon * (kPi - std::abs(p.varpi));
  p.beta = S * p.tau;
  return p;
}

double error_bound(int S, const WindowParams& params, double x_l1) {
  require(S > 1 && S <= 15, "error_bound: the bound is only established for 1 < S <= 15");
  require(params.tau * params.tau > params.varpi * params.varpi,
          "error_bound: tau^2 > varpi^2 required");
  require(x_l1 >= 0.0, "error_bound: ||x||_1 must be non-negative");
  const double arg = S * std::sqrt(params.tau * params.tau - params.varpi * params.varpi);
  return 29.5 * x_l1 / (kPi * bessel_i0(arg));
}

}  // namespace gale

#pragma once

// Kaiser-Bessel windows, their continuous Fourier transforms, the per-row
// window parameters used by the transform, and the a-priori error bound.

namespace gale {

/// epsilon in tau = pi + epsilon * (pi - |varpi|).
inline constexpr double kDefaultEpsilon = 1.0 - 1e-4;

/// Parameters of the window attached to one frequency row I.
struct WindowParams {
  double alpha = 0.0;  ///< 4(I - R1)/M - 2 sigma / pi
  double varpi = 0.0;  ///< window centre, pi (n-1) alpha / N_L
  double tau = 0.0;    ///< half support, pi + epsilon (pi - |varpi|)
  double beta = 0.0;   ///< shape, S * tau
};

/// Modified Bessel function of the first kind, order zero. Relative error
/// below 1e-12 on [0, 200]; power series below 15, asymptotic series above.
double bessel_i0(double x);

/// I0(beta sqrt(1 - (t/tau)^2)) / I0(beta) on |t| <= tau, zero outside.
double kb_window(double beta, double tau, double t);

/// Continuous Fourier transform of kb_window, integral K(t) e^{-i omega t} dt.
double kb_window_hat(double beta, double tau, double omega);

/// Window parameters for the frequency row with shifted index I - R1.
/// Throws InvalidArgument when N_L < 2n, N_L % 4 != 0, |sigma| >= pi/(n-1),
/// epsilon outside (0, 1) or S < 1.
WindowParams window_params(int shifted_index, int M, int n, int fourier_length, int S,
                           double sigma, double epsilon = kDefaultEpsilon);

/// 29.5 ||x||_1 / (pi I0(S sqrt(tau^2 - varpi^2))): bound on the truncation
/// error at every point of the row described by `params`. Requires 1 < S <= 15.
double error_bound(int S, const WindowParams& params, double x_l1);

}  // namespace gale

#pragma once

// Chirp-Z transform
//
//   czt(x)[I] = sum_{i<m} x_i exp(-i 2 pi i (I - R) alpha / M),  I = 0..P-1
//
// evaluated as a circular convolution of length Q (Bluestein):
// premodulate by r, FFT, multiply by q_hat, inverse FFT, postmodulate by s.

#include <cstddef>
#include <cstdint>
#include <span>

#include "gale/fftcore.hpp"
#include "gale/types.hpp"

namespace gale {

struct CztPlan {
  std::size_t input_length = 0;   ///< m
  std::size_t output_length = 0;  ///< P
  double alpha = 0.0;
  std::int64_t modulus = 1;  ///< M
  std::int64_t shift = 0;    ///< R
  ComplexVector q_hat;       ///< FFT of the chirp, length convolution_length()
  ComplexVector premod;      ///< r, length m
  ComplexVector postmod;     ///< s, length P, unit modulus
  const fft::Plan* conv_plan = nullptr;

  /// Smallest 7-smooth Q >= max(2P, P + m - 1).
  std::size_t convolution_length() const noexcept { return q_hat.size(); }
};

CztPlan czt_init(std::size_t m, double alpha, std::int64_t modulus, std::size_t P,
                 std::int64_t shift);

ComplexVector czt_apply(std::span<const Complex> x, const CztPlan& plan);
ComplexVector czt_adjoint(std::span<const Complex> y, const CztPlan& plan);

/// Allocation-free variants. `work` must have plan.convolution_length() entries
/// and is clobbered.
void czt_apply(std::span<const Complex> x, const CztPlan& plan, std::span<Complex> out,
               std::span<Complex> work);
void czt_adjoint(std::span<const Complex> y, const CztPlan& plan, std::span<Complex> out,
                 std::span<Complex> work);

}  // namespace gale

#pragma once

// 1-D DFT building blocks: padded forward FFT, truncated inverse FFT, range
// shift modulation and the adjoints of the first two.
//
//   fft_padded(x, M)[I]     = sum_{i<m} x_i e^{-i 2 pi i I / M},     I < M
//   ifft_truncated(y, m)[i] = (1/M) sum_{I<M} y_I e^{+i 2 pi I i / M}, i < m
//
// and ifft_truncated(., m) = (1/M) * adjoint(fft_padded(., M)).

#include <cstddef>
#include <cstdint>
#include <span>

#include "gale/types.hpp"

namespace gale::fft {

/// Immutable in-place transform of one length. Obtain through plan_for();
/// execution is safe from any number of threads.
class Plan {
 public:
  ~Plan();
  Plan(const Plan&) = delete;
  Plan& operator=(const Plan&) = delete;

  std::size_t length() const noexcept { return length_; }
  /// Unnormalized forward DFT (e^{-i...}) in place.
  void forward(std::span<Complex> data) const;
  /// Unnormalized backward DFT (e^{+i...}) in place; no 1/n factor.
  void backward(std::span<Complex> data) const;

 private:
  friend const Plan& plan_for(std::size_t length);
  explicit Plan(std::size_t length);

  std::size_t length_;
  void* forward_ = nullptr;
  void* backward_ = nullptr;
};

/// Cached plan for `length`; built on first request, never invalidated.
const Plan& plan_for(std::size_t length);

/// Total number of forward/backward executions since process start.
std::uint64_t transform_count() noexcept;

ComplexVector fft_padded(std::span<const Complex> x, std::size_t M);
ComplexVector ifft_truncated(std::span<const Complex> y, std::size_t m);

/// M * ifft_truncated(y, m): the exact adjoint of fft_padded(., M).
ComplexVector fft_padded_adjoint(std::span<const Complex> y, std::size_t m);
/// fft_padded(x, M) / M: the exact adjoint of ifft_truncated(., m).
ComplexVector ifft_truncated_adjoint(std::span<const Complex> x, std::size_t M);

/// weights[i] = e^{+i 2 pi i R / M}; pre-multiplying by these moves the output
/// range of fft_padded from {0..M-1} to {-R..M-1-R}.
ComplexVector range_shift_weights(std::size_t m, std::int64_t R, std::size_t M);

}  // namespace gale::fft

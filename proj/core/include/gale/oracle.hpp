#pragma once

// Brute-force DTFT
//   D[x](xi, upsilon) = sum_{i,j} x_{i,j} e^{-i (j xi + i upsilon)}
// and its conjugate transpose. O(mn) work per point, Kahan-compensated,
// summed i-outer / j-inner. Slow on purpose: this is the reference every
// fast path is measured against.

#include <cstddef>
#include <span>
#include <vector>

#include "gale/domains.hpp"
#include "gale/linear_operator.hpp"
#include "gale/types.hpp"

namespace gale {

ComplexVector dtft_direct(const ComplexImage& x, std::span<const FreqPoint> points,
                          int threads = 1);

ComplexImage dtft_adjoint_direct(std::span<const Complex> values,
                                 std::span<const FreqPoint> points, std::size_t m,
                                 std::size_t n, int threads = 1);

/// K-major point values (as ordered by galfd_points) to an M x N RaySamples and back.
RaySamples points_to_ray_samples(std::span<const Complex> values, std::size_t M, std::size_t N);
ComplexVector ray_samples_to_points(const RaySamples& y);

/// The exact DTFT on a golden-angle linogram domain, as a LinearOperator.
class DirectGalfdOperator final : public LinearOperator {
 public:
  DirectGalfdOperator(const GalfdSpec& spec, std::size_t m, std::size_t n, int threads = 1);

  std::size_t image_rows() const override { return m_; }
  std::size_t image_cols() const override { return n_; }
  std::size_t samples_per_ray() const override { return M_; }
  std::size_t ray_count() const override { return N_; }

  RaySamples forward(const ComplexImage& x) const override;
  ComplexImage adjoint(const RaySamples& y) const override;

 private:
  std::vector<FreqPoint> points_;
  std::size_t m_;
  std::size_t n_;
  std::size_t M_;
  std::size_t N_;
  int threads_;
};

}  // namespace gale

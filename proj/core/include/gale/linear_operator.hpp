#pragma once

#include <cstddef>

#include "gale/types.hpp"

namespace gale {

/// A linear map from m x n images to M x N ray samples together with its adjoint.
class LinearOperator {
 public:
  virtual ~LinearOperator() = default;

  virtual std::size_t image_rows() const = 0;
  virtual std::size_t image_cols() const = 0;
  virtual std::size_t samples_per_ray() const = 0;
  virtual std::size_t ray_count() const = 0;

  virtual RaySamples forward(const ComplexImage& x) const = 0;
  virtual ComplexImage adjoint(const RaySamples& y) const = 0;
};

}  // namespace gale

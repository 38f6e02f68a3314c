#pragma once

// Error metrics for comparing an approximation yhat against a reference y.

#include <cstddef>
#include <span>

#include "gale/types.hpp"

namespace gale {

struct ErrorReport {
  double mre = 0.0;
  double rse = 0.0;
  double max_abs = 0.0;
  double max_abs_bound = 0.0;  ///< largest a-priori bound over the compared points
};

/// Mean of |y - yhat| / |y|. Throws InvalidArgument naming the first zero entry of y.
double mre(std::span<const Complex> y, std::span<const Complex> yhat);

/// Same, skipping entries where y == 0; `skipped` receives their count.
double mre_skip_zeros(std::span<const Complex> y, std::span<const Complex> yhat,
                      std::size_t& skipped);

/// sum |y - yhat|^2 / sum |y|^2. Throws when y is identically zero.
double rse(std::span<const Complex> y, std::span<const Complex> yhat);

double max_abs_error(std::span<const Complex> y, std::span<const Complex> yhat);

double l1_norm(std::span<const Complex> x);
double l2_norm(std::span<const Complex> x);

inline double l1_norm(const ComplexImage& x) { return l1_norm(x.values()); }

}  // namespace gale

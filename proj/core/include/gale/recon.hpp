#pragma once

// Reconstruction from golden-angle linogram samples: the density-compensated
// adjoint (filtered backprojection) with root-sum-of-squares coil combine,
// conjugate gradients on the normal equations and a relaxed Landweber iteration.

#include <cstddef>
#include <vector>

#include "gale/domains.hpp"
#include "gale/gale.hpp"
#include "gale/linear_operator.hpp"
#include "gale/types.hpp"

namespace gale {

enum class Direction { forward, adjoint };

/// Z: multiplies sample (I, K) by e^{+-i((n/2) xi + (m/2) upsilon)} / (mn);
/// the sign is + for forward and - for adjoint.
RaySamples apply_z(const RaySamples& y, const GalfdSpec& spec, std::size_t m, std::size_t n,
                   Direction direction);

/// Density compensation: multiplies sample (I, K) by sqrt(xi^2 + upsilon^2).
RaySamples apply_dcf(const RaySamples& y, const GalfdSpec& spec);

struct CoilData {
  std::vector<RaySamples> coils;
};

/// Per coil x_c = A* Z* C y_c with A the given operator, then
/// x = sqrt(sum_c |x_c|^2). Returns a real image.
ComplexImage fbp_reconstruct(const CoilData& data, const LinearOperator& op,
                             const GalfdSpec& spec);
ComplexImage fbp_reconstruct(const CoilData& data, const GalfdSpec& spec, std::size_t m,
                             std::size_t n, const GaleSettings& settings = {});

struct CgResult {
  ComplexImage x;
  std::vector<double> residual_norms;         ///< ||y - A x_k||, k = 0..iterations
  std::vector<double> normal_residual_norms;  ///< ||A*(y - A x_k)||
  bool breakdown = false;
  int iterations = 0;
};

/// Conjugate gradients on A*A x = A*y (CGLS form), `iters` steps from x0.
/// Stops early with breakdown set when a search direction has zero curvature.
CgResult cg_least_squares(const LinearOperator& op, const RaySamples& y, const ComplexImage& x0,
                          int iters);

struct SolverConfig {
  int iters = 10;
  double lambda = 1.0;
  double r = 1.0;
  ComplexImage mu;  ///< prior image; empty means zero
  ComplexImage x0;  ///< empty means zero
};

/// x + lambda (r^2 A*(y - A x) + (mu - x)).
ComplexImage landweber_step(const LinearOperator& op, const ComplexImage& x, const RaySamples& y,
                            double lambda, double r, const ComplexImage& mu);

ComplexImage landweber(const LinearOperator& op, const RaySamples& y, const SolverConfig& config);

}  // namespace gale

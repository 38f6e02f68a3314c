#pragma once

// Golden Angle Linogram Evaluation.
//
// For one family of rays with theta in [pi/4, 3pi/4] the transform is
//   G = L C F D
// D: row modulation by p, F: n padded FFTs of length M (one per column),
// C: M chirp-z transforms of length P = N_L/2 + 2(S+1) (one per frequency row,
//    with the Kaiser-Bessel deapodization folded into the CZT premodulation),
// L: per (row, ray) truncated sums of at most 2S+1 weighted CZT outputs.
// The adjoint is D* F* C* L* and reuses the same plan.
//
// Rays with theta in [3pi/4, 5pi/4) are evaluated by running the same
// machinery on the transposed image (GalfdOperator takes care of both).

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "gale/czt.hpp"
#include "gale/domains.hpp"
#include "gale/fftcore.hpp"
#include "gale/linear_operator.hpp"
#include "gale/types.hpp"
#include "gale/windows.hpp"

namespace gale {

/// Work done by one gale_apply / gale_adjoint call.
struct GaleCounters {
  std::uint64_t column_ffts = 0;
  std::uint64_t czt_calls = 0;
  std::uint64_t accumulations = 0;
};

struct ApplyOptions {
  int threads = 1;
  GaleCounters* counters = nullptr;
};

/// Precomputed state for one ray family. Immutable after gale_init and safe
/// to share between threads.
struct GalePlan {
  std::size_t m = 0;  ///< image rows
  std::size_t n = 0;  ///< image columns
  int M = 0;
  int fourier_length = 0;  ///< N_L
  int S = 0;
  int row_shift = 0;  ///< R1: row I of the output holds shifted index I - R1
  int czt_shift = 0;  ///< R2
  double sigma = 0.0;
  double epsilon = 0.0;

  std::vector<double> thetas;
  std::vector<double> eta;  ///< N_L cot(theta_K) / 4

  ComplexVector p;                    ///< length m
  std::vector<CztPlan> czt;           ///< one per row, premodulation divided by the window
  std::vector<WindowParams> windows;  ///< one per row

  // Truncated-sum stencil. The CZT indices of ray K are the contiguous range
  // [v_first[K], v_first[K] + u[K]) for every row; weights differ per row.
  std::vector<std::size_t> v_first;
  std::vector<std::size_t> u;
  std::vector<std::size_t> w_offset;
  std::size_t terms_per_row = 0;
  ComplexVector w;  ///< M * terms_per_row

  const fft::Plan* column_plan = nullptr;

  std::size_t rays() const noexcept { return thetas.size(); }
  std::size_t czt_length() const noexcept {
    return static_cast<std::size_t>(fourier_length / 2 + 2 * (S + 1));
  }
  std::span<const Complex> weights(std::size_t row, std::size_t ray) const noexcept {
    return {w.data() + row * terms_per_row + w_offset[ray], u[ray]};
  }
};

/// Builds the plan for rays `thetas` (each in [pi/4, 3pi/4]) over an m x n image.
/// Throws InvalidArgument naming the violated constraint: M even and >= m,
/// N_L >= 2n and divisible by 4, 1 < S <= 15, |sigma| < pi/(n-1), epsilon in (0,1).
GalePlan gale_init(std::span<const double> thetas, std::size_t m, std::size_t n, int M,
                   int fourier_length, int S, int row_shift, int czt_shift, double sigma,
                   double epsilon = kDefaultEpsilon);

RaySamples gale_apply(const ComplexImage& x, const GalePlan& plan, const ApplyOptions& opts = {});
ComplexImage gale_adjoint(const RaySamples& y, const GalePlan& plan,
                          const ApplyOptions& opts = {});

struct GaleSettings {
  int fourier_length = 0;  ///< 0 selects default_fourier_length(max(m, n))
  int S = 4;
  double epsilon = kDefaultEpsilon;
  int threads = 1;
};

/// Smallest multiple of 4 that is >= 2.25 n.
int default_fourier_length(std::size_t n);
/// N_L = 2P - 4(S+1), so that the CZT length equals P.
int fourier_length_for_czt_length(int P, int S);

/// Approximate DFT over a full golden-angle linogram domain and its adjoint.
class GalfdOperator final : public LinearOperator {
 public:
  GalfdOperator(GalfdSpec spec, std::size_t m, std::size_t n, GaleSettings settings = {});

  std::size_t image_rows() const override { return m_; }
  std::size_t image_cols() const override { return n_; }
  std::size_t samples_per_ray() const override { return static_cast<std::size_t>(spec_.M); }
  std::size_t ray_count() const override { return spec_.angles.size(); }

  RaySamples forward(const ComplexImage& x) const override;
  ComplexImage adjoint(const RaySamples& y) const override;

  /// Same as forward/adjoint, accumulating the per-family counters.
  RaySamples forward(const ComplexImage& x, GaleCounters* counters) const;
  ComplexImage adjoint(const RaySamples& y, GaleCounters* counters) const;

  /// Per-point error bound (row-major M x N, same layout as RaySamples).
  std::vector<double> error_bounds(double x_l1) const;

  const GalfdSpec& spec() const noexcept { return spec_; }
  const GaleSettings& settings() const noexcept { return settings_; }
  int fourier_length() const noexcept { return fourier_length_; }
  const std::optional<GalePlan>& vertical_plan() const noexcept { return vertical_; }
  const std::optional<GalePlan>& horizontal_plan() const noexcept { return horizontal_; }

 private:
  GalfdSpec spec_;
  std::size_t m_;
  std::size_t n_;
  GaleSettings settings_;
  int fourier_length_;
  std::optional<GalePlan> vertical_;
  std::optional<GalePlan> horizontal_;
};

RaySamples galfd_forward(const ComplexImage& x, const GalfdSpec& spec,
                         const GaleSettings& settings = {});
ComplexImage galfd_adjoint(const RaySamples& y, const GalfdSpec& spec, std::size_t m,
                           std::size_t n, const GaleSettings& settings = {});

ComplexImage transpose(const ComplexImage& x);

}  // namespace gale

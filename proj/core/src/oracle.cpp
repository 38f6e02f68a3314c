#include "gale/oracle.hpp"

#include <algorithm>
#include <cmath>

namespace gale {
namespace {

// Kahan accumulator over complex values, component-wise.
struct KahanSum {
  Complex sum{};
  Complex carry{};

  void add(Complex v) {
    const Complex y = v - carry;
    const Complex t = sum + y;
    carry = (t - sum) - y;
    sum = t;
  }
};

// e^{sign * i * k * w} for k = 0..count-1, each evaluated directly.
void phases(double w, double sign, std::size_t count, ComplexVector& out) {
  out.resize(count);
  for (std::size_t k = 0; k < count; ++k) out[k] = std::polar(1.0, sign * w * k);
}

}  // namespace

ComplexVector dtft_direct(const ComplexImage& x, std::span<const FreqPoint> points,
                          int threads) {
  const std::size_t m = x.rows();
  const std::size_t n = x.cols();
  ComplexVector out(points.size());
  const auto count = points.size();
#pragma omp parallel num_threads(std::max(1, threads))
  {
    ComplexVector ex;
    ComplexVector ey;
#pragma omp for schedule(static)
    for (std::size_t k = 0; k < count; ++k) {
      phases(points[k].xi, -1.0, n, ex);
      phases(points[k].upsilon, -1.0, m, ey);
      KahanSum acc;
      for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) acc.add(x(i, j) * (ey[i] * ex[j]));
      }
      out[k] = acc.sum;
    }
  }
  return out;
}

ComplexImage dtft_adjoint_direct(std::span<const Complex> values,
                                 std::span<const FreqPoint> points, std::size_t m,
                                 std::size_t n, int threads) {
  require(values.size() == points.size(),
          "dtft_adjoint_direct: values and points must have the same length");
  require(m >= 1 && n >= 1, "dtft_adjoint_direct: image dimensions must be positive");
  // Row-wise phase tables for all points, then one compensated sum per pixel.
  const std::size_t count = points.size();
  ComplexImage x(m, n);
  std::vector<ComplexVector> ex(count);
  std::vector<ComplexVector> ey(count);
  for (std::size_t k = 0; k < count; ++k) {
    phases(points[k].xi, 1.0, n, ex[k]);
    phases(points[k].upsilon, 1.0, m, ey[k]);
  }
  const auto pixels = m * n;
#pragma omp parallel for num_threads(std::max(1, threads)) schedule(static)
  for (std::size_t p = 0; p < pixels; ++p) {
    const std::size_t i = p / n;
    const std::size_t j = p % n;
    KahanSum acc;
    for (std::size_t k = 0; k < count; ++k) acc.add(values[k] * (ey[k][i] * ex[k][j]));
    x(i, j) = acc.sum;
  }
  return x;
}

RaySamples points_to_ray_samples(std::span<const Complex> values, std::size_t M, std::size_t N) {
  require(values.size() == M * N, "points_to_ray_samples: expected M*N values");
  RaySamples y(M, N);
  for (std::size_t K = 0; K < N; ++K) {
    for (std::size_t I = 0; I < M; ++I) y(I, K) = values[K * M + I];
  }
  return y;
}

ComplexVector ray_samples_to_points(const RaySamples& y) {
  const std::size_t M = y.rows();
  const std::size_t N = y.cols();
  ComplexVector out(M * N);
  for (std::size_t K = 0; K < N; ++K) {
    for (std::size_t I = 0; I < M; ++I) out[K * M + I] = y(I, K);
  }
  return out;
}

DirectGalfdOperator::DirectGalfdOperator(const GalfdSpec& spec, std::size_t m, std::size_t n,
                                         int threads)
    : points_(galfd_points(spec)),
      m_(m),
      n_(n),
      M_(static_cast<std::size_t>(spec.M)),
      N_(spec.angles.size()),
      threads_(threads) {
  require(m >= 1 && n >= 1, "DirectGalfdOperator: image dimensions must be positive");
}

RaySamples DirectGalfdOperator::forward(const ComplexImage& x) const {
  require(x.rows() == m_ && x.cols() == n_, "DirectGalfdOperator::forward: image shape mismatch");
  return points_to_ray_samples(dtft_direct(x, points_, threads_), M_, N_);
}

ComplexImage DirectGalfdOperator::adjoint(const RaySamples& y) const {
  require(y.rows() == M_ && y.cols() == N_, "DirectGalfdOperator::adjoint: sample shape mismatch");
  return dtft_adjoint_direct(ray_samples_to_points(y), points_, m_, n_, threads_);
}

}  // namespace gale

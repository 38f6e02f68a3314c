#pragma once

// Seeded generators and small helpers shared by the unit and acceptance tests.

#include <cmath>
#include <cstdint>
#include <random>

#include "gale/types.hpp"

namespace gale::testing {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, 1), identical on every platform.
  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }
  int integer(int lo, int hi) { return lo + static_cast<int>(unit() * (hi - lo + 1)); }
  Complex complex() {
    const double re = uniform(-1.0, 1.0);
    return {re, uniform(-1.0, 1.0)};
  }

 private:
  std::mt19937_64 engine_;
};

inline ComplexVector random_vector(std::size_t size, Rng& rng) {
  ComplexVector v(size);
  for (auto& z : v) z = rng.complex();
  return v;
}

template <typename Tag>
Array2D<Tag> random_array(std::size_t rows, std::size_t cols, Rng& rng) {
  return Array2D<Tag>(rows, cols, random_vector(rows * cols, rng));
}

inline ComplexImage random_image(std::size_t m, std::size_t n, Rng& rng) {
  return random_array<ImageTag>(m, n, rng);
}

inline RaySamples random_samples(std::size_t M, std::size_t N, Rng& rng) {
  return random_array<RayTag>(M, N, rng);
}

/// <a, b> = sum a_k conj(b_k)
template <typename A, typename B>
Complex inner(const A& a, const B& b) {
  Complex acc{};
  for (std::size_t k = 0; k < a.size(); ++k) acc += a[k] * std::conj(b[k]);
  return acc;
}

template <typename A>
double norm(const A& a) {
  double acc = 0.0;
  for (const auto& z : a) acc += std::norm(z);
  return std::sqrt(acc);
}

template <typename A, typename B>
double max_abs_diff(const A& a, const B& b) {
  double worst = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) worst = std::max(worst, std::abs(a[k] - b[k]));
  return worst;
}

template <typename A>
double max_abs(const A& a) {
  double worst = 0.0;
  for (const auto& z : a) worst = std::max(worst, std::abs(z));
  return worst;
}

}  // namespace gale::testing

#include "gale/phantom.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <random>

#include "gale/domains.hpp"

namespace gale {
namespace {

struct Ellipse {
  double value;
  double a;  // semi-axis along x
  double b;  // semi-axis along y
  double x0;
  double y0;
  double phi_deg;
};

// Modified Shepp-Logan (Toft) on [-1, 1]^2.
constexpr std::array<Ellipse, 10> kSheppLogan{{
    {1.0, 0.69, 0.92, 0.0, 0.0, 0.0},
    {-0.8, 0.6624, 0.874, 0.0, -0.0184, 0.0},
    {-0.2, 0.11, 0.31, 0.22, 0.0, -18.0},
    {-0.2, 0.16, 0.41, -0.22, 0.0, 18.0},
    {0.1, 0.21, 0.25, 0.0, 0.35, 0.0},
    {0.1, 0.046, 0.046, 0.0, 0.1, 0.0},
    {0.1, 0.046, 0.046, 0.0, -0.1, 0.0},
    {0.1, 0.046, 0.023, -0.08, -0.605, 0.0},
    {0.1, 0.023, 0.023, 0.0, -0.606, 0.0},
    {0.1, 0.023, 0.046, 0.06, -0.605, 0.0},
}};

// Uniform double in [0, 1) from the top 53 bits; std distributions are not
// reproducible across standard libraries.
double unit(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

bool inside(const Ellipse& e, double x, double y) {
  const double phi = e.phi_deg * kPi / 180.0;
  const double c = std::cos(phi);
  const double s = std::sin(phi);
  const double dx = x - e.x0;
  const double dy = y - e.y0;
  const double u = (dx * c + dy * s) / e.a;
  const double v = (-dx * s + dy * c) / e.b;
  return u * u + v * v <= 1.0;
}

ComplexImage ellipse_phantom(std::size_t m, std::size_t n, std::uint64_t seed) {
  std::vector<Ellipse> ellipses(kSheppLogan.begin(), kSheppLogan.end());
  std::mt19937_64 rng(seed);
  for (int k = 0; k < 3; ++k) {
    // Small blobs inside the brain region.
    const double r = 0.04 + 0.06 * unit(rng);
    const double x0 = -0.4 + 0.8 * unit(rng);
    const double y0 = -0.5 + 0.9 * unit(rng);
    const double value = unit(rng) < 0.5 ? 0.15 : -0.1;
    ellipses.push_back({value, r, r * (0.6 + 0.8 * unit(rng)), x0, y0, 180.0 * unit(rng)});
  }
  ComplexImage img(m, n);
  for (std::size_t i = 0; i < m; ++i) {
    // Row 0 is the top of the image.
    const double y = 1.0 - (2.0 * static_cast<double>(i) + 1.0) / static_cast<double>(m);
    for (std::size_t j = 0; j < n; ++j) {
      const double x = (2.0 * static_cast<double>(j) + 1.0) / static_cast<double>(n) - 1.0;
      double v = 0.0;
      for (const auto& e : ellipses) {
        if (inside(e, x, y)) v += e.value;
      }
      img(i, j) = std::clamp(v, 0.0, 1.0);
    }
  }
  return img;
}

ComplexImage bar_phantom(std::size_t m, std::size_t n) {
  // Groups of three bars with widths 1, 2, 3, ... pixels, separated by equal gaps.
  ComplexImage img(m, n);
  const std::size_t top = m / 4;
  const std::size_t bottom = m - m / 4;
  std::size_t j = n / 8;
  for (std::size_t width = 1; j < n - n / 8; ++width) {
    for (int bar = 0; bar < 3 && j < n - n / 8; ++bar) {
      for (std::size_t k = 0; k < width && j + k < n; ++k) {
        for (std::size_t i = top; i < bottom; ++i) img(i, j + k) = 1.0;
      }
      j += 2 * width;
    }
    j += width;
  }
  return img;
}

}  // namespace

PhantomKind parse_phantom_kind(std::string_view name) {
  if (name == "ellipses") return PhantomKind::ellipses;
  if (name == "bars") return PhantomKind::bars;
  if (name == "delta") return PhantomKind::delta;
  throw InvalidArgument("unknown phantom kind '" + std::string(name) +
                        "' (expected ellipses, bars or delta)");
}

ComplexImage make_phantom(const PhantomSpec& spec) {
  require(spec.m >= 1 && spec.n >= 1, "make_phantom: dimensions must be positive");
  switch (spec.kind) {
    case PhantomKind::ellipses:
      return ellipse_phantom(spec.m, spec.n, spec.seed);
    case PhantomKind::bars:
      return bar_phantom(spec.m, spec.n);
    case PhantomKind::delta: {
      ComplexImage img(spec.m, spec.n);
      img(0, 0) = 1.0;
      return img;
    }
  }
  throw InvalidArgument("make_phantom: unknown kind");
}

std::vector<ComplexImage> make_sensitivities(std::size_t m, std::size_t n, std::size_t coils) {
  require(m >= 1 && n >= 1, "make_sensitivities: dimensions must be positive");
  require(coils >= 1, "make_sensitivities: at least one coil required");
  std::vector<ComplexImage> maps(coils, ComplexImage(m, n));
  if (coils == 1) {
    for (auto& v : maps[0].values()) v = 1.0;
    return maps;
  }
  // Gaussian profiles centred on a ring around the image, each with a linear phase.
  constexpr double kWidth = 0.9;
  for (std::size_t c = 0; c < coils; ++c) {
    const double angle = 2.0 * kPi * static_cast<double>(c) / static_cast<double>(coils);
    const double cx = 1.2 * std::cos(angle);
    const double cy = 1.2 * std::sin(angle);
    for (std::size_t i = 0; i < m; ++i) {
      const double y = 1.0 - (2.0 * static_cast<double>(i) + 1.0) / static_cast<double>(m);
      for (std::size_t j = 0; j < n; ++j) {
        const double x = (2.0 * static_cast<double>(j) + 1.0) / static_cast<double>(n) - 1.0;
        const double d2 = (x - cx) * (x - cx) + (y - cy) * (y - cy);
        const double phase = 0.5 * (x * std::cos(angle) + y * std::sin(angle)) + angle;
        maps[c](i, j) = std::polar(std::exp(-d2 / (2.0 * kWidth * kWidth)), phase);
      }
    }
  }
  for (std::size_t p = 0; p < m * n; ++p) {
    double total = 0.0;
    for (const auto& map : maps) total += std::norm(map.values()[p]);
    const double scale = 1.0 / std::sqrt(total);
    for (auto& map : maps) map.values()[p] *= scale;
  }
  return maps;
}

}  // namespace gale

#include "gale/domains.hpp"

#include <cmath>
#include <string>

#include "gale/types.hpp"

namespace gale {
namespace {

constexpr double kQuarterPi = kPi / 4.0;
constexpr double kThreeQuarterPi = 3.0 * kPi / 4.0;
constexpr double kFiveQuarterPi = 5.0 * kPi / 4.0;

void require_even_positive(int M, const char* who) {
  require(M > 0 && M % 2 == 0, std::string(who) + ": M must be a positive even integer");
}

}  // namespace

double constrain_angle(double theta) {
  require(std::isfinite(theta), "constrain_angle: angle must be finite");
  if (theta >= kQuarterPi && theta < kFiveQuarterPi) return theta;
  double r = std::fmod(theta - kQuarterPi, kPi);
  if (r < 0.0) r += kPi;
  const double out = r + kQuarterPi;
  // r + pi/4 can round up onto the excluded endpoint.
  return out < kFiveQuarterPi ? out : kQuarterPi;
}

RayFamily ray_family(double constrained_theta) {
  return constrained_theta < kThreeQuarterPi ? RayFamily::vertical : RayFamily::horizontal;
}

std::vector<double> golden_angles(std::size_t count, double theta0) {
  require(count >= 1, "golden_angles: ray count must be at least 1");
  std::vector<double> out(count);
  for (std::size_t j = 0; j < count; ++j) {
    out[j] = constrain_angle(theta0 + static_cast<double>(j) * kGoldenAngle);
  }
  return out;
}

std::vector<FreqPoint> lrfs_points(int M, double sigma, double theta) {
  require_even_positive(M, "lrfs_points");
  require(std::isfinite(sigma), "lrfs_points: sigma must be finite");
  require(theta >= kQuarterPi && theta < kFiveQuarterPi,
          "lrfs_points: theta must lie in [pi/4, 5pi/4)");
  std::vector<FreqPoint> out;
  out.reserve(static_cast<std::size_t>(M));
  const double step = 2.0 * kPi / M;
  if (ray_family(theta) == RayFamily::horizontal) {
    const double slope = std::tan(theta);
    for (int I = -M / 2; I <= M / 2 - 1; ++I) {
      const double xi = step * I + sigma;
      out.push_back({xi, xi * slope});
    }
  } else {
    const double slope = std::cos(theta) / std::sin(theta);
    for (int I = -M / 2 + 1; I <= M / 2; ++I) {
      const double upsilon = step * I - sigma;
      out.push_back({upsilon * slope, upsilon});
    }
  }
  return out;
}

void GalfdSpec::validate_for_image(std::size_t m, std::size_t n) const {
  require(m >= 1 && n >= 1, "image dimensions must be positive");
  if (!v_rays.empty()) {
    require(static_cast<std::size_t>(M) >= m, "vertical rays require M >= m (image rows)");
    if (n > 1) {
      require(std::abs(sigma) < kPi / static_cast<double>(n - 1),
              "|sigma| < pi/(n-1) violated for the vertical ray family (n = image columns)");
    }
  }
  if (!h_rays.empty()) {
    require(static_cast<std::size_t>(M) >= n, "horizontal rays require M >= n (image columns)");
    if (m > 1) {
      require(std::abs(sigma) < kPi / static_cast<double>(m - 1),
              "|sigma| < pi/(m-1) violated for the horizontal ray family (m = image rows)");
    }
  }
}

GalfdSpec make_galfd_spec(int M, int N, double theta0, double sigma) {
  require_even_positive(M, "make_galfd_spec");
  require(N >= 1, "make_galfd_spec: N must be at least 1");
  require(std::isfinite(theta0) && std::isfinite(sigma),
          "make_galfd_spec: theta0 and sigma must be finite");
  GalfdSpec spec;
  spec.M = M;
  spec.N = N;
  spec.theta0 = theta0;
  spec.sigma = sigma;
  spec.angles = golden_angles(static_cast<std::size_t>(N), theta0);
  for (std::size_t k = 0; k < spec.angles.size(); ++k) {
    if (ray_family(spec.angles[k]) == RayFamily::vertical) {
      spec.v_rays.push_back(k);
    } else {
      spec.h_rays.push_back(k);
    }
  }
  return spec;
}

GalfdSpec make_galfd_spec(int M, int N) {
  require_even_positive(M, "make_galfd_spec");
  return make_galfd_spec(M, N, kPi / 2.0, kPi / M);
}

std::vector<FreqPoint> galfd_points(const GalfdSpec& spec) {
  std::vector<FreqPoint> out;
  out.reserve(static_cast<std::size_t>(spec.M) * spec.angles.size());
  for (double theta : spec.angles) {
    const auto ray = lrfs_points(spec.M, spec.sigma, theta);
    out.insert(out.end(), ray.begin(), ray.end());
  }
  return out;
}

ClassicDomain parse_classic_domain(std::string_view name) {
  if (name == "CFD" || name == "cartesian") return ClassicDomain::cartesian;
  if (name == "PFD" || name == "polar") return ClassicDomain::polar;
  if (name == "LFD" || name == "linogram") return ClassicDomain::linogram;
  if (name == "GAPFD" || name == "golden_polar") return ClassicDomain::golden_polar;
  throw InvalidArgument("unknown domain kind '" + std::string(name) +
                        "' (expected CFD, PFD, LFD or GAPFD)");
}

std::vector<FreqPoint> classic_domain_points(ClassicDomain kind, int M, int N, double theta0) {
  require_even_positive(M, "classic_domain_points");
  require(N >= 1, "classic_domain_points: N must be at least 1");
  const double step = 2.0 * kPi / M;
  std::vector<FreqPoint> out;
  switch (kind) {
    case ClassicDomain::cartesian: {
      require(N % 2 == 0, "classic_domain_points: CFD requires even N");
      const double step_n = 2.0 * kPi / N;
      for (int I = -M / 2; I <= M / 2 - 1; ++I) {
        for (int J = -N / 2; J <= N / 2 - 1; ++J) out.push_back({step * I, step_n * J});
      }
      break;
    }
    case ClassicDomain::polar:
    case ClassicDomain::golden_polar: {
      for (int J = 0; J < N; ++J) {
        const double theta = kind == ClassicDomain::polar ? kPi * J / N
                                                          : theta0 + J * kGoldenAngle;
        const double c = std::cos(theta);
        const double s = std::sin(theta);
        for (int I = -M / 2; I <= M / 2 - 1; ++I) out.push_back({step * I * c, step * I * s});
      }
      break;
    }
    case ClassicDomain::linogram: {
      require(N % 4 == 0, "classic_domain_points: LFD requires N divisible by 4");
      for (int J = -N / 4 + 1; J <= N / 4; ++J) {
        const double slope = 4.0 * J / N;
        for (int I = -M / 2; I <= M / 2 - 1; ++I) out.push_back({step * I, step * I * slope});
      }
      for (int J = -N / 4; J <= N / 4 - 1; ++J) {
        const double slope = 4.0 * J / N;
        for (int I = -M / 2 + 1; I <= M / 2; ++I) out.push_back({step * I * slope, step * I});
      }
      break;
    }
  }
  return out;
}

}  // namespace gale

#pragma once

// Sampling domains in the 2-D frequency plane: Cartesian, polar, linogram,
// golden-angle polar and golden-angle linogram point sets.

#include <cstddef>
#include <numbers>
#include <string_view>
#include <vector>

namespace gale {

inline constexpr double kPi = std::numbers::pi;
/// pi / phi, the angular increment between consecutive golden-angle rays.
inline constexpr double kGoldenAngle = std::numbers::pi / std::numbers::phi;

/// One DTFT evaluation point; xi multiplies the column index, upsilon the row index.
struct FreqPoint {
  double xi = 0.0;
  double upsilon = 0.0;
};

/// Rays with theta in [pi/4, 3pi/4) are equispaced in upsilon ("vertical" form);
/// rays with theta in [3pi/4, 5pi/4) are equispaced in xi ("horizontal" form).
enum class RayFamily { vertical, horizontal };

/// Maps any finite angle into [pi/4, 5pi/4) with period pi (floored remainder).
double constrain_angle(double theta);

/// Family of an already constrained angle. Half-open: 3pi/4 is horizontal.
RayFamily ray_family(double constrained_theta);

/// constrain_angle(theta0 + J * pi/phi) for J = 0..count-1.
std::vector<double> golden_angles(std::size_t count, double theta0);

/// The M points of one linogram ray, ordered by ascending I.
std::vector<FreqPoint> lrfs_points(int M, double sigma, double theta);

/// Golden-angle linogram domain geometry. Rays are K = 0..N-1; v_rays and
/// h_rays list the ray indices of each family in ascending K.
struct GalfdSpec {
  int M = 0;
  int N = 0;
  double theta0 = 0.0;
  double sigma = 0.0;
  std::vector<double> angles;
  std::vector<std::size_t> v_rays;
  std::vector<std::size_t> h_rays;

  /// Validates against image dimensions: |sigma| < pi/(n-1) for the vertical
  /// family and |sigma| < pi/(m-1) for the horizontal (transposed) family.
  void validate_for_image(std::size_t m, std::size_t n) const;
};

GalfdSpec make_galfd_spec(int M, int N, double theta0, double sigma);
/// theta0 = pi/2, sigma = pi/M.
GalfdSpec make_galfd_spec(int M, int N);

/// Concatenation of lrfs_points over rays K = 0..N-1 (K-major, ascending I).
std::vector<FreqPoint> galfd_points(const GalfdSpec& spec);

enum class ClassicDomain { cartesian, polar, linogram, golden_polar };

ClassicDomain parse_classic_domain(std::string_view name);

/// CFD: I-major grid. PFD / GAPFD: ray-major, ascending I. LFD: H-set then V-set.
std::vector<FreqPoint> classic_domain_points(ClassicDomain kind, int M, int N,
                                             double theta0 = 0.0);

}  // namespace gale

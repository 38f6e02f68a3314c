#pragma once

// Synthetic test images and coil sensitivity maps.

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include "gale/types.hpp"

namespace gale {

enum class PhantomKind { ellipses, bars, delta };

PhantomKind parse_phantom_kind(std::string_view name);

struct PhantomSpec {
  std::size_t m = 64;
  std::size_t n = 64;
  PhantomKind kind = PhantomKind::ellipses;
  std::uint64_t seed = 0;
};

/// Real image with values in [0, 1]. `ellipses` is a modified Shepp-Logan head
/// plus a few seeded small ellipses; `bars` is a line-pair pattern; `delta`
/// is 1 at (0, 0) and 0 elsewhere. Bit-identical for equal specs.
ComplexImage make_phantom(const PhantomSpec& spec);

/// C smooth complex coil profiles with sum_c |zeta_c|^2 = 1 at every pixel.
/// C = 1 gives the all-ones map.
std::vector<ComplexImage> make_sensitivities(std::size_t m, std::size_t n, std::size_t coils);

}  // namespace gale

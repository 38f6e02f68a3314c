#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>
#include <utility>

#include "gale/domains.hpp"
#include "test_support.hpp"

using namespace gale;
using gale::testing::Rng;

TEST_CASE("golden angle constant") {
  CHECK(kGoldenAngle == doctest::Approx(1.941611038725466).epsilon(1e-15));
}

TEST_CASE("constrain_angle maps into [pi/4, 5pi/4)") {
  CHECK(constrain_angle(0.0) == doctest::Approx(kPi).epsilon(1e-15));
  CHECK(constrain_angle(kPi / 2) == kPi / 2);
  CHECK(constrain_angle(kPi / 4) == kPi / 4);
  CHECK(constrain_angle(5 * kPi / 4) == doctest::Approx(kPi / 4).epsilon(1e-15));
  CHECK(constrain_angle(-kPi / 2) == doctest::Approx(kPi / 2).epsilon(1e-15));
}

TEST_CASE("constrain_angle properties on random angles") {
  Rng rng(11);
  for (int trial = 0; trial < 2000; ++trial) {
    const double theta = rng.uniform(-50.0, 50.0);
    const double c = constrain_angle(theta);
    CHECK(c >= kPi / 4);
    CHECK(c < 5 * kPi / 4);
    CHECK(constrain_angle(c) == c);  // idempotent
    const double shifted = constrain_angle(theta + kPi);
    // Equal up to the rounding of theta + pi, modulo the wrap at the ends.
    const double d = std::remainder(shifted - c, kPi);
    CHECK(std::abs(d) < 1e-13);
    // sin(2 theta) is pi-periodic, so it detects a wrong branch.
    CHECK(std::sin(2 * c) == doctest::Approx(std::sin(2 * theta)).epsilon(1e-11));
  }
}

TEST_CASE("ray_family splits at 3pi/4") {
  CHECK(ray_family(kPi / 4) == RayFamily::vertical);
  CHECK(ray_family(kPi / 2) == RayFamily::vertical);
  CHECK(ray_family(3 * kPi / 4) == RayFamily::horizontal);
  CHECK(ray_family(kPi) == RayFamily::horizontal);
}

TEST_CASE("golden_angles frozen values") {
  // Reference computed with 40-digit arithmetic.
  const auto a = golden_angles(3, kPi / 2);
  REQUIRE(a.size() == 3);
  CHECK(a[0] == doctest::Approx(1.5707963267948966).epsilon(1e-15));
  CHECK(a[1] == doctest::Approx(3.5124073655203632).epsilon(1e-15));
  CHECK(a[2] == doctest::Approx(2.3124257506560365).epsilon(1e-15));
  CHECK_THROWS_AS(golden_angles(0, 0.0), InvalidArgument);
}

TEST_CASE("golden angles nest") {
  for (std::size_t N = 1; N < 40; ++N) {
    const auto small = golden_angles(N, 0.7);
    const auto large = golden_angles(N + 1, 0.7);
    CHECK(std::equal(small.begin(), small.end(), large.begin()));
  }
}

TEST_CASE("lrfs_points small cases") {
  SUBCASE("vertical ray, sigma 0") {
    const auto p = lrfs_points(2, 0.0, kPi / 2);
    REQUIRE(p.size() == 2);
    CHECK(std::abs(p[0].xi) < 1e-15);
    CHECK(p[0].upsilon == 0.0);
    CHECK(std::abs(p[1].xi) < 1e-15);
    CHECK(p[1].upsilon == doctest::Approx(kPi));
  }
  SUBCASE("horizontal ray, sigma 0") {
    const auto p = lrfs_points(2, 0.0, kPi);
    REQUIRE(p.size() == 2);
    CHECK(p[0].xi == doctest::Approx(-kPi));
    CHECK(std::abs(p[0].upsilon) < 1e-15);
    CHECK(p[1].xi == 0.0);
    CHECK(std::abs(p[1].upsilon) < 1e-15);
  }
  SUBCASE("M=4, sigma=pi/4, theta=pi/3") {
    // Reference computed with 40-digit arithmetic.
    const std::pair<double, double> expected[] = {
        {-1.3603495231756634, -2.3561944901923449},
        {-0.45344984105855446, -0.78539816339744831},
        {0.45344984105855446, 0.78539816339744831},
        {1.3603495231756634, 2.3561944901923449},
    };
    const auto p = lrfs_points(4, kPi / 4, kPi / 3);
    REQUIRE(p.size() == 4);
    for (int k = 0; k < 4; ++k) {
      CHECK(p[k].xi == doctest::Approx(expected[k].first).epsilon(1e-15));
      CHECK(p[k].upsilon == doctest::Approx(expected[k].second).epsilon(1e-15));
    }
  }
  CHECK_THROWS_AS(lrfs_points(3, 0.0, kPi / 2), InvalidArgument);
}

TEST_CASE("rays are equispaced in their dominant coordinate") {
  Rng rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const int M = 2 * rng.integer(1, 40);
    const double sigma = rng.uniform(-0.3, 0.3);
    const double theta = constrain_angle(rng.uniform(0.0, 10.0));
    const auto p = lrfs_points(M, sigma, theta);
    REQUIRE(p.size() == static_cast<std::size_t>(M));
    const bool vertical = ray_family(theta) == RayFamily::vertical;
    for (int k = 1; k < M; ++k) {
      const double step = vertical ? p[k].upsilon - p[k - 1].upsilon : p[k].xi - p[k - 1].xi;
      CHECK(step == doctest::Approx(2 * kPi / M).epsilon(1e-12));
    }
    // Every point lies on the line through the origin at angle theta.
    for (const auto& q : p) {
      CHECK(std::abs(q.xi * std::sin(theta) - q.upsilon * std::cos(theta)) < 1e-12);
    }
  }
}

TEST_CASE("galfd spec and points") {
  const auto spec = make_galfd_spec(2, 1, kPi / 2, 0.0);
  const auto p = galfd_points(spec);
  REQUIRE(p.size() == 2);
  CHECK(p[1].upsilon == doctest::Approx(kPi));

  const auto spec2 = make_galfd_spec(4, 2);
  CHECK(galfd_points(spec2).size() == 8);
  CHECK(spec2.theta0 == kPi / 2);
  CHECK(spec2.sigma == kPi / 4);

  const auto spec13 = make_galfd_spec(16, 13);
  CHECK(spec13.v_rays.size() + spec13.h_rays.size() == 13);
  for (auto K : spec13.v_rays) CHECK(ray_family(spec13.angles[K]) == RayFamily::vertical);
  for (auto K : spec13.h_rays) CHECK(ray_family(spec13.angles[K]) == RayFamily::horizontal);

  CHECK_THROWS_AS(make_galfd_spec(5, 3), InvalidArgument);
  CHECK_THROWS_AS(make_galfd_spec(4, 0), InvalidArgument);
}

TEST_CASE("duplicate angles give identical rays") {
  GalfdSpec spec = make_galfd_spec(8, 2, 1.0, 0.1);
  spec.angles[1] = spec.angles[0];
  const auto p = galfd_points(spec);
  for (int k = 0; k < 8; ++k) {
    CHECK(p[k].xi == p[8 + k].xi);
    CHECK(p[k].upsilon == p[8 + k].upsilon);
  }
}

TEST_CASE("validate_for_image names the violated constraint") {
  const auto spec = make_galfd_spec(16, 13);
  CHECK_NOTHROW(spec.validate_for_image(16, 16));
  CHECK_THROWS_WITH_AS(spec.validate_for_image(17, 16), doctest::Contains("M >= m"),
                       InvalidArgument);
  const auto wide = make_galfd_spec(16, 13, kPi / 2, 0.5);
  CHECK_THROWS_WITH_AS(wide.validate_for_image(16, 16), doctest::Contains("pi/(n-1)"),
                       InvalidArgument);
}

TEST_CASE("classic domains") {
  SUBCASE("CFD M=N=2") {
    const auto p = classic_domain_points(ClassicDomain::cartesian, 2, 2);
    REQUIRE(p.size() == 4);
    CHECK(p[0].xi == -kPi);
    CHECK(p[0].upsilon == -kPi);
    CHECK(p[1].xi == -kPi);
    CHECK(p[1].upsilon == 0.0);
    CHECK(p[2].xi == 0.0);
    CHECK(p[2].upsilon == -kPi);
    CHECK(p[3].xi == 0.0);
    CHECK(p[3].upsilon == 0.0);
  }
  SUBCASE("PFD M=2, N=1") {
    const auto p = classic_domain_points(ClassicDomain::polar, 2, 1);
    REQUIRE(p.size() == 2);
    CHECK(p[0].xi == -kPi);
    CHECK(p[0].upsilon == doctest::Approx(0.0));
    CHECK(p[1].xi == 0.0);
  }
  SUBCASE("LFD distinct point count is (M-1)N+1") {
    const auto p = classic_domain_points(ClassicDomain::linogram, 20, 20);
    std::set<std::pair<long long, long long>> distinct;
    for (const auto& q : p) {
      distinct.insert({std::llround(q.xi * 1e9), std::llround(q.upsilon * 1e9)});
    }
    CHECK(distinct.size() == 381);
  }
  SUBCASE("GAPFD uses golden increments") {
    const auto p = classic_domain_points(ClassicDomain::golden_polar, 4, 3, 0.2);
    REQUIRE(p.size() == 12);
    const double theta = 0.2 + 2 * kGoldenAngle;
    CHECK(std::atan2(p[8].upsilon, p[8].xi) ==
          doctest::Approx(std::remainder(theta + kPi, 2 * kPi)).epsilon(1e-12));
  }
  CHECK(parse_classic_domain("CFD") == ClassicDomain::cartesian);
  CHECK(parse_classic_domain("GAPFD") == ClassicDomain::golden_polar);
  CHECK_THROWS_AS(parse_classic_domain("hexagonal"), InvalidArgument);
}

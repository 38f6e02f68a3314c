#include <doctest.h>

#include <cmath>
#include <thread>
#include <vector>

#include "gale/domains.hpp"
#include "gale/fftcore.hpp"
#include "test_support.hpp"

using namespace gale;
using gale::testing::Rng;

namespace {

// sum_i x_i e^{sign 2 pi i i k / M} with exact index reduction and long double sums.
ComplexVector direct_dft(const ComplexVector& x, std::size_t M, double sign) {
  ComplexVector out(M);
  for (std::size_t k = 0; k < M; ++k) {
    long double re = 0;
    long double im = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
      const auto r = static_cast<long double>((i * k) % M);
      const long double angle = sign * 2.0L * 3.141592653589793238462643383279502884L * r / M;
      const long double c = std::cos(angle);
      const long double s = std::sin(angle);
      re += x[i].real() * c - x[i].imag() * s;
      im += x[i].real() * s + x[i].imag() * c;
    }
    out[k] = Complex(static_cast<double>(re), static_cast<double>(im));
  }
  return out;
}

double relative(const ComplexVector& got, const ComplexVector& want) {
  return gale::testing::max_abs_diff(got, want) / gale::testing::max_abs(want);
}

}  // namespace

TEST_CASE("forward transform matches the direct sum up to length 4096") {
  Rng rng(1);
  for (std::size_t M : {1u, 2u, 3u, 5u, 8u, 12u, 17u, 64u, 100u, 127u, 256u, 1000u, 1152u, 4096u}) {
    CAPTURE(M);
    const auto x = gale::testing::random_vector(M, rng);
    CHECK(relative(fft::fft_padded(x, M), direct_dft(x, M, -1.0)) < 1e-12);
  }
}

TEST_CASE("fft_padded and ifft_truncated against direct sums") {
  Rng rng(2);
  const auto x = gale::testing::random_vector(5, rng);
  CHECK(relative(fft::fft_padded(x, 8), direct_dft(x, 8, -1.0)) < 1e-13);

  const auto y = gale::testing::random_vector(8, rng);
  auto want = direct_dft(y, 8, 1.0);
  want.resize(3);
  for (auto& v : want) v /= 8.0;
  CHECK(relative(fft::ifft_truncated(y, 3), want) < 1e-13);

  CHECK_THROWS_AS(fft::fft_padded(x, 4), InvalidArgument);
  CHECK_THROWS_AS(fft::ifft_truncated(y, 9), InvalidArgument);
}

TEST_CASE("padded/truncated pairs are adjoint") {
  Rng rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const auto M = static_cast<std::size_t>(rng.integer(1, 300));
    const auto m = static_cast<std::size_t>(rng.integer(1, static_cast<int>(M)));
    const auto x = gale::testing::random_vector(m, rng);
    const auto y = gale::testing::random_vector(M, rng);
    const auto Fx = fft::fft_padded(x, M);
    const auto Fty = fft::fft_padded_adjoint(y, m);
    const Complex lhs = gale::testing::inner(Fx, y);
    const Complex rhs = gale::testing::inner(x, Fty);
    CHECK(std::abs(lhs - rhs) <= 1e-12 * gale::testing::norm(Fx) * gale::testing::norm(y));

    const auto Ty = fft::ifft_truncated(y, m);
    const auto Ttx = fft::ifft_truncated_adjoint(x, M);
    CHECK(std::abs(gale::testing::inner(Ty, x) - gale::testing::inner(y, Ttx)) <=
          1e-12 * gale::testing::norm(Ty) * gale::testing::norm(x) + 1e-300);
  }
}

TEST_CASE("round trip and Parseval") {
  Rng rng(4);
  for (std::size_t M : {7u, 64u, 360u}) {
    const auto x = gale::testing::random_vector(M, rng);
    const auto X = fft::fft_padded(x, M);
    CHECK(gale::testing::max_abs_diff(fft::ifft_truncated(X, M), x) < 1e-13);
    const double ex = gale::testing::norm(x);
    const double eX = gale::testing::norm(X);
    CHECK(eX * eX == doctest::Approx(M * ex * ex).epsilon(1e-12));
  }
}

TEST_CASE("range_shift_weights move the output range") {
  Rng rng(5);
  const std::size_t m = 6;
  const std::size_t M = 10;
  const std::int64_t R = 4;
  const auto x = gale::testing::random_vector(m, rng);
  const auto w = fft::range_shift_weights(m, R, M);
  ComplexVector xw(m);
  for (std::size_t i = 0; i < m; ++i) xw[i] = x[i] * w[i];
  const auto out = fft::fft_padded(xw, M);
  for (std::size_t I = 0; I < M; ++I) {
    // frequency I - R
    Complex want{};
    for (std::size_t i = 0; i < m; ++i) {
      want += x[i] * std::polar(1.0, -2.0 * kPi * static_cast<double>(i) *
                                          (static_cast<double>(I) - R) / M);
    }
    CHECK(std::abs(out[I] - want) < 1e-13);
  }
  CHECK(std::abs(fft::range_shift_weights(3, -7, 5)[2] - std::polar(1.0, 2 * kPi * 1 / 5.0)) <
        1e-15);
}

TEST_CASE("plans are cached and counted") {
  const auto& a = fft::plan_for(48);
  const auto& b = fft::plan_for(48);
  CHECK(&a == &b);
  CHECK(a.length() == 48);
  ComplexVector v(48, Complex(1.0, 0.0));
  const auto before = fft::transform_count();
  a.forward(v);
  a.backward(v);
  CHECK(fft::transform_count() - before == 2);
  CHECK(std::abs(v[0] - Complex(48.0, 0.0)) < 1e-12);
  CHECK_THROWS_AS(a.forward(std::span<Complex>(v.data(), 47)), InvalidArgument);
}

TEST_CASE("concurrent plan requests and execution") {
  std::vector<std::thread> pool;
  std::vector<double> errors(4, 0.0);
  for (int t = 0; t < 4; ++t) {
    pool.emplace_back([t, &errors] {
      Rng rng(100 + t);
      for (int k = 0; k < 20; ++k) {
        const auto M = static_cast<std::size_t>(32 + 7 * k);
        const auto x = gale::testing::random_vector(M, rng);
        const auto back = fft::ifft_truncated(fft::fft_padded(x, M), M);
        errors[t] = std::max(errors[t], gale::testing::max_abs_diff(back, x));
      }
    });
  }
  for (auto& th : pool) th.join();
  for (double e : errors) CHECK(e < 1e-13);
}

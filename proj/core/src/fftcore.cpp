#include "gale/fftcore.hpp"

#include <fftw3.h>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>

#include "gale/domains.hpp"

namespace gale::fft {
namespace {

std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

std::atomic<std::uint64_t> g_transforms{0};

fftw_complex* as_fftw(Complex* p) { return reinterpret_cast<fftw_complex*>(p); }

}  // namespace

Plan::Plan(std::size_t length) : length_(length) {
  // FFTW's planner is not reentrant; callers hold planner_mutex().
  auto* scratch = fftw_alloc_complex(length);
  const int n = static_cast<int>(length);
  const unsigned flags = FFTW_ESTIMATE | FFTW_UNALIGNED;
  forward_ = fftw_plan_dft_1d(n, scratch, scratch, FFTW_FORWARD, flags);
  backward_ = fftw_plan_dft_1d(n, scratch, scratch, FFTW_BACKWARD, flags);
  fftw_free(scratch);
}

Plan::~Plan() {
  fftw_destroy_plan(static_cast<fftw_plan>(forward_));
  fftw_destroy_plan(static_cast<fftw_plan>(backward_));
}

void Plan::forward(std::span<Complex> data) const {
  require(data.size() == length_, "fft::Plan::forward: length mismatch");
  fftw_execute_dft(static_cast<fftw_plan>(forward_), as_fftw(data.data()), as_fftw(data.data()));
  g_transforms.fetch_add(1, std::memory_order_relaxed);
}

void Plan::backward(std::span<Complex> data) const {
  require(data.size() == length_, "fft::Plan::backward: length mismatch");
  fftw_execute_dft(static_cast<fftw_plan>(backward_), as_fftw(data.data()),
                   as_fftw(data.data()));
  g_transforms.fetch_add(1, std::memory_order_relaxed);
}

const Plan& plan_for(std::size_t length) {
  require(length >= 1, "fft::plan_for: length must be positive");
  static std::map<std::size_t, std::unique_ptr<Plan>> cache;
  std::lock_guard lock(planner_mutex());
  auto& slot = cache[length];
  if (!slot) slot.reset(new Plan(length));
  return *slot;
}

std::uint64_t transform_count() noexcept { return g_transforms.load(std::memory_order_relaxed); }

ComplexVector fft_padded(std::span<const Complex> x, std::size_t M) {
  require(!x.empty(), "fft_padded: input must be non-empty");
  require(M >= x.size(), "fft_padded: M >= m required");
  ComplexVector out(M);
  std::copy(x.begin(), x.end(), out.begin());
  plan_for(M).forward(out);
  return out;
}

ComplexVector ifft_truncated(std::span<const Complex> y, std::size_t m) {
  require(!y.empty(), "ifft_truncated: input must be non-empty");
  require(m >= 1 && m <= y.size(), "ifft_truncated: 1 <= m <= M required");
  ComplexVector work(y.begin(), y.end());
  plan_for(work.size()).backward(work);
  const double scale = 1.0 / static_cast<double>(work.size());
  work.resize(m);
  for (auto& v : work) v *= scale;
  return work;
}

ComplexVector fft_padded_adjoint(std::span<const Complex> y, std::size_t m) {
  require(!y.empty(), "fft_padded_adjoint: input must be non-empty");
  require(m >= 1 && m <= y.size(), "fft_padded_adjoint: 1 <= m <= M required");
  ComplexVector work(y.begin(), y.end());
  plan_for(work.size()).backward(work);
  work.resize(m);
  return work;
}

ComplexVector ifft_truncated_adjoint(std::span<const Complex> x, std::size_t M) {
  auto out = fft_padded(x, M);
  const double scale = 1.0 / static_cast<double>(M);
  for (auto& v : out) v *= scale;
  return out;
}

ComplexVector range_shift_weights(std::size_t m, std::int64_t R, std::size_t M) {
  require(M >= 1, "range_shift_weights: M must be positive");
  ComplexVector out(m);
  const auto modulus = static_cast<std::int64_t>(M);
  for (std::size_t i = 0; i < m; ++i) {
    // Reduce i*R mod M exactly before converting to an angle.
    std::int64_t k = (static_cast<std::int64_t>(i) * R) % modulus;
    if (k < 0) k += modulus;
    out[i] = std::polar(1.0, 2.0 * kPi * static_cast<double>(k) / static_cast<double>(M));
  }
  return out;
}

}  // namespace gale::fft

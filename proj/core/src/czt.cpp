#include "gale/czt.hpp"

#include <algorithm>
#include <cmath>

#include "gale/domains.hpp"

namespace gale {
namespace {

// exp(i * sign * pi * alpha * k / M). The product alpha k / M reaches the
// thousands for long transforms; reducing it mod 2 in extended precision keeps
// the three chirps of one output consistent to a few ulps.
Complex chirp(double alpha_over_modulus, std::int64_t k, double sign) {
  const long double t = std::fmod(static_cast<long double>(alpha_over_modulus) * k, 2.0L);
  return std::polar(1.0, sign * kPi * static_cast<double>(t));
}

// Smallest integer >= n whose only prime factors are 2, 3, 5 and 7.
std::int64_t smooth_length(std::int64_t n) {
  for (;; ++n) {
    std::int64_t r = n;
    for (const std::int64_t f : {2, 3, 5, 7}) {
      while (r % f == 0) r /= f;
    }
    if (r == 1) return n;
  }
}

}  // namespace

CztPlan czt_init(std::size_t m, double alpha, std::int64_t modulus, std::size_t P,
                 std::int64_t shift) {
  require(m >= 1, "czt_init: input length m must be positive");
  require(P >= 1, "czt_init: output length P must be positive");
  require(modulus >= 1, "czt_init: modulus M must be positive");
  require(std::isfinite(alpha), "czt_init: alpha must be finite");

  CztPlan plan;
  plan.input_length = m;
  plan.output_length = P;
  plan.alpha = alpha;
  plan.modulus = modulus;
  plan.shift = shift;

  const double a = alpha / static_cast<double>(modulus);
  // Any Q >= P + m - 1 makes the circular convolution exact; a smooth length
  // keeps FFTW off its prime-size code paths.
  const auto Q = smooth_length(static_cast<std::int64_t>(std::max(2 * P, P + m - 1)));

  plan.premod.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    const auto ii = static_cast<std::int64_t>(i);
    plan.premod[i] = chirp(a, ii * (ii - 2 * shift), -1.0);
  }

  plan.q_hat.resize(static_cast<std::size_t>(Q));
  const auto P64 = static_cast<std::int64_t>(P);
  for (std::int64_t i = 0; i < Q; ++i) {
    const std::int64_t lag = i < P64 ? i : Q - i;
    plan.q_hat[static_cast<std::size_t>(i)] = chirp(a, lag * lag, 1.0);
  }
  plan.conv_plan = &fft::plan_for(static_cast<std::size_t>(Q));
  plan.conv_plan->forward(plan.q_hat);

  plan.postmod.resize(P);
  for (std::int64_t I = 0; I < P64; ++I) {
    plan.postmod[static_cast<std::size_t>(I)] = chirp(a, I * I, -1.0);
  }
  return plan;
}

void czt_apply(std::span<const Complex> x, const CztPlan& plan, std::span<Complex> out,
               std::span<Complex> work) {
  require(x.size() == plan.input_length, "czt_apply: input length does not match plan");
  require(out.size() == plan.output_length, "czt_apply: output length does not match plan");
  require(work.size() == plan.convolution_length(), "czt_apply: workspace length mismatch");
  const std::size_t m = plan.input_length;
  for (std::size_t i = 0; i < m; ++i) work[i] = x[i] * plan.premod[i];
  std::fill(work.begin() + static_cast<std::ptrdiff_t>(m), work.end(), Complex{});
  plan.conv_plan->forward(work);
  for (std::size_t k = 0; k < work.size(); ++k) work[k] *= plan.q_hat[k];
  plan.conv_plan->backward(work);
  const double scale = 1.0 / static_cast<double>(work.size());
  for (std::size_t I = 0; I < out.size(); ++I) out[I] = work[I] * plan.postmod[I] * scale;
}

void czt_adjoint(std::span<const Complex> y, const CztPlan& plan, std::span<Complex> out,
                 std::span<Complex> work) {
  require(y.size() == plan.output_length, "czt_adjoint: input length does not match plan");
  require(out.size() == plan.input_length, "czt_adjoint: output length does not match plan");
  require(work.size() == plan.convolution_length(), "czt_adjoint: workspace length mismatch");
  const std::size_t P = plan.output_length;
  for (std::size_t I = 0; I < P; ++I) work[I] = y[I] * std::conj(plan.postmod[I]);
  std::fill(work.begin() + static_cast<std::ptrdiff_t>(P), work.end(), Complex{});
  plan.conv_plan->forward(work);
  for (std::size_t k = 0; k < work.size(); ++k) work[k] *= std::conj(plan.q_hat[k]);
  plan.conv_plan->backward(work);
  const double scale = 1.0 / static_cast<double>(work.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = work[i] * std::conj(plan.premod[i]) * scale;
  }
}

ComplexVector czt_apply(std::span<const Complex> x, const CztPlan& plan) {
  ComplexVector out(plan.output_length);
  ComplexVector work(plan.convolution_length());
  czt_apply(x, plan, out, work);
  return out;
}

ComplexVector czt_adjoint(std::span<const Complex> y, const CztPlan& plan) {
  ComplexVector out(plan.input_length);
  ComplexVector work(plan.convolution_length());
  czt_adjoint(y, plan, out, work);
  return out;
}

}  // namespace gale

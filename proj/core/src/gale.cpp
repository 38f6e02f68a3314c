#include "gale/gale.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace gale {
namespace {

// Angles that land on pi/4 or 3pi/4 after a round trip through constrain_angle
// may sit a few ulps outside the closed interval.
constexpr double kAngleSlack = 1e-12;

std::size_t thread_count(int threads) { return static_cast<std::size_t>(std::max(1, threads)); }

void add_counts(GaleCounters* counters, const GalePlan& plan) {
  if (counters == nullptr) return;
  counters->column_ffts += plan.n;
  counters->czt_calls += static_cast<std::uint64_t>(plan.M);
  counters->accumulations += static_cast<std::uint64_t>(plan.M) * plan.terms_per_row;
}

}  // namespace

GalePlan gale_init(std::span<const double> thetas, std::size_t m, std::size_t n, int M,
                   int fourier_length, int S, int row_shift, int czt_shift, double sigma,
                   double epsilon) {
  require(m >= 1 && n >= 1, "gale_init: image dimensions must be positive");
  require(M > 0 && M % 2 == 0, "gale_init: M must be a positive even integer");
  require(static_cast<std::size_t>(M) >= m, "gale_init: M >= m violated");
  require(fourier_length >= 2 * static_cast<int>(n), "gale_init: N_L >= 2n violated");
  require(fourier_length % 4 == 0, "gale_init: N_L must be divisible by 4");
  require(S > 1 && S <= 15, "gale_init: 1 < S <= 15 violated");
  require(epsilon > 0.0 && epsilon < 1.0, "gale_init: epsilon must lie in (0, 1)");
  if (n > 1) {
    require(std::abs(sigma) < kPi / static_cast<double>(n - 1),
            "gale_init: |sigma| < pi/(n-1) violated");
  }
  for (double theta : thetas) {
    require(theta >= kPi / 4 - kAngleSlack && theta <= 3 * kPi / 4 + kAngleSlack,
            "gale_init: every theta must lie in [pi/4, 3pi/4]");
  }

  GalePlan plan;
  plan.m = m;
  plan.n = n;
  plan.M = M;
  plan.fourier_length = fourier_length;
  plan.S = S;
  plan.row_shift = row_shift;
  plan.czt_shift = czt_shift;
  plan.sigma = sigma;
  plan.epsilon = epsilon;
  plan.thetas.assign(thetas.begin(), thetas.end());

  // p_i = exp(i i (2 pi R1 / M + sigma)), with i R1 reduced mod M exactly.
  const auto shift_weights = fft::range_shift_weights(m, row_shift, static_cast<std::size_t>(M));
  plan.p.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    plan.p[i] = shift_weights[i] * std::polar(1.0, static_cast<double>(i) * sigma);
  }

  const std::size_t P = plan.czt_length();
  const std::size_t rays = thetas.size();
  plan.eta.resize(rays);
  plan.v_first.resize(rays);
  plan.u.resize(rays);
  plan.w_offset.resize(rays);
  std::vector<long> first_shift(rays);
  std::size_t offset = 0;
  for (std::size_t K = 0; K < rays; ++K) {
    const double theta = thetas[K];
    const double eta = fourier_length * (std::cos(theta) / std::sin(theta)) / 4.0;
    const auto lo = static_cast<long>(std::ceil(eta - S));
    const auto hi = static_cast<long>(std::floor(eta + S));
    require(lo + czt_shift >= 0 && hi + czt_shift < static_cast<long>(P),
            "gale_init: truncated sum leaves the CZT output range (check R2)");
    plan.eta[K] = eta;
    first_shift[K] = lo;
    plan.v_first[K] = static_cast<std::size_t>(lo + czt_shift);
    plan.u[K] = static_cast<std::size_t>(hi - lo + 1);
    plan.w_offset[K] = offset;
    offset += plan.u[K];
  }
  plan.terms_per_row = offset;

  plan.czt.reserve(static_cast<std::size_t>(M));
  plan.windows.reserve(static_cast<std::size_t>(M));
  plan.w.resize(static_cast<std::size_t>(M) * plan.terms_per_row);
  const int n_int = static_cast<int>(n);
  for (int I = 0; I < M; ++I) {
    const WindowParams wp =
        window_params(I - row_shift, M, n_int, fourier_length, S, sigma, epsilon);
    CztPlan czt = czt_init(n, wp.alpha, fourier_length, P, czt_shift);
    // Deapodize: r_j /= K(t_j - varpi), t_j - varpi = pi alpha (2j - (n-1)) / N_L.
    for (std::size_t j = 0; j < n; ++j) {
      const double t = kPi * wp.alpha * (2.0 * static_cast<double>(j) - (n_int - 1)) /
                       fourier_length;
      czt.premod[j] /= kb_window(wp.beta, wp.tau, t);
    }
    plan.czt.push_back(std::move(czt));
    plan.windows.push_back(wp);

    Complex* row = plan.w.data() + static_cast<std::size_t>(I) * plan.terms_per_row;
    for (std::size_t K = 0; K < rays; ++K) {
      for (std::size_t k = 0; k < plan.u[K]; ++k) {
        const double d = plan.eta[K] - static_cast<double>(first_shift[K] + static_cast<long>(k));
        row[plan.w_offset[K] + k] =
            std::polar(kb_window_hat(wp.beta, wp.tau, d) / (2.0 * kPi), -d * wp.varpi);
      }
    }
  }

  plan.column_plan = &fft::plan_for(static_cast<std::size_t>(M));
  return plan;
}

RaySamples gale_apply(const ComplexImage& x, const GalePlan& plan, const ApplyOptions& opts) {
  require(x.rows() == plan.m && x.cols() == plan.n,
          "gale_apply: image shape does not match the plan");
  const auto M = static_cast<std::size_t>(plan.M);
  const std::size_t n = plan.n;
  const std::size_t m = plan.m;
  const std::size_t rays = plan.rays();
  const auto threads = thread_count(opts.threads);

  // U holds the padded column FFTs, one frequency row per line.
  ComplexVector U(M * n);
#pragma omp parallel num_threads(threads)
  {
    ComplexVector col(M);
#pragma omp for schedule(static)
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t i = 0; i < m; ++i) col[i] = x(i, j) * plan.p[i];
      std::fill(col.begin() + static_cast<std::ptrdiff_t>(m), col.end(), Complex{});
      plan.column_plan->forward(col);
      for (std::size_t I = 0; I < M; ++I) U[I * n + j] = col[I];
    }
  }

  RaySamples y(M, rays);
#pragma omp parallel num_threads(threads)
  {
    ComplexVector V(plan.czt_length());
    ComplexVector work(plan.czt.front().convolution_length());
#pragma omp for schedule(static)
    for (std::size_t I = 0; I < M; ++I) {
      czt_apply(std::span<const Complex>(U.data() + I * n, n), plan.czt[I], V, work);
      for (std::size_t K = 0; K < rays; ++K) {
        const auto w = plan.weights(I, K);
        const Complex* v = V.data() + plan.v_first[K];
        Complex acc{};
        for (std::size_t k = 0; k < w.size(); ++k) acc += w[k] * v[k];
        y(I, K) = acc;
      }
    }
  }
  add_counts(opts.counters, plan);
  return y;
}

ComplexImage gale_adjoint(const RaySamples& y, const GalePlan& plan, const ApplyOptions& opts) {
  const auto M = static_cast<std::size_t>(plan.M);
  require(y.rows() == M && y.cols() == plan.rays(),
          "gale_adjoint: sample shape does not match the plan");
  const std::size_t n = plan.n;
  const std::size_t m = plan.m;
  const std::size_t rays = plan.rays();
  const auto threads = thread_count(opts.threads);

  ComplexVector U(M * n);
#pragma omp parallel num_threads(threads)
  {
    ComplexVector V(plan.czt_length());
    ComplexVector work(plan.czt.front().convolution_length());
#pragma omp for schedule(static)
    for (std::size_t I = 0; I < M; ++I) {
      std::fill(V.begin(), V.end(), Complex{});
      for (std::size_t K = 0; K < rays; ++K) {
        const auto w = plan.weights(I, K);
        Complex* v = V.data() + plan.v_first[K];
        const Complex s = y(I, K);
        for (std::size_t k = 0; k < w.size(); ++k) v[k] += std::conj(w[k]) * s;
      }
      czt_adjoint(V, plan.czt[I], std::span<Complex>(U.data() + I * n, n), work);
    }
  }

  ComplexImage x(m, n);
#pragma omp parallel num_threads(threads)
  {
    ComplexVector col(M);
#pragma omp for schedule(static)
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t I = 0; I < M; ++I) col[I] = U[I * n + j];
      plan.column_plan->backward(col);
      for (std::size_t i = 0; i < m; ++i) x(i, j) = std::conj(plan.p[i]) * col[i];
    }
  }
  add_counts(opts.counters, plan);
  return x;
}

int default_fourier_length(std::size_t n) {
  require(n >= 1, "default_fourier_length: n must be positive");
  // ceil(2.25 n / 4) * 4 in integers.
  return static_cast<int>((9 * n + 15) / 16 * 4);
}

int fourier_length_for_czt_length(int P, int S) {
  const int nl = 2 * P - 4 * (S + 1);
  require(nl > 0, "fourier_length_for_czt_length: P too small for S");
  return nl;
}

ComplexImage transpose(const ComplexImage& x) {
  ComplexImage t(x.cols(), x.rows());
  for (std::size_t i = 0; i < x.rows(); ++i) {
    for (std::size_t j = 0; j < x.cols(); ++j) t(j, i) = x(i, j);
  }
  return t;
}

GalfdOperator::GalfdOperator(GalfdSpec spec, std::size_t m, std::size_t n, GaleSettings settings)
    : spec_(std::move(spec)), m_(m), n_(n), settings_(settings) {
  spec_.validate_for_image(m, n);
  fourier_length_ = settings_.fourier_length > 0 ? settings_.fourier_length
                                                 : default_fourier_length(std::max(m, n));
  const int M = spec_.M;
  const int S = settings_.S;
  const int quarter = fourier_length_ / 4;
  if (!spec_.v_rays.empty()) {
    std::vector<double> thetas;
    for (auto K : spec_.v_rays) thetas.push_back(spec_.angles[K]);
    vertical_ = gale_init(thetas, m, n, M, fourier_length_, S, M / 2 - 1, quarter + S + 1,
                          spec_.sigma, settings_.epsilon);
  }
  if (!spec_.h_rays.empty()) {
    // On the transposed image a horizontal ray with angle theta is a vertical
    // ray with angle 3pi/2 - theta and offset -sigma.
    std::vector<double> thetas;
    for (auto K : spec_.h_rays) thetas.push_back(1.5 * kPi - spec_.angles[K]);
    horizontal_ = gale_init(thetas, n, m, M, fourier_length_, S, M / 2, quarter + S,
                            -spec_.sigma, settings_.epsilon);
  }
}

RaySamples GalfdOperator::forward(const ComplexImage& x) const { return forward(x, nullptr); }

ComplexImage GalfdOperator::adjoint(const RaySamples& y) const { return adjoint(y, nullptr); }

RaySamples GalfdOperator::forward(const ComplexImage& x, GaleCounters* counters) const {
  require(x.rows() == m_ && x.cols() == n_, "GalfdOperator::forward: image shape mismatch");
  const auto M = static_cast<std::size_t>(spec_.M);
  RaySamples y(M, ray_count());
  const ApplyOptions opts{settings_.threads, counters};
  if (vertical_) {
    const auto part = gale_apply(x, *vertical_, opts);
    for (std::size_t k = 0; k < spec_.v_rays.size(); ++k) {
      for (std::size_t I = 0; I < M; ++I) y(I, spec_.v_rays[k]) = part(I, k);
    }
  }
  if (horizontal_) {
    const auto part = gale_apply(transpose(x), *horizontal_, opts);
    for (std::size_t k = 0; k < spec_.h_rays.size(); ++k) {
      for (std::size_t I = 0; I < M; ++I) y(I, spec_.h_rays[k]) = part(I, k);
    }
  }
  return y;
}

ComplexImage GalfdOperator::adjoint(const RaySamples& y, GaleCounters* counters) const {
  const auto M = static_cast<std::size_t>(spec_.M);
  require(y.rows() == M && y.cols() == ray_count(),
          "GalfdOperator::adjoint: sample shape mismatch");
  const ApplyOptions opts{settings_.threads, counters};
  ComplexImage x(m_, n_);
  if (vertical_) {
    RaySamples part(M, spec_.v_rays.size());
    for (std::size_t k = 0; k < spec_.v_rays.size(); ++k) {
      for (std::size_t I = 0; I < M; ++I) part(I, k) = y(I, spec_.v_rays[k]);
    }
    x = gale_adjoint(part, *vertical_, opts);
  }
  if (horizontal_) {
    RaySamples part(M, spec_.h_rays.size());
    for (std::size_t k = 0; k < spec_.h_rays.size(); ++k) {
      for (std::size_t I = 0; I < M; ++I) part(I, k) = y(I, spec_.h_rays[k]);
    }
    const auto xt = gale_adjoint(part, *horizontal_, opts);
    for (std::size_t i = 0; i < m_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) x(i, j) += xt(j, i);
    }
  }
  return x;
}

std::vector<double> GalfdOperator::error_bounds(double x_l1) const {
  const auto M = static_cast<std::size_t>(spec_.M);
  const std::size_t N = ray_count();
  std::vector<double> bounds(M * N);
  const auto fill = [&](const GalePlan& plan, const std::vector<std::size_t>& rays) {
    for (std::size_t I = 0; I < M; ++I) {
      const double b = error_bound(plan.S, plan.windows[I], x_l1);
      for (auto K : rays) bounds[I * N + K] = b;
    }
  };
  if (vertical_) fill(*vertical_, spec_.v_rays);
  if (horizontal_) fill(*horizontal_, spec_.h_rays);
  return bounds;
}

RaySamples galfd_forward(const ComplexImage& x, const GalfdSpec& spec,
                         const GaleSettings& settings) {
  return GalfdOperator(spec, x.rows(), x.cols(), settings).forward(x);
}

ComplexImage galfd_adjoint(const RaySamples& y, const GalfdSpec& spec, std::size_t m,
                           std::size_t n, const GaleSettings& settings) {
  return GalfdOperator(spec, m, n, settings).adjoint(y);
}

}  // namespace gale

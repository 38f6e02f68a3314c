#include "gale/recon.hpp"

#include <cmath>

namespace gale {
namespace {

void require_layout(const RaySamples& y, const GalfdSpec& spec, const char* who) {
  require(y.rows() == static_cast<std::size_t>(spec.M) && y.cols() == spec.angles.size(),
          std::string(who) + ": samples must be M x N for the given domain");
}

template <typename Tag>
double norm2(const Array2D<Tag>& a) {
  double total = 0.0;
  for (const auto& v : a.values()) total += std::norm(v);
  return total;
}

// a += s * b
template <typename Tag>
void axpy(Array2D<Tag>& a, Complex s, const Array2D<Tag>& b) {
  auto av = a.values();
  auto bv = b.values();
  for (std::size_t k = 0; k < av.size(); ++k) av[k] += s * bv[k];
}

RaySamples subtract(const RaySamples& a, const RaySamples& b) {
  RaySamples out = a;
  axpy(out, -1.0, b);
  return out;
}

}  // namespace

RaySamples apply_z(const RaySamples& y, const GalfdSpec& spec, std::size_t m, std::size_t n,
                   Direction direction) {
  require_layout(y, spec, "apply_z");
  require(m >= 1 && n >= 1, "apply_z: image dimensions must be positive");
  const auto points = galfd_points(spec);
  const auto M = static_cast<std::size_t>(spec.M);
  const double sign = direction == Direction::forward ? 1.0 : -1.0;
  const double scale = 1.0 / (static_cast<double>(m) * static_cast<double>(n));
  RaySamples out(y.rows(), y.cols());
  for (std::size_t K = 0; K < y.cols(); ++K) {
    for (std::size_t I = 0; I < M; ++I) {
      const auto& pt = points[K * M + I];
      const double phase = 0.5 * static_cast<double>(n) * pt.xi +
                           0.5 * static_cast<double>(m) * pt.upsilon;
      out(I, K) = y(I, K) * std::polar(scale, sign * phase);
    }
  }
  return out;
}

RaySamples apply_dcf(const RaySamples& y, const GalfdSpec& spec) {
  require_layout(y, spec, "apply_dcf");
  const auto points = galfd_points(spec);
  const auto M = static_cast<std::size_t>(spec.M);
  RaySamples out(y.rows(), y.cols());
  for (std::size_t K = 0; K < y.cols(); ++K) {
    for (std::size_t I = 0; I < M; ++I) {
      const auto& pt = points[K * M + I];
      out(I, K) = y(I, K) * std::hypot(pt.xi, pt.upsilon);
    }
  }
  return out;
}

ComplexImage fbp_reconstruct(const CoilData& data, const LinearOperator& op,
                             const GalfdSpec& spec) {
  require(!data.coils.empty(), "fbp_reconstruct: no coil data");
  const std::size_t m = op.image_rows();
  const std::size_t n = op.image_cols();
  std::vector<double> power(m * n, 0.0);
  for (const auto& y : data.coils) {
    const auto filtered = apply_z(apply_dcf(y, spec), spec, m, n, Direction::adjoint);
    const auto xc = op.adjoint(filtered);
    for (std::size_t p = 0; p < power.size(); ++p) power[p] += std::norm(xc.values()[p]);
  }
  ComplexImage x(m, n);
  for (std::size_t p = 0; p < power.size(); ++p) x.values()[p] = std::sqrt(power[p]);
  return x;
}

ComplexImage fbp_reconstruct(const CoilData& data, const GalfdSpec& spec, std::size_t m,
                             std::size_t n, const GaleSettings& settings) {
  return fbp_reconstruct(data, GalfdOperator(spec, m, n, settings), spec);
}

CgResult cg_least_squares(const LinearOperator& op, const RaySamples& y, const ComplexImage& x0,
                          int iters) {
  require(iters >= 0, "cg_least_squares: iteration count must be non-negative");
  require(x0.rows() == op.image_rows() && x0.cols() == op.image_cols(),
          "cg_least_squares: x0 shape does not match the operator");
  require(y.rows() == op.samples_per_ray() && y.cols() == op.ray_count(),
          "cg_least_squares: data shape does not match the operator");

  CgResult result;
  result.x = x0;
  RaySamples s = subtract(y, op.forward(x0));
  ComplexImage r = op.adjoint(s);
  ComplexImage p = r;
  double gamma = norm2(r);
  result.residual_norms.push_back(std::sqrt(norm2(s)));
  result.normal_residual_norms.push_back(std::sqrt(gamma));

  for (int k = 0; k < iters; ++k) {
    if (gamma == 0.0) break;  // already at a least-squares solution
    const RaySamples q = op.forward(p);
    const double delta = norm2(q);
    if (delta == 0.0) {
      result.breakdown = true;
      break;
    }
    const double a = gamma / delta;
    axpy(result.x, a, p);
    axpy(s, -a, q);
    r = op.adjoint(s);
    const double gamma_next = norm2(r);
    const double b = gamma_next / gamma;
    gamma = gamma_next;
    auto pv = p.values();
    auto rv = r.values();
    for (std::size_t i = 0; i < pv.size(); ++i) pv[i] = rv[i] + b * pv[i];
    ++result.iterations;
    result.residual_norms.push_back(std::sqrt(norm2(s)));
    result.normal_residual_norms.push_back(std::sqrt(gamma));
  }
  return result;
}

ComplexImage landweber_step(const LinearOperator& op, const ComplexImage& x, const RaySamples& y,
                            double lambda, double r, const ComplexImage& mu) {
  require(x.rows() == op.image_rows() && x.cols() == op.image_cols(),
          "landweber_step: image shape does not match the operator");
  require(mu.empty() || mu.same_shape(x), "landweber_step: prior shape does not match the image");
  require(std::isfinite(lambda) && std::isfinite(r), "landweber_step: lambda and r must be finite");
  const auto g = op.adjoint(subtract(y, op.forward(x)));
  ComplexImage next = x;
  auto out = next.values();
  const auto xv = x.values();
  const auto gv = g.values();
  for (std::size_t i = 0; i < out.size(); ++i) {
    const Complex prior = mu.empty() ? Complex{} : mu.values()[i];
    out[i] = xv[i] + lambda * (r * r * gv[i] + (prior - xv[i]));
  }
  return next;
}

ComplexImage landweber(const LinearOperator& op, const RaySamples& y, const SolverConfig& config) {
  require(config.iters >= 0, "landweber: iteration count must be non-negative");
  ComplexImage x = config.x0.empty() ? ComplexImage(op.image_rows(), op.image_cols()) : config.x0;
  for (int k = 0; k < config.iters; ++k) {
    x = landweber_step(op, x, y, config.lambda, config.r, config.mu);
  }
  return x;
}

}  // namespace gale

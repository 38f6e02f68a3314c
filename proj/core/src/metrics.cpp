#include "gale/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace gale {
namespace {

void require_same_length(std::span<const Complex> a, std::span<const Complex> b,
                         const char* who) {
  require(a.size() == b.size(), std::string(who) + ": reference and approximation differ in size");
}

}  // namespace

double mre(std::span<const Complex> y, std::span<const Complex> yhat) {
  require_same_length(y, yhat, "mre");
  require(!y.empty(), "mre: empty input");
  double total = 0.0;
  for (std::size_t k = 0; k < y.size(); ++k) {
    const double ref = std::abs(y[k]);
    require(ref != 0.0, "mre: reference entry " + std::to_string(k) + " is zero");
    total += std::abs(y[k] - yhat[k]) / ref;
  }
  return total / static_cast<double>(y.size());
}

double mre_skip_zeros(std::span<const Complex> y, std::span<const Complex> yhat,
                      std::size_t& skipped) {
  require_same_length(y, yhat, "mre");
  skipped = 0;
  double total = 0.0;
  for (std::size_t k = 0; k < y.size(); ++k) {
    const double ref = std::abs(y[k]);
    if (ref == 0.0) {
      ++skipped;
      continue;
    }
    total += std::abs(y[k] - yhat[k]) / ref;
  }
  const std::size_t used = y.size() - skipped;
  require(used > 0, "mre: every reference entry is zero");
  return total / static_cast<double>(used);
}

double rse(std::span<const Complex> y, std::span<const Complex> yhat) {
  require_same_length(y, yhat, "rse");
  double num = 0.0;
  double den = 0.0;
  for (std::size_t k = 0; k < y.size(); ++k) {
    num += std::norm(y[k] - yhat[k]);
    den += std::norm(y[k]);
  }
  require(den != 0.0, "rse: reference is identically zero");
  return num / den;
}

double max_abs_error(std::span<const Complex> y, std::span<const Complex> yhat) {
  require_same_length(y, yhat, "max_abs_error");
  double worst = 0.0;
  for (std::size_t k = 0; k < y.size(); ++k) worst = std::max(worst, std::abs(y[k] - yhat[k]));
  return worst;
}

double l1_norm(std::span<const Complex> x) {
  double total = 0.0;
  for (const auto& v : x) total += std::abs(v);
  return total;
}

double l2_norm(std::span<const Complex> x) {
  double total = 0.0;
  for (const auto& v : x) total += std::norm(v);
  return std::sqrt(total);
}

}  // namespace gale

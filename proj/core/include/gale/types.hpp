#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gale {

using Complex = std::complex<double>;
using ComplexVector = std::vector<Complex>;

/// Raised for every violated precondition; the message names the constraint.
class InvalidArgument : public std::invalid_argument {
 public:
  explicit InvalidArgument(const std::string& what) : std::invalid_argument(what) {}
};

inline void require(bool condition, const std::string& message) {
  if (!condition) throw InvalidArgument(message);
}

/// Dense row-major complex array. The tag keeps images and ray data apart at
/// the type level even though they share a layout.
template <typename Tag>
class Array2D {
 public:
  Array2D() = default;
  Array2D(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Array2D(std::size_t rows, std::size_t cols, ComplexVector data)
      : rows_(rows), cols_(cols), data_(std::move(data)) {
    require(data_.size() == rows_ * cols_, "Array2D: payload size does not match rows*cols");
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t size() const noexcept { return data_.size(); }
  bool empty() const noexcept { return data_.empty(); }

  Complex& operator()(std::size_t i, std::size_t j) noexcept { return data_[i * cols_ + j]; }
  const Complex& operator()(std::size_t i, std::size_t j) const noexcept {
    return data_[i * cols_ + j];
  }

  // Views into a temporary would dangle, so rvalue access is rejected.
  std::span<Complex> values() & noexcept { return data_; }
  std::span<const Complex> values() const& noexcept { return data_; }
  std::span<const Complex> values() const&& = delete;
  std::span<Complex> row(std::size_t i) noexcept { return {data_.data() + i * cols_, cols_}; }
  std::span<const Complex> row(std::size_t i) const noexcept {
    return {data_.data() + i * cols_, cols_};
  }

  const ComplexVector& vector() const& noexcept { return data_; }
  ComplexVector&& vector() && noexcept { return std::move(data_); }

  bool same_shape(const Array2D& other) const noexcept {
    return rows_ == other.rows_ && cols_ == other.cols_;
  }

  friend bool operator==(const Array2D&, const Array2D&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  ComplexVector data_;
};

struct ImageTag;
struct RayTag;

/// m x n image x_{i,j}; row i, column j.
using ComplexImage = Array2D<ImageTag>;
/// M x N DTFT samples; column K is ray K, row is the ascending index along the ray.
using RaySamples = Array2D<RayTag>;

}  // namespace gale

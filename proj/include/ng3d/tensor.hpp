#pragma once

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "ng3d/errors.hpp"

namespace ng3d {

/// Dense row-major tensor of doubles, rank 1..5. The whole toolkit runs in
/// 64-bit arithmetic so gradient checks and determinism contracts hold.
class Tensor {
 public:
  Tensor() = default;

  explicit Tensor(std::vector<int64_t> shape, double fill = 0.0) : shape_(std::move(shape)) {
    int64_t n = 1;
    for (int64_t d : shape_) {
      if (d <= 0) fail(Errc::BadShape, "non-positive tensor dimension");
      n *= d;
    }
    data_.assign(static_cast<size_t>(n), fill);
  }

  static Tensor from_data(std::vector<int64_t> shape, std::vector<double> data) {
    Tensor t;
    t.shape_ = std::move(shape);
    int64_t n = 1;
    for (int64_t d : t.shape_) n *= d;
    if (n != static_cast<int64_t>(data.size()))
      fail(Errc::ShapeMismatch, "data length does not match shape");
    t.data_ = std::move(data);
    return t;
  }

  static Tensor zeros_like(const Tensor& other) { return Tensor(other.shape_); }

  int rank() const { return static_cast<int>(shape_.size()); }
  int64_t dim(int i) const { return shape_[static_cast<size_t>(i)]; }
  const std::vector<int64_t>& shape() const { return shape_; }
  int64_t numel() const { return static_cast<int64_t>(data_.size()); }
  bool empty() const { return data_.empty(); }

  double* data() { return data_.data(); }
  const double* data() const { return data_.data(); }
  double& operator[](int64_t i) { return data_[static_cast<size_t>(i)]; }
  double operator[](int64_t i) const { return data_[static_cast<size_t>(i)]; }

  bool same_shape(const Tensor& other) const { return shape_ == other.shape_; }

  bool all_finite() const {
    for (double v : data_)
      if (!std::isfinite(v)) return false;
    return true;
  }

  void fill(double v) { std::fill(data_.begin(), data_.end(), v); }

  double min() const;
  double max() const;
  double mean() const;

  std::string shape_str() const;

 private:
  std::vector<int64_t> shape_;
  std::vector<double> data_;
};

inline int64_t idx5(const Tensor& t, int64_t n, int64_t c, int64_t d, int64_t h, int64_t w) {
  return (((n * t.dim(1) + c) * t.dim(2) + d) * t.dim(3) + h) * t.dim(4) + w;
}

inline int64_t idx3(const Tensor& t, int64_t d, int64_t h, int64_t w) {
  return (d * t.dim(1) + h) * t.dim(2) + w;
}

void require_same_shape(const Tensor& a, const Tensor& b, const char* what);

}  // namespace ng3d

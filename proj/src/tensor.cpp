#include "ng3d/tensor.hpp"

#include <algorithm>
#include <sstream>

namespace ng3d {

double Tensor::min() const {
  return *std::min_element(data_.begin(), data_.end());
}

double Tensor::max() const {
  return *std::max_element(data_.begin(), data_.end());
}

double Tensor::mean() const {
  double s = 0.0;
  for (double v : data_) s += v;
  return s / static_cast<double>(data_.size());
}

std::string Tensor::shape_str() const {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < shape_.size(); ++i) os << (i ? "," : "") << shape_[i];
  os << ")";
  return os.str();
}

void require_same_shape(const Tensor& a, const Tensor& b, const char* what) {
  if (!a.same_shape(b))
    fail(Errc::ShapeMismatch,
         std::string(what) + ": " + a.shape_str() + " vs " + b.shape_str());
}

}  // namespace ng3d

#pragma once

#include <Eigen/Core>

#include <cstddef>
#include <initializer_list>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace fev {

using Shape = std::vector<int>;

std::string shape_string(const Shape& shape);
std::size_t shape_numel(const Shape& shape);

/// Thrown whenever operand extents are incompatible. The message names both shapes.
class ShapeError : public std::invalid_argument {
 public:
  ShapeError(const std::string& what, const Shape& a, const Shape& b);
  explicit ShapeError(const std::string& what) : std::invalid_argument(what) {}
};

/// Dense row-major n-dimensional array. Storage is an Eigen array so that
/// kernels can map contiguous blocks straight into GEMM calls.
template <typename T>
class BasicTensor {
 public:
  using Scalar = T;
  using Storage = Eigen::Array<T, Eigen::Dynamic, 1>;

  BasicTensor() = default;

  explicit BasicTensor(Shape shape, T fill = T(0)) : shape_(std::move(shape)) {
    check_extents();
    values_.setConstant(static_cast<Eigen::Index>(shape_numel(shape_)), fill);
  }

  BasicTensor(Shape shape, std::span<const T> values) : shape_(std::move(shape)) {
    check_extents();
    if (values.size() != shape_numel(shape_)) {
      throw ShapeError("tensor: " + std::to_string(values.size()) + " values for shape " +
                       shape_string(shape_));
    }
    values_ = Eigen::Map<const Storage>(values.data(), static_cast<Eigen::Index>(values.size()));
  }

  BasicTensor(Shape shape, std::initializer_list<T> values)
      : BasicTensor(std::move(shape), std::span<const T>(values.begin(), values.size())) {}

  static BasicTensor zeros(Shape shape) { return BasicTensor(std::move(shape), T(0)); }
  static BasicTensor ones(Shape shape) { return BasicTensor(std::move(shape), T(1)); }
  static BasicTensor scalar(T v) { return BasicTensor(Shape{1}, v); }

  const Shape& shape() const { return shape_; }
  int rank() const { return static_cast<int>(shape_.size()); }
  int dim(int i) const { return shape_.at(static_cast<std::size_t>(i)); }
  std::size_t size() const { return static_cast<std::size_t>(values_.size()); }
  bool empty() const { return values_.size() == 0; }

  T* data() { return values_.data(); }
  const T* data() const { return values_.data(); }
  std::span<T> values() { return {values_.data(), size()}; }
  std::span<const T> values() const { return {values_.data(), size()}; }

  Storage& array() { return values_; }
  const Storage& array() const { return values_; }

  T& operator[](std::size_t i) { return values_[static_cast<Eigen::Index>(i)]; }
  T operator[](std::size_t i) const { return values_[static_cast<Eigen::Index>(i)]; }

  /// Index of element (n, c, y, x) in a rank-4 NCHW tensor.
  std::size_t offset(int n, int c, int y, int x) const {
    return ((static_cast<std::size_t>(n) * shape_[1] + c) * shape_[2] + y) * shape_[3] + x;
  }
  T& at(int n, int c, int y, int x) { return (*this)[offset(n, c, y, x)]; }
  T at(int n, int c, int y, int x) const { return (*this)[offset(n, c, y, x)]; }
  /// Element (c, y, x) of a rank-3 CHW tensor.
  T& at(int c, int y, int x) { return (*this)[(static_cast<std::size_t>(c) * shape_[1] + y) * shape_[2] + x]; }
  T at(int c, int y, int x) const { return (*this)[(static_cast<std::size_t>(c) * shape_[1] + y) * shape_[2] + x]; }

  BasicTensor reshaped(Shape shape) const {
    if (shape_numel(shape) != size()) {
      throw ShapeError("reshape: element count differs", shape_, shape);
    }
    BasicTensor out;
    out.shape_ = std::move(shape);
    out.values_ = values_;
    return out;
  }

  bool all_finite() const { return values_.isFinite().all(); }

  template <typename U>
  BasicTensor<U> cast() const {
    BasicTensor<U> out(shape_);
    out.array() = values_.template cast<U>();
    return out;
  }

  friend bool operator==(const BasicTensor& a, const BasicTensor& b) {
    return a.shape_ == b.shape_ && (a.values_ == b.values_).all();
  }

 private:
  void check_extents() const {
    for (int e : shape_) {
      if (e <= 0) throw ShapeError("tensor extents must be positive, got " + shape_string(shape_));
    }
  }

  Shape shape_;
  Storage values_;
};

using Tensor = BasicTensor<float>;
using TensorD = BasicTensor<double>;

}  // namespace fev

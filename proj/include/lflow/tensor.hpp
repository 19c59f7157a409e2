#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace lflow {

/// Dense row-major float64 array. Rank and extents are dynamic; all autodiff
/// and lattice storage goes through this one type.
class Tensor {
  public:
    Tensor() = default;
    explicit Tensor(std::vector<int> shape) : shape_(std::move(shape)), data_(count(shape_), 0.0) {}
    Tensor(std::vector<int> shape, std::vector<double> data);

    static Tensor scalar(double v) { return Tensor({1}, {v}); }
    static Tensor full(std::vector<int> shape, double v);

    const std::vector<int>& shape() const { return shape_; }
    int rank() const { return static_cast<int>(shape_.size()); }
    int size() const { return static_cast<int>(data_.size()); }
    bool empty() const { return data_.empty(); }

    double* data() { return data_.data(); }
    const double* data() const { return data_.data(); }
    double& operator[](int i) { return data_[static_cast<std::size_t>(i)]; }
    double operator[](int i) const { return data_[static_cast<std::size_t>(i)]; }

    /// Value of a single-element tensor.
    double item() const;

    bool same_shape(const Tensor& other) const { return shape_ == other.shape_; }
    bool all_finite() const;
    void fill(double v) { std::fill(data_.begin(), data_.end(), v); }

    std::string shape_str() const;

  private:
    static std::size_t count(const std::vector<int>& shape);

    std::vector<int> shape_;
    std::vector<double> data_;
};

} // namespace lflow

#include "lflow/tensor.hpp"

#include <algorithm>
#include <cmath>

#include "lflow/errors.hpp"

namespace lflow {

std::size_t Tensor::count(const std::vector<int>& shape) {
    std::size_t n = 1;
    for (int d : shape) {
        if (d <= 0) throw DomainError("tensor dimensions must be positive");
        n *= static_cast<std::size_t>(d);
    }
    return n;
}

Tensor::Tensor(std::vector<int> shape, std::vector<double> data)
    : shape_(std::move(shape)), data_(std::move(data)) {
    if (count(shape_) != data_.size())
        throw DomainError("tensor data length does not match shape " + shape_str());
}

Tensor Tensor::full(std::vector<int> shape, double v) {
    Tensor t(std::move(shape));
    t.fill(v);
    return t;
}

double Tensor::item() const {
    if (size() != 1) throw DomainError("item() on tensor of shape " + shape_str());
    return data_[0];
}

bool Tensor::all_finite() const {
    return std::all_of(data_.begin(), data_.end(), [](double v) { return std::isfinite(v); });
}

std::string Tensor::shape_str() const {
    std::string s = "[";
    for (std::size_t i = 0; i < shape_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(shape_[i]);
    }
    return s + "]";
}

} // namespace lflow

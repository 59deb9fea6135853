#pragma once

#include <cstddef>
#include <vector>

namespace gemmkit {

// Dense square matrix, row-major: (*this)(i, j) == data[i * n + j].
template <typename T>
struct Matrix {
    std::size_t n = 0;
    std::vector<T> data;

    Matrix() = default;
    explicit Matrix(std::size_t order) : n(order), data(order * order, T{}) {}

    T& operator()(std::size_t i, std::size_t j) { return data[i * n + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data[i * n + j]; }

    bool operator==(const Matrix&) const = default;
};

} // namespace gemmkit

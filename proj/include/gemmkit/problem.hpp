#pragma once

#include <cmath>
#include <cstdint>
#include <random>

#include "gemmkit/kernel_spec.hpp"
#include "gemmkit/matrix.hpp"

namespace gemmkit {

// One GEMM problem: C = alpha * A x B + beta * C.
// c_initial is kept so every repetition starts from the same C.
template <typename T>
struct ProblemInstance {
    std::size_t n = 0;
    Matrix<T> a;
    Matrix<T> b;
    Matrix<T> c_initial;
    T alpha{};
    T beta{};
    std::uint64_t seed = 0;
};

namespace detail {

// Maps a raw 64-bit draw to the open interval (-0.5, +0.5). std::mt19937_64
// output is pinned by the standard, and this mapping avoids the
// distribution-object portability hole, so matrices are bit-identical
// across platforms.
inline double uniform_open(std::uint64_t x) {
    return (static_cast<double>(x >> 11) + 0.5) * 0x1.0p-53 - 0.5;
}

template <typename T>
void fill_uniform(Matrix<T>& m, std::mt19937_64& rng) {
    for (auto& e : m.data) {
        T v = static_cast<T>(uniform_open(rng()));
        // Casting to float can round onto the interval boundary; nudge back in.
        if (v <= T(-0.5)) v = std::nextafter(T(-0.5), T(0));
        if (v >= T(0.5)) v = std::nextafter(T(0.5), T(0));
        e = v;
    }
}

} // namespace detail

// Deterministic: identical (n, seed) yield bit-identical matrices.
// Fill order is a, then b, then c_initial, from one seeded generator.
template <typename T>
ProblemInstance<T> generate_problem(std::size_t n, std::uint64_t seed, T alpha, T beta) {
    ProblemInstance<T> p;
    p.n = n;
    p.seed = seed;
    p.alpha = alpha;
    p.beta = beta;
    p.a = Matrix<T>(n);
    p.b = Matrix<T>(n);
    p.c_initial = Matrix<T>(n);
    std::mt19937_64 rng(seed);
    detail::fill_uniform(p.a, rng);
    detail::fill_uniform(p.b, rng);
    detail::fill_uniform(p.c_initial, rng);
    return p;
}

} // namespace gemmkit

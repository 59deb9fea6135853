#pragma once

#include <chrono>
#include <cstdint>
#include <regex>
#include <string>
#include <utility>
#include <vector>

#include "gemmkit/errors.hpp"
#include "gemmkit/kernel_spec.hpp"
#include "gemmkit/matrix.hpp"
#include "gemmkit/problem.hpp"

namespace gemmkit {

// Work-group shape (s_j, s_i): s_j * s_i work-items per group.
struct TileShape {
    int s_j = 8;
    int s_i = 8;

    bool operator==(const TileShape&) const = default;
    int total() const { return s_j * s_i; }
};

struct LaunchConfig {
    KernelSpec kernel;
    std::size_t n = 0;
    TileShape tile;
    int repetitions = 4;
    std::uint64_t seed = 42;
    double alpha = 1.5;
    double beta = 0.5;
};

// Global work must divide evenly into coarsened blocks and work-groups.
inline void check_divisibility(const KernelSpec& spec, std::size_t n, const TileShape& tile) {
    const std::size_t bj = static_cast<std::size_t>(spec.d_j) * tile.s_j;
    const std::size_t bi = static_cast<std::size_t>(spec.d_i) * tile.s_i;
    if (n % bj != 0)
        throw ConfigError("order " + std::to_string(n) + " not divisible by dj*sj = " +
                          std::to_string(bj));
    if (n % bi != 0)
        throw ConfigError("order " + std::to_string(n) + " not divisible by di*si = " +
                          std::to_string(bi));
}

enum class KernelVariant {
    direct, // each work-item computes its d_j x d_i block straight from A, B
    tiled,  // k proceeds in fixed-depth stages through a per-group scratch buffer
};

// Variant keys look like "SGEMM_NT_4x1_barrier.cl"; the "_barrier" suffix
// selects the staged (cache-tiled) path.
inline KernelVariant variant_from_key(const std::string& key) {
    static const std::regex pattern(R"([SD]GEMM_[NT][NT]_\d+x\d+(_barrier)?\.cl)");
    std::smatch m;
    if (!std::regex_match(key, m, pattern)) throw UnknownVariant(key);
    return m[1].matched ? KernelVariant::tiled : KernelVariant::direct;
}

namespace detail {

// Element accessors honouring the layout: a(i, k) reads A or A^T, b(k, j)
// reads B or B^T, over row-major storage.
template <typename T>
struct OperandView {
    const T* data;
    std::size_t n;
    bool transposed;

    T operator()(std::size_t r, std::size_t c) const {
        return transposed ? data[c * n + r] : data[r * n + c];
    }
};

} // namespace detail

// Plain triple loop with index order (i, j, k), accumulating in the problem's
// precision; this is the validation oracle.
template <typename T>
Matrix<T> reference_gemm(const ProblemInstance<T>& problem, const Flavour& layout) {
    const std::size_t n = problem.n;
    detail::OperandView<T> a{problem.a.data.data(), n, layout.trans_a == Layout::T};
    detail::OperandView<T> b{problem.b.data.data(), n, layout.trans_b == Layout::T};
    Matrix<T> c(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            T acc{};
            for (std::size_t k = 0; k < n; ++k) acc += a(i, k) * b(k, j);
            c(i, j) = problem.alpha * acc + problem.beta * problem.c_initial(i, j);
        }
    }
    return c;
}

namespace detail {

// Direct path: iterate work-groups, then work-items, each computing a
// d_j x d_i block of C with a k-ascending accumulation per element.
template <typename T>
void run_direct(const KernelSpec& spec, const LaunchConfig& config,
                const ProblemInstance<T>& problem, Matrix<T>& c) {
    const std::size_t n = problem.n;
    OperandView<T> a{problem.a.data.data(), n, spec.trans_a == Layout::T};
    OperandView<T> b{problem.b.data.data(), n, spec.trans_b == Layout::T};
    const T alpha = static_cast<T>(config.alpha);
    const T beta = static_cast<T>(config.beta);
    const std::size_t dj = spec.d_j, di = spec.d_i;
    const std::size_t groups_j = n / (dj * config.tile.s_j);
    const std::size_t groups_i = n / (di * config.tile.s_i);

    for (std::size_t gi = 0; gi < groups_i; ++gi)
    for (std::size_t gj = 0; gj < groups_j; ++gj)
    for (std::size_t li = 0; li < static_cast<std::size_t>(config.tile.s_i); ++li)
    for (std::size_t lj = 0; lj < static_cast<std::size_t>(config.tile.s_j); ++lj) {
        const std::size_t row0 = (gi * config.tile.s_i + li) * di;
        const std::size_t col0 = (gj * config.tile.s_j + lj) * dj;
        for (std::size_t bi = 0; bi < di; ++bi)
        for (std::size_t bj = 0; bj < dj; ++bj) {
            const std::size_t i = row0 + bi, j = col0 + bj;
            T acc{};
            for (std::size_t k = 0; k < n; ++k) acc += a(i, k) * b(k, j);
            c(i, j) = alpha * acc + beta * problem.c_initial(i, j);
        }
    }
}

// Staged path: per work-group, k advances in tiles of kTileDepth; the group's
// operand sub-blocks are copied into scratch before accumulation, modelling a
// barrier-synchronised cooperative load. The per-element accumulation order
// over k stays ascending, so results are bit-identical to the direct path.
inline constexpr std::size_t kTileDepth = 8;

template <typename T>
void run_tiled(const KernelSpec& spec, const LaunchConfig& config,
               const ProblemInstance<T>& problem, Matrix<T>& c) {
    const std::size_t n = problem.n;
    OperandView<T> a{problem.a.data.data(), n, spec.trans_a == Layout::T};
    OperandView<T> b{problem.b.data.data(), n, spec.trans_b == Layout::T};
    const T alpha = static_cast<T>(config.alpha);
    const T beta = static_cast<T>(config.beta);
    const std::size_t dj = spec.d_j, di = spec.d_i;
    const std::size_t group_cols = dj * config.tile.s_j;
    const std::size_t group_rows = di * config.tile.s_i;
    const std::size_t groups_j = n / group_cols;
    const std::size_t groups_i = n / group_rows;

    std::vector<T> scratch_a(group_rows * kTileDepth);
    std::vector<T> scratch_b(kTileDepth * group_cols);
    std::vector<T> acc(group_rows * group_cols);

    for (std::size_t gi = 0; gi < groups_i; ++gi)
    for (std::size_t gj = 0; gj < groups_j; ++gj) {
        const std::size_t row0 = gi * group_rows;
        const std::size_t col0 = gj * group_cols;
        std::fill(acc.begin(), acc.end(), T{});

        for (std::size_t k0 = 0; k0 < n; k0 += kTileDepth) {
            const std::size_t kd = std::min(kTileDepth, n - k0);
            // cooperative load of the group's operand tiles
            for (std::size_t r = 0; r < group_rows; ++r)
                for (std::size_t kk = 0; kk < kd; ++kk)
                    scratch_a[r * kTileDepth + kk] = a(row0 + r, k0 + kk);
            for (std::size_t kk = 0; kk < kd; ++kk)
                for (std::size_t cc = 0; cc < group_cols; ++cc)
                    scratch_b[kk * group_cols + cc] = b(k0 + kk, col0 + cc);
            // accumulate from scratch
            for (std::size_t r = 0; r < group_rows; ++r)
                for (std::size_t cc = 0; cc < group_cols; ++cc) {
                    T s = acc[r * group_cols + cc];
                    for (std::size_t kk = 0; kk < kd; ++kk)
                        s += scratch_a[r * kTileDepth + kk] * scratch_b[kk * group_cols + cc];
                    acc[r * group_cols + cc] = s;
                }
        }

        for (std::size_t r = 0; r < group_rows; ++r)
            for (std::size_t cc = 0; cc < group_cols; ++cc)
                c(row0 + r, col0 + cc) =
                    alpha * acc[r * group_cols + cc] + beta * problem.c_initial(row0 + r, col0 + cc);
    }
}

} // namespace detail

// Runs one kernel variant and returns the result matrix and the wall-clock
// time of the compute region only. A, B and c_initial are never mutated.
template <typename T>
std::pair<Matrix<T>, double> run_kernel(const KernelSpec& spec, const LaunchConfig& config,
                                        const ProblemInstance<T>& problem) {
    check_divisibility(spec, problem.n, config.tile);
    const KernelVariant variant = variant_from_key(spec.source_id);

    Matrix<T> c(problem.n);
    const auto start = std::chrono::steady_clock::now();
    switch (variant) {
        case KernelVariant::direct: detail::run_direct(spec, config, problem, c); break;
        case KernelVariant::tiled: detail::run_tiled(spec, config, problem, c); break;
    }
    const auto stop = std::chrono::steady_clock::now();
    const double elapsed = std::chrono::duration<double>(stop - start).count();
    return {std::move(c), elapsed};
}

// 2*n^3: one multiply + one add per innermost iteration; the alpha/beta
// epilogue (3*n^2) is excluded.
inline std::uint64_t flops_for(std::size_t n) {
    return 2ull * n * n * n;
}

} // namespace gemmkit

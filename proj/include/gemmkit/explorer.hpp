#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <vector>

#include "gemmkit/harness.hpp"

namespace gemmkit {

// Default sweep values for the order and local-work-size explorations.
inline const std::vector<std::size_t> kDefaultOrderSweep = {64,  96,  128, 192, 256, 384,
                                                            512, 640, 768, 896, 1024};
inline const std::vector<std::size_t> kDefaultTileOrders = {128, 256, 384, 512};
inline const std::vector<int> kDefaultTileTotals = {16, 32, 64, 128};

enum class TileHeuristic {
    exhaustive,
    prefer_slim, // keep only shapes with s_j <= s_i
};

using PointSink = std::function<void(const ExperimentPoint&)>;

namespace detail {

inline ExperimentPoint skipped_point(const LaunchConfig& config, const std::string& reason) {
    ExperimentPoint point;
    point.id = point_id(config);
    point.config = config;
    point.skip_reason = reason;
    return point;
}

inline ExperimentPoint run_or_skip(const LaunchConfig& config, PowerSensor* sensor,
                                   const RunOptions& options) {
    try {
        check_divisibility(config.kernel, config.n, config.tile);
    } catch (const ConfigError& e) {
        return skipped_point(config, std::string("divisibility: ") + e.what());
    }
    return run_point(config, sensor, options);
}

} // namespace detail

// One point per (kernel, order), ordered by kernel name then ascending order.
// Configurations violating divisibility are recorded as skipped points.
inline std::vector<ExperimentPoint> explore_order(std::vector<KernelSpec> kernels,
                                                  std::vector<std::size_t> orders,
                                                  const LaunchConfig& base,
                                                  PowerSensor* sensor = nullptr,
                                                  const RunOptions& options = {},
                                                  const PointSink& sink = {}) {
    std::sort(kernels.begin(), kernels.end(),
              [](const KernelSpec& a, const KernelSpec& b) { return a.name < b.name; });
    std::sort(orders.begin(), orders.end());
    std::vector<ExperimentPoint> points;
    for (const auto& kernel : kernels) {
        for (std::size_t n : orders) {
            LaunchConfig config = base;
            config.kernel = kernel;
            config.n = n;
            points.push_back(detail::run_or_skip(config, sensor, options));
            if (sink) sink(points.back());
        }
    }
    return points;
}

// All (s_j, s_i) with s_j * s_i == total, s_j ascending.
inline std::vector<TileShape> enumerate_tile_shapes(int total) {
    std::vector<TileShape> shapes;
    for (int sj = 1; sj <= total; ++sj)
        if (total % sj == 0) shapes.push_back({sj, total / sj});
    return shapes;
}

// Local-work-size sweep for one kernel across orders and work-group totals.
inline std::vector<ExperimentPoint> explore_tiles(const KernelSpec& kernel,
                                                  std::vector<std::size_t> orders,
                                                  std::vector<int> totals,
                                                  const LaunchConfig& base,
                                                  TileHeuristic heuristic = TileHeuristic::exhaustive,
                                                  PowerSensor* sensor = nullptr,
                                                  const RunOptions& options = {},
                                                  const PointSink& sink = {}) {
    std::sort(orders.begin(), orders.end());
    std::sort(totals.begin(), totals.end());
    std::vector<ExperimentPoint> points;
    for (int total : totals) {
        for (const TileShape& shape : enumerate_tile_shapes(total)) {
            if (heuristic == TileHeuristic::prefer_slim && shape.s_j > shape.s_i) continue;
            for (std::size_t n : orders) {
                LaunchConfig config = base;
                config.kernel = kernel;
                config.n = n;
                config.tile = shape;
                points.push_back(detail::run_or_skip(config, sensor, options));
                if (sink) sink(points.back());
            }
        }
    }
    return points;
}

// A measured (shape, order, mean Gflops/s) triple; the unit the winner
// selection ranks over. Lets recorded sweep data be ranked without rerunning.
struct ShapeMean {
    TileShape shape;
    std::size_t order = 0;
    double mean = 0.0;
};

struct SweepKey {
    int total = 0;
    std::size_t order = 0;
    bool operator<(const SweepKey& o) const {
        return total != o.total ? total < o.total : order < o.order;
    }
    bool operator==(const SweepKey&) const = default;
};

// Winner per (work-group total, order) = highest mean Gflops/s; ties broken
// by smaller s_j, then smaller total.
inline std::map<SweepKey, TileShape> select_best_shapes(const std::vector<ShapeMean>& data) {
    std::map<SweepKey, TileShape> best;
    std::map<SweepKey, double> best_mean;
    for (const auto& d : data) {
        const SweepKey key{d.shape.total(), d.order};
        auto it = best.find(key);
        if (it == best.end() || d.mean > best_mean[key] ||
            (d.mean == best_mean[key] && d.shape.s_j < it->second.s_j)) {
            best[key] = d.shape;
            best_mean[key] = d.mean;
        }
    }
    return best;
}

inline std::map<SweepKey, TileShape> select_best_shapes(const std::vector<ExperimentPoint>& points) {
    std::vector<ShapeMean> data;
    for (const auto& p : points)
        if (!p.skip_reason) data.push_back({p.config.tile, p.config.n, p.mean});
    return select_best_shapes(data);
}

} // namespace gemmkit

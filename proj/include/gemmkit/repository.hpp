#pragma once

#include <chrono>
#include <filesystem>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include "gemmkit/harness.hpp"
#include "gemmkit/kernel_spec.hpp"

namespace gemmkit {

// Plain-directory experiment repository:
//   <repo>/<experiment_id>/meta.json
//   <repo>/<experiment_id>/points/<point_id>[.rN].json
// Entries are append-only; replays never overwrite earlier records.

struct StoredPointRef {
    std::string point_id;
    int replay = 0; // 0 = original record, N = .rN replay
    std::filesystem::path path;

    bool operator<(const StoredPointRef& o) const {
        return point_id != o.point_id ? point_id < o.point_id : replay < o.replay;
    }
};

namespace detail {

inline std::string iso_timestamp() {
    const auto now = std::chrono::system_clock::now();
    const std::time_t t = std::chrono::system_clock::to_time_t(now);
    char buf[32];
    std::tm tm{};
    gmtime_r(&t, &tm);
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

inline void write_json_file(const std::filesystem::path& path, const nlohmann::json& j) {
    std::ofstream out(path);
    if (!out) throw IOError("cannot write " + path.string());
    out << j.dump(2) << '\n';
    if (!out) throw IOError("write failed: " + path.string());
}

inline nlohmann::json read_json_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IOError("cannot read " + path.string());
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::parse_error& e) {
        throw IOError(path.string() + ": " + e.what());
    }
    return j;
}

} // namespace detail

inline void ensure_experiment(const std::filesystem::path& repo, const std::string& experiment_id) {
    const auto entry = repo / experiment_id;
    std::filesystem::create_directories(entry / "points");
    const auto meta_path = entry / "meta.json";
    if (!std::filesystem::exists(meta_path)) {
        nlohmann::json meta{
            {"experiment_id", experiment_id},
            {"created", detail::iso_timestamp()},
            {"tool_version", kToolVersion},
            {"environment", collect_environment()},
        };
        detail::write_json_file(meta_path, meta);
    }
}

// Stores one point record. Re-storing an existing point_id requires
// replay=true and appends a .rN suffix instead of overwriting.
inline std::filesystem::path store_point(const std::filesystem::path& repo,
                                         const std::string& experiment_id,
                                         const ExperimentPoint& point, bool replay = false) {
    ensure_experiment(repo, experiment_id);
    const auto points_dir = repo / experiment_id / "points";
    auto path = points_dir / (point.id + ".json");
    if (std::filesystem::exists(path)) {
        if (!replay)
            throw DuplicateWithoutReplayFlag("point " + point.id + " already stored in " +
                                             experiment_id);
        for (int counter = 1;; ++counter) {
            path = points_dir / (point.id + ".r" + std::to_string(counter) + ".json");
            if (!std::filesystem::exists(path)) break;
        }
    }
    detail::write_json_file(path, point_to_json(point));
    return path;
}

// Points of an experiment in stable (point_id, replay counter) order.
inline std::vector<StoredPointRef> list_points(const std::filesystem::path& repo,
                                               const std::string& experiment_id) {
    const auto points_dir = repo / experiment_id / "points";
    if (!std::filesystem::is_directory(points_dir))
        throw NotFound("no such experiment: " + experiment_id);
    std::vector<StoredPointRef> refs;
    for (const auto& entry : std::filesystem::directory_iterator(points_dir)) {
        if (!entry.is_regular_file() || entry.path().extension() != ".json") continue;
        std::string stem = entry.path().stem().string(); // "<id>" or "<id>.rN"
        int replay = 0;
        if (auto dot = stem.rfind(".r"); dot != std::string::npos) {
            replay = std::stoi(stem.substr(dot + 2));
            stem = stem.substr(0, dot);
        }
        refs.push_back({stem, replay, entry.path()});
    }
    std::sort(refs.begin(), refs.end());
    return refs;
}

inline ExperimentPoint load_point(const std::filesystem::path& path) {
    return point_from_json(detail::read_json_file(path));
}

// Latest record (original or newest replay) for a point id.
inline ExperimentPoint load_point(const std::filesystem::path& repo,
                                  const std::string& experiment_id, const std::string& point_id) {
    std::optional<StoredPointRef> found;
    for (const auto& ref : list_points(repo, experiment_id))
        if (ref.point_id == point_id) found = ref;
    if (!found) throw NotFound("point " + point_id + " not found in " + experiment_id);
    return load_point(found->path);
}

// Re-executes a stored point from its recorded config. The seed travels in
// the config, so regenerated matrices are bit-identical to the original run
// and validation outcomes are comparable across replays. The new record is
// appended with the next .rN suffix.
inline ExperimentPoint replay(const std::filesystem::path& repo, const std::string& experiment_id,
                              const std::string& point_id, const KernelRegistry& registry,
                              PowerSensor* sensor = nullptr, const RunOptions& options = {}) {
    const ExperimentPoint stored = load_point(repo, experiment_id, point_id);
    const KernelSpec* spec = registry.find(stored.config.kernel.name);
    if (!spec)
        throw ConfigError("kernel no longer in registry: " + stored.config.kernel.name);
    LaunchConfig config = stored.config;
    config.kernel = *spec;
    ExperimentPoint fresh = run_point(config, sensor, options);
    store_point(repo, experiment_id, fresh, /*replay=*/true);
    return fresh;
}

} // namespace gemmkit

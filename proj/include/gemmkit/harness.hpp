#pragma once

#include <charconv>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "gemmkit/energy.hpp"
#include "gemmkit/engine.hpp"
#include "gemmkit/errors.hpp"
#include "gemmkit/validation.hpp"

#if defined(__unix__) || defined(__APPLE__)
#include <sys/utsname.h>
#endif

namespace gemmkit {

inline constexpr const char* kToolVersion = "0.1.0";

struct Stats {
    double mean = 0.0;
    std::optional<double> std; // absent when fewer than 2 values
};

// Arithmetic mean and (R-1)-denominator sample standard deviation.
inline Stats compute_stats(const std::vector<double>& values) {
    if (values.empty()) throw EmptyInput("compute_stats: no values");
    Stats s;
    double sum = 0.0;
    for (double v : values) sum += v;
    s.mean = sum / static_cast<double>(values.size());
    if (values.size() >= 2) {
        double ssq = 0.0;
        for (double v : values) ssq += (v - s.mean) * (v - s.mean);
        s.std = std::sqrt(ssq / static_cast<double>(values.size() - 1));
    }
    return s;
}

namespace detail {

inline std::string shortest_decimal(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, ptr);
}

inline std::uint64_t fnv1a64(const std::string& s) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

} // namespace detail

// Stable identifier of a configuration: a hex digest of its canonical
// serialization. Depends only on the config, never on measured results.
inline std::string point_id(const LaunchConfig& config) {
    std::string canon;
    canon += "kernel=" + config.kernel.name;
    canon += "|n=" + std::to_string(config.n);
    canon += "|sj=" + std::to_string(config.tile.s_j);
    canon += "|si=" + std::to_string(config.tile.s_i);
    canon += "|reps=" + std::to_string(config.repetitions);
    canon += "|seed=" + std::to_string(config.seed);
    canon += "|alpha=" + detail::shortest_decimal(config.alpha);
    canon += "|beta=" + detail::shortest_decimal(config.beta);
    canon += "|prec=";
    canon += to_char(config.kernel.precision);
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx",
                  static_cast<unsigned long long>(detail::fnv1a64(canon)));
    return buf;
}

// Persisted record of one configuration and its measured repetitions.
struct ExperimentPoint {
    std::string id;
    LaunchConfig config;
    std::vector<double> gflops_per_rep;
    std::vector<double> elapsed_per_rep;
    double mean = 0.0;
    std::optional<double> std;
    std::vector<ValidationReport> validations;
    std::vector<std::vector<EnergyEstimate>> energy; // per repetition
    std::vector<std::string> sensor_errors;
    std::map<std::string, std::string> environment;
    std::optional<std::string> skip_reason; // set when the sweep skipped this config
};

inline std::map<std::string, std::string> collect_environment() {
    std::map<std::string, std::string> env;
    env["tool_version"] = kToolVersion;
#if defined(__VERSION__)
    env["compiler"] = __VERSION__;
#endif
#if defined(__unix__) || defined(__APPLE__)
    utsname u{};
    if (uname(&u) == 0) {
        env["os"] = std::string(u.sysname) + " " + u.release;
        env["machine"] = u.machine;
    }
#endif
    std::ifstream cpuinfo("/proc/cpuinfo");
    std::string line;
    while (std::getline(cpuinfo, line)) {
        if (line.rfind("model name", 0) == 0) {
            auto pos = line.find(':');
            if (pos != std::string::npos) env["cpu"] = line.substr(pos + 2);
            break;
        }
    }
    return env;
}

struct RunOptions {
    double epsilon = 0.1;
    bool warmup = false;
    std::map<std::string, std::string> extra_environment;
};

namespace detail {

template <typename T>
ExperimentPoint run_point_typed(const LaunchConfig& config, PowerSensor* sensor,
                                const RunOptions& options) {
    ExperimentPoint point;
    point.id = point_id(config);
    point.config = config;
    point.environment = collect_environment();
    for (const auto& [k, v] : options.extra_environment) point.environment[k] = v;

    const auto problem = generate_problem<T>(config.n, config.seed,
                                             static_cast<T>(config.alpha),
                                             static_cast<T>(config.beta));
    // One reference computation per point; every repetition validates
    // against it.
    const Matrix<T> reference = reference_gemm(problem, config.kernel.flavour());

    if (options.warmup) run_kernel(config.kernel, config, problem);

    const std::vector<std::string> channels = sensor ? sensor->channels()
                                                     : std::vector<std::string>{};
    for (int rep = 0; rep < config.repetitions; ++rep) {
        std::vector<PowerSample> starts;
        std::vector<std::string> live_channels;
        for (const auto& ch : channels) {
            try {
                starts.push_back(sensor->read(ch));
                live_channels.push_back(ch);
            } catch (const SensorError& e) {
                point.sensor_errors.push_back("rep " + std::to_string(rep) + ": " + e.what());
            }
        }

        auto [result, elapsed] = run_kernel(config.kernel, config, problem);

        std::vector<EnergyEstimate> estimates;
        for (std::size_t i = 0; i < live_channels.size(); ++i) {
            try {
                const PowerSample end = sensor->read(live_channels[i]);
                estimates.push_back(estimate_energy(starts[i], end, elapsed));
            } catch (const SensorError& e) {
                point.sensor_errors.push_back("rep " + std::to_string(rep) + ": " + e.what());
            }
        }

        point.elapsed_per_rep.push_back(elapsed);
        point.gflops_per_rep.push_back(
            static_cast<double>(flops_for(config.n)) / elapsed / 1e9);
        point.validations.push_back(validate(result, reference, options.epsilon));
        point.energy.push_back(std::move(estimates));
    }

    const Stats stats = compute_stats(point.gflops_per_rep);
    point.mean = stats.mean;
    point.std = stats.std;
    return point;
}

} // namespace detail

// Executes one experiment point: R timed repetitions from the same
// c_initial, per-repetition validation and energy estimates, then statistics.
inline ExperimentPoint run_point(const LaunchConfig& config, PowerSensor* sensor = nullptr,
                                 const RunOptions& options = {}) {
    check_divisibility(config.kernel, config.n, config.tile);
    if (config.kernel.precision == Precision::S)
        return detail::run_point_typed<float>(config, sensor, options);
    return detail::run_point_typed<double>(config, sensor, options);
}

// --- JSON serialization (full-precision round trip) ---

inline nlohmann::json config_to_json(const LaunchConfig& config) {
    return {
        {"kernel", spec_to_json(config.kernel)},
        {"n", config.n},
        {"tile", {config.tile.s_j, config.tile.s_i}},
        {"repetitions", config.repetitions},
        {"seed", config.seed},
        {"alpha", config.alpha},
        {"beta", config.beta},
    };
}

inline LaunchConfig config_from_json(const nlohmann::json& j) {
    LaunchConfig config;
    config.kernel = spec_from_json(j.at("kernel"));
    config.n = j.at("n").get<std::size_t>();
    config.tile = {j.at("tile").at(0).get<int>(), j.at("tile").at(1).get<int>()};
    config.repetitions = j.at("repetitions").get<int>();
    config.seed = j.at("seed").get<std::uint64_t>();
    config.alpha = j.at("alpha").get<double>();
    config.beta = j.at("beta").get<double>();
    return config;
}

inline nlohmann::json point_to_json(const ExperimentPoint& point) {
    nlohmann::json j{
        {"point_id", point.id},
        {"config", config_to_json(point.config)},
        {"gflops_per_rep", point.gflops_per_rep},
        {"elapsed_per_rep", point.elapsed_per_rep},
        {"mean", point.mean},
        {"std", point.std ? nlohmann::json(*point.std) : nlohmann::json(nullptr)},
        {"environment", point.environment},
        {"sensor_errors", point.sensor_errors},
    };
    j["validations"] = nlohmann::json::array();
    for (const auto& v : point.validations) {
        // infinity is not representable in JSON; use null for the diff
        nlohmann::json diff = std::isfinite(v.max_abs_diff)
                                  ? nlohmann::json(v.max_abs_diff)
                                  : nlohmann::json(nullptr);
        j["validations"].push_back(
            {{"max_abs_diff", diff}, {"epsilon", v.epsilon}, {"match", v.match}});
    }
    j["energy"] = nlohmann::json::array();
    for (const auto& rep : point.energy) {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& e : rep)
            arr.push_back({{"channel", e.channel}, {"joules", e.joules}});
        j["energy"].push_back(arr);
    }
    if (point.skip_reason) j["skip_reason"] = *point.skip_reason;
    return j;
}

inline ExperimentPoint point_from_json(const nlohmann::json& j) {
    ExperimentPoint point;
    point.id = j.at("point_id").get<std::string>();
    point.config = config_from_json(j.at("config"));
    point.gflops_per_rep = j.at("gflops_per_rep").get<std::vector<double>>();
    point.elapsed_per_rep = j.at("elapsed_per_rep").get<std::vector<double>>();
    point.mean = j.at("mean").get<double>();
    if (!j.at("std").is_null()) point.std = j.at("std").get<double>();
    point.environment = j.at("environment").get<std::map<std::string, std::string>>();
    point.sensor_errors = j.at("sensor_errors").get<std::vector<std::string>>();
    for (const auto& v : j.at("validations")) {
        ValidationReport r;
        r.max_abs_diff = v.at("max_abs_diff").is_null()
                             ? std::numeric_limits<double>::infinity()
                             : v.at("max_abs_diff").get<double>();
        r.epsilon = v.at("epsilon").get<double>();
        r.match = v.at("match").get<bool>();
        point.validations.push_back(r);
    }
    for (const auto& rep : j.at("energy")) {
        std::vector<EnergyEstimate> estimates;
        for (const auto& e : rep)
            estimates.push_back({e.at("channel").get<std::string>(), e.at("joules").get<double>()});
        point.energy.push_back(std::move(estimates));
    }
    if (j.contains("skip_reason")) point.skip_reason = j.at("skip_reason").get<std::string>();
    return point;
}

} // namespace gemmkit

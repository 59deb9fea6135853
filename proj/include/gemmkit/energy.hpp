#pragma once

#include <fstream>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "gemmkit/errors.hpp"

namespace gemmkit {

struct PowerSample {
    double watts = 0.0;
    std::string channel;
};

struct EnergyEstimate {
    std::string channel;
    double joules = 0.0;

    bool operator==(const EnergyEstimate&) const = default;
};

// Two-point trapezoid estimate: average of the power readings at the start
// and end of the region times its duration. Crude, and exact only for power
// linear in time.
inline EnergyEstimate estimate_energy(const PowerSample& p_start, const PowerSample& p_end,
                                      double elapsed_seconds) {
    if (p_start.channel != p_end.channel)
        throw ChannelMismatch("energy samples from different channels: " + p_start.channel +
                              " vs " + p_end.channel);
    return {p_start.channel, (p_start.watts + p_end.watts) / 2.0 * elapsed_seconds};
}

class PowerSensor {
public:
    virtual ~PowerSensor() = default;
    virtual std::vector<std::string> channels() const = 0;
    virtual PowerSample read(const std::string& channel) = 0;
};

// No channels; every read fails.
class NullSensor : public PowerSensor {
public:
    std::vector<std::string> channels() const override { return {}; }
    PowerSample read(const std::string& channel) override {
        throw UnsupportedChannel(channel);
    }
};

// Deterministic test double: per channel, reads alternate between a start
// and an end wattage (equal values give constant power, distinct values a
// linear drift over the measured region).
class MockSensor : public PowerSensor {
public:
    void set_channel(const std::string& channel, double start_watts, double end_watts) {
        channels_[channel] = {start_watts, end_watts};
    }
    void set_constant(const std::string& channel, double watts) {
        set_channel(channel, watts, watts);
    }

    std::vector<std::string> channels() const override {
        std::vector<std::string> out;
        for (const auto& [name, ramp] : channels_) out.push_back(name);
        return out;
    }

    PowerSample read(const std::string& channel) override {
        auto it = channels_.find(channel);
        if (it == channels_.end()) throw UnsupportedChannel(channel);
        auto& state = it->second;
        const double watts = state.at_start ? state.start_watts : state.end_watts;
        state.at_start = !state.at_start;
        return {watts, channel};
    }

private:
    struct Ramp {
        double start_watts = 0.0;
        double end_watts = 0.0;
        bool at_start = true;
    };
    std::map<std::string, Ramp> channels_;
};

// Reads an instantaneous numeric value from a file per channel (sysfs-style
// sensors). scale converts the raw unit to watts, e.g. 1e-6 for microwatts.
class FileProbeSensor : public PowerSensor {
public:
    void set_channel(const std::string& channel, std::string path, double scale = 1.0) {
        channels_[channel] = {std::move(path), scale};
    }

    std::vector<std::string> channels() const override {
        std::vector<std::string> out;
        for (const auto& [name, probe] : channels_) out.push_back(name);
        return out;
    }

    PowerSample read(const std::string& channel) override {
        auto it = channels_.find(channel);
        if (it == channels_.end()) throw UnsupportedChannel(channel);
        std::ifstream in(it->second.path);
        double raw = 0.0;
        if (!in || !(in >> raw))
            throw ProbeReadError("cannot read power value from " + it->second.path);
        return {raw * it->second.scale, channel};
    }

private:
    struct Probe {
        std::string path;
        double scale = 1.0;
    };
    std::map<std::string, Probe> channels_;
};

} // namespace gemmkit

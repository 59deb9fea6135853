#pragma once

#include <stdexcept>
#include <string>

namespace gemmkit {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// kernel_registry
struct ParseError : Error { using Error::Error; };
struct SchemaError : Error {
    explicit SchemaError(const std::string& key)
        : Error("invalid or missing metadata field: " + key), key(key) {}
    std::string key;
};

// engine
struct ConfigError : Error { using Error::Error; };
struct UnknownVariant : Error {
    explicit UnknownVariant(const std::string& key)
        : Error("unrecognized kernel variant key: " + key) {}
};

// validation
struct DimensionMismatch : Error { using Error::Error; };

// stats
struct EmptyInput : Error { using Error::Error; };

// energy
struct SensorError : Error { using Error::Error; };
struct ChannelMismatch : SensorError { using SensorError::SensorError; };
struct UnsupportedChannel : SensorError {
    explicit UnsupportedChannel(const std::string& channel)
        : SensorError("unsupported sensor channel: " + channel) {}
};
struct ProbeReadError : SensorError { using SensorError::SensorError; };

// repository
struct IOError : Error { using Error::Error; };
struct NotFound : Error { using Error::Error; };
struct DuplicateWithoutReplayFlag : Error { using Error::Error; };

// report
struct EmptyExperiment : Error { using Error::Error; };

} // namespace gemmkit

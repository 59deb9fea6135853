#include <catch2/catch_amalgamated.hpp>

#include "fixtures.hpp"
#include "gemmkit/energy.hpp"
#include "gemmkit/harness.hpp"
#include "gemmkit/kernel_spec.hpp"

using namespace gemmkit;

namespace {

LaunchConfig sample_config() {
    LaunchConfig config;
    config.kernel = {"SGEMM_NT_4x1", "SGEMM_NT_4x1.cl", Precision::S, Layout::N, Layout::T, 4, 1};
    config.n = 32;
    config.tile = {2, 4};
    config.repetitions = 4;
    config.seed = 42;
    return config;
}

} // namespace

TEST_CASE("compute_stats reproduces the published quadruples") {
    SECTION("order-sweep fixtures") {
        for (const auto& row : fixtures::order_sweep()) {
            const Stats s = compute_stats({row.rep[0], row.rep[1], row.rep[2], row.rep[3]});
            INFO(row.kernel << " order " << row.order);
            CHECK(s.mean == Catch::Approx(row.mean).margin(1e-5));
            REQUIRE(s.std.has_value());
            CHECK(*s.std == Catch::Approx(row.std).margin(1e-6));
        }
    }
    SECTION("lws-sweep fixtures") {
        for (const auto& row : fixtures::lws_sweep()) {
            const Stats s = compute_stats({row.rep[0], row.rep[1], row.rep[2], row.rep[3]});
            INFO("lws (" << row.s_j << "," << row.s_i << ") order " << row.order);
            CHECK(s.mean == Catch::Approx(row.mean).margin(1e-5));
            CHECK(*s.std == Catch::Approx(row.std).margin(1e-6));
        }
    }
}

TEST_CASE("compute_stats edge cases") {
    const Stats single = compute_stats({5.0});
    CHECK(single.mean == 5.0);
    CHECK_FALSE(single.std.has_value());
    CHECK_THROWS_AS(compute_stats({}), EmptyInput);
}

TEST_CASE("point_id depends only on the config") {
    const auto config = sample_config();
    CHECK(point_id(config) == point_id(config));
    CHECK(point_id(config).size() == 16);

    auto other = config;
    other.n = 64;
    CHECK(point_id(other) != point_id(config));
    other = config;
    other.seed = 43;
    CHECK(point_id(other) != point_id(config));
    other = config;
    other.tile = {4, 2};
    CHECK(point_id(other) != point_id(config));
    other = config;
    other.alpha = 1.0;
    CHECK(point_id(other) != point_id(config));
}

TEST_CASE("run_point executes the requested repetitions") {
    const auto point = run_point(sample_config());
    CHECK(point.gflops_per_rep.size() == 4);
    CHECK(point.elapsed_per_rep.size() == 4);
    CHECK(point.validations.size() == 4);
    CHECK(point.energy.size() == 4);
    for (const auto& rep : point.energy) CHECK(rep.empty()); // no sensor
    for (double g : point.gflops_per_rep) CHECK(g > 0.0);
    for (const auto& v : point.validations) CHECK(v.match);

    const Stats expect = compute_stats(point.gflops_per_rep);
    CHECK(point.mean == expect.mean);
    CHECK(point.std == expect.std);
    CHECK_FALSE(point.environment.empty());
}

TEST_CASE("single repetition leaves std absent") {
    auto config = sample_config();
    config.repetitions = 1;
    const auto point = run_point(config);
    CHECK(point.gflops_per_rep.size() == 1);
    CHECK_FALSE(point.std.has_value());
}

TEST_CASE("everything but time is deterministic") {
    const auto config = sample_config();
    const auto p1 = run_point(config);
    const auto p2 = run_point(config);
    CHECK(p1.id == p2.id);
    REQUIRE(p1.validations.size() == p2.validations.size());
    for (std::size_t r = 0; r < p1.validations.size(); ++r) {
        CHECK(p1.validations[r].max_abs_diff == p2.validations[r].max_abs_diff);
        CHECK(p1.validations[r].match == p2.validations[r].match);
    }
}

TEST_CASE("double-precision configs run through the double path") {
    LaunchConfig config;
    config.kernel = {"DGEMM_NN_1x1", "DGEMM_NN_1x1.cl", Precision::D, Layout::N, Layout::N, 1, 1};
    config.n = 16;
    config.tile = {4, 4};
    config.repetitions = 2;
    const auto point = run_point(config);
    for (const auto& v : point.validations) {
        CHECK(v.match);
        CHECK(v.max_abs_diff <= 1e-10);
    }
}

TEST_CASE("sensor failures are recorded, not fatal") {
    NullSensor sensor;
    const auto point = run_point(sample_config(), &sensor);
    CHECK(point.gflops_per_rep.size() == 4); // completed anyway
    for (const auto& rep : point.energy) CHECK(rep.empty());

    // A probe that disappears mid-run degrades the same way.
    FileProbeSensor probe;
    probe.set_channel("gpu", "/nonexistent/power");
    const auto point2 = run_point(sample_config(), &probe);
    CHECK(point2.gflops_per_rep.size() == 4);
    CHECK(point2.sensor_errors.size() == 4);
}

TEST_CASE("mock sensor yields one estimate per channel per repetition") {
    MockSensor sensor;
    sensor.set_constant("gpu", 2.0);
    sensor.set_constant("memory", 1.0);
    const auto point = run_point(sample_config(), &sensor);
    REQUIRE(point.energy.size() == 4);
    for (std::size_t r = 0; r < 4; ++r) {
        REQUIRE(point.energy[r].size() == 2);
        for (const auto& e : point.energy[r]) {
            const double watts = e.channel == "gpu" ? 2.0 : 1.0;
            CHECK(e.joules == Catch::Approx(watts * point.elapsed_per_rep[r]));
        }
    }
}

TEST_CASE("experiment point JSON round-trip is lossless") {
    MockSensor sensor;
    sensor.set_channel("gpu", 1.0, 3.0);
    const auto point = run_point(sample_config(), &sensor);
    const auto restored = point_from_json(point_to_json(point));
    CHECK(restored.id == point.id);
    CHECK(restored.config.kernel == point.config.kernel);
    CHECK(restored.config.n == point.config.n);
    CHECK(restored.config.tile == point.config.tile);
    CHECK(restored.config.seed == point.config.seed);
    CHECK(restored.config.alpha == point.config.alpha);
    CHECK(restored.config.beta == point.config.beta);
    CHECK(restored.gflops_per_rep == point.gflops_per_rep);
    CHECK(restored.elapsed_per_rep == point.elapsed_per_rep);
    CHECK(restored.mean == point.mean);
    CHECK(restored.std == point.std);
    CHECK(restored.environment == point.environment);
    REQUIRE(restored.validations.size() == point.validations.size());
    for (std::size_t r = 0; r < point.validations.size(); ++r) {
        CHECK(restored.validations[r].max_abs_diff == point.validations[r].max_abs_diff);
        CHECK(restored.validations[r].epsilon == point.validations[r].epsilon);
        CHECK(restored.validations[r].match == point.validations[r].match);
    }
    CHECK(restored.energy == point.energy);
}

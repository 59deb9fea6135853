// Command-line front end: kernel listing, single runs, order and
// local-work-size sweeps, replay, and table rendering.

#include <array>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gemmkit/gemmkit.hpp"

namespace gk = gemmkit;

namespace {

// Exit codes: 0 = success and all validations matched, 1 = error,
// 2 = completed but at least one validation mismatched.
constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitMismatch = 2;

struct Defaults {
    std::string dataset = "dataset";
    std::string repo = "experiments";
    std::uint64_t seed = 42;
    double alpha = 1.5;
    double beta = 0.5;
    double epsilon = 0.1;
    nlohmann::json sensor; // optional sensor block
};

Defaults load_defaults(const std::string& config_path) {
    Defaults d;
    if (const char* env = std::getenv("GEMMKIT_DATASET")) d.dataset = env;
    if (const char* env = std::getenv("GEMMKIT_REPO")) d.repo = env;
    if (config_path.empty()) return d;
    const auto j = gk::detail::read_json_file(config_path);
    if (j.contains("dataset")) d.dataset = j["dataset"].get<std::string>();
    if (j.contains("repo")) d.repo = j["repo"].get<std::string>();
    if (j.contains("seed")) d.seed = j["seed"].get<std::uint64_t>();
    if (j.contains("alpha")) d.alpha = j["alpha"].get<double>();
    if (j.contains("beta")) d.beta = j["beta"].get<double>();
    if (j.contains("epsilon")) d.epsilon = j["epsilon"].get<double>();
    if (j.contains("sensor")) d.sensor = j["sensor"];
    return d;
}

std::unique_ptr<gk::PowerSensor> make_sensor(const nlohmann::json& cfg) {
    if (cfg.is_null()) return nullptr;
    const auto type = cfg.at("type").get<std::string>();
    if (type == "null") return std::make_unique<gk::NullSensor>();
    if (type == "mock") {
        auto sensor = std::make_unique<gk::MockSensor>();
        for (const auto& [name, ch] : cfg.at("channels").items()) {
            if (ch.contains("watts"))
                sensor->set_constant(name, ch["watts"].get<double>());
            else
                sensor->set_channel(name, ch.at("start").get<double>(), ch.at("end").get<double>());
        }
        return sensor;
    }
    if (type == "probe") {
        auto sensor = std::make_unique<gk::FileProbeSensor>();
        for (const auto& [name, ch] : cfg.at("channels").items())
            sensor->set_channel(name, ch.at("path").get<std::string>(),
                                ch.value("scale", 1.0));
        return sensor;
    }
    throw gk::ParseError("unknown sensor type: " + type);
}

gk::TileShape parse_lws(const std::string& text) {
    int sj = 0, si = 0;
    char comma = 0;
    std::istringstream in(text);
    if (!(in >> sj >> comma >> si) || comma != ',' || !in.eof() || sj < 1 || si < 1)
        throw CLI::ValidationError("--lws", "expected two positive integers J,I");
    return {sj, si};
}

gk::Flavour parse_flavour(std::string text) {
    for (auto& c : text)
        if (c == ' ') c = '_';
    // e.g. "SGEMM_NT"
    if (text.size() == 8 && text.substr(1, 5) == "GEMM_" && (text[0] == 'S' || text[0] == 'D') &&
        (text[6] == 'N' || text[6] == 'T') && (text[7] == 'N' || text[7] == 'T'))
        return {static_cast<gk::Precision>(text[0]), static_cast<gk::Layout>(text[6]),
                static_cast<gk::Layout>(text[7])};
    throw CLI::ValidationError("--flavour", "expected e.g. SGEMM_NT");
}

void print_point(const gk::ExperimentPoint& point) {
    std::cout << "point " << point.id << ": " << point.config.kernel.name
              << " n=" << point.config.n << " lws=(" << point.config.tile.s_j << ","
              << point.config.tile.s_i << ") reps=" << point.config.repetitions << "\n";
    if (point.skip_reason) {
        std::cout << "  skipped: " << *point.skip_reason << "\n";
        return;
    }
    std::cout << "  Gflops/s:";
    for (double g : point.gflops_per_rep) std::cout << " " << gk::detail::fixed(g, 3);
    std::cout << "  mean " << gk::detail::fixed(point.mean, 5);
    if (point.std) std::cout << "  std " << gk::detail::fixed(*point.std, 6);
    std::cout << "\n";
    for (std::size_t r = 0; r < point.validations.size(); ++r) {
        const auto& v = point.validations[r];
        std::cout << "  rep " << r << ": max abs diff "
                  << gk::detail::scientific6(v.max_abs_diff) << "  match " << (v.match ? 1 : 0);
        for (const auto& e : point.energy[r])
            std::cout << "  " << e.channel << " " << gk::detail::fixed(e.joules, 6) << " J";
        std::cout << "\n";
    }
    for (const auto& err : point.sensor_errors) std::cout << "  sensor: " << err << "\n";
}

bool all_matched(const gk::ExperimentPoint& point) {
    for (const auto& v : point.validations)
        if (!v.match) return false;
    return true;
}

std::vector<std::size_t> parse_orders(const std::string& csv, std::vector<std::size_t> fallback) {
    if (csv.empty()) return fallback;
    std::vector<std::size_t> out;
    std::istringstream in(csv);
    std::string item;
    while (std::getline(in, item, ',')) out.push_back(std::stoull(item));
    return out;
}

std::vector<int> parse_totals(const std::string& csv, std::vector<int> fallback) {
    if (csv.empty()) return fallback;
    std::vector<int> out;
    std::istringstream in(csv);
    std::string item;
    while (std::getline(in, item, ',')) out.push_back(std::stoi(item));
    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"GEMM kernel benchmarking and autotuning harness"};
    app.require_subcommand(1);

    std::string config_path;
    app.add_option("--config", config_path, "JSON file with default settings")
        ->check(CLI::ExistingFile);

    std::string dataset_dir, repo_dir, sensor_path;
    app.add_option("--dataset", dataset_dir, "kernel metadata directory");
    app.add_option("--repo", repo_dir, "experiment repository directory");
    app.add_option("--sensor", sensor_path, "power sensor JSON config")->check(CLI::ExistingFile);

    // run
    auto* run_cmd = app.add_subcommand("run", "run one experiment point");
    std::string run_kernel_name, run_lws, run_experiment;
    std::size_t run_n = 512;
    int run_reps = 4;
    std::optional<std::uint64_t> run_seed;
    std::optional<double> run_alpha, run_beta, run_epsilon;
    bool run_warmup = false;
    int opt_platform = 0, opt_device = 0;
    run_cmd->add_option("--kernel", run_kernel_name, "kernel name")->required();
    run_cmd->add_option("-n,--order", run_n, "matrix order");
    run_cmd->add_option("--lws", run_lws, "local work size J,I");
    run_cmd->add_option("--reps", run_reps, "statistical repetitions");
    run_cmd->add_option("--seed", run_seed, "RNG seed");
    run_cmd->add_option("--alpha", run_alpha, "GEMM alpha");
    run_cmd->add_option("--beta", run_beta, "GEMM beta");
    run_cmd->add_option("--epsilon", run_epsilon, "validation epsilon");
    run_cmd->add_flag("--warmup", run_warmup, "prepend one untimed repetition");
    run_cmd->add_option("-p,--platform", opt_platform, "platform id (recorded only)");
    run_cmd->add_option("-d,--device", opt_device, "device id (recorded only)");
    run_cmd->add_option("--experiment", run_experiment, "store under this experiment id");

    // list
    auto* list_cmd = app.add_subcommand("list", "list registered kernels by flavour");

    // explore-order
    auto* eo_cmd = app.add_subcommand("explore-order", "sweep the matrix order");
    std::string eo_flavour = "SGEMM_NT", eo_orders, eo_lws, eo_experiment;
    int eo_reps = 4;
    std::optional<std::uint64_t> eo_seed;
    eo_cmd->add_option("--flavour", eo_flavour, "kernel flavour, e.g. SGEMM_NT");
    eo_cmd->add_option("--orders", eo_orders, "comma-separated order list");
    eo_cmd->add_option("--lws", eo_lws, "local work size J,I");
    eo_cmd->add_option("--reps", eo_reps, "statistical repetitions");
    eo_cmd->add_option("--seed", eo_seed, "RNG seed");
    eo_cmd->add_option("--experiment", eo_experiment, "experiment id");

    // explore-lws
    auto* el_cmd = app.add_subcommand("explore-lws", "sweep the local work size");
    std::string el_kernel = "SGEMM_NT_4x1_barrier", el_orders, el_totals, el_experiment;
    std::string el_heuristic = "exhaustive";
    int el_reps = 4;
    std::optional<std::uint64_t> el_seed;
    el_cmd->add_option("--kernel", el_kernel, "kernel name");
    el_cmd->add_option("--orders", el_orders, "comma-separated order list");
    el_cmd->add_option("--totals", el_totals, "comma-separated work-group totals");
    el_cmd->add_option("--heuristic", el_heuristic, "exhaustive | prefer_slim")
        ->check(CLI::IsMember({"exhaustive", "prefer_slim"}));
    el_cmd->add_option("--reps", el_reps, "statistical repetitions");
    el_cmd->add_option("--seed", el_seed, "RNG seed");
    el_cmd->add_option("--experiment", el_experiment, "experiment id");

    // replay
    auto* replay_cmd = app.add_subcommand("replay", "re-execute a stored point");
    std::string rp_experiment, rp_point;
    replay_cmd->add_option("--experiment", rp_experiment, "experiment id")->required();
    replay_cmd->add_option("--point", rp_point, "point id")->required();

    // report
    auto* report_cmd = app.add_subcommand("report", "render a stored experiment");
    std::string rt_experiment, rt_table = "perf", rt_format = "csv";
    report_cmd->add_option("--experiment", rt_experiment, "experiment id")->required();
    report_cmd->add_option("--table", rt_table, "perf | energy | validation | chart")
        ->check(CLI::IsMember({"perf", "energy", "validation", "chart"}));
    report_cmd->add_option("--format", rt_format, "csv | md")
        ->check(CLI::IsMember({"csv", "md"}));

    CLI11_PARSE(app, argc, argv);

    try {
        const Defaults defaults = load_defaults(config_path);
        const std::string dataset = dataset_dir.empty() ? defaults.dataset : dataset_dir;
        const std::string repo = repo_dir.empty() ? defaults.repo : repo_dir;
        nlohmann::json sensor_cfg = defaults.sensor;
        if (!sensor_path.empty()) sensor_cfg = gk::detail::read_json_file(sensor_path);
        auto sensor = make_sensor(sensor_cfg);

        gk::RunOptions options;
        options.epsilon = defaults.epsilon;

        if (*list_cmd) {
            const auto registry = gk::KernelRegistry::load_directory(dataset);
            const std::array<gk::Flavour, 4> flavours{{
                {gk::Precision::S, gk::Layout::N, gk::Layout::N},
                {gk::Precision::S, gk::Layout::N, gk::Layout::T},
                {gk::Precision::D, gk::Layout::N, gk::Layout::N},
                {gk::Precision::D, gk::Layout::N, gk::Layout::T},
            }};
            for (const auto& flavour : flavours) {
                std::cout << flavour.str() << ":\n";
                for (const auto& spec : registry.lookup(flavour))
                    std::cout << "  " << spec.name << "  (dj=" << spec.d_j
                              << ", di=" << spec.d_i << ")\n";
            }
            return kExitOk;
        }

        if (*run_cmd) {
            const auto registry = gk::KernelRegistry::load_directory(dataset);
            const gk::KernelSpec* spec = registry.find(run_kernel_name);
            if (!spec) {
                std::cerr << "unknown kernel: " << run_kernel_name << "\n";
                return kExitError;
            }
            gk::LaunchConfig config;
            config.kernel = *spec;
            config.n = run_n;
            if (!run_lws.empty()) config.tile = parse_lws(run_lws);
            config.repetitions = run_reps;
            config.seed = run_seed.value_or(defaults.seed);
            config.alpha = run_alpha.value_or(defaults.alpha);
            config.beta = run_beta.value_or(defaults.beta);
            if (run_epsilon) options.epsilon = *run_epsilon;
            options.warmup = run_warmup;
            options.extra_environment["platform"] = std::to_string(opt_platform);
            options.extra_environment["device"] = std::to_string(opt_device);

            const auto point = gk::run_point(config, sensor.get(), options);
            print_point(point);
            if (!run_experiment.empty()) {
                const auto path = gk::store_point(repo, run_experiment, point);
                std::cout << "stored: " << path.string() << "\n";
            }
            return all_matched(point) ? kExitOk : kExitMismatch;
        }

        if (*eo_cmd) {
            const auto registry = gk::KernelRegistry::load_directory(dataset);
            const auto flavour = parse_flavour(eo_flavour);
            const auto kernels = registry.lookup(flavour);
            if (kernels.empty()) {
                std::cerr << "no kernels for flavour " << flavour.str() << "\n";
                return kExitError;
            }
            gk::LaunchConfig base;
            if (!eo_lws.empty()) base.tile = parse_lws(eo_lws);
            base.repetitions = eo_reps;
            base.seed = eo_seed.value_or(defaults.seed);
            base.alpha = defaults.alpha;
            base.beta = defaults.beta;
            const std::string experiment = eo_experiment.empty()
                                               ? eo_flavour + "-explore-f-n"
                                               : eo_experiment;
            const auto orders = parse_orders(eo_orders, gk::kDefaultOrderSweep);
            const auto points = gk::explore_order(
                kernels, orders, base, sensor.get(), options,
                [&](const gk::ExperimentPoint& p) { gk::store_point(repo, experiment, p); });
            std::cout << points.size() << " points stored under " << experiment << "\n";
            return kExitOk;
        }

        if (*el_cmd) {
            const auto registry = gk::KernelRegistry::load_directory(dataset);
            const gk::KernelSpec* spec = registry.find(el_kernel);
            if (!spec) {
                std::cerr << "unknown kernel: " << el_kernel << "\n";
                return kExitError;
            }
            gk::LaunchConfig base;
            base.repetitions = el_reps;
            base.seed = el_seed.value_or(defaults.seed);
            base.alpha = defaults.alpha;
            base.beta = defaults.beta;
            const std::string experiment = el_experiment.empty()
                                               ? spec->flavour().str().replace(5, 1, "_") +
                                                     "-explore-n-lws"
                                               : el_experiment;
            const auto heuristic = el_heuristic == "prefer_slim"
                                       ? gk::TileHeuristic::prefer_slim
                                       : gk::TileHeuristic::exhaustive;
            const auto points = gk::explore_tiles(
                *spec, parse_orders(el_orders, gk::kDefaultTileOrders),
                parse_totals(el_totals, gk::kDefaultTileTotals), base, heuristic, sensor.get(),
                options,
                [&](const gk::ExperimentPoint& p) { gk::store_point(repo, experiment, p); });
            std::cout << points.size() << " points stored under " << experiment << "\n";
            for (const auto& [key, shape] : gk::select_best_shapes(points))
                std::cout << "best lws for total " << key.total << ", order " << key.order
                          << ": (" << shape.s_j << "," << shape.s_i << ")\n";
            return kExitOk;
        }

        if (*replay_cmd) {
            const auto registry = gk::KernelRegistry::load_directory(dataset);
            const auto point =
                gk::replay(repo, rp_experiment, rp_point, registry, sensor.get(), options);
            print_point(point);
            return all_matched(point) ? kExitOk : kExitMismatch;
        }

        if (*report_cmd) {
            const auto entry = gk::load_experiment(repo, rt_experiment);
            gk::Table table;
            if (rt_table == "perf") table = gk::render_order_table(entry);
            else if (rt_table == "energy") table = gk::render_energy_table(entry);
            else if (rt_table == "validation") table = gk::render_validation_table(entry);
            else table = gk::render_chart(entry);
            std::cout << (rt_format == "csv" ? gk::export_csv(table)
                                             : gk::export_markdown(table));
            return kExitOk;
        }
    } catch (const CLI::Error& e) {
        std::cerr << e.what() << "\n";
        return kExitError;
    } catch (const gk::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitOk;
}

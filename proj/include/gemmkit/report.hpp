#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "gemmkit/harness.hpp"
#include "gemmkit/repository.hpp"

namespace gemmkit {

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

namespace detail {

inline std::string fixed(double v, int decimals) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", decimals, v);
    return buf;
}

inline std::string scientific6(double v) {
    if (!std::isfinite(v)) return "inf";
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%e", v); // 6 decimals
    return buf;
}

// Points sorted by kernel name, then ascending order, then tile.
inline std::vector<ExperimentPoint> sorted_points(std::vector<ExperimentPoint> points) {
    std::sort(points.begin(), points.end(),
              [](const ExperimentPoint& a, const ExperimentPoint& b) {
                  if (a.config.kernel.name != b.config.kernel.name)
                      return a.config.kernel.name < b.config.kernel.name;
                  if (a.config.n != b.config.n) return a.config.n < b.config.n;
                  if (a.config.tile.s_j != b.config.tile.s_j)
                      return a.config.tile.s_j < b.config.tile.s_j;
                  return a.config.tile.s_i < b.config.tile.s_i;
              });
    return points;
}

inline std::size_t max_reps(const std::vector<ExperimentPoint>& points) {
    std::size_t r = 0;
    for (const auto& p : points) r = std::max(r, p.gflops_per_rep.size());
    return r;
}

} // namespace detail

// Loads all records of an experiment, in stable storage order.
inline std::vector<ExperimentPoint> load_experiment(const std::filesystem::path& repo,
                                                    const std::string& experiment_id) {
    std::vector<ExperimentPoint> points;
    for (const auto& ref : list_points(repo, experiment_id)) points.push_back(load_point(ref.path));
    return points;
}

// Per-point throughput: raw repetitions (3 decimals), mean (5), std (6).
inline Table render_order_table(const std::vector<ExperimentPoint>& entry) {
    if (entry.empty()) throw EmptyExperiment("no points to render");
    const auto points = detail::sorted_points(entry);
    const std::size_t reps = detail::max_reps(points);

    Table table;
    table.header = {"kernel", "lws", "order"};
    for (std::size_t r = 0; r < reps; ++r) table.header.push_back(std::to_string(r));
    table.header.push_back("mean");
    table.header.push_back("std");

    for (const auto& p : points) {
        std::vector<std::string> row{
            p.config.kernel.name,
            "(" + std::to_string(p.config.tile.s_j) + ", " + std::to_string(p.config.tile.s_i) + ")",
            std::to_string(p.config.n)};
        if (p.skip_reason) {
            row[1] = "skipped (divisibility)";
            row.resize(table.header.size());
        } else {
            for (std::size_t r = 0; r < reps; ++r)
                row.push_back(r < p.gflops_per_rep.size()
                                  ? detail::fixed(p.gflops_per_rep[r], 3)
                                  : "");
            row.push_back(detail::fixed(p.mean, 5));
            row.push_back(p.std ? detail::fixed(*p.std, 6) : "");
        }
        table.rows.push_back(std::move(row));
    }
    return table;
}

// Energy per (order, kernel, channel); cell = mean Joules across
// repetitions, blank when no sensor data was recorded.
inline Table render_energy_table(const std::vector<ExperimentPoint>& entry) {
    if (entry.empty()) throw EmptyExperiment("no points to render");
    const auto points = detail::sorted_points(entry);

    std::set<std::string> kernels;
    std::set<std::string> channels;
    std::set<std::size_t> orders;
    for (const auto& p : points) {
        if (p.skip_reason) continue;
        kernels.insert(p.config.kernel.name);
        orders.insert(p.config.n);
        for (const auto& rep : p.energy)
            for (const auto& e : rep) channels.insert(e.channel);
    }

    Table table;
    table.header = {"order"};
    for (const auto& k : kernels)
        for (const auto& ch : channels) table.header.push_back(k + " " + ch + " (J)");

    for (std::size_t n : orders) {
        std::vector<std::string> row{std::to_string(n)};
        for (const auto& k : kernels) {
            for (const auto& ch : channels) {
                double sum = 0.0;
                int count = 0;
                for (const auto& p : points) {
                    if (p.skip_reason || p.config.kernel.name != k || p.config.n != n) continue;
                    for (const auto& rep : p.energy)
                        for (const auto& e : rep)
                            if (e.channel == ch) { sum += e.joules; ++count; }
                }
                row.push_back(count ? detail::fixed(sum / count, 6) : "");
            }
        }
        table.rows.push_back(std::move(row));
    }
    return table;
}

// Per-repetition max abs diff (scientific) and match flag (0/1); non-finite
// diffs render as "inf".
inline Table render_validation_table(const std::vector<ExperimentPoint>& entry) {
    if (entry.empty()) throw EmptyExperiment("no points to render");
    const auto points = detail::sorted_points(entry);
    const std::size_t reps = detail::max_reps(points);

    Table table;
    table.header = {"kernel", "order"};
    for (std::size_t r = 0; r < reps; ++r) {
        table.header.push_back("max_abs_diff_" + std::to_string(r));
        table.header.push_back("match_" + std::to_string(r));
    }

    for (const auto& p : points) {
        std::vector<std::string> row{p.config.kernel.name, std::to_string(p.config.n)};
        if (p.skip_reason) {
            row.push_back("skipped (divisibility)");
            row.resize(table.header.size());
        } else {
            for (std::size_t r = 0; r < reps; ++r) {
                if (r < p.validations.size()) {
                    row.push_back(detail::scientific6(p.validations[r].max_abs_diff));
                    row.push_back(p.validations[r].match ? "1" : "0");
                } else {
                    row.push_back("");
                    row.push_back("");
                }
            }
        }
        table.rows.push_back(std::move(row));
    }
    return table;
}

// Chart-ready (label, mean, std) rows for external plotters.
inline Table render_chart(const std::vector<ExperimentPoint>& entry) {
    if (entry.empty()) throw EmptyExperiment("no points to render");
    Table table;
    table.header = {"label", "mean", "std"};
    for (const auto& p : detail::sorted_points(entry)) {
        if (p.skip_reason) continue;
        table.rows.push_back({p.config.kernel.name + " n=" + std::to_string(p.config.n),
                              detail::fixed(p.mean, 5),
                              p.std ? detail::fixed(*p.std, 6) : ""});
    }
    return table;
}

// CSV: comma-separated, '.' decimal point, header row, LF line endings.
inline std::string export_csv(const Table& table) {
    auto escape = [](const std::string& cell) {
        if (cell.find_first_of(",\"\n") == std::string::npos) return cell;
        std::string out = "\"";
        for (char c : cell) {
            if (c == '"') out += '"';
            out += c;
        }
        out += '"';
        return out;
    };
    std::string out;
    auto emit_row = [&](const std::vector<std::string>& row) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out += ',';
            out += escape(row[i]);
        }
        out += '\n';
    };
    emit_row(table.header);
    for (const auto& row : table.rows) emit_row(row);
    return out;
}

inline std::string export_markdown(const Table& table) {
    auto emit_row = [](std::string& out, const std::vector<std::string>& row) {
        out += "|";
        for (const auto& cell : row) {
            out += ' ';
            out += cell;
            out += " |";
        }
        out += '\n';
    };
    std::string out;
    emit_row(out, table.header);
    out += "|";
    for (std::size_t i = 0; i < table.header.size(); ++i) out += " --- |";
    out += '\n';
    for (const auto& row : table.rows) emit_row(out, row);
    return out;
}

} // namespace gemmkit

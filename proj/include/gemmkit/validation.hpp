#pragma once

#include <cmath>
#include <limits>

#include "gemmkit/errors.hpp"
#include "gemmkit/matrix.hpp"

namespace gemmkit {

struct ValidationReport {
    double max_abs_diff = 0.0;
    double epsilon = 0.1;
    bool match = true;
};

// Element-wise comparison against a reference with an absolute epsilon.
// Uses floating-point fabs throughout; any NaN or infinity in either operand
// makes max_abs_diff infinite and the comparison a mismatch.
template <typename T>
ValidationReport validate(const Matrix<T>& result, const Matrix<T>& reference, double epsilon) {
    if (result.n != reference.n)
        throw DimensionMismatch("result order " + std::to_string(result.n) +
                                " vs reference order " + std::to_string(reference.n));
    ValidationReport report;
    report.epsilon = epsilon;
    double max_diff = 0.0;
    for (std::size_t idx = 0; idx < result.data.size(); ++idx) {
        const double x = static_cast<double>(result.data[idx]);
        const double y = static_cast<double>(reference.data[idx]);
        if (!std::isfinite(x) || !std::isfinite(y)) {
            max_diff = std::numeric_limits<double>::infinity();
            break;
        }
        max_diff = std::max(max_diff, std::fabs(x - y));
    }
    report.max_abs_diff = max_diff;
    report.match = (max_diff <= epsilon);
    return report;
}

} // namespace gemmkit

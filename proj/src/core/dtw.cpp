#include "core/dtw.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace fishnet {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void check_inputs(std::span<const double> x, std::span<const double> y) {
    if (x.empty() || y.empty()) {
        throw ValidationError("dtw: sequences must be nonempty");
    }
    for (const double v : x) {
        if (!std::isfinite(v)) throw ValidationError("dtw: non-finite value in first sequence");
    }
    for (const double v : y) {
        if (!std::isfinite(v)) throw ValidationError("dtw: non-finite value in second sequence");
    }
}

// Fills the (nx+1) x (ny+1) cumulative-cost table, row 0 and column 0 being
// the infinite boundary except cell (0,0) = 0.
std::vector<double> cost_table(std::span<const double> x, std::span<const double> y) {
    const size_t nx = x.size(), ny = y.size();
    const size_t stride = ny + 1;
    std::vector<double> table((nx + 1) * stride, kInf);
    table[0] = 0.0;
    for (size_t i = 1; i <= nx; ++i) {
        const double xi = x[i - 1];
        double* row = table.data() + i * stride;
        const double* prev = row - stride;
        for (size_t j = 1; j <= ny; ++j) {
            const double best = std::min({prev[j - 1], prev[j], row[j - 1]});
            row[j] = std::abs(xi - y[j - 1]) + best;
        }
    }
    return table;
}

}  // namespace

double dtw(std::span<const double> x, std::span<const double> y) {
    check_inputs(x, y);
    const auto table = cost_table(x, y);
    return table.back();
}

std::pair<double, WarpingPath> dtw_path(std::span<const double> x, std::span<const double> y) {
    check_inputs(x, y);
    const size_t nx = x.size(), ny = y.size();
    const size_t stride = ny + 1;
    const auto table = cost_table(x, y);

    WarpingPath path;
    size_t i = nx, j = ny;
    path.steps.emplace_back(i, j);
    while (i > 1 || j > 1) {
        const double diag = table[(i - 1) * stride + (j - 1)];
        const double up = table[(i - 1) * stride + j];
        const double left = table[i * stride + (j - 1)];
        const double best = std::min({diag, up, left});
        if (diag == best) {
            --i;
            --j;
        } else if (up == best) {
            --i;
        } else {
            --j;
        }
        path.steps.emplace_back(i, j);
    }
    std::reverse(path.steps.begin(), path.steps.end());
    return {table.back(), std::move(path)};
}

}  // namespace fishnet

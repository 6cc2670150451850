#pragma once

#include <span>
#include <utility>
#include <vector>

#include "core/common.hpp"

namespace fishnet {

/// Monotone, continuous alignment between two sequences: starts at (1,1),
/// ends at (|x|, |y|), each step advancing i, j, or both by one. 1-based.
struct WarpingPath {
    std::vector<std::pair<size_t, size_t>> steps;
};

/// Dynamic time warping distance with pointwise cost |x_i - y_j| and no
/// warping window. Cost of cell (i,j) is the pointwise cost plus the best of
/// the three predecessor cells; out-of-table predecessors count as infinite.
double dtw(std::span<const double> x, std::span<const double> y);

/// Distance plus one optimal warping path. Ties among the three predecessors
/// break toward the diagonal, then toward (i-1, j), so paths are
/// deterministic. The path's summed pointwise costs equal the distance.
std::pair<double, WarpingPath> dtw_path(std::span<const double> x, std::span<const double> y);

}  // namespace fishnet

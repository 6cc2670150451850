#pragma once

#include <vector>

#include "core/common.hpp"
#include "core/tseries.hpp"

namespace fishnet {

/// Symmetric nonnegative pairwise-distance matrix with a zero diagonal.
class DistanceMatrix {
public:
    DistanceMatrix(std::vector<Node> nodes, std::vector<double> values);

    size_t size() const { return nodes_.size(); }
    double at(size_t i, size_t j) const { return values_[i * nodes_.size() + j]; }
    const std::vector<Node>& nodes() const { return nodes_; }

    /// Largest off-diagonal entry.
    double max_entry() const;

private:
    std::vector<Node> nodes_;
    std::vector<double> values_;  // row-major, size n*n
};

/// DTW distance between every unordered pair of member series. Pairs are
/// independent, so they may be computed on several threads; the result is
/// bit-identical regardless of `threads` (0 picks the hardware count).
DistanceMatrix distance_matrix(const SeriesSet& set, unsigned threads = 0);

/// Divides every entry by the maximum off-diagonal entry, mapping the matrix
/// onto [0, 1]. Errors on an all-zero matrix.
DistanceMatrix normalize_matrix(const DistanceMatrix& matrix);

}  // namespace fishnet

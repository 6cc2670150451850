#include "core/distance.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

#include "core/dtw.hpp"

namespace fishnet {

DistanceMatrix::DistanceMatrix(std::vector<Node> nodes, std::vector<double> values)
    : nodes_(std::move(nodes)), values_(std::move(values)) {
    const size_t n = nodes_.size();
    if (values_.size() != n * n) {
        throw InternalError("DistanceMatrix: value buffer does not match node count");
    }
    for (size_t i = 0; i < n; ++i) {
        if (values_[i * n + i] != 0.0) {
            throw InternalError("DistanceMatrix: nonzero diagonal at " + nodes_[i].label);
        }
        for (size_t j = i + 1; j < n; ++j) {
            const double v = values_[i * n + j];
            if (!(v >= 0.0) || !std::isfinite(v)) {
                throw InternalError("DistanceMatrix: invalid entry at (" + nodes_[i].label + ", " +
                                    nodes_[j].label + ")");
            }
            if (v != values_[j * n + i]) {
                throw InternalError("DistanceMatrix: asymmetry at (" + nodes_[i].label + ", " +
                                    nodes_[j].label + ")");
            }
        }
    }
}

double DistanceMatrix::max_entry() const {
    double best = 0.0;
    const size_t n = size();
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = i + 1; j < n; ++j) best = std::max(best, at(i, j));
    }
    return best;
}

DistanceMatrix distance_matrix(const SeriesSet& set, unsigned threads) {
    const size_t n = set.size();
    if (n < 2) {
        throw ValidationError("distance_matrix: need at least 2 series");
    }
    require_complete(set);

    // Unordered pairs, flattened; each worker owns a disjoint slice and every
    // cell is written exactly once, so any thread count gives the same bits.
    std::vector<std::pair<size_t, size_t>> pairs;
    pairs.reserve(n * (n - 1) / 2);
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    }

    std::vector<double> values(n * n, 0.0);
    const auto compute_range = [&](size_t begin, size_t end) {
        for (size_t p = begin; p < end; ++p) {
            const auto [i, j] = pairs[p];
            const double d = dtw(set.at(i).values, set.at(j).values);
            values[i * n + j] = d;
            values[j * n + i] = d;
        }
    };

    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = std::min<unsigned>(threads, pairs.size());
    if (threads <= 1 || pairs.size() < 64) {
        compute_range(0, pairs.size());
    } else {
        std::vector<std::thread> workers;
        const size_t chunk = (pairs.size() + threads - 1) / threads;
        for (unsigned t = 0; t < threads; ++t) {
            const size_t begin = t * chunk;
            const size_t end = std::min(pairs.size(), begin + chunk);
            if (begin < end) workers.emplace_back(compute_range, begin, end);
        }
        for (auto& w : workers) w.join();
    }

    return DistanceMatrix(set.nodes(), std::move(values));
}

DistanceMatrix normalize_matrix(const DistanceMatrix& matrix) {
    const double max = matrix.max_entry();
    if (max <= 0.0) {
        throw ValidationError("normalize_matrix: all distances are zero, normalization undefined");
    }
    const size_t n = matrix.size();
    std::vector<double> values(n * n, 0.0);
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) {
            if (i != j) values[i * n + j] = matrix.at(i, j) / max;
        }
    }
    return DistanceMatrix(matrix.nodes(), std::move(values));
}

}  // namespace fishnet

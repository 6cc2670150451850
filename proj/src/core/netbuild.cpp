#include "core/netbuild.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace fishnet {

namespace {

void require_normalized(const DistanceMatrix& matrix, const char* who) {
    if (matrix.max_entry() > 1.0) {
        throw ValidationError(std::string(who) +
                              ": distance matrix is not normalized to [0, 1]; "
                              "apply normalize_matrix first");
    }
}

}  // namespace

Network knn_network(const DistanceMatrix& matrix, size_t k) {
    const size_t n = matrix.size();
    if (n < 2) {
        throw ValidationError("knn_network: need at least 2 nodes");
    }
    if (k < 1 || k > n - 1) {
        throw ValidationError("knn_network: k = " + std::to_string(k) +
                              " outside [1, " + std::to_string(n - 1) + "]");
    }
    Network net(matrix.nodes());
    std::vector<size_t> order;
    for (size_t i = 0; i < n; ++i) {
        order.clear();
        for (size_t j = 0; j < n; ++j) {
            if (j != i) order.push_back(j);
        }
        // Distance order with index as the tiebreaker.
        std::partial_sort(order.begin(), order.begin() + static_cast<long>(k), order.end(),
                          [&](size_t a, size_t b) {
                              const double da = matrix.at(i, a), db = matrix.at(i, b);
                              if (da != db) return da < db;
                              return a < b;
                          });
        for (size_t r = 0; r < k; ++r) net.add_edge(i, order[r]);
    }
    return net;
}

Network eps_network(const DistanceMatrix& matrix, double eps) {
    if (!(eps > 0.0)) {
        throw ValidationError("eps_network: eps must be positive");
    }
    require_normalized(matrix, "eps_network");
    const size_t n = matrix.size();
    Network net(matrix.nodes());
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = i + 1; j < n; ++j) {
            if (matrix.at(i, j) < eps) net.add_edge(i, j);
        }
    }
    return net;
}

Network weighted_network(const DistanceMatrix& matrix) {
    require_normalized(matrix, "weighted_network");
    const size_t n = matrix.size();
    Network net(matrix.nodes());
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = i + 1; j < n; ++j) {
            const double w = 1.0 - matrix.at(i, j);
            if (w > 0.0) net.add_edge(i, j, w);
        }
    }
    return net;
}

std::optional<double> pearson(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size() || x.empty()) {
        throw ValidationError("pearson: sequences must be nonempty and equal-length");
    }
    const double n = static_cast<double>(x.size());
    const double mx = std::accumulate(x.begin(), x.end(), 0.0) / n;
    const double my = std::accumulate(y.begin(), y.end(), 0.0) / n;
    double sxy = 0.0, sxx = 0.0, syy = 0.0;
    for (size_t i = 0; i < x.size(); ++i) {
        const double dx = x[i] - mx, dy = y[i] - my;
        sxy += dx * dy;
        sxx += dx * dx;
        syy += dy * dy;
    }
    if (sxx == 0.0 || syy == 0.0) return std::nullopt;
    return sxy / std::sqrt(sxx * syy);
}

double fisher_z_pvalue(double r, size_t samples) {
    if (samples < 4) {
        throw ValidationError("fisher_z_pvalue: need at least 4 samples, got " +
                              std::to_string(samples));
    }
    constexpr double kClamp = 1.0 - 1e-12;  // keeps atanh finite at |r| = 1
    r = std::clamp(r, -kClamp, kClamp);
    const double z = std::atanh(r) * std::sqrt(static_cast<double>(samples) - 3.0);
    return std::erfc(std::abs(z) / std::sqrt(2.0));
}

Network significant_links_network(const SeriesSet& set, double alpha, bool bonferroni) {
    if (!(alpha > 0.0 && alpha < 1.0)) {
        throw ValidationError("significant_links_network: alpha must lie in (0, 1)");
    }
    const size_t n = set.size();
    if (n < 2) {
        throw ValidationError("significant_links_network: need at least 2 series");
    }
    const size_t samples = static_cast<size_t>(set.month_count());
    if (samples < 4) {
        throw ValidationError("significant_links_network: series length " +
                              std::to_string(samples) + " < 4, the z-test is undefined");
    }
    require_complete(set);

    const size_t tests = n * (n - 1) / 2;
    const double threshold = bonferroni ? alpha / static_cast<double>(tests) : alpha;

    Network net(set.nodes());
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = i + 1; j < n; ++j) {
            const auto r = pearson(set.at(i).values, set.at(j).values);
            if (!r) continue;  // constant series: no correlation, no edge
            if (fisher_z_pvalue(*r, samples) < threshold) net.add_edge(i, j);
        }
    }
    return net;
}

}  // namespace fishnet

#pragma once

#include "core/distance.hpp"
#include "core/network.hpp"
#include "core/tseries.hpp"

namespace fishnet {

/// Links every node to its k nearest neighbors by distance, ties broken by
/// ascending node index, then symmetrizes by union: an edge exists if either
/// endpoint selected the other. Unweighted.
Network knn_network(const DistanceMatrix& matrix, size_t k);

/// Links pairs whose normalized distance falls strictly below eps.
/// Requires a matrix on the [0, 1] scale. Unweighted.
Network eps_network(const DistanceMatrix& matrix, double eps);

/// Complete weighted graph with weight 1 - distance on a normalized matrix;
/// pairs at the maximal distance (weight 0) carry no edge.
Network weighted_network(const DistanceMatrix& matrix);

/// Links pairs whose Pearson correlation is significant under the Fisher
/// z-transformation: z = atanh(r) * sqrt(T - 3), two-sided against the
/// standard normal. Constant series correlate with nothing and simply stay
/// unconnected. With `bonferroni`, alpha is divided by the number of pairs.
Network significant_links_network(const SeriesSet& set, double alpha, bool bonferroni = false);

/// Pearson correlation of two equal-length sequences; empty when either
/// side has zero variance.
std::optional<double> pearson(std::span<const double> x, std::span<const double> y);

/// Two-sided p-value of r under the Fisher z-transformation with T samples.
/// |r| = 1 is nudged inside the open interval so z stays finite.
double fisher_z_pvalue(double r, size_t samples);

}  // namespace fishnet

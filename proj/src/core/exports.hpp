#pragma once

#include <string>

#include "core/distance.hpp"
#include "core/temporal.hpp"

namespace fishnet {

/// `source,target,weight` rows in canonical edge order; weight column is
/// 1.000000000 for unweighted networks. Isolated nodes do not appear.
void write_edgelist_csv(const Network& net, const std::string& path);

/// Rebuilds a network from an edge-list CSV. The roster is the set of
/// endpoint labels (optionally extended), kinds resolved when labels follow
/// the aggregation pipeline's naming, else tagged island.
Network read_edgelist_csv(const std::string& path);
Network read_edgelist_csv(const std::string& path, const std::vector<Node>& roster);

/// GraphML with node attributes kind and community (when a partition is
/// given) and edge attributes status (new|retained, when a diff is given)
/// and weight (when weighted).
void write_graphml(const Network& net, const std::string& path,
                   const Partition* partition = nullptr, const EdgeDiff* diff = nullptr);

/// Graphviz DOT: classification nodes are triangles, islands circles,
/// metiers squares; with a diff, new edges are red and retained black;
/// with a partition, nodes are filled by community color.
void write_dot(const Network& net, const std::string& path, const Partition* partition = nullptr,
               const EdgeDiff* diff = nullptr);

void write_network(const Network& net, const std::string& format, const std::string& path,
                   const Partition* partition = nullptr, const EdgeDiff* diff = nullptr);

/// Header row of labels, then one row per label with the full symmetric
/// matrix at fixed precision.
void write_distance_csv(const DistanceMatrix& matrix, const std::string& path);

/// `label,kind` then one column per month ("YYYY-MM"); missing months are
/// empty cells.
void write_series_csv(const SeriesSet& set, const std::string& path);
SeriesSet read_series_csv(const std::string& path);

}  // namespace fishnet

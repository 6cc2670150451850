#pragma once

#include <optional>

#include "core/network.hpp"

namespace fishnet {

/// Node-to-community assignment with the partition's modularity score.
/// Modularity is empty only for edgeless networks, where it is undefined.
struct Partition {
    std::vector<Node> nodes;
    std::vector<int> assignment;  // by node index; ids compact, 0-based
    std::optional<double> modularity;

    int community_count() const;
    int community_of(std::string_view label) const;
};

size_t degree(const Network& net, std::string_view label);

/// |E| / C(n, 2). Needs at least 2 nodes.
double density(const Network& net);

/// Fraction of the node's neighbor pairs that are themselves connected;
/// zero by convention for degree < 2.
double local_clustering(const Network& net, std::string_view label);

/// Newman modularity Q = sum_c [ e_c/m - (d_c/2m)^2 ] over the unweighted
/// skeleton. Errors on an edgeless network (m = 0 is undefined, loudly) and
/// on assignments that do not cover every node.
double modularity(const Network& net, const std::vector<int>& assignment);

/// Agglomerative random-walk community detection. Node distances come from
/// walk_length-step transition probabilities; the closest adjacent pair of
/// communities is merged until none remain, and the merge tree is cut at the
/// maximum-modularity level (ties toward fewer communities). Isolated nodes
/// end as singleton communities; components never merge with each other.
Partition detect_communities(const Network& net, size_t walk_length = 4);

}  // namespace fishnet

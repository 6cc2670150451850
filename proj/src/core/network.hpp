#pragma once

#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "core/common.hpp"

namespace fishnet {

/// Unordered node pair by label, normalized so the lesser label comes first.
struct EdgeKey {
    std::string a;
    std::string b;

    EdgeKey() = default;
    EdgeKey(std::string first, std::string second);

    auto operator<=>(const EdgeKey&) const = default;
};

/// Undirected simple graph over a fixed roster of kind-tagged nodes.
/// Optionally edge-weighted; weights live in (0, 1].
class Network {
public:
    Network() = default;
    explicit Network(std::vector<Node> nodes);

    size_t node_count() const { return nodes_.size(); }
    size_t edge_count() const { return edges_.size(); }
    const std::vector<Node>& nodes() const { return nodes_; }
    const Node& node(size_t index) const { return nodes_.at(index); }

    size_t index_of(std::string_view label) const;
    bool has_node(std::string_view label) const;

    void add_edge(size_t i, size_t j, std::optional<double> weight = std::nullopt);
    bool has_edge(size_t i, size_t j) const;

    /// Edges as (i, j) index pairs with i < j, ascending: the canonical
    /// order used by every export.
    const std::set<std::pair<size_t, size_t>>& edges() const { return edges_; }
    std::optional<double> weight(size_t i, size_t j) const;
    bool weighted() const { return !weights_.empty(); }

    std::vector<size_t> neighbors(size_t index) const;
    size_t degree(size_t index) const;

    /// Edge set keyed by labels, for comparisons across networks.
    std::set<EdgeKey> edge_keys() const;

private:
    std::vector<Node> nodes_;
    std::map<std::string, size_t, std::less<>> index_;
    std::set<std::pair<size_t, size_t>> edges_;
    std::map<std::pair<size_t, size_t>, double> weights_;
};

}  // namespace fishnet

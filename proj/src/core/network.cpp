#include "core/network.hpp"

#include <algorithm>

namespace fishnet {

EdgeKey::EdgeKey(std::string first, std::string second) {
    if (second < first) std::swap(first, second);
    a = std::move(first);
    b = std::move(second);
}

Network::Network(std::vector<Node> nodes) : nodes_(std::move(nodes)) {
    for (size_t i = 0; i < nodes_.size(); ++i) {
        if (!index_.emplace(nodes_[i].label, i).second) {
            throw ValidationError("Network: duplicate node label '" + nodes_[i].label + "'");
        }
    }
}

size_t Network::index_of(std::string_view label) const {
    const auto it = index_.find(label);
    if (it == index_.end()) {
        throw ValidationError("unknown node '" + std::string(label) + "'");
    }
    return it->second;
}

bool Network::has_node(std::string_view label) const {
    return index_.find(label) != index_.end();
}

void Network::add_edge(size_t i, size_t j, std::optional<double> weight) {
    if (i >= nodes_.size() || j >= nodes_.size()) {
        throw InternalError("Network::add_edge: node index out of range");
    }
    if (i == j) {
        throw InternalError("Network::add_edge: self-loop on '" + nodes_[i].label + "'");
    }
    if (j < i) std::swap(i, j);
    edges_.insert({i, j});
    if (weight) {
        if (!(*weight > 0.0 && *weight <= 1.0)) {
            throw InternalError("Network::add_edge: weight outside (0, 1]");
        }
        weights_[{i, j}] = *weight;
    }
}

bool Network::has_edge(size_t i, size_t j) const {
    if (j < i) std::swap(i, j);
    return edges_.count({i, j}) > 0;
}

std::optional<double> Network::weight(size_t i, size_t j) const {
    if (j < i) std::swap(i, j);
    const auto it = weights_.find({i, j});
    if (it == weights_.end()) return std::nullopt;
    return it->second;
}

std::vector<size_t> Network::neighbors(size_t index) const {
    std::vector<size_t> out;
    for (const auto& [i, j] : edges_) {
        if (i == index) out.push_back(j);
        if (j == index) out.push_back(i);
    }
    std::sort(out.begin(), out.end());
    return out;
}

size_t Network::degree(size_t index) const {
    size_t count = 0;
    for (const auto& [i, j] : edges_) {
        if (i == index || j == index) ++count;
    }
    return count;
}

std::set<EdgeKey> Network::edge_keys() const {
    std::set<EdgeKey> keys;
    for (const auto& [i, j] : edges_) {
        keys.insert(EdgeKey(nodes_[i].label, nodes_[j].label));
    }
    return keys;
}

}  // namespace fishnet

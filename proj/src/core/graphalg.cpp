#include "core/graphalg.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <set>

namespace fishnet {

int Partition::community_count() const {
    const std::set<int> distinct(assignment.begin(), assignment.end());
    return static_cast<int>(distinct.size());
}

int Partition::community_of(std::string_view label) const {
    for (size_t i = 0; i < nodes.size(); ++i) {
        if (nodes[i].label == label) return assignment[i];
    }
    throw ValidationError("unknown node '" + std::string(label) + "'");
}

size_t degree(const Network& net, std::string_view label) {
    return net.degree(net.index_of(label));
}

double density(const Network& net) {
    const size_t n = net.node_count();
    if (n < 2) {
        throw ValidationError("density: need at least 2 nodes");
    }
    const double possible = static_cast<double>(n) * static_cast<double>(n - 1) / 2.0;
    return static_cast<double>(net.edge_count()) / possible;
}

double local_clustering(const Network& net, std::string_view label) {
    const size_t idx = net.index_of(label);
    const auto nbrs = net.neighbors(idx);
    if (nbrs.size() < 2) return 0.0;
    size_t linked = 0;
    for (size_t a = 0; a < nbrs.size(); ++a) {
        for (size_t b = a + 1; b < nbrs.size(); ++b) {
            if (net.has_edge(nbrs[a], nbrs[b])) ++linked;
        }
    }
    const double possible = static_cast<double>(nbrs.size()) * (static_cast<double>(nbrs.size()) - 1.0) / 2.0;
    return static_cast<double>(linked) / possible;
}

double modularity(const Network& net, const std::vector<int>& assignment) {
    const size_t n = net.node_count();
    const double m = static_cast<double>(net.edge_count());
    if (m == 0.0) {
        throw ValidationError("modularity: undefined on an edgeless network");
    }
    if (assignment.size() != n) {
        throw ValidationError("modularity: assignment covers " +
                              std::to_string(assignment.size()) + " of " + std::to_string(n) +
                              " nodes");
    }

    std::map<int, size_t> compact;
    for (const int id : assignment) compact.emplace(id, compact.size());

    std::vector<double> intra(compact.size(), 0.0);
    std::vector<double> total_degree(compact.size(), 0.0);
    for (const auto& [i, j] : net.edges()) {
        const size_t ci = compact.at(assignment[i]);
        const size_t cj = compact.at(assignment[j]);
        total_degree[ci] += 1.0;
        total_degree[cj] += 1.0;
        if (ci == cj) intra[ci] += 1.0;
    }

    double q = 0.0;
    for (size_t c = 0; c < compact.size(); ++c) {
        const double half_degree = total_degree[c] / (2.0 * m);
        q += intra[c] / m - half_degree * half_degree;
    }
    return q;
}

namespace {

// One agglomeration candidate or survivor in the walktrap merge process.
struct Community {
    bool active = true;
    double size = 0.0;
    std::vector<int> members;
    std::vector<double> walk_profile;  // mean t-step transition row of the members
    std::set<int> adjacent;
};

// Squared walk-profile distance, each coordinate damped by the target's
// degree; coordinates of degree-0 nodes are unreachable and skipped.
double profile_distance_sq(const Community& a, const Community& b,
                           const std::vector<double>& degrees) {
    double sum = 0.0;
    for (size_t k = 0; k < degrees.size(); ++k) {
        if (degrees[k] == 0.0) continue;
        const double diff = a.walk_profile[k] - b.walk_profile[k];
        sum += diff * diff / degrees[k];
    }
    return sum;
}

double merge_cost(const Community& a, const Community& b, const std::vector<double>& degrees,
                  size_t node_count) {
    const double ward = a.size * b.size / (a.size + b.size);
    return ward * profile_distance_sq(a, b, degrees) / static_cast<double>(node_count);
}

}  // namespace

Partition detect_communities(const Network& net, size_t walk_length) {
    const size_t n = net.node_count();
    if (n == 0) {
        throw ValidationError("detect_communities: empty network");
    }
    if (walk_length < 1) {
        throw ValidationError("detect_communities: walk length must be at least 1");
    }

    std::vector<std::vector<size_t>> adjacency(n);
    std::vector<double> degrees(n, 0.0);
    for (const auto& [i, j] : net.edges()) {
        adjacency[i].push_back(j);
        adjacency[j].push_back(i);
        degrees[i] += 1.0;
        degrees[j] += 1.0;
    }

    // Rows of the one-step transition matrix; an isolated node keeps all its
    // probability mass (its row is never used for merging).
    std::vector<double> step(n * n, 0.0);
    for (size_t i = 0; i < n; ++i) {
        if (adjacency[i].empty()) {
            step[i * n + i] = 1.0;
        } else {
            for (const size_t j : adjacency[i]) step[i * n + j] = 1.0 / degrees[i];
        }
    }

    // walk_length-step probabilities by repeated multiplication.
    std::vector<double> walk = step;
    std::vector<double> next(n * n);
    for (size_t t = 1; t < walk_length; ++t) {
        std::fill(next.begin(), next.end(), 0.0);
        for (size_t i = 0; i < n; ++i) {
            for (size_t k = 0; k < n; ++k) {
                const double w = walk[i * n + k];
                if (w == 0.0) continue;
                const double* row = step.data() + k * n;
                double* out = next.data() + i * n;
                for (size_t j = 0; j < n; ++j) out[j] += w * row[j];
            }
        }
        walk.swap(next);
    }

    std::vector<Community> comms;
    comms.reserve(2 * n);
    for (size_t i = 0; i < n; ++i) {
        Community c;
        c.size = 1.0;
        c.members = {static_cast<int>(i)};
        c.walk_profile.assign(walk.begin() + static_cast<long>(i * n),
                              walk.begin() + static_cast<long>((i + 1) * n));
        for (const size_t j : adjacency[i]) c.adjacent.insert(static_cast<int>(j));
        comms.push_back(std::move(c));
    }

    // Greedy agglomeration: always merge the cheapest adjacent pair, so
    // separate components never join. The full merge sequence is kept for
    // the modularity cut below.
    std::vector<std::array<int, 3>> merges;  // {left, right, merged}
    while (true) {
        int best_a = -1, best_b = -1;
        double best_cost = 0.0;
        for (size_t a = 0; a < comms.size(); ++a) {
            if (!comms[a].active) continue;
            for (const int b : comms[a].adjacent) {
                if (static_cast<size_t>(b) <= a) continue;
                const double cost = merge_cost(comms[a], comms[b], degrees, n);
                if (best_a < 0 || cost < best_cost) {
                    best_a = static_cast<int>(a);
                    best_b = b;
                    best_cost = cost;
                }
            }
        }
        if (best_a < 0) break;

        Community merged;
        const Community& left = comms[best_a];
        const Community& right = comms[best_b];
        merged.size = left.size + right.size;
        merged.members = left.members;
        merged.members.insert(merged.members.end(), right.members.begin(), right.members.end());
        merged.walk_profile.resize(n);
        for (size_t k = 0; k < n; ++k) {
            merged.walk_profile[k] =
                (left.size * left.walk_profile[k] + right.size * right.walk_profile[k]) /
                merged.size;
        }
        merged.adjacent = left.adjacent;
        merged.adjacent.insert(right.adjacent.begin(), right.adjacent.end());
        merged.adjacent.erase(best_a);
        merged.adjacent.erase(best_b);

        const int merged_id = static_cast<int>(comms.size());
        for (const int x : merged.adjacent) {
            comms[x].adjacent.erase(best_a);
            comms[x].adjacent.erase(best_b);
            comms[x].adjacent.insert(merged_id);
        }
        comms[best_a].active = false;
        comms[best_b].active = false;
        merges.push_back({best_a, best_b, merged_id});
        comms.push_back(std::move(merged));
    }

    Partition partition;
    partition.nodes = net.nodes();

    std::vector<int> assignment(n);
    for (size_t i = 0; i < n; ++i) assignment[i] = static_cast<int>(i);

    if (net.edge_count() == 0) {
        partition.assignment = assignment;  // all singletons, modularity undefined
        return partition;
    }

    // Walk the dendrogram bottom-up and keep the level with maximum
    // modularity; on exact ties the later level (fewer communities) wins.
    size_t best_level = 0;
    double best_q = modularity(net, assignment);
    for (size_t level = 0; level < merges.size(); ++level) {
        const int target = merges[level][2];
        for (const int member : comms[target].members) assignment[member] = target;
        const double q = modularity(net, assignment);
        if (q >= best_q) {
            best_q = q;
            best_level = level + 1;
        }
    }

    for (size_t i = 0; i < n; ++i) assignment[i] = static_cast<int>(i);
    for (size_t level = 0; level < best_level; ++level) {
        const int target = merges[level][2];
        for (const int member : comms[target].members) assignment[member] = target;
    }

    // Renumber communities by first appearance in node order.
    std::map<int, int> renumber;
    partition.assignment.resize(n);
    for (size_t i = 0; i < n; ++i) {
        const auto it = renumber.emplace(assignment[i], static_cast<int>(renumber.size())).first;
        partition.assignment[i] = it->second;
    }
    partition.modularity = best_q;
    return partition;
}

}  // namespace fishnet

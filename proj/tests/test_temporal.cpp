#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "core/temporal.hpp"

using namespace fishnet;

namespace {

constexpr double kPi = 3.14159265358979323846;

// Small two-group seasonal set spanning whole years.
SeriesSet seasonal_set(size_t count, int first_year, int last_year, uint32_t seed) {
    const int months = (last_year - first_year + 1) * 12;
    std::mt19937 rng(seed);
    SeriesSet set({first_year, 1}, months);
    for (size_t s = 0; s < count; ++s) {
        TimeSeries series;
        series.label = "s" + std::to_string(s);
        series.kind = s % 2 == 0 ? Kind::Island : Kind::Metier;
        series.start = {first_year, 1};
        const double phase = s % 2 == 0 ? 0.0 : kPi;
        for (int m = 0; m < months; ++m) {
            const double noise = static_cast<double>(rng() % 100) / 1000.0;
            series.values.push_back(10.0 + 5.0 * std::sin(2.0 * kPi * m / 12.0 + phase) + noise);
        }
        set.add(series);
    }
    return set;
}

Network labeled_network(const std::vector<std::string>& labels,
                        const std::vector<std::pair<size_t, size_t>>& edges) {
    std::vector<Node> nodes;
    for (const auto& label : labels) nodes.push_back({label, Kind::Island});
    Network net(nodes);
    for (const auto& [i, j] : edges) net.add_edge(i, j);
    return net;
}

}  // namespace

TEST_CASE("yearly_networks builds one network per year over a stable roster") {
    const SeriesSet set = seasonal_set(8, 2010, 2017, 7060);
    MethodSpec spec;
    spec.method = MethodSpec::Method::Knn;
    spec.k = 2;

    const YearlyNetworks nets = yearly_networks(set, 2010, 2017, spec);
    REQUIRE(nets.by_year.size() == 8);
    CHECK(nets.by_year.begin()->first == 2010);
    CHECK(nets.by_year.rbegin()->first == 2017);

    const auto& roster = nets.by_year.at(2010).nodes();
    for (const auto& [year, net] : nets.by_year) {
        CHECK(net.nodes() == roster);
        CHECK(net.node_count() == 8);
    }

    SECTION("single-year range yields one entry") {
        const YearlyNetworks one = yearly_networks(set, 2012, 2012, spec);
        CHECK(one.by_year.size() == 1);
        CHECK(one.by_year.count(2012) == 1);
    }
    SECTION("deterministic across calls") {
        const YearlyNetworks again = yearly_networks(set, 2010, 2017, spec);
        for (const auto& [year, net] : nets.by_year) {
            CHECK(again.by_year.at(year).edges() == net.edges());
        }
    }
    SECTION("full-span normalization variant also works") {
        const YearlyNetworks variant = yearly_networks(set, 2010, 2017, spec, {false, 4});
        CHECK(variant.by_year.size() == 8);
    }
}

TEST_CASE("edge_diff splits edges into new, retained and dropped") {
    const std::vector<std::string> labels{"a", "b", "c", "d"};
    const Network prev = labeled_network(labels, {{0, 1}, {1, 2}});  // ab, bc
    const Network curr = labeled_network(labels, {{1, 2}, {2, 3}});  // bc, cd

    const EdgeDiff diff = edge_diff(prev, curr);
    CHECK(diff.added == std::set<EdgeKey>{EdgeKey("c", "d")});
    CHECK(diff.retained == std::set<EdgeKey>{EdgeKey("b", "c")});
    CHECK(diff.dropped == std::set<EdgeKey>{EdgeKey("a", "b")});

    SECTION("identical networks retain everything") {
        const EdgeDiff same = edge_diff(prev, prev);
        CHECK(same.added.empty());
        CHECK(same.dropped.empty());
        CHECK(same.retained == prev.edge_keys());
    }
    SECTION("node-set mismatch is an error") {
        const Network other = labeled_network({"a", "b"}, {{0, 1}});
        CHECK_THROWS_AS(edge_diff(prev, other), ValidationError);
    }
}

TEST_CASE("edge_diff identities hold on fuzzed network pairs") {
    std::mt19937 rng(7061);
    std::vector<std::string> labels;
    for (int i = 0; i < 10; ++i) labels.push_back("n" + std::to_string(i));

    for (int trial = 0; trial < 200; ++trial) {
        std::vector<std::pair<size_t, size_t>> ea, eb;
        for (size_t i = 0; i < labels.size(); ++i) {
            for (size_t j = i + 1; j < labels.size(); ++j) {
                if (rng() % 3 == 0) ea.emplace_back(i, j);
                if (rng() % 3 == 0) eb.emplace_back(i, j);
            }
        }
        const Network prev = labeled_network(labels, ea);
        const Network curr = labeled_network(labels, eb);
        const EdgeDiff diff = edge_diff(prev, curr);

        std::set<EdgeKey> rebuilt_curr = diff.added;
        rebuilt_curr.insert(diff.retained.begin(), diff.retained.end());
        CHECK(rebuilt_curr == curr.edge_keys());

        std::set<EdgeKey> rebuilt_prev = diff.dropped;
        rebuilt_prev.insert(diff.retained.begin(), diff.retained.end());
        CHECK(rebuilt_prev == prev.edge_keys());

        for (const auto& edge : diff.added) CHECK(diff.retained.count(edge) == 0);
        CHECK(diff.added.size() + diff.retained.size() == curr.edge_count());
    }
}

TEST_CASE("top_degree_nodes ranks by degree then label") {
    const Network star = labeled_network({"hub", "a", "b", "c"}, {{0, 1}, {0, 2}, {0, 3}});
    const auto top = top_degree_nodes(star, 1);
    REQUIRE(top.size() == 1);
    CHECK(top[0].first.label == "hub");
    CHECK(top[0].second == 3);

    SECTION("a universal tie returns the full roster in label order") {
        const Network cycle = labeled_network({"b", "a", "d", "c"},
                                              {{0, 1}, {1, 3}, {3, 2}, {2, 0}});
        const auto all = top_degree_nodes(cycle, 1);
        REQUIRE(all.size() == 4);
        CHECK(all[0].first.label == "a");
        CHECK(all[3].first.label == "d");
    }
    SECTION("everything tied at the cutoff is included") {
        // degrees: x:3, y:2, z:2, w:2, v:1
        const Network net = labeled_network({"x", "y", "z", "w", "v"},
                                            {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {3, 4}});
        const auto top2 = top_degree_nodes(net, 2);
        REQUIRE(top2.size() == 4);  // x plus the three tied at degree 2
        CHECK(top2[0].first.label == "x");
        CHECK(top2[1].second == 2);
        CHECK(top2[3].second == 2);
    }
    SECTION("errors") {
        CHECK_THROWS_AS(top_degree_nodes(star, 0), ValidationError);
        CHECK_THROWS_AS(top_degree_nodes(Network(std::vector<Node>{}), 1), ValidationError);
    }
}

TEST_CASE("method_selection_report covers every candidate with sane metrics") {
    const SeriesSet set = seasonal_set(6, 2010, 2011, 7062);
    const MethodReport report =
        method_selection_report(set, 2010, 2011, {2, 5}, {0.3, 0.9}, 0.05);

    // knn rows, eps rows, weighted, significant.
    REQUIRE(report.rows.size() == 6);
    CHECK(report.rows[0].method == "knn");
    CHECK(report.rows[0].parameter == 2.0);
    CHECK(report.rows[2].method == "eps");
    CHECK(report.rows[4].method == "weighted");
    CHECK_FALSE(report.rows[4].parameter.has_value());
    CHECK(report.rows[5].method == "significant");
    CHECK(report.rows[5].parameter == 0.05);

    SECTION("k = n-1 yields complete graphs, density 1") {
        CHECK(report.rows[1].mean_density == 1.0);
    }
    SECTION("knn density is monotone in k") {
        CHECK(report.rows[0].mean_density <= report.rows[1].mean_density);
    }
    SECTION("eps density is monotone in eps") {
        CHECK(report.rows[2].mean_density <= report.rows[3].mean_density);
    }
    SECTION("densities match a per-network recomputation") {
        MethodSpec spec;
        spec.method = MethodSpec::Method::Knn;
        spec.k = 2;
        const YearlyNetworks nets = yearly_networks(set, 2010, 2011, spec);
        double mean = 0.0;
        for (const auto& [year, net] : nets.by_year) mean += density(net);
        mean /= static_cast<double>(nets.by_year.size());
        CHECK_THAT(report.rows[0].mean_density, Catch::Matchers::WithinRel(mean, 1e-12));
    }
}

TEST_CASE("method_selection_report records edgeless candidates as undefined modularity") {
    const SeriesSet set = seasonal_set(6, 2010, 2010, 7063);
    const MethodReport report =
        method_selection_report(set, 2010, 2010, {}, {1e-9}, 0.05);
    REQUIRE(report.rows.size() == 3);  // eps, weighted, significant
    CHECK(report.rows[0].method == "eps");
    CHECK(report.rows[0].mean_density == 0.0);
    CHECK_FALSE(report.rows[0].mean_modularity.has_value());

    SECTION("no candidates at all is an error") {
        CHECK_THROWS_AS(method_selection_report(set, 2010, 2010, {}, {}, 0.05),
                        ValidationError);
    }
}

TEST_CASE("knn density is scale-invariant, so raw and normalized matrices agree") {
    const SeriesSet set = seasonal_set(8, 2010, 2010, 7064);
    const SeriesSet slice = normalize_set(slice_year(set, 2010));
    const DistanceMatrix raw = distance_matrix(slice);
    const DistanceMatrix norm = normalize_matrix(raw);
    CHECK(knn_network(raw, 2).edges() == knn_network(norm, 2).edges());
}

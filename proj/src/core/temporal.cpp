#include "core/temporal.hpp"

#include <algorithm>
#include <cmath>

namespace fishnet {

MethodSpec::Method MethodSpec::method_from_name(std::string_view name) {
    if (name == "knn") return Method::Knn;
    if (name == "eps") return Method::Eps;
    if (name == "weighted") return Method::Weighted;
    if (name == "significant") return Method::Significant;
    throw ValidationError("unknown construction method '" + std::string(name) +
                          "' (expected knn, eps, weighted or significant)");
}

std::string_view MethodSpec::method_name(Method method) {
    switch (method) {
        case Method::Knn: return "knn";
        case Method::Eps: return "eps";
        case Method::Weighted: return "weighted";
        case Method::Significant: return "significant";
    }
    throw InternalError("method_name: unhandled method");
}

namespace {

Network build_one(const SeriesSet& year_slice, const MethodSpec& spec) {
    switch (spec.method) {
        case MethodSpec::Method::Significant:
            return significant_links_network(year_slice, spec.alpha, spec.bonferroni);
        case MethodSpec::Method::Knn:
            return knn_network(distance_matrix(year_slice), spec.k);
        case MethodSpec::Method::Eps:
            return eps_network(normalize_matrix(distance_matrix(year_slice)), spec.eps);
        case MethodSpec::Method::Weighted:
            return weighted_network(normalize_matrix(distance_matrix(year_slice)));
    }
    throw InternalError("build_one: unhandled method");
}

}  // namespace

YearlyNetworks yearly_networks(const SeriesSet& set, int first_year, int last_year,
                               const MethodSpec& spec, const YearlyOptions& options) {
    if (last_year < first_year) {
        throw ValidationError("yearly_networks: year range " + std::to_string(first_year) + ".." +
                              std::to_string(last_year) + " is empty");
    }
    const SeriesSet* source = &set;
    SeriesSet full_span_normalized(set.start(), set.month_count());
    if (!options.per_year_normalization) {
        full_span_normalized = normalize_set(set);
        source = &full_span_normalized;
    }

    YearlyNetworks out;
    for (int year = first_year; year <= last_year; ++year) {
        SeriesSet slice = slice_year(*source, year);
        if (options.per_year_normalization) slice = normalize_set(slice);
        out.by_year.emplace(year, build_one(slice, spec));
    }
    return out;
}

EdgeDiff edge_diff(const Network& prev, const Network& curr) {
    if (prev.nodes() != curr.nodes()) {
        throw ValidationError("edge_diff: networks have different node sets");
    }
    const auto before = prev.edge_keys();
    const auto after = curr.edge_keys();

    EdgeDiff diff;
    std::set_difference(after.begin(), after.end(), before.begin(), before.end(),
                        std::inserter(diff.added, diff.added.end()));
    std::set_intersection(after.begin(), after.end(), before.begin(), before.end(),
                          std::inserter(diff.retained, diff.retained.end()));
    std::set_difference(before.begin(), before.end(), after.begin(), after.end(),
                        std::inserter(diff.dropped, diff.dropped.end()));
    return diff;
}

std::vector<std::pair<Node, size_t>> top_degree_nodes(const Network& net, size_t count) {
    if (count < 1) {
        throw ValidationError("top_degree_nodes: count must be at least 1");
    }
    if (net.node_count() == 0) {
        throw ValidationError("top_degree_nodes: empty network");
    }
    std::vector<std::pair<Node, size_t>> ranked;
    ranked.reserve(net.node_count());
    for (size_t i = 0; i < net.node_count(); ++i) {
        ranked.emplace_back(net.node(i), net.degree(i));
    }
    std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second > b.second;
        return a.first.label < b.first.label;
    });
    if (ranked.size() > count) {
        const size_t cutoff = ranked[count - 1].second;
        size_t end = count;
        while (end < ranked.size() && ranked[end].second == cutoff) ++end;
        ranked.resize(end);
    }
    return ranked;
}

namespace {

MethodReportRow sweep_row(const SeriesSet& set, int first_year, int last_year,
                          const MethodSpec& spec, std::optional<double> parameter,
                          const YearlyOptions& options) {
    const auto nets = yearly_networks(set, first_year, last_year, spec, options);

    MethodReportRow row;
    row.method = std::string(MethodSpec::method_name(spec.method));
    row.parameter = parameter;

    double density_sum = 0.0;
    double modularity_sum = 0.0;
    bool modularity_defined = true;
    for (const auto& [year, net] : nets.by_year) {
        density_sum += density(net);
        if (net.edge_count() == 0) {
            modularity_defined = false;  // undefined beats a fabricated zero
            continue;
        }
        const Partition part = detect_communities(net, options.walk_length);
        if (!part.modularity) throw InternalError("sweep_row: partition without modularity");
        modularity_sum += *part.modularity;
    }
    const double years = static_cast<double>(nets.by_year.size());
    row.mean_density = density_sum / years;
    if (modularity_defined) row.mean_modularity = modularity_sum / years;
    return row;
}

}  // namespace

MethodReport method_selection_report(const SeriesSet& set, int first_year, int last_year,
                                     const std::vector<size_t>& k_values,
                                     const std::vector<double>& eps_values, double alpha,
                                     const YearlyOptions& options) {
    if (k_values.empty() && eps_values.empty()) {
        throw ValidationError("method_selection_report: no candidates given");
    }
    MethodReport report;
    for (const size_t k : k_values) {
        MethodSpec spec;
        spec.method = MethodSpec::Method::Knn;
        spec.k = k;
        report.rows.push_back(sweep_row(set, first_year, last_year, spec,
                                        static_cast<double>(k), options));
    }
    for (const double eps : eps_values) {
        MethodSpec spec;
        spec.method = MethodSpec::Method::Eps;
        spec.eps = eps;
        report.rows.push_back(sweep_row(set, first_year, last_year, spec, eps, options));
    }
    {
        MethodSpec spec;
        spec.method = MethodSpec::Method::Weighted;
        report.rows.push_back(
            sweep_row(set, first_year, last_year, spec, std::nullopt, options));
    }
    {
        MethodSpec spec;
        spec.method = MethodSpec::Method::Significant;
        spec.alpha = alpha;
        report.rows.push_back(sweep_row(set, first_year, last_year, spec, alpha, options));
    }
    return report;
}

}  // namespace fishnet

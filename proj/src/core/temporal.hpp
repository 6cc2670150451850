#pragma once

#include <map>

#include "core/graphalg.hpp"
#include "core/netbuild.hpp"

namespace fishnet {

/// Which of the four construction methods to apply, with its parameters.
struct MethodSpec {
    enum class Method { Knn, Eps, Weighted, Significant };

    Method method = Method::Knn;
    size_t k = 2;
    double eps = 0.5;
    double alpha = 0.05;
    bool bonferroni = false;

    static Method method_from_name(std::string_view name);
    static std::string_view method_name(Method method);
};

/// One network per calendar year over a shared node roster.
struct YearlyNetworks {
    std::map<int, Network> by_year;
};

/// Edge churn between two consecutive yearly networks.
struct EdgeDiff {
    std::set<EdgeKey> added;     // in curr only
    std::set<EdgeKey> retained;  // in both
    std::set<EdgeKey> dropped;   // in prev only
};

/// Options shared by yearly construction and the method sweep.
struct YearlyOptions {
    bool per_year_normalization = true;  // else: normalize once over the full span
    size_t walk_length = 4;
};

/// Builds one network per year: slice the year, min-max normalize each
/// 12-point sub-series, compute the DTW distance matrix, then construct with
/// the requested method. The node roster is identical across years.
YearlyNetworks yearly_networks(const SeriesSet& set, int first_year, int last_year,
                               const MethodSpec& spec, const YearlyOptions& options = {});

/// Set algebra on the edge sets of two networks over one node roster.
EdgeDiff edge_diff(const Network& prev, const Network& curr);

/// Nodes sorted by degree descending, ties by label ascending. Everything
/// tied with the count-th degree is included, so the cut is never arbitrary.
std::vector<std::pair<Node, size_t>> top_degree_nodes(const Network& net, size_t count);

/// One sweep candidate: method, parameter, and the mean yearly metrics.
/// Mean modularity is absent when any year's network was edgeless.
struct MethodReportRow {
    std::string method;
    std::optional<double> parameter;
    std::optional<double> mean_modularity;
    double mean_density = 0.0;
};

struct MethodReport {
    std::vector<MethodReportRow> rows;
};

/// Evaluates every candidate over the year range: k-NN for each k, eps-NN
/// for each eps, the weighted construction, and significant links at alpha.
MethodReport method_selection_report(const SeriesSet& set, int first_year, int last_year,
                                     const std::vector<size_t>& k_values,
                                     const std::vector<double>& eps_values, double alpha,
                                     const YearlyOptions& options = {});

}  // namespace fishnet

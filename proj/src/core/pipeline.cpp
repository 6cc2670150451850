#include "core/pipeline.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace fishnet {

namespace {

constexpr size_t kTopDegreeRank = 3;

// Re-throws with the failing stage's name, keeping the exception type so the
// CLI can still map it to the right exit code.
template <typename Fn>
auto stage(const char* name, Fn&& fn) {
    try {
        return fn();
    } catch (const ValidationError& e) {
        throw ValidationError(std::string("stage ") + name + ": " + e.what());
    } catch (const IoError& e) {
        throw IoError(std::string("stage ") + name + ": " + e.what());
    }
}

std::filesystem::path ensure_output_dir(const PipelineConfig& config) {
    const std::filesystem::path dir = config.output_dir.empty() ? "." : config.output_dir;
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) {
        throw IoError("cannot create output directory '" + dir.string() + "': " + ec.message());
    }
    return dir;
}

std::optional<double> method_parameter(const MethodSpec& spec) {
    switch (spec.method) {
        case MethodSpec::Method::Knn: return static_cast<double>(spec.k);
        case MethodSpec::Method::Eps: return spec.eps;
        case MethodSpec::Method::Weighted: return std::nullopt;
        case MethodSpec::Method::Significant: return spec.alpha;
    }
    return std::nullopt;
}

}  // namespace

SeriesSet prepare_series(const PipelineConfig& config, DropLog* drops) {
    const auto records =
        stage("parse", [&] { return parse_landings_csv(config.input_path); });
    return prepare_series(records, config, drops);
}

SeriesSet prepare_series(std::span<const LandingRecord> records, const PipelineConfig& config,
                         DropLog* drops) {
    DropLog local;
    const auto kept = stage("exclusions", [&] {
        return apply_exclusions(records, config.exclusions, config.window(), &local);
    });
    if (drops) {
        *drops = local;
    } else if (local.total() > 0) {
        std::cerr << "fishnet: dropped " << local.total() << " record(s): outside window "
                  << local.outside_window << ", harbor " << local.excluded_harbor
                  << ", classification " << local.excluded_classification << ", metier "
                  << local.excluded_metier << "\n";
    }

    std::vector<SeriesSet> sets;
    for (const Kind kind : {Kind::Island, Kind::Metier, Kind::Classification}) {
        SeriesSet set = stage("aggregate", [&] {
            return aggregate_monthly(kept, kind, config.window());
        });
        if (config.impute) {
            set = stage("impute", [&] {
                return impute_gap(set, config.impute->gap, config.impute->donor,
                                  config.impute->basis);
            });
        }
        sets.push_back(std::move(set));
    }

    SeriesSet merged = stage("merge", [&] { return merge_sets(sets); });
    if (config.zero_fill) {
        merged = zero_fill(merged);
    } else {
        stage("completeness", [&] { require_complete(merged); return 0; });
    }
    return merged;
}

AnalysisReport analyze_networks(const YearlyNetworks& networks, const PipelineConfig& config) {
    if (networks.by_year.empty()) {
        throw ValidationError("analyze_networks: no yearly networks");
    }
    AnalysisReport report;
    report.method = std::string(MethodSpec::method_name(config.method.method));
    report.parameter = method_parameter(config.method);
    report.nodes = networks.by_year.begin()->second.nodes();

    for (const auto& [year, net] : networks.by_year) {
        YearAnalysis entry;
        entry.year = year;
        entry.density = density(net);
        const Partition part = detect_communities(net, config.walk_length);
        entry.modularity = part.modularity;
        entry.community_count = part.community_count();
        for (size_t i = 0; i < net.node_count(); ++i) {
            NodeYearMetrics metrics;
            metrics.node = net.node(i);
            metrics.degree = net.degree(i);
            metrics.local_clustering = local_clustering(net, net.node(i).label);
            metrics.community = part.assignment[i];
            entry.nodes.push_back(std::move(metrics));
        }
        entry.top_degree = top_degree_nodes(net, kTopDegreeRank);
        report.years.push_back(std::move(entry));
    }

    for (size_t i = 1; i < report.years.size(); ++i) {
        const int prev_year = report.years[i - 1].year;
        const int curr_year = report.years[i].year;
        YearDiff diff;
        diff.from_year = prev_year;
        diff.to_year = curr_year;
        diff.diff = edge_diff(networks.by_year.at(prev_year), networks.by_year.at(curr_year));
        report.diffs.push_back(std::move(diff));
    }
    return report;
}

namespace {

// Minimal JSON emitter: the report schema is fixed, keys are written in a
// fixed order, and every real is rendered with 9 decimals so byte-identical
// reruns are a testable contract.
class JsonWriter {
public:
    explicit JsonWriter(std::ostream& out) : out_(out) {}

    void string(const std::string& value) {
        out_ << '"';
        for (const char c : value) {
            switch (c) {
                case '"': out_ << "\\\""; break;
                case '\\': out_ << "\\\\"; break;
                case '\n': out_ << "\\n"; break;
                case '\r': out_ << "\\r"; break;
                case '\t': out_ << "\\t"; break;
                default:
                    if (static_cast<unsigned char>(c) < 0x20) {
                        char buf[8];
                        std::snprintf(buf, sizeof(buf), "\\u%04x", c);
                        out_ << buf;
                    } else {
                        out_ << c;
                    }
            }
        }
        out_ << '"';
    }

    void real(double value) { out_ << format_fixed9(value); }
    void real_or_null(const std::optional<double>& value) {
        if (value) {
            real(*value);
        } else {
            out_ << "null";
        }
    }
    void integer(long long value) { out_ << value; }
    void raw(const char* text) { out_ << text; }

    void key(const char* name) {
        out_ << '"' << name << "\":";
    }

private:
    std::ostream& out_;
};

void write_edge_array(JsonWriter& json, const std::set<EdgeKey>& edges) {
    json.raw("[");
    bool first = true;
    for (const auto& edge : edges) {
        if (!first) json.raw(",");
        first = false;
        json.raw("[");
        json.string(edge.a);
        json.raw(",");
        json.string(edge.b);
        json.raw("]");
    }
    json.raw("]");
}

void write_sweep_rows(JsonWriter& json, const MethodReport& sweep) {
    json.raw("[");
    for (size_t i = 0; i < sweep.rows.size(); ++i) {
        const auto& row = sweep.rows[i];
        if (i) json.raw(",");
        json.raw("{");
        json.key("method");
        json.string(row.method);
        json.raw(",");
        json.key("parameter");
        json.real_or_null(row.parameter);
        json.raw(",");
        json.key("mean_modularity");
        json.real_or_null(row.mean_modularity);
        json.raw(",");
        json.key("mean_density");
        json.real(row.mean_density);
        json.raw("}");
    }
    json.raw("]");
}

}  // namespace

std::string report_to_json(const AnalysisReport& report) {
    std::ostringstream out;
    JsonWriter json(out);

    json.raw("{");
    json.key("method");
    json.string(report.method);
    json.raw(",");
    json.key("parameter");
    json.real_or_null(report.parameter);
    json.raw(",");

    json.key("years");
    json.raw("[");
    for (size_t i = 0; i < report.years.size(); ++i) {
        if (i) json.raw(",");
        json.integer(report.years[i].year);
    }
    json.raw("],");

    json.key("nodes");
    json.raw("[");
    for (size_t i = 0; i < report.nodes.size(); ++i) {
        if (i) json.raw(",");
        json.raw("{");
        json.key("label");
        json.string(report.nodes[i].label);
        json.raw(",");
        json.key("kind");
        json.string(std::string(kind_name(report.nodes[i].kind)));
        json.raw("}");
    }
    json.raw("],");

    json.key("per_year");
    json.raw("[");
    for (size_t y = 0; y < report.years.size(); ++y) {
        const YearAnalysis& year = report.years[y];
        if (y) json.raw(",");
        json.raw("{");
        json.key("year");
        json.integer(year.year);
        json.raw(",");
        json.key("density");
        json.real(year.density);
        json.raw(",");
        json.key("modularity");
        json.real_or_null(year.modularity);
        json.raw(",");
        json.key("community_count");
        json.integer(year.community_count);
        json.raw(",");
        json.key("nodes");
        json.raw("[");
        for (size_t i = 0; i < year.nodes.size(); ++i) {
            const NodeYearMetrics& node = year.nodes[i];
            if (i) json.raw(",");
            json.raw("{");
            json.key("label");
            json.string(node.node.label);
            json.raw(",");
            json.key("degree");
            json.integer(static_cast<long long>(node.degree));
            json.raw(",");
            json.key("local_clustering");
            json.real(node.local_clustering);
            json.raw(",");
            json.key("community");
            json.integer(node.community);
            json.raw("}");
        }
        json.raw("],");
        json.key("top_degree");
        json.raw("[");
        for (size_t i = 0; i < year.top_degree.size(); ++i) {
            if (i) json.raw(",");
            json.raw("{");
            json.key("label");
            json.string(year.top_degree[i].first.label);
            json.raw(",");
            json.key("degree");
            json.integer(static_cast<long long>(year.top_degree[i].second));
            json.raw("}");
        }
        json.raw("]}");
    }
    json.raw("],");

    json.key("diffs");
    json.raw("[");
    for (size_t d = 0; d < report.diffs.size(); ++d) {
        const YearDiff& diff = report.diffs[d];
        if (d) json.raw(",");
        json.raw("{");
        json.key("from");
        json.integer(diff.from_year);
        json.raw(",");
        json.key("to");
        json.integer(diff.to_year);
        json.raw(",");
        json.key("new");
        write_edge_array(json, diff.diff.added);
        json.raw(",");
        json.key("retained");
        write_edge_array(json, diff.diff.retained);
        json.raw(",");
        json.key("dropped");
        write_edge_array(json, diff.diff.dropped);
        json.raw("}");
    }
    json.raw("],");

    json.key("sweep");
    if (report.sweep) {
        write_sweep_rows(json, *report.sweep);
    } else {
        json.raw("null");
    }
    json.raw("}");
    out << "\n";
    return out.str();
}

void write_method_report_csv(const MethodReport& report, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw IoError("cannot write '" + path + "'");
    }
    out << "method,param,mean_modularity,mean_density\n";
    for (const auto& row : report.rows) {
        out << row.method << ',';
        if (row.parameter) out << format_fixed9(*row.parameter);
        out << ',';
        if (row.mean_modularity) out << format_fixed9(*row.mean_modularity);
        out << ',' << format_fixed9(row.mean_density) << '\n';
    }
    if (!out.flush()) {
        throw IoError("failed writing '" + path + "'");
    }
}

namespace {

YearlyNetworks build_yearly(const SeriesSet& set, const PipelineConfig& config) {
    return stage("build", [&] {
        return yearly_networks(set, config.year_first, config.year_last, config.method,
                               config.yearly_options());
    });
}

// Per-year exports decorated with that year's communities and, from the
// second year on, the churn against the previous year.
void export_networks(const YearlyNetworks& networks, const PipelineConfig& config,
                     const std::filesystem::path& dir) {
    stage("export", [&] {
        const Network* previous = nullptr;
        for (const auto& [year, net] : networks.by_year) {
            const Partition part = detect_communities(net, config.walk_length);
            std::optional<EdgeDiff> diff;
            if (previous) diff = edge_diff(*previous, net);
            for (const auto& format : config.formats) {
                const char* ext = format == "edgelist" ? "csv" : format.c_str();
                const auto path = dir / ("network_" + std::to_string(year) + "." + ext);
                write_network(net, format, path.string(), &part, diff ? &*diff : nullptr);
            }
            previous = &net;
        }
        return 0;
    });
}

}  // namespace

void run_prepare(const PipelineConfig& config) {
    config.validate();
    const auto dir = ensure_output_dir(config);
    const SeriesSet set = prepare_series(config);
    stage("write-series", [&] {
        write_series_csv(set, (dir / "series.csv").string());
        return 0;
    });
}

void run_distances(const PipelineConfig& config) {
    config.validate();
    const auto dir = ensure_output_dir(config);
    const SeriesSet set = prepare_series(config);
    stage("distances", [&] {
        for (int year = config.year_first; year <= config.year_last; ++year) {
            SeriesSet slice = normalize_set(slice_year(set, year));
            const DistanceMatrix matrix = distance_matrix(slice);
            write_distance_csv(matrix,
                               (dir / ("distances_" + std::to_string(year) + ".csv")).string());
        }
        return 0;
    });
}

void run_build(const PipelineConfig& config) {
    config.validate();
    const auto dir = ensure_output_dir(config);
    const SeriesSet set = prepare_series(config);
    const YearlyNetworks networks = build_yearly(set, config);
    export_networks(networks, config, dir);
}

void run_analyze(const PipelineConfig& config) {
    config.validate();
    const auto dir = ensure_output_dir(config);
    const SeriesSet set = prepare_series(config);
    const YearlyNetworks networks = build_yearly(set, config);
    const AnalysisReport report = stage("analyze", [&] {
        return analyze_networks(networks, config);
    });
    stage("write-report", [&] {
        std::ofstream out(dir / "report.json", std::ios::binary);
        if (!out) throw IoError("cannot write report.json");
        out << report_to_json(report);
        if (!out.flush()) throw IoError("failed writing report.json");
        return 0;
    });
}

void run_sweep(const PipelineConfig& config) {
    config.validate();
    const auto dir = ensure_output_dir(config);
    const SeriesSet set = prepare_series(config);
    const MethodReport report = stage("sweep", [&] {
        return method_selection_report(set, config.year_first, config.year_last, config.sweep_k,
                                       config.sweep_eps, config.method.alpha,
                                       config.yearly_options());
    });
    stage("write-sweep", [&] {
        write_method_report_csv(report, (dir / "sweep.csv").string());
        return 0;
    });
}

AnalysisReport run_pipeline(const PipelineConfig& config) {
    config.validate();
    const auto dir = ensure_output_dir(config);

    const SeriesSet set = prepare_series(config);
    stage("write-series", [&] {
        write_series_csv(set, (dir / "series.csv").string());
        return 0;
    });

    const YearlyNetworks networks = build_yearly(set, config);
    export_networks(networks, config, dir);

    AnalysisReport report = stage("analyze", [&] {
        return analyze_networks(networks, config);
    });

    if (config.sweep_in_pipeline) {
        report.sweep = stage("sweep", [&] {
            return method_selection_report(set, config.year_first, config.year_last,
                                           config.sweep_k, config.sweep_eps, config.method.alpha,
                                           config.yearly_options());
        });
        stage("write-sweep", [&] {
            write_method_report_csv(*report.sweep, (dir / "sweep.csv").string());
            return 0;
        });
    }

    stage("write-report", [&] {
        std::ofstream out(dir / "report.json", std::ios::binary);
        if (!out) throw IoError("cannot write report.json");
        out << report_to_json(report);
        if (!out.flush()) throw IoError("failed writing report.json");
        return 0;
    });
    return report;
}

std::string run_summary(const PipelineConfig& config) {
    const auto dir = ensure_output_dir(config);
    const auto records = stage("parse", [&] { return parse_landings_csv(config.input_path); });
    // Summaries describe the raw dataset, so only the study window applies.
    const auto kept = stage("window", [&] {
        return apply_exclusions(records, ExclusionConfig{}, config.window());
    });
    return stage("summary", [&] {
        write_summary_csv(summary_table(kept, Kind::Classification), "classification",
                          (dir / "summary_classifications.csv").string());
        write_summary_csv(summary_table(kept, Kind::Metier), "metier",
                          (dir / "summary_metiers.csv").string());
        return render_summary_text(kept);
    });
}

std::string diff_files_text(const std::string& prev_path, const std::string& curr_path) {
    const Network first = read_edgelist_csv(prev_path);
    const Network second = read_edgelist_csv(curr_path);

    // Rebuild both networks over the union roster so edge_diff sees one node set.
    std::vector<Node> roster;
    {
        std::set<Node> all;
        for (const auto& node : first.nodes()) all.insert(node);
        for (const auto& node : second.nodes()) all.insert(node);
        roster.assign(all.begin(), all.end());
    }
    const Network prev = read_edgelist_csv(prev_path, roster);
    const Network curr = read_edgelist_csv(curr_path, roster);

    const EdgeDiff diff = edge_diff(prev, curr);
    std::ostringstream out;
    const auto render = [&](const char* name, const std::set<EdgeKey>& edges) {
        out << name << " (" << edges.size() << "):\n";
        for (const auto& edge : edges) {
            out << "  " << edge.a << " -- " << edge.b << "\n";
        }
    };
    render("new", diff.added);
    render("retained", diff.retained);
    render("dropped", diff.dropped);
    return out.str();
}

}  // namespace fishnet

#pragma once

#include <span>

#include "core/config.hpp"
#include "core/exports.hpp"
#include "core/synth.hpp"

namespace fishnet {

/// Per-node metrics inside one yearly report entry.
struct NodeYearMetrics {
    Node node;
    size_t degree = 0;
    double local_clustering = 0.0;
    int community = 0;
};

struct YearAnalysis {
    int year = 0;
    double density = 0.0;
    std::optional<double> modularity;  // absent for an edgeless network
    int community_count = 0;
    std::vector<NodeYearMetrics> nodes;
    std::vector<std::pair<Node, size_t>> top_degree;
};

struct YearDiff {
    int from_year = 0;
    int to_year = 0;
    EdgeDiff diff;
};

/// Everything `analyze` and `pipeline` report; serialized by report_to_json
/// with stable key order and fixed 9-decimal numbers (docs/report-schema.md).
struct AnalysisReport {
    std::string method;
    std::optional<double> parameter;
    std::vector<Node> nodes;
    std::vector<YearAnalysis> years;
    std::vector<YearDiff> diffs;
    std::optional<MethodReport> sweep;
};

/// Ingestion through imputation: parse (unless records are given), apply the
/// study window and exclusions, aggregate the three kinds, impute each
/// kind's gap with its own global factor, merge, then zero-fill or fail on
/// leftover missing months.
SeriesSet prepare_series(const PipelineConfig& config, DropLog* drops = nullptr);
SeriesSet prepare_series(std::span<const LandingRecord> records, const PipelineConfig& config,
                         DropLog* drops = nullptr);

/// Metrics, communities, per-pair churn and top-degree lists for the built
/// yearly networks. Top-degree lists include everything tied at rank 3.
AnalysisReport analyze_networks(const YearlyNetworks& networks, const PipelineConfig& config);

std::string report_to_json(const AnalysisReport& report);

void write_method_report_csv(const MethodReport& report, const std::string& path);

/// Stage runners behind the CLI subcommands; each writes its files under
/// config.output_dir. Failures carry the stage name.
void run_prepare(const PipelineConfig& config);
void run_distances(const PipelineConfig& config);
void run_build(const PipelineConfig& config);
void run_analyze(const PipelineConfig& config);
void run_sweep(const PipelineConfig& config);
AnalysisReport run_pipeline(const PipelineConfig& config);
std::string run_summary(const PipelineConfig& config);

/// Churn between two exported edge lists; the shared roster is the union of
/// both files' endpoint labels, so isolated nodes cannot disagree.
std::string diff_files_text(const std::string& prev_path, const std::string& curr_path);

}  // namespace fishnet

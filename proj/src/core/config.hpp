#pragma once

#include <optional>

#include "core/landings.hpp"
#include "core/temporal.hpp"
#include "core/tseries.hpp"

namespace fishnet {

/// Donor-copy-with-scaling imputation: fill `gap` from `donor`, the factor
/// taken from the `basis` months of both years.
struct ImputeSpec {
    MonthRange gap{{2014, 1}, {2014, 3}};
    MonthRange donor{{2013, 1}, {2013, 3}};
    BasisMonths basis{4, 12};
};

/// Everything a run needs, readable from a key = value config file with
/// per-key command-line overrides. See docs/config.md for the key list.
struct PipelineConfig {
    std::string input_path;
    std::string output_dir = "out";

    YearMonth window_start{2010, 1};
    YearMonth window_end{2017, 12};

    ExclusionConfig exclusions{
        {"Angra do Heroísmo", "Povoação"},
        {"Crustaceans", "Other Spp"},
        {"FPO-CRU", "NEI"},
    };

    std::optional<ImputeSpec> impute = ImputeSpec{};
    bool zero_fill = false;

    MethodSpec method;
    int year_first = 2010;
    int year_last = 2017;

    size_t walk_length = 4;
    bool per_year_normalization = true;

    std::vector<std::string> formats{"edgelist", "graphml", "dot"};

    std::vector<size_t> sweep_k{2, 3, 5, 7, 10};
    std::vector<double> sweep_eps{0.3, 0.5, 0.7, 0.9};
    bool sweep_in_pipeline = false;

    uint64_t seed = 42;

    YearlyOptions yearly_options() const { return {per_year_normalization, walk_length}; }
    MonthRange window() const { return {window_start, window_end}; }

    /// Errors unless the year range sits inside the study window, parameters
    /// fit the chosen method, and formats are known.
    void validate() const;
};

/// Parses `key = value` lines; '#' starts a comment, blank lines are fine.
PipelineConfig load_config(const std::string& path);

/// Applies one key = value assignment (also used for CLI overrides).
void config_set(PipelineConfig& config, const std::string& key, const std::string& value);

/// Current value of a key, rendered the way config_set accepts it.
std::string config_get(const PipelineConfig& config, const std::string& key);

}  // namespace fishnet

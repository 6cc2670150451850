#pragma once

#include <iosfwd>
#include <map>
#include <span>
#include <vector>

#include "core/common.hpp"

namespace fishnet {

struct Date {
    int year = 0;
    int month = 1;
    int day = 1;

    auto operator<=>(const Date&) const = default;

    bool valid() const;
    YearMonth year_month() const { return {year, month}; }

    /// Parses ISO-8601 "YYYY-MM-DD".
    static Date parse(std::string_view text);
    std::string str() const;
};

/// One recorded landing. Weights are kilograms and never negative.
struct LandingRecord {
    std::string id;
    Date date;
    std::string island;
    std::string harbor;
    std::string classification;
    std::string metier;
    double weight_kg = 0.0;
};

/// Input schema, fixed: id,date,island,harbor,classification,metier,weight_kg.
/// Extra columns are ignored with a warning on stderr; a missing column is an
/// error naming it. Bad dates and negative weights are errors citing the line.
std::vector<LandingRecord> parse_landings_csv(const std::string& path);
std::vector<LandingRecord> parse_landings_csv(std::istream& in, const std::string& source_name);

void write_landings_csv(std::span<const LandingRecord> records, const std::string& path);

/// Exclusion lists plus the study window, applied record-wise.
struct ExclusionConfig {
    std::vector<std::string> harbors;
    std::vector<std::string> classifications;
    std::vector<std::string> metiers;
};

/// Per-reason counts of records dropped by apply_exclusions.
struct DropLog {
    size_t outside_window = 0;
    size_t excluded_harbor = 0;
    size_t excluded_classification = 0;
    size_t excluded_metier = 0;

    size_t total() const {
        return outside_window + excluded_harbor + excluded_classification + excluded_metier;
    }
};

/// Drops every record outside the study window or matching an exclusion
/// list. An empty result is permitted.
std::vector<LandingRecord> apply_exclusions(std::span<const LandingRecord> records,
                                            const ExclusionConfig& exclusions, MonthRange window,
                                            DropLog* log = nullptr);

struct SummaryRow {
    std::string label;
    size_t landings = 0;
    double total_weight = 0.0;
};

/// Grouped landings counts and weight sums, sorted by total weight
/// descending (ties by label). Errors on an empty input.
std::vector<SummaryRow> summary_table(std::span<const LandingRecord> records, Kind kind);

std::string render_summary_text(std::span<const LandingRecord> records);
void write_summary_csv(const std::vector<SummaryRow>& rows, const std::string& header_label,
                       const std::string& path);

}  // namespace fishnet

#pragma once

#include <optional>
#include <span>
#include <vector>

#include "core/common.hpp"
#include "core/landings.hpp"

namespace fishnet {

/// One labeled monthly series. A NaN value marks a month with no data;
/// downstream stages refuse to run until those are imputed or zero-filled.
struct TimeSeries {
    std::string label;
    Kind kind = Kind::Island;
    YearMonth start;
    std::vector<double> values;

    int month_count() const { return static_cast<int>(values.size()); }
    YearMonth month_at(int index) const { return start.plus_months(index); }
    bool has_missing() const;

    /// True once every value sits in [0, 1].
    bool is_normalized() const;
};

/// A collection of series sharing one month grid, unique by (label, kind).
class SeriesSet {
public:
    SeriesSet(YearMonth start, int months);

    void add(TimeSeries series);

    YearMonth start() const { return start_; }
    int month_count() const { return months_; }
    MonthRange span() const { return {start_, start_.plus_months(months_ - 1)}; }
    size_t size() const { return series_.size(); }
    bool empty() const { return series_.empty(); }

    const std::vector<TimeSeries>& series() const { return series_; }
    const TimeSeries& at(size_t index) const { return series_.at(index); }
    const TimeSeries* find(std::string_view label, Kind kind) const;

    std::vector<Node> nodes() const;

private:
    YearMonth start_;
    int months_ = 0;
    std::vector<TimeSeries> series_;
};

/// Builds one series per distinct label of `kind`: each monthly value is the
/// arithmetic mean weight of that label's landings in the month. Months with
/// no landings are marked missing, not zero.
SeriesSet aggregate_monthly(std::span<const LandingRecord> records, Kind kind, MonthRange window);

/// Month-of-year range (1..12, inclusive) used as the imputation basis in
/// both the donor year and the gap year.
struct BasisMonths {
    int first = 1;
    int last = 12;
};

/// Fills `gap` in every series with the donor values scaled by one global
/// factor: (basis total in the gap year) / (basis total in the donor year),
/// totals taken across all series in the set. Values outside the gap are
/// untouched. Missing donor months stay missing in the gap.
SeriesSet impute_gap(const SeriesSet& set, MonthRange gap, MonthRange donor, BasisMonths basis);

/// Min-max rescaling to [0, 1]; a constant series maps to all zeros.
TimeSeries normalize(const TimeSeries& series);

/// Normalizes every member series independently.
SeriesSet normalize_set(const SeriesSet& set);

/// The January..December sub-series of every member.
SeriesSet slice_year(const SeriesSet& set, int year);

/// Replaces every missing value with zero (opt-in; see PipelineConfig).
SeriesSet zero_fill(const SeriesSet& set);

/// Errors if any series still has a missing month, naming the offenders.
void require_complete(const SeriesSet& set);

/// Concatenates sets sharing one month grid; labels must stay globally
/// unique so that node labels are unambiguous in every export.
SeriesSet merge_sets(const std::vector<SeriesSet>& sets);

}  // namespace fishnet

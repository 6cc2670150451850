#include "core/tseries.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <sstream>

namespace fishnet {

bool TimeSeries::has_missing() const {
    return std::any_of(values.begin(), values.end(), [](double v) { return std::isnan(v); });
}

bool TimeSeries::is_normalized() const {
    return std::all_of(values.begin(), values.end(),
                       [](double v) { return v >= 0.0 && v <= 1.0; });
}

SeriesSet::SeriesSet(YearMonth start, int months) : start_(start), months_(months) {
    if (months <= 0) {
        throw ValidationError("SeriesSet: month span must be positive");
    }
}

void SeriesSet::add(TimeSeries series) {
    if (series.start != start_ || series.month_count() != months_) {
        throw ValidationError("series '" + series.label + "' does not share the set's month grid (" +
                              start_.str() + ", " + std::to_string(months_) + " months)");
    }
    if (find(series.label, series.kind) != nullptr) {
        throw ValidationError("duplicate series (" + series.label + ", " +
                              std::string(kind_name(series.kind)) + ")");
    }
    series_.push_back(std::move(series));
}

const TimeSeries* SeriesSet::find(std::string_view label, Kind kind) const {
    for (const auto& s : series_) {
        if (s.kind == kind && s.label == label) return &s;
    }
    return nullptr;
}

std::vector<Node> SeriesSet::nodes() const {
    std::vector<Node> out;
    out.reserve(series_.size());
    for (const auto& s : series_) out.push_back({s.label, s.kind});
    return out;
}

SeriesSet aggregate_monthly(std::span<const LandingRecord> records, Kind kind, MonthRange window) {
    if (records.empty()) {
        throw ValidationError("aggregate_monthly: no records");
    }
    const int months = window.length();

    // (label, month index) -> (sum, count); std::map keeps labels sorted so
    // series order is deterministic.
    std::map<std::string, std::vector<std::pair<double, size_t>>> sums;
    for (const auto& rec : records) {
        const YearMonth ym = rec.date.year_month();
        if (!window.contains(ym)) {
            throw ValidationError("record '" + rec.id + "' dated " + rec.date.str() +
                                  " falls outside the study window " + window.str());
        }
        const std::string& label = kind == Kind::Classification ? rec.classification
                                 : kind == Kind::Metier         ? rec.metier
                                                                : rec.island;
        auto& cells = sums[label];
        if (cells.empty()) cells.resize(months, {0.0, 0});
        auto& [sum, count] = cells[ym.index_from(window.first)];
        sum += rec.weight_kg;
        count += 1;
    }

    SeriesSet set(window.first, months);
    for (const auto& [label, cells] : sums) {
        TimeSeries series;
        series.label = label;
        series.kind = kind;
        series.start = window.first;
        series.values.reserve(months);
        for (const auto& [sum, count] : cells) {
            series.values.push_back(count > 0 ? sum / static_cast<double>(count)
                                              : std::nan(""));
        }
        set.add(std::move(series));
    }
    return set;
}

namespace {

// Sums the basis months of `year` across every series, missing months
// contributing nothing.
double basis_total(const SeriesSet& set, int year, BasisMonths basis) {
    double total = 0.0;
    for (const auto& series : set.series()) {
        for (int month = basis.first; month <= basis.last; ++month) {
            const int idx = YearMonth{year, month}.index_from(set.start());
            if (idx < 0 || idx >= set.month_count()) {
                throw ValidationError("imputation basis month " + YearMonth{year, month}.str() +
                                      " lies outside the series span");
            }
            const double v = series.values[idx];
            if (!std::isnan(v)) total += v;
        }
    }
    return total;
}

}  // namespace

SeriesSet impute_gap(const SeriesSet& set, MonthRange gap, MonthRange donor, BasisMonths basis) {
    const MonthRange span = set.span();
    if (!span.contains(gap.first) || !span.contains(gap.last) || !span.contains(donor.first) ||
        !span.contains(donor.last)) {
        throw ValidationError("imputation ranges must lie inside the series span " + span.str());
    }
    if (gap.length() != donor.length()) {
        throw ValidationError("imputation gap " + gap.str() + " and donor " + donor.str() +
                              " differ in length");
    }
    if (gap.overlaps(donor)) {
        throw ValidationError("imputation gap " + gap.str() + " overlaps donor " + donor.str());
    }
    if (basis.first < 1 || basis.last > 12 || basis.last < basis.first) {
        throw ValidationError("imputation basis months must satisfy 1 <= first <= last <= 12");
    }
    if (donor.first.year != donor.last.year || gap.first.year != gap.last.year) {
        throw ValidationError("imputation gap and donor must each stay within one calendar year");
    }

    const double donor_total = basis_total(set, donor.first.year, basis);
    const double gap_total = basis_total(set, gap.first.year, basis);
    if (donor_total == 0.0) {
        throw ValidationError("imputation factor undefined: donor-year basis total is zero");
    }
    const double factor = gap_total / donor_total;

    SeriesSet out(set.start(), set.month_count());
    for (const auto& series : set.series()) {
        TimeSeries copy = series;
        for (int offset = 0; offset < gap.length(); ++offset) {
            const int gap_idx = gap.first.index_from(set.start()) + offset;
            const int donor_idx = donor.first.index_from(set.start()) + offset;
            copy.values[gap_idx] = series.values[donor_idx] * factor;
        }
        out.add(std::move(copy));
    }
    return out;
}

TimeSeries normalize(const TimeSeries& series) {
    if (series.values.empty()) {
        throw ValidationError("normalize: series '" + series.label + "' is empty");
    }
    if (series.has_missing()) {
        throw ValidationError("normalize: series '" + series.label +
                              "' has missing months; impute or zero-fill them first");
    }
    const auto [min_it, max_it] = std::minmax_element(series.values.begin(), series.values.end());
    const double lo = *min_it, hi = *max_it;

    TimeSeries out = series;
    if (hi == lo) {
        std::fill(out.values.begin(), out.values.end(), 0.0);  // constant series
        return out;
    }
    for (double& v : out.values) v = (v - lo) / (hi - lo);
    return out;
}

SeriesSet normalize_set(const SeriesSet& set) {
    SeriesSet out(set.start(), set.month_count());
    for (const auto& series : set.series()) out.add(normalize(series));
    return out;
}

SeriesSet slice_year(const SeriesSet& set, int year) {
    const YearMonth january{year, 1};
    const YearMonth december{year, 12};
    const MonthRange span = set.span();
    if (!span.contains(january) || !span.contains(december)) {
        throw ValidationError("year " + std::to_string(year) + " is not fully inside the span " +
                              span.str());
    }
    const int offset = january.index_from(set.start());
    SeriesSet out(january, 12);
    for (const auto& series : set.series()) {
        TimeSeries slice;
        slice.label = series.label;
        slice.kind = series.kind;
        slice.start = january;
        slice.values.assign(series.values.begin() + offset, series.values.begin() + offset + 12);
        out.add(std::move(slice));
    }
    return out;
}

SeriesSet zero_fill(const SeriesSet& set) {
    SeriesSet out(set.start(), set.month_count());
    for (const auto& series : set.series()) {
        TimeSeries copy = series;
        for (double& v : copy.values) {
            if (std::isnan(v)) v = 0.0;
        }
        out.add(std::move(copy));
    }
    return out;
}

void require_complete(const SeriesSet& set) {
    std::ostringstream missing;
    int shown = 0;
    for (const auto& series : set.series()) {
        for (int i = 0; i < series.month_count(); ++i) {
            if (std::isnan(series.values[i])) {
                if (shown < 8) {
                    missing << (shown ? ", " : "") << series.label << '@'
                            << series.month_at(i).str();
                }
                ++shown;
            }
        }
    }
    if (shown > 0) {
        throw ValidationError(
            "series have " + std::to_string(shown) + " missing month(s): " + missing.str() +
            (shown > 8 ? ", ..." : "") +
            " (configure imputation to cover them or enable zero_fill)");
    }
}

SeriesSet merge_sets(const std::vector<SeriesSet>& sets) {
    if (sets.empty()) {
        throw ValidationError("merge_sets: nothing to merge");
    }
    SeriesSet out(sets.front().start(), sets.front().month_count());
    std::set<std::string> labels;
    for (const auto& set : sets) {
        for (const auto& series : set.series()) {
            if (!labels.insert(series.label).second) {
                throw ValidationError("label '" + series.label +
                                      "' appears under two kinds; labels must be globally unique");
            }
            out.add(series);
        }
    }
    return out;
}

}  // namespace fishnet

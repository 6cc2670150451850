#include "core/landings.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <unordered_set>

namespace fishnet {

namespace {

constexpr int kDaysInMonth[] = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};

bool is_leap(int year) {
    return (year % 4 == 0 && year % 100 != 0) || year % 400 == 0;
}

}  // namespace

bool Date::valid() const {
    if (month < 1 || month > 12 || day < 1) return false;
    int days = kDaysInMonth[month - 1];
    if (month == 2 && is_leap(year)) days = 29;
    return day <= days;
}

Date Date::parse(std::string_view text) {
    const std::string s(text);
    int y = 0, m = 0, d = 0;
    char sep1 = 0, sep2 = 0;
    char tail = 0;
    const int got = std::sscanf(s.c_str(), "%d%c%d%c%d%c", &y, &sep1, &m, &sep2, &d, &tail);
    if (got != 5 || sep1 != '-' || sep2 != '-') {
        throw ValidationError("invalid date '" + s + "' (expected YYYY-MM-DD)");
    }
    Date date{y, m, d};
    if (!date.valid()) {
        throw ValidationError("invalid calendar date '" + s + "'");
    }
    return date;
}

std::string Date::str() const {
    char buf[16];
    std::snprintf(buf, sizeof(buf), "%04d-%02d-%02d", year, month, day);
    return buf;
}

namespace {

const std::vector<std::string> kSchema = {"id",             "date",   "island", "harbor",
                                          "classification", "metier", "weight_kg"};

}  // namespace

std::vector<LandingRecord> parse_landings_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open landings file '" + path + "'");
    }
    return parse_landings_csv(in, path);
}

std::vector<LandingRecord> parse_landings_csv(std::istream& in, const std::string& source_name) {
    std::string line;
    if (!std::getline(in, line)) {
        throw ValidationError(source_name + ": empty file, expected a header row");
    }
    const auto header = split_csv(line);

    // Map each schema column to its position; extra columns only warn.
    std::vector<int> column(kSchema.size(), -1);
    for (size_t i = 0; i < header.size(); ++i) {
        const std::string name = trim(header[i]);
        const auto it = std::find(kSchema.begin(), kSchema.end(), name);
        if (it == kSchema.end()) {
            std::cerr << source_name << ": warning: ignoring unknown column '" << name << "'\n";
        } else {
            column[it - kSchema.begin()] = static_cast<int>(i);
        }
    }
    for (size_t i = 0; i < kSchema.size(); ++i) {
        if (column[i] < 0) {
            throw ValidationError(source_name + ": missing required column '" + kSchema[i] + "'");
        }
    }

    std::vector<LandingRecord> records;
    size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (trim(line).empty()) continue;
        const auto fields = split_csv(line);
        if (fields.size() < header.size()) {
            throw ValidationError(source_name + ":" + std::to_string(line_no) +
                                  ": expected " + std::to_string(header.size()) +
                                  " fields, found " + std::to_string(fields.size()));
        }
        auto field = [&](size_t schema_idx) { return trim(fields[column[schema_idx]]); };

        LandingRecord rec;
        rec.id = field(0);
        try {
            rec.date = Date::parse(field(1));
        } catch (const ValidationError& e) {
            throw ValidationError(source_name + ":" + std::to_string(line_no) + ": " + e.what());
        }
        rec.island = field(2);
        rec.harbor = field(3);
        rec.classification = field(4);
        rec.metier = field(5);

        const std::string weight_text = field(6);
        char* end = nullptr;
        rec.weight_kg = std::strtod(weight_text.c_str(), &end);
        if (end == weight_text.c_str() || *end != '\0') {
            throw ValidationError(source_name + ":" + std::to_string(line_no) +
                                  ": unparsable weight '" + weight_text + "'");
        }
        if (rec.weight_kg < 0) {
            throw ValidationError(source_name + ":" + std::to_string(line_no) +
                                  ": negative weight " + weight_text);
        }
        records.push_back(std::move(rec));
    }
    return records;
}

void write_landings_csv(std::span<const LandingRecord> records, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw IoError("cannot write landings file '" + path + "'");
    }
    out << "id,date,island,harbor,classification,metier,weight_kg\n";
    char weight[32];
    for (const auto& rec : records) {
        std::snprintf(weight, sizeof(weight), "%.2f", rec.weight_kg);
        out << rec.id << ',' << rec.date.str() << ',' << rec.island << ',' << rec.harbor << ','
            << rec.classification << ',' << rec.metier << ',' << weight << '\n';
    }
    if (!out.flush()) {
        throw IoError("failed writing '" + path + "'");
    }
}

std::vector<LandingRecord> apply_exclusions(std::span<const LandingRecord> records,
                                            const ExclusionConfig& exclusions, MonthRange window,
                                            DropLog* log) {
    const std::unordered_set<std::string> harbors(exclusions.harbors.begin(),
                                                  exclusions.harbors.end());
    const std::unordered_set<std::string> classifications(exclusions.classifications.begin(),
                                                          exclusions.classifications.end());
    const std::unordered_set<std::string> metiers(exclusions.metiers.begin(),
                                                  exclusions.metiers.end());

    DropLog local;
    std::vector<LandingRecord> kept;
    kept.reserve(records.size());
    for (const auto& rec : records) {
        if (!window.contains(rec.date.year_month())) {
            ++local.outside_window;
        } else if (harbors.count(rec.harbor)) {
            ++local.excluded_harbor;
        } else if (classifications.count(rec.classification)) {
            ++local.excluded_classification;
        } else if (metiers.count(rec.metier)) {
            ++local.excluded_metier;
        } else {
            kept.push_back(rec);
        }
    }
    if (log) *log = local;
    return kept;
}

std::vector<SummaryRow> summary_table(std::span<const LandingRecord> records, Kind kind) {
    if (records.empty()) {
        throw ValidationError("summary_table: no records");
    }
    std::map<std::string, SummaryRow> groups;
    for (const auto& rec : records) {
        const std::string& label = kind == Kind::Classification ? rec.classification
                                 : kind == Kind::Metier         ? rec.metier
                                                                : rec.island;
        auto& row = groups[label];
        row.label = label;
        row.landings += 1;
        row.total_weight += rec.weight_kg;
    }
    std::vector<SummaryRow> rows;
    rows.reserve(groups.size());
    for (auto& [label, row] : groups) rows.push_back(std::move(row));
    std::sort(rows.begin(), rows.end(), [](const SummaryRow& a, const SummaryRow& b) {
        if (a.total_weight != b.total_weight) return a.total_weight > b.total_weight;
        return a.label < b.label;
    });
    return rows;
}

std::string render_summary_text(std::span<const LandingRecord> records) {
    std::ostringstream out;
    const auto render = [&](const char* title, Kind kind) {
        const auto rows = summary_table(records, kind);
        size_t width = 14;
        for (const auto& row : rows) width = std::max(width, row.label.size());
        out << title << "\n";
        for (const auto& row : rows) {
            out << "  " << row.label << std::string(width - row.label.size() + 2, ' ')
                << row.landings << " landings  " << format_fixed9(row.total_weight) << " kg\n";
        }
    };
    render("Classifications", Kind::Classification);
    out << "\n";
    render("Metiers", Kind::Metier);
    return out.str();
}

void write_summary_csv(const std::vector<SummaryRow>& rows, const std::string& header_label,
                       const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw IoError("cannot write summary file '" + path + "'");
    }
    out << header_label << ",landings,total_weight_kg\n";
    for (const auto& row : rows) {
        out << row.label << ',' << row.landings << ',' << format_fixed9(row.total_weight) << '\n';
    }
    if (!out.flush()) {
        throw IoError("failed writing '" + path + "'");
    }
}

}  // namespace fishnet

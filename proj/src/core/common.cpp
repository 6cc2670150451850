#include "core/common.hpp"

#include <cmath>
#include <cstdio>

namespace fishnet {

std::string_view kind_name(Kind kind) {
    switch (kind) {
        case Kind::Island: return "island";
        case Kind::Metier: return "metier";
        case Kind::Classification: return "classification";
    }
    throw InternalError("kind_name: unhandled kind value");
}

Kind kind_from_name(std::string_view name) {
    if (name == "island") return Kind::Island;
    if (name == "metier") return Kind::Metier;
    if (name == "classification") return Kind::Classification;
    throw ValidationError("unknown kind '" + std::string(name) +
                          "' (expected island, metier or classification)");
}

YearMonth YearMonth::plus_months(int n) const {
    int total = year * 12 + (month - 1) + n;
    YearMonth out;
    out.year = total / 12;
    out.month = total % 12 + 1;
    if (out.month <= 0) {  // flooring for negative totals
        out.month += 12;
        --out.year;
    }
    return out;
}

YearMonth YearMonth::parse(std::string_view text) {
    int y = 0, m = 0;
    char dash = 0;
    const std::string s(text);
    if (std::sscanf(s.c_str(), "%d%c%d", &y, &dash, &m) != 3 || dash != '-' || m < 1 || m > 12) {
        throw ValidationError("invalid month '" + s + "' (expected YYYY-MM)");
    }
    return YearMonth{y, m};
}

std::string YearMonth::str() const {
    char buf[16];
    std::snprintf(buf, sizeof(buf), "%04d-%02d", year, month);
    return buf;
}

MonthRange MonthRange::parse(std::string_view text) {
    const auto pos = text.find("..");
    if (pos == std::string_view::npos) {
        throw ValidationError("invalid month range '" + std::string(text) +
                              "' (expected YYYY-MM..YYYY-MM)");
    }
    MonthRange range{YearMonth::parse(text.substr(0, pos)), YearMonth::parse(text.substr(pos + 2))};
    if (range.last < range.first) {
        throw ValidationError("month range '" + std::string(text) + "' ends before it starts");
    }
    return range;
}

std::string MonthRange::str() const {
    return first.str() + ".." + last.str();
}

std::string format_fixed9(double value) {
    if (std::abs(value) < 5e-10) value = 0.0;  // never print "-0.000000000"
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.9f", value);
    return buf;
}

std::string trim(std::string_view text) {
    size_t begin = 0, end = text.size();
    while (begin < end && std::isspace(static_cast<unsigned char>(text[begin]))) ++begin;
    while (end > begin && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;
    return std::string(text.substr(begin, end - begin));
}

std::vector<std::string> split(std::string_view text, char sep) {
    std::vector<std::string> out;
    size_t start = 0;
    while (true) {
        const auto pos = text.find(sep, start);
        if (pos == std::string_view::npos) {
            out.emplace_back(text.substr(start));
            break;
        }
        out.emplace_back(text.substr(start, pos - start));
        start = pos + 1;
    }
    return out;
}

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    bool quoted = false;
    for (size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    field += '"';
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                field += c;
            }
        } else if (c == '"' && field.empty()) {
            quoted = true;
        } else if (c == ',') {
            fields.push_back(field);
            field.clear();
        } else if (c != '\r') {
            field += c;
        }
    }
    fields.push_back(field);
    return fields;
}

}  // namespace fishnet

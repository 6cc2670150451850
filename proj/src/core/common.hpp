#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace fishnet {

/// Rejected input: bad arguments, malformed data, violated preconditions.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Filesystem trouble: missing files, unwritable paths.
class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

/// A broken internal invariant. Reaching this is a bug, not a user error.
class InternalError : public std::logic_error {
public:
    explicit InternalError(const std::string& msg) : std::logic_error(msg) {}
};

enum class Kind {
    Island,
    Metier,
    Classification,
};

std::string_view kind_name(Kind kind);
Kind kind_from_name(std::string_view name);

/// Calendar month, the unit of the monthly series grid.
struct YearMonth {
    int year = 0;
    int month = 1;  // 1..12

    auto operator<=>(const YearMonth&) const = default;

    /// Months elapsed since `start` (negative if before).
    int index_from(YearMonth start) const {
        return (year - start.year) * 12 + (month - start.month);
    }

    YearMonth plus_months(int n) const;

    /// Parses "YYYY-MM".
    static YearMonth parse(std::string_view text);
    std::string str() const;
};

/// Inclusive month range.
struct MonthRange {
    YearMonth first;
    YearMonth last;

    int length() const { return last.index_from(first) + 1; }
    bool contains(YearMonth m) const { return first <= m && m <= last; }
    bool overlaps(const MonthRange& other) const {
        return !(last < other.first || other.last < first);
    }

    /// Parses "YYYY-MM..YYYY-MM".
    static MonthRange parse(std::string_view text);
    std::string str() const;
};

/// A labeled, kind-tagged vertex shared by distance matrices and networks.
struct Node {
    std::string label;
    Kind kind = Kind::Island;

    auto operator<=>(const Node&) const = default;
};

/// Fixed 9-decimal rendering used by every numeric export.
std::string format_fixed9(double value);

std::string trim(std::string_view text);
std::vector<std::string> split(std::string_view text, char sep);

/// Splits one CSV record; handles double-quoted fields with embedded
/// separators and doubled quotes.
std::vector<std::string> split_csv(const std::string& line);

}  // namespace fishnet

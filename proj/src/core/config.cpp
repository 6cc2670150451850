#include "core/config.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace fishnet {

namespace {

bool parse_bool(const std::string& key, const std::string& value) {
    if (value == "true" || value == "on" || value == "yes" || value == "1") return true;
    if (value == "false" || value == "off" || value == "no" || value == "0") return false;
    throw ValidationError("config key '" + key + "': expected a boolean, got '" + value + "'");
}

long parse_int(const std::string& key, const std::string& value) {
    try {
        size_t used = 0;
        const long v = std::stol(value, &used);
        if (used != value.size()) throw std::invalid_argument(value);
        return v;
    } catch (const std::exception&) {
        throw ValidationError("config key '" + key + "': expected an integer, got '" + value + "'");
    }
}

double parse_real(const std::string& key, const std::string& value) {
    try {
        size_t used = 0;
        const double v = std::stod(value, &used);
        if (used != value.size()) throw std::invalid_argument(value);
        return v;
    } catch (const std::exception&) {
        throw ValidationError("config key '" + key + "': expected a number, got '" + value + "'");
    }
}

std::vector<std::string> parse_list(const std::string& value) {
    std::vector<std::string> items;
    for (const auto& piece : split(value, ',')) {
        const std::string item = trim(piece);
        if (!item.empty()) items.push_back(item);
    }
    return items;
}

std::string join(const std::vector<std::string>& items) {
    std::string out;
    for (size_t i = 0; i < items.size(); ++i) {
        if (i) out += ",";
        out += items[i];
    }
    return out;
}

}  // namespace

void PipelineConfig::validate() const {
    if (window_end < window_start) {
        throw ValidationError("config: window_end precedes window_start");
    }
    if (year_last < year_first) {
        throw ValidationError("config: year_last precedes year_first");
    }
    const MonthRange w = window();
    if (!w.contains({year_first, 1}) || !w.contains({year_last, 12})) {
        throw ValidationError("config: year range " + std::to_string(year_first) + ".." +
                              std::to_string(year_last) + " falls outside the study window " +
                              w.str());
    }
    if (method.method == MethodSpec::Method::Knn && method.k < 1) {
        throw ValidationError("config: k must be at least 1");
    }
    if (method.method == MethodSpec::Method::Eps && !(method.eps > 0.0)) {
        throw ValidationError("config: eps must be positive");
    }
    if (!(method.alpha > 0.0 && method.alpha < 1.0)) {
        throw ValidationError("config: alpha must lie in (0, 1)");
    }
    if (walk_length < 1) {
        throw ValidationError("config: walk_length must be at least 1");
    }
    for (const auto& format : formats) {
        if (format != "edgelist" && format != "graphml" && format != "dot") {
            throw ValidationError("config: unknown format '" + format + "'");
        }
    }
    if (impute) {
        if (impute->gap.length() != impute->donor.length()) {
            throw ValidationError("config: impute_gap and impute_donor differ in length");
        }
    }
}

void config_set(PipelineConfig& config, const std::string& raw_key, const std::string& raw_value) {
    const std::string key = trim(raw_key);
    const std::string value = trim(raw_value);

    if (key == "input") {
        config.input_path = value;
    } else if (key == "output_dir") {
        config.output_dir = value;
    } else if (key == "window_start") {
        config.window_start = YearMonth::parse(value);
    } else if (key == "window_end") {
        config.window_end = YearMonth::parse(value);
    } else if (key == "exclude_harbors") {
        config.exclusions.harbors = parse_list(value);
    } else if (key == "exclude_classifications") {
        config.exclusions.classifications = parse_list(value);
    } else if (key == "exclude_metiers") {
        config.exclusions.metiers = parse_list(value);
    } else if (key == "impute") {
        if (parse_bool(key, value)) {
            if (!config.impute) config.impute = ImputeSpec{};
        } else {
            config.impute.reset();
        }
    } else if (key == "impute_gap") {
        if (!config.impute) config.impute = ImputeSpec{};
        config.impute->gap = MonthRange::parse(value);
    } else if (key == "impute_donor") {
        if (!config.impute) config.impute = ImputeSpec{};
        config.impute->donor = MonthRange::parse(value);
    } else if (key == "impute_basis") {
        // Month-of-year span, e.g. "4..12".
        const auto parts = split(value, '.');
        if (parts.size() != 3 || !parts[1].empty()) {
            throw ValidationError("config key 'impute_basis': expected M..M, got '" + value + "'");
        }
        if (!config.impute) config.impute = ImputeSpec{};
        config.impute->basis.first = static_cast<int>(parse_int(key, trim(parts[0])));
        config.impute->basis.last = static_cast<int>(parse_int(key, trim(parts[2])));
    } else if (key == "zero_fill") {
        config.zero_fill = parse_bool(key, value);
    } else if (key == "method") {
        config.method.method = MethodSpec::method_from_name(value);
    } else if (key == "k") {
        const long k = parse_int(key, value);
        if (k < 1) throw ValidationError("config key 'k': must be at least 1");
        config.method.k = static_cast<size_t>(k);
    } else if (key == "eps") {
        config.method.eps = parse_real(key, value);
    } else if (key == "alpha") {
        config.method.alpha = parse_real(key, value);
    } else if (key == "bonferroni") {
        config.method.bonferroni = parse_bool(key, value);
    } else if (key == "year_first") {
        config.year_first = static_cast<int>(parse_int(key, value));
    } else if (key == "year_last") {
        config.year_last = static_cast<int>(parse_int(key, value));
    } else if (key == "years") {
        // "2010..2017" or a single year.
        const auto pos = value.find("..");
        if (pos == std::string::npos) {
            config.year_first = config.year_last = static_cast<int>(parse_int(key, value));
        } else {
            config.year_first = static_cast<int>(parse_int(key, trim(value.substr(0, pos))));
            config.year_last = static_cast<int>(parse_int(key, trim(value.substr(pos + 2))));
        }
    } else if (key == "walk_length") {
        const long w = parse_int(key, value);
        if (w < 1) throw ValidationError("config key 'walk_length': must be at least 1");
        config.walk_length = static_cast<size_t>(w);
    } else if (key == "per_year_normalization") {
        config.per_year_normalization = parse_bool(key, value);
    } else if (key == "formats") {
        config.formats = parse_list(value);
    } else if (key == "sweep_k") {
        config.sweep_k.clear();
        for (const auto& item : parse_list(value)) {
            const long k = parse_int(key, item);
            if (k < 1) throw ValidationError("config key 'sweep_k': k must be at least 1");
            config.sweep_k.push_back(static_cast<size_t>(k));
        }
    } else if (key == "sweep_eps") {
        config.sweep_eps.clear();
        for (const auto& item : parse_list(value)) {
            config.sweep_eps.push_back(parse_real(key, item));
        }
    } else if (key == "sweep") {
        config.sweep_in_pipeline = parse_bool(key, value);
    } else if (key == "seed") {
        config.seed = static_cast<uint64_t>(parse_int(key, value));
    } else {
        throw ValidationError("unknown config key '" + key + "'");
    }
}

std::string config_get(const PipelineConfig& config, const std::string& key) {
    std::ostringstream out;
    if (key == "input") return config.input_path;
    if (key == "output_dir") return config.output_dir;
    if (key == "window_start") return config.window_start.str();
    if (key == "window_end") return config.window_end.str();
    if (key == "exclude_harbors") return join(config.exclusions.harbors);
    if (key == "exclude_classifications") return join(config.exclusions.classifications);
    if (key == "exclude_metiers") return join(config.exclusions.metiers);
    if (key == "impute") return config.impute ? "on" : "off";
    if (key == "impute_gap") return config.impute ? config.impute->gap.str() : "";
    if (key == "impute_donor") return config.impute ? config.impute->donor.str() : "";
    if (key == "impute_basis") {
        if (!config.impute) return "";
        out << config.impute->basis.first << ".." << config.impute->basis.last;
        return out.str();
    }
    if (key == "zero_fill") return config.zero_fill ? "on" : "off";
    if (key == "method") return std::string(MethodSpec::method_name(config.method.method));
    if (key == "k") return std::to_string(config.method.k);
    if (key == "eps") return format_fixed9(config.method.eps);
    if (key == "alpha") return format_fixed9(config.method.alpha);
    if (key == "bonferroni") return config.method.bonferroni ? "on" : "off";
    if (key == "years") {
        out << config.year_first << ".." << config.year_last;
        return out.str();
    }
    if (key == "walk_length") return std::to_string(config.walk_length);
    if (key == "per_year_normalization") return config.per_year_normalization ? "on" : "off";
    if (key == "formats") return join(config.formats);
    if (key == "sweep_k") {
        for (size_t i = 0; i < config.sweep_k.size(); ++i) {
            out << (i ? "," : "") << config.sweep_k[i];
        }
        return out.str();
    }
    if (key == "sweep_eps") {
        for (size_t i = 0; i < config.sweep_eps.size(); ++i) {
            out << (i ? "," : "") << format_fixed9(config.sweep_eps[i]);
        }
        return out.str();
    }
    if (key == "sweep") return config.sweep_in_pipeline ? "on" : "off";
    if (key == "seed") return std::to_string(config.seed);
    throw ValidationError("unknown config key '" + key + "'");
}

PipelineConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open config file '" + path + "'");
    }
    PipelineConfig config;
    std::string line;
    size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const std::string stripped = trim(line);
        if (stripped.empty()) continue;
        const auto eq = stripped.find('=');
        if (eq == std::string::npos) {
            throw ValidationError(path + ":" + std::to_string(line_no) +
                                  ": expected 'key = value'");
        }
        try {
            config_set(config, stripped.substr(0, eq), stripped.substr(eq + 1));
        } catch (const ValidationError& e) {
            throw ValidationError(path + ":" + std::to_string(line_no) + ": " + e.what());
        }
    }
    return config;
}

}  // namespace fishnet

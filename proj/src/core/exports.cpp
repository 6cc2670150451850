#include "core/exports.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

namespace fishnet {

namespace {

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw IoError("cannot write '" + path + "'");
    }
    return out;
}

void close_out(std::ofstream& out, const std::string& path) {
    if (!out.flush()) {
        throw IoError("failed writing '" + path + "'");
    }
}

void check_label_plain(const std::string& label) {
    if (label.find_first_of(",\"\n") != std::string::npos) {
        throw ValidationError("label '" + label + "' cannot appear in CSV output");
    }
}

std::string xml_escape(const std::string& text) {
    std::string out;
    out.reserve(text.size());
    for (const char c : text) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            case '\'': out += "&apos;"; break;
            default: out += c;
        }
    }
    return out;
}

const char* edge_status(const EdgeDiff& diff, const EdgeKey& key) {
    if (diff.added.count(key)) return "new";
    if (diff.retained.count(key)) return "retained";
    return nullptr;
}

}  // namespace

void write_edgelist_csv(const Network& net, const std::string& path) {
    auto out = open_out(path);
    out << "source,target,weight\n";
    for (const auto& [i, j] : net.edges()) {
        const std::string& a = net.node(i).label;
        const std::string& b = net.node(j).label;
        check_label_plain(a);
        check_label_plain(b);
        const double w = net.weight(i, j).value_or(1.0);
        out << a << ',' << b << ',' << format_fixed9(w) << '\n';
    }
    close_out(out, path);
}

Network read_edgelist_csv(const std::string& path) {
    return read_edgelist_csv(path, {});
}

Network read_edgelist_csv(const std::string& path, const std::vector<Node>& roster) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open edge list '" + path + "'");
    }
    std::string line;
    if (!std::getline(in, line) || split_csv(line) != std::vector<std::string>{"source", "target", "weight"}) {
        throw ValidationError(path + ": expected header 'source,target,weight'");
    }

    struct RawEdge {
        std::string a, b;
        double w;
    };
    std::vector<RawEdge> raw;
    std::map<std::string, Kind> kinds;
    for (const auto& node : roster) kinds.emplace(node.label, node.kind);

    size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (trim(line).empty()) continue;
        const auto fields = split_csv(line);
        if (fields.size() != 3) {
            throw ValidationError(path + ":" + std::to_string(line_no) +
                                  ": expected 3 fields, found " + std::to_string(fields.size()));
        }
        char* end = nullptr;
        const double w = std::strtod(fields[2].c_str(), &end);
        if (end == fields[2].c_str() || *end != '\0' || !std::isfinite(w)) {
            throw ValidationError(path + ":" + std::to_string(line_no) + ": bad weight '" +
                                  fields[2] + "'");
        }
        raw.push_back({fields[0], fields[1], w});
        kinds.emplace(fields[0], Kind::Island);
        kinds.emplace(fields[1], Kind::Island);
    }

    std::vector<Node> nodes;
    nodes.reserve(kinds.size());
    for (const auto& [label, kind] : kinds) nodes.push_back({label, kind});
    Network net(nodes);
    for (const auto& edge : raw) {
        const size_t i = net.index_of(edge.a);
        const size_t j = net.index_of(edge.b);
        if (edge.w == 1.0) {
            net.add_edge(i, j);
        } else {
            net.add_edge(i, j, edge.w);
        }
    }
    return net;
}

void write_graphml(const Network& net, const std::string& path, const Partition* partition,
                   const EdgeDiff* diff) {
    auto out = open_out(path);
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<graphml xmlns=\"http://graphml.graphdrawing.org/xmlns\">\n"
        << "  <key id=\"kind\" for=\"node\" attr.name=\"kind\" attr.type=\"string\"/>\n";
    if (partition) {
        out << "  <key id=\"community\" for=\"node\" attr.name=\"community\" attr.type=\"int\"/>\n";
    }
    if (diff) {
        out << "  <key id=\"status\" for=\"edge\" attr.name=\"status\" attr.type=\"string\"/>\n";
    }
    if (net.weighted()) {
        out << "  <key id=\"weight\" for=\"edge\" attr.name=\"weight\" attr.type=\"double\"/>\n";
    }
    out << "  <graph id=\"G\" edgedefault=\"undirected\">\n";
    for (size_t i = 0; i < net.node_count(); ++i) {
        const Node& node = net.node(i);
        out << "    <node id=\"" << xml_escape(node.label) << "\">"
            << "<data key=\"kind\">" << kind_name(node.kind) << "</data>";
        if (partition) {
            out << "<data key=\"community\">" << partition->assignment.at(i) << "</data>";
        }
        out << "</node>\n";
    }
    for (const auto& [i, j] : net.edges()) {
        out << "    <edge source=\"" << xml_escape(net.node(i).label) << "\" target=\""
            << xml_escape(net.node(j).label) << "\">";
        if (diff) {
            const EdgeKey key(net.node(i).label, net.node(j).label);
            if (const char* status = edge_status(*diff, key)) {
                out << "<data key=\"status\">" << status << "</data>";
            }
        }
        if (const auto w = net.weight(i, j)) {
            out << "<data key=\"weight\">" << format_fixed9(*w) << "</data>";
        }
        out << "</edge>\n";
    }
    out << "  </graph>\n</graphml>\n";
    close_out(out, path);
}

namespace {

const char* dot_shape(Kind kind) {
    switch (kind) {
        case Kind::Classification: return "triangle";
        case Kind::Island: return "circle";
        case Kind::Metier: return "square";
    }
    throw InternalError("dot_shape: unhandled kind");
}

std::string dot_quote(const std::string& label) {
    std::string out = "\"";
    for (const char c : label) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    out += '"';
    return out;
}

}  // namespace

void write_dot(const Network& net, const std::string& path, const Partition* partition,
               const EdgeDiff* diff) {
    auto out = open_out(path);
    out << "graph G {\n";
    out << "  node [style=filled, fillcolor=white];\n";
    for (size_t i = 0; i < net.node_count(); ++i) {
        const Node& node = net.node(i);
        out << "  " << dot_quote(node.label) << " [shape=" << dot_shape(node.kind);
        if (partition) {
            // 12-color qualitative scheme, cycled when there are more communities.
            const int color = partition->assignment.at(i) % 12 + 1;
            out << ", colorscheme=set312, fillcolor=" << color;
        }
        out << "];\n";
    }
    for (const auto& [i, j] : net.edges()) {
        out << "  " << dot_quote(net.node(i).label) << " -- " << dot_quote(net.node(j).label);
        std::vector<std::string> attrs;
        if (diff) {
            const EdgeKey key(net.node(i).label, net.node(j).label);
            if (const char* status = edge_status(*diff, key)) {
                attrs.push_back(std::string("color=") +
                                (std::string(status) == "new" ? "red" : "black"));
            }
        }
        if (const auto w = net.weight(i, j)) {
            attrs.push_back("weight=" + format_fixed9(*w));
        }
        if (!attrs.empty()) {
            out << " [";
            for (size_t a = 0; a < attrs.size(); ++a) out << (a ? ", " : "") << attrs[a];
            out << "]";
        }
        out << ";\n";
    }
    out << "}\n";
    close_out(out, path);
}

void write_network(const Network& net, const std::string& format, const std::string& path,
                   const Partition* partition, const EdgeDiff* diff) {
    if (format == "edgelist" || format == "edgelist-csv" || format == "csv") {
        write_edgelist_csv(net, path);
    } else if (format == "graphml") {
        write_graphml(net, path, partition, diff);
    } else if (format == "dot") {
        write_dot(net, path, partition, diff);
    } else {
        throw ValidationError("unknown network format '" + format +
                              "' (expected edgelist-csv, graphml or dot)");
    }
}

void write_distance_csv(const DistanceMatrix& matrix, const std::string& path) {
    auto out = open_out(path);
    out << "label";
    for (const auto& node : matrix.nodes()) {
        check_label_plain(node.label);
        out << ',' << node.label;
    }
    out << '\n';
    for (size_t i = 0; i < matrix.size(); ++i) {
        out << matrix.nodes()[i].label;
        for (size_t j = 0; j < matrix.size(); ++j) {
            out << ',' << format_fixed9(matrix.at(i, j));
        }
        out << '\n';
    }
    close_out(out, path);
}

void write_series_csv(const SeriesSet& set, const std::string& path) {
    auto out = open_out(path);
    out << "label,kind";
    for (int m = 0; m < set.month_count(); ++m) {
        out << ',' << set.start().plus_months(m).str();
    }
    out << '\n';
    for (const auto& series : set.series()) {
        check_label_plain(series.label);
        out << series.label << ',' << kind_name(series.kind);
        for (const double v : series.values) {
            out << ',';
            if (!std::isnan(v)) out << format_fixed9(v);
        }
        out << '\n';
    }
    close_out(out, path);
}

SeriesSet read_series_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open series file '" + path + "'");
    }
    std::string line;
    if (!std::getline(in, line)) {
        throw ValidationError(path + ": empty file");
    }
    const auto header = split_csv(line);
    if (header.size() < 3 || header[0] != "label" || header[1] != "kind") {
        throw ValidationError(path + ": expected header 'label,kind,<months...>'");
    }
    const YearMonth start = YearMonth::parse(header[2]);
    const int months = static_cast<int>(header.size()) - 2;
    for (int m = 0; m < months; ++m) {
        if (YearMonth::parse(header[2 + m]) != start.plus_months(m)) {
            throw ValidationError(path + ": month columns are not contiguous at '" +
                                  header[2 + m] + "'");
        }
    }

    SeriesSet set(start, months);
    size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (trim(line).empty()) continue;
        const auto fields = split_csv(line);
        if (fields.size() != header.size()) {
            throw ValidationError(path + ":" + std::to_string(line_no) + ": expected " +
                                  std::to_string(header.size()) + " fields, found " +
                                  std::to_string(fields.size()));
        }
        TimeSeries series;
        series.label = fields[0];
        series.kind = kind_from_name(fields[1]);
        series.start = start;
        series.values.reserve(months);
        for (int m = 0; m < months; ++m) {
            const std::string cell = trim(fields[2 + m]);
            if (cell.empty()) {
                series.values.push_back(std::nan(""));
                continue;
            }
            char* end = nullptr;
            const double v = std::strtod(cell.c_str(), &end);
            if (end == cell.c_str() || *end != '\0') {
                throw ValidationError(path + ":" + std::to_string(line_no) + ": bad value '" +
                                      cell + "'");
            }
            series.values.push_back(v);
        }
        set.add(std::move(series));
    }
    return set;
}

}  // namespace fishnet

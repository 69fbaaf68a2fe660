#include "dichro/graph_io.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <utility>

namespace dichro {

namespace {

[[noreturn]] void bad_line(int line, const std::string& what) {
    throw Error(ErrorCode::parse_error,
                "line " + std::to_string(line) + ": " + what);
}

// Yields data lines with comments stripped, tracking line numbers.
struct LineReader {
    std::istream& in;
    int line = 0;

    bool next(std::string& out) {
        std::string raw;
        while (std::getline(in, raw)) {
            ++line;
            if (auto hash = raw.find('#'); hash != std::string::npos)
                raw.erase(hash);
            if (raw.find_first_not_of(" \t\r\n") == std::string::npos) continue;
            out = raw;
            return true;
        }
        return false;
    }
};

template <typename... Ts>
void parse_fields(const std::string& text, int line, const char* shape,
                  Ts&... fields) {
    std::istringstream ss(text);
    ((ss >> fields), ...);
    if (!ss) bad_line(line, std::string("expected \"") + shape + "\"");
    std::string rest;
    if (ss >> rest) bad_line(line, "trailing token \"" + rest + "\"");
}

std::ifstream open_input(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw Error(ErrorCode::io_error, "cannot open " + path + " for reading");
    return in;
}

std::ofstream open_output(const std::string& path) {
    std::ofstream out(path);
    if (!out)
        throw Error(ErrorCode::io_error, "cannot open " + path + " for writing");
    return out;
}

}  // namespace

Digraph read_digraph(std::istream& in) {
    LineReader reader{in};
    std::string text;
    if (!reader.next(text))
        throw Error(ErrorCode::parse_error, "empty input, expected \"n m\"");
    int n = -1, m = -1;
    parse_fields(text, reader.line, "n m", n, m);
    if (n < 0 || m < 0) bad_line(reader.line, "negative size");
    DigraphBuilder b(n);
    for (int i = 0; i < m; ++i) {
        if (!reader.next(text))
            throw Error(ErrorCode::parse_error,
                        "ended after " + std::to_string(i) + " of " +
                            std::to_string(m) + " arcs");
        int u = -1, v = -1;
        parse_fields(text, reader.line, "u v", u, v);
        try {
            b.add_arc(u, v);
        } catch (const Error& e) {
            bad_line(reader.line, e.what());
        }
    }
    if (reader.next(text)) bad_line(reader.line, "data past the arc list");
    return std::move(b).build();
}

Digraph read_digraph_file(const std::string& path) {
    std::ifstream in = open_input(path);
    return read_digraph(in);
}

void write_digraph(std::ostream& out, const Digraph& d) {
    out << d.vertex_count() << ' ' << d.arc_count() << '\n';
    for (const Arc& a : d.arcs()) out << a.from << ' ' << a.to << '\n';
}

void write_digraph_file(const std::string& path, const Digraph& d) {
    std::ofstream out = open_output(path);
    write_digraph(out, d);
}

Dicoloring read_coloring(std::istream& in, int vertex_count) {
    LineReader reader{in};
    std::string text;
    std::vector<int> color(static_cast<std::size_t>(vertex_count), -1);
    int seen = 0;
    while (reader.next(text)) {
        int v = -1, c = -1;
        parse_fields(text, reader.line, "v c", v, c);
        if (v < 0 || v >= vertex_count)
            bad_line(reader.line, "vertex " + std::to_string(v) +
                                      " outside 0.." +
                                      std::to_string(vertex_count - 1));
        if (c < 0) bad_line(reader.line, "negative color");
        if (color[static_cast<std::size_t>(v)] != -1)
            bad_line(reader.line,
                     "vertex " + std::to_string(v) + " colored twice");
        color[static_cast<std::size_t>(v)] = c;
        ++seen;
    }
    if (seen != vertex_count)
        throw Error(ErrorCode::parse_error,
                    "colored " + std::to_string(seen) + " of " +
                        std::to_string(vertex_count) + " vertices");
    int palette = 0;
    for (int c : color) palette = std::max(palette, c + 1);
    return {std::move(color), palette};
}

Dicoloring read_coloring_file(const std::string& path, int vertex_count) {
    std::ifstream in = open_input(path);
    return read_coloring(in, vertex_count);
}

void write_coloring(std::ostream& out, const Dicoloring& coloring) {
    for (std::size_t v = 0; v < coloring.color.size(); ++v)
        out << v << ' ' << coloring.color[v] << '\n';
}

void write_coloring_file(const std::string& path, const Dicoloring& coloring) {
    std::ofstream out = open_output(path);
    write_coloring(out, coloring);
}

UnitIntervalRepresentation read_intervals(std::istream& in, int vertex_count) {
    LineReader reader{in};
    std::string text;
    std::vector<double> left(static_cast<std::size_t>(vertex_count), 0.0);
    std::vector<bool> set(static_cast<std::size_t>(vertex_count), false);
    while (reader.next(text)) {
        int v = -1;
        double l = 0.0;
        parse_fields(text, reader.line, "v left", v, l);
        if (v < 0 || v >= vertex_count)
            bad_line(reader.line, "vertex " + std::to_string(v) +
                                      " outside 0.." +
                                      std::to_string(vertex_count - 1));
        if (set[static_cast<std::size_t>(v)])
            bad_line(reader.line,
                     "vertex " + std::to_string(v) + " listed twice");
        left[static_cast<std::size_t>(v)] = l;
        set[static_cast<std::size_t>(v)] = true;
    }
    for (int v = 0; v < vertex_count; ++v)
        if (!set[static_cast<std::size_t>(v)])
            throw Error(ErrorCode::parse_error,
                        "no interval for vertex " + std::to_string(v));
    return {std::move(left)};
}

UnitIntervalRepresentation read_intervals_file(const std::string& path,
                                               int vertex_count) {
    std::ifstream in = open_input(path);
    return read_intervals(in, vertex_count);
}

void write_intervals(std::ostream& out,
                     const UnitIntervalRepresentation& rep) {
    std::ostringstream ss;
    ss.precision(17);
    for (std::size_t v = 0; v < rep.left.size(); ++v)
        ss << v << ' ' << rep.left[v] << '\n';
    out << ss.str();
}

void write_intervals_file(const std::string& path,
                          const UnitIntervalRepresentation& rep) {
    std::ofstream out = open_output(path);
    write_intervals(out, rep);
}

std::string to_dot(const Digraph& d, const Dicoloring* coloring) {
    static const char* kFill[] = {"#a6cee3", "#b2df8a", "#fb9a99", "#fdbf6f",
                                  "#cab2d6", "#ffff99", "#1f78b4", "#33a02c"};
    constexpr int kFillCount = 8;
    std::string s = "digraph d {\n";
    for (int v = 0; v < d.vertex_count(); ++v) {
        s += "  " + std::to_string(v);
        if (coloring && v < static_cast<int>(coloring->color.size())) {
            const int c = coloring->color[static_cast<std::size_t>(v)];
            s += " [style=filled fillcolor=\"";
            s += kFill[c % kFillCount];
            s += "\" label=\"" + std::to_string(v) + ":" + std::to_string(c) +
                 "\"]";
        }
        s += ";\n";
    }
    for (const Arc& a : d.arcs())
        s += "  " + std::to_string(a.from) + " -> " + std::to_string(a.to) +
             ";\n";
    s += "}\n";
    return s;
}

}  // namespace dichro

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "dichro/chordal.hpp"
#include "dichro/coloring.hpp"
#include "dichro/digraph.hpp"

namespace dichro {

// Text format: '#' starts a comment, first data line is "n m", then m
// lines "u v", one arc each. Throws parse_error with the line number.
Digraph read_digraph(std::istream& in);
Digraph read_digraph_file(const std::string& path);
void write_digraph(std::ostream& out, const Digraph& d);
void write_digraph_file(const std::string& path, const Digraph& d);

// Coloring format: one "v c" line per vertex, any order, every vertex
// exactly once. The palette is one more than the largest color.
Dicoloring read_coloring(std::istream& in, int vertex_count);
Dicoloring read_coloring_file(const std::string& path, int vertex_count);
void write_coloring(std::ostream& out, const Dicoloring& coloring);
void write_coloring_file(const std::string& path, const Dicoloring& coloring);

// Interval format: one "v left" line per vertex; the interval is
// [left, left + 1].
UnitIntervalRepresentation read_intervals(std::istream& in, int vertex_count);
UnitIntervalRepresentation read_intervals_file(const std::string& path,
                                               int vertex_count);
void write_intervals(std::ostream& out, const UnitIntervalRepresentation& rep);
void write_intervals_file(const std::string& path,
                          const UnitIntervalRepresentation& rep);

// Graphviz export. A coloring, when given, becomes fill colors.
std::string to_dot(const Digraph& d, const Dicoloring* coloring = nullptr);

}  // namespace dichro

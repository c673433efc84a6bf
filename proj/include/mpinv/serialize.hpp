#pragma once

#include "mpinv/graph.hpp"
#include "mpinv/matrix.hpp"

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace mpinv {

struct parse_error : std::runtime_error {
    parse_error(int line_, const std::string& message)
        : std::runtime_error(line_ > 0 ? "line " + std::to_string(line_) + ": " + message
                                       : message),
          line(line_) {}
    int line;  // 1-based; 0 when no line applies
};

struct GraphReadResult {
    Graph graph;
    /// (original label, assigned label) pairs, ascending by original;
    /// empty when the file already used 1..n.
    std::vector<std::pair<int, int>> relabeling;
};

/// Graph text format: everything after '#' is a comment and blank lines are
/// skipped; the first data line is "n m"; the next m data lines are "u v".
/// Labels outside
/// 1..n are remapped to 1..k in sorted order (recorded in the result).
/// Throws parse_error naming the offending line, or graph_error for
/// structural problems (self-loops, duplicates).
GraphReadResult read_graph(std::istream& in);

std::string write_graph(const Graph& g);

/// CSV with a leading comment header carrying the index kinds and shape:
///   # rows=edges cols=vertices shape=6x7
///   -2/7,2/7,...
/// Entries are exact "p/q" strings; round-trips bit-exactly.
std::string matrix_to_csv(const RationalMatrix& m);
RationalMatrix matrix_from_csv(std::string_view text);

/// Compact JSON object: {"rows":..,"cols":..,"row_kind":"edges",
/// "col_kind":"vertices","entries":[["p/q",...],...]}.
std::string matrix_to_json(const RationalMatrix& m);
RationalMatrix matrix_from_json(std::string_view text);

}  // namespace mpinv

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "graphstat/graph.hpp"

namespace graphstat {

/// Proper edge coloring with colors 1..d+1, stored per edge in the graph's
/// canonical edge order.
struct EdgeColoring {
    std::vector<int> by_edge;

    int color_of(const Graph& g, Vertex u, Vertex v) const;
    /// Number of distinct colors actually used.
    int colors_used() const;
};

/// Misra-Gries fan recoloring. Guarantees a proper coloring with colors from
/// {1..d+1}; deterministic (edges processed in lexicographic order).
EdgeColoring proper_edge_coloring(const Graph& g);

/// Throws InvariantViolation unless the coloring is total, proper, and every
/// color lies in 1..d+1.
void verify_coloring(const Graph& g, const EdgeColoring& col);

// Coloring file: m lines "u v c" in the graph file's edge order.
EdgeColoring read_coloring(std::istream& in, const Graph& g);
void write_coloring(std::ostream& out, const Graph& g, const EdgeColoring& col);
EdgeColoring load_coloring(const std::string& path, const Graph& g);
void save_coloring(const std::string& path, const Graph& g, const EdgeColoring& col);

}  // namespace graphstat

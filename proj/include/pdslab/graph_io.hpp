#pragma once

#include <cstdint>
#include <istream>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "pdslab/cayley_graph.hpp"

namespace pdslab {

enum class GraphFormat { graph6, dimacs, edge_list };

/// Accepts "graph6", "dimacs", "edges"; throws std::invalid_argument otherwise.
GraphFormat parse_graph_format(const std::string& name);

namespace detail {

void write_graph6_header(std::ostream& os, std::uint64_t n);

/// Upper-triangle bits x(0,1), x(0,2), x(1,2), ... packed six per printable
/// character, first bit highest.
template <class Graph>
void write_graph6_impl(std::ostream& os, const Graph& g) {
    const std::uint64_t n = g.order();
    write_graph6_header(os, n);
    int filled = 0;
    unsigned group = 0;
    for (std::uint64_t col = 1; col < n; ++col) {
        for (std::uint64_t row = 0; row < col; ++row) {
            group = (group << 1) | (g.adjacent(row, col) ? 1u : 0u);
            if (++filled == 6) {
                os.put(static_cast<char>(63 + group));
                filled = 0;
                group = 0;
            }
        }
    }
    if (filled != 0) os.put(static_cast<char>(63 + (group << (6 - filled))));
    os.put('\n');
}

template <class Graph>
void write_dimacs_impl(std::ostream& os, const Graph& g) {
    const std::uint64_t n = g.order();
    os << "p edge " << n << ' ' << g.edge_count() << '\n';
    for (std::uint64_t u = 0; u < n; ++u)
        for (std::uint64_t w = u + 1; w < n; ++w)
            if (g.adjacent(u, w)) os << "e " << (u + 1) << ' ' << (w + 1) << '\n';
}

template <class Graph>
void write_edge_list_impl(std::ostream& os, const Graph& g) {
    const std::uint64_t n = g.order();
    for (std::uint64_t u = 0; u < n; ++u)
        for (std::uint64_t w = u + 1; w < n; ++w)
            if (g.adjacent(u, w)) os << u << ' ' << w << '\n';
}

} // namespace detail

void export_graph(std::ostream& os, const CayleyGraph& g, GraphFormat format);
void export_graph(std::ostream& os, const DenseGraph& g, GraphFormat format);

/// Parses a graph6 document (either header form) into a bit-matrix.
DenseGraph read_graph6(std::istream& is);

/// Parses "u w" lines as written by the edge_list format.
std::vector<std::pair<std::uint32_t, std::uint32_t>> read_edge_list(std::istream& is);

} // namespace pdslab

#include "pdslab/graph_io.hpp"

#include <sstream>
#include <stdexcept>

namespace pdslab {

GraphFormat parse_graph_format(const std::string& name) {
    if (name == "graph6") return GraphFormat::graph6;
    if (name == "dimacs") return GraphFormat::dimacs;
    if (name == "edges") return GraphFormat::edge_list;
    throw std::invalid_argument("unknown graph format: " + name +
                                " (expected graph6, dimacs or edges)");
}

namespace detail {

void write_graph6_header(std::ostream& os, std::uint64_t n) {
    if (n <= 62) {
        os.put(static_cast<char>(63 + n));
    } else if (n <= 258047) {
        os.put(126);
        os.put(static_cast<char>(63 + ((n >> 12) & 63)));
        os.put(static_cast<char>(63 + ((n >> 6) & 63)));
        os.put(static_cast<char>(63 + (n & 63)));
    } else if (n <= UINT64_C(68719476735)) {
        os.put(126);
        os.put(126);
        for (int shift = 30; shift >= 0; shift -= 6)
            os.put(static_cast<char>(63 + ((n >> shift) & 63)));
    } else {
        throw std::invalid_argument("graph6: order too large");
    }
}

} // namespace detail

void export_graph(std::ostream& os, const CayleyGraph& g, GraphFormat format) {
    switch (format) {
        case GraphFormat::graph6: detail::write_graph6_impl(os, g); break;
        case GraphFormat::dimacs: detail::write_dimacs_impl(os, g); break;
        case GraphFormat::edge_list: detail::write_edge_list_impl(os, g); break;
    }
}

void export_graph(std::ostream& os, const DenseGraph& g, GraphFormat format) {
    switch (format) {
        case GraphFormat::graph6: detail::write_graph6_impl(os, g); break;
        case GraphFormat::dimacs: detail::write_dimacs_impl(os, g); break;
        case GraphFormat::edge_list: detail::write_edge_list_impl(os, g); break;
    }
}

DenseGraph read_graph6(std::istream& is) {
    auto next = [&is]() -> unsigned {
        const int ch = is.get();
        if (ch < 63 || ch > 126) throw std::runtime_error("graph6: invalid byte");
        return static_cast<unsigned>(ch - 63);
    };
    std::uint64_t n = 0;
    int first = is.get();
    if (first == EOF) throw std::runtime_error("graph6: empty input");
    if (first == 126) {
        int second = is.peek();
        if (second == 126) {
            is.get();
            for (int i = 0; i < 6; ++i) n = (n << 6) | next();
        } else {
            for (int i = 0; i < 3; ++i) n = (n << 6) | next();
        }
    } else {
        if (first < 63 || first > 125) throw std::runtime_error("graph6: invalid header");
        n = static_cast<std::uint64_t>(first - 63);
    }
    if (n > 65536) throw std::runtime_error("graph6: refusing to materialize order > 65536");

    DenseGraph g(static_cast<std::uint32_t>(n));
    int filled = 0;
    unsigned group = 0;
    for (std::uint64_t col = 1; col < n; ++col) {
        for (std::uint64_t row = 0; row < col; ++row) {
            if (filled == 0) {
                group = next();
                filled = 6;
            }
            if ((group >> (filled - 1)) & 1u)
                g.set_edge(static_cast<std::uint32_t>(row), static_cast<std::uint32_t>(col));
            --filled;
        }
    }
    return g;
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> read_edge_list(std::istream& is) {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::uint32_t u = 0, w = 0;
        if (!(ls >> u >> w)) throw std::runtime_error("edge list: malformed line: " + line);
        edges.emplace_back(u, w);
    }
    return edges;
}

} // namespace pdslab

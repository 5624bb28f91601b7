#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "matcoh/intmatrix.hpp"

namespace matcoh {

// Finite graph with a fixed vertex order (the vertex index) and the induced
// edge order: each edge is stored with u <= v, and edges are stably sorted by
// (u, v). Loops and multiple edges are allowed.
struct Graph {
    int nv = 0;
    std::vector<std::pair<int, int>> edges;

    Graph() = default;
    Graph(int vertices, std::vector<std::pair<int, int>> edge_list);

    int ne() const { return int(edges.size()); }

    // Connected components of the spanning subgraph [G : S]; returns one
    // component id per vertex, ids numbered by first appearance.
    std::vector<int> component_ids(uint32_t edge_mask) const;
    int component_count(uint32_t edge_mask) const;
    // Minimal vertex of each component, ascending.
    std::vector<int> component_minima(uint32_t edge_mask) const;

    bool connected() const;
    bool has_loop_edge() const;
};

Graph complete_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);

// Chromatic polynomial by deletion-contraction (loops kill, multi-edges
// collapse); coefficients in ascending degree.
std::vector<Int> chromatic_polynomial(const Graph& g);

// Direct count of proper colorings with `colors` colors (oracle for small graphs).
long long count_proper_colorings(const Graph& g, int colors);

}  // namespace matcoh

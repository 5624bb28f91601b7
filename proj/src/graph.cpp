#include "matcoh/graph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace matcoh {

Graph::Graph(int vertices, std::vector<std::pair<int, int>> edge_list)
    : nv(vertices), edges(std::move(edge_list)) {
    for (auto& [u, v] : edges) {
        if (u < 0 || v < 0 || u >= nv || v >= nv) throw std::invalid_argument("edge endpoint out of range");
        if (u > v) std::swap(u, v);
    }
    std::stable_sort(edges.begin(), edges.end());
    if (int(edges.size()) > 25) throw std::invalid_argument("edge count above the subset-table cap");
}

namespace {

struct Dsu {
    std::vector<int> parent;
    explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
};

}  // namespace

std::vector<int> Graph::component_ids(uint32_t edge_mask) const {
    Dsu dsu(nv);
    for (int e = 0; e < ne(); ++e)
        if (edge_mask & (1u << e)) dsu.unite(edges[e].first, edges[e].second);
    std::vector<int> ids(nv, -1);
    int next = 0;
    for (int v = 0; v < nv; ++v) {
        int r = dsu.find(v);
        if (ids[r] < 0) ids[r] = next++;
        ids[v] = ids[r];
    }
    return ids;
}

int Graph::component_count(uint32_t edge_mask) const {
    auto ids = component_ids(edge_mask);
    return ids.empty() ? 0 : *std::max_element(ids.begin(), ids.end()) + 1;
}

std::vector<int> Graph::component_minima(uint32_t edge_mask) const {
    auto ids = component_ids(edge_mask);
    int k = ids.empty() ? 0 : *std::max_element(ids.begin(), ids.end()) + 1;
    std::vector<int> mins(k, -1);
    for (int v = 0; v < nv; ++v)
        if (mins[ids[v]] < 0) mins[ids[v]] = v;
    return mins;
}

bool Graph::connected() const { return nv <= 1 || component_count((1u << ne()) - 1) == 1; }

bool Graph::has_loop_edge() const {
    for (const auto& [u, v] : edges)
        if (u == v) return true;
    return false;
}

Graph complete_graph(int n) {
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) e.push_back({u, v});
    return Graph(n, std::move(e));
}

Graph path_graph(int n) {
    std::vector<std::pair<int, int>> e;
    for (int v = 0; v + 1 < n; ++v) e.push_back({v, v + 1});
    return Graph(n, std::move(e));
}

Graph cycle_graph(int n) {
    std::vector<std::pair<int, int>> e;
    for (int v = 0; v + 1 < n; ++v) e.push_back({v, v + 1});
    if (n >= 2) e.push_back({0, n - 1});
    return Graph(n, std::move(e));
}

namespace {

void poly_add(std::vector<Int>& a, const std::vector<Int>& b, int sign) {
    if (a.size() < b.size()) a.resize(b.size());
    for (size_t i = 0; i < b.size(); ++i) a[i] += sign * b[i];
}

std::vector<Int> chrom_rec(int nv, std::vector<std::pair<int, int>> edges) {
    for (const auto& [u, v] : edges)
        if (u == v) return {};  // loop: no proper colorings
    if (edges.empty()) {
        std::vector<Int> p(nv + 1);
        p[nv] = 1;  // lambda^nv
        return p;
    }
    auto [u, v] = edges.back();
    edges.pop_back();
    std::vector<Int> del = chrom_rec(nv, edges);
    // contract: merge v into u, drop the duplicate of the contracted edge only
    std::vector<std::pair<int, int>> con;
    for (auto [a, b] : edges) {
        if (a == v) a = u;
        if (b == v) b = u;
        if (a > v) --a;
        if (b > v) --b;
        if (a > b) std::swap(a, b);
        con.push_back({a, b});
    }
    std::vector<Int> ctr = chrom_rec(nv - 1, std::move(con));
    poly_add(del, ctr, -1);
    while (!del.empty() && del.back() == 0) del.pop_back();
    return del;
}

}  // namespace

std::vector<Int> chromatic_polynomial(const Graph& g) { return chrom_rec(g.nv, g.edges); }

long long count_proper_colorings(const Graph& g, int colors) {
    if (g.nv > 8) throw std::invalid_argument("count_proper_colorings: too many vertices");
    if (colors <= 0) return g.nv == 0 ? 1 : 0;
    long long total = 0;
    std::vector<int> c(g.nv, 0);
    while (true) {
        bool ok = true;
        for (const auto& [u, v] : g.edges)
            if (c[u] == c[v]) { ok = false; break; }
        if (ok) ++total;
        int i = 0;
        while (i < g.nv && ++c[i] == colors) c[i++] = 0;
        if (i == g.nv) break;
    }
    return total;
}

}  // namespace matcoh

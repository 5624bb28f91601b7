#include "matcoh/randomgen.hpp"

#include <algorithm>

namespace matcoh {

Graph random_graph(std::mt19937_64& rng, const GraphOptions& opt) {
    std::uniform_int_distribution<int> nv_d(opt.min_vertices, opt.max_vertices);
    for (int attempt = 0; attempt < 1000; ++attempt) {
        int nv = nv_d(rng);
        std::vector<std::pair<int, int>> edges;
        for (int u = 0; u < nv; ++u)
            for (int v = u; v < nv; ++v) {
                if (u == v && !opt.allow_loops) continue;
                if (rng() % 2 == 0) edges.push_back({u, v});
                if (opt.allow_multi && rng() % 8 == 0) edges.push_back({u, v});
            }
        if (edges.empty() || int(edges.size()) > 12) continue;
        Graph g(nv, edges);
        if (opt.connected && !g.connected()) continue;
        return g;
    }
    return path_graph(opt.min_vertices);
}

RandomInstance random_matroid_instance(std::mt19937_64& rng, int max_n) {
    switch (rng() % 5) {
        case 0: {  // uniform
            int n = 1 + int(rng() % max_n);
            int k = int(rng() % (n + 1));
            RandomInstance inst{from_uniform(k, n), std::nullopt, std::nullopt};
            if (auto a = uniform_regular_matrix(k, n)) inst.rep = *a;
            return inst;
        }
        case 1: {  // graphic
            GraphOptions opt;
            opt.max_vertices = 4;
            opt.allow_loops = true;
            opt.allow_multi = true;
            for (int t = 0; t < 100; ++t) {
                Graph g = random_graph(rng, opt);
                if (g.ne() <= max_n) return {from_graph(g), std::nullopt, g};
            }
            Graph g = path_graph(2);
            return {from_graph(g), std::nullopt, g};
        }
        case 2: {  // column matroid of a small sign matrix
            int r = 1 + int(rng() % 3);
            int n = std::max(1, 1 + int(rng() % max_n));
            IntMatrix a(r, n);
            std::uniform_int_distribution<int> entry(-1, 1);
            for (int i = 0; i < r; ++i)
                for (int j = 0; j < n; ++j) a(i, j) = entry(rng);
            return {from_matrix(a), a, std::nullopt};
        }
        case 3: {  // direct sum of two smaller instances
            if (max_n < 2) break;
            RandomInstance a = random_matroid_instance(rng, std::max(1, max_n / 2));
            RandomInstance b = random_matroid_instance(rng, std::max(1, max_n - a.m.n));
            if (a.m.n + b.m.n > max_n) break;
            return {direct_sum(a.m, b.m), std::nullopt, std::nullopt};
        }
        default: break;
    }
    // relaxation of a graphic instance when one is available
    GraphOptions opt;
    opt.max_vertices = 4;
    opt.connected = true;
    for (int t = 0; t < 100; ++t) {
        Graph g = random_graph(rng, opt);
        if (g.ne() > max_n) continue;
        Matroid m = from_graph(g);
        auto chs = circuit_hyperplanes(m);
        if (chs.empty()) return {m, std::nullopt, g};
        return {relax(m, chs[rng() % chs.size()]), std::nullopt, std::nullopt};
    }
    return {from_uniform(1, 1), uniform_regular_matrix(1, 1), std::nullopt};
}

QuasiRep random_quasirep(std::mt19937_64& rng, const RandomInstance& inst) {
    switch (rng() % 4) {
        case 0:
            if (inst.graph && inst.graph->nv > 0) {
                QuasiRep q = graphic_quasirep(*inst.graph);
                if (validate(q).ok) return q;
            }
            break;
        case 1:
            if (inst.rep) {
                QuasiRep q = canonical_from_matrix(inst.m, *inst.rep);
                if (validate(q).ok) return q;
            }
            break;
        case 2: {  // torsion-bearing values
            std::vector<Int> scalars(inst.m.rank());
            for (auto& s : scalars) s = 1 + int(rng() % 4);
            return scaled_free(inst.m, scalars);
        }
        default: break;
    }
    return free_default(inst.m);
}

}  // namespace matcoh

#pragma once

#include <optional>
#include <random>

#include "matcoh/matroid.hpp"
#include "matcoh/quasirep.hpp"

namespace matcoh {

// Seeded generators for fuzz-style tests. Instances remember how they were
// built so that canonical quasi-representations stay available.
struct RandomInstance {
    Matroid m;
    std::optional<IntMatrix> rep;  // rational representation, when one exists
    std::optional<Graph> graph;
};

struct GraphOptions {
    int min_vertices = 2;
    int max_vertices = 5;
    bool connected = false;
    bool allow_loops = false;
    bool allow_multi = false;
};

Graph random_graph(std::mt19937_64& rng, const GraphOptions& opt);

RandomInstance random_matroid_instance(std::mt19937_64& rng, int max_n);

// Picks among free_default, scaled_free and (validated) canonical/graphic.
QuasiRep random_quasirep(std::mt19937_64& rng, const RandomInstance& inst);

}  // namespace matcoh

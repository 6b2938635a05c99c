#pragma once

#include <vector>

#include "extremal/graph.hpp"

namespace extremal {

struct DominatingPathSystem;  // diameter.hpp

// Equivalence classes of "same BFS layer from c, connected without dipping
// below that layer". Classes are listed by (layer, smallest member).
struct LayeringPartition {
    Vertex center = -1;
    std::vector<std::vector<Vertex>> classes;
    std::vector<int> layer;      // per class
    std::vector<int> class_of;   // per vertex
};

LayeringPartition layering_partition(const Graph& g, Vertex c, SearchStats* stats = nullptr);

// Exact max intra-class distance (one BFS per vertex of each non-singleton
// class; an oracle-grade computation).
int delta_c_exact(const Graph& g, Vertex c, SearchStats* stats = nullptr);

struct DeltaStar {
    int value = 0;
    int witness_class = -1;
    Vertex witness_vertex = -1;
    int witness_path = -1;
};

// Layering-based upper bound machinery: for each class and each path whose
// closed neighborhood meets the class, score 2*d(v, P_i) + 2. The result
// sandwiches the exact layering diameter within a factor-2-plus-constant
// and upper-bounds the graph's hyperbolicity, which is what makes the main
// algorithms run without being told alpha.
DeltaStar delta_star(const Graph& g, const DominatingPathSystem& sys,
                     SearchStats* stats = nullptr);
DeltaStar delta_star_for_paths(const Graph& g, Vertex c,
                               const std::vector<std::vector<Vertex>>& paths,
                               SearchStats* stats = nullptr);

// Exact Gromov hyperbolicity via the four-point condition, returned as a
// DOUBLED integer (so value 1 means delta = 1/2). O(n^4); refuses above cap.
int four_point_delta_doubled_oracle(const Graph& g, Vertex cap = 150);

} // namespace extremal

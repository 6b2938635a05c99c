#pragma once

#include <vector>

#include "extremal/diameter.hpp"
#include "extremal/graph.hpp"

namespace extremal {

struct CentralVertex {
    Vertex vertex = -1;
    int ecc = 0;           // == radius
    bool fallback = false; // heuristic failed certification, exact pass used
};

// A vertex of minimum eccentricity in a connected chordal graph. Heuristic:
// sweep to a far vertex u, take w farthest from u, scan one shortest u-w
// path for the minimum eccentricity; certified against the lower bound
// ceil(e(u)/2). On certification failure falls back to the n-BFS center.
CentralVertex chordal_central_vertex(const Graph& g, SearchStats* stats = nullptr);

// Linear-phase diameter for prime chordal graphs promised to have small
// dominating targets and diameter >= 4: grow dominating paths from a true
// center, adding each found extremity's whole neighborhood, and report the
// best extremity eccentricity. A result below 4 flags the broken promise.
DiameterResult diameter_chordal_domtarget(const Graph& g, SearchStats* stats = nullptr);

// Ordering machinery for the radius-2 case. ell(v) counts v's neighbors in
// the dominating clique C = N(x1); vertices of S = V \ N[x1] are ordered by
// the lexicographic value (ell(v), ell of S-neighbors non-increasing).
struct LOrdering {
    Vertex x1 = -1;
    std::vector<Vertex> clique;   // C, ascending
    std::vector<Vertex> order;    // S in non-decreasing L-value
    std::vector<int> ell;         // per vertex; 0 outside S and C usage sites
    std::vector<char> in_s;       // per vertex
};

// Requires x1 simplicial with e(x1) = 2 (so C dominates).
LOrdering build_l_ordering(const Graph& g, Vertex x1);

// Greedy scan keeping the earliest vertex of every adjacent pair; the kept
// set is independent and preserves the maximum eccentricity over S.
std::vector<Vertex> reduce_to_independent(const Graph& g, const LOrdering& ord);

struct PrecNFilterResult {
    std::vector<Vertex> survivors;  // the processed set A, in order
};

// Counter-based dominance filter over the independent set: a processed
// vertex u discards every later v whose relevant clique neighborhoods u
// already covers. Survivors retain a maximum-eccentricity vertex and form
// an asteroidal set.
PrecNFilterResult prec_n_filter(const Graph& g, const LOrdering& ord,
                                const std::vector<Vertex>& sstar);

// Counter test for one pair, exposed for the equivalence tests against the
// definitional relation.
bool prec_n_counter_test(const Graph& g, const LOrdering& ord, Vertex u, Vertex v);

// Exact diameter of a connected chordal graph, all branches: quotient
// reduction, rad >= 3 via the dominating-target scheme, rad = 2 via the
// last-LexBFS vertex and, when its eccentricity is 2, the L-ordering
// pipeline. Errors on non-chordal input.
DiameterResult diameter_chordal(const Graph& g);

} // namespace extremal

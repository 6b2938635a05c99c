#pragma once

#include <optional>
#include <vector>

#include "extremal/extremities.hpp"
#include "extremal/graph.hpp"
#include "extremal/stats.hpp"

namespace extremal {

// A center c, pairwise nonadjacent extremities x_1..x_t, shortest c-x_i
// paths (stored from c to x_i), and their union H, which dominates the
// graph. Built by the double sweep plus repeated constrained extremity
// searches; shared scaffold of the approximation, exact, and extension
// algorithms.
struct DominatingPathSystem {
    Vertex center = -1;
    std::vector<Vertex> extremities;           // x_1..x_t
    std::vector<std::vector<Vertex>> paths;    // P_i, from center to x_i
    VertexSet hull;                            // H = union of the paths
};

// Requires a prime connected graph with n >= 3.
DominatingPathSystem build_dominating_path_system(const Graph& g, SearchStats* stats = nullptr);

// The set Y of Lemma-style cleaning for a pair (u, v) with v in F(u):
// contains v, is u-transitive, and no member is farther than v from any
// x in N[u] at distance e(u) from v. Adjacent u,v collapse to {v}.
TransitiveSet build_clean_set(const Graph& g, Vertex u, Vertex v, SearchStats* stats = nullptr);

// The discard set S': contains v, is u-transitive, and no member can sit
// at distance e(u)+1 from any vertex of N[u]. Requires d(x,v) <= e(u) for
// every x in N[u] (checked) and e(u) >= 2.
TransitiveSet build_discard_set(const Graph& g, Vertex u, Vertex v, SearchStats* stats = nullptr);

struct LocalMaxEcc {
    int value = 0;       // max eccentricity over N[u]
    Vertex witness = -1; // attains it
    Vertex far_vertex = -1;  // d(witness, far_vertex) == value
    int iterations = 0;  // extremities consumed
};

// max{e(x) : x in N[u]} on a prime graph with n >= 3, by iterating over
// extremities at maximum distance from u and discarding cleaned sets.
LocalMaxEcc local_max_ecc(const Graph& g, Vertex u, SearchStats* stats = nullptr);

struct EccEstimates {
    std::vector<int> estimate;  // e(v)-1 <= estimate[v] <= e(v)
};

// Estimates per-vertex eccentricities within one, from cutoff-many path
// vertices nearest each extremity. Requires a prime graph, n >= 3, and
// cutoff >= 1 large enough for the graph's hyperbolicity (the mode
// helpers below pick valid cutoffs).
EccEstimates approx_all_eccentricities(const Graph& g, int cutoff, SearchStats* stats = nullptr);
EccEstimates approx_all_eccentricities_with_system(const Graph& g,
                                                   const DominatingPathSystem& sys, int cutoff,
                                                   SearchStats* stats = nullptr);

struct DiameterResult {
    int value = 0;
    Edge certificate{0, 0};  // d(certificate) == value, re-verified
    RunStats stats;
};

struct DiameterOptions {
    std::optional<int> alpha;  // given: cutoffs 66a-19 / 42a-11; else oblivious
};

// Exact diameter of an arbitrary connected graph: quotient reduction,
// degenerate short-circuits, then the dominating-path-system search with
// per-vertex local max-eccentricity scans on the quotient.
DiameterResult exact_diameter(const Graph& g, const DiameterOptions& opt = {});

// Same pipeline, returning the +1-approximate eccentricities of the
// original graph (estimates lifted through the quotient).
struct EccApproxResult {
    std::vector<int> estimate;
    RunStats stats;
};
EccApproxResult approx_eccentricities(const Graph& g, const DiameterOptions& opt = {});

// Cutoff schedules. Alpha-given mode uses the paper-scale constants; the
// oblivious mode replaces alpha by the layering estimator.
int exact_cutoff_from_alpha(int alpha);
int approx_cutoff_from_alpha(int alpha);
int exact_cutoff_from_delta_star(int delta_star);
int approx_cutoff_from_delta_star(int delta_star);

} // namespace extremal

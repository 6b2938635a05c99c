#pragma once

#include <vector>

#include "extremal/graph.hpp"

namespace extremal {

// A vertex set closed under "y separates a member from the anchor":
// whenever x in members and a nonadjacent y has x and anchor in different
// components of G \ N[y], y is a member too. Closed neighborhoods of
// connected subgraphs containing the anchor have this property, and those
// are the sets the engines actually pass around.
struct TransitiveSet {
    Vertex anchor = -1;
    VertexSet members;
};

// True iff removing N[v] does not increase the number of connected
// components; for connected input that means at most one component
// remains (an empty remainder qualifies).
bool is_extremity(const Graph& g, Vertex v);

struct ExtremityReport {
    VertexSet extremities;
    int count = 0;               // q
    int alpha = 0;               // max pairwise-nonadjacent extremities
    bool alpha_exact = false;    // false: greedy lower bound only
};

// The n-fold definition check; alpha is exact (max independent set among
// the extremities) up to `exact_cap` extremities and a greedy lower bound
// beyond that.
ExtremityReport all_extremities_oracle(const Graph& g, int exact_cap = 20);

// sigma(1) of a LexBFS. On a prime graph with n >= 3 this is guaranteed
// to be an extremity; primality is the caller's promise and not checked.
Vertex first_extremity(const Graph& g, Vertex start, SearchStats* stats = nullptr);

// Given an anchored transitive set S with V != S + N[u], returns an
// extremity outside S and N[u] at maximum distance from u among V \ S.
// Detects primality violations (refinement stalls) and exhaustion.
Vertex next_extremity(const Graph& g, Vertex u, const TransitiveSet& s,
                      SearchStats* stats = nullptr);
Vertex next_extremity(const Graph& g, Vertex u, const VertexSet& s,
                      SearchStats* stats = nullptr);

// The u `- w -` v separation predicate: u and v in separate components of
// G \ N[w]. Arguments must be pairwise nonadjacent.
bool separation_test(const Graph& g, Vertex u, Vertex v, Vertex w);

// Exhaustive definition check, one component decomposition per candidate y.
bool is_u_transitive_oracle(const Graph& g, Vertex u, const VertexSet& s);

bool is_asteroidal_set(const Graph& g, const VertexSet& a);

// Exact maximum asteroidal set size by branch-and-bound over independent
// sets (asteroidal sets are hereditary). Refuses above the vertex cap.
int asteroidal_number_oracle(const Graph& g, Vertex cap = 64);

enum class Verdict { False, True, Unknown };

// Exact: D is a dominating target iff no vertex y with N[y] disjoint from
// D leaves all of D inside one component of G \ N[y]. One decomposition
// per candidate y, so the check is polynomial for any |D|; the Unknown
// arm of the verdict is kept for interface stability but never produced.
Verdict is_dominating_target(const Graph& g, const VertexSet& d);

} // namespace extremal

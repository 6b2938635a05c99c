#pragma once

#include <vector>

#include "extremal/graph.hpp"

namespace extremal {

// Verdict of the module test. When M is not a module, `splitter` is a
// vertex outside M adjacent to part of M but not all of it.
struct ModuleWitness {
    bool is_module = false;
    Vertex splitter = -1;
};

ModuleWitness is_module(const Graph& g, const VertexSet& members);

// Equivalence classes of the twin relation N(u)\{v} = N(v)\{u}, each class
// listed ascending, classes ordered by smallest member.
std::vector<std::vector<Vertex>> twin_classes(const Graph& g);

struct PrimalityResult {
    bool prime = false;
    std::vector<Vertex> witness_module;  // a nontrivial module when not prime
};

// Requires a connected graph.
PrimalityResult is_prime(const Graph& g);

// Quotient over the maximal strong modules. Classes partition V; two
// classes are adjacent iff every cross pair is. When the complement of g
// is disconnected the quotient is complete, which pins diam(g) <= 2;
// otherwise the quotient is prime.
struct QuotientGraph {
    Graph quotient;
    std::vector<std::vector<Vertex>> classes;  // class id -> members, ascending
    std::vector<Vertex> representative;        // class id -> smallest member
    std::vector<int> classmap;                 // original vertex -> class id
};

QuotientGraph quotient_graph(const Graph& g);

// Exact per-vertex eccentricities of g from exact per-class eccentricities
// of the quotient. A vertex inside a class additionally sees its class
// mates at distance 1 or 2, which is the only correction needed.
std::vector<int> lift_eccentricities(const Graph& g, const QuotientGraph& q,
                                     const std::vector<int>& quotient_ecc);

// Partition of V \ {v} into the maximal modules of g avoiding v.
// Exposed for tests; quotient_graph builds on it.
std::vector<std::vector<Vertex>> maximal_modules_excluding(const Graph& g, Vertex v);

// Connected components of the complement, without materializing it.
std::vector<std::vector<Vertex>> complement_components(const Graph& g);

} // namespace extremal

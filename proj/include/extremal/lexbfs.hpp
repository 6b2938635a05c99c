#pragma once

#include <optional>
#include <vector>

#include "extremal/graph.hpp"

namespace extremal {

// A LexBFS numbering. Numbers run n down to 1 in visit order, so
// sigma(n) is the start vertex and sigma(1) the last vertex visited.
// Ties among maximum-label vertices break toward the smallest id, which
// makes every downstream computation reproducible.
struct LexOrder {
    std::vector<Vertex> sigma_;  // 1-indexed: sigma_[i] is the vertex numbered i
    std::vector<int> number;     // inverse map vertex -> number

    Vertex sigma(int i) const { return sigma_[i]; }
    int n() const { return static_cast<int>(sigma_.size()) - 1; }
    Vertex start() const { return sigma_[n()]; }
    Vertex last() const { return sigma_[1]; }
};

LexOrder lexbfs(const Graph& g, Vertex start, SearchStats* stats = nullptr);

// Replays labels step by step and checks that every numbered vertex had
// lexicographically maximum label. Quadratic; meant for validation.
bool verify_lexorder(const Graph& g, const LexOrder& ord);

// The label of u at the moment v was about to be numbered: u's neighbors
// numbered before v, as numbers in decreasing order. Requires u's number
// to be at most v's. Computed on demand; nothing stores labels globally.
std::vector<int> label_view(const Graph& g, const LexOrder& ord, Vertex u, Vertex v);

struct DoubleSweep {
    Vertex x1, x2, c;
    int dist_x1_x2;
};

// x1 = last vertex of LexBFS(0); x2 = last vertex of LexBFS(x1); c lies on
// a shortest x1-x2 path at distance floor(d(x1,x2)/2) from x1.
DoubleSweep double_sweep(const Graph& g, SearchStats* stats = nullptr);

// True iff N(v) induces a clique.
bool is_simplicial(const Graph& g, Vertex v);

struct ChordalityResult {
    bool chordal = false;
    // When chordal: a perfect elimination ordering, eliminated front to back.
    std::vector<Vertex> peo;
};

// LexBFS followed by the standard elimination-ordering check.
ChordalityResult recognize_chordal(const Graph& g, SearchStats* stats = nullptr);

} // namespace extremal

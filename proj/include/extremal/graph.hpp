#pragma once

#include <span>
#include <utility>
#include <vector>

#include "extremal/errors.hpp"
#include "extremal/stats.hpp"
#include "extremal/vertex_set.hpp"

namespace extremal {

using Edge = std::pair<Vertex, Vertex>;

// Immutable undirected simple graph in compressed adjacency (CSR) form.
// Neighbor lists are sorted ascending, which gives O(deg) set operations
// and O(log deg) adjacency tests. Construction validates rather than
// repairs: self-loops and duplicate edges are rejected.
//
// A Graph never mutates after construction, so it can be shared freely
// across threads; all per-query state lives in the caller.
class Graph {
public:
    Graph() = default;

    // `edges` may list each undirected edge in either orientation, once.
    static Graph from_edges(Vertex n, const std::vector<Edge>& edges);

    Vertex vertex_count() const { return n_; }
    std::int64_t edge_count() const { return m_; }

    std::span<const Vertex> neighbors(Vertex v) const {
        return {adj_.data() + offsets_[v], adj_.data() + offsets_[v + 1]};
    }

    int degree(Vertex v) const {
        return static_cast<int>(offsets_[v + 1] - offsets_[v]);
    }

    bool has_edge(Vertex u, Vertex v) const;

    bool is_connected() const;

    // All edges, each once, with u < v, lexicographically sorted.
    std::vector<Edge> edges() const;

    // Induced subgraph on `keep` (sorted ascending); vertices are renumbered
    // 0..|keep|-1 in that order.
    Graph induced(const std::vector<Vertex>& keep) const;

private:
    Vertex n_ = 0;
    std::int64_t m_ = 0;
    std::vector<std::int64_t> offsets_;
    std::vector<Vertex> adj_;
};

constexpr int kUnreachable = -1;

// Hop distances from one source. Unreachable vertices carry kUnreachable,
// a sentinel that never participates in arithmetic.
struct DistanceVector {
    Vertex source = 0;
    std::vector<int> dist;

    int operator[](Vertex v) const { return dist[v]; }
    bool reachable(Vertex v) const { return dist[v] != kUnreachable; }
};

DistanceVector bfs(const Graph& g, Vertex source, SearchStats* stats = nullptr);

// dist(v) = min over sources s of d(s,v).
DistanceVector multi_source_bfs(const Graph& g, const std::vector<Vertex>& sources,
                                SearchStats* stats = nullptr);
DistanceVector multi_source_bfs(const Graph& g, const VertexSet& sources,
                                SearchStats* stats = nullptr);

struct EccentricityTable {
    std::vector<int> ecc;
    int diameter = 0;
    int radius = 0;
    Edge diametral_pair{0, 0};
};

// The n-BFS baseline: exact eccentricities, diameter, radius, and one
// diametral pair. Requires a connected graph.
EccentricityTable eccentricity_oracle(const Graph& g, SearchStats* stats = nullptr);

// Connected components of the subgraph induced by V \ removed, listed in
// order of their smallest vertex.
std::vector<VertexSet> components_after_removing(const Graph& g, const VertexSet& removed);

// Cheap variant of the above when only the count matters.
int count_components_after_removing(const Graph& g, const VertexSet& removed);

// True iff w lies on a shortest u-v path, given distance vectors from u and v.
bool interval_test(const Graph& g, Vertex u, Vertex v, Vertex w,
                   const DistanceVector& du, const DistanceVector& dv);

// Deterministic shortest path from `from` to `to`: steps to the smallest-id
// neighbor strictly closer to `to` (per `dist_to`, a BFS from `to`).
std::vector<Vertex> shortest_path(const Graph& g, Vertex from, Vertex to,
                                  const DistanceVector& dist_to);

VertexSet closed_neighborhood(const Graph& g, Vertex v);
VertexSet closed_neighborhood(const Graph& g, const VertexSet& s);

} // namespace extremal

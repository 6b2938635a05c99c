#include "extremal/graph.hpp"

#include <algorithm>
#include <string>

namespace extremal {

Graph Graph::from_edges(Vertex n, const std::vector<Edge>& edges) {
    if (n < 0) throw input_error("vertex count must be non-negative");
    Graph g;
    g.n_ = n;
    g.m_ = static_cast<std::int64_t>(edges.size());
    std::vector<int> deg(n, 0);
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw input_error("edge endpoint out of range: " + std::to_string(u) + " " +
                              std::to_string(v));
        if (u == v) throw input_error("self-loop at vertex " + std::to_string(u));
        ++deg[u];
        ++deg[v];
    }
    g.offsets_.assign(n + 1, 0);
    for (Vertex v = 0; v < n; ++v) g.offsets_[v + 1] = g.offsets_[v] + deg[v];
    g.adj_.resize(static_cast<std::size_t>(2 * g.m_));
    std::vector<std::int64_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
    for (auto [u, v] : edges) {
        g.adj_[cursor[u]++] = v;
        g.adj_[cursor[v]++] = u;
    }
    for (Vertex v = 0; v < n; ++v) {
        auto begin = g.adj_.begin() + g.offsets_[v];
        auto end = g.adj_.begin() + g.offsets_[v + 1];
        std::sort(begin, end);
        if (std::adjacent_find(begin, end) != end)
            throw input_error("duplicate edge incident to vertex " + std::to_string(v));
    }
    return g;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
    auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

bool Graph::is_connected() const {
    if (n_ <= 1) return true;
    DistanceVector d = bfs(*this, 0);
    for (Vertex v = 0; v < n_; ++v)
        if (!d.reachable(v)) return false;
    return true;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(static_cast<std::size_t>(m_));
    for (Vertex u = 0; u < n_; ++u)
        for (Vertex v : neighbors(u))
            if (u < v) out.emplace_back(u, v);
    return out;
}

Graph Graph::induced(const std::vector<Vertex>& keep) const {
    std::vector<Vertex> id(n_, -1);
    for (std::size_t i = 0; i < keep.size(); ++i) id[keep[i]] = static_cast<Vertex>(i);
    std::vector<Edge> es;
    for (Vertex u : keep)
        for (Vertex v : neighbors(u))
            if (id[v] >= 0 && u < v) es.emplace_back(id[u], id[v]);
    return from_edges(static_cast<Vertex>(keep.size()), es);
}

DistanceVector bfs(const Graph& g, Vertex source, SearchStats* stats) {
    Vertex n = g.vertex_count();
    if (source < 0 || source >= n)
        throw input_error("bfs source out of range: " + std::to_string(source));
    DistanceVector out;
    out.source = source;
    out.dist.assign(n, kUnreachable);
    std::vector<Vertex> queue;
    queue.reserve(n);
    queue.push_back(source);
    out.dist[source] = 0;
    std::int64_t touched = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        Vertex v = queue[head];
        ++touched;
        for (Vertex w : g.neighbors(v)) {
            ++touched;
            if (out.dist[w] == kUnreachable) {
                out.dist[w] = out.dist[v] + 1;
                queue.push_back(w);
            }
        }
    }
    if (stats) stats->add_run(touched);
    return out;
}

static DistanceVector multi_source_bfs_impl(const Graph& g, const std::vector<Vertex>& sources,
                                            SearchStats* stats) {
    if (sources.empty()) throw input_error("multi_source_bfs: empty source set");
    Vertex n = g.vertex_count();
    DistanceVector out;
    out.source = sources.front();
    out.dist.assign(n, kUnreachable);
    std::vector<Vertex> queue;
    queue.reserve(n);
    for (Vertex s : sources) {
        if (s < 0 || s >= n) throw input_error("multi_source_bfs: source out of range");
        if (out.dist[s] == kUnreachable) {
            out.dist[s] = 0;
            queue.push_back(s);
        }
    }
    std::int64_t touched = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        Vertex v = queue[head];
        ++touched;
        for (Vertex w : g.neighbors(v)) {
            ++touched;
            if (out.dist[w] == kUnreachable) {
                out.dist[w] = out.dist[v] + 1;
                queue.push_back(w);
            }
        }
    }
    if (stats) stats->add_run(touched);
    return out;
}

DistanceVector multi_source_bfs(const Graph& g, const std::vector<Vertex>& sources,
                                SearchStats* stats) {
    return multi_source_bfs_impl(g, sources, stats);
}

DistanceVector multi_source_bfs(const Graph& g, const VertexSet& sources, SearchStats* stats) {
    return multi_source_bfs_impl(g, sources.to_vector(), stats);
}

EccentricityTable eccentricity_oracle(const Graph& g, SearchStats* stats) {
    Vertex n = g.vertex_count();
    if (n == 0) throw input_error("eccentricity_oracle: empty graph");
    EccentricityTable t;
    t.ecc.assign(n, 0);
    t.diameter = 0;
    t.radius = 0;
    {
        DistanceVector d0 = bfs(g, 0, stats);
        for (Vertex v = 0; v < n; ++v)
            if (!d0.reachable(v))
                throw input_error("eccentricity_oracle: graph is disconnected (vertices 0 and " +
                                  std::to_string(v) + " are separated)");
    }
    t.radius = n;  // shrinks below
    for (Vertex s = 0; s < n; ++s) {
        DistanceVector d = bfs(g, s, stats);
        int e = 0;
        Vertex far = s;
        for (Vertex v = 0; v < n; ++v) {
            if (d.dist[v] > e) {
                e = d.dist[v];
                far = v;
            }
        }
        t.ecc[s] = e;
        if (e > t.diameter) {
            t.diameter = e;
            t.diametral_pair = {s, far};
        }
        t.radius = std::min(t.radius, e);
    }
    return t;
}

std::vector<VertexSet> components_after_removing(const Graph& g, const VertexSet& removed) {
    Vertex n = g.vertex_count();
    std::vector<VertexSet> out;
    std::vector<char> seen(n, 0);
    std::vector<Vertex> queue;
    for (Vertex s = 0; s < n; ++s) {
        if (seen[s] || removed.contains(s)) continue;
        VertexSet comp(n);
        queue.clear();
        queue.push_back(s);
        seen[s] = 1;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            Vertex v = queue[head];
            comp.insert(v);
            for (Vertex w : g.neighbors(v)) {
                if (!seen[w] && !removed.contains(w)) {
                    seen[w] = 1;
                    queue.push_back(w);
                }
            }
        }
        out.push_back(std::move(comp));
    }
    return out;
}

int count_components_after_removing(const Graph& g, const VertexSet& removed) {
    Vertex n = g.vertex_count();
    std::vector<char> seen(n, 0);
    std::vector<Vertex> queue;
    int count = 0;
    for (Vertex s = 0; s < n; ++s) {
        if (seen[s] || removed.contains(s)) continue;
        ++count;
        queue.clear();
        queue.push_back(s);
        seen[s] = 1;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            Vertex v = queue[head];
            for (Vertex w : g.neighbors(v)) {
                if (!seen[w] && !removed.contains(w)) {
                    seen[w] = 1;
                    queue.push_back(w);
                }
            }
        }
    }
    return count;
}

bool interval_test(const Graph&, Vertex, Vertex v, Vertex w, const DistanceVector& du,
                   const DistanceVector& dv) {
    if (!du.reachable(v) || !du.reachable(w) || !dv.reachable(w)) return false;
    return du.dist[v] == du.dist[w] + dv.dist[w];
}

std::vector<Vertex> shortest_path(const Graph& g, Vertex from, Vertex to,
                                  const DistanceVector& dist_to) {
    if (!dist_to.reachable(from))
        throw input_error("shortest_path: endpoints are disconnected");
    std::vector<Vertex> path;
    path.reserve(dist_to.dist[from] + 1);
    Vertex cur = from;
    path.push_back(cur);
    while (cur != to) {
        Vertex next = -1;
        for (Vertex w : g.neighbors(cur)) {
            if (dist_to.dist[w] == dist_to.dist[cur] - 1) {
                next = w;
                break;  // neighbors ascend, so this is the smallest id
            }
        }
        cur = next;
        path.push_back(cur);
    }
    return path;
}

VertexSet closed_neighborhood(const Graph& g, Vertex v) {
    VertexSet s(g.vertex_count());
    s.insert(v);
    for (Vertex w : g.neighbors(v)) s.insert(w);
    return s;
}

VertexSet closed_neighborhood(const Graph& g, const VertexSet& seed) {
    VertexSet s(g.vertex_count());
    seed.for_each([&](Vertex v) {
        s.insert(v);
        for (Vertex w : g.neighbors(v)) s.insert(w);
    });
    return s;
}

} // namespace extremal

#include "extremal/lexbfs.hpp"

#include <algorithm>

#include "extremal/partition.hpp"

namespace extremal {

LexOrder lexbfs(const Graph& g, Vertex start, SearchStats* stats) {
    Vertex n = g.vertex_count();
    if (start < 0 || start >= n)
        throw input_error("lexbfs: start vertex out of range");

    // Start vertex in its own front group enforces it as first pick.
    std::vector<Vertex> rest;
    rest.reserve(n - 1);
    for (Vertex v = 0; v < n; ++v)
        if (v != start) rest.push_back(v);
    VertexPartition part(n, {{start}, rest});

    LexOrder ord;
    ord.sigma_.assign(n + 1, -1);
    ord.number.assign(n, 0);
    std::vector<char> labeled(n, 0);
    std::int64_t touched = 0;
    for (int num = n; num >= 1; --num) {
        Vertex v = part.front_vertex();
        // On a connected graph every pick after the first has a numbered
        // neighbor; an unlabeled pick means a fresh component.
        if (num < n && !labeled[v]) throw input_error("lexbfs: graph is disconnected");
        part.remove(v);
        ord.sigma_[num] = v;
        ord.number[v] = num;
        ++touched;
        // Unvisited neighbors gain this number in their label; inside the
        // partition that means they outrank their current group.
        for (Vertex w : g.neighbors(v)) {
            ++touched;
            if (part.contains(w)) {
                part.move_to_front_sibling(w, num);
                labeled[w] = 1;
            }
        }
    }
    if (stats) stats->add_run(touched + part.ops());
    return ord;
}

bool verify_lexorder(const Graph& g, const LexOrder& ord) {
    Vertex n = g.vertex_count();
    if (static_cast<Vertex>(ord.sigma_.size()) != n + 1) return false;
    {
        std::vector<char> seen(n, 0);
        for (int i = 1; i <= n; ++i) {
            Vertex v = ord.sigma_[i];
            if (v < 0 || v >= n || seen[v]) return false;
            seen[v] = 1;
            if (ord.number[v] != i) return false;
        }
    }
    // Replay: labels are lists of already-assigned numbers, decreasing.
    std::vector<std::vector<int>> label(n);
    std::vector<char> numbered(n, 0);
    for (int num = n; num >= 1; --num) {
        Vertex v = ord.sigma_[num];
        for (Vertex w = 0; w < n; ++w) {
            if (numbered[w] || w == v) continue;
            if (std::lexicographical_compare(label[v].begin(), label[v].end(),
                                             label[w].begin(), label[w].end()))
                return false;  // some unnumbered vertex had a larger label
        }
        numbered[v] = 1;
        for (Vertex w : g.neighbors(v))
            if (!numbered[w]) label[w].push_back(num);
    }
    return true;
}

std::vector<int> label_view(const Graph& g, const LexOrder& ord, Vertex u, Vertex v) {
    if (ord.number[u] > ord.number[v])
        throw contract_error("label_view: u must not be numbered after v");
    std::vector<int> out;
    for (Vertex w : g.neighbors(u))
        if (ord.number[w] > ord.number[v]) out.push_back(ord.number[w]);
    std::sort(out.rbegin(), out.rend());
    return out;
}

DoubleSweep double_sweep(const Graph& g, SearchStats* stats) {
    if (g.vertex_count() < 2) throw input_error("double_sweep: need at least two vertices");
    DoubleSweep out;
    out.x1 = lexbfs(g, 0, stats).last();
    out.x2 = lexbfs(g, out.x1, stats).last();
    DistanceVector from_x2 = bfs(g, out.x2, stats);
    out.dist_x1_x2 = from_x2.dist[out.x1];
    Vertex cur = out.x1;
    for (int step = 0; step < out.dist_x1_x2 / 2; ++step) {
        for (Vertex w : g.neighbors(cur)) {
            if (from_x2.dist[w] == from_x2.dist[cur] - 1) {
                cur = w;
                break;
            }
        }
    }
    out.c = cur;
    return out;
}

bool is_simplicial(const Graph& g, Vertex v) {
    std::vector<char> mark(g.vertex_count(), 0);
    for (Vertex w : g.neighbors(v)) mark[w] = 1;
    int need = g.degree(v) - 1;
    for (Vertex w : g.neighbors(v)) {
        int count = 0;
        for (Vertex z : g.neighbors(w))
            if (mark[z]) ++count;
        if (count < need) return false;
    }
    return true;
}

ChordalityResult recognize_chordal(const Graph& g, SearchStats* stats) {
    Vertex n = g.vertex_count();
    ChordalityResult out;
    if (n == 0) return out;
    LexOrder ord = lexbfs(g, 0, stats);

    // Eliminate sigma(1), sigma(2), ...; each vertex's later-numbered
    // neighborhood must be a clique, checked by the parent-subset test.
    std::vector<char> mark(n, 0);
    for (int i = 1; i <= n; ++i) {
        Vertex v = ord.sigma_[i];
        Vertex parent = -1;
        int best = n + 1;
        for (Vertex w : g.neighbors(v)) {
            if (ord.number[w] > i && ord.number[w] < best) {
                best = ord.number[w];
                parent = w;
            }
        }
        if (parent < 0) continue;
        for (Vertex w : g.neighbors(parent)) mark[w] = 1;
        mark[parent] = 1;
        bool ok = true;
        for (Vertex w : g.neighbors(v))
            if (ord.number[w] > i && !mark[w]) ok = false;
        for (Vertex w : g.neighbors(parent)) mark[w] = 0;
        mark[parent] = 0;
        if (!ok) return out;
    }
    out.chordal = true;
    out.peo.assign(ord.sigma_.begin() + 1, ord.sigma_.end());
    return out;
}

} // namespace extremal

#include "extremal/modular.hpp"

#include <algorithm>
#include <numeric>

namespace extremal {

ModuleWitness is_module(const Graph& g, const VertexSet& members) {
    if (members.empty()) throw input_error("is_module: empty set");
    Vertex n = g.vertex_count();
    int size = members.size();
    for (Vertex x = 0; x < n; ++x) {
        if (members.contains(x)) continue;
        int hits = 0;
        for (Vertex w : g.neighbors(x))
            if (members.contains(w)) ++hits;
        if (hits != 0 && hits != size) return {false, x};
    }
    return {true, -1};
}

std::vector<std::vector<Vertex>> twin_classes(const Graph& g) {
    Vertex n = g.vertex_count();
    // Group by open neighborhood (false twins), then by closed neighborhood
    // (true twins), and merge: the twin relation is the union of the two.
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](Vertex v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    auto unite = [&](Vertex a, Vertex b) { parent[find(a)] = find(b); };

    auto group_by_signature = [&](bool closed) {
        std::vector<std::vector<Vertex>> sigs(n);
        for (Vertex v = 0; v < n; ++v) {
            auto nb = g.neighbors(v);
            sigs[v].assign(nb.begin(), nb.end());
            if (closed) {
                sigs[v].push_back(v);
                std::inplace_merge(sigs[v].begin(), sigs[v].end() - 1, sigs[v].end());
            }
        }
        std::vector<Vertex> order(n);
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(),
                  [&](Vertex a, Vertex b) { return sigs[a] < sigs[b]; });
        for (Vertex i = 1; i < n; ++i)
            if (sigs[order[i]] == sigs[order[i - 1]]) unite(order[i], order[i - 1]);
    };
    group_by_signature(false);
    group_by_signature(true);

    std::vector<std::vector<Vertex>> classes(n);
    for (Vertex v = 0; v < n; ++v) classes[find(v)].push_back(v);
    std::vector<std::vector<Vertex>> out;
    for (Vertex v = 0; v < n; ++v)
        if (!classes[v].empty()) out.push_back(std::move(classes[v]));
    return out;
}

std::vector<std::vector<Vertex>> complement_components(const Graph& g) {
    Vertex n = g.vertex_count();
    // BFS in the complement using a shrinking pool of unvisited vertices:
    // expanding v moves every pooled non-neighbor of v into the component.
    std::vector<Vertex> pool(n);
    std::iota(pool.begin(), pool.end(), 0);
    std::vector<char> in_pool(n, 1), mark(n, 0);
    std::vector<std::vector<Vertex>> comps;
    std::vector<Vertex> queue;
    while (!pool.empty()) {
        Vertex seed = pool.back();
        pool.pop_back();
        in_pool[seed] = 0;
        comps.push_back({seed});
        queue.assign(1, seed);
        for (std::size_t head = 0; head < queue.size(); ++head) {
            Vertex v = queue[head];
            for (Vertex w : g.neighbors(v)) mark[w] = 1;
            std::size_t keep = 0;
            for (std::size_t i = 0; i < pool.size(); ++i) {
                Vertex w = pool[i];
                if (mark[w]) {
                    pool[keep++] = w;
                } else {
                    in_pool[w] = 0;
                    comps.back().push_back(w);
                    queue.push_back(w);
                }
            }
            pool.resize(keep);
            for (Vertex w : g.neighbors(v)) mark[w] = 0;
        }
        std::sort(comps.back().begin(), comps.back().end());
    }
    std::sort(comps.begin(), comps.end());
    return comps;
}

std::vector<std::vector<Vertex>> maximal_modules_excluding(const Graph& g, Vertex v0) {
    Vertex n = g.vertex_count();
    // Refine {N(v0), rest} by single-vertex pivots until every group is
    // uniform toward every vertex outside it. The stable partition is the
    // family of maximal modules avoiding v0.
    std::vector<int> group_of(n, -1);
    std::vector<std::vector<Vertex>> groups;
    {
        std::vector<Vertex> nb, rest;
        std::vector<char> adj(n, 0);
        for (Vertex w : g.neighbors(v0)) adj[w] = 1;
        for (Vertex w = 0; w < n; ++w) {
            if (w == v0) continue;
            (adj[w] ? nb : rest).push_back(w);
        }
        for (auto& grp : {nb, rest}) {
            if (grp.empty()) continue;
            for (Vertex w : grp) group_of[w] = static_cast<int>(groups.size());
            groups.push_back(grp);
        }
    }

    std::vector<int> hit_count(groups.size(), 0);
    std::vector<char> adj(n, 0);
    bool changed = true;
    while (changed) {
        changed = false;
        for (Vertex s = 0; s < n; ++s) {
            if (s == v0) continue;
            // Collect hit groups of pivot s; split each group hit partially.
            std::vector<int> hit_groups;
            for (Vertex w : g.neighbors(s)) {
                if (w == v0) continue;
                int gid = group_of[w];
                if (hit_count[gid]++ == 0) hit_groups.push_back(gid);
            }
            bool marked = false;
            for (int gid : hit_groups) {
                int hits = hit_count[gid];
                hit_count[gid] = 0;
                if (gid == group_of[s]) continue;  // pivot can't split its own group
                if (hits == static_cast<int>(groups[gid].size())) continue;
                // Split into non-neighbors (stay) and neighbors (new group).
                if (!marked) {
                    for (Vertex w : g.neighbors(s)) adj[w] = 1;
                    marked = true;
                }
                std::vector<Vertex> stay, moved;
                for (Vertex w : groups[gid]) (adj[w] ? moved : stay).push_back(w);
                groups[gid] = std::move(stay);
                int fresh = static_cast<int>(groups.size());
                for (Vertex w : moved) group_of[w] = fresh;
                groups.push_back(std::move(moved));
                hit_count.push_back(0);
                changed = true;
            }
            if (marked)
                for (Vertex w : g.neighbors(s)) adj[w] = 0;
        }
    }
    for (auto& grp : groups) std::sort(grp.begin(), grp.end());
    std::sort(groups.begin(), groups.end());
    return groups;
}

namespace {

// Children of the modular decomposition root for a connected graph whose
// complement is also connected (the prime-root case). The children other
// than the one holding v0 are exactly the maximal v0-avoiding modules that
// survive the arc closure below; the child holding v0 is v0 plus the rest.
std::vector<std::vector<Vertex>> prime_root_children(const Graph& g, Vertex v0) {
    Vertex n = g.vertex_count();
    auto parts = maximal_modules_excluding(g, v0);
    int p = static_cast<int>(parts.size());
    std::vector<int> part_of(n, -1);
    for (int i = 0; i < p; ++i)
        for (Vertex w : parts[i]) part_of[w] = i;

    // Arc P -> Q when some q in Q distinguishes P from v0; a module
    // containing v0 and all of P must then swallow Q as well.
    std::vector<char> adj0(n, 0);
    for (Vertex w : g.neighbors(v0)) adj0[w] = 1;
    std::vector<std::vector<int>> arcs(p);
    for (int i = 0; i < p; ++i) {
        Vertex rep = parts[i][0];
        std::vector<char> mark(p, 0);
        for (Vertex q = 0; q < n; ++q) {
            if (q == v0 || part_of[q] == i) continue;
            if (g.has_edge(q, rep) != static_cast<bool>(adj0[q])) {
                if (!mark[part_of[q]]) {
                    mark[part_of[q]] = 1;
                    arcs[i].push_back(part_of[q]);
                }
            }
        }
    }

    // The unique maximal proper module containing v0 is the complement of
    // the minimal predecessor-closed set of parts, i.e. of the unique
    // source component of the arc digraph.
    std::vector<int> comp(p, -1), order, low(p), idx(p, -1), stk;
    int counter = 0, ncomp = 0;
    // Iterative Tarjan SCC.
    std::vector<std::pair<int, std::size_t>> frame;
    std::vector<char> on_stack(p, 0);
    for (int s = 0; s < p; ++s) {
        if (idx[s] != -1) continue;
        frame.push_back({s, 0});
        while (!frame.empty()) {
            auto& [v, ei] = frame.back();
            if (ei == 0) {
                idx[v] = low[v] = counter++;
                stk.push_back(v);
                on_stack[v] = 1;
            }
            bool descended = false;
            while (ei < arcs[v].size()) {
                int w = arcs[v][ei++];
                if (idx[w] == -1) {
                    frame.push_back({w, 0});
                    descended = true;
                    break;
                }
                if (on_stack[w]) low[v] = std::min(low[v], idx[w]);
            }
            if (descended) continue;
            if (low[v] == idx[v]) {
                while (true) {
                    int w = stk.back();
                    stk.pop_back();
                    on_stack[w] = 0;
                    comp[w] = ncomp;
                    if (w == v) break;
                }
                ++ncomp;
            }
            int finished = v;
            frame.pop_back();
            if (!frame.empty()) low[frame.back().first] = std::min(low[frame.back().first], low[finished]);
        }
    }
    std::vector<char> has_inbound(ncomp, 0);
    for (int i = 0; i < p; ++i)
        for (int j : arcs[i])
            if (comp[i] != comp[j]) has_inbound[comp[j]] = 1;
    int source = -1;
    for (int c = 0; c < ncomp; ++c) {
        if (!has_inbound[c]) {
            if (source != -1)
                throw contract_error("modular decomposition: root is not prime");
            source = c;
        }
    }

    std::vector<std::vector<Vertex>> children;
    std::vector<Vertex> with_v0{v0};
    for (int i = 0; i < p; ++i) {
        if (comp[i] == source)
            children.push_back(parts[i]);
        else
            with_v0.insert(with_v0.end(), parts[i].begin(), parts[i].end());
    }
    std::sort(with_v0.begin(), with_v0.end());
    children.push_back(std::move(with_v0));
    std::sort(children.begin(), children.end());
    return children;
}

std::vector<std::vector<Vertex>> root_children(const Graph& g) {
    Vertex n = g.vertex_count();
    if (n == 1) return {{0}};
    auto cocomps = complement_components(g);
    if (cocomps.size() >= 2) return cocomps;
    return prime_root_children(g, 0);
}

} // namespace

PrimalityResult is_prime(const Graph& g) {
    Vertex n = g.vertex_count();
    if (n <= 2) return {true, {}};
    if (!g.is_connected()) throw input_error("is_prime: graph is disconnected");
    auto children = root_children(g);
    if (children.size() == 1) return {false, {}};  // unreachable for connected g, n >= 2
    for (auto& c : children)
        if (c.size() >= 2) return {false, c};
    // All classes are singletons. A complete graph still has pair modules.
    if (2 * g.edge_count() == static_cast<std::int64_t>(n) * (n - 1))
        return {false, {0, 1}};
    return {true, {}};
}

QuotientGraph quotient_graph(const Graph& g) {
    if (!g.is_connected()) throw input_error("quotient_graph: graph is disconnected");
    QuotientGraph q;
    q.classes = root_children(g);
    Vertex k = static_cast<Vertex>(q.classes.size());
    q.classmap.assign(g.vertex_count(), -1);
    q.representative.resize(k);
    for (Vertex c = 0; c < k; ++c) {
        q.representative[c] = q.classes[c][0];
        for (Vertex v : q.classes[c]) q.classmap[v] = c;
    }
    std::vector<Edge> es;
    for (Vertex a = 0; a < k; ++a)
        for (Vertex b = a + 1; b < k; ++b)
            if (g.has_edge(q.representative[a], q.representative[b])) es.emplace_back(a, b);
    q.quotient = Graph::from_edges(k, es);
    return q;
}

std::vector<int> lift_eccentricities(const Graph& g, const QuotientGraph& q,
                                     const std::vector<int>& quotient_ecc) {
    Vertex n = g.vertex_count();
    std::vector<int> out(n, 0);
    std::vector<char> mark(n, 0);
    for (std::size_t c = 0; c < q.classes.size(); ++c) {
        const auto& cls = q.classes[c];
        for (Vertex v : cls) mark[v] = 1;
        for (Vertex v : cls) {
            int intra = 0;
            if (cls.size() >= 2) {
                int inside = 0;
                for (Vertex w : g.neighbors(v))
                    if (mark[w]) ++inside;
                intra = (inside == static_cast<int>(cls.size()) - 1) ? 1 : 2;
            }
            out[v] = std::max(quotient_ecc[c], intra);
        }
        for (Vertex v : cls) mark[v] = 0;
    }
    return out;
}

} // namespace extremal

#include "extremal/diameter.hpp"

#include <algorithm>

#include "extremal/hyperbolicity.hpp"
#include "extremal/lexbfs.hpp"
#include "extremal/modular.hpp"

namespace extremal {

int exact_cutoff_from_alpha(int alpha) { return 42 * alpha - 11; }
int approx_cutoff_from_alpha(int alpha) { return 66 * alpha - 19; }
int exact_cutoff_from_delta_star(int ds) { return 14 * ds + 3; }
int approx_cutoff_from_delta_star(int ds) { return 22 * ds + 3; }

DominatingPathSystem build_dominating_path_system(const Graph& g, SearchStats* stats) {
    Vertex n = g.vertex_count();
    if (n < 3) throw contract_error("build_dominating_path_system: need n >= 3");
    DoubleSweep sweep = double_sweep(g, stats);
    DominatingPathSystem sys;
    sys.center = sweep.c;
    DistanceVector from_c = bfs(g, sweep.c, stats);

    auto add_path = [&](Vertex x) {
        // Walk from x toward c on the cached center distances; one BFS
        // serves every path.
        std::vector<Vertex> path = shortest_path(g, x, sweep.c, from_c);
        std::reverse(path.begin(), path.end());
        sys.extremities.push_back(x);
        sys.paths.push_back(path);
        for (Vertex v : path) sys.hull.insert(v);
    };
    sys.hull = VertexSet(n);
    add_path(sweep.x1);
    add_path(sweep.x2);

    VertexSet covered = closed_neighborhood(g, sys.hull);
    while (covered.size() < n) {
        Vertex x = next_extremity(g, sweep.c, covered, stats);
        add_path(x);
        for (Vertex v : sys.paths.back()) {
            covered.insert(v);
            for (Vertex w : g.neighbors(v)) covered.insert(w);
        }
    }
    return sys;
}

namespace {

// Depth-1 and depth-2 vertices on the tree path from root to each vertex,
// where parent[] encodes a BFS tree (parent = smallest-id neighbor one
// layer closer to the root).
struct ShallowAncestors {
    std::vector<Vertex> depth1, depth2;
};

ShallowAncestors shallow_ancestors(const Graph& g, const DistanceVector& dist) {
    Vertex n = g.vertex_count();
    std::vector<Vertex> order(n);
    for (Vertex v = 0; v < n; ++v) order[v] = v;
    std::sort(order.begin(), order.end(),
              [&](Vertex a, Vertex b) { return dist.dist[a] < dist.dist[b]; });
    ShallowAncestors out;
    out.depth1.assign(n, -1);
    out.depth2.assign(n, -1);
    for (Vertex v : order) {
        int dv = dist.dist[v];
        if (dv <= 0) continue;
        Vertex parent = -1;
        for (Vertex w : g.neighbors(v)) {
            if (dist.dist[w] == dv - 1) {
                parent = w;
                break;
            }
        }
        out.depth1[v] = (dv == 1) ? v : out.depth1[parent];
        if (dv >= 2) out.depth2[v] = (dv == 2) ? v : out.depth2[parent];
    }
    return out;
}

TransitiveSet build_clean_set_impl(const Graph& g, Vertex u, Vertex v,
                                   const DistanceVector& dist_u, const DistanceVector& dist_v,
                                   SearchStats*) {
    Vertex n = g.vertex_count();
    int e = 0;
    for (Vertex w = 0; w < n; ++w) e = std::max(e, dist_u.dist[w]);
    if (dist_u.dist[v] != e)
        throw contract_error("build_clean_set: v is not at maximum distance from u");

    TransitiveSet out;
    out.anchor = u;
    out.members = VertexSet(n);
    if (g.has_edge(u, v)) {
        out.members.insert(v);
        return out;
    }

    // Everything short of maximum distance from u can never beat v.
    for (Vertex w = 0; w < n; ++w)
        if (dist_u.dist[w] < e) out.members.insert(w);

    // X: vertices of N[u] that v sees at full distance e(u). The second
    // edges of the BFS-tree paths from v toward X are what a surviving
    // candidate must touch.
    std::vector<Vertex> x_set;
    if (dist_v.dist[u] == e) x_set.push_back(u);
    for (Vertex w : g.neighbors(u))
        if (dist_v.dist[w] == e) x_set.push_back(w);

    ShallowAncestors anc = shallow_ancestors(g, dist_v);
    std::vector<Edge> tree_edges;  // (p, q) with p adjacent to v
    for (Vertex x : x_set) {
        // e >= 2, so both ancestors exist.
        tree_edges.emplace_back(anc.depth1[x], anc.depth2[x]);
    }
    std::sort(tree_edges.begin(), tree_edges.end());
    tree_edges.erase(std::unique(tree_edges.begin(), tree_edges.end()), tree_edges.end());

    // Candidates: far vertices whose neighborhoods cover all of v's
    // shortest-path-relevant neighbors.
    std::vector<Vertex> gate;  // N(v) on a shortest u-v path
    for (Vertex w : g.neighbors(v))
        if (dist_u.dist[w] + dist_v.dist[w] == dist_u.dist[v]) gate.push_back(w);
    std::vector<int> cover(n, 0);
    for (Vertex w : gate)
        for (Vertex z : g.neighbors(w)) ++cover[z];
    std::vector<Vertex> candidates;
    for (Vertex z = 0; z < n; ++z)
        if (dist_u.dist[z] == e && cover[z] == static_cast<int>(gate.size()))
            candidates.push_back(z);

    // Keep candidates intercepting every tree edge (touching {p,q} with a
    // closed neighborhood). Count interceptions grouped by p.
    std::vector<int> intercepted(n, 0);
    std::vector<char> cand(n, 0), markp(n, 0);
    for (Vertex z : candidates) cand[z] = 1;
    std::size_t i = 0;
    while (i < tree_edges.size()) {
        Vertex p = tree_edges[i].first;
        std::size_t j = i;
        while (j < tree_edges.size() && tree_edges[j].first == p) ++j;
        int k = static_cast<int>(j - i);
        markp[p] = 1;
        for (Vertex z : g.neighbors(p)) markp[z] = 1;
        if (cand[p]) intercepted[p] += k;
        for (Vertex z : g.neighbors(p))
            if (cand[z]) intercepted[z] += k;
        for (; i < j; ++i) {
            Vertex q = tree_edges[i].second;
            if (cand[q] && !markp[q]) intercepted[q] += 1;
            for (Vertex z : g.neighbors(q))
                if (cand[z] && !markp[z]) intercepted[z] += 1;
        }
        markp[p] = 0;
        for (Vertex z : g.neighbors(p)) markp[z] = 0;
    }
    for (Vertex z : candidates)
        if (intercepted[z] == static_cast<int>(tree_edges.size())) out.members.insert(z);
    return out;
}

TransitiveSet build_discard_set_impl(const Graph& g, Vertex u, Vertex v,
                                     const DistanceVector& dist_u, const DistanceVector& dist_v,
                                     SearchStats* stats) {
    Vertex n = g.vertex_count();
    int e = 0;
    for (Vertex w = 0; w < n; ++w) e = std::max(e, dist_u.dist[w]);
    if (dist_u.dist[v] != e)
        throw contract_error("build_discard_set: v is not at maximum distance from u");
    if (e < 2)
        throw contract_error("build_discard_set: u has a universal neighborhood (e(u) < 2)");
    if (dist_v.dist[u] > e)
        throw contract_error("build_discard_set: N[u] reaches past e(u) from v");
    std::vector<Vertex> near;  // X' = N[u] at distance e(u)-1 from v
    if (dist_v.dist[u] == e - 1) near.push_back(u);
    for (Vertex w : g.neighbors(u)) {
        if (dist_v.dist[w] > e)
            throw contract_error("build_discard_set: N[u] reaches past e(u) from v");
        if (dist_v.dist[w] == e - 1) near.push_back(w);
    }
    // near is nonempty: the penultimate vertex of any shortest v-u path
    // lies in N[u] at distance e(u)-1 from v.

    TransitiveSet base = build_clean_set_impl(g, u, v, dist_u, dist_v, stats);
    DistanceVector dist_near = multi_source_bfs(g, near, stats);

    // Gate vertices of the near side: v's neighbors on shortest paths
    // toward X'; a kept borderline member must see all of them.
    std::vector<Vertex> gate;
    for (Vertex w : g.neighbors(v))
        if (dist_near.dist[w] == e - 2) gate.push_back(w);
    std::vector<int> cover(n, 0);
    for (Vertex w : gate)
        for (Vertex z : g.neighbors(w)) ++cover[z];

    TransitiveSet out;
    out.anchor = u;
    out.members = VertexSet(n);
    base.members.for_each([&](Vertex y) {
        int dy = dist_near.dist[y];
        if (dy <= e - 2)
            out.members.insert(y);
        else if (dy == e - 1 && cover[y] == static_cast<int>(gate.size()))
            out.members.insert(y);
    });
    return out;
}

} // namespace

TransitiveSet build_clean_set(const Graph& g, Vertex u, Vertex v, SearchStats* stats) {
    DistanceVector du = bfs(g, u, stats);
    DistanceVector dv = bfs(g, v, stats);
    return build_clean_set_impl(g, u, v, du, dv, stats);
}

TransitiveSet build_discard_set(const Graph& g, Vertex u, Vertex v, SearchStats* stats) {
    DistanceVector du = bfs(g, u, stats);
    DistanceVector dv = bfs(g, v, stats);
    return build_discard_set_impl(g, u, v, du, dv, stats);
}

LocalMaxEcc local_max_ecc(const Graph& g, Vertex u, SearchStats* stats) {
    Vertex n = g.vertex_count();
    DistanceVector dist_u = bfs(g, u, stats);
    int e = 0;
    Vertex far = u;
    for (Vertex w = 0; w < n; ++w) {
        if (dist_u.dist[w] == kUnreachable) throw input_error("local_max_ecc: disconnected");
        if (dist_u.dist[w] > e) {
            e = dist_u.dist[w];
            far = w;
        }
    }
    if (e < 2) throw contract_error("local_max_ecc: vertex is universal; graph not prime");

    int far_left = 0;  // |F(u) \ S|
    for (Vertex w = 0; w < n; ++w)
        if (dist_u.dist[w] == e) ++far_left;

    LocalMaxEcc out;
    VertexSet discarded(n);
    while (true) {
        Vertex v;
        if (out.iterations == 0) {
            v = lexbfs(g, u, stats).last();
        } else {
            TransitiveSet s{u, discarded};
            v = next_extremity(g, u, s, stats);
        }
        ++out.iterations;
        DistanceVector dist_v = bfs(g, v, stats);
        // Stop 1: v witnesses eccentricity e(u)+1 inside N[u].
        for (Vertex x : g.neighbors(u)) {
            if (dist_v.dist[x] == e + 1) {
                out.value = e + 1;
                out.witness = x;
                out.far_vertex = v;
                return out;
            }
        }
        TransitiveSet safe = build_discard_set_impl(g, u, v, dist_u, dist_v, stats);
        safe.members.for_each([&](Vertex w) {
            if (!discarded.contains(w)) {
                discarded.insert(w);
                if (dist_u.dist[w] == e) --far_left;
            }
        });
        // Stop 2: every far vertex proven safe, so nothing in N[u] can
        // exceed e(u).
        if (far_left == 0) {
            out.value = e;
            out.witness = u;
            out.far_vertex = far;
            return out;
        }
    }
}

EccEstimates approx_all_eccentricities_with_system(const Graph& g,
                                                   const DominatingPathSystem& sys, int cutoff,
                                                   SearchStats* stats) {
    if (cutoff < 1) throw input_error("approx_all_eccentricities: cutoff < 1");
    Vertex n = g.vertex_count();
    EccEstimates out;
    out.estimate.assign(n, 0);
    for (const auto& path : sys.paths) {
        int take = std::min<int>(cutoff, static_cast<int>(path.size()));
        for (int k = 0; k < take; ++k) {
            Vertex uvtx = path[path.size() - 1 - k];  // nearest the extremity first
            DistanceVector d = bfs(g, uvtx, stats);
            for (Vertex v = 0; v < n; ++v)
                out.estimate[v] = std::max(out.estimate[v], d.dist[v]);
        }
    }
    return out;
}

EccEstimates approx_all_eccentricities(const Graph& g, int cutoff, SearchStats* stats) {
    if (cutoff < 1) throw input_error("approx_all_eccentricities: cutoff < 1");
    DominatingPathSystem sys = build_dominating_path_system(g, stats);
    return approx_all_eccentricities_with_system(g, sys, cutoff, stats);
}

namespace {

// Degenerate short-circuit shared by the diameter entry points: graphs
// whose quotient is complete have diameter <= 2.
bool quotient_is_complete(const QuotientGraph& q) {
    Vertex k = q.quotient.vertex_count();
    return 2 * q.quotient.edge_count() == static_cast<std::int64_t>(k) * (k - 1);
}

int small_diameter(const Graph& g) {
    // Exact diameter for the diam <= 2 regime.
    Vertex n = g.vertex_count();
    if (n <= 1) return 0;
    return (2 * g.edge_count() == static_cast<std::int64_t>(n) * (n - 1)) ? 1 : 2;
}

Edge small_diameter_certificate(const Graph& g, int value) {
    Vertex n = g.vertex_count();
    if (value == 0) return {0, 0};
    if (value == 1) return {0, 1};
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (!g.has_edge(u, v)) return {u, v};
    throw contract_error("small_diameter_certificate: graph is complete");
}

} // namespace

DiameterResult exact_diameter(const Graph& g, const DiameterOptions& opt) {
    SearchStats search;
    if (!g.is_connected()) throw input_error("exact_diameter: graph is disconnected");
    Vertex n = g.vertex_count();
    DiameterResult out;
    if (n < 3) {
        out.value = n - 1;
        out.certificate = (n == 2) ? Edge{0, 1} : Edge{0, 0};
        out.stats.branch = "tiny";
        return out;
    }
    QuotientGraph q = quotient_graph(g);
    if (quotient_is_complete(q) || q.quotient.vertex_count() < 3) {
        out.value = small_diameter(g);
        out.certificate = small_diameter_certificate(g, out.value);
        out.stats.branch = "degenerate";
        return out;
    }

    const Graph& h = q.quotient;
    DominatingPathSystem sys = build_dominating_path_system(h, &search);
    int cutoff;
    if (opt.alpha) {
        if (*opt.alpha < 1) throw input_error("exact_diameter: alpha < 1");
        cutoff = exact_cutoff_from_alpha(*opt.alpha);
        out.stats.branch = "alpha";
    } else {
        DeltaStar ds = delta_star(h, sys, &search);
        cutoff = exact_cutoff_from_delta_star(ds.value);
        out.stats.delta_star = ds.value;
        out.stats.branch = "oblivious";
    }

    int best = 0;
    Edge best_pair{0, 0};
    int extremities_seen = static_cast<int>(sys.extremities.size());
    for (const auto& path : sys.paths) {
        int take = std::min<int>(cutoff, static_cast<int>(path.size()));
        for (int k = 0; k < take; ++k) {
            Vertex uvtx = path[path.size() - 1 - k];
            LocalMaxEcc lme = local_max_ecc(h, uvtx, &search);
            extremities_seen += lme.iterations;
            if (lme.value > best) {
                best = lme.value;
                best_pair = {lme.witness, lme.far_vertex};
            }
        }
    }
    out.value = best;
    out.certificate = {q.representative[best_pair.first], q.representative[best_pair.second]};
    // Re-verify the certificate on the input graph.
    DistanceVector check = bfs(g, out.certificate.first, &search);
    if (check.dist[out.certificate.second] != out.value)
        throw contract_error("exact_diameter: certificate failed re-verification");
    out.stats.search_runs = search.search_runs;
    out.stats.work = search.work;
    out.stats.cutoff = cutoff;
    out.stats.t = static_cast<int>(sys.extremities.size());
    out.stats.extremities_computed = extremities_seen;
    return out;
}

EccApproxResult approx_eccentricities(const Graph& g, const DiameterOptions& opt) {
    SearchStats search;
    if (!g.is_connected()) throw input_error("approx_eccentricities: graph is disconnected");
    Vertex n = g.vertex_count();
    EccApproxResult out;
    if (n < 3) {
        out.estimate.assign(n, n - 1);
        out.stats.branch = "tiny";
        return out;
    }
    QuotientGraph q = quotient_graph(g);
    std::vector<int> q_est;
    if (quotient_is_complete(q) || q.quotient.vertex_count() < 3) {
        q_est.assign(q.quotient.vertex_count(), q.quotient.vertex_count() == 1 ? 0 : 1);
        out.stats.branch = "degenerate";
    } else {
        const Graph& h = q.quotient;
        DominatingPathSystem sys = build_dominating_path_system(h, &search);
        int cutoff;
        if (opt.alpha) {
            if (*opt.alpha < 1) throw input_error("approx_eccentricities: alpha < 1");
            cutoff = approx_cutoff_from_alpha(*opt.alpha);
            out.stats.branch = "alpha";
        } else {
            DeltaStar ds = delta_star(h, sys, &search);
            cutoff = approx_cutoff_from_delta_star(ds.value);
            out.stats.delta_star = ds.value;
            out.stats.branch = "oblivious";
        }
        q_est = approx_all_eccentricities_with_system(h, sys, cutoff, &search).estimate;
        out.stats.cutoff = cutoff;
        out.stats.t = static_cast<int>(sys.extremities.size());
    }
    // The exact lift formula also preserves the +-1 band.
    out.estimate = lift_eccentricities(g, q, q_est);
    out.stats.search_runs = search.search_runs;
    out.stats.work = search.work;
    return out;
}

} // namespace extremal

#include "extremal/chordal.hpp"

#include <algorithm>

#include "extremal/lexbfs.hpp"
#include "extremal/modular.hpp"
#include "extremal/partition.hpp"

namespace extremal {

CentralVertex chordal_central_vertex(const Graph& g, SearchStats* stats) {
    Vertex n = g.vertex_count();
    CentralVertex out;
    if (n == 1) {
        out.vertex = 0;
        return out;
    }
    Vertex u = lexbfs(g, 0, stats).last();
    DistanceVector du = bfs(g, u, stats);
    int eu = 0;
    Vertex w = u;
    for (Vertex v = 0; v < n; ++v) {
        if (!du.reachable(v)) throw input_error("chordal_central_vertex: disconnected");
        if (du.dist[v] > eu) {
            eu = du.dist[v];
            w = v;
        }
    }
    // Evaluate eccentricities along one shortest u-w path; the center of a
    // chordal graph sits within it often enough that this usually wins.
    DistanceVector dw = bfs(g, w, stats);
    std::vector<Vertex> path = shortest_path(g, u, w, dw);
    int best_e = n;
    Vertex best = u;
    for (Vertex v : path) {
        DistanceVector d = bfs(g, v, stats);
        int e = *std::max_element(d.dist.begin(), d.dist.end());
        if (e < best_e) {
            best_e = e;
            best = v;
        }
    }
    // rad >= ceil(diam/2) >= ceil(e(u)/2); meeting the bound certifies.
    int lower = (eu + 1) / 2;
    if (best_e == lower) {
        out.vertex = best;
        out.ecc = best_e;
        return out;
    }
    // Certification failed: exact center via the n-BFS table.
    EccentricityTable t = eccentricity_oracle(g, stats);
    if (t.radius == best_e) {
        out.vertex = best;  // heuristic was right after all
        out.ecc = best_e;
        return out;
    }
    out.fallback = true;
    for (Vertex v = 0; v < n; ++v) {
        if (t.ecc[v] == t.radius) {
            out.vertex = v;
            out.ecc = t.radius;
            return out;
        }
    }
    throw contract_error("chordal_central_vertex: unreachable");
}

namespace {

DiameterResult domtarget_core(const Graph& g, Vertex c, SearchStats& search) {
    // Grow H from the center; each round finds a farthest extremity outside
    // N[H] and absorbs its path and whole neighborhood.
    Vertex n = g.vertex_count();
    DistanceVector from_c = bfs(g, c, &search);
    VertexSet hull(n);
    hull.insert(c);
    VertexSet covered = closed_neighborhood(g, c);
    DiameterResult out;
    int best = 0;
    Edge best_pair{c, c};
    int t = 0;
    while (covered.size() < n) {
        Vertex x = next_extremity(g, c, covered, &search);
        ++t;
        std::vector<Vertex> path = shortest_path(g, x, c, from_c);
        for (Vertex v : path) hull.insert(v);
        for (Vertex v : g.neighbors(x)) hull.insert(v);
        hull.for_each([&](Vertex v) {
            covered.insert(v);
            for (Vertex w : g.neighbors(v)) covered.insert(w);
        });
        DistanceVector dx = bfs(g, x, &search);
        for (Vertex v = 0; v < n; ++v) {
            if (dx.dist[v] > best) {
                best = dx.dist[v];
                best_pair = {x, v};
            }
        }
    }
    out.value = best;
    out.certificate = best_pair;
    out.stats.t = t;
    out.stats.extremities_computed = t;
    out.stats.promise_violated = best < 4;
    out.stats.search_runs = search.search_runs;
    out.stats.work = search.work;
    out.stats.branch = "domtarget";
    return out;
}

} // namespace

DiameterResult diameter_chordal_domtarget(const Graph& g, SearchStats* stats) {
    SearchStats local;
    SearchStats& search = stats ? *stats : local;
    if (!recognize_chordal(g, &search).chordal)
        throw input_error("diameter_chordal_domtarget: graph is not chordal");
    CentralVertex c = chordal_central_vertex(g, &search);
    DiameterResult out = domtarget_core(g, c.vertex, search);
    out.stats.center_fallback = c.fallback;
    return out;
}

LOrdering build_l_ordering(const Graph& g, Vertex x1) {
    Vertex n = g.vertex_count();
    if (!is_simplicial(g, x1))
        throw contract_error("build_l_ordering: x1 is not simplicial");
    LOrdering ord;
    ord.x1 = x1;
    ord.ell.assign(n, 0);
    ord.in_s.assign(n, 0);
    auto nb = g.neighbors(x1);
    ord.clique.assign(nb.begin(), nb.end());
    std::vector<char> in_c(n, 0);
    for (Vertex v : ord.clique) in_c[v] = 1;
    std::vector<Vertex> s;
    for (Vertex v = 0; v < n; ++v) {
        if (v == x1 || in_c[v]) continue;
        ord.in_s[v] = 1;
        s.push_back(v);
    }
    for (Vertex v : s) {
        bool dominated = false;
        for (Vertex w : g.neighbors(v)) {
            if (in_c[w]) {
                ++ord.ell[v];
                dominated = true;
            }
        }
        if (!dominated)
            throw contract_error("build_l_ordering: N(x1) is not dominating (e(x1) > 2)");
    }
    if (s.empty()) return ord;

    // Bucket S by ell ascending; that fixes the leading label. Then refine
    // by each ell-class in decreasing label order, splitting on how many
    // neighbors a vertex has in the class; fewer high labels sort earlier.
    int max_ell = 0;
    for (Vertex v : s) max_ell = std::max(max_ell, ord.ell[v]);
    std::vector<std::vector<Vertex>> by_ell(max_ell + 1);
    for (Vertex v : s) by_ell[ord.ell[v]].push_back(v);
    std::vector<std::vector<Vertex>> initial;
    for (int l = 0; l <= max_ell; ++l)
        if (!by_ell[l].empty()) initial.push_back(by_ell[l]);
    VertexPartition part(n, initial);

    std::vector<int> count(n, 0);
    int round = 0;
    for (int l = max_ell; l >= 0; --l) {
        const auto& cls = by_ell[l];
        if (cls.empty()) continue;
        std::vector<Vertex> hit;
        for (Vertex svtx : cls) {
            for (Vertex w : g.neighbors(svtx)) {
                if (!ord.in_s[w]) continue;
                if (count[w]++ == 0) hit.push_back(w);
            }
        }
        for (Vertex w : hit) part.move_to_counted_sibling(w, count[w], round);
        for (Vertex w : hit) count[w] = 0;
        ++round;
    }
    for (int gid = part.first_group(); gid >= 0; gid = part.next_group(gid)) {
        auto members = part.group_members(gid);
        std::sort(members.begin(), members.end());  // id tie-break
        ord.order.insert(ord.order.end(), members.begin(), members.end());
    }
    return ord;
}

std::vector<Vertex> reduce_to_independent(const Graph& g, const LOrdering& ord) {
    std::vector<char> discarded(g.vertex_count(), 0);
    std::vector<Vertex> out;
    for (Vertex v : ord.order) {
        if (discarded[v]) continue;
        out.push_back(v);
        for (Vertex w : g.neighbors(v))
            if (ord.in_s[w]) discarded[w] = 1;
    }
    return out;
}

namespace {

// gamma counters for a fixed u, per the counting scheme: processing each
// y in N[u] cap S bumps y's clique neighbors by one and under-labelled
// S* neighbors by the label gap.
struct GammaState {
    std::vector<std::int64_t> gamma;
    std::int64_t target = 0;
};

GammaState compute_gamma(const Graph& g, const LOrdering& ord, Vertex u,
                         const std::vector<char>& in_sstar) {
    GammaState st;
    st.gamma.assign(g.vertex_count(), 0);
    std::vector<char> in_c(g.vertex_count(), 0);
    for (Vertex v : ord.clique) in_c[v] = 1;
    auto process = [&](Vertex y) {
        st.target += ord.ell[y];
        for (Vertex z : g.neighbors(y))
            if (in_c[z]) ++st.gamma[z];
        if (y != u) {
            for (Vertex v : g.neighbors(y)) {
                if (v == u || !in_sstar[v]) continue;
                if (ord.ell[v] < ord.ell[y]) st.gamma[v] += ord.ell[y] - ord.ell[v];
            }
        }
    };
    process(u);
    for (Vertex y : g.neighbors(u))
        if (ord.in_s[y]) process(y);
    return st;
}

std::int64_t gamma_score(const Graph& g, const LOrdering& ord, const GammaState& st, Vertex v) {
    std::int64_t score = st.gamma[v];
    // V partitions into {x1}, C, S, so z in C iff z != x1 and z outside S.
    for (Vertex z : g.neighbors(v))
        if (z != ord.x1 && !ord.in_s[z]) score += st.gamma[z];
    return score;
}

} // namespace

bool prec_n_counter_test(const Graph& g, const LOrdering& ord, Vertex u, Vertex v) {
    std::vector<char> in_sstar(g.vertex_count(), 0);
    in_sstar[u] = 1;
    in_sstar[v] = 1;
    GammaState st = compute_gamma(g, ord, u, in_sstar);
    return gamma_score(g, ord, st, v) == st.target;
}

PrecNFilterResult prec_n_filter(const Graph& g, const LOrdering& ord,
                                const std::vector<Vertex>& sstar) {
    std::vector<char> in_sstar(g.vertex_count(), 0);
    for (Vertex v : sstar) in_sstar[v] = 1;
    std::vector<char> discarded(g.vertex_count(), 0);
    PrecNFilterResult out;
    for (std::size_t i = 0; i < sstar.size(); ++i) {
        Vertex u = sstar[i];
        if (discarded[u]) continue;
        out.survivors.push_back(u);
        GammaState st = compute_gamma(g, ord, u, in_sstar);
        for (std::size_t j = i + 1; j < sstar.size(); ++j) {
            Vertex v = sstar[j];
            if (discarded[v]) continue;
            if (gamma_score(g, ord, st, v) == st.target) discarded[v] = 1;
        }
    }
    return out;
}

DiameterResult diameter_chordal(const Graph& g) {
    SearchStats search;
    if (!g.is_connected()) throw input_error("diameter_chordal: graph is disconnected");
    if (!recognize_chordal(g, &search).chordal)
        throw input_error("diameter_chordal: graph is not chordal");
    Vertex n = g.vertex_count();
    DiameterResult out;
    if (n < 3) {
        out.value = n - 1;
        out.certificate = (n == 2) ? Edge{0, 1} : Edge{0, 0};
        out.stats.branch = "tiny";
        return out;
    }
    QuotientGraph q = quotient_graph(g);
    Vertex k = q.quotient.vertex_count();
    if (2 * q.quotient.edge_count() == static_cast<std::int64_t>(k) * (k - 1) || k < 3) {
        out.value =
            (2 * g.edge_count() == static_cast<std::int64_t>(n) * (n - 1)) ? (n > 1 ? 1 : 0) : 2;
        if (out.value <= 1) {
            out.certificate = (n > 1) ? Edge{0, 1} : Edge{0, 0};
        } else {
            for (Vertex a = 0; a < n && out.certificate == Edge{0, 0}; ++a)
                for (Vertex b = a + 1; b < n; ++b)
                    if (!g.has_edge(a, b)) {
                        out.certificate = {a, b};
                        break;
                    }
        }
        out.stats.branch = "degenerate";
        return out;
    }

    const Graph& h = q.quotient;
    CentralVertex center = chordal_central_vertex(h, &search);

    DiameterResult res;
    if (center.ecc >= 3) {
        res = domtarget_core(h, center.vertex, search);
        res.stats.branch = "rad3-domtarget";
        // diam >= 2 rad - 2 >= 4 here, so the promise holds by construction.
        res.stats.promise_violated = false;
    } else {
        // rad == 2 on a prime quotient (no universal vertex).
        Vertex x1 = lexbfs(h, center.vertex, &search).last();
        DistanceVector dx1 = bfs(h, x1, &search);
        int e1 = *std::max_element(dx1.dist.begin(), dx1.dist.end());
        if (e1 >= 3) {
            // 4 = 2 rad is the ceiling; odd 3 equals the diameter too.
            Vertex far = static_cast<Vertex>(
                std::max_element(dx1.dist.begin(), dx1.dist.end()) - dx1.dist.begin());
            res.value = e1;
            res.certificate = {x1, far};
            res.stats.branch = (e1 == 4) ? "rad2-e4" : "rad2-e3";
        } else {
            LOrdering ord = build_l_ordering(h, x1);
            std::vector<Vertex> sstar = reduce_to_independent(h, ord);
            PrecNFilterResult filt = prec_n_filter(h, ord, sstar);
            int best = 2;
            Edge pair = {0, 0};
            for (Vertex a = 0; a < h.vertex_count() && pair == Edge{0, 0}; ++a)
                for (Vertex b = a + 1; b < h.vertex_count(); ++b)
                    if (!h.has_edge(a, b)) {
                        pair = {a, b};
                        break;
                    }
            for (Vertex v : filt.survivors) {
                DistanceVector d = bfs(h, v, &search);
                for (Vertex w = 0; w < h.vertex_count(); ++w) {
                    if (d.dist[w] > best) {
                        best = d.dist[w];
                        pair = {v, w};
                    }
                }
            }
            res.value = best;
            res.certificate = pair;
            res.stats.branch = "rad2-lorder";
            res.stats.t = static_cast<int>(filt.survivors.size());
        }
    }
    out = res;
    out.stats.center_fallback = center.fallback;
    out.certificate = {q.representative[res.certificate.first],
                       q.representative[res.certificate.second]};
    DistanceVector check = bfs(g, out.certificate.first, &search);
    if (check.dist[out.certificate.second] != out.value)
        throw contract_error("diameter_chordal: certificate failed re-verification");
    out.stats.search_runs = search.search_runs;
    out.stats.work = search.work;
    return out;
}

} // namespace extremal

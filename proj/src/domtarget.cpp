#include "extremal/domtarget.hpp"

#include <algorithm>

#include "extremal/hyperbolicity.hpp"
#include "extremal/lexbfs.hpp"
#include "extremal/modular.hpp"

namespace extremal {

namespace {

struct PrimeRun {
    DiameterResult result;
    CoverFamily cover;
};

PrimeRun run_on_prime(const Graph& g, std::optional<int> k_hint, SearchStats& search) {
    Vertex n = g.vertex_count();
    PrimeRun out;

    DoubleSweep sweep = double_sweep(g, &search);
    Vertex c = sweep.c;
    DistanceVector from_c = bfs(g, c, &search);

    // Extremity rounds: each found extremity contributes its entire closed
    // neighborhood to the expanded set, one center path per member.
    CoverFamily& cover = out.cover;
    VertexSet covered = closed_neighborhood(g, c);
    VertexSet hull(n);
    hull.insert(c);
    int rounds = 0;
    while (covered.size() < n) {
        Vertex x = next_extremity(g, c, covered, &search);
        ++rounds;
        std::vector<Vertex> expansion{x};
        for (Vertex y : g.neighbors(x)) expansion.push_back(y);
        std::sort(expansion.begin(), expansion.end());
        for (Vertex y : expansion) {
            std::vector<Vertex> path = shortest_path(g, y, c, from_c);
            std::reverse(path.begin(), path.end());
            for (Vertex v : path) {
                if (!hull.contains(v)) {
                    hull.insert(v);
                    covered.insert(v);
                    for (Vertex w : g.neighbors(v)) covered.insert(w);
                }
            }
            cover.expanded.push_back(y);
            cover.paths.push_back(std::move(path));
        }
    }

    // Greedy cover of V by path neighborhoods and vertex neighborhoods.
    int px = static_cast<int>(cover.expanded.size());
    std::vector<VertexSet> path_nbhd;
    path_nbhd.reserve(px);
    for (const auto& path : cover.paths)
        path_nbhd.push_back(closed_neighborhood(g, make_vertex_set(n, path)));
    std::vector<int> vertex_gain(n);
    for (Vertex v = 0; v < n; ++v) vertex_gain[v] = g.degree(v) + 1;
    VertexSet uncovered(n);
    for (Vertex v = 0; v < n; ++v) uncovered.insert(v);

    while (!uncovered.empty()) {
        int best_gain = 0, best_path = -1;
        for (int i = 0; i < px; ++i) {
            int gain = path_nbhd[i].intersection_size(uncovered);
            if (gain > best_gain) {
                best_gain = gain;
                best_path = i;
            }
        }
        Vertex best_vertex = -1;
        int best_vgain = 0;
        for (Vertex v = 0; v < n; ++v) {
            if (vertex_gain[v] > best_vgain) {
                best_vgain = vertex_gain[v];
                best_vertex = v;
            }
        }
        std::vector<Vertex> newly;
        if (best_gain >= best_vgain) {  // prefer paths on ties
            cover.chosen_paths.push_back(best_path);
            path_nbhd[best_path].for_each([&](Vertex v) {
                if (uncovered.contains(v)) newly.push_back(v);
            });
        } else {
            cover.chosen_vertices.push_back(best_vertex);
            if (uncovered.contains(best_vertex)) newly.push_back(best_vertex);
            for (Vertex w : g.neighbors(best_vertex))
                if (uncovered.contains(w)) newly.push_back(w);
        }
        for (Vertex v : newly) {
            uncovered.erase(v);
            if (vertex_gain[v] > 0) --vertex_gain[v];
            for (Vertex w : g.neighbors(v))
                if (vertex_gain[w] > 0) --vertex_gain[w];
        }
    }

    // Cutoff for the per-path windows.
    int cutoff;
    int delta_star_used = -1;
    if (k_hint) {
        cutoff = exact_cutoff_from_alpha(*k_hint);  // 42k - 11
    } else {
        DeltaStar ds = delta_star_for_paths(g, c, cover.paths, &search);
        cutoff = exact_cutoff_from_delta_star(ds.value);
        delta_star_used = ds.value;
    }

    int best = 0;
    Edge best_pair{0, 0};
    int extremities_seen = rounds;
    for (int i : cover.chosen_paths) {
        const auto& path = cover.paths[i];
        int take = std::min<int>(cutoff, static_cast<int>(path.size()));
        for (int k = 0; k < take; ++k) {
            Vertex w = path[path.size() - 1 - k];
            LocalMaxEcc lme = local_max_ecc(g, w, &search);
            extremities_seen += lme.iterations;
            if (lme.value > best) {
                best = lme.value;
                best_pair = {lme.witness, lme.far_vertex};
            }
        }
    }
    for (Vertex v : cover.chosen_vertices) {
        std::vector<Vertex> block{v};
        for (Vertex w : g.neighbors(v)) block.push_back(w);
        for (Vertex w : block) {
            DistanceVector d = bfs(g, w, &search);
            for (Vertex z = 0; z < n; ++z) {
                if (d.dist[z] > best) {
                    best = d.dist[z];
                    best_pair = {w, z};
                }
            }
        }
    }

    out.result.value = best;
    out.result.certificate = best_pair;
    out.result.stats.cutoff = cutoff;
    out.result.stats.delta_star = delta_star_used;
    out.result.stats.t = rounds;
    out.result.stats.extremities_computed = extremities_seen;
    out.result.stats.promise_violated = k_hint && rounds > *k_hint;
    return out;
}

} // namespace

DomTargetResult diameter_dominating_target(const Graph& g, std::optional<int> k_hint) {
    SearchStats search;
    if (!g.is_connected())
        throw input_error("diameter_dominating_target: graph is disconnected");
    Vertex n = g.vertex_count();
    DomTargetResult out;
    if (n < 3) {
        out.diameter.value = n - 1;
        out.diameter.certificate = (n == 2) ? Edge{0, 1} : Edge{0, 0};
        out.diameter.stats.branch = "tiny";
        return out;
    }
    QuotientGraph q = quotient_graph(g);
    Vertex k = q.quotient.vertex_count();
    if (2 * q.quotient.edge_count() == static_cast<std::int64_t>(k) * (k - 1) || k < 3) {
        bool complete = 2 * g.edge_count() == static_cast<std::int64_t>(n) * (n - 1);
        out.diameter.value = complete ? 1 : 2;
        if (complete) {
            out.diameter.certificate = {0, 1};
        } else {
            for (Vertex a = 0; a < n; ++a) {
                bool found = false;
                for (Vertex b = a + 1; b < n; ++b)
                    if (!g.has_edge(a, b)) {
                        out.diameter.certificate = {a, b};
                        found = true;
                        break;
                    }
                if (found) break;
            }
        }
        out.diameter.stats.branch = "degenerate";
        return out;
    }

    PrimeRun run = run_on_prime(q.quotient, k_hint, search);
    out.cover = run.cover;
    out.diameter = run.result;
    out.diameter.certificate = {q.representative[run.result.certificate.first],
                                q.representative[run.result.certificate.second]};
    DistanceVector check = bfs(g, out.diameter.certificate.first, &search);
    if (check.dist[out.diameter.certificate.second] != out.diameter.value)
        throw contract_error("diameter_dominating_target: certificate failed re-verification");
    out.diameter.stats.search_runs = search.search_runs;
    out.diameter.stats.work = search.work;
    out.diameter.stats.branch = "domtarget";
    return out;
}

} // namespace extremal

#include "extremal/generators.hpp"

#include <algorithm>
#include <sstream>

#include "extremal/modular.hpp"
#include "extremal/rng.hpp"

namespace extremal {

std::string GenSpec::to_string() const {
    std::ostringstream out;
    out << family << ":" << n << ":" << k << ":" << density << ":" << seed;
    return out.str();
}

GenSpec GenSpec::parse(const std::string& text) {
    GenSpec spec;
    std::istringstream in(text);
    std::string field;
    auto next = [&](const char* what) {
        if (!std::getline(in, field, ':'))
            throw input_error("gen spec missing field '" + std::string(what) + "': " + text);
        return field;
    };
    spec.family = next("family");
    try {
        spec.n = std::stoi(next("n"));
        spec.k = std::stoi(next("k"));
        spec.density = std::stod(next("density"));
        spec.seed = std::stoull(next("seed"));
    } catch (const input_error&) {
        throw;
    } catch (...) {
        throw input_error("malformed gen spec: " + text);
    }
    return spec;
}

Graph generate(const GenSpec& spec) {
    if (spec.family == "interval") return gen_interval(spec.n, spec.density, spec.seed);
    if (spec.family == "permutation") return gen_permutation(spec.n, spec.seed);
    if (spec.family == "kpolygon") return gen_kpolygon(spec.n, spec.k, spec.seed);
    if (spec.family == "chordal-leafage") return gen_chordal_leafage(spec.n, spec.k, spec.seed);
    if (spec.family == "spider") return gen_spider(spec.n, spec.k);
    if (spec.family == "caterpillar") return gen_caterpillar(spec.n);
    if (spec.family == "gnp-prime") return gen_gnp_prime(spec.n, spec.density, spec.seed);
    throw input_error("unknown generator family: " + spec.family);
}

Graph interval_intersection_graph(const std::vector<std::pair<double, double>>& iv) {
    int n = static_cast<int>(iv.size());
    std::vector<Edge> edges;
    // Sweep by left endpoint; an interval leaves the active set once its
    // right end falls short of the next left end, for good.
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return iv[a].first < iv[b].first; });
    std::vector<int> active;
    for (int idx : order) {
        std::size_t keep = 0;
        for (int j : active) {
            if (iv[j].second >= iv[idx].first) {
                active[keep++] = j;
                edges.emplace_back(std::min(j, idx), std::max(j, idx));
            }
        }
        active.resize(keep);
        active.push_back(idx);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return Graph::from_edges(n, edges);
}

Graph gen_interval(int n, double density, std::uint64_t seed) {
    if (n < 1) throw input_error("gen_interval: n must be positive");
    SplitMix64 rng(seed);
    // Jittered evenly-spread starts: purely uniform starts leave coverage
    // gaps that shatter sparse instances into tiny components. Mean length
    // density/(2n) gives expected average degree near density, and at
    // density >= 8 consecutive intervals always overlap.
    double base = density > 0 ? density / (2.0 * n) : 1.0 / n;
    std::vector<std::pair<double, double>> iv(n);
    for (int i = 0; i < n; ++i) {
        double start = (i + rng.next_double()) / n;
        double len = base * (0.5 + rng.next_double());
        iv[i] = {start, start + len};
    }
    return interval_intersection_graph(iv);
}

Graph gen_permutation(int n, std::uint64_t seed) {
    if (n < 1) throw input_error("gen_permutation: n must be positive");
    SplitMix64 rng(seed);
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    for (int i = n - 1; i > 0; --i)
        std::swap(perm[i], perm[rng.next_below(i + 1)]);
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (perm[i] > perm[j]) edges.emplace_back(i, j);
    return Graph::from_edges(n, edges);
}

Graph gen_kpolygon(int n, int k, std::uint64_t seed) {
    if (n < 1) throw input_error("gen_kpolygon: n must be positive");
    if (k < 2) throw input_error("gen_kpolygon: k must be at least 2");
    SplitMix64 rng(seed);
    // Boundary positions as (side, offset); flattened to a circular
    // coordinate. Two chords cross iff their endpoints interleave.
    struct Chord {
        double a, b;
    };
    std::vector<Chord> chords(n);
    for (int i = 0; i < n; ++i) {
        int s1 = static_cast<int>(rng.next_below(k));
        int s2 = static_cast<int>(rng.next_below(k - 1));
        if (s2 >= s1) ++s2;
        double p1 = s1 + rng.next_double();
        double p2 = s2 + rng.next_double();
        chords[i] = {std::min(p1, p2), std::max(p1, p2)};
    }
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            bool j_a_inside = chords[i].a < chords[j].a && chords[j].a < chords[i].b;
            bool j_b_inside = chords[i].a < chords[j].b && chords[j].b < chords[i].b;
            if (j_a_inside != j_b_inside) edges.emplace_back(i, j);
        }
    }
    return Graph::from_edges(n, edges);
}

Graph gen_chordal_leafage(int n, int k, std::uint64_t seed) {
    if (n < 1) throw input_error("gen_chordal_leafage: n must be positive");
    if (k < 2) throw input_error("gen_chordal_leafage: k must be at least 2");
    SplitMix64 rng(seed);
    // Host tree: spider with k legs, total size scaled to the instance.
    int leg = std::max(2, n / (2 * k) + 2);
    int host_n = 1 + k * leg;
    std::vector<std::vector<int>> host_adj(host_n);
    auto host_edge = [&](int a, int b) {
        host_adj[a].push_back(b);
        host_adj[b].push_back(a);
    };
    for (int j = 0; j < k; ++j) {
        int first = 1 + j * leg;
        host_edge(0, first);
        for (int i = 1; i < leg; ++i) host_edge(first + i - 1, first + i);
    }
    // Random connected subtrees by randomized growth from a random node.
    std::vector<std::vector<char>> member(n, std::vector<char>(host_n, 0));
    for (int i = 0; i < n; ++i) {
        int target = 1 + static_cast<int>(rng.next_below(host_n));
        std::vector<int> frontier{static_cast<int>(rng.next_below(host_n))};
        member[i][frontier[0]] = 1;
        int size = 1;
        while (size < target && !frontier.empty()) {
            std::size_t pick = rng.next_below(frontier.size());
            int v = frontier[pick];
            std::vector<int> fresh;
            for (int w : host_adj[v])
                if (!member[i][w]) fresh.push_back(w);
            if (fresh.empty()) {
                frontier[pick] = frontier.back();
                frontier.pop_back();
                continue;
            }
            int w = fresh[rng.next_below(fresh.size())];
            member[i][w] = 1;
            frontier.push_back(w);
            ++size;
        }
    }
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            bool meet = false;
            for (int v = 0; v < host_n && !meet; ++v)
                if (member[i][v] && member[j][v]) meet = true;
            if (meet) edges.emplace_back(i, j);
        }
    }
    return Graph::from_edges(n, edges);
}

Graph gen_spider(int legs, int leglen) {
    if (legs < 1 || leglen < 1) throw input_error("gen_spider: legs and leglen must be positive");
    std::vector<Edge> edges;
    for (int j = 0; j < legs; ++j) {
        int first = 1 + j * leglen;
        edges.emplace_back(0, first);
        for (int i = 1; i < leglen; ++i) edges.emplace_back(first + i - 1, first + i);
    }
    return Graph::from_edges(1 + legs * leglen, edges);
}

Graph gen_caterpillar(int n) {
    if (n < 2) throw input_error("gen_caterpillar: n must be at least 2");
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    int next = n;
    for (int i = 1; i + 1 < n; ++i) {
        edges.emplace_back(i, next);
        edges.emplace_back(i, next + 1);
        edges.emplace_back(next, next + 1);
        next += 2;
    }
    return Graph::from_edges(next, edges);
}

Graph gen_gnp_prime(int n, double p, std::uint64_t seed, int retries) {
    if (n < 4) throw input_error("gen_gnp_prime: n must be at least 4");
    SplitMix64 rng(seed);
    for (int attempt = 0; attempt < retries; ++attempt) {
        std::vector<Edge> edges;
        for (Vertex i = 0; i < n; ++i)
            for (Vertex j = i + 1; j < n; ++j)
                if (rng.next_double() < p) edges.emplace_back(i, j);
        Graph g = Graph::from_edges(n, edges);
        if (g.is_connected() && is_prime(g).prime) return g;
    }
    throw input_error("gen_gnp_prime: retry budget exhausted; adjust n or p");
}

Graph largest_component(const Graph& g) {
    VertexSet none(g.vertex_count());
    auto comps = components_after_removing(g, none);
    const VertexSet* best = nullptr;
    for (const auto& c : comps)
        if (!best || c.size() > best->size()) best = &c;
    if (!best) throw input_error("largest_component: empty graph");
    return g.induced(best->to_vector());
}

} // namespace extremal

#include "extremal/hyperbolicity.hpp"

#include <algorithm>
#include <numeric>

#include "extremal/diameter.hpp"

namespace extremal {

LayeringPartition layering_partition(const Graph& g, Vertex c, SearchStats* stats) {
    Vertex n = g.vertex_count();
    DistanceVector dist = bfs(g, c, stats);
    for (Vertex v = 0; v < n; ++v)
        if (!dist.reachable(v)) throw input_error("layering_partition: graph is disconnected");

    // Insert vertices by decreasing distance, unioning each with already
    // inserted neighbors. Once layer j is fully in, the DSU components
    // restricted to layer j are exactly the classes of that layer.
    std::vector<Vertex> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
        return dist.dist[a] != dist.dist[b] ? dist.dist[a] > dist.dist[b] : a < b;
    });
    std::vector<Vertex> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](Vertex v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    std::vector<char> inserted(n, 0);

    LayeringPartition out;
    out.center = c;
    out.class_of.assign(n, -1);
    std::size_t pos = 0;
    while (pos < order.size()) {
        int j = dist.dist[order[pos]];
        std::size_t layer_begin = pos;
        while (pos < order.size() && dist.dist[order[pos]] == j) {
            Vertex v = order[pos++];
            inserted[v] = 1;
            for (Vertex w : g.neighbors(v))
                if (inserted[w]) parent[find(v)] = find(w);
        }
        // Read off layer j's classes.
        std::vector<std::pair<Vertex, Vertex>> root_of;  // (root, vertex)
        for (std::size_t i = layer_begin; i < pos; ++i)
            root_of.emplace_back(find(order[i]), order[i]);
        std::sort(root_of.begin(), root_of.end());
        std::size_t i = 0;
        while (i < root_of.size()) {
            std::vector<Vertex> members;
            Vertex root = root_of[i].first;
            while (i < root_of.size() && root_of[i].first == root)
                members.push_back(root_of[i++].second);
            std::sort(members.begin(), members.end());
            int cid = static_cast<int>(out.classes.size());
            for (Vertex v : members) out.class_of[v] = cid;
            out.classes.push_back(std::move(members));
            out.layer.push_back(j);
        }
    }
    // Reorder classes by (layer, min member) for a stable presentation.
    std::vector<int> perm(out.classes.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::sort(perm.begin(), perm.end(), [&](int a, int b) {
        return std::pair(out.layer[a], out.classes[a][0]) <
               std::pair(out.layer[b], out.classes[b][0]);
    });
    LayeringPartition sorted;
    sorted.center = c;
    sorted.class_of.assign(n, -1);
    for (int cid : perm) {
        for (Vertex v : out.classes[cid])
            sorted.class_of[v] = static_cast<int>(sorted.classes.size());
        sorted.classes.push_back(std::move(out.classes[cid]));
        sorted.layer.push_back(out.layer[cid]);
    }
    return sorted;
}

int delta_c_exact(const Graph& g, Vertex c, SearchStats* stats) {
    LayeringPartition lp = layering_partition(g, c, stats);
    int best = 0;
    for (const auto& cls : lp.classes) {
        if (cls.size() < 2) continue;
        for (Vertex v : cls) {
            DistanceVector d = bfs(g, v, stats);
            for (Vertex w : cls) best = std::max(best, d.dist[w]);
        }
    }
    return best;
}

DeltaStar delta_star_for_paths(const Graph& g, Vertex c,
                               const std::vector<std::vector<Vertex>>& paths,
                               SearchStats* stats) {
    Vertex n = g.vertex_count();
    LayeringPartition lp = layering_partition(g, c, stats);
    int t = static_cast<int>(paths.size());

    // Label: class j carries path index i when N[P_i] meets the class.
    std::vector<std::vector<char>> class_has_label(lp.classes.size(),
                                                   std::vector<char>(t, 0));
    for (int i = 0; i < t; ++i) {
        for (Vertex v : paths[i]) {
            class_has_label[lp.class_of[v]][i] = 1;
            for (Vertex w : g.neighbors(v)) class_has_label[lp.class_of[w]][i] = 1;
        }
    }
    // One multi-source BFS per path gives every d(v, P_i).
    std::vector<DistanceVector> dist_to_path;
    dist_to_path.reserve(t);
    for (int i = 0; i < t; ++i) dist_to_path.push_back(multi_source_bfs(g, paths[i], stats));

    DeltaStar out;
    for (std::size_t j = 0; j < lp.classes.size(); ++j) {
        for (int i = 0; i < t; ++i) {
            if (!class_has_label[j][i]) continue;
            for (Vertex v : lp.classes[j]) {
                int score = 2 * dist_to_path[i].dist[v] + 2;
                if (score > out.value) {
                    out.value = score;
                    out.witness_class = static_cast<int>(j);
                    out.witness_vertex = v;
                    out.witness_path = i;
                }
            }
        }
    }
    (void)n;
    return out;
}

DeltaStar delta_star(const Graph& g, const DominatingPathSystem& sys, SearchStats* stats) {
    return delta_star_for_paths(g, sys.center, sys.paths, stats);
}

int four_point_delta_doubled_oracle(const Graph& g, Vertex cap) {
    Vertex n = g.vertex_count();
    if (n > cap)
        throw input_error("four_point_delta_doubled_oracle: graph exceeds size cap " +
                          std::to_string(cap));
    std::vector<std::vector<int>> d(n);
    for (Vertex v = 0; v < n; ++v) {
        d[v] = bfs(g, v).dist;
        for (Vertex w = 0; w < n; ++w)
            if (d[v][w] == kUnreachable)
                throw input_error("four_point_delta_doubled_oracle: graph is disconnected");
    }
    int doubled = 0;
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = a + 1; b < n; ++b)
            for (Vertex c = b + 1; c < n; ++c)
                for (Vertex e = c + 1; e < n; ++e) {
                    int s1 = d[a][b] + d[c][e];
                    int s2 = d[a][c] + d[b][e];
                    int s3 = d[a][e] + d[b][c];
                    int hi = std::max({s1, s2, s3});
                    int mid = s1 + s2 + s3 - hi - std::min({s1, s2, s3});
                    doubled = std::max(doubled, hi - mid);
                }
    return doubled;
}

} // namespace extremal

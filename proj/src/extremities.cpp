#include "extremal/extremities.hpp"

#include <algorithm>

#include "extremal/lexbfs.hpp"
#include "extremal/partition.hpp"

namespace extremal {

bool is_extremity(const Graph& g, Vertex v) {
    return count_components_after_removing(g, closed_neighborhood(g, v)) <= 1;
}

namespace {

// Max independent set among `verts`, exact, branch and bound.
int max_independent_set(const Graph& g, const std::vector<Vertex>& verts) {
    int q = static_cast<int>(verts.size());
    std::vector<std::uint64_t> conflict(q, 0);  // q <= 64 here
    for (int i = 0; i < q; ++i)
        for (int j = i + 1; j < q; ++j)
            if (g.has_edge(verts[i], verts[j])) {
                conflict[i] |= std::uint64_t{1} << j;
                conflict[j] |= std::uint64_t{1} << i;
            }
    int best = 0;
    auto rec = [&](auto&& self, int i, std::uint64_t banned, int size) -> void {
        if (size + (q - i) <= best) return;
        if (i == q) {
            best = std::max(best, size);
            return;
        }
        if (!(banned >> i & 1)) self(self, i + 1, banned | conflict[i], size + 1);
        self(self, i + 1, banned, size);
    };
    rec(rec, 0, 0, 0);
    return best;
}

int greedy_independent_set(const Graph& g, const std::vector<Vertex>& verts) {
    std::vector<char> blocked(g.vertex_count(), 0);
    int size = 0;
    for (Vertex v : verts) {
        if (blocked[v]) continue;
        ++size;
        blocked[v] = 1;
        for (Vertex w : g.neighbors(v)) blocked[w] = 1;
    }
    return size;
}

} // namespace

ExtremityReport all_extremities_oracle(const Graph& g, int exact_cap) {
    Vertex n = g.vertex_count();
    ExtremityReport r;
    r.extremities = VertexSet(n);
    for (Vertex v = 0; v < n; ++v)
        if (is_extremity(g, v)) r.extremities.insert(v);
    r.count = r.extremities.size();
    std::vector<Vertex> verts = r.extremities.to_vector();
    if (r.count <= exact_cap) {
        r.alpha = max_independent_set(g, verts);
        r.alpha_exact = true;
    } else {
        r.alpha = greedy_independent_set(g, verts);
        r.alpha_exact = false;
    }
    return r;
}

Vertex first_extremity(const Graph& g, Vertex start, SearchStats* stats) {
    return lexbfs(g, start, stats).last();
}

Vertex next_extremity(const Graph& g, Vertex u, const VertexSet& s, SearchStats* stats) {
    Vertex n = g.vertex_count();
    LexOrder ord = lexbfs(g, u, stats);

    // w: smallest-numbered vertex outside S; it realizes max d(u,.) over
    // V \ S because LexBFS visits in BFS layer order.
    Vertex w = -1;
    for (int i = 1; i <= n; ++i) {
        if (!s.contains(ord.sigma(i))) {
            w = ord.sigma(i);
            break;
        }
    }
    if (w == -1 || w == u || g.has_edge(u, w))
        throw input_error("next_extremity: every candidate lies in S or N[u]");

    // Largest index i < n whose vertex x satisfies: all neighbors of x
    // numbered after x are neighbors of w (label equality with w).
    std::vector<char> adj_w(n, 0);
    for (Vertex z : g.neighbors(w)) adj_w[z] = 1;
    int i = -1;
    for (int j = n - 1; j >= ord.number[w]; --j) {
        Vertex x = ord.sigma(j);
        bool ok = true;
        for (Vertex z : g.neighbors(x)) {
            if (ord.number[z] > j && !adj_w[z]) {
                ok = false;
                break;
            }
        }
        if (ok) {
            i = j;
            break;
        }
    }
    // j == number(w) always qualifies, so i is set.

    std::vector<Vertex> m0;
    for (int j = ord.number[w]; j <= i; ++j)
        if (!s.contains(ord.sigma(j))) m0.push_back(ord.sigma(j));
    std::sort(m0.begin(), m0.end());

    if (m0.size() == 1) return m0[0];

    // Iteratively narrow the candidate module: refine by the neighborhoods
    // of the current pivot set, keep the group with the fewest pivot-set
    // neighbors, and recycle the discarded groups as the next pivot set.
    // Pivot sets are pairwise disjoint, so the whole loop is linear.
    VertexPartition part(n, {m0});
    std::vector<Vertex> pivots = s.to_vector();
    std::vector<int> pivot_deg(n, 0);
    int stamp = 0;
    while (true) {
        int mj_size = part.size();
        if (mj_size == 1) break;
        for (Vertex p : pivots) {
            ++stamp;  // every pivot is its own binary split
            for (Vertex z : g.neighbors(p)) {
                if (part.contains(z)) {
                    ++pivot_deg[z];
                    part.move_to_front_sibling(z, stamp);
                }
            }
        }
        if (part.group_count() <= 1)
            throw contract_error("next_extremity: refinement stalled; input graph is not prime");
        // Winner: fewest pivot-set neighbors, then smallest member id.
        int winner = -1;
        std::pair<int, Vertex> best{0, 0};
        for (int gid = part.first_group(); gid >= 0; gid = part.next_group(gid)) {
            auto members = part.group_members(gid);
            Vertex min_id = *std::min_element(members.begin(), members.end());
            std::pair<int, Vertex> key{pivot_deg[members[0]], min_id};
            if (winner < 0 || key < best) {
                winner = gid;
                best = key;
            }
        }
        pivots.clear();
        std::vector<int> losers;
        for (int gid = part.first_group(); gid >= 0; gid = part.next_group(gid))
            if (gid != winner) losers.push_back(gid);
        for (int gid : losers) {
            for (Vertex z : part.group_members(gid)) {
                pivots.push_back(z);
                pivot_deg[z] = 0;
                part.remove(z);
            }
        }
        for (Vertex z : part.group_members(winner)) pivot_deg[z] = 0;
    }
    return part.front_vertex();
}

Vertex next_extremity(const Graph& g, Vertex u, const TransitiveSet& s, SearchStats* stats) {
    if (s.anchor != u) throw contract_error("next_extremity: transitive set anchored elsewhere");
    return next_extremity(g, u, s.members, stats);
}

bool separation_test(const Graph& g, Vertex u, Vertex v, Vertex w) {
    if (u == v || u == w || v == w || g.has_edge(u, v) || g.has_edge(u, w) || g.has_edge(v, w))
        throw input_error("separation_test: arguments must be pairwise nonadjacent");
    VertexSet removed = closed_neighborhood(g, w);
    auto comps = components_after_removing(g, removed);
    int cu = -1, cv = -1;
    for (std::size_t i = 0; i < comps.size(); ++i) {
        if (comps[i].contains(u)) cu = static_cast<int>(i);
        if (comps[i].contains(v)) cv = static_cast<int>(i);
    }
    return cu != cv;
}

bool is_u_transitive_oracle(const Graph& g, Vertex u, const VertexSet& s) {
    Vertex n = g.vertex_count();
    for (Vertex y = 0; y < n; ++y) {
        if (s.contains(y) || y == u || g.has_edge(u, y)) continue;
        VertexSet removed = closed_neighborhood(g, y);
        if (removed.contains(u)) continue;
        auto comps = components_after_removing(g, removed);
        int cu = -1;
        for (std::size_t i = 0; i < comps.size(); ++i)
            if (comps[i].contains(u)) cu = static_cast<int>(i);
        bool separates_some_member = false;
        s.for_each([&](Vertex x) {
            if (separates_some_member || removed.contains(x)) return;
            for (std::size_t i = 0; i < comps.size(); ++i) {
                if (comps[i].contains(x)) {
                    if (static_cast<int>(i) != cu) separates_some_member = true;
                    return;
                }
            }
        });
        if (separates_some_member) return false;  // y should have been in S
    }
    return true;
}

bool is_asteroidal_set(const Graph& g, const VertexSet& a) {
    std::vector<Vertex> verts = a.to_vector();
    for (std::size_t i = 0; i < verts.size(); ++i)
        for (std::size_t j = i + 1; j < verts.size(); ++j)
            if (g.has_edge(verts[i], verts[j])) return false;
    for (Vertex v : verts) {
        VertexSet removed = closed_neighborhood(g, v);
        auto comps = components_after_removing(g, removed);
        int home = -1;
        for (Vertex other : verts) {
            if (other == v) continue;
            int c = -1;
            for (std::size_t i = 0; i < comps.size(); ++i)
                if (comps[i].contains(other)) c = static_cast<int>(i);
            if (c == -1) return false;  // other fell inside N[v]
            if (home == -1) home = c;
            if (c != home) return false;
        }
    }
    return true;
}

int asteroidal_number_oracle(const Graph& g, Vertex cap) {
    Vertex n = g.vertex_count();
    if (n > cap)
        throw input_error("asteroidal_number_oracle: graph exceeds size cap " +
                          std::to_string(cap));
    // Asteroidal sets are hereditary, so depth-first extension with a
    // simple remaining-vertices bound is exact.
    int best = 0;
    std::vector<Vertex> current;
    auto rec = [&](auto&& self, Vertex from) -> void {
        best = std::max(best, static_cast<int>(current.size()));
        if (static_cast<int>(current.size()) + (n - from) <= best) return;
        for (Vertex v = from; v < n; ++v) {
            current.push_back(v);
            VertexSet candidate = make_vertex_set(n, current);
            if (is_asteroidal_set(g, candidate)) self(self, v + 1);
            current.pop_back();
        }
    };
    rec(rec, 0);
    return best;
}

Verdict is_dominating_target(const Graph& g, const VertexSet& d) {
    if (d.empty()) throw input_error("is_dominating_target: empty set");
    Vertex n = g.vertex_count();
    // Not a dominating target iff some connected H containing D misses a
    // vertex y, i.e. H avoids N[y] entirely, i.e. D sits inside a single
    // component of G \ N[y].
    for (Vertex y = 0; y < n; ++y) {
        VertexSet removed = closed_neighborhood(g, y);
        bool touches = false;
        d.for_each([&](Vertex x) {
            if (removed.contains(x)) touches = true;
        });
        if (touches) continue;
        auto comps = components_after_removing(g, removed);
        for (const auto& comp : comps) {
            bool all_inside = true;
            d.for_each([&](Vertex x) {
                if (!comp.contains(x)) all_inside = false;
            });
            if (all_inside) return Verdict::False;
        }
    }
    return Verdict::True;
}

} // namespace extremal

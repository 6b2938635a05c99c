#include <doctest.h>

#include <algorithm>

#include "extremal/diameter.hpp"
#include "extremal/extremities.hpp"
#include "extremal/generators.hpp"
#include "extremal/hyperbolicity.hpp"
#include "extremal/lexbfs.hpp"
#include "extremal/modular.hpp"
#include "fixtures.hpp"

using namespace extremal;

namespace {

std::vector<Graph> small_corpus() {
    std::vector<Graph> out;
    out.push_back(fixtures::path(8));
    out.push_back(fixtures::cycle(6));
    out.push_back(fixtures::cycle(9));
    out.push_back(fixtures::spider3());
    out.push_back(fixtures::petersen());
    out.push_back(fixtures::complete(4));
    for (std::uint64_t seed = 0; seed < 5; ++seed)
        out.push_back(largest_component(gen_interval(40, 6.0, 300 + seed)));
    for (std::uint64_t seed = 0; seed < 4; ++seed)
        out.push_back(largest_component(gen_chordal_leafage(25, 3, 310 + seed)));
    out.push_back(gen_gnp_prime(18, 0.3, 320));
    return out;
}

// Verifies a class assignment against the relation it encodes: same layer
// and connected inside the suffix of layers at or past it.
void check_layering_definition(const Graph& g, const LayeringPartition& lp) {
    Vertex n = g.vertex_count();
    DistanceVector d = bfs(g, lp.center);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u; v < n; ++v) {
            bool same = lp.class_of[u] == lp.class_of[v];
            bool expected = false;
            if (d.dist[u] == d.dist[v]) {
                VertexSet low(n);
                for (Vertex w = 0; w < n; ++w)
                    if (d.dist[w] < d.dist[u]) low.insert(w);
                auto comps = components_after_removing(g, low);
                for (const auto& comp : comps)
                    if (comp.contains(u) && comp.contains(v)) expected = true;
            }
            CHECK(same == expected);
        }
}

} // namespace

TEST_CASE("layering partition on fixed graphs") {
    // Trees: every class is a singleton.
    for (const Graph& g : {fixtures::path(6), fixtures::star(4), extremal::gen_spider(3, 3)}) {
        LayeringPartition lp = layering_partition(g, 0);
        for (const auto& cls : lp.classes) CHECK(cls.size() == 1);
    }

    Graph c6 = fixtures::cycle(6);
    LayeringPartition lp = layering_partition(c6, 0);
    REQUIRE(lp.classes.size() == 4);
    CHECK(lp.classes[0] == std::vector<Vertex>{0});
    CHECK(lp.classes[1] == std::vector<Vertex>{1, 5});
    CHECK(lp.classes[2] == std::vector<Vertex>{2, 4});
    CHECK(lp.classes[3] == std::vector<Vertex>{3});

    check_layering_definition(fixtures::petersen(), layering_partition(fixtures::petersen(), 0));
    for (const Graph& g : small_corpus())
        if (g.vertex_count() <= 40) check_layering_definition(g, layering_partition(g, 0));
}

TEST_CASE("delta_c exact") {
    CHECK(delta_c_exact(fixtures::path(9), 0) == 0);
    CHECK(delta_c_exact(fixtures::cycle(6), 0) == 2);
    Graph sp = fixtures::spider3();
    CHECK(delta_c_exact(sp, 0) == 0);
}

TEST_CASE("four point oracle") {
    CHECK(four_point_delta_doubled_oracle(fixtures::path(7)) == 0);
    CHECK(four_point_delta_doubled_oracle(fixtures::star(5)) == 0);
    CHECK(four_point_delta_doubled_oracle(fixtures::cycle(6)) == 2);  // delta = 1
    CHECK(four_point_delta_doubled_oracle(fixtures::complete(4)) == 0);
    CHECK(four_point_delta_doubled_oracle(fixtures::cycle(5)) == 1);  // delta = 1/2
    CHECK_THROWS_AS(four_point_delta_doubled_oracle(fixtures::path(200)), input_error);
}

TEST_CASE("delta star sandwich and hyperbolicity bounds") {
    for (const Graph& g : small_corpus()) {
        if (g.vertex_count() < 3 || !is_prime(g).prime) continue;
        DominatingPathSystem sys = build_dominating_path_system(g);
        DeltaStar ds = delta_star(g, sys);
        int dc = delta_c_exact(g, sys.center);
        CHECK(ds.value / 2 - 2 <= dc);
        CHECK(dc <= ds.value);

        int doubled = four_point_delta_doubled_oracle(g);
        CHECK(doubled <= 2 * dc);  // delta <= layering diameter

        ExtremityReport r = all_extremities_oracle(g);
        if (r.alpha_exact) CHECK(doubled <= 2 * (3 * r.alpha - 1));
    }
}

TEST_CASE("delta star on the path system of a path") {
    // Labels spread to closed path neighborhoods, so vertex 1 carries the
    // 2-3-4 path's label at distance 1: the maximum score is 2*1+2.
    Graph p5 = fixtures::path(5);
    DominatingPathSystem sys = build_dominating_path_system(p5);
    CHECK(delta_star(p5, sys).value == 4);
    CHECK(delta_c_exact(p5, sys.center) == 0);
}

TEST_CASE("distance inequalities from hyperbolicity") {
    for (const Graph& g : small_corpus()) {
        Vertex n = g.vertex_count();
        if (n < 2) continue;
        int doubled = four_point_delta_doubled_oracle(g);
        EccentricityTable t = eccentricity_oracle(g);
        // Doubled arithmetic keeps half-integers exact.
        CHECK(2 * t.diameter >= 4 * t.radius - 4 * doubled - 2);

        for (Vertex u = 0; u < n; ++u) {
            DistanceVector du = bfs(g, u);
            for (Vertex v = 0; v < n; ++v)
                if (du.dist[v] == t.ecc[u]) CHECK(2 * t.ecc[v] >= 2 * t.diameter - 8 * doubled);
        }

        // Midpoint of a two-sweep pair has nearly minimum eccentricity.
        for (Vertex u = 0; u < std::min<Vertex>(n, 4); ++u) {
            DistanceVector du = bfs(g, u);
            Vertex v = static_cast<Vertex>(
                std::max_element(du.dist.begin(), du.dist.end()) - du.dist.begin());
            DistanceVector dv = bfs(g, v);
            Vertex w = static_cast<Vertex>(
                std::max_element(dv.dist.begin(), dv.dist.end()) - dv.dist.begin());
            std::vector<Vertex> path = shortest_path(g, v, w, bfs(g, w));
            Vertex c = path[dv.dist[w] / 2];
            CHECK(2 * t.ecc[c] <= 2 * t.radius + 5 * doubled);
        }
    }
}

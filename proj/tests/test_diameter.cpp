#include <doctest.h>

#include <algorithm>

#include "extremal/diameter.hpp"
#include "extremal/generators.hpp"
#include "extremal/hyperbolicity.hpp"
#include "extremal/modular.hpp"
#include "extremal/rng.hpp"
#include "fixtures.hpp"

using namespace extremal;

namespace {

std::vector<Graph> prime_corpus() {
    std::vector<Graph> out;
    out.push_back(fixtures::path(5));
    out.push_back(fixtures::path(9));
    out.push_back(fixtures::cycle(6));
    out.push_back(fixtures::cycle(11));
    out.push_back(fixtures::spider3());
    out.push_back(extremal::gen_spider(5, 4));
    out.push_back(fixtures::petersen());
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        Graph g = largest_component(gen_interval(50, 5.0, 600 + seed));
        if (g.vertex_count() >= 4 && is_prime(g).prime) out.push_back(g);
    }
    for (std::uint64_t seed = 0; seed < 3; ++seed)
        out.push_back(gen_gnp_prime(20, 0.25, 700 + seed));
    return out;
}

int ecc_of(const Graph& g, Vertex u) {
    DistanceVector d = bfs(g, u);
    return *std::max_element(d.dist.begin(), d.dist.end());
}

void check_path_system(const Graph& g, const DominatingPathSystem& sys) {
    DistanceVector from_c = bfs(g, sys.center);
    REQUIRE(sys.paths.size() == sys.extremities.size());
    for (std::size_t i = 0; i < sys.paths.size(); ++i) {
        const auto& p = sys.paths[i];
        REQUIRE(!p.empty());
        CHECK(p.front() == sys.center);
        CHECK(p.back() == sys.extremities[i]);
        // Shortest: one layer per step, ending at the right distance.
        for (std::size_t j = 0; j < p.size(); ++j)
            CHECK(from_c.dist[p[j]] == static_cast<int>(j));
        CHECK(is_extremity(g, sys.extremities[i]));
    }
    // Pairwise nonadjacent extremities.
    for (std::size_t i = 0; i < sys.extremities.size(); ++i)
        for (std::size_t j = i + 1; j < sys.extremities.size(); ++j)
            CHECK(!g.has_edge(sys.extremities[i], sys.extremities[j]));
    // H dominates.
    CHECK(closed_neighborhood(g, sys.hull).size() == g.vertex_count());
}

} // namespace

TEST_CASE("dominating path system on fixed graphs") {
    Graph p5 = fixtures::path(5);
    DominatingPathSystem sys = build_dominating_path_system(p5);
    CHECK(sys.center == 2);
    CHECK(sys.extremities.size() == 2);
    CHECK(sys.hull.size() == 5);  // the whole path
    check_path_system(p5, sys);

    Graph c6 = fixtures::cycle(6);
    sys = build_dominating_path_system(c6);
    CHECK(sys.extremities.size() == 2);  // double sweep already dominates
    check_path_system(c6, sys);

    Graph sp = fixtures::spider3();
    sys = build_dominating_path_system(sp);
    CHECK(sys.extremities.size() <= 3);
    check_path_system(sp, sys);
}

TEST_CASE("dominating path system across the corpus") {
    for (const Graph& g : prime_corpus()) {
        DominatingPathSystem sys = build_dominating_path_system(g);
        check_path_system(g, sys);
        ExtremityReport r = all_extremities_oracle(g);
        if (r.alpha_exact)
            CHECK(static_cast<int>(sys.extremities.size()) <= r.alpha);
    }
}

TEST_CASE("clean set on fixed pairs") {
    // Adjacent pair collapses to {v}.
    Graph star = fixtures::star(3);
    TransitiveSet y = build_clean_set(star, 0, 1);
    CHECK(y.members.to_vector() == std::vector<Vertex>{1});

    // Path, u at one end: everything joins.
    Graph p5 = fixtures::path(5);
    y = build_clean_set(p5, 2, 0);
    CHECK(y.members.to_vector() == std::vector<Vertex>{0, 1, 2, 3});

    CHECK_THROWS_AS(build_clean_set(p5, 2, 1), contract_error);  // v not farthest
}

TEST_CASE("clean set properties across the corpus") {
    for (const Graph& g : prime_corpus()) {
        Vertex n = g.vertex_count();
        if (n > 40) continue;
        for (Vertex u = 0; u < n; ++u) {
            DistanceVector du = bfs(g, u);
            int e = *std::max_element(du.dist.begin(), du.dist.end());
            for (Vertex v = 0; v < n; ++v) {
                if (du.dist[v] != e) continue;
                TransitiveSet y = build_clean_set(g, u, v);
                CHECK(y.members.contains(v));
                CHECK(is_u_transitive_oracle(g, u, y.members));
                // Distance dominance over the far side of N[u].
                DistanceVector dv = bfs(g, v);
                y.members.for_each([&](Vertex w) {
                    DistanceVector dw = bfs(g, w);
                    if (dv.dist[u] == e) CHECK(dw.dist[u] <= dv.dist[u]);
                    for (Vertex x : g.neighbors(u))
                        if (dv.dist[x] == e) CHECK(dw.dist[x] <= dv.dist[x]);
                });
            }
        }
    }
}

TEST_CASE("discard set on fixed pairs") {
    Graph p5 = fixtures::path(5);
    TransitiveSet s = build_discard_set(p5, 0, 4);
    CHECK(s.members.contains(4));
    s.members.for_each([&](Vertex w) {
        DistanceVector dw = bfs(p5, w);
        CHECK(dw.dist[0] <= 4);
        CHECK(dw.dist[1] <= 4);
    });

    Graph c6 = fixtures::cycle(6);
    s = build_discard_set(c6, 0, 3);
    CHECK(s.members.contains(3));
    CHECK(is_u_transitive_oracle(c6, 0, s.members));

    // N[u] reaching past e(u) violates the contract.
    CHECK_THROWS_AS(build_discard_set(p5, 2, 0), contract_error);
    // Universal vertices are outside this regime.
    Graph star = fixtures::star(3);
    CHECK_THROWS_AS(build_discard_set(star, 0, 1), contract_error);
}

TEST_CASE("discard set properties across the corpus") {
    for (const Graph& g : prime_corpus()) {
        Vertex n = g.vertex_count();
        if (n > 40) continue;
        for (Vertex u = 0; u < n; ++u) {
            DistanceVector du = bfs(g, u);
            int e = *std::max_element(du.dist.begin(), du.dist.end());
            if (e < 2) continue;
            for (Vertex v = 0; v < n; ++v) {
                if (du.dist[v] != e) continue;
                DistanceVector dv = bfs(g, v);
                bool pre = dv.dist[u] <= e;
                for (Vertex x : g.neighbors(u))
                    if (dv.dist[x] > e) pre = false;
                if (!pre) continue;
                TransitiveSet s = build_discard_set(g, u, v);
                CHECK(s.members.contains(v));
                CHECK(is_u_transitive_oracle(g, u, s.members));
                // No member sits at distance e(u)+1 from N[u].
                s.members.for_each([&](Vertex w) {
                    DistanceVector dw = bfs(g, w);
                    CHECK(dw.dist[u] <= e);
                    for (Vertex x : g.neighbors(u)) CHECK(dw.dist[x] <= e);
                });
            }
        }
    }
}

TEST_CASE("local max eccentricity") {
    Graph p5 = fixtures::path(5);
    LocalMaxEcc r = local_max_ecc(p5, 2);
    CHECK(r.value == 3);
    CHECK((r.witness == 1 || r.witness == 3));

    Graph sp = fixtures::spider3();
    r = local_max_ecc(sp, 0);
    CHECK(r.value == 3);
    CHECK((r.witness == 1 || r.witness == 3 || r.witness == 5));

    Graph pet = fixtures::petersen();
    r = local_max_ecc(pet, 0);
    CHECK(r.value == 2);
}

TEST_CASE("local max eccentricity equals the oracle across the corpus") {
    SplitMix64 rng(53);
    for (const Graph& g : prime_corpus()) {
        Vertex n = g.vertex_count();
        for (int probe = 0; probe < 6; ++probe) {
            Vertex u = static_cast<Vertex>(rng.next_below(n));
            LocalMaxEcc r = local_max_ecc(g, u);
            int expected = ecc_of(g, u);
            for (Vertex x : g.neighbors(u)) expected = std::max(expected, ecc_of(g, x));
            CHECK(r.value == expected);
            CHECK(ecc_of(g, r.witness) == r.value);
            CHECK(bfs(g, r.witness).dist[r.far_vertex] == r.value);
            int eu = ecc_of(g, u);
            CHECK(r.value >= eu);
            CHECK(r.value <= eu + 1);
        }
    }
}

TEST_CASE("approximate eccentricities stay within one") {
    // Exact on a path: the system covers every vertex.
    Graph p5 = fixtures::path(5);
    EccEstimates est = approx_all_eccentricities(p5, 200);
    EccentricityTable t = eccentricity_oracle(p5);
    CHECK(est.estimate == t.ecc);

    for (const Graph& g : prime_corpus()) {
        DominatingPathSystem sys = build_dominating_path_system(g);
        DeltaStar ds = delta_star(g, sys);
        est = approx_all_eccentricities_with_system(
            g, sys, approx_cutoff_from_delta_star(ds.value));
        t = eccentricity_oracle(g);
        for (Vertex v = 0; v < g.vertex_count(); ++v) {
            CHECK(est.estimate[v] <= t.ecc[v]);
            CHECK(est.estimate[v] >= t.ecc[v] - 1);
        }
    }

    CHECK_THROWS_AS(approx_all_eccentricities(p5, 0), input_error);
}

TEST_CASE("exact diameter on fixed graphs") {
    CHECK(exact_diameter(fixtures::path(5)).value == 4);
    CHECK(exact_diameter(fixtures::spider3()).value == 4);
    CHECK(exact_diameter(fixtures::petersen()).value == 2);
    CHECK(exact_diameter(fixtures::star(3)).value == 2);   // via complete quotient
    CHECK(exact_diameter(fixtures::complete(6)).value == 1);
    CHECK(exact_diameter(Graph::from_edges(1, {})).value == 0);
    CHECK(exact_diameter(Graph::from_edges(2, {{0, 1}})).value == 1);

    DiameterResult r = exact_diameter(fixtures::spider3());
    DistanceVector d = bfs(fixtures::spider3(), r.certificate.first);
    CHECK(d.dist[r.certificate.second] == r.value);

    Graph disconnected = Graph::from_edges(4, {{0, 1}, {2, 3}});
    CHECK_THROWS_AS(exact_diameter(disconnected), input_error);
}

TEST_CASE("exact diameter in both modes matches the oracle") {
    for (const Graph& g : prime_corpus()) {
        int expected = eccentricity_oracle(g).diameter;
        CHECK(exact_diameter(g).value == expected);
        ExtremityReport r = all_extremities_oracle(quotient_graph(g).quotient);
        if (r.alpha_exact) {
            DiameterOptions opt;
            opt.alpha = std::max(1, r.alpha);
            CHECK(exact_diameter(g, opt).value == expected);
        }
    }
}

TEST_CASE("approx pipeline lifts through quotients") {
    for (const Graph& g :
         {fixtures::star(4), fixtures::complete(5), fixtures::path(6), fixtures::spider3()}) {
        EccApproxResult r = approx_eccentricities(g);
        EccentricityTable t = eccentricity_oracle(g);
        for (Vertex v = 0; v < g.vertex_count(); ++v) {
            CHECK(r.estimate[v] <= t.ecc[v]);
            CHECK(r.estimate[v] >= t.ecc[v] - 1);
        }
    }
}

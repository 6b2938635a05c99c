#include <doctest.h>

#include <algorithm>

#include "extremal/modular.hpp"
#include "extremal/rng.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace extremal;

namespace {

Graph small_random(int n, double p, std::uint64_t seed, bool force_connected = true) {
    SplitMix64 rng(seed);
    std::vector<Edge> es;
    if (force_connected)
        for (Vertex i = 1; i < n; ++i)
            es.push_back({static_cast<Vertex>(rng.next_below(i)), i});
    for (Vertex i = 0; i < n; ++i)
        for (Vertex j = i + 1; j < n; ++j)
            if (rng.next_double() < p) es.push_back({i, j});
    std::sort(es.begin(), es.end());
    es.erase(std::unique(es.begin(), es.end()), es.end());
    return Graph::from_edges(n, es);
}

} // namespace

TEST_CASE("is_module") {
    Graph p3 = fixtures::path(3);
    CHECK(is_module(p3, make_vertex_set(3, {0, 2})).is_module);

    Graph p4 = fixtures::path(4);
    ModuleWitness w = is_module(p4, make_vertex_set(4, {1, 2}));
    CHECK(!w.is_module);
    CHECK((w.splitter == 0 || w.splitter == 3));

    VertexSet all(4);
    for (Vertex v = 0; v < 4; ++v) all.insert(v);
    CHECK(is_module(p4, all).is_module);

    CHECK_THROWS_AS(is_module(p4, VertexSet(4)), input_error);
}

TEST_CASE("twin classes") {
    auto classes = twin_classes(fixtures::star(3));
    REQUIRE(classes.size() == 2);
    CHECK(classes[0] == std::vector<Vertex>{0});
    CHECK(classes[1] == std::vector<Vertex>{1, 2, 3});

    classes = twin_classes(fixtures::path(4));
    CHECK(classes.size() == 4);

    classes = twin_classes(fixtures::cycle(4));  // complete bipartite K(2,2)
    REQUIRE(classes.size() == 2);
    for (const auto& c : classes) CHECK(c.size() == 2);
}

TEST_CASE("is_prime on fixed graphs") {
    CHECK(is_prime(fixtures::path(4)).prime);
    CHECK(is_prime(fixtures::spider3()).prime);
    CHECK(is_prime(fixtures::petersen()).prime);

    PrimalityResult r = is_prime(fixtures::path(3));
    CHECK(!r.prime);
    CHECK(r.witness_module == std::vector<Vertex>{0, 2});

    r = is_prime(fixtures::complete(4));
    CHECK(!r.prime);
    CHECK(oracles::subset_is_module(fixtures::complete(4), r.witness_module));
    CHECK(r.witness_module.size() >= 2);
}

TEST_CASE("is_prime agrees with exhaustive module enumeration") {
    SplitMix64 rng(23);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 4 + static_cast<int>(rng.next_below(7));  // n <= 10
        Graph g = small_random(n, 0.2 + 0.1 * (trial % 5), 500 + trial);
        PrimalityResult r = is_prime(g);
        CHECK(r.prime == !oracles::has_nontrivial_module(g));
        if (!r.prime) {
            CHECK(r.witness_module.size() >= 2);
            CHECK(static_cast<int>(r.witness_module.size()) < n);
            CHECK(oracles::subset_is_module(g, r.witness_module));
        }
    }
}

TEST_CASE("quotient graph on fixed graphs") {
    // Star: center and bundled leaves.
    QuotientGraph q = quotient_graph(fixtures::star(3));
    CHECK(q.quotient.vertex_count() == 2);
    CHECK(q.quotient.edge_count() == 1);

    // A prime graph is its own quotient.
    q = quotient_graph(fixtures::path(4));
    CHECK(q.quotient.vertex_count() == 4);
    for (const auto& c : q.classes) CHECK(c.size() == 1);

    q = quotient_graph(fixtures::petersen());
    CHECK(q.quotient.vertex_count() == 10);
}

TEST_CASE("quotient classes match the exhaustive strong-module oracle") {
    SplitMix64 rng(29);
    int checked = 0;
    for (int trial = 0; trial < 80; ++trial) {
        int n = 4 + static_cast<int>(rng.next_below(8));  // n <= 11
        Graph g = small_random(n, 0.15 + 0.12 * (trial % 5), 900 + trial);
        QuotientGraph q = quotient_graph(g);
        auto expected = oracles::maximal_strong_modules(g);
        auto got = q.classes;
        std::sort(got.begin(), got.end());
        CHECK(got == expected);
        ++checked;
        // Adjacency between classes mirrors any cross pair.
        for (std::size_t a = 0; a < q.classes.size(); ++a)
            for (std::size_t b = a + 1; b < q.classes.size(); ++b)
                for (Vertex u : q.classes[a])
                    for (Vertex v : q.classes[b])
                        CHECK(g.has_edge(u, v) ==
                              q.quotient.has_edge(static_cast<Vertex>(a),
                                                  static_cast<Vertex>(b)));
    }
    CHECK(checked == 80);
}

TEST_CASE("three joined blobs collapse to a complete quotient") {
    // Two-cliques joined in a path pattern: the middle pair is universal,
    // so the strong-module classes are {2}, {3}, and the four end vertices,
    // and the quotient is complete (diameter 2 regime).
    std::vector<Edge> es{{0, 1}, {2, 3}, {4, 5}};
    for (Vertex a : {0, 1})
        for (Vertex b : {2, 3}) es.push_back({a, b});
    for (Vertex a : {2, 3})
        for (Vertex b : {4, 5}) es.push_back({a, b});
    Graph g = Graph::from_edges(6, es);
    QuotientGraph q = quotient_graph(g);
    auto expected = oracles::maximal_strong_modules(g);
    auto got = q.classes;
    std::sort(got.begin(), got.end());
    CHECK(got == expected);
    CHECK(q.quotient.vertex_count() == 3);
    CHECK(2 * q.quotient.edge_count() == 3LL * 2);  // complete
    CHECK(eccentricity_oracle(g).diameter <= 2);
}

TEST_CASE("eccentricity lift") {
    // Star via quotient: center 1, leaves 2.
    Graph star = fixtures::star(3);
    QuotientGraph q = quotient_graph(star);
    std::vector<int> qecc = eccentricity_oracle(q.quotient).ecc;
    std::vector<int> lifted = lift_eccentricities(star, q, qecc);
    CHECK(lifted == eccentricity_oracle(star).ecc);

    // Prime graph: identity lift.
    Graph p4 = fixtures::path(4);
    q = quotient_graph(p4);
    qecc = eccentricity_oracle(q.quotient).ecc;
    CHECK(lift_eccentricities(p4, q, qecc) == eccentricity_oracle(p4).ecc);
}

TEST_CASE("lifted eccentricities equal the oracle on random graphs") {
    SplitMix64 rng(31);
    for (int trial = 0; trial < 50; ++trial) {
        int n = 4 + static_cast<int>(rng.next_below(20));
        Graph g = small_random(n, 0.25, 1300 + trial);
        QuotientGraph q = quotient_graph(g);
        std::vector<int> qecc = eccentricity_oracle(q.quotient).ecc;
        if (q.quotient.vertex_count() == 1) qecc = {0};
        CHECK(lift_eccentricities(g, q, qecc) == eccentricity_oracle(g).ecc);
    }
}

TEST_CASE("quotient of a prime graph is a fixed point") {
    for (const Graph& g : {fixtures::path(4), fixtures::spider3(), fixtures::petersen()}) {
        QuotientGraph q = quotient_graph(g);
        REQUIRE(q.quotient.vertex_count() == g.vertex_count());
        CHECK(q.quotient.edges() == g.edges());
    }
}

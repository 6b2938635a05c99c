#include <doctest.h>

#include "extremal/graph.hpp"
#include "extremal/io.hpp"
#include "extremal/rng.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

#include <sstream>

using namespace extremal;

TEST_CASE("construction validates input") {
    CHECK_THROWS_AS(Graph::from_edges(3, {{0, 0}}), input_error);
    CHECK_THROWS_AS(Graph::from_edges(3, {{0, 1}, {0, 1}}), input_error);
    CHECK_THROWS_AS(Graph::from_edges(2, {{0, 5}}), input_error);
    Graph g = Graph::from_edges(3, {{1, 0}, {1, 2}});
    CHECK(g.degree(1) == 2);
    CHECK(g.has_edge(0, 1));
    CHECK(!g.has_edge(0, 2));
}

TEST_CASE("bfs on fixed graphs") {
    Graph p5 = fixtures::path(5);
    DistanceVector d = bfs(p5, 0);
    CHECK(d.dist == std::vector<int>{0, 1, 2, 3, 4});

    Graph k4 = fixtures::complete(4);
    d = bfs(k4, 0);
    CHECK(d.dist == std::vector<int>{0, 1, 1, 1});

    Graph pet = fixtures::petersen();
    for (Vertex s = 0; s < 10; ++s) {
        d = bfs(pet, s);
        CHECK(*std::max_element(d.dist.begin(), d.dist.end()) == 2);
    }

    CHECK_THROWS_AS(bfs(p5, 9), input_error);
}

TEST_CASE("bfs agrees with an independent queue implementation") {
    SplitMix64 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        int n = 4 + static_cast<int>(rng.next_below(30));
        std::vector<Edge> es;
        for (Vertex i = 0; i < n; ++i)
            for (Vertex j = i + 1; j < n; ++j)
                if (rng.next_double() < 0.2) es.push_back({i, j});
        Graph g = Graph::from_edges(n, es);
        for (Vertex s = 0; s < n; ++s)
            CHECK(bfs(g, s).dist == oracles::reference_bfs(g, s));
    }
}

TEST_CASE("multi source bfs") {
    Graph p5 = fixtures::path(5);
    CHECK(multi_source_bfs(p5, std::vector<Vertex>{0, 4}).dist ==
          std::vector<int>{0, 1, 2, 1, 0});

    Graph c6 = fixtures::cycle(6);
    CHECK(multi_source_bfs(c6, std::vector<Vertex>{0}).dist == bfs(c6, 0).dist);

    Graph sp = fixtures::spider3();
    DistanceVector d = multi_source_bfs(sp, std::vector<Vertex>{2, 4, 6});
    CHECK(d.dist[0] == 2);

    CHECK_THROWS_AS(multi_source_bfs(p5, std::vector<Vertex>{}), input_error);
}

TEST_CASE("eccentricity oracle") {
    EccentricityTable t = eccentricity_oracle(fixtures::path(5));
    CHECK(t.diameter == 4);
    CHECK(t.radius == 2);
    CHECK(t.ecc[2] == 2);

    t = eccentricity_oracle(fixtures::cycle(6));
    for (int e : t.ecc) CHECK(e == 3);

    t = eccentricity_oracle(fixtures::spider3());
    CHECK(t.diameter == 4);
    CHECK(t.radius == 2);
    CHECK(t.ecc[0] == 2);

    Graph disconnected = Graph::from_edges(4, {{0, 1}, {2, 3}});
    CHECK_THROWS_WITH_AS(eccentricity_oracle(disconnected),
                         doctest::Contains("separated"), input_error);
}

TEST_CASE("components after removing") {
    Graph sp = fixtures::spider3();
    auto comps = components_after_removing(sp, closed_neighborhood(sp, 0));
    CHECK(comps.size() == 3);
    for (const auto& c : comps) CHECK(c.size() == 1);

    Graph p5 = fixtures::path(5);
    VertexSet mid(5);
    mid.insert(2);
    comps = components_after_removing(p5, mid);
    CHECK(comps.size() == 2);
    CHECK(comps[0].contains(0));
    CHECK(comps[0].contains(1));
    CHECK(comps[1].contains(3));
    CHECK(comps[1].contains(4));

    Graph c6 = fixtures::cycle(6);
    comps = components_after_removing(c6, closed_neighborhood(c6, 0));
    CHECK(comps.size() == 1);
    CHECK(comps[0].size() == 3);

    // Removing nothing from a connected graph leaves one full component.
    comps = components_after_removing(c6, VertexSet(6));
    CHECK(comps.size() == 1);
    CHECK(comps[0].size() == 6);
}

TEST_CASE("interval test") {
    Graph p5 = fixtures::path(5);
    CHECK(interval_test(p5, 0, 4, 2, bfs(p5, 0), bfs(p5, 4)));
    Graph c6 = fixtures::cycle(6);
    CHECK(interval_test(c6, 0, 3, 1, bfs(c6, 0), bfs(c6, 3)));
    CHECK(!interval_test(c6, 0, 2, 4, bfs(c6, 0), bfs(c6, 2)));
}

TEST_CASE("triangle inequality on random graphs") {
    SplitMix64 rng(11);
    for (int trial = 0; trial < 10; ++trial) {
        int n = 10 + static_cast<int>(rng.next_below(30));
        std::vector<Edge> es;
        for (Vertex i = 1; i < n; ++i)
            es.push_back({static_cast<Vertex>(rng.next_below(i)), i});  // spanning tree
        for (int extra = 0; extra < n; ++extra) {
            Vertex a = static_cast<Vertex>(rng.next_below(n));
            Vertex b = static_cast<Vertex>(rng.next_below(n));
            if (a != b) es.push_back({std::min(a, b), std::max(a, b)});
        }
        std::sort(es.begin(), es.end());
        es.erase(std::unique(es.begin(), es.end()), es.end());
        Graph g = Graph::from_edges(n, es);
        std::vector<DistanceVector> d;
        for (Vertex v = 0; v < n; ++v) d.push_back(bfs(g, v));
        for (int probe = 0; probe < 200; ++probe) {
            Vertex u = static_cast<Vertex>(rng.next_below(n));
            Vertex v = static_cast<Vertex>(rng.next_below(n));
            Vertex w = static_cast<Vertex>(rng.next_below(n));
            CHECK(d[u].dist[w] <= d[u].dist[v] + d[v].dist[w]);
        }
    }
}

TEST_CASE("edge list and DIMACS parsing") {
    std::istringstream e1("# comment\n0 1\n1 2\n2 0\n1 0\n");
    Graph g = read_graph(e1, "t");
    CHECK(g.vertex_count() == 3);
    CHECK(g.edge_count() == 3);  // reversed duplicate collapsed

    std::istringstream d1("c header\np edge 3 2\ne 1 2\ne 2 3\n");
    g = read_graph(d1, "t");
    CHECK(g.vertex_count() == 3);
    CHECK(g.has_edge(0, 1));
    CHECK(g.has_edge(1, 2));

    std::istringstream bad("0 1\n3 x\n");
    CHECK_THROWS_WITH_AS(read_graph(bad, "t"), doctest::Contains("t:2"), input_error);

    std::istringstream self("2 2\n");
    CHECK_THROWS_AS(read_graph(self, "t"), input_error);

    // Round trip.
    Graph sp = fixtures::spider3();
    std::ostringstream out;
    write_edge_list(out, sp);
    std::istringstream back(out.str());
    Graph sp2 = read_graph(back, "t");
    CHECK(sp2.edges() == sp.edges());
}

#pragma once

#include <vector>

#include "extremal/generators.hpp"
#include "extremal/graph.hpp"

namespace fixtures {

using extremal::Edge;
using extremal::Graph;
using extremal::Vertex;

inline Graph path(int n) {
    std::vector<Edge> es;
    for (int i = 0; i + 1 < n; ++i) es.push_back({i, i + 1});
    return Graph::from_edges(n, es);
}

inline Graph cycle(int n) {
    std::vector<Edge> es;
    for (int i = 0; i < n; ++i) es.push_back({i, (i + 1) % n});
    return Graph::from_edges(n, es);
}

inline Graph complete(int n) {
    std::vector<Edge> es;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) es.push_back({i, j});
    return Graph::from_edges(n, es);
}

inline Graph star(int leaves) {
    std::vector<Edge> es;
    for (int i = 1; i <= leaves; ++i) es.push_back({0, i});
    return Graph::from_edges(leaves + 1, es);
}

// Center 0; legs (1,2), (3,4), (5,6).
inline Graph spider3() { return extremal::gen_spider(3, 2); }

inline Graph petersen() {
    std::vector<Edge> es;
    for (int i = 0; i < 5; ++i) {
        es.push_back({i, (i + 1) % 5});
        es.push_back({i, i + 5});
        es.push_back({5 + i, 5 + ((i + 2) % 5)});
    }
    return Graph::from_edges(10, es);
}

// Clique 0..cq-1; independent vertices cq.. attach to prescribed clique subsets.
inline Graph split_graph(int cq, const std::vector<std::vector<int>>& attachments) {
    std::vector<Edge> es;
    for (int i = 0; i < cq; ++i)
        for (int j = i + 1; j < cq; ++j) es.push_back({i, j});
    int next = cq;
    for (const auto& at : attachments) {
        for (int c : at) es.push_back({c, next});
        ++next;
    }
    return Graph::from_edges(next, es);
}

} // namespace fixtures

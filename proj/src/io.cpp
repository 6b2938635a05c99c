#include "extremal/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace extremal {

namespace {

[[noreturn]] void fail(const std::string& name, int line, const std::string& msg) {
    throw input_error(name + ":" + std::to_string(line) + ": " + msg);
}

bool parse_vertex(const std::string& tok, long long& out) {
    if (tok.empty()) return false;
    std::size_t pos = 0;
    try {
        out = std::stoll(tok, &pos);
    } catch (...) {
        return false;
    }
    return pos == tok.size();
}

Graph finish(std::vector<Edge>& edges, long long max_id) {
    for (auto& [u, v] : edges)
        if (u > v) std::swap(u, v);
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return Graph::from_edges(static_cast<Vertex>(max_id + 1), edges);
}

} // namespace

Graph read_graph(std::istream& in, const std::string& name) {
    std::vector<Edge> edges;
    long long max_id = -1;
    long long declared_n = -1;
    bool dimacs = false;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string stripped = line.substr(0, line.find('#'));
        std::istringstream ls(stripped);
        std::string first;
        if (!(ls >> first)) continue;
        if (first == "c") continue;  // DIMACS comment
        if (first == "p") {
            std::string kind;
            long long n = 0, m = 0;
            if (!(ls >> kind >> n >> m) || kind != "edge" || n < 0)
                fail(name, lineno, "malformed DIMACS header");
            dimacs = true;
            declared_n = n;
            max_id = std::max(max_id, n - 1);
            continue;
        }
        std::string a, b, extra;
        long long u, v;
        if (dimacs || first == "e") {
            if (first != "e") fail(name, lineno, "expected 'e u v' line");
            if (!(ls >> a >> b) || (ls >> extra))
                fail(name, lineno, "expected 'e u v' line");
            if (!parse_vertex(a, u) || !parse_vertex(b, v))
                fail(name, lineno, "non-integer vertex id");
            if (u < 1 || v < 1 || u > declared_n || v > declared_n)
                fail(name, lineno, "vertex id outside 1.." + std::to_string(declared_n));
            --u;
            --v;
        } else {
            a = first;
            if (!(ls >> b) || (ls >> extra)) fail(name, lineno, "expected 'u v' line");
            if (!parse_vertex(a, u) || !parse_vertex(b, v))
                fail(name, lineno, "non-integer vertex id");
            if (u < 0 || v < 0) fail(name, lineno, "negative vertex id");
        }
        if (u == v) fail(name, lineno, "self-loop at vertex " + std::to_string(u));
        max_id = std::max({max_id, u, v});
        edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
    if (max_id < 0) throw input_error(name + ": no vertices");
    return finish(edges, max_id);
}

Graph read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open " + path);
    return read_graph(in, path);
}

void write_edge_list(std::ostream& out, const Graph& g) {
    out << "# " << g.vertex_count() << " vertices, " << g.edge_count() << " edges\n";
    for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
}

void write_edge_list_file(const std::string& path, const Graph& g) {
    std::ofstream out(path);
    if (!out) throw input_error("cannot open " + path + " for writing");
    write_edge_list(out, g);
}

} // namespace extremal

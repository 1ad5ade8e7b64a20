#include "hl/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "hl/errors.hpp"

namespace hl {

namespace {
[[noreturn]] void fail(int line, const std::string& what) {
    throw IoError("edge list line " + std::to_string(line) + ": " + what);
}
}  // namespace

EdgeListData read_edge_list(std::istream& in) {
    std::string line;
    int lineno = 0;
    long n = -1;
    std::vector<Edge> edges;
    WeightAssignment weights;
    bool any_weight = false, any_bare = false;
    std::vector<std::tuple<Vertex, Vertex, double>> weighted_edges;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        if (n < 0) {
            if (!(ls >> n) || n < 0) {
                if (line.find_first_not_of(" \t\r") == std::string::npos) {
                    n = -1;
                    continue;  // leading comment/blank line
                }
                fail(lineno, "expected vertex count");
            }
            std::string rest;
            if (ls >> rest) fail(lineno, "trailing tokens after vertex count");
            continue;
        }
        long u, v;
        if (!(ls >> u)) {
            if (line.find_first_not_of(" \t\r") != std::string::npos)
                fail(lineno, "malformed line");
            continue;
        }
        if (!(ls >> v)) fail(lineno, "malformed line: missing second endpoint");
        if (u < 0 || v < 0 || u >= n || v >= n) fail(lineno, "vertex id out of range");
        if (u >= v) fail(lineno, "endpoints must satisfy u < v");
        double w;
        if (ls >> w) {
            if (w < 0) fail(lineno, "negative weight");
            any_weight = true;
            weighted_edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v), w);
        } else {
            any_bare = true;
        }
        std::string rest;
        ls.clear();
        if (ls >> rest) fail(lineno, "trailing tokens");
        edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
    if (n < 0) throw IoError("edge list: missing vertex count line");
    if (any_weight && any_bare)
        throw IoError("edge list: mixed weighted and unweighted lines");
    EdgeListData out;
    try {
        out.graph = Graph(static_cast<int>(n), edges);
    } catch (const std::invalid_argument& e) {
        throw IoError(std::string("edge list: ") + e.what());
    }
    if (any_weight) {
        for (auto [u, v, w] : weighted_edges) weights.set(u, v, w);
        out.weights = std::move(weights);
    }
    return out;
}

EdgeListData read_edge_list(const std::string& text) {
    std::istringstream in(text);
    return read_edge_list(in);
}

EdgeListData read_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path);
    try {
        return read_edge_list(in);
    } catch (const IoError& e) {
        throw IoError(path + ": " + e.what());
    }
}

std::string write_edge_list(const Graph& g, const WeightAssignment* w) {
    std::ostringstream out;
    out << g.vertex_count() << "\n";
    char buf[32];
    for (auto [u, v] : g.edges()) {
        out << u << " " << v;
        if (w != nullptr) {
            std::snprintf(buf, sizeof buf, "%.17g", w->weight(u, v));
            out << " " << buf;
        }
        out << "\n";
    }
    return out.str();
}

void write_edge_list_file(const std::string& path, const Graph& g,
                          const WeightAssignment* w) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open " + path + " for writing");
    out << write_edge_list(g, w);
    if (!out) throw IoError("write failed: " + path);
}

}  // namespace hl

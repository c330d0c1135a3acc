#pragma once

#include <array>
#include <string>
#include <vector>

#include "fulleroct/codec.hpp"
#include "fulleroct/graph.hpp"

namespace testing {

using namespace fulleroct;

inline std::string data_path(const std::string& name) { return std::string(FULLEROCT_TEST_DATA) + "/" + name; }

inline std::vector<EmbeddedGraph> load(const std::string& name) { return parse_planar_code(read_file(data_path(name))); }

inline EmbeddedGraph octahedron() {
    // poles 0 and 5, equator 1..4
    const std::array<Vertex, 3> tris[] = {{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 1},
                                          {5, 2, 1}, {5, 3, 2}, {5, 4, 3}, {5, 1, 4}};
    return from_oriented_triangles(6, tris);
}

inline EmbeddedGraph cycle(int n) {
    std::vector<std::vector<Vertex>> rot(n);
    for (int i = 0; i < n; ++i) rot[i] = {(i + n - 1) % n, (i + 1) % n};
    return EmbeddedGraph(rot);
}

inline EmbeddedGraph single_edge() { return EmbeddedGraph({{1}, {0}}); }
inline EmbeddedGraph triangle() { return EmbeddedGraph({{1, 2}, {2, 0}, {0, 1}}); }

// Floyd-Warshall all-pairs distances, an oracle independent of BFS.
inline std::vector<std::vector<int>> all_pairs(const EmbeddedGraph& g) {
    const int n = g.vertex_count();
    const int inf = 1 << 20;
    std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
    for (int v = 0; v < n; ++v) d[v][v] = 0;
    for (const Edge& e : g.edges()) d[e.u][e.v] = d[e.v][e.u] = 1;
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
    return d;
}

}  // namespace testing

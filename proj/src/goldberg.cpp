#include "fulleroct/goldberg.hpp"

#include <algorithm>

namespace fulleroct {

EmbeddedGraph tetrahedron() {
    const std::array<Vertex, 3> tris[] = {{0, 1, 2}, {0, 2, 3}, {0, 3, 1}, {1, 3, 2}};
    return from_oriented_triangles(4, tris);
}

EmbeddedGraph icosahedron() {
    // apex 0, upper ring 1..5, lower ring 6..10 (6+i sits between 1+i and 1+i+1), nadir 11
    std::vector<std::array<Vertex, 3>> tris;
    for (int i = 0; i < 5; ++i) {
        const Vertex u0 = 1 + i, u1 = 1 + (i + 1) % 5;
        const Vertex l0 = 6 + i, l1 = 6 + (i + 1) % 5;
        tris.push_back({0, u0, u1});
        tris.push_back({u0, l0, u1});
        tris.push_back({u1, l0, l1});
        tris.push_back({11, l1, l0});
    }
    return from_oriented_triangles(12, tris);
}

EmbeddedGraph class_one_subdivision(const EmbeddedGraph& g, int k) {
    if (k < 1) throw GraphError("subdivision frequency must be positive");
    if (k == 1) return g;
    const auto tris = oriented_triangles(g);
    const int n = g.vertex_count();
    const int m = g.edge_count();
    const int per_edge = k - 1;
    const int per_face = (k - 1) * (k - 2) / 2;
    const int face_base = n + m * per_edge;

    // offset of interior lattice point (i, j) within a face block
    std::vector<std::vector<int>> interior(k + 1, std::vector<int>(k + 1, -1));
    for (int i = 1, idx = 0; i <= k - 2; ++i)
        for (int j = 1; i + j <= k - 1; ++j) interior[i][j] = idx++;

    auto edge_point = [&](Vertex x, Vertex y, int t) {
        const EdgeId e = g.edge_id(x, y);
        const int from_low = x < y ? t : k - t;
        return n + e * per_edge + from_low - 1;
    };

    std::vector<std::array<Vertex, 3>> out;
    out.reserve(tris.size() * k * k);
    for (std::size_t f = 0; f < tris.size(); ++f) {
        const auto [a, b, c] = tris[f];
        // lattice point a + i/k (b - a) + j/k (c - a)
        auto point = [&](int i, int j) -> Vertex {
            if (i == 0 && j == 0) return a;
            if (i == k) return b;
            if (j == k) return c;
            if (j == 0) return edge_point(a, b, i);
            if (i == 0) return edge_point(a, c, j);
            if (i + j == k) return edge_point(b, c, j);
            return face_base + static_cast<int>(f) * per_face + interior[i][j];
        };
        for (int i = 0; i < k; ++i) {
            for (int j = 0; i + j < k; ++j) {
                out.push_back({point(i, j), point(i + 1, j), point(i, j + 1)});
                if (i + j <= k - 2) out.push_back({point(i + 1, j), point(i + 1, j + 1), point(i, j + 1)});
            }
        }
    }
    return from_oriented_triangles(face_base + static_cast<int>(tris.size()) * per_face, out);
}

EmbeddedGraph sqrt3_subdivision(const EmbeddedGraph& g) {
    if (!is_plane_triangulation(g)) throw GraphError("sqrt3 subdivision expects a plane triangulation");
    const FaceStructure fs = trace_faces(g);
    const int n = g.vertex_count();
    std::vector<std::array<Vertex, 3>> tris;
    for (Vertex u = 0; u < n; ++u) {
        for (int s = 0; s < g.degree(u); ++s) {
            const Vertex v = g.rotation(u)[s];
            if (v < u) continue;
            const Vertex c1 = n + fs.dart_face[u][s];
            const Vertex c2 = n + fs.dart_face[v][g.reverse_slot(u, s)];
            // the quad u, c2, v, c1 split along c1-c2 instead of u-v
            tris.push_back({u, c2, c1});
            tris.push_back({c2, v, c1});
        }
    }
    return from_oriented_triangles(n + static_cast<int>(fs.cycles.size()), tris);
}

EmbeddedGraph remove_degree_three(const EmbeddedGraph& g) {
    const int n = g.vertex_count();
    std::vector<Vertex> new_id(n, -1);
    int next = 0;
    for (Vertex v = 0; v < n; ++v)
        if (g.degree(v) != 3) new_id[v] = next++;
    for (Vertex v = 0; v < n; ++v)
        if (g.degree(v) == 3)
            for (Vertex w : g.rotation(v))
                if (g.degree(w) == 3) throw GraphError("adjacent degree-3 vertices cannot both be removed");

    std::vector<std::array<Vertex, 3>> tris;
    for (const auto& [a, b, c] : oriented_triangles(g))
        if (new_id[a] >= 0 && new_id[b] >= 0 && new_id[c] >= 0) tris.push_back({new_id[a], new_id[b], new_id[c]});
    for (Vertex v = 0; v < n; ++v) {
        if (g.degree(v) != 3) continue;
        const auto r = g.rotation(v);
        tris.push_back({new_id[r[0]], new_id[r[1]], new_id[r[2]]});
    }
    return from_oriented_triangles(next, tris);
}

Triangulation icosahedral_dual(int k) {
    if (k < 1) throw GraphError("icosahedral_dual needs k >= 1");
    return make_triangulation(class_one_subdivision(sqrt3_subdivision(icosahedron()), k));
}

FullereneGraph icosahedral_fullerene(int k) {
    return validate_fullerene(dual_graph(icosahedral_dual(k).graph()).graph);
}

Triangulation truncated_tetrahedral_dual(int k) {
    if (k < 3) throw GraphError("truncated_tetrahedral_dual needs k >= 3");
    return make_triangulation(remove_degree_three(class_one_subdivision(tetrahedron(), k)));
}

}  // namespace fulleroct

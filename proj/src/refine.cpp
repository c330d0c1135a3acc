#include "fulleroct/refine.hpp"

namespace fulleroct {

EmbeddedGraph subdivide(const EmbeddedGraph& g) {
    const int n = g.vertex_count();
    std::vector<std::vector<Vertex>> rot(n + g.edge_count());
    for (Vertex v = 0; v < n; ++v)
        for (int s = 0; s < g.degree(v); ++s) rot[v].push_back(n + g.edge_at(v, s));
    for (EdgeId e = 0; e < g.edge_count(); ++e) rot[n + e] = {g.edge(e).u, g.edge(e).v};
    return EmbeddedGraph(std::move(rot));
}

RefinedTriangulation refine(const EmbeddedGraph& g) {
    if (!is_plane_triangulation(g)) throw GraphError("refine expects a plane triangulation");
    const int n = g.vertex_count();
    auto mid = [&](Vertex a, Vertex b) { return n + g.edge_id(a, b); };

    std::vector<std::array<Vertex, 3>> tris;
    for (const auto& [a, b, c] : oriented_triangles(g)) {
        const Vertex ab = mid(a, b), bc = mid(b, c), ca = mid(c, a);
        tris.push_back({a, ab, ca});
        tris.push_back({ab, b, bc});
        tris.push_back({ca, bc, c});
        tris.push_back({ab, bc, ca});
    }
    RefinedTriangulation rt{from_oriented_triangles(n + g.edge_count(), tris), n, odd_degree_vertices(g)};
    return rt;
}

RefinedTriangulation refine(const Triangulation& t) { return refine(t.graph()); }

Triangulation as_triangulation(const RefinedTriangulation& rt) { return make_triangulation(rt.graph); }

}  // namespace fulleroct

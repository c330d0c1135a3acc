#pragma once

#include <vector>

#include "fulleroct/graph.hpp"

namespace fulleroct {

/// The refinement of a plane triangulation: every edge subdivided once and an
/// inner triangle added in every face. Original vertices keep their ids; the
/// subdivision vertex of edge e gets id `original_count + e`.
struct RefinedTriangulation {
    EmbeddedGraph graph;
    int original_count = 0;
    /// Odd-degree vertices of the origin (equal to the odd-degree vertices here).
    std::vector<Vertex> terminals;

    bool is_original(Vertex v) const { return v < original_count; }
    /// Preimage of an original vertex (identity on ids).
    Vertex preimage(Vertex v) const { return v; }
    /// Original edge subdivided by a subdivision vertex.
    EdgeId origin_edge(Vertex v) const { return v - original_count; }
};

/// Replaces every edge by a path of length two. Vertex v keeps its id and its
/// rotation order; the midpoint of edge e gets id n + e.
EmbeddedGraph subdivide(const EmbeddedGraph& triangulation);

RefinedTriangulation refine(const EmbeddedGraph& triangulation);
RefinedTriangulation refine(const Triangulation& t);

/// The refinement as a {5,6}-triangulation; throws if the origin was not one.
Triangulation as_triangulation(const RefinedTriangulation& rt);

}  // namespace fulleroct

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "fulleroct/graph.hpp"

namespace fulleroct {

EmbeddedGraph tetrahedron();
EmbeddedGraph icosahedron();

/// Class-I subdivision of frequency k: every triangle becomes k^2 lattice
/// triangles. Original vertices keep their ids, then the k-1 interior points
/// of each edge follow in edge-id order (listed from the lower endpoint), then
/// the interior points of each face in face order.
EmbeddedGraph class_one_subdivision(const EmbeddedGraph& triangulation, int k);

/// The (1,1) Goldberg-Coxeter operation on a triangulation: one new vertex in
/// each face (id n + face index), joined to the corners, with every original
/// edge flipped. Triples the face count.
EmbeddedGraph sqrt3_subdivision(const EmbeddedGraph& triangulation);

/// Deletes every degree-3 vertex of a triangulation, closing each hole with the
/// triangle on its link. Surviving vertices keep their relative order.
EmbeddedGraph remove_degree_three(const EmbeddedGraph& triangulation);

/// Dual of the icosahedral fullerene on 60k^2 vertices: the (k,k) geodesic
/// triangulation, built as the frequency-k class-I subdivision of the
/// pentakis dodecahedron (the (1,1) triangulation of the icosahedron).
Triangulation icosahedral_dual(int k);
FullereneGraph icosahedral_fullerene(int k);

/// Truncated tetrahedral triangulation: frequency-k tetrahedron with its four
/// corners cut off. k = 3 is dual to the tetrahedral C28; k = 4 gives a
/// 56-face triangulation whose terminals come in four mutually adjacent triples.
Triangulation truncated_tetrahedral_dual(int k);

/// Bundled fullerenes, named by isomer: "20:1", "24:1", "28:2", "40:40", "60:1812".
FullereneGraph named_fixture(std::string_view name);
std::vector<std::string> fixture_names();

}  // namespace fulleroct

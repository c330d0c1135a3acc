#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace fulleroct {

using Vertex = int;
using EdgeId = int;

/// Unordered edge, stored with u < v.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

class GraphError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A connected plane graph given by its rotation system.
///
/// `rotation(v)` lists the neighbours of v in counterclockwise order. Edge
/// ids are the positions of the (min, max) pairs in lexicographic order, so
/// they are a pure function of the vertex set and adjacency. Construction
/// checks symmetry, simplicity, connectivity and Euler's formula for the
/// traced faces; an object that exists is always a valid sphere embedding.
class EmbeddedGraph {
public:
    EmbeddedGraph() = default;
    explicit EmbeddedGraph(std::vector<std::vector<Vertex>> rotation);

    int vertex_count() const { return static_cast<int>(rotation_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    int face_count() const { return face_count_; }

    std::span<const Vertex> rotation(Vertex v) const { return rotation_[v]; }
    const std::vector<std::vector<Vertex>>& rotations() const { return rotation_; }
    int degree(Vertex v) const { return static_cast<int>(rotation_[v].size()); }

    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(EdgeId e) const { return edges_[e]; }

    /// Edge id of the dart leaving v through rotation slot `slot`.
    EdgeId edge_at(Vertex v, int slot) const { return edge_at_[v][slot]; }
    /// Slot of v in the rotation of its neighbour rotation(v)[slot].
    int reverse_slot(Vertex v, int slot) const { return reverse_slot_[v][slot]; }

    std::optional<EdgeId> find_edge(Vertex a, Vertex b) const;
    EdgeId edge_id(Vertex a, Vertex b) const;
    bool adjacent(Vertex a, Vertex b) const { return find_edge(a, b).has_value(); }
    int slot_of(Vertex v, Vertex neighbour) const;

    friend bool operator==(const EmbeddedGraph& a, const EmbeddedGraph& b) {
        return a.rotation_ == b.rotation_;
    }

private:
    std::vector<std::vector<Vertex>> rotation_;
    std::vector<Edge> edges_;
    std::vector<std::vector<EdgeId>> edge_at_;
    std::vector<std::vector<int>> reverse_slot_;
    int face_count_ = 0;
};

/// Face cycles together with the face of every dart.
struct FaceStructure {
    std::vector<std::vector<Vertex>> cycles;
    /// dart_face[v][slot] is the face traced by the dart v -> rotation(v)[slot].
    std::vector<std::vector<int>> dart_face;
};

/// Traces faces with the rule: after the dart u->v, continue with v->w where w
/// is the neighbour immediately clockwise of u around v. With counterclockwise
/// rotations every face is then walked with its interior on the left.
FaceStructure trace_faces(const EmbeddedGraph& g);
std::vector<std::vector<Vertex>> faces(const EmbeddedGraph& g);

/// Builds a sphere triangulation from consistently oriented (counterclockwise)
/// triangles. Each rotation starts at the smallest neighbour id.
EmbeddedGraph from_oriented_triangles(int vertex_count,
                                      std::span<const std::array<Vertex, 3>> triangles);

/// Faces of a triangulation as oriented triangles; throws if some face is not a triangle.
std::vector<std::array<Vertex, 3>> oriented_triangles(const EmbeddedGraph& g);

bool is_plane_triangulation(const EmbeddedGraph& g);
std::vector<Vertex> odd_degree_vertices(const EmbeddedGraph& g);

// ---------------------------------------------------------------------------
// Fullerenes and their dual triangulations

enum class FullereneViolation { NotCubic, Disconnected, BadFaceSize, Bridge };

const char* to_string(FullereneViolation v);

class FullereneError : public std::runtime_error {
public:
    FullereneError(FullereneViolation kind, int index, const std::string& what)
        : std::runtime_error(what), kind_(kind), index_(index) {}

    FullereneViolation kind() const { return kind_; }
    /// Offending vertex, face or edge id, depending on kind().
    int index() const { return index_; }

private:
    FullereneViolation kind_;
    int index_;
};

class FullereneGraph {
public:
    const EmbeddedGraph& graph() const { return graph_; }
    const std::vector<std::vector<Vertex>>& faces() const { return faces_; }
    const std::vector<int>& pentagons() const { return pentagons_; }
    int vertex_count() const { return graph_.vertex_count(); }

private:
    friend FullereneGraph validate_fullerene(EmbeddedGraph g);
    EmbeddedGraph graph_;
    std::vector<std::vector<Vertex>> faces_;
    std::vector<int> pentagons_;
};

/// Accepts cubic bridgeless plane graphs whose faces all have size 5 or 6.
/// Throws FullereneError naming the first violated clause.
FullereneGraph validate_fullerene(EmbeddedGraph g);
/// Same, starting from raw rotation lists so a disconnected input is reported
/// as FullereneViolation::Disconnected rather than a generic GraphError.
FullereneGraph validate_fullerene(std::vector<std::vector<Vertex>> rotation);

/// Plane triangulation with all degrees in {5, 6}; terminals are the 5-vertices.
class Triangulation {
public:
    const EmbeddedGraph& graph() const { return graph_; }
    const std::vector<Vertex>& terminals() const { return terminals_; }
    bool is_terminal(Vertex v) const { return graph_.degree(v) == 5; }

private:
    friend Triangulation make_triangulation(EmbeddedGraph g);
    EmbeddedGraph graph_;
    std::vector<Vertex> terminals_;
};

Triangulation make_triangulation(EmbeddedGraph g);

/// Dual map with the primal/dual edge bijection.
struct DualGraph {
    EmbeddedGraph graph;
    /// primal_edge[e*] is the primal edge crossed by dual edge e*.
    std::vector<EdgeId> primal_edge;
    /// dual_edge[e] is the dual edge crossing primal edge e.
    std::vector<EdgeId> dual_edge;
};

/// Dual vertex i is primal face i of trace_faces(g). Throws GraphError when the
/// dual would have a loop or a parallel edge.
DualGraph dual_graph(const EmbeddedGraph& g);

struct FullereneDual {
    Triangulation triangulation;
    std::vector<EdgeId> primal_edge;
    std::vector<EdgeId> dual_edge;
};

FullereneDual dual(const FullereneGraph& f);

// ---------------------------------------------------------------------------
// Metrics

inline constexpr int unreachable = -1;

std::vector<int> bfs_distances(const EmbeddedGraph& g, Vertex source);
/// Multi-source distances: dist(v, X).
std::vector<int> bfs_distances(const EmbeddedGraph& g, std::span<const Vertex> sources);
int diameter(const EmbeddedGraph& g);

/// 2-colouring of the graph with the given edges removed; nullopt if some
/// component is not bipartite. Colour -1 marks vertices in `removed_vertices`.
std::optional<std::vector<int>> two_coloring(const EmbeddedGraph& g,
                                             std::span<const EdgeId> removed_edges = {},
                                             std::span<const Vertex> removed_vertices = {});

/// True if the two rotation systems describe the same map up to relabelling
/// (reflections allowed). Quadratic in the edge count.
bool isomorphic_maps(const EmbeddedGraph& a, const EmbeddedGraph& b);

}  // namespace fulleroct

#include "fulleroct/graph.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>

namespace fulleroct {

namespace {

// Counts face orbits of the dart permutation without materialising cycles.
int count_faces(const std::vector<std::vector<Vertex>>& rot,
                const std::vector<std::vector<int>>& rev) {
    const int n = static_cast<int>(rot.size());
    std::vector<int> offset(n + 1, 0);
    for (int v = 0; v < n; ++v) offset[v + 1] = offset[v] + static_cast<int>(rot[v].size());
    if (offset[n] == 0) return 1;
    std::vector<char> seen(offset[n], 0);
    int count = 0;
    for (int v = 0; v < n; ++v) {
        for (int s = 0; s < static_cast<int>(rot[v].size()); ++s) {
            if (seen[offset[v] + s]) continue;
            ++count;
            int x = v, slot = s;
            while (!seen[offset[x] + slot]) {
                seen[offset[x] + slot] = 1;
                const Vertex w = rot[x][slot];
                const int d = static_cast<int>(rot[w].size());
                slot = (rev[x][slot] + d - 1) % d;
                x = w;
            }
        }
    }
    return count;
}

}  // namespace

EmbeddedGraph::EmbeddedGraph(std::vector<std::vector<Vertex>> rotation)
    : rotation_(std::move(rotation)) {
    const int n = vertex_count();
    if (n == 0) throw GraphError("graph has no vertices");

    for (Vertex v = 0; v < n; ++v) {
        const auto& r = rotation_[v];
        for (Vertex w : r) {
            if (w < 0 || w >= n)
                throw GraphError("vertex " + std::to_string(v) + " has out-of-range neighbour " +
                                 std::to_string(w));
            if (w == v) throw GraphError("loop at vertex " + std::to_string(v));
        }
        std::vector<Vertex> sorted(r);
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw GraphError("repeated neighbour in rotation of vertex " + std::to_string(v));
    }

    reverse_slot_.resize(n);
    for (Vertex v = 0; v < n; ++v) {
        reverse_slot_[v].resize(rotation_[v].size());
        for (std::size_t s = 0; s < rotation_[v].size(); ++s) {
            const Vertex w = rotation_[v][s];
            const auto& rw = rotation_[w];
            auto it = std::find(rw.begin(), rw.end(), v);
            if (it == rw.end())
                throw GraphError("asymmetric adjacency: " + std::to_string(v) + " lists " +
                                 std::to_string(w) + " but not conversely");
            reverse_slot_[v][s] = static_cast<int>(it - rw.begin());
        }
    }

    for (Vertex v = 0; v < n; ++v)
        for (Vertex w : rotation_[v])
            if (v < w) edges_.push_back({v, w});
    std::sort(edges_.begin(), edges_.end());

    edge_at_.resize(n);
    for (Vertex v = 0; v < n; ++v) {
        edge_at_[v].reserve(rotation_[v].size());
        for (Vertex w : rotation_[v]) {
            const Edge key{std::min(v, w), std::max(v, w)};
            edge_at_[v].push_back(
                static_cast<EdgeId>(std::lower_bound(edges_.begin(), edges_.end(), key) - edges_.begin()));
        }
    }

    std::vector<char> reached(n, 0);
    std::vector<Vertex> stack{0};
    reached[0] = 1;
    int reached_count = 1;
    while (!stack.empty()) {
        const Vertex v = stack.back();
        stack.pop_back();
        for (Vertex w : rotation_[v])
            if (!reached[w]) {
                reached[w] = 1;
                ++reached_count;
                stack.push_back(w);
            }
    }
    if (reached_count != n) throw GraphError("graph is disconnected");

    face_count_ = count_faces(rotation_, reverse_slot_);
    if (n - edge_count() + face_count_ != 2)
        throw GraphError("rotation system is not a sphere embedding (n - m + f = " +
                         std::to_string(n - edge_count() + face_count_) + ")");
}

std::optional<EdgeId> EmbeddedGraph::find_edge(Vertex a, Vertex b) const {
    if (a < 0 || b < 0 || a >= vertex_count() || b >= vertex_count()) return std::nullopt;
    const auto& r = rotation_[a];
    for (std::size_t s = 0; s < r.size(); ++s)
        if (r[s] == b) return edge_at_[a][s];
    return std::nullopt;
}

EdgeId EmbeddedGraph::edge_id(Vertex a, Vertex b) const {
    if (auto e = find_edge(a, b)) return *e;
    throw GraphError("no edge " + std::to_string(a) + "-" + std::to_string(b));
}

int EmbeddedGraph::slot_of(Vertex v, Vertex neighbour) const {
    const auto& r = rotation_[v];
    auto it = std::find(r.begin(), r.end(), neighbour);
    if (it == r.end())
        throw GraphError("no edge " + std::to_string(v) + "-" + std::to_string(neighbour));
    return static_cast<int>(it - r.begin());
}

FaceStructure trace_faces(const EmbeddedGraph& g) {
    FaceStructure fs;
    const int n = g.vertex_count();
    fs.dart_face.resize(n);
    for (Vertex v = 0; v < n; ++v) fs.dart_face[v].assign(g.degree(v), -1);
    if (g.edge_count() == 0) {
        fs.cycles.emplace_back();
        return fs;
    }
    for (Vertex v = 0; v < n; ++v) {
        for (int s = 0; s < g.degree(v); ++s) {
            if (fs.dart_face[v][s] >= 0) continue;
            const int face = static_cast<int>(fs.cycles.size());
            std::vector<Vertex> cycle;
            Vertex x = v;
            int slot = s;
            while (fs.dart_face[x][slot] < 0) {
                fs.dart_face[x][slot] = face;
                cycle.push_back(x);
                const Vertex w = g.rotation(x)[slot];
                const int d = g.degree(w);
                slot = (g.reverse_slot(x, slot) + d - 1) % d;
                x = w;
            }
            fs.cycles.push_back(std::move(cycle));
        }
    }
    return fs;
}

std::vector<std::vector<Vertex>> faces(const EmbeddedGraph& g) { return trace_faces(g).cycles; }

EmbeddedGraph from_oriented_triangles(int vertex_count,
                                      std::span<const std::array<Vertex, 3>> triangles) {
    // next[v][x] = y  <=>  y follows x counterclockwise around v
    std::vector<std::map<Vertex, Vertex>> next(vertex_count);
    for (const auto& t : triangles) {
        for (int i = 0; i < 3; ++i) {
            const Vertex v = t[i], x = t[(i + 1) % 3], y = t[(i + 2) % 3];
            if (v < 0 || v >= vertex_count) throw GraphError("triangle vertex out of range");
            if (!next[v].emplace(x, y).second)
                throw GraphError("triangles are not consistently oriented at vertex " +
                                 std::to_string(v));
        }
    }
    std::vector<std::vector<Vertex>> rot(vertex_count);
    for (Vertex v = 0; v < vertex_count; ++v) {
        if (next[v].empty()) throw GraphError("vertex " + std::to_string(v) + " is in no triangle");
        const Vertex start = next[v].begin()->first;
        Vertex x = start;
        do {
            rot[v].push_back(x);
            auto it = next[v].find(x);
            if (it == next[v].end())
                throw GraphError("link of vertex " + std::to_string(v) + " is not a closed cycle");
            x = it->second;
        } while (x != start && rot[v].size() <= next[v].size());
        if (rot[v].size() != next[v].size())
            throw GraphError("link of vertex " + std::to_string(v) + " is not a single cycle");
    }
    return EmbeddedGraph(std::move(rot));
}

std::vector<std::array<Vertex, 3>> oriented_triangles(const EmbeddedGraph& g) {
    std::vector<std::array<Vertex, 3>> out;
    for (const auto& c : faces(g)) {
        if (c.size() != 3) throw GraphError("face of size " + std::to_string(c.size()) + " in triangulation");
        out.push_back({c[0], c[1], c[2]});
    }
    return out;
}

bool is_plane_triangulation(const EmbeddedGraph& g) {
    if (g.vertex_count() < 3) return false;
    return 3 * g.face_count() == 2 * g.edge_count() &&
           std::ranges::all_of(faces(g), [](const auto& c) { return c.size() == 3; });
}

std::vector<Vertex> odd_degree_vertices(const EmbeddedGraph& g) {
    std::vector<Vertex> out;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) % 2 == 1) out.push_back(v);
    return out;
}

const char* to_string(FullereneViolation v) {
    switch (v) {
        case FullereneViolation::NotCubic: return "NotCubic";
        case FullereneViolation::Disconnected: return "Disconnected";
        case FullereneViolation::BadFaceSize: return "BadFaceSize";
        case FullereneViolation::Bridge: return "Bridge";
    }
    return "?";
}

namespace {

// First bridge in edge-id order, via iterative low-link DFS.
std::optional<EdgeId> find_bridge(const EmbeddedGraph& g) {
    const int n = g.vertex_count();
    std::vector<int> order(n, -1), low(n, 0);
    std::vector<EdgeId> bridges;
    int counter = 0;
    struct Frame {
        Vertex v;
        EdgeId via;
        int slot;
    };
    for (Vertex root = 0; root < n; ++root) {
        if (order[root] >= 0) continue;
        std::vector<Frame> stack{{root, -1, 0}};
        order[root] = low[root] = counter++;
        while (!stack.empty()) {
            Frame& f = stack.back();
            if (f.slot < g.degree(f.v)) {
                const int s = f.slot++;
                const Vertex w = g.rotation(f.v)[s];
                const EdgeId e = g.edge_at(f.v, s);
                if (e == f.via) continue;
                if (order[w] < 0) {
                    order[w] = low[w] = counter++;
                    stack.push_back({w, e, 0});
                } else {
                    low[f.v] = std::min(low[f.v], order[w]);
                }
            } else {
                const Frame done = f;
                stack.pop_back();
                if (!stack.empty()) {
                    Frame& parent = stack.back();
                    low[parent.v] = std::min(low[parent.v], low[done.v]);
                    if (low[done.v] > order[parent.v]) bridges.push_back(done.via);
                }
            }
        }
    }
    if (bridges.empty()) return std::nullopt;
    return *std::min_element(bridges.begin(), bridges.end());
}

}  // namespace

FullereneGraph validate_fullerene(EmbeddedGraph g) {
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) != 3)
            throw FullereneError(FullereneViolation::NotCubic, v,
                                 "vertex " + std::to_string(v) + " has degree " +
                                     std::to_string(g.degree(v)));
    FullereneGraph f;
    f.faces_ = faces(g);
    for (int i = 0; i < static_cast<int>(f.faces_.size()); ++i) {
        const auto size = f.faces_[i].size();
        if (size != 5 && size != 6)
            throw FullereneError(FullereneViolation::BadFaceSize, i,
                                 "face " + std::to_string(i) + " has size " + std::to_string(size));
        if (size == 5) f.pentagons_.push_back(i);
    }
    if (auto e = find_bridge(g))
        throw FullereneError(FullereneViolation::Bridge, *e, "edge " + std::to_string(*e) + " is a bridge");
    if (f.pentagons_.size() != 12)
        throw GraphError("fullerene with " + std::to_string(f.pentagons_.size()) + " pentagons");
    f.graph_ = std::move(g);
    return f;
}

FullereneGraph validate_fullerene(std::vector<std::vector<Vertex>> rotation) {
    for (std::size_t v = 0; v < rotation.size(); ++v)
        if (rotation[v].size() != 3)
            throw FullereneError(FullereneViolation::NotCubic, static_cast<int>(v),
                                 "vertex " + std::to_string(v) + " has degree " +
                                     std::to_string(rotation[v].size()));
    // A cheap reachability pass so disconnected input is named as such.
    const int n = static_cast<int>(rotation.size());
    if (n > 0) {
        std::vector<char> seen(n, 0);
        std::vector<int> stack{0};
        seen[0] = 1;
        int count = 1;
        while (!stack.empty()) {
            const int v = stack.back();
            stack.pop_back();
            for (int w : rotation[v])
                if (w >= 0 && w < n && !seen[w]) {
                    seen[w] = 1;
                    ++count;
                    stack.push_back(w);
                }
        }
        if (count != n) {
            const int first = static_cast<int>(std::find(seen.begin(), seen.end(), 0) - seen.begin());
            throw FullereneError(FullereneViolation::Disconnected, first,
                                 "vertex " + std::to_string(first) + " is not reachable from vertex 0");
        }
    }
    return validate_fullerene(EmbeddedGraph(std::move(rotation)));
}

Triangulation make_triangulation(EmbeddedGraph g) {
    if (!is_plane_triangulation(g)) throw GraphError("not a plane triangulation");
    Triangulation t;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        const int d = g.degree(v);
        if (d != 5 && d != 6)
            throw GraphError("vertex " + std::to_string(v) + " has degree " + std::to_string(d) +
                             " (expected 5 or 6)");
        if (d == 5) t.terminals_.push_back(v);
    }
    if (t.terminals_.size() != 12)
        throw GraphError("triangulation has " + std::to_string(t.terminals_.size()) + " 5-vertices");
    t.graph_ = std::move(g);
    return t;
}

DualGraph dual_graph(const EmbeddedGraph& g) {
    const FaceStructure fs = trace_faces(g);
    const int f = static_cast<int>(fs.cycles.size());
    std::vector<std::vector<Vertex>> rot(f);
    for (int face = 0; face < f; ++face) {
        const auto& cycle = fs.cycles[face];
        const int len = static_cast<int>(cycle.size());
        for (int i = 0; i < len; ++i) {
            const Vertex v = cycle[i], w = cycle[(i + 1) % len];
            const int s = g.slot_of(v, w);
            const int across = fs.dart_face[w][g.reverse_slot(v, s)];
            if (across == face)
                throw GraphError("edge " + std::to_string(g.edge_at(v, s)) +
                                 " borders a single face; dual has a loop");
            if (std::find(rot[face].begin(), rot[face].end(), across) != rot[face].end())
                throw GraphError("faces " + std::to_string(face) + " and " + std::to_string(across) +
                                 " share two edges; dual has parallel edges");
            rot[face].push_back(across);
        }
    }
    DualGraph d{EmbeddedGraph(std::move(rot)), {}, {}};
    d.primal_edge.assign(d.graph.edge_count(), -1);
    d.dual_edge.assign(g.edge_count(), -1);
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        for (int s = 0; s < g.degree(v); ++s) {
            const Vertex w = g.rotation(v)[s];
            if (w < v) continue;
            const int left = fs.dart_face[v][s];
            const int right = fs.dart_face[w][g.reverse_slot(v, s)];
            const EdgeId e = g.edge_at(v, s);
            const EdgeId de = d.graph.edge_id(left, right);
            d.dual_edge[e] = de;
            d.primal_edge[de] = e;
        }
    }
    return d;
}

FullereneDual dual(const FullereneGraph& f) {
    DualGraph d = dual_graph(f.graph());
    return {make_triangulation(std::move(d.graph)), std::move(d.primal_edge), std::move(d.dual_edge)};
}

std::vector<int> bfs_distances(const EmbeddedGraph& g, Vertex source) {
    const Vertex s[1] = {source};
    return bfs_distances(g, std::span<const Vertex>(s));
}

std::vector<int> bfs_distances(const EmbeddedGraph& g, std::span<const Vertex> sources) {
    std::vector<int> dist(g.vertex_count(), unreachable);
    std::deque<Vertex> queue;
    for (Vertex s : sources)
        if (dist[s] != 0) {
            dist[s] = 0;
            queue.push_back(s);
        }
    while (!queue.empty()) {
        const Vertex v = queue.front();
        queue.pop_front();
        for (Vertex w : g.rotation(v))
            if (dist[w] == unreachable) {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
    }
    return dist;
}

int diameter(const EmbeddedGraph& g) {
    int best = 0;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        const auto d = bfs_distances(g, v);
        best = std::max(best, *std::max_element(d.begin(), d.end()));
    }
    return best;
}

std::optional<std::vector<int>> two_coloring(const EmbeddedGraph& g, std::span<const EdgeId> removed_edges,
                                             std::span<const Vertex> removed_vertices) {
    std::vector<char> edge_gone(g.edge_count(), 0);
    for (EdgeId e : removed_edges) edge_gone.at(e) = 1;
    std::vector<int> color(g.vertex_count(), -2);
    for (Vertex v : removed_vertices) color.at(v) = -1;
    for (Vertex root = 0; root < g.vertex_count(); ++root) {
        if (color[root] != -2) continue;
        color[root] = 0;
        std::deque<Vertex> queue{root};
        while (!queue.empty()) {
            const Vertex v = queue.front();
            queue.pop_front();
            for (int s = 0; s < g.degree(v); ++s) {
                if (edge_gone[g.edge_at(v, s)]) continue;
                const Vertex w = g.rotation(v)[s];
                if (color[w] == -1) continue;
                if (color[w] == -2) {
                    color[w] = 1 - color[v];
                    queue.push_back(w);
                } else if (color[w] == color[v]) {
                    return std::nullopt;
                }
            }
        }
    }
    return color;
}

namespace {

// Tries to extend the dart correspondence (a: v0/slot 0) -> (b: w0/slot s0).
// `sign` = +1 keeps orientation, -1 mirrors it.
bool try_map(const EmbeddedGraph& a, const EmbeddedGraph& b, Vertex w0, int s0, int sign) {
    const int n = a.vertex_count();
    std::vector<Vertex> image(n, -1);
    std::vector<int> anchor(n, 0);  // b-slot matched to a-slot 0 of each vertex
    std::vector<char> used(n, 0);
    std::deque<Vertex> queue;
    auto assign = [&](Vertex x, Vertex y, int a_slot, int b_slot) {
        const int d = a.degree(x);
        if (b.degree(y) != d) return false;
        const int base = ((b_slot - sign * a_slot) % d + d) % d;
        if (image[x] >= 0) return image[x] == y && anchor[x] == base;
        if (used[y]) return false;
        image[x] = y;
        anchor[x] = base;
        used[y] = 1;
        queue.push_back(x);
        return true;
    };
    if (!assign(0, w0, 0, s0)) return false;
    while (!queue.empty()) {
        const Vertex x = queue.front();
        queue.pop_front();
        const int d = a.degree(x);
        for (int i = 0; i < d; ++i) {
            const int j = ((anchor[x] + sign * i) % d + d) % d;
            const Vertex xn = a.rotation(x)[i];
            const Vertex yn = b.rotation(image[x])[j];
            if (!assign(xn, yn, a.reverse_slot(x, i), b.reverse_slot(image[x], j))) return false;
        }
    }
    return true;
}

}  // namespace

bool isomorphic_maps(const EmbeddedGraph& a, const EmbeddedGraph& b) {
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
    if (a.edge_count() == 0) return true;
    for (Vertex w = 0; w < b.vertex_count(); ++w)
        for (int s = 0; s < b.degree(w); ++s)
            for (int sign : {1, -1})
                if (try_map(a, b, w, s, sign)) return true;
    return false;
}

}  // namespace fulleroct

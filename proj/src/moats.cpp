#include "fulleroct/moats.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace fulleroct {

namespace {

std::vector<Vertex> normalised_core(const EmbeddedGraph& g, std::span<const Vertex> core) {
    std::vector<Vertex> x(core.begin(), core.end());
    std::sort(x.begin(), x.end());
    x.erase(std::unique(x.begin(), x.end()), x.end());
    if (x.empty()) throw MoatError(MoatError::Kind::EmptyCore, "empty core");
    if (x.front() < 0 || x.back() >= g.vertex_count())
        throw MoatError(MoatError::Kind::EmptyCore, "core vertex out of range");
    return x;
}

std::vector<char> membership(int n, std::span<const Vertex> vs) {
    std::vector<char> in(n, 0);
    for (Vertex v : vs) in.at(v) = 1;
    return in;
}

// Is (a, b, c) a face of g, traced in this direction?
bool is_host_triangle(const EmbeddedGraph& g, Vertex a, Vertex b, Vertex c) {
    auto follows = [&](Vertex x, Vertex y, Vertex z) {
        // after dart x->y the face continues with y->z
        if (!g.adjacent(y, x)) return false;
        const int s = g.slot_of(y, x);
        const int d = g.degree(y);
        return g.rotation(y)[(s + d - 1) % d] == z;
    };
    return follows(a, b, c) && follows(b, c, a) && follows(c, a, b);
}

long long isqrt_ceil(long long x) {
    if (x <= 0) return 0;
    auto s = static_cast<long long>(std::sqrt(static_cast<long double>(x)));
    while (s * s > x) --s;
    while ((s + 1) * (s + 1) <= x) ++s;
    return s * s == x ? s : s + 1;
}

// No terminal on the outer cycle or within distance 1..radius of the patch.
void require_clear_annulus(const EmbeddedGraph& g, std::span<const Vertex> terminals, const Patch& patch, int radius) {
    const auto is_terminal = membership(g.vertex_count(), terminals);
    for (Vertex v : patch.outer_cycle)
        if (is_terminal[v])
            throw MoatError(MoatError::Kind::Precondition, "terminal " + std::to_string(v) + " on the outer cycle");
    if (radius < 1) return;
    const auto dist = bfs_distances(g, patch.vertices);
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (dist[v] >= 1 && dist[v] <= radius && is_terminal[v])
            throw MoatError(MoatError::Kind::Precondition,
                            "terminal " + std::to_string(v) + " in the annulus at distance " + std::to_string(dist[v]));
}

}  // namespace

Patch make_patch(const EmbeddedGraph& g, std::span<const Vertex> terminals, std::span<const Vertex> vertices) {
    Patch patch;
    patch.vertices = normalised_core(g, vertices);
    const auto is_terminal = membership(g.vertex_count(), terminals);
    if (patch.degenerate()) {
        patch.interior_terminals = is_terminal[patch.vertices.front()] ? 1 : 0;
        return patch;
    }

    const int n = g.vertex_count();
    std::vector<int> local(n, -1);
    for (std::size_t i = 0; i < patch.vertices.size(); ++i) local[patch.vertices[i]] = static_cast<int>(i);
    std::vector<std::vector<Vertex>> rot(patch.vertices.size());
    for (std::size_t i = 0; i < patch.vertices.size(); ++i)
        for (Vertex w : g.rotation(patch.vertices[i]))
            if (local[w] >= 0) rot[i].push_back(local[w]);

    std::vector<std::vector<Vertex>> cycles;
    try {
        cycles = faces(EmbeddedGraph(std::move(rot)));
    } catch (const GraphError& e) {
        throw MoatError(MoatError::Kind::NotAPatch, std::string("induced subgraph: ") + e.what());
    }

    std::vector<Vertex> outer;
    int outer_count = 0;
    for (auto& cycle : cycles) {
        for (Vertex& v : cycle) v = patch.vertices[v];
        if (cycle.size() == 3 && is_host_triangle(g, cycle[0], cycle[1], cycle[2])) {
            ++patch.area;
        } else {
            ++outer_count;
            outer = cycle;
        }
    }
    if (outer_count != 1)
        throw MoatError(MoatError::Kind::NotAPatch,
                        std::to_string(outer_count) + " non-triangular faces in induced subgraph");
    std::vector<Vertex> sorted(outer);
    std::sort(sorted.begin(), sorted.end());
    if (sorted.size() < 3 || std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw MoatError(MoatError::Kind::NotAPatch, "outer boundary is not a simple cycle");
    patch.outer_cycle = std::move(outer);

    const auto on_cycle = membership(n, patch.outer_cycle);
    for (Vertex v : patch.vertices)
        if (is_terminal[v] && !on_cycle[v]) ++patch.interior_terminals;
    return patch;
}

JustusCheck justus_check(const Patch& patch) {
    const int p = patch.interior_terminals;
    if (p < 1 || p > 5)
        throw MoatError(MoatError::Kind::TerminalCountOutOfRange,
                        "isoperimetric check needs 1 <= p <= 5, got " + std::to_string(p));
    const long long c = patch.perimeter();
    const long long rhs = static_cast<long long>(6 - p) * patch.area;
    JustusCheck out;
    out.slack_squared = c * c - rhs;
    out.holds = out.slack_squared >= 0;
    out.equality = out.slack_squared == 0;
    out.slack = static_cast<double>(c) - std::sqrt(static_cast<double>(rhs));
    return out;
}

std::vector<EdgeId> moat_edges(const EmbeddedGraph& g, std::span<const Vertex> core, int width) {
    const auto x = normalised_core(g, core);
    if (width < 1) throw MoatError(MoatError::Kind::BadWidth, "moat width must be >= 1");
    const auto dist = bfs_distances(g, x);
    if (*std::max_element(dist.begin(), dist.end()) <= width - 1)
        throw MoatError(MoatError::Kind::MoatEscapes,
                        "N^" + std::to_string(width - 1) + "[X] is the whole vertex set");
    std::vector<EdgeId> out;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        const int a = dist[g.edge(e).u], b = dist[g.edge(e).v];
        if (a != b && std::min(a, b) <= width - 1) out.push_back(e);
    }
    return out;
}

DiskCheck disk_size_check(const EmbeddedGraph& g, std::span<const Vertex> terminals, Vertex centre, int k) {
    if (std::find(terminals.begin(), terminals.end(), centre) == terminals.end())
        throw MoatError(MoatError::Kind::Precondition, "disk centre " + std::to_string(centre) + " is not a terminal");
    if (k < 1) throw MoatError(MoatError::Kind::BadWidth, "disk radius must be >= 1");
    const auto is_terminal = membership(g.vertex_count(), terminals);
    const Vertex c[1] = {centre};

    DiskCheck out;
    out.expected = 5 * k * k;
    out.precondition = true;
    if (k > 1) {
        for (EdgeId e : moat_edges(g, c, k - 1)) {
            const Edge& ed = g.edge(e);
            if ((ed.u != centre && is_terminal[ed.u]) || (ed.v != centre && is_terminal[ed.v])) {
                out.precondition = false;
                out.counterexample = e;
                break;
            }
        }
    }
    out.moat_size = static_cast<int>(moat_edges(g, c, k).size());
    out.holds = out.precondition && out.moat_size == out.expected;
    return out;
}

RingGrowth ring_growth(const EmbeddedGraph& g, std::span<const Vertex> terminals, const Patch& patch, int k) {
    const int p = patch.interior_terminals;
    if (p <= 0 || p >= 6)
        throw MoatError(MoatError::Kind::TerminalCountOutOfRange, "ring growth needs 0 < p < 6");
    if (k < 1) throw MoatError(MoatError::Kind::BadWidth, "layer index must be >= 1");
    require_clear_annulus(g, terminals, patch, k);
    const auto dist = bfs_distances(g, patch.vertices);
    RingGrowth out;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (dist[v] == k) ++out.actual;
    out.predicted = patch.perimeter() + (6 - p) * k;
    return out;
}

PerimeterBound patch_perimeter_bound(const EmbeddedGraph& g, std::span<const Vertex> terminals,
                                     const Patch& patch, int k) {
    const int p = patch.interior_terminals;
    if (p <= 0 || p >= 6)
        throw MoatError(MoatError::Kind::TerminalCountOutOfRange, "perimeter bound needs 0 < p < 6");
    if (k < 0) throw MoatError(MoatError::Kind::BadWidth, "negative moat width");
    PerimeterBound out;
    if (k == 0) {
        out.holds = out.equality = true;
        return out;
    }
    require_clear_annulus(g, terminals, patch, k - 1);
    const long long q = 6 - p;
    const long long kk = k;
    const long long radicand = 4 * kk * kk * q * patch.area;  // (2k sqrt(qA))^2
    out.bound = static_cast<double>(q * kk * kk) + 2.0 * k * std::sqrt(static_cast<double>(q * patch.area));
    out.ceiling = q * kk * kk + isqrt_ceil(radicand);
    out.moat_size = static_cast<int>(moat_edges(g, patch.vertices, k).size());
    const long long excess = out.moat_size - q * kk * kk;
    out.holds = excess >= 0 && excess * excess >= radicand;
    out.equality = excess >= 0 && excess * excess == radicand;
    return out;
}

const char* to_string(PackingError::Kind kind) {
    switch (kind) {
        case PackingError::Kind::OverlappingMoats: return "OverlappingMoats";
        case PackingError::Kind::NotLaminar: return "NotLaminar";
        case PackingError::Kind::BadParity: return "BadParity";
        case PackingError::Kind::WidthMismatch: return "WidthMismatch";
        case PackingError::Kind::NotADisk: return "NotADisk";
        case PackingError::Kind::MissingDisk: return "MissingDisk";
    }
    return "?";
}

namespace {

struct WidthVectors {
    std::vector<int> r, s, t;
    long long m1 = 0, m3 = 0, m5 = 0;
};

// Width vectors by terminal. With `strict`, a terminal claimed twice by the
// same moat class is reported instead of summed.
WidthVectors width_vectors(std::span<const Vertex> terminals, std::span<const Moat> family, bool strict) {
    WidthVectors w;
    const std::size_t k = terminals.size();
    w.r.assign(k, 0);
    w.s.assign(k, 0);
    w.t.assign(k, 0);
    std::map<Vertex, int> index;
    for (std::size_t i = 0; i < k; ++i) index[terminals[i]] = static_cast<int>(i);
    for (std::size_t m = 0; m < family.size(); ++m) {
        const Moat& moat = family[m];
        std::vector<int>* vec = nullptr;
        switch (moat.terminal_count) {
            case 1: vec = &w.r; w.m1 += static_cast<long long>(moat.edges.size()); break;
            case 3: vec = &w.s; w.m3 += static_cast<long long>(moat.edges.size()); break;
            case 5: vec = &w.t; w.m5 += static_cast<long long>(moat.edges.size()); break;
            default: continue;
        }
        for (Vertex v : moat.core) {
            auto it = index.find(v);
            if (it == index.end()) continue;
            int& slot = (*vec)[it->second];
            if (strict && slot != 0)
                throw PackingError(PackingError::Kind::WidthMismatch,
                                   "terminal " + std::to_string(v) + " lies in two moats of the same class",
                                   -1, {static_cast<int>(m), -1});
            slot += moat.width;
        }
    }
    return w;
}

bool disjoint_sorted(const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) return false;
        if (a[i] < b[j]) ++i; else ++j;
    }
    return true;
}

}  // namespace

MoatPacking make_packing(const EmbeddedGraph& g, std::span<const Vertex> terminals, std::span<const MoatSpec> specs) {
    MoatPacking packing;
    packing.terminals.assign(terminals.begin(), terminals.end());
    const auto is_terminal = membership(g.vertex_count(), terminals);
    for (const MoatSpec& spec : specs) {
        Moat moat;
        moat.core = normalised_core(g, spec.core);
        moat.width = spec.width;
        moat.edges = moat_edges(g, moat.core, spec.width);
        for (Vertex v : moat.core) moat.terminal_count += is_terminal[v];
        packing.family.push_back(std::move(moat));
    }
    WidthVectors w = width_vectors(packing.terminals, packing.family, false);
    packing.r = std::move(w.r);
    packing.s = std::move(w.s);
    packing.t = std::move(w.t);
    packing.m1 = w.m1;
    packing.m3 = w.m3;
    packing.m5 = w.m5;
    return packing;
}

Rational verify_packing(const EmbeddedGraph& g, const MoatPacking& packing, PackingOptions options) {
    using Kind = PackingError::Kind;
    const auto is_terminal = membership(g.vertex_count(), packing.terminals);
    const auto& family = packing.family;
    const int count = static_cast<int>(family.size());

    for (int i = 0; i < count; ++i) {
        const Moat& moat = family[i];
        const auto core = normalised_core(g, moat.core);
        if (core != moat.core)
            throw PackingError(Kind::WidthMismatch, "core of moat " + std::to_string(i) + " is not normalised", -1, {i, -1});
        if (moat_edges(g, core, moat.width) != moat.edges)
            throw PackingError(Kind::WidthMismatch,
                               "edge set of moat " + std::to_string(i) + " does not match its width", -1, {i, -1});
        int p = 0;
        for (Vertex v : core) p += is_terminal[v];
        if (p != moat.terminal_count || (p != 1 && p != 3 && p != 5))
            throw PackingError(Kind::BadParity,
                               "core of moat " + std::to_string(i) + " holds " + std::to_string(p) + " terminals",
                               -1, {i, -1});
        if (p == 1 && core.size() != 1)
            throw PackingError(Kind::NotADisk, "1-moat " + std::to_string(i) + " is not centred on a terminal", -1, {i, -1});
    }

    for (int i = 0; i < count; ++i) {
        for (int j = i + 1; j < count; ++j) {
            const auto& a = family[i].core;
            const auto& b = family[j].core;
            const bool nested = std::includes(a.begin(), a.end(), b.begin(), b.end()) ||
                                std::includes(b.begin(), b.end(), a.begin(), a.end());
            if (!nested && !disjoint_sorted(a, b))
                throw PackingError(Kind::NotLaminar,
                                   "cores of moats " + std::to_string(i) + " and " + std::to_string(j) + " cross",
                                   -1, {i, j});
        }
    }

    std::vector<int> owner(g.edge_count(), -1);
    for (int i = 0; i < count; ++i) {
        for (EdgeId e : family[i].edges) {
            if (owner[e] >= 0)
                throw PackingError(Kind::OverlappingMoats,
                                   "moats " + std::to_string(owner[e]) + " and " + std::to_string(i) +
                                       " share edge " + std::to_string(e),
                                   e, {owner[e], i});
            owner[e] = i;
        }
    }

    const WidthVectors w = width_vectors(packing.terminals, family, true);
    if (w.r != packing.r || w.s != packing.s || w.t != packing.t || w.m1 != packing.m1 || w.m3 != packing.m3 ||
        w.m5 != packing.m5)
        throw PackingError(Kind::WidthMismatch, "stored width vectors disagree with the moat family");

    if (options.require_disks)
        for (std::size_t i = 0; i < w.r.size(); ++i)
            if (w.r[i] < 1)
                throw PackingError(Kind::MissingDisk, "terminal " + std::to_string(packing.terminals[i]) + " has no disk");

    Rational sum(0);
    for (std::size_t i = 0; i < w.r.size(); ++i)
        sum += Rational(w.r[i]) + Rational(w.s[i], 3) + Rational(w.t[i], 5);
    return options.refined ? sum / 2 : sum;
}

Rational verify_packing(const RefinedTriangulation& rt, const MoatPacking& packing, bool require_disks) {
    return verify_packing(rt.graph, packing, PackingOptions{true, require_disks});
}

MoatPacking greedy_packing(const RefinedTriangulation& rt) {
    const EmbeddedGraph& g = rt.graph;
    const auto& terminals = rt.terminals;
    const auto is_terminal = membership(g.vertex_count(), terminals);
    const int k = static_cast<int>(terminals.size());

    std::vector<int> radius(k, 0);
    std::vector<char> frozen(k, 0);
    std::vector<int> owner(g.edge_count(), -1);

    bool grew = true;
    while (grew) {
        grew = false;
        for (int i = 0; i < k; ++i) {
            if (frozen[i]) continue;
            const Vertex u = terminals[i];
            const int next = radius[i] + 1;
            const auto dist = bfs_distances(g, u);
            bool ok = *std::max_element(dist.begin(), dist.end()) > next - 1;
            for (Vertex v = 0; ok && v < g.vertex_count(); ++v)
                if (v != u && is_terminal[v] && dist[v] <= next - 1) ok = false;
            std::vector<EdgeId> layer;
            if (ok) {
                for (EdgeId e = 0; e < g.edge_count(); ++e) {
                    const int a = dist[g.edge(e).u], b = dist[g.edge(e).v];
                    if (std::min(a, b) == next - 1 && std::max(a, b) == next) {
                        if (owner[e] >= 0) {
                            ok = false;
                            break;
                        }
                        layer.push_back(e);
                    }
                }
            }
            if (!ok) {
                frozen[i] = 1;
                continue;
            }
            for (EdgeId e : layer) owner[e] = i;
            radius[i] = next;
            grew = true;
        }
    }

    std::vector<MoatSpec> specs;
    for (int i = 0; i < k; ++i)
        if (radius[i] > 0) specs.push_back({{terminals[i]}, radius[i]});
    return make_packing(g, terminals, specs);
}

}  // namespace fulleroct

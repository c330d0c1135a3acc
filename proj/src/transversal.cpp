#include "fulleroct/transversal.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

namespace fulleroct {

Transversal odd_cycle_transversal(const FullereneGraph& f) {
    const FullereneDual d = dual(f);
    Transversal tr;
    tr.dual_join = min_tjoin(d.triangulation.graph(), d.triangulation.terminals());
    for (EdgeId e : tr.dual_join.edges) tr.edges.push_back(d.primal_edge[e]);
    std::sort(tr.edges.begin(), tr.edges.end());
    if (!two_coloring(f.graph(), tr.edges))
        throw std::logic_error("G - J is not bipartite for the computed transversal");
    check_matching(f.graph(), tr);
    return tr;
}

bool check_matching(const EmbeddedGraph& g, std::span<const EdgeId> edges) {
    std::vector<char> used(g.vertex_count(), 0);
    for (EdgeId e : edges) {
        const Edge& ed = g.edge(e);
        if (used[ed.u] || used[ed.v]) return false;
        used[ed.u] = used[ed.v] = 1;
    }
    return true;
}

bool check_matching(const EmbeddedGraph& g, Transversal& tr) {
    tr.is_matching = check_matching(g, tr.edges);
    return tr.is_matching;
}

std::vector<Vertex> min_vertex_cover(const EmbeddedGraph& g, std::span<const EdgeId> edges) {
    std::vector<char> in_cover(g.vertex_count(), 0);
    std::vector<Vertex> current, best;
    bool found = false;

    auto search = [&](auto&& self) -> void {
        if (found && current.size() >= best.size()) return;
        const EdgeId* open = nullptr;
        for (const EdgeId& e : edges)
            if (!in_cover[g.edge(e).u] && !in_cover[g.edge(e).v]) {
                open = &e;
                break;
            }
        if (!open) {
            best = current;
            found = true;
            return;
        }
        for (Vertex v : {g.edge(*open).u, g.edge(*open).v}) {
            in_cover[v] = 1;
            current.push_back(v);
            self(self);
            current.pop_back();
            in_cover[v] = 0;
        }
    };
    search(search);
    std::sort(best.begin(), best.end());
    return best;
}

namespace {

// Everything after the vertex cover U: colour G - U, keep the larger class of
// each component, augment, exchange.
IndependentSetResult from_cover(const EmbeddedGraph& g, std::vector<Vertex> removed) {
    const int n = g.vertex_count();
    IndependentSetResult out;
    out.removed = std::move(removed);
    std::sort(out.removed.begin(), out.removed.end());

    const auto colour = two_coloring(g, {}, out.removed);
    if (!colour) throw std::logic_error("G minus the transversal cover is not bipartite");

    // larger colour class per component
    std::vector<int> component(n, -1);
    std::vector<Vertex> stack;
    std::vector<char> in_set(n, 0);
    for (Vertex s = 0; s < n; ++s) {
        if ((*colour)[s] < 0 || component[s] >= 0) continue;
        std::vector<Vertex> members;
        component[s] = s;
        stack.push_back(s);
        while (!stack.empty()) {
            const Vertex v = stack.back();
            stack.pop_back();
            members.push_back(v);
            for (Vertex w : g.rotation(v))
                if ((*colour)[w] >= 0 && component[w] < 0) {
                    component[w] = s;
                    stack.push_back(w);
                }
        }
        int count[2] = {0, 0};
        for (Vertex v : members) ++count[(*colour)[v]];
        const int side = count[1] > count[0] ? 1 : 0;
        for (Vertex v : members)
            if ((*colour)[v] == side) in_set[v] = 1;
    }
    out.bipartite_part = static_cast<int>(std::count(in_set.begin(), in_set.end(), 1));

    auto augment = [&] {
        for (Vertex v = 0; v < n; ++v) {
            if (in_set[v]) continue;
            const auto r = g.rotation(v);
            if (std::none_of(r.begin(), r.end(), [&](Vertex w) { return in_set[w] != 0; })) {
                in_set[v] = 1;
                ++out.augmented;
            }
        }
    };
    augment();

    // (1,2)-swaps: trade v for two non-adjacent vertices whose only neighbour
    // in the set is v
    std::vector<int> set_neighbours(n, 0);
    auto recount = [&] {
        std::fill(set_neighbours.begin(), set_neighbours.end(), 0);
        for (Vertex v = 0; v < n; ++v)
            if (in_set[v])
                for (Vertex w : g.rotation(v)) ++set_neighbours[w];
    };
    for (bool improved = true; improved;) {
        improved = false;
        recount();
        for (Vertex v = 0; v < n && !improved; ++v) {
            if (!in_set[v]) continue;
            std::vector<Vertex> tight;
            for (Vertex w : g.rotation(v))
                if (set_neighbours[w] == 1) tight.push_back(w);
            for (std::size_t i = 0; i < tight.size() && !improved; ++i)
                for (std::size_t j = i + 1; j < tight.size() && !improved; ++j)
                    if (!g.adjacent(tight[i], tight[j])) {
                        in_set[v] = 0;
                        in_set[tight[i]] = in_set[tight[j]] = 1;
                        ++out.swaps;
                        improved = true;
                    }
        }
        if (improved) augment();
    }
    for (Vertex v = 0; v < n; ++v)
        if (in_set[v]) out.vertices.push_back(v);
    if (!is_independent(g, out.vertices)) throw std::logic_error("computed vertex set is not independent");
    return out;
}

}  // namespace

IndependentSetResult independent_set(const EmbeddedGraph& g, std::span<const EdgeId> transversal) {
    if (!check_matching(g, transversal)) {
        IndependentSetResult out = from_cover(g, min_vertex_cover(g, transversal));
        out.candidates = 1;
        return out;
    }

    std::vector<int> degree(g.vertex_count());
    for (Vertex v = 0; v < g.vertex_count(); ++v) degree[v] = g.degree(v);
    std::vector<Vertex> removed;
    for (EdgeId e : transversal) {
        // removing the lower-degree endpoint keeps the larger degree sum
        const auto [u, v] = g.edge(e);
        const Vertex drop = degree[v] < degree[u] ? v : u;
        removed.push_back(drop);
        for (Vertex w : g.rotation(drop)) --degree[w];
        degree[drop] = 0;
    }
    IndependentSetResult best = from_cover(g, removed);
    int candidates = 1;

    const int j = static_cast<int>(transversal.size());
    if (j <= max_enumerated_endpoints) {
        for (std::uint32_t mask = 0; mask < (1u << j); ++mask) {
            for (int i = 0; i < j; ++i) {
                const Edge& e = g.edge(transversal[i]);
                removed[i] = (mask >> i) & 1 ? e.v : e.u;
            }
            IndependentSetResult r = from_cover(g, removed);
            ++candidates;
            if (r.size() > best.size()) best = std::move(r);
        }
    }
    best.candidates = candidates;
    return best;
}

IndependentSetResult independent_set(const FullereneGraph& f, const Transversal& tr) {
    return independent_set(f.graph(), tr.edges);
}

bool is_independent(const EmbeddedGraph& g, std::span<const Vertex> vertices) {
    std::vector<char> in(g.vertex_count(), 0);
    for (Vertex v : vertices) in.at(v) = 1;
    for (const Edge& e : g.edges())
        if (in[e.u] && in[e.v]) return false;
    return true;
}

int exact_mis(const EmbeddedGraph& g) {
    const int n = g.vertex_count();
    if (n > max_exact_mis_order)
        throw std::length_error("exact_mis is limited to " + std::to_string(max_exact_mis_order) + " vertices");
    if (n == 0) return 0;

    // relabel by decreasing degree so branching removes the most vertices early
    std::vector<Vertex> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
    std::vector<int> position(n);
    for (int i = 0; i < n; ++i) position[order[i]] = i;
    std::vector<std::uint32_t> closed(n);
    for (int i = 0; i < n; ++i) {
        closed[i] = 1u << i;
        for (Vertex w : g.rotation(order[i])) closed[i] |= 1u << position[w];
    }

    int best = 0;
    auto search = [&](auto&& self, std::uint32_t candidates, int size) -> void {
        if (candidates == 0) {
            best = std::max(best, size);
            return;
        }
        if (size + std::popcount(candidates) <= best) return;
        const int v = std::countr_zero(candidates);
        self(self, candidates & ~closed[v], size + 1);
        self(self, candidates & ~(1u << v), size);
    };
    search(search, (1u << n) - 1, 0);
    return best;
}

// ---------------------------------------------------------------------------

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::Holds: return "holds";
        case Verdict::Equality: return "equality";
        case Verdict::Violated: return "violated";
    }
    return "?";
}

Verdict compare_le(long long lhs, long long rhs) {
    if (lhs < rhs) return Verdict::Holds;
    if (lhs == rhs) return Verdict::Equality;
    return Verdict::Violated;
}

int independence_bound(int n) {
    // s satisfies the bound iff n - 2s <= 0 or 5 (n - 2s)^2 <= 12 n
    auto ok = [n](long long s) {
        const long long gap = n - 2 * s;
        return gap <= 0 || 5 * gap * gap <= 12LL * n;
    };
    long long s = static_cast<long long>(std::floor(n / 2.0 - std::sqrt(3.0 * n / 5.0))) - 1;
    while (!ok(s)) ++s;
    while (ok(s - 1)) --s;
    return static_cast<int>(s);
}

BoundsReport bounds_report(const FullereneGraph& f, const Transversal& tr, const IndependentSetResult& isr) {
    const EmbeddedGraph& g = f.graph();
    BoundsReport r;
    const long long n = g.vertex_count();
    const long long tau = tr.size();
    r.n = static_cast<int>(n);
    r.tau = static_cast<int>(tau);

    r.tau_bound = std::sqrt(12.0 * n / 5.0);
    r.tau_check = compare_le(5 * tau * tau, 12 * n);
    r.cui_wang_bound = 9.0 * n / 32.0 + 9.0 / 16.0;
    r.cui_wang = compare_le(32 * tau, 9 * n + 18);
    r.hopkins_staton_bound = 3.0 * n / 10.0;
    r.hopkins_staton = compare_le(10 * tau, 3 * n);

    r.independent_set_size = isr.size();
    r.independence_bound = independence_bound(r.n);
    {
        // size >= n/2 - sqrt(3n/5)  <=>  n - 2 size <= sqrt(12n/5)
        const long long gap = n - 2LL * isr.size();
        r.independence_check = gap < 0 ? Verdict::Holds : compare_le(5 * gap * gap, 12 * n);
    }
    if (n <= max_exact_mis_order) r.exact_alpha = exact_mis(g);
    r.best_independent = r.exact_alpha.value_or(isr.size());
    r.heckman_thomas_bound = static_cast<int>((3 * n + 7) / 8);
    r.heckman_thomas = compare_le(3 * n, 8LL * r.best_independent);

    r.diameter = diameter(g);
    r.diameter_bound = n / 5.0 + 1.0;
    r.diameter_check = compare_le(5LL * r.diameter, n + 5);
    r.graffiti = compare_le(2LL * (r.diameter - 1), r.best_independent);
    return r;
}

}  // namespace fulleroct

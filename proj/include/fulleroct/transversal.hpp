#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "fulleroct/graph.hpp"
#include "fulleroct/tjoin.hpp"

namespace fulleroct {

/// Edge set of a fullerene whose removal leaves a bipartite graph, obtained as
/// the primal image of a minimum T-join in the dual triangulation.
struct Transversal {
    std::vector<EdgeId> edges;  // primal edge ids, sorted
    TJoin dual_join;
    bool is_matching = false;

    int size() const { return static_cast<int>(edges.size()); }
};

/// Throws std::logic_error if G - J fails to be bipartite.
Transversal odd_cycle_transversal(const FullereneGraph& f);

bool check_matching(const EmbeddedGraph& g, std::span<const EdgeId> edges);
/// Stores the answer in tr.is_matching.
bool check_matching(const EmbeddedGraph& g, Transversal& tr);

struct IndependentSetResult {
    std::vector<Vertex> vertices;  // sorted
    std::vector<Vertex> removed;   // one endpoint per transversal edge (or a vertex cover)
    int bipartite_part = 0;        // size before augmentation
    int augmented = 0;             // vertices added greedily afterwards
    int swaps = 0;                 // one-for-two exchanges
    int candidates = 0;            // vertex covers tried

    int size() const { return static_cast<int>(vertices.size()); }
};

inline constexpr int max_enumerated_endpoints = 12;

/// Deletes a vertex cover of J, keeps the larger colour class of each
/// component of what remains, then adds free vertices in id order and
/// applies one-for-two exchanges until none is left. When J is a matching the
/// cover takes the lower-degree endpoint of each edge; for |J| up to
/// max_enumerated_endpoints every endpoint choice is also tried and the first
/// strictly larger result kept.
IndependentSetResult independent_set(const FullereneGraph& f, const Transversal& tr);
IndependentSetResult independent_set(const EmbeddedGraph& g, std::span<const EdgeId> transversal);

bool is_independent(const EmbeddedGraph& g, std::span<const Vertex> vertices);

/// Smallest vertex set touching every edge in `edges` (exact, exponential in |edges|).
std::vector<Vertex> min_vertex_cover(const EmbeddedGraph& g, std::span<const EdgeId> edges);

inline constexpr int max_exact_mis_order = 30;
/// Exact independence number; throws std::length_error above max_exact_mis_order.
int exact_mis(const EmbeddedGraph& g);

// ---------------------------------------------------------------------------
// Bounds

enum class Verdict { Holds, Equality, Violated };
const char* to_string(Verdict v);

/// lhs <= rhs as a verdict.
Verdict compare_le(long long lhs, long long rhs);

struct BoundsReport {
    int n = 0;
    int tau = 0;
    double tau_bound = 0;             // sqrt(12n/5)
    Verdict tau_check{};              // 5 tau^2 <= 12n
    double cui_wang_bound = 0;        // 9n/32 + 9/16
    Verdict cui_wang{};
    double hopkins_staton_bound = 0;  // 3n/10
    Verdict hopkins_staton{};

    int independent_set_size = 0;
    int independence_bound = 0;       // ceil(n/2 - sqrt(3n/5))
    Verdict independence_check{};
    std::optional<int> exact_alpha;   // only for n <= 30
    int best_independent = 0;         // exact_alpha if known, else the computed set
    int heckman_thomas_bound = 0;     // ceil(3n/8)
    Verdict heckman_thomas{};

    int diameter = 0;
    double diameter_bound = 0;        // n/5 + 1
    Verdict diameter_check{};
    Verdict graffiti{};               // 2(diam - 1) <= best_independent
};

BoundsReport bounds_report(const FullereneGraph& f, const Transversal& tr, const IndependentSetResult& isr);

/// Smallest integer s with s >= n/2 - sqrt(3n/5), computed exactly.
int independence_bound(int n);

}  // namespace fulleroct

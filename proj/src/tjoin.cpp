#include "fulleroct/tjoin.hpp"

#include <algorithm>
#include <deque>
#include <limits>

namespace fulleroct {

namespace {

std::vector<Vertex> checked_terminals(const EmbeddedGraph& g, std::span<const Vertex> terminals) {
    std::vector<Vertex> t(terminals.begin(), terminals.end());
    for (Vertex v : t)
        if (v < 0 || v >= g.vertex_count())
            throw GraphError("terminal " + std::to_string(v) + " is not a vertex");
    std::sort(t.begin(), t.end());
    if (std::adjacent_find(t.begin(), t.end()) != t.end()) throw GraphError("repeated terminal");
    if (t.size() % 2 != 0)
        throw TJoinError(TJoinError::Kind::OddTerminalCount,
                         "terminal set has odd size " + std::to_string(t.size()));
    return t;
}

}  // namespace

TerminalMetric::TerminalMetric(const EmbeddedGraph& g, std::span<const Vertex> terminals)
    : terminals_(checked_terminals(g, terminals)) {
    const int k = size();
    dist_.assign(static_cast<std::size_t>(k) * k, 0);
    pred_.resize(k);
    for (int i = 0; i < k; ++i) {
        const auto d = bfs_distances(g, terminals_[i]);
        auto& pred = pred_[i];
        pred.assign(g.vertex_count(), -1);
        for (Vertex v = 0; v < g.vertex_count(); ++v) {
            if (d[v] <= 0) continue;
            Vertex best = -1;
            for (Vertex w : g.rotation(v))
                if (d[w] == d[v] - 1 && (best < 0 || w < best)) best = w;
            pred[v] = best;
        }
        for (int j = 0; j < k; ++j) dist_[i * k + j] = d[terminals_[j]];
    }
}

std::vector<EdgeId> TerminalMetric::path(const EmbeddedGraph& g, int i, int j) const {
    std::vector<EdgeId> out;
    const auto& pred = pred_[i];
    for (Vertex v = terminals_[j]; v != terminals_[i]; v = pred[v]) out.push_back(g.edge_id(v, pred[v]));
    return out;
}

TerminalMetric terminal_metric(const EmbeddedGraph& g, std::span<const Vertex> terminals) {
    return TerminalMetric(g, terminals);
}

std::vector<std::pair<int, int>> min_terminal_matching(const TerminalMetric& metric, int* value) {
    const int k = metric.size();
    if (k > max_enumerated_terminals)
        throw TJoinError(TJoinError::Kind::TooManyTerminals,
                         std::to_string(k) + " terminals exceed the enumeration limit of " +
                             std::to_string(max_enumerated_terminals));
    std::vector<char> matched(k, 0);
    std::vector<std::pair<int, int>> current, best;
    int best_value = std::numeric_limits<int>::max();

    // First unmatched terminal pairs with each later one in index order; a
    // branch is cut only when it cannot beat the incumbent strictly.
    auto search = [&](auto&& self, int partial) -> void {
        if (partial >= best_value) return;
        int i = 0;
        while (i < k && matched[i]) ++i;
        if (i == k) {
            best_value = partial;
            best = current;
            return;
        }
        matched[i] = 1;
        for (int j = i + 1; j < k; ++j) {
            if (matched[j]) continue;
            matched[j] = 1;
            current.emplace_back(i, j);
            self(self, partial + metric.dist(i, j));
            current.pop_back();
            matched[j] = 0;
        }
        matched[i] = 0;
    };
    search(search, 0);
    if (value) *value = best_value;
    return best;
}

TJoin min_tjoin(const EmbeddedGraph& g, std::span<const Vertex> terminals) {
    if (static_cast<int>(terminals.size()) > max_enumerated_terminals)
        throw TJoinError(TJoinError::Kind::TooManyTerminals,
                         std::to_string(terminals.size()) + " terminals exceed the enumeration limit of " +
                             std::to_string(max_enumerated_terminals));
    const TerminalMetric metric(g, terminals);
    TJoin join;
    join.terminals = metric.terminals();
    if (metric.size() == 0) return join;

    std::vector<char> parity(g.edge_count(), 0);
    for (const auto& [i, j] : min_terminal_matching(metric))
        for (EdgeId e : metric.path(g, i, j)) parity[e] ^= 1;
    for (EdgeId e = 0; e < g.edge_count(); ++e)
        if (parity[e]) join.edges.push_back(e);
    return join;
}

bool is_tjoin(const EmbeddedGraph& g, std::span<const EdgeId> edges, std::span<const Vertex> terminals) {
    std::vector<char> odd(g.vertex_count(), 0);
    for (EdgeId e : edges) {
        if (e < 0 || e >= g.edge_count())
            throw TJoinError(TJoinError::Kind::UnknownEdge, "unknown edge id " + std::to_string(e));
        odd[g.edge(e).u] ^= 1;
        odd[g.edge(e).v] ^= 1;
    }
    std::vector<char> want(g.vertex_count(), 0);
    for (Vertex t : terminals) want.at(t) ^= 1;
    return odd == want;
}

TJoin brute_force_tjoin(const EmbeddedGraph& g, std::span<const Vertex> terminals, int cap) {
    std::vector<Vertex> t = checked_terminals(g, terminals);
    const int m = g.edge_count();
    // mismatch[v] = (current degree parity) xor (v in T)
    std::vector<char> mismatch(g.vertex_count(), 0);
    for (Vertex v : t) mismatch[v] = 1;
    int mismatched = static_cast<int>(t.size());
    std::vector<EdgeId> chosen;

    auto toggle = [&](Vertex v) {
        mismatch[v] ^= 1;
        mismatched += mismatch[v] ? 1 : -1;
    };
    // One edge fixes at most two mismatches, which bounds every branch.
    auto search = [&](auto&& self, EdgeId from, int remaining) -> bool {
        if (remaining == 0) return mismatched == 0;
        if (mismatched > 2 * remaining) return false;
        for (EdgeId e = from; e <= m - remaining; ++e) {
            const Edge& ed = g.edge(e);
            toggle(ed.u);
            toggle(ed.v);
            chosen.push_back(e);
            if (self(self, e + 1, remaining - 1)) return true;
            chosen.pop_back();
            toggle(ed.u);
            toggle(ed.v);
        }
        return false;
    };

    for (int size = static_cast<int>(t.size()) / 2; size <= std::min(cap, m); ++size) {
        if (search(search, 0, size)) return TJoin{chosen, t};
    }
    throw TJoinError(TJoinError::Kind::CapExceeded,
                     "no T-join with at most " + std::to_string(cap) + " edges");
}

}  // namespace fulleroct

#pragma once

#include <span>
#include <stdexcept>
#include <vector>

#include "fulleroct/graph.hpp"

namespace fulleroct {

class TJoinError : public std::runtime_error {
public:
    enum class Kind { OddTerminalCount, TooManyTerminals, UnknownEdge, CapExceeded };

    TJoinError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    Kind kind() const { return kind_; }

private:
    Kind kind_;
};

/// Largest terminal set min_tjoin will enumerate matchings for.
inline constexpr int max_enumerated_terminals = 16;

/// Edge set whose odd-degree vertices are exactly `terminals`.
struct TJoin {
    std::vector<EdgeId> edges;  // sorted
    std::vector<Vertex> terminals;
    int value() const { return static_cast<int>(edges.size()); }
};

/// Shortest-path distances between terminals, with one BFS tree per terminal
/// kept for path realisation. Predecessors use the lowest-id neighbour one
/// step closer to the root.
class TerminalMetric {
public:
    TerminalMetric(const EmbeddedGraph& g, std::span<const Vertex> terminals);

    int size() const { return static_cast<int>(terminals_.size()); }
    const std::vector<Vertex>& terminals() const { return terminals_; }
    int dist(int i, int j) const { return dist_[i * size() + j]; }

    /// Edges of the tree path from terminals()[i] to terminals()[j].
    std::vector<EdgeId> path(const EmbeddedGraph& g, int i, int j) const;

private:
    std::vector<Vertex> terminals_;
    std::vector<int> dist_;
    std::vector<std::vector<Vertex>> pred_;
};

TerminalMetric terminal_metric(const EmbeddedGraph& g, std::span<const Vertex> terminals);

/// Minimum T-join: exhaustive minimum-weight perfect matching on the terminal
/// metric (first minimum in fixed recursive pairing order), realised as the
/// symmetric difference of one shortest path per matched pair.
TJoin min_tjoin(const EmbeddedGraph& g, std::span<const Vertex> terminals);

/// Matched pairs (as indices into the terminal list) chosen by min_tjoin.
std::vector<std::pair<int, int>> min_terminal_matching(const TerminalMetric& metric, int* value = nullptr);

bool is_tjoin(const EmbeddedGraph& g, std::span<const EdgeId> edges, std::span<const Vertex> terminals);

/// Independent oracle: searches edge subsets by increasing size up to `cap`
/// and returns the lexicographically first smallest T-join.
TJoin brute_force_tjoin(const EmbeddedGraph& g, std::span<const Vertex> terminals, int cap);

}  // namespace fulleroct

#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/rational.hpp>

#include "fulleroct/graph.hpp"
#include "fulleroct/refine.hpp"

namespace fulleroct {

using Rational = boost::rational<long long>;

class MoatError : public std::runtime_error {
public:
    enum class Kind { EmptyCore, BadWidth, MoatEscapes, NotAPatch, Precondition, TerminalCountOutOfRange };

    MoatError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    Kind kind() const { return kind_; }

private:
    Kind kind_;
};

// ---------------------------------------------------------------------------
// Patches

/// A 2-connected subgraph whose bounded faces are all triangles of the host.
/// A single-vertex core is admitted as a degenerate patch with no outer cycle
/// and zero area; its vertex counts as interior.
struct Patch {
    std::vector<Vertex> vertices;     // sorted
    std::vector<Vertex> outer_cycle;  // empty for a single vertex
    int interior_terminals = 0;       // p
    int area = 0;                     // number of triangles

    bool degenerate() const { return vertices.size() == 1; }
    int perimeter() const { return static_cast<int>(outer_cycle.size()); }
};

/// Induced patch G[X]. Throws MoatError::NotAPatch when G[X] is disconnected,
/// has a bounded face that is not a host triangle, or its outer boundary is
/// not a simple cycle.
Patch make_patch(const EmbeddedGraph& g, std::span<const Vertex> terminals, std::span<const Vertex> vertices);

struct JustusCheck {
    bool holds = false;
    bool equality = false;
    long long slack_squared = 0;  // |V(C)|^2 - (6-p) A
    double slack = 0.0;           // |V(C)| - sqrt((6-p) A)
};

/// Isoperimetric inequality |V(C)| >= sqrt((6-p) A) for 1 <= p <= 5.
JustusCheck justus_check(const Patch& patch);

// ---------------------------------------------------------------------------
// Moats

/// Union of the cuts delta(N^i[X]) for i < k, sorted by edge id. Throws
/// MoatEscapes when N^{k-1}[X] is the whole vertex set.
std::vector<EdgeId> moat_edges(const EmbeddedGraph& g, std::span<const Vertex> core, int width);

struct DiskCheck {
    bool holds = false;         // precondition met and |delta^k(u)| = 5k^2
    bool precondition = false;  // no edge of delta^{k-1}(u) touches another terminal
    std::optional<EdgeId> counterexample;
    int moat_size = 0;
    int expected = 0;
};

DiskCheck disk_size_check(const EmbeddedGraph& g, std::span<const Vertex> terminals, Vertex centre, int k);

struct RingGrowth {
    int actual = 0;     // |N^k(X)|
    int predicted = 0;  // |V(C)| + (6-p) k
    bool holds() const { return actual == predicted; }
};

/// Size of the k-th layer (k >= 1) around a patch whose outer cycle and
/// annulus N^k[X] - X hold no terminal. A degenerate single-terminal core is
/// seeded with |V(C)| = 0.
RingGrowth ring_growth(const EmbeddedGraph& g, std::span<const Vertex> terminals, const Patch& patch, int k);

struct PerimeterBound {
    double bound = 0.0;       // (6-p) k^2 + 2k sqrt((6-p) A)
    long long ceiling = 0;    // smallest integer >= bound, computed exactly
    int moat_size = 0;        // |delta^k(X)|
    bool holds = false;
    bool equality = false;
};

/// Requires no terminal on the outer cycle or within distance k-1 of X.
PerimeterBound patch_perimeter_bound(const EmbeddedGraph& g, std::span<const Vertex> terminals,
                                     const Patch& patch, int k);

// ---------------------------------------------------------------------------
// Packings

struct MoatSpec {
    std::vector<Vertex> core;
    int width = 0;
};

struct Moat {
    std::vector<Vertex> core;  // sorted
    int width = 0;
    std::vector<EdgeId> edges;  // sorted
    int terminal_count = 0;     // p
};

/// Laminar family of disks, 3-moats and 5-moats. r, s and t are indexed like
/// `terminals` and hold the width of the disk, 3-moat and 5-moat around each
/// terminal (0 when absent); m1, m3 and m5 count moat edges by class.
struct MoatPacking {
    std::vector<Vertex> terminals;
    std::vector<Moat> family;
    std::vector<int> r, s, t;
    long long m1 = 0, m3 = 0, m5 = 0;
};

class PackingError : public std::runtime_error {
public:
    enum class Kind { OverlappingMoats, NotLaminar, BadParity, WidthMismatch, NotADisk, MissingDisk };

    PackingError(Kind kind, const std::string& what, int edge = -1, std::pair<int, int> moats = {-1, -1})
        : std::runtime_error(what), kind_(kind), edge_(edge), moats_(moats) {}

    Kind kind() const { return kind_; }
    /// Shared edge for OverlappingMoats.
    int edge() const { return edge_; }
    /// Offending family indices (second is -1 for single-moat violations).
    std::pair<int, int> moats() const { return moats_; }

private:
    Kind kind_;
    int edge_;
    std::pair<int, int> moats_;
};

const char* to_string(PackingError::Kind kind);

/// Computes moat edge sets and the width vectors; performs no validation
/// beyond what moat_edges itself requires.
MoatPacking make_packing(const EmbeddedGraph& g, std::span<const Vertex> terminals, std::span<const MoatSpec> specs);

struct PackingOptions {
    /// Values on a refinement certify half as much for the unrefined triangulation.
    bool refined = true;
    /// Require a disk of radius >= 1 at every terminal.
    bool require_disks = false;
};

/// Checks every packing invariant from scratch and returns
/// c * <r + s/3 + t/5, 1> with c = 1/2 on refinements and 1 otherwise; this is
/// a lower bound on the minimum T-join of the unrefined triangulation.
Rational verify_packing(const EmbeddedGraph& g, const MoatPacking& packing, PackingOptions options = {});
Rational verify_packing(const RefinedTriangulation& rt, const MoatPacking& packing, bool require_disks = false);

/// Disks only: radii grow round-robin while they stay pairwise edge-disjoint
/// and no other terminal comes within distance radius - 1 of the centre.
MoatPacking greedy_packing(const RefinedTriangulation& rt);

}  // namespace fulleroct

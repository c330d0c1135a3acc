#include <doctest.h>

#include <algorithm>

#include "fulleroct/goldberg.hpp"
#include "fulleroct/refine.hpp"
#include "fulleroct/tjoin.hpp"
#include "support.hpp"

using namespace fulleroct;
using namespace testing;

namespace {

struct Instance {
    const char* name;
    EmbeddedGraph graph;
    std::vector<Vertex> terminals;
};

std::vector<Instance> small_instances() {
    std::vector<Instance> out;
    for (const char* name : {"20:1", "24:1"}) {
        const Triangulation t = dual(named_fixture(name)).triangulation;
        out.push_back({name, t.graph(), t.terminals()});
    }
    out.push_back({"icosahedron antipodal", icosahedron(), {0, 11}});
    out.push_back({"icosahedron ring", icosahedron(), {1, 3, 6, 9}});
    out.push_back({"icosahedron six", icosahedron(), {0, 2, 4, 7, 9, 11}});
    out.push_back({"octahedron poles", octahedron(), {0, 5}});
    out.push_back({"octahedron all", octahedron(), {0, 1, 2, 3, 4, 5}});
    out.push_back({"K4 all", tetrahedron(), {0, 1, 2, 3}});
    out.push_back({"C7 pair", cycle(7), {0, 4}});
    return out;
}

}  // namespace

TEST_CASE("min_tjoin agrees with exhaustive search on small instances") {
    for (const auto& inst : small_instances()) {
        CAPTURE(inst.name);
        REQUIRE(inst.graph.edge_count() <= 36);
        const TJoin fast = min_tjoin(inst.graph, inst.terminals);
        const TJoin slow = brute_force_tjoin(inst.graph, inst.terminals, 12);
        CHECK(is_tjoin(inst.graph, fast.edges, inst.terminals));
        CHECK(is_tjoin(inst.graph, slow.edges, inst.terminals));
        CHECK(fast.value() == slow.value());
    }
}

TEST_CASE("known T-join values") {
    CHECK(min_tjoin(icosahedron(), std::vector<Vertex>{0, 11}).value() == 3);
    CHECK(min_tjoin(tetrahedron(), std::vector<Vertex>{0, 1, 2, 3}).value() == 2);
    const Triangulation c20 = dual(named_fixture("20:1")).triangulation;
    CHECK(min_tjoin(c20.graph(), c20.terminals()).value() == 6);
    CHECK(min_tjoin(icosahedron(), std::vector<Vertex>{}).value() == 0);
}

TEST_CASE("matching value equals the join size") {
    const Triangulation t = icosahedral_dual(2);
    const TerminalMetric metric = terminal_metric(t.graph(), t.terminals());
    int value = -1;
    const auto pairs = min_terminal_matching(metric, &value);
    CHECK(pairs.size() == 6);
    CHECK(value == 24);
    CHECK(min_tjoin(t.graph(), t.terminals()).value() == 24);

    // metric distances agree with BFS
    for (int i = 0; i < metric.size(); ++i) {
        const auto d = bfs_distances(t.graph(), metric.terminals()[i]);
        for (int j = 0; j < metric.size(); ++j) CHECK(metric.dist(i, j) == d[metric.terminals()[j]]);
        for (int j = 0; j < metric.size(); ++j)
            CHECK(static_cast<int>(metric.path(t.graph(), i, j).size()) == metric.dist(i, j));
    }
}

TEST_CASE("min_tjoin is deterministic") {
    const Triangulation t = dual(named_fixture("40:40")).triangulation;
    const TJoin a = min_tjoin(t.graph(), t.terminals());
    std::vector<Vertex> shuffled(t.terminals().rbegin(), t.terminals().rend());
    const TJoin b = min_tjoin(t.graph(), shuffled);
    CHECK(a.edges == b.edges);
    CHECK(std::is_sorted(a.edges.begin(), a.edges.end()));
}

TEST_CASE("T-join errors") {
    const EmbeddedGraph g = icosahedron();
    try {
        min_tjoin(g, std::vector<Vertex>{0, 1, 2});
        FAIL("odd terminal set accepted");
    } catch (const TJoinError& e) {
        CHECK(e.kind() == TJoinError::Kind::OddTerminalCount);
    }
    std::vector<Vertex> many(18);
    for (int i = 0; i < 18; ++i) many[i] = i;
    const RefinedTriangulation rt = refine(g);
    try {
        min_tjoin(rt.graph, many);
        FAIL("18 terminals accepted");
    } catch (const TJoinError& e) {
        CHECK(e.kind() == TJoinError::Kind::TooManyTerminals);
    }
    try {
        is_tjoin(g, std::vector<EdgeId>{999}, std::vector<Vertex>{});
        FAIL("unknown edge accepted");
    } catch (const TJoinError& e) {
        CHECK(e.kind() == TJoinError::Kind::UnknownEdge);
    }
    try {
        brute_force_tjoin(g, std::vector<Vertex>{0, 11}, 2);
        FAIL("cap ignored");
    } catch (const TJoinError& e) {
        CHECK(e.kind() == TJoinError::Kind::CapExceeded);
    }
}

TEST_CASE("is_tjoin counts parity") {
    const EmbeddedGraph g = cycle(4);
    const std::vector<EdgeId> one = {g.edge_id(0, 1)};
    CHECK(is_tjoin(g, one, std::vector<Vertex>{0, 1}));
    CHECK_FALSE(is_tjoin(g, one, std::vector<Vertex>{0, 2}));
    const std::vector<EdgeId> twice = {g.edge_id(0, 1), g.edge_id(0, 1)};
    CHECK(is_tjoin(g, twice, std::vector<Vertex>{}));
}

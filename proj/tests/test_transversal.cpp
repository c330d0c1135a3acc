#include <doctest.h>

#include <algorithm>
#include <bit>

#include "fulleroct/goldberg.hpp"
#include "fulleroct/transversal.hpp"
#include "support.hpp"

using namespace fulleroct;
using namespace testing;

namespace {

// Largest independent set by trying every subset; only for tiny graphs.
int brute_force_alpha(const EmbeddedGraph& g) {
    const int n = g.vertex_count();
    int best = 0;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        bool ok = true;
        for (const Edge& e : g.edges())
            if ((mask >> e.u & 1) && (mask >> e.v & 1)) {
                ok = false;
                break;
            }
        if (ok) best = std::max(best, std::popcount(mask));
    }
    return best;
}

// Smallest edge set whose removal leaves a bipartite graph, by enumeration.
int brute_force_bipartizer(const EmbeddedGraph& g, int cap) {
    const int m = g.edge_count();
    for (int size = 0; size <= cap; ++size) {
        std::vector<char> chosen(m, 0);
        std::fill(chosen.end() - size, chosen.end(), 1);
        do {
            std::vector<std::vector<Vertex>> rot(g.vertex_count());
            for (EdgeId e = 0; e < m; ++e)
                if (!chosen[e]) {
                    rot[g.edge(e).u].push_back(g.edge(e).v);
                    rot[g.edge(e).v].push_back(g.edge(e).u);
                }
            // colour by BFS by hand; rot is not an embedding, so no EmbeddedGraph here
            std::vector<int> colour(g.vertex_count(), -1);
            bool ok = true;
            for (Vertex s = 0; s < g.vertex_count() && ok; ++s) {
                if (colour[s] >= 0) continue;
                colour[s] = 0;
                std::vector<Vertex> queue{s};
                for (std::size_t i = 0; i < queue.size() && ok; ++i)
                    for (Vertex w : rot[queue[i]]) {
                        if (colour[w] < 0) {
                            colour[w] = 1 - colour[queue[i]];
                            queue.push_back(w);
                        } else if (colour[w] == colour[queue[i]]) {
                            ok = false;
                        }
                    }
            }
            if (ok) return size;
        } while (std::next_permutation(chosen.begin(), chosen.end()));
    }
    return -1;
}

}  // namespace

TEST_CASE("odd cycle transversals of icosahedral fullerenes") {
    for (int k = 1; k <= 2; ++k) {
        const FullereneGraph f = icosahedral_fullerene(k);
        Transversal tr = odd_cycle_transversal(f);
        CHECK(tr.size() == 12 * k);
        CHECK(tr.size() == tr.dual_join.value());
        CHECK(check_matching(f.graph(), tr));
        CHECK(tr.is_matching);
        CHECK(std::is_sorted(tr.edges.begin(), tr.edges.end()));
    }
}

TEST_CASE("transversal leaves a bipartite graph on every fixture") {
    for (const auto& name : fixture_names()) {
        CAPTURE(name);
        const FullereneGraph f = named_fixture(name);
        const Transversal tr = odd_cycle_transversal(f);
        CHECK(two_coloring(f.graph(), tr.edges).has_value());
        CHECK_FALSE(two_coloring(f.graph()).has_value());
        CHECK(5LL * tr.size() * tr.size() <= 12LL * f.vertex_count());
    }
}

TEST_CASE("transversal is a minimum bipartizer on the dodecahedron") {
    const FullereneGraph f = named_fixture("20:1");
    const Transversal tr = odd_cycle_transversal(f);
    CHECK(tr.size() == 6);
    CHECK(brute_force_bipartizer(f.graph(), 6) == 6);
}

TEST_CASE("check_matching") {
    const EmbeddedGraph g = cycle(6);
    CHECK(check_matching(g, std::vector<EdgeId>{g.edge_id(0, 1), g.edge_id(2, 3)}));
    CHECK_FALSE(check_matching(g, std::vector<EdgeId>{g.edge_id(0, 1), g.edge_id(1, 2)}));
    CHECK(check_matching(g, std::vector<EdgeId>{}));
}

TEST_CASE("exact independence number against brute force") {
    CHECK(exact_mis(cycle(4)) == 2);
    CHECK(exact_mis(cycle(7)) == 3);
    CHECK(exact_mis(tetrahedron()) == 1);
    CHECK(exact_mis(octahedron()) == 2);
    CHECK(exact_mis(icosahedron()) == brute_force_alpha(icosahedron()));
    CHECK(exact_mis(named_fixture("20:1").graph()) == brute_force_alpha(named_fixture("20:1").graph()));
    CHECK(exact_mis(named_fixture("20:1").graph()) == 8);
    CHECK(exact_mis(named_fixture("24:1").graph()) == brute_force_alpha(named_fixture("24:1").graph()));
    CHECK_THROWS_AS(exact_mis(named_fixture("40:40").graph()), std::length_error);
}

TEST_CASE("independent sets from the transversal") {
    SUBCASE("C60 reaches the lower bound exactly") {
        const FullereneGraph f = icosahedral_fullerene(1);
        const Transversal tr = odd_cycle_transversal(f);
        const IndependentSetResult r = independent_set(f, tr);
        CHECK(r.size() == 24);
        CHECK(is_independent(f.graph(), r.vertices));
        CHECK(independence_bound(60) == 24);
        CHECK(r.removed.size() == 12);
    }
    SUBCASE("dodecahedron reaches its independence number") {
        const FullereneGraph f = named_fixture("20:1");
        const IndependentSetResult r = independent_set(f, odd_cycle_transversal(f));
        CHECK(is_independent(f.graph(), r.vertices));
        CHECK(r.size() == exact_mis(f.graph()));
    }
    SUBCASE("every fixture meets the lower bound") {
        for (const auto& name : fixture_names()) {
            CAPTURE(name);
            const FullereneGraph f = named_fixture(name);
            const IndependentSetResult r = independent_set(f, odd_cycle_transversal(f));
            CHECK(is_independent(f.graph(), r.vertices));
            CHECK(r.size() >= independence_bound(f.vertex_count()));
            CHECK(std::is_sorted(r.vertices.begin(), r.vertices.end()));
        }
    }
    SUBCASE("non-matching transversal falls back to a vertex cover") {
        const EmbeddedGraph g = icosahedral_fullerene(1).graph();
        const Vertex v = 0;
        const std::vector<EdgeId> star = {g.edge_at(v, 0), g.edge_at(v, 1)};
        CHECK(min_vertex_cover(g, star) == std::vector<Vertex>{v});
    }
}

TEST_CASE("independence lower bound computed exactly") {
    // ceil(n/2 - sqrt(3n/5)) by hand: n=20 -> 10 - sqrt(12) = 6.53 -> 7
    CHECK(independence_bound(20) == 7);
    CHECK(independence_bound(60) == 24);
    CHECK(independence_bound(240) == 108);
    // n=24: 12 - sqrt(14.4) = 8.205 -> 9
    CHECK(independence_bound(24) == 9);
}

TEST_CASE("bounds report") {
    const FullereneGraph f = icosahedral_fullerene(1);
    const Transversal tr = odd_cycle_transversal(f);
    const BoundsReport b = bounds_report(f, tr, independent_set(f, tr));
    CHECK(b.n == 60);
    CHECK(b.tau == 12);
    CHECK(b.tau_check == Verdict::Equality);
    CHECK(b.tau_bound == doctest::Approx(12.0));
    CHECK(b.cui_wang == Verdict::Holds);
    CHECK(b.hopkins_staton == Verdict::Holds);
    CHECK(b.independence_check == Verdict::Equality);
    CHECK_FALSE(b.exact_alpha.has_value());
    CHECK(b.heckman_thomas_bound == 23);
    CHECK(b.diameter == 9);
    CHECK(b.diameter_check == Verdict::Holds);
    CHECK(b.graffiti == Verdict::Holds);

    const FullereneGraph d = named_fixture("20:1");
    const Transversal td = odd_cycle_transversal(d);
    const BoundsReport bd = bounds_report(d, td, independent_set(d, td));
    CHECK(bd.tau_check == Verdict::Holds);
    CHECK(bd.diameter == 5);
    CHECK(bd.diameter_check == Verdict::Equality);
    REQUIRE(bd.exact_alpha.has_value());
    CHECK(*bd.exact_alpha == 8);
    CHECK(bd.best_independent == 8);

    CHECK(compare_le(1, 2) == Verdict::Holds);
    CHECK(compare_le(2, 2) == Verdict::Equality);
    CHECK(compare_le(3, 2) == Verdict::Violated);
    CHECK(std::string(to_string(Verdict::Equality)) == "equality");
}

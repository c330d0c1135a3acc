// One PASS/FAIL line per acceptance criterion; exits nonzero if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <string>

#include "fulleroct/certificate.hpp"
#include "fulleroct/codec.hpp"
#include "fulleroct/goldberg.hpp"
#include "fulleroct/moats.hpp"
#include "fulleroct/refine.hpp"
#include "fulleroct/spectra.hpp"
#include "fulleroct/tjoin.hpp"
#include "fulleroct/transversal.hpp"
#include "support.hpp"

using namespace fulleroct;
using namespace testing;

namespace {

int failures = 0;

void criterion(int id, const std::string& title, const std::function<std::string()>& body) {
    std::string detail;
    bool ok = false;
    try {
        detail = body();
        ok = detail.rfind("FAIL", 0) != 0;
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    if (!ok) ++failures;
    std::cout << (ok ? "PASS" : "FAIL") << " " << id << " " << title << ": " << detail << "\n";
}

std::string fail(const std::string& why) { return "FAIL " + why; }

std::vector<FullereneGraph> fixtures() {
    std::vector<FullereneGraph> out;
    for (const auto& g : load("isomers.pc")) out.push_back(validate_fullerene(g));
    return out;
}

std::vector<Vertex> ball(const EmbeddedGraph& g, const std::vector<Vertex>& centres, int r) {
    const auto d = bfs_distances(g, centres);
    std::vector<Vertex> out;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (d[v] <= r) out.push_back(v);
    return out;
}

// t0 plus nearby terminals: for 3, two more that are pairwise equidistant
std::vector<Vertex> terminal_group(const Triangulation& t, int count) {
    const Vertex t0 = t.terminals().front();
    const auto d0 = bfs_distances(t.graph(), t0);
    std::vector<Vertex> others(t.terminals().begin() + 1, t.terminals().end());
    std::stable_sort(others.begin(), others.end(), [&](Vertex a, Vertex b) { return d0[a] < d0[b]; });
    std::vector<Vertex> group{t0};
    if (count == 3) {
        const Vertex a = others.front();
        const auto da = bfs_distances(t.graph(), a);
        group.push_back(a);
        for (Vertex b : others)
            if (b != a && da[b] == d0[a] && d0[b] == d0[a]) {
                group.push_back(b);
                break;
            }
    } else {
        for (int i = 0; i + 1 < count; ++i) group.push_back(others[i]);
    }
    return group;
}

}  // namespace

int main() {
    criterion(1, "extremal equality on GP(k,k), k=1..3", [] {
        const auto start = std::chrono::steady_clock::now();
        std::string out;
        for (int k = 1; k <= 3; ++k) {
            const FullereneGraph f = icosahedral_fullerene(k);
            const long long n = f.vertex_count();
            const int tau = odd_cycle_transversal(f).size();
            if (n != 60LL * k * k) return fail("GP(" + std::to_string(k) + ") has " + std::to_string(n) + " vertices");
            if (tau != 12 * k) return fail("tau " + std::to_string(tau) + " for k=" + std::to_string(k));
            if (5LL * tau * tau != 12 * n) return fail("5 tau^2 != 12n for k=" + std::to_string(k));
            out += "k=" + std::to_string(k) + " tau=" + std::to_string(tau) + " ";
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (secs >= 10.0) return fail("took " + std::to_string(secs) + " s");
        return out + "in " + std::to_string(secs) + " s";
    });

    criterion(2, "dodecahedron is strict", [] {
        const Triangulation t = dual(named_fixture("20:1")).triangulation;
        const int fast = min_tjoin(t.graph(), t.terminals()).value();
        const int slow = brute_force_tjoin(t.graph(), t.terminals(), 12).value();
        if (fast != 6 || slow != 6) return fail("tau " + std::to_string(fast) + ", oracle " + std::to_string(slow));
        if (!(5 * 36 < 12 * 20)) return fail("180 < 240 failed");
        return std::string("tau=6, oracle=6, 180 < 240");
    });

    criterion(3, "T-join matches exhaustive search", [] {
        struct Instance {
            std::string name;
            EmbeddedGraph g;
            std::vector<Vertex> terminals;
        };
        std::vector<Instance> cases;
        for (const FullereneGraph& f : fixtures()) {
            const Triangulation t = dual(f).triangulation;
            if (t.graph().edge_count() <= 36) cases.push_back({"C" + std::to_string(f.vertex_count()) + " dual", t.graph(), t.terminals()});
        }
        cases.push_back({"icosahedron {0,11}", icosahedron(), {0, 11}});
        cases.push_back({"icosahedron six", icosahedron(), {0, 2, 4, 7, 9, 11}});
        cases.push_back({"octahedron all", octahedron(), {0, 1, 2, 3, 4, 5}});
        cases.push_back({"K4 all", tetrahedron(), {0, 1, 2, 3}});
        for (const auto& c : cases) {
            const int fast = min_tjoin(c.g, c.terminals).value();
            const int slow = brute_force_tjoin(c.g, c.terminals, 12).value();
            if (fast != slow) return fail(c.name + ": " + std::to_string(fast) + " vs " + std::to_string(slow));
        }
        if (cases.size() < 5) return fail("only " + std::to_string(cases.size()) + " instances");
        return std::to_string(cases.size()) + " instances agree";
    });

    criterion(4, "disk moats of size 5j^2 in the refined GP(2,2) dual", [] {
        const RefinedTriangulation rt = refine(icosahedral_dual(2));
        int checked = 0;
        for (Vertex u : rt.terminals)
            for (int j = 1; j <= 4; ++j) {
                const DiskCheck c = disk_size_check(rt.graph, rt.terminals, u, j);
                if (!c.precondition || c.moat_size != 5 * j * j)
                    return fail("terminal " + std::to_string(u) + " j=" + std::to_string(j) + " size " + std::to_string(c.moat_size));
                ++checked;
            }
        return std::to_string(checked) + " disks checked";
    });

    criterion(5, "ring growth on 1-, 3- and 5-patches", [] {
        const Triangulation t = icosahedral_dual(4);
        const EmbeddedGraph& g = t.graph();
        std::string out;
        int patches = 0;
        for (auto [p, radius] : {std::pair{1, 2}, std::pair{3, 4}, std::pair{5, 4}}) {
            const Patch patch = make_patch(g, t.terminals(), ball(g, terminal_group(t, p), radius));
            if (patch.interior_terminals != p) return fail("patch has " + std::to_string(patch.interior_terminals) + " terminals");
            for (int k = 1; k <= 2; ++k) {
                const RingGrowth r = ring_growth(g, t.terminals(), patch, k);
                if (!r.holds() || r.predicted != patch.perimeter() + (6 - p) * k)
                    return fail("p=" + std::to_string(p) + " k=" + std::to_string(k));
            }
            ++patches;
            out += "p=" + std::to_string(p) + " |C|=" + std::to_string(patch.perimeter()) + " ";
        }
        return out + "(" + std::to_string(patches) + " patches, k=1,2)";
    });

    criterion(6, "certificate duality", [] {
        const EmbeddedGraph ico = load("icosahedron.pc").front();
        const auto text = [](const char* name) {
            const auto b = read_file(data_path(name));
            return std::string(b.begin(), b.end());
        };
        const CertificateCheck c = check_certificate(ico, parse_certificate(text("icosahedron_disks.json")));
        if (c.value != Rational(6) || c.tau != 6) return fail("unit disks give " + std::to_string(c.value.numerator()));
        try {
            check_certificate(ico, parse_certificate(text("icosahedron_overlap.json")));
            return fail("overlapping certificate accepted");
        } catch (const PackingError& e) {
            if (e.kind() != PackingError::Kind::OverlappingMoats || e.edge() < 0) return fail(e.what());
        }
        for (int k = 1; k <= 3; ++k) {
            const RefinedTriangulation rt = refine(icosahedral_dual(k));
            if (verify_packing(rt, greedy_packing(rt), true) != Rational(12 * k)) return fail("greedy k=" + std::to_string(k));
        }
        return std::string("value 6 = tau, overlap rejected with an edge, greedy 12k for k=1..3");
    });

    criterion(7, "independent sets", [] {
        const FullereneGraph c60 = icosahedral_fullerene(1);
        const IndependentSetResult r = independent_set(c60, odd_cycle_transversal(c60));
        if (r.size() != 24 || !is_independent(c60.graph(), r.vertices)) return fail("C60 set " + std::to_string(r.size()));
        const FullereneGraph d = named_fixture("20:1");
        const IndependentSetResult rd = independent_set(d, odd_cycle_transversal(d));
        const int alpha = exact_mis(d.graph());
        if (rd.size() != 8 || alpha != 8 || !is_independent(d.graph(), rd.vertices))
            return fail("dodecahedron " + std::to_string(rd.size()) + " vs alpha " + std::to_string(alpha));
        for (const FullereneGraph& f : fixtures()) {
            const IndependentSetResult s = independent_set(f, odd_cycle_transversal(f));
            if (!is_independent(f.graph(), s.vertices) || s.size() < independence_bound(f.vertex_count()))
                return fail("C" + std::to_string(f.vertex_count()) + " set " + std::to_string(s.size()));
        }
        return std::string("C60 24, dodecahedron 8 = alpha, fixtures meet the bound");
    });

    criterion(8, "spectra", [] {
        const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
        const double lmin = smallest_eigenvalue(icosahedral_fullerene(1).graph());
        if (std::abs(lmin + phi * phi) > 1e-6) return fail("C60 lambda_min " + std::to_string(lmin));
        for (const FullereneGraph& f : fixtures()) {
            const int n = f.vertex_count();
            if (smallest_eigenvalue(f.graph()) > lambda_min_bound(n)) return fail("eigenvalue bound on C" + std::to_string(n));
            if (!maxcut_spectral_check(f, odd_cycle_transversal(f)).holds) return fail("max-cut on C" + std::to_string(n));
        }
        char buf[64];
        std::snprintf(buf, sizeof buf, "lambda_min(C60) = %.9f", lmin);
        return std::string(buf) + ", bounds hold on fixtures";
    });

    criterion(9, "diameter and independence", [] {
        const int diam = diameter(named_fixture("20:1").graph());
        if (diam != 5 || 5 * diam != 20 + 5) return fail("dodecahedron diameter " + std::to_string(diam));
        for (const FullereneGraph& f : fixtures()) {
            if (f.vertex_count() > 60) continue;
            const int best = f.vertex_count() <= max_exact_mis_order
                                 ? exact_mis(f.graph())
                                 : independent_set(f, odd_cycle_transversal(f)).size();
            if (2 * (diameter(f.graph()) - 1) > best) return fail("C" + std::to_string(f.vertex_count()));
        }
        return std::string("diam(C20) = 5 = 20/5 + 1, 2(diam-1) <= alpha on fixtures");
    });

    criterion(10, "refinement structure", [] {
        int count = 0;
        for (const FullereneGraph& f : fixtures()) {
            const EmbeddedGraph g = dual(f).triangulation.graph();
            const RefinedTriangulation rt = refine(g);
            if (rt.graph.face_count() != 4 * g.face_count()) return fail("face count");
            for (Vertex v = rt.original_count; v < rt.graph.vertex_count(); ++v)
                if (rt.graph.degree(v) != 6) return fail("subdivision vertex of degree " + std::to_string(rt.graph.degree(v)));
            ++count;
        }
        if (count < 3) return fail("fewer than 3 fixtures");
        return std::to_string(count) + " fixtures";
    });

    criterion(11, "planar_code round trip", [] {
        int files = 0;
        for (const char* name : {"fixtures.pc", "isomers.pc", "gp2.pc", "icosahedron.pc", "tetra56.pc"}) {
            const auto bytes = read_file(data_path(name));
            const auto graphs = parse_planar_code(bytes);
            const auto written = write_planar_code(graphs);
            if (written != bytes || parse_planar_code(written) != graphs) return fail(name);
            ++files;
        }
        return std::to_string(files) + " files byte-identical";
    });

    return failures == 0 ? 0 : 1;
}

#include <doctest.h>

#include <cmath>
#include <random>

#include <Eigen/Eigenvalues>

#include "fulleroct/eigen.hpp"
#include "fulleroct/goldberg.hpp"
#include "fulleroct/spectra.hpp"
#include "support.hpp"

using namespace fulleroct;
using namespace testing;

namespace {

template <typename Scalar>
DenseMatrix<Scalar> random_symmetric(int n, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    DenseMatrix<Scalar> a(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= i; ++j) a(i, j) = a(j, i) = Scalar(dist(rng));
    return a;
}

const double golden = (1.0 + std::sqrt(5.0)) / 2.0;

}  // namespace

TEST_CASE("K4 adjacency spectrum") {
    const Spectrum s = adjacency_spectrum(tetrahedron());
    REQUIRE(s.eigenvalues.size() == 4);
    CHECK(s.eigenvalues[0] == doctest::Approx(-1.0));
    CHECK(s.eigenvalues[1] == doctest::Approx(-1.0));
    CHECK(s.eigenvalues[2] == doctest::Approx(-1.0));
    CHECK(s.eigenvalues[3] == doctest::Approx(3.0));
    CHECK(s.residual <= residual_limit);
}

TEST_CASE("eigenvalues agree with Eigen's self-adjoint solver") {
    for (const auto& name : fixture_names()) {
        CAPTURE(name);
        const EmbeddedGraph g = named_fixture(name).graph();
        const Eigen::MatrixXd a = adjacency_matrix(g);
        const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> ref(a, Eigen::EigenvaluesOnly);
        const Spectrum s = symmetric_spectrum(a);
        for (int i = 0; i < g.vertex_count(); ++i) CHECK(s.eigenvalues[i] == doctest::Approx(ref.eigenvalues()(i)).epsilon(1e-10));
    }
    for (unsigned seed = 1; seed <= 4; ++seed) {
        const Eigen::MatrixXd a = random_symmetric<double>(37, seed);
        const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> ref(a);
        const auto mine = symmetric_eigen(a, true);
        CHECK((mine.values - ref.eigenvalues()).cwiseAbs().maxCoeff() < 1e-12);
        const Eigen::MatrixXd residual = a * mine.vectors - mine.vectors * mine.values.asDiagonal();
        CHECK(residual.norm() < 1e-10);
        CHECK((mine.vectors.transpose() * mine.vectors - Eigen::MatrixXd::Identity(37, 37)).norm() < 1e-10);
    }
}

TEST_CASE("tridiagonalization reproduces the matrix") {
    const Eigen::MatrixXd a = random_symmetric<double>(12, 7);
    const Tridiagonal<double> t = householder_tridiagonalize(a);
    Eigen::MatrixXd tri = Eigen::MatrixXd::Zero(12, 12);
    tri.diagonal() = t.diagonal;
    tri.diagonal(1) = t.off_diagonal;
    tri.diagonal(-1) = t.off_diagonal;
    const Eigen::MatrixXd q = t.q();
    CHECK((q * tri * q.transpose() - a).norm() < 1e-12);
    CHECK_THROWS_AS(householder_tridiagonalize(Eigen::MatrixXd(2, 3)), std::invalid_argument);
}

TEST_CASE("inverse iteration on the tridiagonal form") {
    const Eigen::MatrixXd a = adjacency_matrix(icosahedral_fullerene(1).graph());
    const Tridiagonal<double> t = householder_tridiagonalize(a);
    const auto e = symmetric_eigen(a);
    for (Eigen::Index i : {Eigen::Index(0), Eigen::Index(30), Eigen::Index(59)}) {
        Eigen::VectorXd v = tridiagonal_eigenvector(t.diagonal, t.off_diagonal, e.values(i));
        t.apply_q(v);
        CHECK((a * v - e.values(i) * v).norm() < 1e-9);
    }
}

TEST_CASE("float and long double instantiations") {
    const auto af = random_symmetric<float>(20, 3);
    const auto ef = symmetric_eigen(af);
    const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXf> reff(af, Eigen::EigenvaluesOnly);
    CHECK((ef.values - reff.eigenvalues()).cwiseAbs().maxCoeff() < 1e-4f);

    using LMatrix = DenseMatrix<long double>;
    const LMatrix al = adjacency_matrix(icosahedral_fullerene(1).graph()).cast<long double>();
    const auto el = symmetric_eigen(al);
    const long double phi = (1.0L + std::sqrt(5.0L)) / 2.0L;
    CHECK(std::fabs(static_cast<double>(el.values(0) + phi * phi)) < 1e-15);
    CHECK(std::fabs(static_cast<double>(el.values(59) - 3.0L)) < 1e-15);
}

TEST_CASE("smallest eigenvalue of C60 is minus the golden ratio squared") {
    CHECK(std::abs(smallest_eigenvalue(icosahedral_fullerene(1).graph()) + golden * golden) < 1e-6);
    CHECK(smallest_eigenvalue(named_fixture("20:1").graph()) == doctest::Approx(-std::sqrt(5.0)));
}

TEST_CASE("spectral identities on fixtures") {
    for (const auto& name : fixture_names()) {
        CAPTURE(name);
        const EmbeddedGraph g = named_fixture(name).graph();
        const Spectrum adj = adjacency_spectrum(g);
        const Spectrum lap = laplacian_spectrum(g);
        double sum = 0, sum_sq = 0;
        for (double x : adj.eigenvalues) sum += x, sum_sq += x * x;
        // trace A = 0, trace A^2 = 2m
        CHECK(std::abs(sum) < 1e-9);
        CHECK(sum_sq == doctest::Approx(2.0 * g.edge_count()));
        CHECK(adj.max() == doctest::Approx(3.0));
        // cubic: L = 3I - A
        const int n = g.vertex_count();
        for (int i = 0; i < n; ++i) CHECK(lap.eigenvalues[i] == doctest::Approx(3.0 - adj.eigenvalues[n - 1 - i]).epsilon(1e-10));
        CHECK(std::abs(lap.min()) < 1e-9);
        double lap_trace = 0;
        for (double x : lap.eigenvalues) lap_trace += x;
        CHECK(lap_trace == doctest::Approx(3.0 * n));
        CHECK(adj.min() <= lambda_min_bound(n));
    }
}

TEST_CASE("max-cut spectral check") {
    const FullereneGraph f = icosahedral_fullerene(1);
    const MaxCutCheck c = maxcut_spectral_check(f, odd_cycle_transversal(f));
    CHECK(c.cut_lower == 78.0);
    CHECK(c.mu_max == doctest::Approx(3.0 + golden * golden));
    CHECK(c.cut_upper == doctest::Approx(60.0 * (3.0 + golden * golden) / 4.0));
    CHECK(c.holds);

    // K4 is cubic but not bipartite with nothing removed
    CHECK_THROWS_AS(maxcut_spectral_check(tetrahedron(), std::vector<EdgeId>{}), std::invalid_argument);
    // the icosahedron is not cubic
    CHECK_THROWS_AS(maxcut_spectral_check(icosahedron(), std::vector<EdgeId>{}), std::invalid_argument);
}

TEST_CASE("closed-shell check") {
    // a single edge has spectrum {-1, 1}
    const ClosedShellCheck edge = closed_shell_check(single_edge(), std::vector<Vertex>{});
    CHECK(edge.verdict == ShellVerdict::Closed);
    CHECK(edge.positive == 1);
    CHECK(edge.negative == 1);
    // a triangle has odd order
    CHECK(closed_shell_check(triangle(), std::vector<Vertex>{}).verdict == ShellVerdict::Open);
    // C4 has two zero eigenvalues
    const ClosedShellCheck c4 = closed_shell_check(cycle(4), std::vector<Vertex>{});
    CHECK(c4.verdict == ShellVerdict::Indeterminate);
    CHECK(c4.zero == 2);
    // removing one vertex of C4 leaves a path on three vertices
    CHECK(closed_shell_check(cycle(4), std::vector<Vertex>{0}).order == 3);
    CHECK_THROWS_AS(closed_shell_check(cycle(4), std::vector<Vertex>{0, 1}), std::invalid_argument);

    // one eigenvalue per remaining vertex
    const FullereneGraph c60 = icosahedral_fullerene(1);
    const IndependentSetResult a = independent_set(c60, odd_cycle_transversal(c60));
    const ClosedShellCheck shell = closed_shell_check(c60.graph(), a.vertices);
    CHECK(shell.order == 36);
    CHECK(shell.positive + shell.zero + shell.negative == 36);
    CHECK(std::string(to_string(ShellVerdict::Indeterminate)) == "indeterminate");
}

TEST_CASE("smallest eigenvalue bound value") {
    // -3 + 8 sqrt(3/(5*60)) = -3 + 0.8
    CHECK(lambda_min_bound(60) == doctest::Approx(-2.2));
}

#include "fulleroct/spectra.hpp"

#include <algorithm>
#include <cmath>

#include "fulleroct/eigen.hpp"

namespace fulleroct {

Eigen::MatrixXd adjacency_matrix(const EmbeddedGraph& g) {
    const int n = g.vertex_count();
    if (n > max_dense_order)
        throw SpectrumError("order " + std::to_string(n) + " exceeds the dense limit of " +
                            std::to_string(max_dense_order));
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
    for (const Edge& e : g.edges()) a(e.u, e.v) = a(e.v, e.u) = 1.0;
    return a;
}

Eigen::MatrixXd laplacian_matrix(const EmbeddedGraph& g) {
    Eigen::MatrixXd l = -adjacency_matrix(g);
    for (Vertex v = 0; v < g.vertex_count(); ++v) l(v, v) = g.degree(v);
    return l;
}

Spectrum symmetric_spectrum(const Eigen::MatrixXd& a, double tolerance) {
    if (a.rows() > max_dense_order)
        throw SpectrumError("order " + std::to_string(a.rows()) + " exceeds the dense limit of " +
                            std::to_string(max_dense_order));
    Spectrum out;
    out.tolerance = tolerance;
    const Eigen::Index n = a.rows();
    if (n == 0) return out;

    const Tridiagonal<double> t = householder_tridiagonalize(a);
    Eigen::VectorXd d = t.diagonal;
    implicit_ql(d, t.off_diagonal);
    std::sort(d.data(), d.data() + n);
    out.eigenvalues.assign(d.data(), d.data() + n);

    for (Eigen::Index idx : {Eigen::Index(0), n / 2, n - 1}) {
        Eigen::VectorXd v = tridiagonal_eigenvector(t.diagonal, t.off_diagonal, d(idx));
        t.apply_q(v);
        const double residual = (a * v - d(idx) * v).norm() / v.norm();
        out.residual = std::max(out.residual, residual);
    }
    if (!(out.residual <= residual_limit))
        throw SpectrumError("eigenpair residual " + std::to_string(out.residual) + " above limit");
    return out;
}

Spectrum adjacency_spectrum(const EmbeddedGraph& g, double tolerance) {
    return symmetric_spectrum(adjacency_matrix(g), tolerance);
}

Spectrum laplacian_spectrum(const EmbeddedGraph& g, double tolerance) {
    return symmetric_spectrum(laplacian_matrix(g), tolerance);
}

double smallest_eigenvalue(const EmbeddedGraph& g) { return adjacency_spectrum(g).min(); }

double lambda_min_bound(int n) { return -3.0 + 8.0 * std::sqrt(3.0 / (5.0 * n)); }

MaxCutCheck maxcut_spectral_check(const EmbeddedGraph& g, std::span<const EdgeId> transversal, double tolerance) {
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) != 3) throw std::invalid_argument("spectral max-cut check needs a cubic graph");
    if (!two_coloring(g, transversal))
        throw std::invalid_argument("removing the given edges does not leave a bipartite graph");
    MaxCutCheck out;
    const double n = g.vertex_count();
    out.mu_max = laplacian_spectrum(g, tolerance).max();
    out.cut_lower = 1.5 * n - static_cast<double>(transversal.size());
    out.cut_upper = n * out.mu_max / 4.0;
    out.holds = out.cut_lower <= out.cut_upper + 1e-6;
    return out;
}

MaxCutCheck maxcut_spectral_check(const FullereneGraph& f, const Transversal& tr, double tolerance) {
    return maxcut_spectral_check(f.graph(), tr.edges, tolerance);
}

const char* to_string(ShellVerdict v) {
    switch (v) {
        case ShellVerdict::Closed: return "closed";
        case ShellVerdict::Open: return "open";
        case ShellVerdict::Indeterminate: return "indeterminate";
    }
    return "?";
}

ClosedShellCheck closed_shell_check(const EmbeddedGraph& g, std::span<const Vertex> removed, double tolerance) {
    if (!is_independent(g, removed)) throw std::invalid_argument("deleted vertex set is not independent");
    const int n = g.vertex_count();
    std::vector<int> local(n, 0);
    for (Vertex v : removed) local.at(v) = -1;
    int order = 0;
    for (Vertex v = 0; v < n; ++v)
        if (local[v] == 0) local[v] = order++;
        else local[v] = -1;

    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(order, order);
    for (const Edge& e : g.edges())
        if (local[e.u] >= 0 && local[e.v] >= 0) a(local[e.u], local[e.v]) = a(local[e.v], local[e.u]) = 1.0;

    ClosedShellCheck out;
    out.order = order;
    for (double lambda : symmetric_spectrum(a, tolerance).eigenvalues) {
        if (std::abs(lambda) <= tolerance) ++out.zero;
        else if (lambda > 0) ++out.positive;
        else ++out.negative;
    }
    if (order % 2 != 0) out.verdict = ShellVerdict::Open;
    else if (out.zero > 0) out.verdict = ShellVerdict::Indeterminate;
    else out.verdict = out.positive == order / 2 ? ShellVerdict::Closed : ShellVerdict::Open;
    return out;
}

}  // namespace fulleroct

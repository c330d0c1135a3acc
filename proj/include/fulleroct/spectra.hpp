#pragma once

#include <span>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

#include "fulleroct/graph.hpp"
#include "fulleroct/transversal.hpp"

namespace fulleroct {

inline constexpr int max_dense_order = 5000;
inline constexpr double default_eig_tolerance = 1e-8;
/// Spot eigenpairs must satisfy ||A v - lambda v|| <= residual_limit ||v||.
inline constexpr double residual_limit = 1e-7;

class SpectrumError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

Eigen::MatrixXd adjacency_matrix(const EmbeddedGraph& g);
Eigen::MatrixXd laplacian_matrix(const EmbeddedGraph& g);

struct Spectrum {
    std::vector<double> eigenvalues;  // ascending
    double tolerance = default_eig_tolerance;
    /// Largest relative residual over the spot-checked eigenpairs.
    double residual = 0.0;

    double min() const { return eigenvalues.front(); }
    double max() const { return eigenvalues.back(); }
};

/// Eigenvalues of a dense symmetric matrix with residual spot checks at the
/// smallest, middle and largest eigenvalue. Throws SpectrumError above
/// max_dense_order or when a residual exceeds residual_limit.
Spectrum symmetric_spectrum(const Eigen::MatrixXd& a, double tolerance = default_eig_tolerance);

Spectrum adjacency_spectrum(const EmbeddedGraph& g, double tolerance = default_eig_tolerance);
Spectrum laplacian_spectrum(const EmbeddedGraph& g, double tolerance = default_eig_tolerance);
double smallest_eigenvalue(const EmbeddedGraph& g);

/// -3 + 8 sqrt(3 / (5n)).
double lambda_min_bound(int n);

struct MaxCutCheck {
    double cut_lower = 0.0;  // 3n/2 - |J|, a cut realised by the bipartition of G - J
    double cut_upper = 0.0;  // n mu_n / 4
    double mu_max = 0.0;
    bool holds = false;
};

/// Requires a cubic graph and an edge set J with G - J bipartite; throws
/// std::invalid_argument otherwise.
MaxCutCheck maxcut_spectral_check(const EmbeddedGraph& g, std::span<const EdgeId> transversal,
                                  double tolerance = default_eig_tolerance);
MaxCutCheck maxcut_spectral_check(const FullereneGraph& f, const Transversal& tr,
                                  double tolerance = default_eig_tolerance);

enum class ShellVerdict { Closed, Open, Indeterminate };
const char* to_string(ShellVerdict v);

struct ClosedShellCheck {
    ShellVerdict verdict = ShellVerdict::Indeterminate;
    int order = 0;  // n - |A|
    int positive = 0;
    int zero = 0;   // |lambda| <= tolerance
    int negative = 0;
};

/// Sign count of the spectrum of G - A. An odd order is Open. For an even
/// order, any eigenvalue within the tolerance of zero makes the verdict
/// Indeterminate; otherwise it is Closed iff exactly half are positive.
/// Throws std::invalid_argument if A is not independent.
ClosedShellCheck closed_shell_check(const EmbeddedGraph& g, std::span<const Vertex> removed,
                                    double tolerance = default_eig_tolerance);

}  // namespace fulleroct

#pragma once

// Dense symmetric eigensolver: Householder tridiagonalization followed by
// implicit-shift QL. Templated on the scalar type; Eigen provides storage only.

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

namespace fulleroct {

template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using DenseVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

/// A = Q T Q^T with T tridiagonal. Q is kept as a product of reflectors
/// I - 2 v v^T; reflector k acts on rows k+1.. and is stored in column k.
template <typename Scalar>
struct Tridiagonal {
    DenseVector<Scalar> diagonal;
    DenseVector<Scalar> off_diagonal;  // off_diagonal[i] couples i and i+1
    DenseMatrix<Scalar> reflectors;

    Eigen::Index size() const { return diagonal.size(); }

    /// x <- Q x
    template <typename Derived>
    void apply_q(Eigen::MatrixBase<Derived>& x) const {
        const Eigen::Index n = size();
        for (Eigen::Index k = n - 3; k >= 0; --k) {
            const Eigen::Index m = n - k - 1;
            auto v = reflectors.col(k).tail(m);
            auto tail = x.bottomRows(m);
            const auto w = (v.transpose() * tail).eval();
            tail.noalias() -= Scalar(2) * v * w;
        }
    }

    DenseMatrix<Scalar> q() const {
        DenseMatrix<Scalar> out = DenseMatrix<Scalar>::Identity(size(), size());
        apply_q(out);
        return out;
    }
};

template <typename Derived>
Tridiagonal<typename Derived::Scalar> householder_tridiagonalize(const Eigen::MatrixBase<Derived>& input) {
    using Scalar = typename Derived::Scalar;
    const Eigen::Index n = input.rows();
    if (input.cols() != n) throw std::invalid_argument("tridiagonalization needs a square matrix");

    DenseMatrix<Scalar> a = input;
    Tridiagonal<Scalar> t;
    t.diagonal.resize(n);
    t.off_diagonal = DenseVector<Scalar>::Zero(std::max<Eigen::Index>(n - 1, 0));
    t.reflectors = DenseMatrix<Scalar>::Zero(n, std::max<Eigen::Index>(n - 2, 0));

    for (Eigen::Index k = 0; k + 2 < n; ++k) {
        const Eigen::Index m = n - k - 1;
        DenseVector<Scalar> v = a.col(k).tail(m);
        const Scalar norm = v.norm();
        if (norm == Scalar(0)) {
            t.off_diagonal(k) = Scalar(0);
            continue;
        }
        const Scalar alpha = v(0) > Scalar(0) ? -norm : norm;
        v(0) -= alpha;
        const Scalar vnorm = v.norm();
        if (vnorm == Scalar(0)) {
            t.off_diagonal(k) = alpha;
            continue;
        }
        v /= vnorm;
        t.reflectors.col(k).tail(m) = v;
        t.off_diagonal(k) = alpha;

        // H A H = A - v w^T - w v^T with p = A v, w = 2p - 2 (v^T p) v
        auto sub = a.bottomRightCorner(m, m);
        const DenseVector<Scalar> p = sub * v;
        const DenseVector<Scalar> w = Scalar(2) * p - Scalar(2) * v.dot(p) * v;
        sub.noalias() -= v * w.transpose();
        sub.noalias() -= w * v.transpose();
    }
    for (Eigen::Index i = 0; i < n; ++i) t.diagonal(i) = a(i, i);
    if (n >= 2) t.off_diagonal(n - 2) = a(n - 1, n - 2);
    return t;
}

/// Implicit QL on a symmetric tridiagonal matrix. On return `d` holds the
/// eigenvalues (unsorted). When `z` is given it must start as the basis the
/// tridiagonal was expressed in; its columns become the eigenvectors.
template <typename Scalar>
void implicit_ql(DenseVector<Scalar>& d, DenseVector<Scalar> off, DenseMatrix<Scalar>* z = nullptr) {
    using std::abs;
    using std::hypot;
    const Eigen::Index n = d.size();
    if (n <= 1) return;
    DenseVector<Scalar> e(n);
    e.head(n - 1) = off;
    e(n - 1) = Scalar(0);
    const Scalar eps = std::numeric_limits<Scalar>::epsilon();
    constexpr int max_iterations = 60;

    for (Eigen::Index l = 0; l < n; ++l) {
        int iterations = 0;
        Eigen::Index m;
        do {
            for (m = l; m + 1 < n; ++m) {
                const Scalar dd = abs(d(m)) + abs(d(m + 1));
                if (abs(e(m)) <= eps * dd) break;
            }
            if (m == l) break;
            if (++iterations > max_iterations) throw std::runtime_error("implicit QL did not converge");

            Scalar g = (d(l + 1) - d(l)) / (Scalar(2) * e(l));
            Scalar r = hypot(g, Scalar(1));
            g = d(m) - d(l) + e(l) / (g + (g >= Scalar(0) ? r : -r));
            Scalar s = 1, c = 1, p = 0;
            Eigen::Index i = m - 1;
            bool underflow = false;
            for (; i >= l; --i) {
                const Scalar f = s * e(i);
                const Scalar b = c * e(i);
                r = hypot(f, g);
                e(i + 1) = r;
                if (r == Scalar(0)) {
                    d(i + 1) -= p;
                    e(m) = Scalar(0);
                    underflow = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d(i + 1) - p;
                r = (d(i) - g) * s + Scalar(2) * c * b;
                p = s * r;
                d(i + 1) = g + p;
                g = c * r - b;
                if (z) {
                    for (Eigen::Index k = 0; k < n; ++k) {
                        const Scalar t = (*z)(k, i + 1);
                        (*z)(k, i + 1) = s * (*z)(k, i) + c * t;
                        (*z)(k, i) = c * (*z)(k, i) - s * t;
                    }
                }
            }
            if (underflow) continue;
            d(l) -= p;
            e(l) = g;
            e(m) = Scalar(0);
        } while (m != l);
    }
}

/// Eigenvector of a symmetric tridiagonal matrix for a computed eigenvalue,
/// by inverse iteration with a pivoted LU of T - lambda I.
template <typename Scalar>
DenseVector<Scalar> tridiagonal_eigenvector(const DenseVector<Scalar>& diag, const DenseVector<Scalar>& off,
                                            Scalar lambda, int sweeps = 3) {
    using std::abs;
    const Eigen::Index n = diag.size();
    DenseVector<Scalar> x = DenseVector<Scalar>::Ones(n) / std::sqrt(Scalar(n));
    if (n == 1) return x;

    Scalar scale = Scalar(0);
    for (Eigen::Index i = 0; i < n; ++i) scale = std::max(scale, abs(diag(i)));
    for (Eigen::Index i = 0; i + 1 < n; ++i) scale = std::max(scale, abs(off(i)));
    const Scalar tiny = std::max(scale, Scalar(1)) * std::numeric_limits<Scalar>::epsilon();

    // factor (same layout as LAPACK gttrf): dl multipliers, d pivots, du/du2 fill
    DenseVector<Scalar> dl = off, d = diag.array() - lambda, du = off;
    DenseVector<Scalar> du2 = DenseVector<Scalar>::Zero(std::max<Eigen::Index>(n - 2, 0));
    std::vector<char> swapped(n - 1, 0);
    for (Eigen::Index i = 0; i + 1 < n; ++i) {
        if (abs(d(i)) >= abs(dl(i))) {
            if (d(i) == Scalar(0)) d(i) = tiny;
            const Scalar fact = dl(i) / d(i);
            dl(i) = fact;
            d(i + 1) -= fact * du(i);
        } else {
            swapped[i] = 1;
            const Scalar fact = d(i) / dl(i);
            d(i) = dl(i);
            dl(i) = fact;
            const Scalar temp = du(i);
            du(i) = d(i + 1);
            d(i + 1) = temp - fact * d(i + 1);
            if (i + 2 < n) {
                du2(i) = du(i + 1);
                du(i + 1) = -fact * du(i + 1);
            }
        }
    }
    if (d(n - 1) == Scalar(0)) d(n - 1) = tiny;
    for (Eigen::Index i = 0; i < n; ++i)
        if (abs(d(i)) < tiny) d(i) = d(i) < Scalar(0) ? -tiny : tiny;

    for (int sweep = 0; sweep < sweeps; ++sweep) {
        for (Eigen::Index i = 0; i + 1 < n; ++i) {
            if (swapped[i]) {
                const Scalar temp = x(i);
                x(i) = x(i + 1);
                x(i + 1) = temp - dl(i) * x(i);
            } else {
                x(i + 1) -= dl(i) * x(i);
            }
        }
        x(n - 1) /= d(n - 1);
        x(n - 2) = (x(n - 2) - du(n - 2) * x(n - 1)) / d(n - 2);
        for (Eigen::Index i = n - 3; i >= 0; --i) x(i) = (x(i) - du(i) * x(i + 1) - du2(i) * x(i + 2)) / d(i);
        x.normalize();
    }
    return x;
}

template <typename Scalar>
struct SymmetricEigen {
    DenseVector<Scalar> values;   // ascending
    DenseMatrix<Scalar> vectors;  // empty unless requested
};

template <typename Derived>
SymmetricEigen<typename Derived::Scalar> symmetric_eigen(const Eigen::MatrixBase<Derived>& a, bool with_vectors = false) {
    using Scalar = typename Derived::Scalar;
    const Tridiagonal<Scalar> t = householder_tridiagonalize(a);
    SymmetricEigen<Scalar> out;
    DenseVector<Scalar> d = t.diagonal;
    DenseMatrix<Scalar> z;
    if (with_vectors) z = t.q();
    implicit_ql(d, t.off_diagonal, with_vectors ? &z : nullptr);

    std::vector<Eigen::Index> order(d.size());
    std::iota(order.begin(), order.end(), Eigen::Index(0));
    std::stable_sort(order.begin(), order.end(), [&](Eigen::Index i, Eigen::Index j) { return d(i) < d(j); });
    out.values.resize(d.size());
    for (std::size_t i = 0; i < order.size(); ++i) out.values(i) = d(order[i]);
    if (with_vectors) {
        out.vectors.resize(z.rows(), z.cols());
        for (std::size_t i = 0; i < order.size(); ++i) out.vectors.col(i) = z.col(order[i]);
    }
    return out;
}

}  // namespace fulleroct

// linalg.hpp - small dense complex linear algebra layer used by the whole
// library: inner products, phase handling, orthonormality checks, orthogonal
// complements, unitarity tests, Haar-random unitaries and eigenvector checks.
//
// Everything is double precision and dimension-agnostic; Eigen does the heavy
// lifting (SVD, QR). Conventions:
//   * inner(u, v) is conjugate-linear in the FIRST argument: <u|v> = u^dag v.
//   * vectors representing states are unit vectors; functions that require
//     unit input throw numeric_error when it is violated.
//
// Part of sudoq. License: MIT.

#ifndef SUDOQ_LINALG_HPP
#define SUDOQ_LINALG_HPP

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "sudoq/tolerances.hpp"

namespace sudoq {

using Complex = std::complex<double>;
using Vec = Eigen::VectorXcd;
using Mat = Eigen::MatrixXcd;

/// <u|v>, conjugate-linear in the first argument.
inline Complex inner(const Vec& u, const Vec& v) {
    if (u.size() != v.size()) {
        throw numeric_error("inner: dimension mismatch (" + std::to_string(u.size()) +
                            " vs " + std::to_string(v.size()) + ")");
    }
    return u.dot(v); // Eigen's dot conjugates the first operand
}

inline bool is_unit(const Vec& v, double tol = 1e-9) {
    return std::abs(v.norm() - 1.0) <= tol;
}

/// Kronecker product a (x) b; component (p, q) lands at index p*|b| + q.
inline Vec kron(const Vec& a, const Vec& b) {
    Vec out(a.size() * b.size());
    for (Eigen::Index p = 0; p < a.size(); ++p) {
        out.segment(p * b.size(), b.size()) = a[p] * b;
    }
    return out;
}

inline void require_unit(const Vec& v, double tol, const char* where) {
    if (!is_unit(v, tol)) {
        throw numeric_error(std::string(where) + ": vector is not unit (norm = " +
                            std::to_string(v.norm()) + ")");
    }
}

/// True iff the two unit vectors describe the same state, i.e. differ only by
/// a global phase: |<u|v>| >= 1 - eq_tol. Non-unit inputs are rejected (the
/// unit check is deliberately loose, 1e-6, so it flags forgotten
/// normalization rather than floating-point drift).
inline bool equal_up_to_phase(const Vec& u, const Vec& v, double eq_tol = 1e-9) {
    require_unit(u, 1e-6, "equal_up_to_phase");
    require_unit(v, 1e-6, "equal_up_to_phase");
    return std::abs(inner(u, v)) >= 1.0 - eq_tol;
}

/// Fixes the global phase of v so that its first component of modulus
/// > eq_tol becomes real and positive. Idempotent. Throws on (near-)zero
/// vectors, which have no phase to fix.
inline Vec canonical_phase(const Vec& v, double eq_tol = 1e-9) {
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        const double m = std::abs(v[i]);
        if (m > eq_tol) {
            return v * (std::conj(v[i]) / m);
        }
    }
    throw numeric_error("canonical_phase: vector has no component of modulus > eq_tol");
}

/// Result of an orthonormality check over a set of vectors.
struct OrthoReport {
    bool ok = false;
    double max_residual = 0.0; // max over pairs of |<v_a|v_b> - delta_ab|
};

/// Checks that the given vectors form an orthonormal set:
/// max_{a,b} |<v_a|v_b> - delta_ab| <= orth_tol. Throws on empty input or
/// mismatched dimensions.
inline OrthoReport is_orthonormal_set(const std::vector<Vec>& vs, double orth_tol = 1e-9) {
    if (vs.empty()) {
        throw numeric_error("is_orthonormal_set: empty set");
    }
    OrthoReport rep;
    for (std::size_t a = 0; a < vs.size(); ++a) {
        for (std::size_t b = a; b < vs.size(); ++b) {
            const Complex g = inner(vs[a], vs[b]);
            const double target = (a == b) ? 1.0 : 0.0;
            const double res = std::abs(g - target);
            if (res > rep.max_residual) rep.max_residual = res;
        }
    }
    rep.ok = rep.max_residual <= orth_tol;
    return rep;
}

/// Orthonormal basis of the orthogonal complement of span(vs) inside C^dim.
/// The input vectors need not be orthonormal or independent; the rank is
/// decided by an SVD with relative threshold orth_tol * sigma_max. An empty
/// input yields the standard basis of C^dim.
inline std::vector<Vec> orthogonal_complement(const std::vector<Vec>& vs, int dim,
                                              double orth_tol = 1e-9) {
    if (dim <= 0) {
        throw numeric_error("orthogonal_complement: dimension must be positive");
    }
    if (vs.empty()) {
        std::vector<Vec> basis;
        basis.reserve(static_cast<std::size_t>(dim));
        for (int i = 0; i < dim; ++i) {
            Vec e = Vec::Zero(dim);
            e[i] = 1.0;
            basis.push_back(std::move(e));
        }
        return basis;
    }
    Mat A(dim, static_cast<Eigen::Index>(vs.size()));
    for (std::size_t c = 0; c < vs.size(); ++c) {
        if (vs[c].size() != dim) {
            throw numeric_error("orthogonal_complement: vector dimension mismatch");
        }
        A.col(static_cast<Eigen::Index>(c)) = vs[c];
    }
    Eigen::JacobiSVD<Mat> svd(A, Eigen::ComputeFullU);
    const auto& sigma = svd.singularValues();
    const double cutoff = orth_tol * (sigma.size() > 0 ? sigma[0] : 0.0);
    int rank = 0;
    for (Eigen::Index i = 0; i < sigma.size(); ++i) {
        if (sigma[i] > cutoff) ++rank;
    }
    std::vector<Vec> basis;
    basis.reserve(static_cast<std::size_t>(dim - rank));
    for (int i = rank; i < dim; ++i) {
        basis.push_back(svd.matrixU().col(i));
    }
    return basis;
}

/// ||M^dag M - I||_max <= orth_tol.
inline bool is_unitary(const Mat& M, double orth_tol = 1e-9) {
    if (M.rows() != M.cols()) return false;
    const Mat G = M.adjoint() * M - Mat::Identity(M.rows(), M.cols());
    return G.cwiseAbs().maxCoeff() <= orth_tol;
}

/// Haar-distributed random unitary of size n, deterministic in the seed.
///
/// Method: complex Ginibre matrix (i.i.d. standard complex Gaussians via a
/// hand-rolled Box-Muller transform, so results do not depend on the standard
/// library's normal_distribution implementation), QR decomposition, and the
/// phase correction Q -> Q * diag(r_ii/|r_ii|) that makes the distribution
/// exactly Haar.
inline Mat haar_random_unitary(int n, std::uint64_t seed) {
    if (n <= 0) {
        throw numeric_error("haar_random_unitary: size must be positive");
    }
    std::mt19937_64 rng(seed);
    auto uniform01 = [&rng]() {
        // 53 random bits -> (0, 1); never returns 0, safe for log().
        return (static_cast<double>(rng() >> 11) + 0.5) * 0x1.0p-53;
    };
    auto gaussian_pair = [&]() {
        const double r = std::sqrt(-2.0 * std::log(uniform01()));
        const double phi = 2.0 * M_PI * uniform01();
        return Complex(r * std::cos(phi), r * std::sin(phi));
    };
    Mat A(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            A(i, j) = gaussian_pair();
        }
    }
    Eigen::HouseholderQR<Mat> qr(A);
    Mat Q = qr.householderQ();
    const Mat R = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int i = 0; i < n; ++i) {
        const Complex r = R(i, i);
        const double m = std::abs(r);
        Q.col(i) *= (m > 0.0) ? (r / m) : Complex(1.0, 0.0);
    }
    return Q;
}

/// Rayleigh-quotient eigenvector check: lambda = <v|Mv>, residual = ||Mv - lambda v||.
/// Requires a unit vector; residual ~ 0 iff v is an eigenvector of M.
struct EigencheckResult {
    Complex lambda;
    double residual = 0.0;
};

inline EigencheckResult eigencheck(const Mat& M, const Vec& v) {
    if (M.rows() != M.cols() || M.cols() != v.size()) {
        throw numeric_error("eigencheck: dimension mismatch");
    }
    require_unit(v, 1e-6, "eigencheck");
    const Vec Mv = M * v;
    EigencheckResult r;
    r.lambda = inner(v, Mv);
    r.residual = (Mv - r.lambda * v).norm();
    return r;
}

} // namespace sudoq

#endif // SUDOQ_LINALG_HPP

// constructions.hpp - generators for quantum Sudoku designs: the classical
// cyclic grid, grids built from two families of unitaries, Heisenberg-Weyl
// eigenbases and the mutually unbiased bases they form in prime dimension,
// the maximal-cardinality Heisenberg-Weyl grid, cubes and hypercubes, and
// local (product) MUBs used for design comparisons.
//
// Part of sudoq. License: MIT.

#ifndef SUDOQ_CONSTRUCTIONS_HPP
#define SUDOQ_CONSTRUCTIONS_HPP

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "sudoq/grid.hpp"
#include "sudoq/hypercube.hpp"
#include "sudoq/linalg.hpp"
#include "sudoq/tolerances.hpp"

namespace sudoq {

// ── Unitary families ────────────────────────────────────────────────────────

/// N unitary N x N matrices; the raw material of the grid/cube constructions.
struct UnitaryFamily {
    int n = 0;
    std::vector<Mat> members;
};

inline void check_family(const UnitaryFamily& fam, double orth_tol = 1e-9) {
    if (fam.n < 2) throw numeric_error("UnitaryFamily: N must be >= 2");
    if (static_cast<int>(fam.members.size()) != fam.n) {
        throw numeric_error("UnitaryFamily: expected " + std::to_string(fam.n) +
                            " members, got " + std::to_string(fam.members.size()));
    }
    for (int t = 0; t < fam.n; ++t) {
        const Mat& m = fam.members[static_cast<std::size_t>(t)];
        if (m.rows() != fam.n || m.cols() != fam.n) {
            throw numeric_error("UnitaryFamily: member " + std::to_string(t) +
                                " has wrong shape");
        }
        if (!is_unitary(m, orth_tol)) {
            throw numeric_error("UnitaryFamily: member " + std::to_string(t) +
                                " is not unitary");
        }
    }
}

inline UnitaryFamily identity_family(int n) {
    UnitaryFamily fam{n, {}};
    fam.members.assign(static_cast<std::size_t>(n), Mat::Identity(n, n));
    check_family(fam);
    return fam;
}

/// N independent Haar-random members; member t's stream is decorrelated from
/// the base seed with a splitmix64 step.
inline UnitaryFamily haar_family(int n, std::uint64_t seed) {
    UnitaryFamily fam{n, {}};
    for (int t = 0; t < n; ++t) {
        std::uint64_t s = seed + 0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(t + 1);
        s ^= s >> 30; s *= 0xbf58476d1ce4e5b9ULL;
        s ^= s >> 27; s *= 0x94d049bb133111ebULL;
        s ^= s >> 31;
        fam.members.push_back(haar_random_unitary(n, s));
    }
    check_family(fam);
    return fam;
}

// ── Grid constructions ──────────────────────────────────────────────────────

/// The classical cyclic grid: cell (i,j,k,l) holds the computational vector
/// with index N*((j+k) mod N) + ((i+l) mod N). Valid for every N, with
/// cardinality N^2.
inline SudoQGrid classical_cyclic_grid(int n) {
    SudoQGrid g(n);
    const int dim = n * n;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l) {
                    Vec v = Vec::Zero(dim);
                    v[n * ((j + k) % n) + ((i + l) % n)] = 1.0;
                    const auto [row, col] = cell_coords(n, i, j, k, l);
                    g.set(row, col, std::move(v));
                }
    return g;
}

/// Grid built from two unitary families: cell (i,j,k,l) is the product
/// u^(i)_{(j+k) mod N} (x) v^(j)_{(i+l) mod N}, where the superscript picks
/// the family member and the subscript its column. Always a valid grid.
inline SudoQGrid grid_from_unitary_families(const UnitaryFamily& us, const UnitaryFamily& vs,
                                            double orth_tol = 1e-9) {
    check_family(us, orth_tol);
    check_family(vs, orth_tol);
    if (us.n != vs.n) throw numeric_error("grid_from_unitary_families: families disagree on N");
    const int n = us.n;
    SudoQGrid g(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l) {
                    const Vec u = us.members[static_cast<std::size_t>(i)].col((j + k) % n);
                    const Vec v = vs.members[static_cast<std::size_t>(j)].col((i + l) % n);
                    const auto [row, col] = cell_coords(n, i, j, k, l);
                    g.set(row, col, kron(u, v));
                }
    return g;
}

/// Predicted cardinality of grid_from_unitary_families: c1 * c2, where c1 is
/// the number of phase-distinct columns across all members of the first
/// family and c2 the same for the second.
inline int predicted_cardinality(const UnitaryFamily& us, const UnitaryFamily& vs,
                                 double eq_tol = 1e-9) {
    auto distinct_columns = [eq_tol](const UnitaryFamily& fam) {
        std::vector<Vec> cols;
        for (const Mat& m : fam.members)
            for (int c = 0; c < fam.n; ++c) cols.push_back(m.col(c));
        return cardinality(cols, eq_tol).cardinality;
    };
    check_family(us);
    check_family(vs);
    return distinct_columns(us) * distinct_columns(vs);
}

// ── Heisenberg-Weyl bases and MUBs ──────────────────────────────────────────

/// Cyclic shift: (X v)_m = v_{(m+1) mod N}.
inline Mat hw_shift(int n) {
    if (n < 2) throw numeric_error("hw_shift: N must be >= 2");
    Mat x = Mat::Zero(n, n);
    for (int m = 0; m < n; ++m) x(m, (m + 1) % n) = 1.0;
    return x;
}

/// Clock: Z = diag(w^(m+1)), w = exp(2 pi i / N). Satisfies XZ = w ZX.
inline Mat hw_clock(int n) {
    if (n < 2) throw numeric_error("hw_clock: N must be >= 2");
    Mat z = Mat::Zero(n, n);
    for (int m = 0; m < n; ++m) {
        const double ang = 2.0 * std::numbers::pi * (m + 1) / n;
        z(m, m) = Complex(std::cos(ang), std::sin(ang));
    }
    return z;
}

/// X Z^k for k >= 0; the operator whose eigenbasis hw_basis(N, k+1) returns.
inline Mat hw_op(int n, int k) {
    if (k < 0) throw numeric_error("hw_op: power must be >= 0");
    Mat zk = Mat::Identity(n, n);
    const Mat z = hw_clock(n);
    for (int p = 0; p < k; ++p) zk = zk * z;
    return hw_shift(n) * zk;
}

/// Orthonormal basis number t of the Heisenberg-Weyl family in dimension N:
///   t = 0            -> the computational (clock) eigenbasis,
///   t = 1 .. N       -> the eigenbasis of X Z^(t-1).
/// Vector c of basis t >= 1 has components
///   v_m = exp(i (pi k m (N - m) + 2 pi c m) / N) / sqrt(N),   k = t - 1,
/// which diagonalizes X Z^k for every N (the half-integer powers at odd m
/// are exactly what even N requires). For prime N the N + 1 bases are
/// pairwise mutually unbiased.
inline std::vector<Vec> hw_basis(int n, int t) {
    if (n < 2) throw numeric_error("hw_basis: N must be >= 2");
    if (t < 0 || t > n) {
        throw numeric_error("hw_basis: basis index " + std::to_string(t) +
                            " out of range 0.." + std::to_string(n));
    }
    std::vector<Vec> basis;
    basis.reserve(static_cast<std::size_t>(n));
    if (t == 0) {
        for (int c = 0; c < n; ++c) {
            Vec v = Vec::Zero(n);
            v[c] = 1.0;
            basis.push_back(std::move(v));
        }
        return basis;
    }
    const int k = t - 1;
    const double root = 1.0 / std::sqrt(static_cast<double>(n));
    for (int c = 0; c < n; ++c) {
        Vec v(n);
        for (int m = 0; m < n; ++m) {
            const double ang =
                (std::numbers::pi * k * m * (n - m) + 2.0 * std::numbers::pi * c * m) / n;
            v[m] = root * Complex(std::cos(ang), std::sin(ang));
        }
        basis.push_back(canonical_phase(v));
    }
    return basis;
}

inline bool is_prime(int n) {
    if (n < 2) return false;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p == 0) return false;
    }
    return true;
}

/// True iff every cross overlap between the two bases satisfies
/// | |<b|c>|^2 - 1/d | <= tol.
inline bool check_unbiased(const std::vector<Vec>& b, const std::vector<Vec>& c,
                           double tol = 1e-9) {
    if (b.empty() || c.empty()) throw numeric_error("check_unbiased: empty basis");
    const Eigen::Index d = b.front().size();
    for (const Vec& v : b)
        if (v.size() != d) throw numeric_error("check_unbiased: dimension mismatch");
    for (const Vec& v : c)
        if (v.size() != d) throw numeric_error("check_unbiased: dimension mismatch");
    const double target = 1.0 / static_cast<double>(d);
    for (const Vec& v : b)
        for (const Vec& w : c) {
            if (std::abs(std::norm(inner(v, w)) - target) > tol) return false;
        }
    return true;
}

/// The full set of N + 1 mutually unbiased bases of prime dimension N:
/// the computational basis plus the eigenbases of X, XZ, ..., XZ^(N-1).
inline std::vector<std::vector<Vec>> hw_mub_set(int n) {
    if (!is_prime(n)) {
        throw numeric_error("hw_mub_set: " + std::to_string(n) + " is not prime");
    }
    std::vector<std::vector<Vec>> bases;
    bases.reserve(static_cast<std::size_t>(n + 1));
    for (int t = 0; t <= n; ++t) bases.push_back(hw_basis(n, t));
    return bases;
}

/// Family whose member t is the matrix with the vectors of hw_basis(N, t) as
/// columns, t = 0 .. N-1.
inline UnitaryFamily hw_eigenbasis_family(int n) {
    UnitaryFamily fam{n, {}};
    for (int t = 0; t < n; ++t) {
        const auto basis = hw_basis(n, t);
        Mat m(n, n);
        for (int c = 0; c < n; ++c) m.col(c) = basis[static_cast<std::size_t>(c)];
        fam.members.push_back(std::move(m));
    }
    check_family(fam);
    return fam;
}

/// The Heisenberg-Weyl grid: cell (i,j,k,l) = hw_basis(N,i)[(j+k) mod N] (x)
/// hw_basis(N,j)[(i+l) mod N]. Valid for every N >= 2; for prime N its
/// cardinality is the maximal N^4 and the blocks along any permutation
/// (i, sigma(i)) are pairwise unbiased bases of dimension N^2.
inline SudoQGrid hw_sudoq(int n) {
    return grid_from_unitary_families(hw_eigenbasis_family(n), hw_eigenbasis_family(n));
}

// ── Cubes and hypercubes ────────────────────────────────────────────────────

enum class CubeVariant { Standard, EvenModified };

/// Cube (D = 3) built from three unitary families:
///   cell(i1,i2,i3,k1,k2,k3) =
///     u^(i2+i3)_{k1+i1} (x) v^(i1+i3)_{k2+i2} (x) w^(s)_{k3+i3}  (all mod N)
/// with s = i1+i2 for the standard variant and s = i1+2*i2 for the modified
/// one. The modified superscripts form a bijection of (i1,i2,i3) whenever
/// gcd(3, N) = 1, which lifts the cardinality of even-N cubes to the maximal
/// N^6 (the standard variant reaches only N^6/2 for even N).
inline SudoQHypercube cube_from_families(const UnitaryFamily& us, const UnitaryFamily& vs,
                                         const UnitaryFamily& ws, CubeVariant variant,
                                         double orth_tol = 1e-9) {
    check_family(us, orth_tol);
    check_family(vs, orth_tol);
    check_family(ws, orth_tol);
    if (us.n != vs.n || us.n != ws.n) {
        throw numeric_error("cube_from_families: families disagree on N");
    }
    const int n = us.n;
    SudoQHypercube h(n, 3);
    std::vector<int> idx(6);
    for (int i1 = 0; i1 < n; ++i1)
        for (int i2 = 0; i2 < n; ++i2)
            for (int i3 = 0; i3 < n; ++i3)
                for (int k1 = 0; k1 < n; ++k1)
                    for (int k2 = 0; k2 < n; ++k2)
                        for (int k3 = 0; k3 < n; ++k3) {
                            const int s3 = variant == CubeVariant::Standard ? (i1 + i2) % n
                                                                            : (i1 + 2 * i2) % n;
                            const Vec u =
                                us.members[static_cast<std::size_t>((i2 + i3) % n)].col((k1 + i1) % n);
                            const Vec v =
                                vs.members[static_cast<std::size_t>((i1 + i3) % n)].col((k2 + i2) % n);
                            const Vec w =
                                ws.members[static_cast<std::size_t>(s3)].col((k3 + i3) % n);
                            idx = {i1, i2, i3, k1, k2, k3};
                            h.set(idx, kron(kron(u, v), w));
                        }
    return h;
}

/// D-dimensional generalization: factor t of cell (i_1..i_D, k_1..k_D) uses
/// family t's member (sum of i_s over s != t) mod N at column (k_t + i_t)
/// mod N. D = 3 with the standard superscripts is cube_from_families; D = 2
/// reproduces grid_from_unitary_families under the digit relabeling of
/// hypercube_to_grid.
inline SudoQHypercube hypercube_from_families(int d_sides,
                                              const std::vector<UnitaryFamily>& families,
                                              double orth_tol = 1e-9) {
    if (d_sides < 2) throw numeric_error("hypercube_from_families: D must be >= 2");
    if (static_cast<int>(families.size()) != d_sides) {
        throw numeric_error("hypercube_from_families: expected one family per dimension");
    }
    for (const auto& fam : families) check_family(fam, orth_tol);
    const int n = families.front().n;
    for (const auto& fam : families) {
        if (fam.n != n) throw numeric_error("hypercube_from_families: families disagree on N");
    }
    SudoQHypercube h(n, d_sides);
    for (std::size_t f = 0; f < h.cell_count(); ++f) {
        const std::vector<int> idx = h.unflatten(f);
        Vec cell;
        for (int t = 0; t < d_sides; ++t) {
            int member = 0;
            for (int s = 0; s < d_sides; ++s) {
                if (s != t) member += idx[static_cast<std::size_t>(s)];
            }
            member %= n;
            const int col = (idx[static_cast<std::size_t>(d_sides + t)] +
                             idx[static_cast<std::size_t>(t)]) % n;
            const Vec factor = families[static_cast<std::size_t>(t)]
                                   .members[static_cast<std::size_t>(member)]
                                   .col(col);
            cell = t == 0 ? factor : kron(cell, factor);
        }
        h.set_flat(f, std::move(cell));
    }
    return h;
}

// ── Local product MUBs ──────────────────────────────────────────────────────

/// For prime N: the N + 1 local bases of dimension N^2 obtained by pairing
/// each MUB with itself, basis t = { b (x) b' : b, b' in hw_mub_set(N)[t] }.
/// The bases are pairwise unbiased and every vector is a product state.
inline std::vector<std::vector<Vec>> local_mub_product_bases(int n) {
    const auto mubs = hw_mub_set(n); // throws unless N is prime
    std::vector<std::vector<Vec>> bases;
    bases.reserve(mubs.size());
    for (const auto& basis : mubs) {
        std::vector<Vec> product;
        product.reserve(static_cast<std::size_t>(n * n));
        for (const Vec& b : basis)
            for (const Vec& bp : basis) product.push_back(kron(b, bp));
        bases.push_back(std::move(product));
    }
    return bases;
}

/// True iff the unit vector on C^(n1*n2) has Schmidt rank 1 across the
/// n1 x n2 split (second singular value below tol).
inline bool is_product_state(const Vec& v, int n1, int n2, double tol = 1e-9) {
    if (v.size() != static_cast<Eigen::Index>(n1) * n2) {
        throw numeric_error("is_product_state: dimension is not n1*n2");
    }
    Mat m(n1, n2);
    for (int p = 0; p < n1; ++p)
        for (int q = 0; q < n2; ++q) m(p, q) = v[p * n2 + q];
    Eigen::JacobiSVD<Mat> svd(m);
    return svd.singularValues().size() < 2 || svd.singularValues()[1] <= tol;
}

} // namespace sudoq

#endif // SUDOQ_CONSTRUCTIONS_HPP

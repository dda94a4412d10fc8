// param4x4.hpp - the complete parametrized families of 4x4 quantum Sudoku
// solutions with the computational basis pinned to the upper-left block,
// their cardinality audit (admissible values 4, 6, 8, 16), Shannon entropy,
// and the four-clue puzzle pattern used for unique-solvability experiments.
//
// A 4x4 solution is assembled from three unitaries U_ef, U_ev, U_eu whose
// columns are the upper-right (f), lower-left (v) and lower-right (u) block
// vectors expressed in the computational basis:
//
//     e1 e2 | f1 f2
//     e3 e4 | f3 f4
//     ------+------
//     v1 v2 | u1 u2
//     v3 v4 | u3 u4
//
// The maximal-cardinality family (c = 16 generically) has two Bloch angles
// alpha, gamma and phases phi, varphi, eta with zeta = phi + eta - varphi;
// setting alpha or gamma to 0 or pi degenerates it to c = 8, both to c = 4.
// Four further families cover the solutions where exactly one off-diagonal
// block is non-computational (c = 8 generically, c = 6 or 4 at the poles).
//
// Part of sudoq. License: MIT.

#ifndef SUDOQ_PARAM4X4_HPP
#define SUDOQ_PARAM4X4_HPP

#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "sudoq/grid.hpp"
#include "sudoq/linalg.hpp"
#include "sudoq/tolerances.hpp"

namespace sudoq {

/// Parameters of the maximal-cardinality 4x4 family. Angles enter through
/// their half, cos(alpha/2) / sin(alpha/2), matching the Bloch-sphere
/// picture of each orthogonal pair.
struct C16Params {
    double alpha = 0.0;  // in [0, pi]
    double gamma = 0.0;  // in [0, pi]
    double phi = 0.0;    // in [0, 2 pi)
    double varphi = 0.0; // in [0, 2 pi)
    double eta = 0.0;    // in [0, 2 pi)

    /// The fourth phase is fixed by the solvability constraint
    /// phi + eta = varphi + zeta.
    double zeta() const { return phi + eta - varphi; }
};

/// Parameters of the four c = 8 families (one off-diagonal block
/// computational). `family` selects the matrix triple, 1..4.
struct C8Params {
    int family = 1;
    double alpha = 0.0;
    double beta = 0.0;
    double phi = 0.0;
    double varphi = 0.0;
};

namespace detail {

inline Complex phase(double ang) { return Complex(std::cos(ang), std::sin(ang)); }

/// Lays the columns of U_ef, U_ev, U_eu into the three non-trivial blocks;
/// the upper-left block is the computational basis.
inline SudoQGrid assemble_4x4(const Mat& uef, const Mat& uev, const Mat& ueu) {
    for (const Mat* m : {&uef, &uev, &ueu}) {
        if (!is_unitary(*m, 1e-9)) {
            throw numeric_error("assemble_4x4: block matrix is not unitary");
        }
    }
    SudoQGrid g(2);
    for (int b = 0; b < 4; ++b) {
        const int r = b / 2, c = b % 2;
        Vec e = Vec::Zero(4);
        e[b] = 1.0;
        g.set(r, c, std::move(e));
        g.set(r, 2 + c, uef.col(b));
        g.set(2 + r, c, uev.col(b));
        g.set(2 + r, 2 + c, ueu.col(b));
    }
    return g;
}

} // namespace detail

/// The maximal-cardinality solution family. Always a valid grid; cardinality
/// is 16 for generic parameters, 8 when exactly one of alpha, gamma lies on a
/// pole (0 or pi), and 4 when both do.
inline SudoQGrid solution_c16(const C16Params& p) {
    using detail::phase;
    const double ca = std::cos(p.alpha / 2), sa = std::sin(p.alpha / 2);
    const double cg = std::cos(p.gamma / 2), sg = std::sin(p.gamma / 2);
    const Complex f = phase(p.phi), w = phase(p.varphi), h = phase(p.eta), z = phase(p.zeta());

    Mat uef(4, 4), uev(4, 4), ueu(4, 4);
    uef << 0, 0, ca, sa,
           0, 0, f * sa, -f * ca,
           ca, sa, 0, 0,
           w * sa, -w * ca, 0, 0;
    uev << 0, cg, 0, sg,
           cg, 0, sg, 0,
           0, z * sg, 0, -z * cg,
           h * sg, 0, -h * cg, 0;
    ueu << sa * sg, ca * sg, sa * cg, ca * cg,
           -f * ca * sg, f * sa * sg, -f * ca * cg, f * sa * cg,
           -z * sa * cg, -z * ca * cg, z * sa * sg, z * ca * sg,
           f * h * ca * cg, -f * h * sa * cg, -f * h * ca * sg, f * h * sa * sg;
    return detail::assemble_4x4(uef, uev, ueu);
}

/// The four families with one non-computational off-diagonal block. Always a
/// valid grid; cardinality is 8 for generic angles, 6 when exactly one of
/// alpha, beta lies on a pole, and 4 when both do. In families 1-2 the
/// lower-right block repeats the upper-right block's vectors (reordered); in
/// families 3-4 it repeats the lower-left block's.
inline SudoQGrid solution_c8(const C8Params& p) {
    using detail::phase;
    if (p.family < 1 || p.family > 4) {
        throw numeric_error("solution_c8: family must be 1..4, got " + std::to_string(p.family));
    }
    const double ca = std::cos(p.alpha / 2), sa = std::sin(p.alpha / 2);
    const double cb = std::cos(p.beta / 2), sb = std::sin(p.beta / 2);
    const Complex f = phase(p.phi), w = phase(p.varphi);

    Mat uef(4, 4), uev(4, 4), ueu(4, 4);
    switch (p.family) {
        case 1:
            uef << 0, 0, cb, sb,
                   0, 0, f * sb, -f * cb,
                   ca, sa, 0, 0,
                   w * sa, -w * ca, 0, 0;
            uev << 0, 1, 0, 0,
                   1, 0, 0, 0,
                   0, 0, 0, 1,
                   0, 0, 1, 0;
            ueu << 0, 0, sb, cb,
                   0, 0, -f * cb, f * sb,
                   sa, ca, 0, 0,
                   -w * ca, w * sa, 0, 0;
            break;
        case 2:
            uef << 0, 0, cb, sb,
                   0, 0, f * sb, -f * cb,
                   ca, sa, 0, 0,
                   w * sa, -w * ca, 0, 0;
            uev << 0, 0, 0, 1,
                   0, 0, 1, 0,
                   0, 1, 0, 0,
                   1, 0, 0, 0;
            ueu << sb, cb, 0, 0,
                   -f * cb, f * sb, 0, 0,
                   0, 0, sa, ca,
                   0, 0, -w * ca, w * sa;
            break;
        case 3:
            uef << 0, 0, 1, 0,
                   0, 0, 0, 1,
                   1, 0, 0, 0,
                   0, 1, 0, 0;
            uev << 0, cb, 0, sb,
                   ca, 0, sa, 0,
                   0, f * sb, 0, -f * cb,
                   w * sa, 0, -w * ca, 0;
            ueu << 0, sb, 0, cb,
                   sa, 0, ca, 0,
                   0, -f * cb, 0, f * sb,
                   -w * ca, 0, w * sa, 0;
            break;
        case 4:
            uef << 0, 0, 0, 1,
                   0, 0, 1, 0,
                   0, 1, 0, 0,
                   1, 0, 0, 0;
            uev << 0, cb, 0, sb,
                   ca, 0, sa, 0,
                   0, f * sb, 0, -f * cb,
                   w * sa, 0, -w * ca, 0;
            ueu << sb, 0, cb, 0,
                   0, sa, 0, ca,
                   -f * cb, 0, f * sb, 0,
                   0, -w * ca, 0, w * sa;
            break;
    }
    return detail::assemble_4x4(uef, uev, ueu);
}

/// Cardinality of a complete valid 4x4 grid, audited against the admissible
/// set {4, 6, 8, 16}. The anomaly flag reports a value outside the set
/// instead of failing, so violations surface in test output.
struct Cardinality4x4Report {
    int cardinality = 0;
    bool anomaly = false;
};

inline Cardinality4x4Report classify_cardinality_4x4(const SudoQGrid& g,
                                                     const Tolerances& tols = {}) {
    tols.check();
    if (g.n() != 2) throw numeric_error("classify_cardinality_4x4: grid must be 4x4");
    const ValidationReport vr = validate(g, tols.orth_tol);
    if (!vr.complete || !vr.valid) {
        throw numeric_error("classify_cardinality_4x4: grid must be complete and valid");
    }
    Cardinality4x4Report rep;
    rep.cardinality = cardinality(g, tols.eq_tol).cardinality;
    rep.anomaly = rep.cardinality != 4 && rep.cardinality != 6 && rep.cardinality != 8 &&
                  rep.cardinality != 16;
    return rep;
}

// ── Shannon entropy ─────────────────────────────────────────────────────────

/// -sum p log2 p over the squared amplitudes in the computational basis,
/// with 0 log 0 = 0.
inline double shannon_entropy_bits(const Vec& v) {
    double s = 0.0;
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        const double p = std::norm(v[i]);
        if (p > 0.0) s -= p * std::log2(p);
    }
    return s;
}

inline double binary_entropy(double p) {
    if (p < 0.0 || p > 1.0) throw numeric_error("binary_entropy: p outside [0, 1]");
    double s = 0.0;
    if (p > 0.0) s -= p * std::log2(p);
    if (p < 1.0) s -= (1.0 - p) * std::log2(1.0 - p);
    return s;
}

/// Entropy of the two-parameter distribution {xy, x(1-y), (1-x)y, (1-x)(1-y)}.
inline double h4_entropy(double x, double y) {
    if (x < 0.0 || x > 1.0 || y < 0.0 || y > 1.0) {
        throw numeric_error("h4_entropy: arguments outside [0, 1]");
    }
    double s = 0.0;
    for (const double p : {x * y, x * (1.0 - y), (1.0 - x) * y, (1.0 - x) * (1.0 - y)}) {
        if (p > 0.0) s -= p * std::log2(p);
    }
    return s;
}

/// Closed-form entropy of the maximal-cardinality family at p = cos^2(alpha/2),
/// q = cos^2(gamma/2): S(p, q) = 2 h2(p) + 2 h2(q) + 4 h4(p, q). Maximal at
/// p = q = 1/2 (value 12). Note this differs from the direct per-cell total of
/// the same solution, which is 4 h2(p) + 4 h2(q) + 4 h4(p, q) (16 at the
/// maximum); both are reported and share the maximizer.
inline double entropy_closed_form(double p, double q) {
    return 2.0 * binary_entropy(p) + 2.0 * binary_entropy(q) + 4.0 * h4_entropy(p, q);
}

struct EntropyReport {
    std::vector<double> per_cell; // row-major, bits
    double total = 0.0;           // sum of per_cell
    double closed_form = std::numeric_limits<double>::quiet_NaN(); // set for c16 params
};

inline EntropyReport entropy(const SudoQGrid& g) {
    if (!g.complete()) throw numeric_error("entropy: grid has blank cells");
    EntropyReport rep;
    rep.per_cell.reserve(static_cast<std::size_t>(g.dim() * g.dim()));
    for (int r = 0; r < g.dim(); ++r) {
        for (int c = 0; c < g.dim(); ++c) {
            rep.per_cell.push_back(shannon_entropy_bits(g.at(r, c)));
            rep.total += rep.per_cell.back();
        }
    }
    return rep;
}

/// Entropy of a c16-family solution, with the closed form attached.
inline EntropyReport entropy(const SudoQGrid& g, const C16Params& p) {
    EntropyReport rep = entropy(g);
    const double pv = std::cos(p.alpha / 2) * std::cos(p.alpha / 2);
    const double qv = std::cos(p.gamma / 2) * std::cos(p.gamma / 2);
    rep.closed_form = entropy_closed_form(pv, qv);
    return rep;
}

// ── Clue patterns ───────────────────────────────────────────────────────────

/// The four-clue puzzle: keeps e1 (0,0), f3 (1,2), v2 (2,1) and u4 (3,3),
/// blanking the other twelve cells. For every maximal-cardinality solution
/// this pattern is uniquely solvable by constraint propagation.
inline SudoQGrid four_clue_grid(const SudoQGrid& solution) {
    if (solution.n() != 2) throw numeric_error("four_clue_grid: grid must be 4x4");
    if (!solution.complete()) throw numeric_error("four_clue_grid: solution must be complete");
    SudoQGrid g(2);
    for (const auto [r, c] : {std::pair{0, 0}, {1, 2}, {2, 1}, {3, 3}}) {
        g.set(r, c, solution.at(r, c));
    }
    return g;
}

} // namespace sudoq

#endif // SUDOQ_PARAM4X4_HPP

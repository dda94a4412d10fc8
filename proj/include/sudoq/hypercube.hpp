// hypercube.hpp - D-dimensional quantum Sudoku arrays. A hypercube of side
// parameter N and dimension D holds N^(2D) cells, one per index tuple
// (i_1..i_D, k_1..k_D) with every digit in {0..N-1}, and each present cell is
// a unit vector in C^(N^D).
//
// Constraint groups generalize the rows/columns/blocks of a grid:
//   - one "block" group per fixed tuple (i_1..i_D), spanning all k-digits;
//   - for each axis t, one group per choice of (k_t and i_s for s != t),
//     spanning i_t and the remaining k-digits (the roles of i_t and k_t swap).
// Each group holds N^D cells and must be an orthonormal basis when complete.
// For D = 2 these groups are exactly the blocks, rows and columns of a grid
// under the identification row = N*i_2 + k_1, col = N*i_1 + k_2.
//
// Part of sudoq. License: MIT.

#ifndef SUDOQ_HYPERCUBE_HPP
#define SUDOQ_HYPERCUBE_HPP

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "sudoq/grid.hpp"
#include "sudoq/linalg.hpp"
#include "sudoq/tolerances.hpp"

namespace sudoq {

class SudoQHypercube {
public:
    SudoQHypercube(int n, int d_sides) : n_(n), d_(d_sides) {
        if (n < 2) throw numeric_error("SudoQHypercube: side parameter must be >= 2");
        if (d_sides < 2) throw numeric_error("SudoQHypercube: dimension must be >= 2");
        // Desk-scale guard: refuse index spaces that cannot possibly be useful
        // here and would silently overflow or exhaust memory.
        std::size_t count = 1;
        for (int s = 0; s < 2 * d_; ++s) {
            count *= static_cast<std::size_t>(n_);
            if (count > (std::size_t{1} << 24)) {
                throw numeric_error("SudoQHypercube: N^(2D) too large (N=" + std::to_string(n) +
                                    ", D=" + std::to_string(d_sides) + ")");
            }
        }
        dim_ = 1;
        for (int s = 0; s < d_; ++s) dim_ *= n_;
        cells_.resize(count);
    }

    int n() const { return n_; }
    int d_sides() const { return d_; }
    /// Hilbert-space dimension N^D of each cell vector.
    int dim() const { return dim_; }
    /// Total number of cells, N^(2D).
    std::size_t cell_count() const { return cells_.size(); }

    /// Row-major flattening of (i_1..i_D, k_1..k_D), i_1 most significant.
    std::size_t flat_index(const std::vector<int>& idx) const {
        if (static_cast<int>(idx.size()) != 2 * d_) {
            throw numeric_error("SudoQHypercube: index tuple must have 2D = " +
                                std::to_string(2 * d_) + " digits");
        }
        std::size_t f = 0;
        for (int digit : idx) {
            if (digit < 0 || digit >= n_) {
                throw numeric_error("SudoQHypercube: index digit " + std::to_string(digit) +
                                    " out of range for N=" + std::to_string(n_));
            }
            f = f * static_cast<std::size_t>(n_) + static_cast<std::size_t>(digit);
        }
        return f;
    }

    /// Inverse of flat_index.
    std::vector<int> unflatten(std::size_t f) const {
        if (f >= cells_.size()) throw numeric_error("SudoQHypercube: flat index out of range");
        std::vector<int> idx(static_cast<std::size_t>(2 * d_));
        for (int s = 2 * d_ - 1; s >= 0; --s) {
            idx[static_cast<std::size_t>(s)] = static_cast<int>(f % static_cast<std::size_t>(n_));
            f /= static_cast<std::size_t>(n_);
        }
        return idx;
    }

    bool has(const std::vector<int>& idx) const { return cells_[flat_index(idx)].has_value(); }
    bool has_flat(std::size_t f) const { return checked(f).has_value(); }

    const Vec& at(const std::vector<int>& idx) const { return at_flat(flat_index(idx)); }
    const Vec& at_flat(std::size_t f) const {
        const auto& c = checked(f);
        if (!c) throw numeric_error("SudoQHypercube: cell " + std::to_string(f) + " is blank");
        return *c;
    }

    void set(const std::vector<int>& idx, Vec v) { set_flat(flat_index(idx), std::move(v)); }
    void set_flat(std::size_t f, Vec v) {
        if (v.size() != dim_) {
            throw numeric_error("SudoQHypercube: cell vector has dimension " +
                                std::to_string(v.size()) + ", expected " + std::to_string(dim_));
        }
        require_unit(v, 1e-6, "SudoQHypercube::set");
        checked(f) = std::move(v);
    }

    void clear_flat(std::size_t f) { checked(f).reset(); }

    std::size_t filled_count() const {
        return static_cast<std::size_t>(std::count_if(
            cells_.begin(), cells_.end(), [](const auto& c) { return c.has_value(); }));
    }

    bool complete() const { return filled_count() == cells_.size(); }

private:
    std::optional<Vec>& checked(std::size_t f) {
        if (f >= cells_.size()) throw numeric_error("SudoQHypercube: flat index out of range");
        return cells_[f];
    }
    const std::optional<Vec>& checked(std::size_t f) const {
        if (f >= cells_.size()) throw numeric_error("SudoQHypercube: flat index out of range");
        return cells_[f];
    }

    int n_;
    int d_;
    int dim_ = 0;
    std::vector<std::optional<Vec>> cells_;
};

/// One constraint group of a hypercube. swapped_axis = -1 denotes a block
/// group, whose `fixed` digits are (i_1..i_D); swapped_axis = t denotes the
/// axis-t family, whose `fixed` digits are i_s for s != t and k_t at slot t.
struct HyperGroupId {
    int swapped_axis = -1;
    std::vector<int> fixed;

    bool operator==(const HyperGroupId&) const = default;
};

inline std::string to_string(const HyperGroupId& g) {
    std::string s = g.swapped_axis < 0 ? "block(" : "axis" + std::to_string(g.swapped_axis) + "(";
    for (std::size_t d = 0; d < g.fixed.size(); ++d) {
        if (d) s += ",";
        s += std::to_string(g.fixed[d]);
    }
    return s + ")";
}

/// All (D+1) * N^D constraint groups of an (N, D) hypercube.
inline std::vector<HyperGroupId> hyper_groups(int n, int d_sides) {
    std::vector<HyperGroupId> gs;
    std::vector<int> fixed(static_cast<std::size_t>(d_sides), 0);
    for (int axis = -1; axis < d_sides; ++axis) {
        std::fill(fixed.begin(), fixed.end(), 0);
        for (;;) {
            gs.push_back({axis, fixed});
            int s = d_sides - 1;
            while (s >= 0 && ++fixed[static_cast<std::size_t>(s)] == n) {
                fixed[static_cast<std::size_t>(s)] = 0;
                --s;
            }
            if (s < 0) break;
        }
    }
    return gs;
}

/// Flat cell indices of one group, in row-major order of the free digits.
inline std::vector<std::size_t> hyper_group_cells(const SudoQHypercube& h, const HyperGroupId& g) {
    const int n = h.n(), d = h.d_sides();
    if (static_cast<int>(g.fixed.size()) != d || g.swapped_axis < -1 || g.swapped_axis >= d) {
        throw numeric_error("hyper_group_cells: malformed group id");
    }
    std::vector<std::size_t> out;
    out.reserve(static_cast<std::size_t>(h.dim()));
    std::vector<int> free(static_cast<std::size_t>(d), 0);
    std::vector<int> idx(static_cast<std::size_t>(2 * d), 0);
    for (;;) {
        // Slot s carries (i_s, k_s) = (fixed, free), except at the swapped
        // axis, where i and k trade places.
        for (int s = 0; s < d; ++s) {
            const bool swap = s == g.swapped_axis;
            idx[static_cast<std::size_t>(s)] = swap ? free[static_cast<std::size_t>(s)]
                                                    : g.fixed[static_cast<std::size_t>(s)];
            idx[static_cast<std::size_t>(d + s)] = swap ? g.fixed[static_cast<std::size_t>(s)]
                                                        : free[static_cast<std::size_t>(s)];
        }
        out.push_back(h.flat_index(idx));
        int s = d - 1;
        while (s >= 0 && ++free[static_cast<std::size_t>(s)] == n) {
            free[static_cast<std::size_t>(s)] = 0;
            --s;
        }
        if (s < 0) break;
    }
    return out;
}

struct HyperValidationReport {
    bool valid = false;
    bool complete = false;
    double worst_block_residual = 0.0;
    std::vector<double> worst_axis_residuals; // one entry per axis
    std::vector<HyperGroupId> violations;

    double worst_residual() const {
        double w = worst_block_residual;
        for (double r : worst_axis_residuals) w = std::max(w, r);
        return w;
    }
};

/// Validates a hypercube: every constraint group's present cells must form an
/// orthonormal set. Complete groups are then, automatically, orthonormal
/// bases of C^(N^D).
inline HyperValidationReport validate(const SudoQHypercube& h, double orth_tol = 1e-9) {
    HyperValidationReport rep;
    rep.complete = h.complete();
    rep.worst_axis_residuals.assign(static_cast<std::size_t>(h.d_sides()), 0.0);
    for (const HyperGroupId& gid : hyper_groups(h.n(), h.d_sides())) {
        std::vector<Vec> present;
        for (std::size_t f : hyper_group_cells(h, gid)) {
            if (h.has_flat(f)) present.push_back(h.at_flat(f));
        }
        double res = 0.0;
        if (!present.empty()) res = is_orthonormal_set(present, orth_tol).max_residual;
        double& worst = gid.swapped_axis < 0
                            ? rep.worst_block_residual
                            : rep.worst_axis_residuals[static_cast<std::size_t>(gid.swapped_axis)];
        worst = std::max(worst, res);
        if (res > orth_tol) rep.violations.push_back(gid);
    }
    rep.valid = rep.violations.empty();
    return rep;
}

/// Present cells in flat row-major order.
inline std::vector<Vec> cell_vectors(const SudoQHypercube& h) {
    std::vector<Vec> vs;
    vs.reserve(h.filled_count());
    for (std::size_t f = 0; f < h.cell_count(); ++f) {
        if (h.has_flat(f)) vs.push_back(h.at_flat(f));
    }
    return vs;
}

inline CardinalityReport cardinality(const SudoQHypercube& h, double eq_tol = 1e-9) {
    if (!h.complete()) throw numeric_error("cardinality: hypercube has blank cells");
    return cardinality(cell_vectors(h), eq_tol);
}

/// D=2 hypercube -> grid, under row = N*i_2 + k_1, col = N*i_1 + k_2. This is
/// the unique digit assignment for which hypercube groups map onto grid
/// blocks (block groups), rows (axis 0) and columns (axis 1).
inline SudoQGrid hypercube_to_grid(const SudoQHypercube& h) {
    if (h.d_sides() != 2) throw numeric_error("hypercube_to_grid: requires D = 2");
    const int n = h.n();
    SudoQGrid g(n);
    for (int i1 = 0; i1 < n; ++i1)
        for (int i2 = 0; i2 < n; ++i2)
            for (int k1 = 0; k1 < n; ++k1)
                for (int k2 = 0; k2 < n; ++k2) {
                    const std::vector<int> idx{i1, i2, k1, k2};
                    if (h.has(idx)) g.set(n * i2 + k1, n * i1 + k2, h.at(idx));
                }
    return g;
}

/// Inverse of hypercube_to_grid.
inline SudoQHypercube grid_to_hypercube(const SudoQGrid& g) {
    const int n = g.n();
    SudoQHypercube h(n, 2);
    for (int row = 0; row < g.dim(); ++row)
        for (int col = 0; col < g.dim(); ++col) {
            if (!g.has(row, col)) continue;
            const CellCoords cc = block_coords(n, row, col);
            h.set({cc.j, cc.i, cc.k, cc.l}, g.at(row, col));
        }
    return h;
}

} // namespace sudoq

#endif // SUDOQ_HYPERCUBE_HPP

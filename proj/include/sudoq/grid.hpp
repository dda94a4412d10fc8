// grid.hpp - the N^2 x N^2 quantum Sudoku grid model: cell storage, index
// conventions, validation, cardinality (number of distinct states up to
// global phase) and classification.
//
// Index conventions are 0-based throughout. A cell is addressed either by
// (row, col) in [0, N^2) or by block coordinates (i, j, k, l):
//     row = N*i + k,   col = N*j + l,
// where (i, j) selects the N x N block and (k, l) the cell inside it.
//
// Part of sudoq. License: MIT.

#ifndef SUDOQ_GRID_HPP
#define SUDOQ_GRID_HPP

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "sudoq/linalg.hpp"
#include "sudoq/tolerances.hpp"

namespace sudoq {

/// Block coordinates of a cell: block (i, j), offset (k, l) inside the block.
struct CellCoords {
    int i = 0, j = 0, k = 0, l = 0;
};

/// (i, j, k, l) -> (row, col). Throws on out-of-range indices.
inline std::pair<int, int> cell_coords(int n, int i, int j, int k, int l) {
    if (n < 2) throw numeric_error("cell_coords: block size must be >= 2");
    auto in_range = [n](int x) { return 0 <= x && x < n; };
    if (!in_range(i) || !in_range(j) || !in_range(k) || !in_range(l)) {
        throw numeric_error("cell_coords: index out of range for N=" + std::to_string(n));
    }
    return {n * i + k, n * j + l};
}

/// Inverse of cell_coords: (row, col) -> (i, j, k, l).
inline CellCoords block_coords(int n, int row, int col) {
    if (n < 2) throw numeric_error("block_coords: block size must be >= 2");
    const int dim = n * n;
    if (row < 0 || row >= dim || col < 0 || col >= dim) {
        throw numeric_error("block_coords: cell (" + std::to_string(row) + "," +
                            std::to_string(col) + ") out of range for N=" + std::to_string(n));
    }
    return CellCoords{row / n, col / n, row % n, col % n};
}

/// A (possibly partial) quantum Sudoku grid of side N^2. Cells hold unit
/// vectors in C^(N^2) or are blank.
class SudoQGrid {
public:
    explicit SudoQGrid(int n) : n_(n), dim_(n * n), cells_(static_cast<std::size_t>(dim_ * dim_)) {
        if (n < 2) throw numeric_error("SudoQGrid: block size must be >= 2");
    }

    int n() const { return n_; }
    int dim() const { return dim_; }

    bool has(int row, int col) const { return cells_[index(row, col)].has_value(); }

    const Vec& at(int row, int col) const {
        const auto& c = cells_[index(row, col)];
        if (!c) {
            throw numeric_error("SudoQGrid: cell (" + std::to_string(row) + "," +
                                std::to_string(col) + ") is blank");
        }
        return *c;
    }

    /// Stores a unit vector; dimension and unit-norm are enforced here so the
    /// rest of the library can rely on them.
    void set(int row, int col, Vec v) {
        if (v.size() != dim_) {
            throw numeric_error("SudoQGrid: cell vector has dimension " +
                                std::to_string(v.size()) + ", expected " + std::to_string(dim_));
        }
        require_unit(v, 1e-6, "SudoQGrid::set");
        cells_[index(row, col)] = std::move(v);
    }

    void clear(int row, int col) { cells_[index(row, col)].reset(); }

    int filled_count() const {
        return static_cast<int>(std::count_if(cells_.begin(), cells_.end(),
                                              [](const auto& c) { return c.has_value(); }));
    }

    bool complete() const { return filled_count() == dim_ * dim_; }

private:
    std::size_t index(int row, int col) const {
        if (row < 0 || row >= dim_ || col < 0 || col >= dim_) {
            throw numeric_error("SudoQGrid: cell (" + std::to_string(row) + "," +
                                std::to_string(col) + ") out of range");
        }
        return static_cast<std::size_t>(row) * static_cast<std::size_t>(dim_) +
               static_cast<std::size_t>(col);
    }

    int n_;
    int dim_;
    std::vector<std::optional<Vec>> cells_;
};

/// Identifies one constraint group of a grid.
enum class GroupKind { Row, Column, Block };

struct GroupId {
    GroupKind kind = GroupKind::Row;
    int index = 0; // row index, column index, or block index n*i + j

    bool operator==(const GroupId&) const = default;
};

inline std::string to_string(const GroupId& g) {
    switch (g.kind) {
        case GroupKind::Row: return "row " + std::to_string(g.index);
        case GroupKind::Column: return "column " + std::to_string(g.index);
        case GroupKind::Block: return "block " + std::to_string(g.index);
    }
    return "?";
}

/// Cells (row, col) of one constraint group, in scan order.
inline std::vector<std::pair<int, int>> group_cells(int n, const GroupId& g) {
    const int dim = n * n;
    std::vector<std::pair<int, int>> cells;
    cells.reserve(static_cast<std::size_t>(dim));
    switch (g.kind) {
        case GroupKind::Row:
            for (int c = 0; c < dim; ++c) cells.emplace_back(g.index, c);
            break;
        case GroupKind::Column:
            for (int r = 0; r < dim; ++r) cells.emplace_back(r, g.index);
            break;
        case GroupKind::Block: {
            const int bi = g.index / n, bj = g.index % n;
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l) cells.emplace_back(n * bi + k, n * bj + l);
            break;
        }
    }
    return cells;
}

/// All 3*N^2 constraint groups of a grid.
inline std::vector<GroupId> all_groups(int n) {
    const int dim = n * n;
    std::vector<GroupId> gs;
    gs.reserve(static_cast<std::size_t>(3 * dim));
    for (int r = 0; r < dim; ++r) gs.push_back({GroupKind::Row, r});
    for (int c = 0; c < dim; ++c) gs.push_back({GroupKind::Column, c});
    for (int b = 0; b < dim; ++b) gs.push_back({GroupKind::Block, b});
    return gs;
}

/// Outcome of validating a grid against the three constraint families.
struct ValidationReport {
    bool valid = false;
    bool complete = false;
    double worst_row_residual = 0.0;
    double worst_col_residual = 0.0;
    double worst_block_residual = 0.0;
    std::vector<GroupId> violations;

    double worst_residual() const {
        return std::max({worst_row_residual, worst_col_residual, worst_block_residual});
    }
};

/// Validates a grid. A complete grid is valid iff every row, column and block
/// is an orthonormal basis of C^(N^2). A partial grid is valid iff the present
/// cells of every group form an orthonormal set (pairwise orthogonal unit
/// vectors); completeness is not required.
inline ValidationReport validate(const SudoQGrid& g, double orth_tol = 1e-9) {
    ValidationReport rep;
    rep.complete = g.complete();
    for (const GroupId& gid : all_groups(g.n())) {
        std::vector<Vec> present;
        present.reserve(static_cast<std::size_t>(g.dim()));
        for (auto [r, c] : group_cells(g.n(), gid)) {
            if (g.has(r, c)) present.push_back(g.at(r, c));
        }
        double res = 0.0;
        if (!present.empty()) {
            res = is_orthonormal_set(present, orth_tol).max_residual;
        }
        double* worst = nullptr;
        switch (gid.kind) {
            case GroupKind::Row: worst = &rep.worst_row_residual; break;
            case GroupKind::Column: worst = &rep.worst_col_residual; break;
            case GroupKind::Block: worst = &rep.worst_block_residual; break;
        }
        if (res > *worst) *worst = res;
        if (res > orth_tol) rep.violations.push_back(gid);
    }
    rep.valid = rep.violations.empty();
    return rep;
}

/// Cardinality report: the number of distinct states (up to global phase)
/// among the cells of a complete grid, the cluster index of every cell (in
/// row-major cell order, clusters numbered by first appearance) and one
/// phase-canonical representative per cluster.
struct CardinalityReport {
    int cardinality = 0;
    std::vector<int> cluster_of_cell; // dim*dim entries, row-major
    std::vector<Vec> representatives; // cardinality entries, canonical phase
};

/// Cardinality of an arbitrary vector set (all unit, same dimension).
/// Clusters are formed by union-find over the relation equal_up_to_phase and
/// numbered by first appearance in input order.
inline CardinalityReport cardinality(const std::vector<Vec>& vs, double eq_tol = 1e-9) {
    const int total = static_cast<int>(vs.size());
    std::vector<int> parent(static_cast<std::size_t>(total));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&parent](int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    };
    for (int a = 0; a < total; ++a) {
        for (int b = a + 1; b < total; ++b) {
            const int ra = find(a), rb = find(b);
            if (ra == rb) continue;
            if (equal_up_to_phase(vs[static_cast<std::size_t>(a)], vs[static_cast<std::size_t>(b)],
                                  eq_tol)) {
                parent[static_cast<std::size_t>(std::max(ra, rb))] = std::min(ra, rb);
            }
        }
    }
    CardinalityReport rep;
    rep.cluster_of_cell.assign(static_cast<std::size_t>(total), -1);
    std::vector<int> root_to_cluster(static_cast<std::size_t>(total), -1);
    for (int idx = 0; idx < total; ++idx) {
        const int root = find(idx);
        if (root_to_cluster[static_cast<std::size_t>(root)] < 0) {
            root_to_cluster[static_cast<std::size_t>(root)] = rep.cardinality++;
            rep.representatives.push_back(
                canonical_phase(vs[static_cast<std::size_t>(idx)], eq_tol));
        }
        rep.cluster_of_cell[static_cast<std::size_t>(idx)] =
            root_to_cluster[static_cast<std::size_t>(root)];
    }
    return rep;
}

inline std::vector<Vec> cell_vectors(const SudoQGrid& g); // defined below

inline CardinalityReport cardinality(const SudoQGrid& g, double eq_tol = 1e-9) {
    if (!g.complete()) {
        throw numeric_error("cardinality: grid has blank cells");
    }
    return cardinality(cell_vectors(g), eq_tol);
}

/// Classification of a complete, valid grid by its cardinality c relative to
/// the Hilbert-space dimension d = N^2:
///   Classical          - every cell is a computational basis state (c = d),
///   ApparentlyQuantum  - c = d but cells are not all computational,
///   GenuinelyQuantum   - c > d (no global unitary maps it to a classical grid).
enum class GridClass { Classical, ApparentlyQuantum, GenuinelyQuantum };

inline const char* to_string(GridClass c) {
    switch (c) {
        case GridClass::Classical: return "classical";
        case GridClass::ApparentlyQuantum: return "apparently_quantum";
        case GridClass::GenuinelyQuantum: return "genuinely_quantum";
    }
    return "?";
}

inline bool is_computational(const Vec& v, double eq_tol = 1e-9) {
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        if (std::abs(v[i]) >= 1.0 - eq_tol) return true;
    }
    return false;
}

inline GridClass classify(const SudoQGrid& g, const Tolerances& tols = {}) {
    tols.check();
    const ValidationReport vr = validate(g, tols.orth_tol);
    if (!vr.complete || !vr.valid) {
        throw numeric_error("classify: grid must be complete and valid");
    }
    bool all_computational = true;
    for (int r = 0; r < g.dim() && all_computational; ++r) {
        for (int c = 0; c < g.dim(); ++c) {
            if (!is_computational(g.at(r, c), tols.eq_tol)) {
                all_computational = false;
                break;
            }
        }
    }
    if (all_computational) return GridClass::Classical;
    const int card = cardinality(g, tols.eq_tol).cardinality;
    return card > g.dim() ? GridClass::GenuinelyQuantum : GridClass::ApparentlyQuantum;
}

/// Applies one unitary to every cell. Validity, cardinality and all overlap
/// statistics are invariant under this map.
inline SudoQGrid apply_global_unitary(const SudoQGrid& g, const Mat& U, double orth_tol = 1e-9) {
    if (U.rows() != g.dim() || U.cols() != g.dim()) {
        throw numeric_error("apply_global_unitary: matrix dimension mismatch");
    }
    if (!is_unitary(U, orth_tol)) {
        throw numeric_error("apply_global_unitary: matrix is not unitary");
    }
    SudoQGrid out(g.n());
    for (int r = 0; r < g.dim(); ++r) {
        for (int c = 0; c < g.dim(); ++c) {
            if (g.has(r, c)) {
                Vec v = U * g.at(r, c);
                v /= v.norm(); // squash rounding drift so set() sees a unit vector
                out.set(r, c, std::move(v));
            }
        }
    }
    return out;
}

/// All present cell vectors in row-major order (the "design" a complete grid
/// generates, with multiplicity).
inline std::vector<Vec> cell_vectors(const SudoQGrid& g) {
    std::vector<Vec> vs;
    vs.reserve(static_cast<std::size_t>(g.filled_count()));
    for (int r = 0; r < g.dim(); ++r) {
        for (int c = 0; c < g.dim(); ++c) {
            if (g.has(r, c)) vs.push_back(g.at(r, c));
        }
    }
    return vs;
}

} // namespace sudoq

#endif // SUDOQ_GRID_HPP

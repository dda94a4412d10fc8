// solver.hpp - completion machinery for partial grids: orthogonal-complement
// constraint propagation, unique-solvability certification, exhaustive
// classical (computational-basis) completion for 4x4 grids, and a numerical
// search for alternative completions used to audit uniqueness claims.
//
// Propagation fills a blank cell exactly when the present vectors sharing its
// row, column or block span a (dim-1)-dimensional space, so the cell is
// forced up to phase. It never guesses: underdetermined grids come back
// Stalled, and a blank whose constraint span is the whole space makes the
// grid Unsolvable.
//
// Part of sudoq. License: MIT.

#ifndef SUDOQ_SOLVER_HPP
#define SUDOQ_SOLVER_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "sudoq/grid.hpp"
#include "sudoq/linalg.hpp"
#include "sudoq/tolerances.hpp"

namespace sudoq {

// ── Constraint propagation ──────────────────────────────────────────────────

/// Cells sharing a row, column or block with (row, col), excluding it.
inline std::vector<std::pair<int, int>> neighbor_cells(int n, int row, int col) {
    const int dim = n * n;
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<std::size_t>(3 * dim));
    auto push = [&out, row, col](int r, int c) {
        if (r == row && c == col) return;
        if (std::find(out.begin(), out.end(), std::pair{r, c}) == out.end()) {
            out.emplace_back(r, c);
        }
    };
    for (int c = 0; c < dim; ++c) push(row, c);
    for (int r = 0; r < dim; ++r) push(r, col);
    const int bi = row / n, bj = col / n;
    for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) push(n * bi + k, n * bj + l);
    return out;
}

struct FillStep {
    int row = 0, col = 0;
};

struct PropagateResult {
    SudoQGrid grid;
    std::vector<FillStep> trace; // forced fills, in the order performed
    bool dead = false;           // a blank cell had an empty orthogonal complement
    int dead_row = -1, dead_col = -1;
};

/// Fixpoint constraint propagation. Each pass inspects every blank cell,
/// computes the orthogonal complement of the span of its present neighbors,
/// and fills the cell whose complement is one-dimensional, preferring cells
/// with the smallest complement (ties by row, then column). Cells are filled
/// one at a time so every fill is derived from the grid state it claims to be
/// forced by. A shuffle seed replaces the deterministic tie-break with a
/// random choice among the forced cells, which lets tests confirm the
/// fixpoint does not depend on visit order.
inline PropagateResult propagate(const SudoQGrid& start, const Tolerances& tols = {},
                                 std::optional<std::uint64_t> shuffle_seed = std::nullopt) {
    tols.check();
    PropagateResult res{start, {}, false, -1, -1};
    SudoQGrid& g = res.grid;
    const int dim = g.dim();
    std::optional<std::mt19937_64> rng;
    if (shuffle_seed) rng.emplace(*shuffle_seed);
    for (;;) {
        struct Forced {
            int row, col;
            Vec fill;
        };
        std::vector<Forced> forced;
        for (int r = 0; r < dim; ++r) {
            for (int c = 0; c < dim; ++c) {
                if (g.has(r, c)) continue;
                std::vector<Vec> present;
                for (auto [nr, nc] : neighbor_cells(g.n(), r, c)) {
                    if (g.has(nr, nc)) present.push_back(g.at(nr, nc));
                }
                const std::vector<Vec> comp = orthogonal_complement(present, dim, tols.orth_tol);
                if (comp.empty()) {
                    res.dead = true;
                    res.dead_row = r;
                    res.dead_col = c;
                    return res;
                }
                if (comp.size() == 1) forced.push_back({r, c, comp.front()});
            }
        }
        if (forced.empty()) break; // fixpoint: nothing forced
        std::size_t pick = 0;
        if (rng) {
            pick = std::uniform_int_distribution<std::size_t>(0, forced.size() - 1)(*rng);
        }
        const Forced& f = forced[pick];
        g.set(f.row, f.col, canonical_phase(f.fill, tols.eq_tol));
        res.trace.push_back({f.row, f.col});
    }
    return res;
}

// ── Unique solvability ──────────────────────────────────────────────────────

enum class SolveStatus { Unique, NotUnique, Unsolvable, Stalled };

inline const char* to_string(SolveStatus s) {
    switch (s) {
        case SolveStatus::Unique: return "unique";
        case SolveStatus::NotUnique: return "not_unique";
        case SolveStatus::Unsolvable: return "unsolvable";
        case SolveStatus::Stalled: return "stalled";
    }
    return "?";
}

struct SolveOutcome {
    SolveStatus status = SolveStatus::Stalled;
    std::optional<SudoQGrid> solution;   // present when complete (Unique / NotUnique)
    std::optional<SudoQGrid> witness;    // a second, distinct solution (NotUnique)
    std::optional<SudoQGrid> propagated; // grid after all forced fills
    std::vector<FillStep> trace;         // forced fills
    std::string message;
};

std::vector<SudoQGrid> classical_completions(const SudoQGrid& g, int limit, double eq_tol);

/// Certifies a partial grid. Unique means propagation alone completed the
/// grid (every fill forced), so the solution is unique up to cell phases.
/// Unsolvable covers inconsistent clues and dead cells. When propagation
/// stalls on a 4x4 grid whose clues are all computational, the classical
/// completions decide non-uniqueness: two distinct classical solutions are an
/// explicit witness pair. Otherwise a stall stays Stalled - propagation
/// cannot certify uniqueness beyond forced fills, and we do not guess.
inline SolveOutcome solve_unique(const SudoQGrid& g, const Tolerances& tols = {}) {
    tols.check();
    SolveOutcome out;
    const ValidationReport vr = validate(g, tols.orth_tol);
    if (!vr.valid) {
        out.status = SolveStatus::Unsolvable;
        out.message = "clues violate orthonormality in " + to_string(vr.violations.front());
        return out;
    }
    PropagateResult pr = propagate(g, tols);
    out.trace = std::move(pr.trace);
    out.propagated = pr.grid;
    if (pr.dead) {
        out.status = SolveStatus::Unsolvable;
        out.message = "cell (" + std::to_string(pr.dead_row) + "," +
                      std::to_string(pr.dead_col) + ") has no admissible value";
        return out;
    }
    if (pr.grid.complete()) {
        const ValidationReport final_vr = validate(pr.grid, tols.orth_tol);
        if (!final_vr.valid) {
            out.status = SolveStatus::Unsolvable;
            out.message = "propagated grid fails validation in " +
                          to_string(final_vr.violations.front());
            return out;
        }
        out.status = SolveStatus::Unique;
        out.solution = std::move(pr.grid);
        return out;
    }
    // Stalled. For computational clues on a 4x4 grid, exhaustive classical
    // completion can still settle non-uniqueness. The clueless grid is left
    // Stalled: with nothing to propagate from, enumerating the whole solution
    // space proves nothing a caller could not already know.
    if (g.n() == 2 && g.filled_count() > 0) {
        bool computational_clues = true;
        for (int r = 0; r < g.dim() && computational_clues; ++r)
            for (int c = 0; c < g.dim(); ++c)
                if (g.has(r, c) && !is_computational(g.at(r, c), tols.eq_tol)) {
                    computational_clues = false;
                    break;
                }
        if (computational_clues) {
            auto completions = classical_completions(g, 2, tols.eq_tol);
            if (completions.size() >= 2) {
                out.status = SolveStatus::NotUnique;
                out.solution = std::move(completions[0]);
                out.witness = std::move(completions[1]);
                out.message = "two distinct classical completions exist";
                return out;
            }
        }
    }
    out.status = SolveStatus::Stalled;
    return out;
}

// ── Classical completions (4x4) ─────────────────────────────────────────────

/// Exhaustive backtracking over computational-basis completions of a 4x4
/// grid with computational clues; row/column/block distinctness enforced.
/// Returns up to `limit` solutions in lexicographic cell order (there are 288
/// in total for the empty grid).
inline std::vector<SudoQGrid> classical_completions(const SudoQGrid& g, int limit,
                                                    double eq_tol = 1e-9) {
    if (g.n() != 2) throw numeric_error("classical_completions: only 4x4 grids are supported");
    if (limit < 0) throw numeric_error("classical_completions: negative limit");
    std::array<int, 16> sym{};
    sym.fill(-1);
    for (int r = 0; r < 4; ++r) {
        for (int c = 0; c < 4; ++c) {
            if (!g.has(r, c)) continue;
            const Vec& v = g.at(r, c);
            int idx = -1;
            for (int i = 0; i < 4; ++i) {
                if (std::abs(v[i]) >= 1.0 - eq_tol) idx = i;
            }
            if (idx < 0) {
                throw numeric_error("classical_completions: clue (" + std::to_string(r) + "," +
                                    std::to_string(c) + ") is not computational");
            }
            sym[static_cast<std::size_t>(4 * r + c)] = idx;
        }
    }
    std::vector<SudoQGrid> out;
    std::array<int, 16> cur{};
    cur.fill(-1);
    auto consistent = [&cur](int cell, int val) {
        const int r = cell / 4, c = cell % 4;
        for (int i = 0; i < 4; ++i) {
            if (cur[static_cast<std::size_t>(4 * r + i)] == val && i != c) return false;
            if (cur[static_cast<std::size_t>(4 * i + c)] == val && i != r) return false;
        }
        const int br = 2 * (r / 2), bc = 2 * (c / 2);
        for (int k = 0; k < 2; ++k)
            for (int l = 0; l < 2; ++l) {
                const int cc = 4 * (br + k) + (bc + l);
                if (cc != cell && cur[static_cast<std::size_t>(cc)] == val) return false;
            }
        return true;
    };
    auto emit = [&out, &cur]() {
        SudoQGrid s(2);
        for (int cell = 0; cell < 16; ++cell) {
            Vec v = Vec::Zero(4);
            v[cur[static_cast<std::size_t>(cell)]] = 1.0;
            s.set(cell / 4, cell % 4, std::move(v));
        }
        out.push_back(std::move(s));
    };
    auto rec = [&](auto&& self, int cell) -> void {
        if (static_cast<int>(out.size()) >= limit) return;
        if (cell == 16) {
            emit();
            return;
        }
        const int fixed = sym[static_cast<std::size_t>(cell)];
        for (int val = 0; val < 4; ++val) {
            if (fixed >= 0 && val != fixed) continue;
            if (!consistent(cell, val)) continue;
            cur[static_cast<std::size_t>(cell)] = val;
            self(self, cell + 1);
            cur[static_cast<std::size_t>(cell)] = -1;
        }
    };
    rec(rec, 0);
    return out;
}

// ── Alternative-completion search ───────────────────────────────────────────

struct SearchConfig {
    int restarts = 50;
    int max_iters = 400;
    std::uint64_t seed = 1;
    /// Minimum per-cell deviation 1 - |<x|ref>|^2 some blank must reach for a
    /// completion to count as a genuine alternative.
    double distance_floor = 0.1;
};

/// The merit function of the alternative-completion search, exposed so its
/// gradient can be cross-checked against finite differences.
///
/// Blank cells carry unconstrained complex vectors mapped onto states by
/// normalization. The objective is the sum of |<a|b>|^2 over all in-group
/// cell pairs touching at least one blank (clue-clue terms are constant and
/// validated separately), plus a hinge penalty mu * max(0, tau - delta_c)^2
/// per blank that pushes each cell's deviation delta_c = 1 - |<x_c|ref_c>|^2
/// past tau, steering the search away from the reference completion.
class SearchProblem {
public:
    SearchProblem(const SudoQGrid& clues, const SudoQGrid& reference, double mu, double tau)
        : dim_(clues.dim()), mu_(mu), tau_(tau) {
        if (reference.n() != clues.n()) throw numeric_error("SearchProblem: size mismatch");
        for (int r = 0; r < dim_; ++r)
            for (int c = 0; c < dim_; ++c) {
                if (clues.has(r, c)) continue;
                index_of_cell_[{r, c}] = static_cast<int>(blanks_.size());
                blanks_.emplace_back(r, c);
                refs_.push_back(reference.at(r, c));
            }
        // Enumerate in-group pairs once, per constraint group (a pair sharing
        // two groups legitimately counts twice).
        for (const GroupId& gid : all_groups(clues.n())) {
            const auto cells = group_cells(clues.n(), gid);
            for (std::size_t a = 0; a < cells.size(); ++a) {
                for (std::size_t b = a + 1; b < cells.size(); ++b) {
                    const bool a_blank = !clues.has(cells[a].first, cells[a].second);
                    const bool b_blank = !clues.has(cells[b].first, cells[b].second);
                    if (!a_blank && !b_blank) continue;
                    if (a_blank && b_blank) {
                        bb_pairs_.emplace_back(index_of_cell_.at(cells[a]),
                                               index_of_cell_.at(cells[b]));
                    } else {
                        const auto& blank = a_blank ? cells[a] : cells[b];
                        const auto& clue = a_blank ? cells[b] : cells[a];
                        bc_pairs_.emplace_back(index_of_cell_.at(blank),
                                               clues.at(clue.first, clue.second));
                    }
                }
            }
        }
    }

    int dim() const { return dim_; }
    int blank_count() const { return static_cast<int>(blanks_.size()); }
    const std::vector<std::pair<int, int>>& blanks() const { return blanks_; }
    const Vec& reference_of(int blank) const { return refs_[static_cast<std::size_t>(blank)]; }

    double deviation(const Vec& x, int blank) const {
        const Vec xn = x / x.norm();
        return 1.0 - std::norm(inner(xn, refs_[static_cast<std::size_t>(blank)]));
    }

    /// Objective value; `penalized` = false drops the distance penalty (used
    /// for the final acceptance check).
    double value(const std::vector<Vec>& x, bool penalized = true) const {
        double v = 0.0;
        auto normalized = [&x](int i) { return Vec(x[static_cast<std::size_t>(i)] /
                                                   x[static_cast<std::size_t>(i)].norm()); };
        for (auto [a, b] : bb_pairs_) v += std::norm(inner(normalized(a), normalized(b)));
        for (const auto& [a, clue] : bc_pairs_) v += std::norm(inner(normalized(a), clue));
        if (penalized) {
            for (int c = 0; c < blank_count(); ++c) {
                const double gap = tau_ - deviation(x[static_cast<std::size_t>(c)], c);
                if (gap > 0.0) v += mu_ * gap * gap;
            }
        }
        return v;
    }

    /// Real gradient with respect to the interleaved (Re, Im) coordinates of
    /// each blank's vector; matches central finite differences of value().
    std::vector<Vec> gradient(const std::vector<Vec>& x) const {
        std::vector<Vec> grad(x.size());
        for (std::size_t i = 0; i < x.size(); ++i) grad[i] = Vec::Zero(dim_);
        // d|<a_hat|b_hat>|^2 / d conj(a) accumulated for both sides of every
        // pair; the real gradient is twice the conjugate-coordinate one.
        auto accumulate = [&x, &grad](int ai, const Vec& b, double bnorm2) {
            const Vec& a = x[static_cast<std::size_t>(ai)];
            const double n = a.squaredNorm();
            const Complex s = a.dot(b); // <a|b>, unnormalized
            const double f = std::norm(s) / n;
            grad[static_cast<std::size_t>(ai)] += (std::conj(s) * b - (f)*a) / (n * bnorm2);
        };
        for (auto [ai, bi] : bb_pairs_) {
            const Vec& a = x[static_cast<std::size_t>(ai)];
            const Vec& b = x[static_cast<std::size_t>(bi)];
            accumulate(ai, b, b.squaredNorm());
            accumulate(bi, a, a.squaredNorm());
        }
        for (const auto& [ai, clue] : bc_pairs_) accumulate(ai, clue, 1.0);
        if (mu_ > 0.0) {
            for (int c = 0; c < blank_count(); ++c) {
                const Vec& a = x[static_cast<std::size_t>(c)];
                const double gap = tau_ - deviation(a, c);
                if (gap <= 0.0) continue;
                // d(delta)/d conj(a) = -d(|<a|r>|^2 / n)/d conj(a)
                const Vec& r = refs_[static_cast<std::size_t>(c)];
                const double n = a.squaredNorm();
                const Complex s = a.dot(r);
                const double f = std::norm(s) / n;
                const Vec ddelta = -(std::conj(s) * r - f * a) / n;
                grad[static_cast<std::size_t>(c)] += mu_ * 2.0 * gap * (-1.0) * ddelta;
            }
        }
        for (auto& gvec : grad) gvec *= 2.0; // conjugate-coordinate -> real gradient
        return grad;
    }

private:
    int dim_;
    double mu_, tau_;
    std::vector<std::pair<int, int>> blanks_;
    std::map<std::pair<int, int>, int> index_of_cell_;
    std::vector<Vec> refs_;
    std::vector<std::pair<int, int>> bb_pairs_;
    std::vector<std::pair<int, Vec>> bc_pairs_;
};

/// Searches for a valid completion of `clues` that differs from `reference`
/// by at least cfg.distance_floor in some cell. Each restart runs Adam on the
/// penalized objective from a random start, then polishes with alternating
/// projections (each blank is projected onto the orthogonal complement of its
/// current neighbors until the sweep converges). A completion is returned
/// only if it validates, its residual objective is at most solve_tol^2 and
/// the distance condition holds; absence of a witness is evidence of
/// uniqueness, not proof.
inline std::optional<SudoQGrid> alternative_search(const SudoQGrid& clues,
                                                   const SudoQGrid& reference,
                                                   const SearchConfig& cfg,
                                                   const Tolerances& tols = {}) {
    tols.check();
    if (cfg.restarts < 1 || cfg.max_iters < 1) {
        throw numeric_error("alternative_search: restarts and max_iters must be >= 1");
    }
    if (cfg.distance_floor <= tols.solve_tol) {
        throw numeric_error("alternative_search: distance_floor must exceed solve_tol");
    }
    const ValidationReport ref_vr = validate(reference, tols.orth_tol);
    if (!ref_vr.complete || !ref_vr.valid) {
        throw numeric_error("alternative_search: reference must be a complete valid grid");
    }
    if (!validate(clues, tols.orth_tol).valid) {
        throw numeric_error("alternative_search: clues violate orthonormality");
    }
    for (int r = 0; r < clues.dim(); ++r)
        for (int c = 0; c < clues.dim(); ++c)
            if (clues.has(r, c) && !equal_up_to_phase(clues.at(r, c), reference.at(r, c), 1e-6)) {
                throw numeric_error("alternative_search: reference inconsistent with clue (" +
                                    std::to_string(r) + "," + std::to_string(c) + ")");
            }

    const double tau = std::min(1.0, 2.0 * cfg.distance_floor);
    SearchProblem prob(clues, reference, /*mu=*/0.5, tau);
    const int nb = prob.blank_count();
    if (nb == 0) return std::nullopt; // complete grids admit no alternative

    const int dim = clues.dim();
    for (int restart = 0; restart < cfg.restarts; ++restart) {
        std::uint64_t s = cfg.seed + 0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(restart + 1);
        s ^= s >> 30; s *= 0xbf58476d1ce4e5b9ULL;
        s ^= s >> 27; s *= 0x94d049bb133111ebULL;
        s ^= s >> 31;
        std::mt19937_64 rng(s);
        std::normal_distribution<double> gauss(0.0, 1.0);
        std::vector<Vec> x(static_cast<std::size_t>(nb));
        for (auto& v : x) {
            v = Vec(dim);
            for (int i = 0; i < dim; ++i) v[i] = Complex(gauss(rng), gauss(rng));
            v /= v.norm();
        }

        // Adam in the interleaved real coordinates.
        const double lr = 0.05, b1 = 0.9, b2 = 0.999, eps = 1e-8;
        std::vector<Vec> m(x.size()), vv(x.size());
        std::vector<Eigen::VectorXd> v2(x.size());
        for (std::size_t i = 0; i < x.size(); ++i) {
            m[i] = Vec::Zero(dim);
            v2[i] = Eigen::VectorXd::Zero(2 * dim);
        }
        for (int it = 1; it <= cfg.max_iters; ++it) {
            const auto grad = prob.gradient(x);
            const double c1 = 1.0 - std::pow(b1, it), c2 = 1.0 - std::pow(b2, it);
            for (std::size_t i = 0; i < x.size(); ++i) {
                m[i] = b1 * m[i] + (1.0 - b1) * grad[i];
                for (int j = 0; j < dim; ++j) {
                    const double gr = grad[i][j].real(), gi = grad[i][j].imag();
                    v2[i][2 * j] = b2 * v2[i][2 * j] + (1.0 - b2) * gr * gr;
                    v2[i][2 * j + 1] = b2 * v2[i][2 * j + 1] + (1.0 - b2) * gi * gi;
                    const Complex mh = m[i][j] / c1;
                    x[i][j] -= lr * Complex(mh.real() / (std::sqrt(v2[i][2 * j] / c2) + eps),
                                            mh.imag() / (std::sqrt(v2[i][2 * j + 1] / c2) + eps));
                }
            }
        }

        // Alternating-projection polish onto the exact constraint set.
        SudoQGrid cand = clues;
        for (int c = 0; c < nb; ++c) {
            Vec v = x[static_cast<std::size_t>(c)];
            v /= v.norm();
            const auto [r, cc] = prob.blanks()[static_cast<std::size_t>(c)];
            cand.set(r, cc, std::move(v));
        }
        bool annihilated = false;
        for (int sweep = 0; sweep < 200 && !annihilated; ++sweep) {
            double change = 0.0;
            for (int c = 0; c < nb; ++c) {
                const auto [r, cc] = prob.blanks()[static_cast<std::size_t>(c)];
                std::vector<Vec> neigh;
                for (auto [nr, nc] : neighbor_cells(clues.n(), r, cc)) {
                    if (cand.has(nr, nc)) neigh.push_back(cand.at(nr, nc));
                }
                const std::vector<Vec> comp = orthogonal_complement(neigh, dim, tols.orth_tol);
                if (comp.empty()) {
                    annihilated = true;
                    break;
                }
                Vec projected = Vec::Zero(dim);
                for (const Vec& b : comp) projected += b * inner(b, cand.at(r, cc));
                const double nrm = projected.norm();
                if (nrm < 1e-8) {
                    annihilated = true;
                    break;
                }
                projected /= nrm;
                change = std::max(change, (projected - cand.at(r, cc)).norm());
                cand.set(r, cc, std::move(projected));
            }
            if (change < 1e-14) break;
        }
        if (annihilated) continue;

        // Acceptance: exact-constraint residual, validity, and distance.
        std::vector<Vec> polished;
        polished.reserve(static_cast<std::size_t>(nb));
        for (int c = 0; c < nb; ++c) {
            const auto [r, cc] = prob.blanks()[static_cast<std::size_t>(c)];
            polished.push_back(cand.at(r, cc));
        }
        const double residual = prob.value(polished, /*penalized=*/false);
        if (residual > tols.solve_tol * tols.solve_tol) continue;
        if (!validate(cand, tols.orth_tol).valid) continue;
        double max_dev = 0.0;
        for (int c = 0; c < nb; ++c) {
            max_dev = std::max(max_dev, prob.deviation(polished[static_cast<std::size_t>(c)], c));
        }
        if (max_dev >= cfg.distance_floor) return cand;
    }
    return std::nullopt;
}

} // namespace sudoq

#endif // SUDOQ_SOLVER_HPP

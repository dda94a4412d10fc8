// solver_tests.cpp - unit tests for constraint propagation, uniqueness
// certification, classical completions, and the alternative-completion
// search.
//
// Part of sudoq. License: MIT.

#include <catch2/catch_amalgamated.hpp>

#include <numbers>
#include <random>
#include <set>

#include "sudoq/sudoq.hpp"
#include "test_helpers.hpp"

using namespace sudoq;

namespace {
constexpr double pi = std::numbers::pi;

Vec basis_vec(int dim, int idx) {
    Vec v = Vec::Zero(dim);
    v[idx] = 1.0;
    return v;
}
} // namespace

TEST_CASE("neighbor cells cover the row, column, and block without repeats") {
    const auto ns = neighbor_cells(2, 0, 0);
    CHECK(ns.size() == 7);
    std::set<std::pair<int, int>> uniq(ns.begin(), ns.end());
    CHECK(uniq.size() == ns.size());
    CHECK_FALSE(uniq.contains({0, 0}));
    CHECK(uniq.contains({0, 3}));
    CHECK(uniq.contains({3, 0}));
    CHECK(uniq.contains({1, 1}));
    CHECK(neighbor_cells(3, 4, 4).size() == 20);
}

TEST_CASE("propagation does nothing on an empty grid") {
    const auto pr = propagate(SudoQGrid(2));
    CHECK_FALSE(pr.dead);
    CHECK(pr.trace.empty());
}

TEST_CASE("four scattered clues force the entire maximal-family solution") {
    const SudoQGrid s = solution_c16({pi / 2, pi / 2, pi, 0.0, 0.0});
    const auto out = solve_unique(four_clue_grid(s));
    REQUIRE(out.status == SolveStatus::Unique);
    REQUIRE(out.solution.has_value());
    CHECK(out.trace.size() == 12);
    CHECK(out.message.empty());
    double min_overlap = 1.0;
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) {
            min_overlap = std::min(min_overlap, std::norm(inner(out.solution->at(r, c), s.at(r, c))));
        }
    CHECK(min_overlap >= 1.0 - 1e-12);
}

TEST_CASE("forced fills commute: every visit order lands on the same solution") {
    const SudoQGrid s = solution_c16({1.1, 0.9, 0.4, 1.7, 2.3});
    const SudoQGrid clues = four_clue_grid(s);
    const auto reference = propagate(clues);
    REQUIRE(reference.grid.complete());
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const auto pr = propagate(clues, {}, seed);
        REQUIRE(pr.grid.complete());
        CHECK(sudoq_test::max_cell_mismatch(pr.grid, reference.grid) < 1e-9);
    }
}

TEST_CASE("inconsistent clues are rejected before any propagation") {
    SudoQGrid g(2);
    g.set(0, 0, basis_vec(4, 0));
    g.set(0, 2, basis_vec(4, 0));
    const auto out = solve_unique(g);
    CHECK(out.status == SolveStatus::Unsolvable);
    CHECK(out.message.find("row 0") != std::string::npos);
}

TEST_CASE("a cell whose neighbors exhaust the space is reported dead") {
    SudoQGrid g(2);
    g.set(0, 0, basis_vec(4, 0));
    g.set(0, 1, basis_vec(4, 1));
    g.set(1, 3, basis_vec(4, 2));
    g.set(2, 3, basis_vec(4, 3));
    const auto pr = propagate(g);
    CHECK(pr.dead);
    CHECK(pr.dead_row == 0);
    CHECK(pr.dead_col == 3);
    const auto out = solve_unique(g);
    CHECK(out.status == SolveStatus::Unsolvable);
    CHECK(out.message.find("(0,3)") != std::string::npos);
}

TEST_CASE("clues confined to one block leave classical alternatives") {
    const SudoQGrid full = classical_cyclic_grid(2);
    SudoQGrid g(2);
    for (auto [r, c] : group_cells(2, {GroupKind::Block, 0})) g.set(r, c, full.at(r, c));
    const auto out = solve_unique(g);
    REQUIRE(out.status == SolveStatus::NotUnique);
    REQUIRE(out.solution.has_value());
    REQUIRE(out.witness.has_value());
    CHECK(validate(*out.solution).valid);
    CHECK(validate(*out.witness).valid);
    CHECK(sudoq_test::max_cell_mismatch(*out.solution, *out.witness) > 0.5);
    for (auto [r, c] : group_cells(2, {GroupKind::Block, 0})) {
        CHECK(equal_up_to_phase(out.solution->at(r, c), g.at(r, c)));
        CHECK(equal_up_to_phase(out.witness->at(r, c), g.at(r, c)));
    }
}

TEST_CASE("an empty grid stalls rather than guessing") {
    CHECK(solve_unique(SudoQGrid(2)).status == SolveStatus::Stalled);
    CHECK(solve_unique(SudoQGrid(3)).status == SolveStatus::Stalled);
}

TEST_CASE("classical completions enumerate the full solution count") {
    const auto all = classical_completions(SudoQGrid(2), 1 << 20);
    CHECK(all.size() == 288);
    for (const auto& s : all) CHECK(validate(s).valid);
    CHECK(classical_completions(SudoQGrid(2), 10).size() == 10);

    SudoQGrid quantum_clue(2);
    Vec plus = Vec::Zero(4);
    plus[0] = plus[1] = 1.0 / std::sqrt(2.0);
    quantum_clue.set(0, 0, plus);
    CHECK_THROWS_AS(classical_completions(quantum_clue, 2), numeric_error);
    CHECK_THROWS_AS(classical_completions(SudoQGrid(3), 2), numeric_error);
}

TEST_CASE("solve status names are stable") {
    CHECK(std::string(to_string(SolveStatus::Unique)) == "unique");
    CHECK(std::string(to_string(SolveStatus::NotUnique)) == "not_unique");
    CHECK(std::string(to_string(SolveStatus::Unsolvable)) == "unsolvable");
    CHECK(std::string(to_string(SolveStatus::Stalled)) == "stalled");
}

TEST_CASE("the search objective gradient matches finite differences") {
    const SudoQGrid s = solution_c16({1.0, 0.8, 0.2, 0.4, 0.9});
    const SudoQGrid clues = four_clue_grid(s);
    SearchProblem prob(clues, s, 0.5, 0.2);
    REQUIRE(prob.blank_count() == 12);
    std::mt19937_64 rng(3);
    std::normal_distribution<double> gauss;
    std::vector<Vec> x(static_cast<std::size_t>(prob.blank_count()));
    for (auto& v : x) {
        v = Vec(4);
        for (int i = 0; i < 4; ++i) v[i] = Complex(gauss(rng), gauss(rng));
    }
    const auto grad = prob.gradient(x);
    const double h = 1e-6;
    double worst = 0.0;
    for (std::size_t b = 0; b < x.size(); ++b) {
        for (int m = 0; m < 4; ++m) {
            for (int part = 0; part < 2; ++part) {
                const Complex dh = part == 0 ? Complex(h, 0.0) : Complex(0.0, h);
                auto xp = x, xm = x;
                xp[b][m] += dh;
                xm[b][m] -= dh;
                const double fd = (prob.value(xp) - prob.value(xm)) / (2.0 * h);
                const double an = part == 0 ? grad[b][m].real() : grad[b][m].imag();
                worst = std::max(worst, std::abs(fd - an));
            }
        }
    }
    CHECK(worst <= 1e-5);
}

TEST_CASE("two full rows of clues admit a genuinely different completion") {
    const SudoQGrid full = classical_cyclic_grid(2);
    SudoQGrid clues(2);
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 4; ++c) clues.set(r, c, full.at(r, c));
    const auto witness = alternative_search(clues, full, {});
    REQUIRE(witness.has_value());
    CHECK(validate(*witness).valid);
    CHECK(witness->complete());
    double max_dev = 0.0;
    for (int r = 2; r < 4; ++r)
        for (int c = 0; c < 4; ++c) {
            max_dev = std::max(max_dev, 1.0 - std::norm(inner(witness->at(r, c), full.at(r, c))));
        }
    CHECK(max_dev >= 0.1);
    for (int c = 0; c < 4; ++c) {
        CHECK(equal_up_to_phase(witness->at(0, c), full.at(0, c), 1e-6));
        CHECK(equal_up_to_phase(witness->at(1, c), full.at(1, c), 1e-6));
    }
}

TEST_CASE("the alternative search validates its configuration and inputs") {
    const SudoQGrid s = solution_c16({1.0, 1.0, 0.5, 0.2, 0.1});
    const SudoQGrid clues = four_clue_grid(s);
    SearchConfig bad_floor;
    bad_floor.distance_floor = 1e-9;
    CHECK_THROWS_AS(alternative_search(clues, s, bad_floor), numeric_error);
    SearchConfig bad_restarts;
    bad_restarts.restarts = 0;
    CHECK_THROWS_AS(alternative_search(clues, s, bad_restarts), numeric_error);
    CHECK_THROWS_AS(alternative_search(clues, four_clue_grid(s), {}), numeric_error);

    // A clue that contradicts the reference solution is caught up front.
    SudoQGrid wrong = four_clue_grid(s);
    wrong.set(0, 0, s.at(3, 3));
    CHECK_THROWS_AS(alternative_search(wrong, s, {}), numeric_error);
}

TEST_CASE("no alternative is found for a propagation-unique puzzle") {
    const SudoQGrid s = solution_c16({pi / 2, pi / 2, pi, 0.0, 0.0});
    const SudoQGrid clues = four_clue_grid(s);
    SearchConfig cfg;
    cfg.restarts = 8;
    CHECK_FALSE(alternative_search(clues, s, cfg).has_value());
}

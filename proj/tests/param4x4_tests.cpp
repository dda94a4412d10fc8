// param4x4_tests.cpp - unit tests for the parametrized 4x4 solution
// families, their cardinality degenerations, and the entropy measures.
//
// Part of sudoq. License: MIT.

#include <catch2/catch_amalgamated.hpp>

#include <numbers>
#include <vector>

#include "sudoq/sudoq.hpp"
#include "test_helpers.hpp"

using namespace sudoq;

namespace {

constexpr double pi = std::numbers::pi;

std::vector<Vec> block_vectors(const SudoQGrid& g, int bi, int bj) {
    std::vector<Vec> vs;
    for (auto [r, c] : group_cells(g.n(), {GroupKind::Block, bi * g.n() + bj})) {
        vs.push_back(g.at(r, c));
    }
    return vs;
}

} // namespace

TEST_CASE("maximal-family solutions stay valid across the parameter space") {
    for (double alpha : {0.3, pi / 2, 2.2})
        for (double gamma : {0.7, pi / 2})
            for (double phi : {0.0, 2.9}) {
                const C16Params p{alpha, gamma, phi, 0.5, 1.3};
                const SudoQGrid g = solution_c16(p);
                const auto vr = validate(g);
                CHECK(vr.valid);
                CHECK(vr.complete);
                CHECK(vr.worst_residual() < 1e-12);
                CHECK(cardinality(g).cardinality == 16);
                CHECK(p.zeta() == phi + 1.3 - 0.5);
            }
}

TEST_CASE("the eight-vector families are valid for all four variants") {
    for (int fam = 1; fam <= 4; ++fam) {
        const C8Params p{fam, 1.1, 0.7, 0.3, 2.2};
        const SudoQGrid g = solution_c8(p);
        const auto vr = validate(g);
        CHECK(vr.valid);
        CHECK(vr.worst_residual() < 1e-12);
        CHECK(cardinality(g).cardinality == 8);
    }
    CHECK_THROWS_AS(solution_c8({0, 1.0, 1.0, 0.0, 0.0}), numeric_error);
    CHECK_THROWS_AS(solution_c8({5, 1.0, 1.0, 0.0, 0.0}), numeric_error);
}

TEST_CASE("the default maximal solution matches the stored fixture cell-wise") {
    const SudoQGrid fixture = sudoq_test::load_fixture_grid("example1.json");
    const SudoQGrid built = solution_c16({pi / 2, pi / 2, pi, 0.0, 0.0});
    CHECK(sudoq_test::max_cell_mismatch(fixture, built) < 1e-12);
}

TEST_CASE("pole angles collapse the cardinality in steps") {
    for (double a : {0.0, pi}) {
        const auto one = classify_cardinality_4x4(solution_c16({a, pi / 2, 0.3, 0.1, 0.7}));
        CHECK(one.cardinality == 8);
        CHECK_FALSE(one.anomaly);
        const auto both = classify_cardinality_4x4(solution_c16({a, 0.0, 0.3, 0.1, 0.7}));
        CHECK(both.cardinality == 4);
        CHECK_FALSE(both.anomaly);
    }
    for (int fam = 1; fam <= 4; ++fam) {
        CHECK(classify_cardinality_4x4(solution_c8({fam, 0.0, 0.7, 0.3, 2.2})).cardinality == 6);
        CHECK(classify_cardinality_4x4(solution_c8({fam, 0.0, pi, 0.3, 2.2})).cardinality == 4);
    }
    const auto full = classify_cardinality_4x4(solution_c16({pi / 2, pi / 2, pi, 0.0, 0.0}));
    CHECK(full.cardinality == 16);
    CHECK_FALSE(full.anomaly);
    CHECK_THROWS_AS(classify_cardinality_4x4(SudoQGrid(3)), numeric_error);
    CHECK_THROWS_AS(classify_cardinality_4x4(SudoQGrid(2)), numeric_error);
}

TEST_CASE("diagonal blocks are unbiased exactly at the balanced angles") {
    const SudoQGrid balanced = solution_c16({pi / 2, pi / 2, pi, 0.0, 0.0});
    const auto b00 = block_vectors(balanced, 0, 0);
    const auto b11 = block_vectors(balanced, 1, 1);
    CHECK(check_unbiased(b00, b11, 1e-9));

    const SudoQGrid tilted = solution_c16({pi / 3, pi / 2, pi, 0.0, 0.0});
    double worst = 0.0;
    for (const Vec& u : block_vectors(tilted, 0, 0))
        for (const Vec& v : block_vectors(tilted, 1, 1)) {
            worst = std::max(worst, std::abs(std::norm(inner(u, v)) - 0.25));
        }
    CHECK(worst > 0.01);
}

TEST_CASE("entropy helpers agree with hand values and reject bad arguments") {
    CHECK(binary_entropy(0.5) == 1.0);
    CHECK(binary_entropy(0.0) == 0.0);
    CHECK(binary_entropy(1.0) == 0.0);
    CHECK(h4_entropy(0.5, 0.5) == 2.0);
    CHECK(std::abs(entropy_closed_form(0.5, 0.5) - 12.0) < 1e-12);
    CHECK_THROWS_AS(binary_entropy(-0.1), numeric_error);
    CHECK_THROWS_AS(h4_entropy(0.5, 1.2), numeric_error);
}

TEST_CASE("per-cell totals satisfy the 4-4-4 decomposition over the family") {
    for (double alpha : {0.4, 1.1, pi / 2})
        for (double gamma : {0.9, pi / 2}) {
            const C16Params params{alpha, gamma, 0.8, 0.2, 1.5};
            const auto rep = entropy(solution_c16(params), params);
            const double p = std::cos(alpha / 2) * std::cos(alpha / 2);
            const double q = std::cos(gamma / 2) * std::cos(gamma / 2);
            const double expected =
                4.0 * binary_entropy(p) + 4.0 * binary_entropy(q) + 4.0 * h4_entropy(p, q);
            CHECK(std::abs(rep.total - expected) < 1e-9);
            CHECK(std::abs(rep.closed_form - entropy_closed_form(p, q)) < 1e-15);
            REQUIRE(rep.per_cell.size() == 16);
        }
}

TEST_CASE("the fixture solution attains the maximal direct entropy") {
    const SudoQGrid g = sudoq_test::load_fixture_grid("example1.json");
    const auto rep = entropy(g);
    CHECK(std::abs(rep.total - 16.0) < 1e-9);
    CHECK(std::isnan(rep.closed_form));
    SudoQGrid partial(2);
    CHECK_THROWS_AS(entropy(partial), numeric_error);
}

TEST_CASE("the four-clue puzzle keeps exactly the four scattered cells") {
    const SudoQGrid s = solution_c16({1.0, 1.3, 0.2, 0.9, 2.4});
    const SudoQGrid puzzle = four_clue_grid(s);
    CHECK(puzzle.filled_count() == 4);
    for (auto [r, c] : {std::pair{0, 0}, {1, 2}, {2, 1}, {3, 3}}) {
        REQUIRE(puzzle.has(r, c));
        CHECK((puzzle.at(r, c) - s.at(r, c)).norm() == 0.0);
    }
    CHECK_THROWS_AS(four_clue_grid(SudoQGrid(2)), numeric_error);
    CHECK_THROWS_AS(four_clue_grid(classical_cyclic_grid(3)), numeric_error);
}

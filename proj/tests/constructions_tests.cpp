// constructions_tests.cpp - unit tests for the design generators: cyclic,
// unitary-family, Heisenberg-Weyl, cube/hypercube, and local product bases.
//
// Part of sudoq. License: MIT.

#include <catch2/catch_amalgamated.hpp>

#include <numbers>

#include "sudoq/sudoq.hpp"
#include "test_helpers.hpp"

using namespace sudoq;

TEST_CASE("shift and clock obey XZ = wZX and generate unitaries") {
    for (int n : {2, 3, 5}) {
        const Mat x = hw_shift(n), z = hw_clock(n);
        const Complex w = std::exp(Complex(0.0, 2.0 * std::numbers::pi / n));
        CHECK((x * z - w * z * x).norm() < 1e-13);
        CHECK(is_unitary(x));
        CHECK(is_unitary(z));
        for (int k = 0; k < n; ++k) CHECK(is_unitary(hw_op(n, k)));
    }
}

TEST_CASE("every generalized basis is orthonormal and diagonalizes its operator") {
    for (int n : {2, 3, 4, 5}) {
        for (int t = 0; t <= n; ++t) {
            const auto basis = hw_basis(n, t);
            REQUIRE(basis.size() == static_cast<std::size_t>(n));
            CHECK(is_orthonormal_set(basis).ok);
            if (t == 0) continue;
            const Mat op = hw_op(n, t - 1);
            for (const Vec& v : basis) {
                const auto ec = eigencheck(op, v);
                CHECK(ec.residual < 1e-12);
                CHECK(std::abs(std::abs(ec.lambda) - 1.0) < 1e-12);
            }
        }
        CHECK_THROWS_AS(hw_basis(n, n + 1), numeric_error);
        CHECK_THROWS_AS(hw_basis(n, -1), numeric_error);
    }
}

TEST_CASE("dimension-three bases match their printed matrices") {
    const Complex w = std::exp(Complex(0.0, 2.0 * std::numbers::pi / 3.0));
    const double r = 1.0 / std::sqrt(3.0);
    Mat b1(3, 3), b2(3, 3);
    b1 << 1, 1, 1, 1, w, w * w, 1, w * w, w;
    b2 << 1, 1, 1, w, w * w, 1, w, 1, w * w;
    b1 *= r;
    b2 *= r;
    const auto t1 = hw_basis(3, 1), t2 = hw_basis(3, 2);
    for (int c = 0; c < 3; ++c) {
        CHECK((t1[static_cast<std::size_t>(c)] - Vec(b1.col(c))).norm() < 1e-14);
        CHECK((t2[static_cast<std::size_t>(c)] - Vec(b2.col(c))).norm() < 1e-14);
    }
}

TEST_CASE("prime dimensions give full sets of mutually unbiased bases") {
    for (int n : {2, 3, 5}) {
        const auto mubs = hw_mub_set(n);
        REQUIRE(mubs.size() == static_cast<std::size_t>(n + 1));
        for (std::size_t a = 0; a < mubs.size(); ++a) {
            CHECK(is_orthonormal_set(mubs[a]).ok);
            for (std::size_t b = a + 1; b < mubs.size(); ++b) {
                CHECK(check_unbiased(mubs[a], mubs[b]));
            }
        }
    }
    CHECK_THROWS_AS(hw_mub_set(4), numeric_error);
    CHECK_THROWS_AS(hw_mub_set(6), numeric_error);
    CHECK(is_prime(2));
    CHECK(is_prime(7));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(9));
}

TEST_CASE("identity families reproduce the classical cyclic grid exactly") {
    for (int n : {2, 3}) {
        const SudoQGrid cyclic = classical_cyclic_grid(n);
        CHECK(validate(cyclic).valid);
        CHECK(cardinality(cyclic).cardinality == n * n);
        CHECK(classify(cyclic, {}) == GridClass::Classical);
        const SudoQGrid built =
            grid_from_unitary_families(identity_family(n), identity_family(n));
        for (int rr = 0; rr < n * n; ++rr)
            for (int cc = 0; cc < n * n; ++cc) {
                CHECK((built.at(rr, cc) - cyclic.at(rr, cc)).norm() == 0.0);
            }
    }
}

TEST_CASE("family grids hit their predicted cardinality") {
    const auto us = haar_family(2, 11), vs = haar_family(2, 12);
    const SudoQGrid g = grid_from_unitary_families(us, vs);
    CHECK(validate(g).valid);
    const int predicted = predicted_cardinality(us, vs);
    CHECK(predicted == 16);
    CHECK(cardinality(g).cardinality == predicted);

    const auto ident = identity_family(2);
    CHECK(predicted_cardinality(ident, ident) == 4);

    UnitaryFamily broken{2, {Mat::Identity(2, 2), 2.0 * Mat::Identity(2, 2)}};
    CHECK_THROWS_AS(grid_from_unitary_families(broken, ident), numeric_error);
    UnitaryFamily mismatched = haar_family(3, 4);
    CHECK_THROWS_AS(grid_from_unitary_families(us, mismatched), numeric_error);
}

TEST_CASE("the standard grids are valid with known cardinalities") {
    const SudoQGrid g2 = hw_sudoq(2);
    CHECK(validate(g2).valid);
    CHECK(validate(g2).worst_residual() < 1e-12);
    CHECK(cardinality(g2).cardinality == 16);
    CHECK(classify(g2, {}) == GridClass::GenuinelyQuantum);

    const SudoQGrid g3 = hw_sudoq(3);
    CHECK(validate(g3).valid);
    CHECK(cardinality(g3).cardinality == 81);

    const auto fam3 = hw_eigenbasis_family(3);
    CHECK(predicted_cardinality(fam3, fam3) == 81);
}

TEST_CASE("cube variants reach the expected vector counts") {
    const auto fam = hw_eigenbasis_family(2);
    const auto std_cube = cube_from_families(fam, fam, fam, CubeVariant::Standard);
    CHECK(validate(std_cube).valid);
    CHECK(cardinality(std_cube).cardinality == 32);

    const auto mod_cube = cube_from_families(fam, fam, fam, CubeVariant::EvenModified);
    CHECK(validate(mod_cube).valid);
    CHECK(cardinality(mod_cube).cardinality == 64);

    const auto fam3 = hw_eigenbasis_family(3);
    const auto cube3 = cube_from_families(fam3, fam3, fam3, CubeVariant::Standard);
    CHECK(validate(cube3).valid);
    CHECK(cardinality(cube3).cardinality == 729);
}

TEST_CASE("hypercubes generalize the cube and reduce to the grid") {
    const auto ident3 = identity_family(3);
    const auto hyper = hypercube_from_families(3, {ident3, ident3, ident3});
    CHECK(validate(hyper).valid);
    CHECK(cardinality(hyper).cardinality == 27);

    // D = 2 must coincide with the two-family grid bit for bit.
    const auto us = haar_family(2, 31), vs = haar_family(2, 32);
    const auto flat = hypercube_from_families(2, {us, vs});
    const SudoQGrid direct = grid_from_unitary_families(us, vs);
    const SudoQGrid lifted = hypercube_to_grid(flat);
    CHECK(sudoq_test::max_cell_mismatch(direct, lifted) < 1e-12);
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) CHECK((direct.at(r, c) - lifted.at(r, c)).norm() == 0.0);

    CHECK_THROWS_AS(hypercube_from_families(3, {ident3, ident3}), numeric_error);
}

TEST_CASE("local product bases are unbiased and fully separable") {
    const auto bases = local_mub_product_bases(3);
    REQUIRE(bases.size() == 4);
    for (std::size_t a = 0; a < bases.size(); ++a) {
        REQUIRE(bases[a].size() == 9);
        CHECK(is_orthonormal_set(bases[a]).ok);
        for (const Vec& v : bases[a]) CHECK(is_product_state(v, 3, 3));
        for (std::size_t b = a + 1; b < bases.size(); ++b) {
            CHECK(check_unbiased(bases[a], bases[b]));
        }
    }
    Vec bell = Vec::Zero(4);
    bell[0] = bell[3] = 1.0 / std::sqrt(2.0);
    CHECK_FALSE(is_product_state(bell, 2, 2));
}

TEST_CASE("haar families are reproducible and seed-sensitive") {
    const auto a = haar_family(3, 77), b = haar_family(3, 77), c = haar_family(3, 78);
    REQUIRE(a.members.size() == 3);
    for (std::size_t m = 0; m < a.members.size(); ++m) {
        CHECK((a.members[m] - b.members[m]).norm() == 0.0);
        CHECK(is_unitary(a.members[m]));
    }
    CHECK((a.members[0] - c.members[0]).norm() > 1e-3);
}

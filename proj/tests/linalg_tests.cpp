// linalg_tests.cpp - unit tests for the dense linear-algebra helpers.
//
// Part of sudoq. License: MIT.

#include <catch2/catch_amalgamated.hpp>

#include <numbers>

#include "sudoq/sudoq.hpp"

using namespace sudoq;

namespace {

Vec basis_vec(int dim, int i) {
    Vec v = Vec::Zero(dim);
    v[i] = 1.0;
    return v;
}

} // namespace

TEST_CASE("inner products follow the physics convention (antilinear first slot)") {
    Vec u(2), v(2);
    u << Complex(0.0, 1.0), 0.0;
    v << 1.0, 0.0;
    CHECK(inner(u, v) == Complex(0.0, -1.0)); // <iu e1, e1> = -i
}

TEST_CASE("kron stacks amplitudes with the left factor most significant") {
    Vec a(2), b(2);
    a << 1.0, 2.0;
    b << 3.0, 5.0;
    const Vec k = kron(a, b);
    REQUIRE(k.size() == 4);
    CHECK(k[0] == Complex(3.0));
    CHECK(k[1] == Complex(5.0));
    CHECK(k[2] == Complex(6.0));
    CHECK(k[3] == Complex(10.0));
}

TEST_CASE("equal_up_to_phase ignores a global phase and nothing else") {
    Vec u(2);
    u << 1.0 / std::sqrt(2.0), Complex(0.0, 1.0 / std::sqrt(2.0));
    const Vec v = std::exp(Complex(0.0, 1.234)) * u;
    CHECK(equal_up_to_phase(u, v));
    Vec w(2);
    w << 1.0, 0.0;
    CHECK_FALSE(equal_up_to_phase(u, w));
}

TEST_CASE("canonical_phase makes the leading amplitude real and is idempotent") {
    Vec u(3);
    u << Complex(0.0, 0.5), 0.5, Complex(0.5, 0.5);
    const Vec c1 = canonical_phase(u / u.norm());
    CHECK(c1[0].imag() == Catch::Approx(0.0).margin(1e-14));
    CHECK(c1[0].real() > 0.0);
    const Vec c2 = canonical_phase(c1);
    CHECK((c1 - c2).norm() < 1e-14);
    CHECK(equal_up_to_phase(c1, u / u.norm()));
}

TEST_CASE("orthonormal-set check accepts bases and rejects repeats") {
    std::vector<Vec> basis;
    for (int i = 0; i < 4; ++i) basis.push_back(basis_vec(4, i));
    const auto ok = is_orthonormal_set(basis);
    CHECK(ok.ok);
    CHECK(ok.max_residual == 0.0);

    std::vector<Vec> repeated{basis_vec(2, 0), basis_vec(2, 0)};
    CHECK_FALSE(is_orthonormal_set(repeated).ok);
}

TEST_CASE("Haar unitaries are unitary, deterministic per seed, and seed-sensitive") {
    const Mat u1 = haar_random_unitary(5, 42);
    const Mat u2 = haar_random_unitary(5, 42);
    const Mat u3 = haar_random_unitary(5, 43);
    CHECK(is_unitary(u1));
    CHECK((u1 - u2).norm() == 0.0);
    CHECK((u1 - u3).norm() > 1e-3);
    std::vector<Vec> cols;
    for (int c = 0; c < 5; ++c) cols.push_back(u1.col(c));
    CHECK(is_orthonormal_set(cols).max_residual < 1e-12);
}

TEST_CASE("orthogonal complement of a near-basis is the missing direction") {
    std::vector<Vec> three{basis_vec(4, 0), basis_vec(4, 1), basis_vec(4, 2)};
    const auto comp = orthogonal_complement(three, 4);
    REQUIRE(comp.size() == 1);
    CHECK(equal_up_to_phase(comp.front(), basis_vec(4, 3)));
}

TEST_CASE("orthogonal complement of nothing is the full space") {
    const auto comp = orthogonal_complement({}, 2);
    REQUIRE(comp.size() == 2);
    CHECK(is_orthonormal_set(comp).ok);
}

TEST_CASE("three spread clues of a full-cardinality solution force the fourth corner cell") {
    const C16Params p{1.1, 0.9, 0.4, 1.7, 2.3};
    const SudoQGrid s = solution_c16(p);
    // cells (0,0), (1,2), (3,3) constrain (0,3) through its row, block, and column
    const std::vector<Vec> clues{s.at(0, 0), s.at(1, 2), s.at(3, 3)};
    const auto comp = orthogonal_complement(clues, 4);
    REQUIRE(comp.size() == 1);
    CHECK(equal_up_to_phase(comp.front(), s.at(0, 3), 1e-9));
}

TEST_CASE("eigencheck reports exact eigenpairs and honest residuals") {
    // |2> is an eigenvector of the clock operator with eigenvalue w^2
    Vec e2 = basis_vec(3, 1);
    const auto ok = eigencheck(hw_clock(3), e2);
    const Complex w2 = std::exp(Complex(0.0, 4.0 * std::numbers::pi / 3.0));
    CHECK(std::abs(ok.lambda - w2) < 1e-14);
    CHECK(ok.residual < 1e-14);

    // |1> is not an eigenvector of the shift: residual is the full norm
    const auto bad = eigencheck(hw_shift(3), basis_vec(3, 0));
    CHECK(bad.residual == Catch::Approx(1.0).margin(1e-14));
}

TEST_CASE("unit-norm guards reject junk") {
    Vec v(2);
    v << 2.0, 0.0;
    CHECK_FALSE(is_unit(v));
    CHECK_THROWS_AS(require_unit(v, 1e-9, "test"), numeric_error);
    CHECK_THROWS_AS(eigencheck(hw_clock(2), v), numeric_error);
}

TEST_CASE("tolerance bundle rejects non-positive or inconsistent values") {
    CHECK_NOTHROW(Tolerances{}.check());
    CHECK_THROWS_AS((Tolerances{0.0, 1e-9, 1e-8}).check(), numeric_error);
    CHECK_THROWS_AS((Tolerances{1e-6, 1e-9, 1e-8}).check(), numeric_error); // eq > solve
}

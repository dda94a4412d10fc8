// tolerances.hpp - numeric tolerance knobs and error types shared by the library.
//
// Part of sudoq. License: MIT.

#ifndef SUDOQ_TOLERANCES_HPP
#define SUDOQ_TOLERANCES_HPP

#include <stdexcept>
#include <string>

namespace sudoq {

/// Raised when a numeric precondition is violated (non-unit vector where a
/// unit vector is required, dimension mismatch, non-unitary matrix, ...).
/// The CLI maps this to exit code 65.
class numeric_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised when structured input (JSON) is syntactically fine but does not
/// describe a well-formed object. The CLI maps this to exit code 64.
class format_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Tolerance knobs used across the library.
///
///  - eq_tol:    two unit vectors are "the same state" iff |<u|v>| >= 1 - eq_tol.
///  - orth_tol:  orthonormality residual threshold; also the relative rank
///               cutoff for orthogonal complements.
///  - solve_tol: acceptance threshold for solver results (squared constraint
///               violation of a candidate completion must stay below
///               solve_tol^2).
struct Tolerances {
    double eq_tol = 1e-9;
    double orth_tol = 1e-9;
    double solve_tol = 1e-8;

    /// All tolerances must be strictly positive and eq_tol <= solve_tol.
    void check() const {
        if (!(eq_tol > 0.0) || !(orth_tol > 0.0) || !(solve_tol > 0.0)) {
            throw numeric_error("Tolerances: all tolerances must be strictly positive");
        }
        if (eq_tol > solve_tol) {
            throw numeric_error("Tolerances: eq_tol must not exceed solve_tol (eq_tol=" +
                                std::to_string(eq_tol) + ", solve_tol=" + std::to_string(solve_tol) + ")");
        }
    }
};

} // namespace sudoq

#endif // SUDOQ_TOLERANCES_HPP

// sudoq.hpp - umbrella header pulling in the whole library.
//
// Part of sudoq. License: MIT.

#ifndef SUDOQ_SUDOQ_HPP
#define SUDOQ_SUDOQ_HPP

#include "sudoq/analysis.hpp"
#include "sudoq/audits.hpp"
#include "sudoq/constructions.hpp"
#include "sudoq/grid.hpp"
#include "sudoq/hypercube.hpp"
#include "sudoq/linalg.hpp"
#include "sudoq/param4x4.hpp"
#include "sudoq/serialize.hpp"
#include "sudoq/solver.hpp"
#include "sudoq/tolerances.hpp"

#endif // SUDOQ_SUDOQ_HPP

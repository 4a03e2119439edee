#pragma once

// Exact classification of points of R^n up to integer affine equivalence:
// complete invariants, orbit decision, and explicit witnesses.

#include "glnz/affine_space.hpp"
#include "glnz/errors.hpp"
#include "glnz/lattice.hpp"
#include "glnz/matrix.hpp"
#include "glnz/oracle.hpp"
#include "glnz/orbit.hpp"
#include "glnz/parse.hpp"
#include "glnz/rational.hpp"
#include "glnz/simplex.hpp"

#pragma once

// fanostab: exact slope-(semi)stability toolkit for tangent bundles of smooth
// Fano threefolds — integral trilinear intersection lattices, blow-up and
// projectivized-bundle constructions, slope comparisons against contraction
// candidates, a vanishing rule engine for Picard-rank-one varieties, an exact
// rational linear maximizer, and the classified deformation-class catalog.

#include "fanostab/catalog.hpp"
#include "fanostab/cohomology.hpp"
#include "fanostab/constructions.hpp"
#include "fanostab/errors.hpp"
#include "fanostab/io.hpp"
#include "fanostab/lattice.hpp"
#include "fanostab/linprog.hpp"
#include "fanostab/matrix.hpp"
#include "fanostab/rational.hpp"
#include "fanostab/stability.hpp"
#include "fanostab/surface.hpp"

#pragma once

#include <span>

#include "latsec/lattice.hpp"

namespace latsec {

/// Nearest lattice point to `y` (true ambient coordinates). Lattices with a
/// diagonal Gram matrix are decoded by rounding and Construction-A lattices by
/// decoding the code coset first; everything else, and any near-tie on a fast
/// path, goes through a sphere decoder seeded with the Babai point. Exact ties
/// resolve to the lexicographically smallest coordinate vector.
LatticePoint closest_point(const Lattice& lattice, std::span<const double> y);

/// Same search without the fast paths; exposed for cross-checking.
LatticePoint closest_point_sphere(const Lattice& lattice, std::span<const double> y);

}  // namespace latsec

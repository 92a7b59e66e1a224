#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "latsec/lattice.hpp"
#include "latsec/rational.hpp"

namespace latsec {

struct EnumerationOptions {
  std::size_t max_points = 10'000'000;
};

/// Visits every lattice point whose squared norm numerator (over the lattice's
/// Gram denominator) is at most `bound_numerator`. Visit order is unspecified.
/// Throws Error{enumeration_budget} once more than options.max_points points
/// have been produced.
void for_each_point(const Lattice& lattice, std::int64_t bound_numerator,
                    const std::function<void(std::span<const std::int64_t>, std::int64_t)>& visit,
                    const EnumerationOptions& options = {});

/// All points with squared norm <= radius2, sorted by coordinates.
std::vector<LatticePoint> enumerate_points(const Lattice& lattice, const Rational& radius2,
                                           const EnumerationOptions& options = {});
std::vector<LatticePoint> enumerate_points(const Lattice& lattice, double radius2,
                                           const EnumerationOptions& options = {});

struct MinimumNorm {
  Rational norm;
  std::int64_t kissing = 0;
};

MinimumNorm min_norm_and_kissing(const Lattice& lattice, const EnumerationOptions& options = {});

namespace detail {

/// Fincke-Pohst search around a real target in coordinate space: calls
/// visit(u, dist2) for every integer u with (u - t) G (u - t)^T <= *bound.
/// The callback may shrink *bound while the search is running.
void sphere_search(const std::vector<std::vector<double>>& r_upper, std::span<const double> target,
                   double& bound, const std::function<void(std::span<const std::int64_t>, double)>& visit);

}  // namespace detail

}  // namespace latsec

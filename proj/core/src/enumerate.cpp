#include "latsec/enumerate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "latsec/error.hpp"

namespace latsec {

namespace detail {

void sphere_search(const std::vector<std::vector<double>>& r, std::span<const double> target, double& bound,
                   const std::function<void(std::span<const std::int64_t>, double)>& visit) {
  const std::size_t n = r.size();
  std::vector<std::int64_t> u(n, 0);
  // partial[i] is the accumulated squared distance from levels i..n-1.
  std::vector<double> partial(n + 1, 0.0);
  std::vector<double> center(n, 0.0);
  std::vector<std::int64_t> upper(n, 0);

  // Level i owns the term (R_ii (u_i - t_i) + sum_{j>i} R_ij (u_j - t_j))^2.
  auto compute_center = [&](std::size_t i) {
    double s = 0.0;
    for (std::size_t j = i + 1; j < n; ++j) s += r[i][j] * (static_cast<double>(u[j]) - target[j]);
    center[i] = target[i] - s / r[i][i];
  };
  auto open_level = [&](std::size_t i) -> bool {
    compute_center(i);
    const double room = bound - partial[i + 1];
    if (room < 0.0) return false;
    const double half = std::sqrt(room) / r[i][i];
    const double lo = std::ceil(center[i] - half);
    const double hi = std::floor(center[i] + half);
    if (lo > hi) return false;
    u[i] = static_cast<std::int64_t>(lo);
    upper[i] = static_cast<std::int64_t>(hi);
    return true;
  };

  std::size_t i = n - 1;
  if (!open_level(i)) return;
  while (true) {
    if (u[i] > upper[i]) {
      if (i == n - 1) return;
      ++i;
      ++u[i];
      continue;
    }
    const double d = r[i][i] * (static_cast<double>(u[i]) - center[i]);
    partial[i] = partial[i + 1] + d * d;
    if (partial[i] > bound) {
      // Past the far edge only when right of center; left of it, step inward.
      if (static_cast<double>(u[i]) > center[i]) {
        u[i] = upper[i] + 1;
      } else {
        ++u[i];
      }
      continue;
    }
    if (i == 0) {
      visit(u, partial[0]);
      ++u[0];
      continue;
    }
    --i;
    if (!open_level(i)) {
      ++i;
      ++u[i];
    }
  }
}

}  // namespace detail

void for_each_point(const Lattice& lattice, std::int64_t bound_numerator,
                    const std::function<void(std::span<const std::int64_t>, std::int64_t)>& visit,
                    const EnumerationOptions& options) {
  if (bound_numerator < 0) return;
  const double den = static_cast<double>(lattice.gram_denominator());
  double bound = static_cast<double>(bound_numerator) / den;
  bound = bound * (1.0 + 1e-9) + 1e-9;
  const std::vector<double> origin(lattice.rank(), 0.0);
  std::size_t produced = 0;
  detail::sphere_search(lattice.cholesky(), origin, bound, [&](std::span<const std::int64_t> u, double) {
    const std::int64_t num = lattice.norm_numerator(u);
    if (num > bound_numerator) return;
    if (++produced > options.max_points)
      throw Error(ErrorKind::enumeration_budget, "enumeration exceeded " + std::to_string(options.max_points) + " points");
    visit(u, num);
  });
}

namespace {

std::vector<LatticePoint> collect(const Lattice& lattice, std::int64_t bound_numerator, const EnumerationOptions& options) {
  std::vector<IntVector> coords;
  for_each_point(
      lattice, bound_numerator,
      [&](std::span<const std::int64_t> u, std::int64_t) { coords.emplace_back(u.begin(), u.end()); }, options);
  std::sort(coords.begin(), coords.end());
  std::vector<LatticePoint> out;
  out.reserve(coords.size());
  for (auto& c : coords) out.push_back(make_point(lattice, std::move(c)));
  return out;
}

std::int64_t checked_numerator(const Rational& value) {
  const BigInt f = boost::multiprecision::numerator(value) / boost::multiprecision::denominator(value);
  if (f > std::numeric_limits<std::int64_t>::max() / 2)
    throw Error(ErrorKind::enumeration_budget, "enumeration radius too large");
  return f.convert_to<std::int64_t>();
}

}  // namespace

std::vector<LatticePoint> enumerate_points(const Lattice& lattice, const Rational& radius2,
                                           const EnumerationOptions& options) {
  if (radius2 < 0) throw Error(ErrorKind::domain, "radius must be nonnegative");
  return collect(lattice, checked_numerator(radius2 * lattice.gram_denominator()), options);
}

std::vector<LatticePoint> enumerate_points(const Lattice& lattice, double radius2, const EnumerationOptions& options) {
  if (!(radius2 >= 0.0) || !std::isfinite(radius2)) throw Error(ErrorKind::domain, "radius must be nonnegative");
  const double scaled = radius2 * static_cast<double>(lattice.gram_denominator()) * (1.0 + 1e-12);
  if (scaled > 9.0e15) throw Error(ErrorKind::enumeration_budget, "enumeration radius too large");
  return collect(lattice, static_cast<std::int64_t>(std::floor(scaled)), options);
}

MinimumNorm min_norm_and_kissing(const Lattice& lattice, const EnumerationOptions& options) {
  std::int64_t bound = std::numeric_limits<std::int64_t>::max();
  const auto& g = lattice.gram_numerators();
  for (std::size_t i = 0; i < g.size(); ++i) bound = std::min(bound, g[i][i]);
  std::int64_t best = bound;
  std::int64_t count = 0;
  for_each_point(
      lattice, bound,
      [&](std::span<const std::int64_t>, std::int64_t num) {
        if (num == 0) return;
        if (num < best) {
          best = num;
          count = 0;
        }
        if (num == best) ++count;
      },
      options);
  return MinimumNorm{Rational(best, lattice.gram_denominator()), count};
}

}  // namespace latsec

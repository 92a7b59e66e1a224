#include "latsec/closest_point.hpp"

#include <cmath>
#include <limits>
#include <optional>
#include <vector>

#include "latsec/enumerate.hpp"
#include "latsec/error.hpp"

namespace latsec {

namespace {

constexpr double kTieTolerance = 1e-9;

bool near_half(double v) { return std::abs(std::abs(v - std::floor(v)) - 0.5) < kTieTolerance; }

double coord_distance(const Lattice& lattice, std::span<const std::int64_t> u, std::span<const double> t) {
  const auto& r = lattice.cholesky();
  double acc = 0.0;
  for (std::size_t i = 0; i < r.size(); ++i) {
    double s = 0.0;
    for (std::size_t j = i; j < r.size(); ++j) s += r[i][j] * (static_cast<double>(u[j]) - t[j]);
    acc += s * s;
  }
  return acc;
}

bool diagonal_gram(const Lattice& lattice) {
  const auto& g = lattice.gram_numerators();
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = 0; j < g.size(); ++j)
      if (i != j && g[i][j] != 0) return false;
  return true;
}

std::optional<IntVector> round_diagonal(const std::vector<double>& t) {
  IntVector u(t.size());
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (near_half(t[i])) return std::nullopt;
    u[i] = static_cast<std::int64_t>(std::llround(t[i]));
  }
  return u;
}

std::optional<IntVector> decode_construction_a(const Lattice& lattice, const ConstructionAForm& form,
                                               std::span<const double> y) {
  const double s = to_double(form.factor) * std::pow(2.0, 0.5 * lattice.scale2());
  const std::size_t n = y.size();
  std::vector<double> z(n);
  for (std::size_t i = 0; i < n; ++i) z[i] = y[i] / s;

  double best = std::numeric_limits<double>::infinity();
  double second = best;
  std::vector<double> best_point;
  std::vector<double> candidate(n);
  for (const Bits& c : form.code.codewords()) {
    double d = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double shifted = (z[i] - c[i]) / 2.0;
      if (near_half(shifted)) return std::nullopt;
      candidate[i] = c[i] + 2.0 * std::round(shifted);
      const double e = z[i] - candidate[i];
      d += e * e;
    }
    if (d < best) {
      second = best;
      best = d;
      best_point = candidate;
    } else if (d < second) {
      second = d;
    }
  }
  if (second - best <= kTieTolerance * std::max(1.0, best)) return std::nullopt;
  for (auto& v : best_point) v *= s;
  std::vector<double> coords = lattice.real_coords(best_point);
  IntVector u(coords.size());
  for (std::size_t i = 0; i < coords.size(); ++i) u[i] = static_cast<std::int64_t>(std::llround(coords[i]));
  return u;
}

}  // namespace

LatticePoint closest_point_sphere(const Lattice& lattice, std::span<const double> y) {
  if (y.size() != lattice.dimension()) throw Error(ErrorKind::invalid_argument, "target dimension mismatch");
  const std::vector<double> t = lattice.real_coords(y);
  IntVector babai(t.size());
  for (std::size_t i = 0; i < t.size(); ++i) babai[i] = static_cast<std::int64_t>(std::llround(t[i]));

  double best = coord_distance(lattice, babai, t);
  IntVector best_u = babai;
  double bound = best * (1.0 + kTieTolerance) + 1e-12;
  detail::sphere_search(lattice.cholesky(), t, bound, [&](std::span<const std::int64_t> u, double d) {
    const double tol = kTieTolerance * std::max(1.0, best);
    const bool better = d < best - tol;
    const bool tied = !better && d <= best + tol;
    if (better || (tied && std::lexicographical_compare(u.begin(), u.end(), best_u.begin(), best_u.end()))) {
      if (better) best = d;
      best_u.assign(u.begin(), u.end());
      bound = best * (1.0 + kTieTolerance) + 1e-12;
    }
  });
  return make_point(lattice, std::move(best_u));
}

LatticePoint closest_point(const Lattice& lattice, std::span<const double> y) {
  if (y.size() != lattice.dimension()) throw Error(ErrorKind::invalid_argument, "target dimension mismatch");
  if (lattice.is_square() && diagonal_gram(lattice)) {
    if (auto u = round_diagonal(lattice.real_coords(y))) return make_point(lattice, std::move(*u));
  } else if (const auto& form = lattice.construction_a()) {
    if (auto u = decode_construction_a(lattice, *form, y)) return make_point(lattice, std::move(*u));
  }
  return closest_point_sphere(lattice, y);
}

}  // namespace latsec

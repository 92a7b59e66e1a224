#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "latsec/enumerate.hpp"
#include "latsec/lattice.hpp"
#include "latsec/rational.hpp"

namespace latsec {

/// Jacobi theta function theta_i(q) for i in {2, 3, 4} and 0 < q < 1. For
/// q > e^{-pi} the value is computed from the modular transform, which keeps
/// theta_4 free of cancellation near q = 1. Throws Error{domain}.
double jacobi_theta(int index, double q);

struct ThetaTriple {
  double t2 = 0.0;
  double t3 = 0.0;
  double t4 = 0.0;
};
/// theta_2, theta_3, theta_4 at q = e^{-pi y}; usable where q itself underflows.
ThetaTriple jacobi_thetas_at(double y);

/// Theta series truncated at a norm bound. Norm k/den has count counts[k].
struct QSeries {
  std::int64_t den = 1;
  std::int64_t bound_numerator = 0;
  std::vector<std::int64_t> counts;

  Rational norm_bound() const { return Rational(bound_numerator, den); }
  std::int64_t coefficient(const Rational& norm) const;
  /// Sum of counts[k] * exp(-pi * y * k / den).
  double evaluate(double y) const;
};

QSeries theta_series(const Lattice& lattice, const Rational& norm_bound, const EnumerationOptions& options = {});

/// Series long enough that the truncated tail at `y` stays below `rel_tol`
/// of the sum. The tail is bounded from the point counts of the last two norm
/// bands; when that bound is too loose the radius grows by 25%.
QSeries theta_series_for(const Lattice& lattice, double y, double rel_tol = 1e-13,
                         const EnumerationOptions& options = {});

/// Theta_Lambda(y) = sum over the lattice of e^{-pi y |x|^2}, by enumeration.
double theta_enum(const Lattice& lattice, double y, const EnumerationOptions& options = {});

/// Table of closed forms in theta_2, theta_3, theta_4 at q = e^{-pi y}:
/// "Zn", "Dn", "E8" and "Leech" (alias "Lambda24"). Throws Error{unknown_name}.
double theta_closed_form(std::string_view name, double y);
/// Natural log of the same value; stays finite for large n and small y.
double log_theta_closed_form(std::string_view name, double y);

/// |Theta(y) - vol^{-1} y^{-n/2} Theta_dual(1/y)| / Theta(y), both sides enumerated.
double jacobi_identity_residual(const Lattice& lattice, double y, const EnumerationOptions& options = {});

/// Relative gap between the direct lattice sum of e^{-|u+t|^2 / 2 sigma^2} and
/// its dual-lattice (Fourier) side, for an enumerable lattice.
double poisson_summation_residual(const Lattice& lattice, double sigma, std::span<const double> shift);

}  // namespace latsec

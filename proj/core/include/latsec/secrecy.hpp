#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>

#include "latsec/enumerate.hpp"
#include "latsec/lattice.hpp"
#include "latsec/modular.hpp"
#include "latsec/rational.hpp"

namespace latsec {

/// A theta series seen as a function of y > 0, with the data the secrecy
/// function needs. `log_theta` returns ln Theta(y).
struct ThetaEvaluator {
  std::string name;
  std::size_t n = 0;
  double volume = 1.0;
  std::function<double(double)> log_theta;
  /// Set for even unimodular inputs; enables exact gains.
  std::optional<ThetaPolynomial> polynomial;
  /// y0 = vol^{-2/n} when the theta series is invariant under duality up to scale.
  std::optional<double> symmetry_point;
  bool cubic = false;
};

ThetaEvaluator cubic_evaluator(std::size_t n);
ThetaEvaluator polynomial_evaluator(const ThetaPolynomial& p, std::string name = {});
/// Closed forms "Zn", "Dn", "E8", "Leech".
ThetaEvaluator closed_form_evaluator(std::string_view name);
/// Enumerated theta series of the lattice for y >= vol^{-2/n} and of its dual,
/// through the Jacobi identity, below that point.
ThetaEvaluator lattice_evaluator(const Lattice& lattice, const EnumerationOptions& options = {});
/// Catalog lattice names, closed-form names ("Leech"), or "extremal<n>" / a
/// bare dimension such as "24" for the extremal theta series.
ThetaEvaluator evaluator_for(std::string_view name);

/// y0 = vol^{-2/n} when the theta coefficients of the dual match those of the
/// lattice after rescaling norms by vol^{-4/n}; nullopt otherwise.
std::optional<double> dual_symmetry_point(const Lattice& lattice, const EnumerationOptions& options = {});

/// Xi(y) = theta_3(e^{-pi lambda^2 y})^n / Theta(y) with lambda = vol^{1/n}.
double secrecy_function(const ThetaEvaluator& theta, double y);
double log_secrecy_function(const ThetaEvaluator& theta, double y);

/// 1/chi = sum_j b_j (3/4)^{3(m-j)+k} (2^-12)^j, exact.
Rational weak_secrecy_gain(const ThetaPolynomial& p);

struct WeakGain {
  std::optional<Rational> exact;
  double value = 0.0;
  double y0 = 1.0;
};
/// Exact when the evaluator is cubic or even unimodular, numeric at the
/// symmetry point otherwise. Throws Error{requires_symmetry} when there is none.
WeakGain weak_secrecy_gain(const ThetaEvaluator& theta);

struct StrongGainOptions {
  double low_db = -40.0;
  double high_db = 40.0;
  double grid_step_db = 0.25;
  double log10_tolerance = 1e-6;
};

struct StrongGain {
  double value = 1.0;
  double y_star = 1.0;
  /// False when the grid scan saw more than one local maximum; the result
  /// then comes from refining the best grid point.
  bool unimodal = true;
  bool flat = false;
};

/// Maximizes Xi over 10 log10 y by a grid scan followed by golden-section
/// refinement around the best grid point.
StrongGain strong_secrecy_gain(const ThetaEvaluator& theta, const StrongGainOptions& options = {});

struct SecrecyGain {
  std::string name;
  std::optional<Rational> weak_exact;
  std::optional<double> weak;
  std::optional<double> y0;
  StrongGain strong;
  /// |strong - weak| / weak.
  std::optional<double> weak_strong_gap;
};

SecrecyGain secrecy_gain(const ThetaEvaluator& theta, const StrongGainOptions& options = {});

/// theta_3(e^{-pi})^n / E_{n/2}(e^{-pi}) for n a multiple of 8, 8 <= n <= 400.
double secrecy_gain_lower_bound(unsigned n);
/// theta_3(e^{-pi})^n / 2, the large-n form of the bound.
double secrecy_gain_asymptotic(unsigned n);
/// 1.086^n / 2 with the constant rounded as printed.
double secrecy_gain_asymptotic_rounded(unsigned n);

/// Gain estimated from the first two theta terms of Z^n and of the extremal
/// lattice: (1 + 2n e^{-pi}) / (1 + tau e^{-pi d}) with (d, tau) its first shell.
double two_term_gain_approximation(unsigned n);

}  // namespace latsec

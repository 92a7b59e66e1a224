#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "latsec/rational.hpp"

namespace latsec {

/// Bernoulli number B_l (B_1 = -1/2), exact, for l <= 200.
Rational bernoulli(unsigned l);

/// E_{k2}(q) = 1 - (2 k2 / B_{k2}) sum_m m^{k2-1} q^{2m} / (1 - q^{2m}) for even
/// k2 >= 4 and 0 < q < 1. Terms are formed in log space so large weights do
/// not overflow.
double eisenstein(unsigned k2, double q);

/// Discriminant as theta_2^8 theta_3^8 theta_4^8 / 256.
double discriminant_delta(double q);
/// Discriminant as (E_4^3 - E_6^2) / 1728, in extended precision.
double discriminant_delta_eisenstein(double q);

/// Exact power series in Q = q^2 with rational coefficients, truncated.
using ExactSeries = std::vector<Rational>;

/// Eisenstein series expansion in Q up to and including Q^order.
ExactSeries eisenstein_expansion(unsigned k2, std::size_t order);
/// (E_4^3 - E_6^2) / 1728 expanded in Q.
ExactSeries delta_expansion(std::size_t order);
ExactSeries series_multiply(const ExactSeries& a, const ExactSeries& b, std::size_t order);
ExactSeries series_power(const ExactSeries& a, unsigned e, std::size_t order);

/// Theta series of an even unimodular lattice of dimension n = 24m + 8k:
/// E4^{3m+k} + sum_j b_j E4^{3(m-j)+k} Delta^j.
struct ThetaPolynomial {
  unsigned n = 8;
  unsigned m = 0;
  unsigned k = 1;
  std::vector<Rational> b;  // b_1 .. b_m

  /// Coefficients in Q up to Q^order; entry i counts vectors of norm 2i.
  ExactSeries expansion(std::size_t order) const;
  /// Natural log of the value at y, through theta functions.
  double log_evaluate(double y) const;
  double evaluate(double y) const;

  /// "E4^3 - 720*Delta" style rendering.
  std::string to_string() const;
  /// {"n", "m", "k", "b": ["p/q", ...]}.
  std::string to_json() const;
  static ThetaPolynomial from_json(std::string_view text);
};

/// Splits n into (m, k). Throws Error{domain} unless n is a positive multiple
/// of 8 not exceeding 200.
ThetaPolynomial theta_polynomial_shape(unsigned n);

/// Extremal theta series: the b_j that cancel the coefficients of Q^1..Q^m.
ThetaPolynomial extremal_theta(unsigned n);

/// Polynomial whose expansion reproduces counts[i] at norm 2i for i = 1..m.
ThetaPolynomial theta_polynomial_from_counts(unsigned n, const std::vector<Rational>& counts);

/// Leading nonzero coefficient past the constant term (norm 2m+2 for
/// extremal input), with its norm.
struct KissingData {
  unsigned norm = 0;
  Rational count;
};
KissingData kissing_data(const ThetaPolynomial& p);

}  // namespace latsec

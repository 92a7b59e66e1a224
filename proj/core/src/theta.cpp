#include "latsec/theta.hpp"

#include <cctype>
#include <cmath>
#include <numbers>
#include <string>

#include "latsec/error.hpp"

namespace latsec {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kStopRatio = 1e-18;
constexpr int kMinTerms = 50;

// Direct series with log q = lq <= -pi.
double theta_series_log(int index, double lq) {
  if (index == 2) {
    double sum = 0.0;
    for (int n = 0;; ++n) {
      const double e = (n + 0.5) * (n + 0.5);
      const double term = 2.0 * std::exp(e * lq);
      sum += term;
      if (n + 1 >= kMinTerms && term <= kStopRatio * sum) break;
    }
    return sum;
  }
  const double sign = index == 4 ? -1.0 : 1.0;
  double sum = 1.0;
  double s = 1.0;
  for (int n = 1;; ++n) {
    s *= sign;
    const double term = 2.0 * std::exp(static_cast<double>(n) * n * lq);
    sum += s * term;
    if (n >= kMinTerms && term <= kStopRatio * std::abs(sum)) break;
  }
  return sum;
}

}  // namespace

ThetaTriple jacobi_thetas_at(double y) {
  if (!(y > 0.0) || !std::isfinite(y)) throw Error(ErrorKind::domain, "theta argument must satisfy y > 0");
  if (y >= 1.0) {
    const double lq = -kPi * y;
    return {theta_series_log(2, lq), theta_series_log(3, lq), theta_series_log(4, lq)};
  }
  const double s = 1.0 / std::sqrt(y);
  const double lq = -kPi / y;
  return {s * theta_series_log(4, lq), s * theta_series_log(3, lq), s * theta_series_log(2, lq)};
}

namespace {

std::size_t parse_dimension(std::string_view digits, std::string_view name) {
  if (digits.empty() || digits.size() > 4) throw Error(ErrorKind::unknown_name, "no closed form for " + std::string(name));
  std::size_t v = 0;
  for (const char c : digits) {
    if (!std::isdigit(static_cast<unsigned char>(c))) throw Error(ErrorKind::unknown_name, "no closed form for " + std::string(name));
    v = v * 10 + static_cast<std::size_t>(c - '0');
  }
  if (v == 0) throw Error(ErrorKind::unknown_name, "no closed form for " + std::string(name));
  return v;
}

}  // namespace

double jacobi_theta(int index, double q) {
  if (index < 2 || index > 4) throw Error(ErrorKind::domain, "theta index must be 2, 3 or 4");
  if (!(q > 0.0 && q < 1.0)) throw Error(ErrorKind::domain, "theta needs 0 < q < 1");
  const ThetaTriple t = jacobi_thetas_at(-std::log(q) / kPi);
  return index == 2 ? t.t2 : index == 3 ? t.t3 : t.t4;
}

std::int64_t QSeries::coefficient(const Rational& norm) const {
  const Rational k = norm * den;
  if (!is_integer(k)) return 0;
  const std::int64_t idx = to_int64(k);
  if (idx < 0) return 0;
  if (idx > bound_numerator) throw Error(ErrorKind::domain, "norm beyond the series truncation");
  return counts[static_cast<std::size_t>(idx)];
}

double QSeries::evaluate(double y) const {
  double sum = 0.0;
  const double step = -kPi * y / static_cast<double>(den);
  for (std::size_t k = counts.size(); k-- > 0;) {
    if (counts[k] != 0) sum += static_cast<double>(counts[k]) * std::exp(step * static_cast<double>(k));
  }
  return sum;
}

QSeries theta_series(const Lattice& lattice, const Rational& norm_bound, const EnumerationOptions& options) {
  QSeries s;
  s.den = lattice.gram_denominator();
  const Rational scaled = norm_bound * s.den;
  const BigInt whole = boost::multiprecision::numerator(scaled) / boost::multiprecision::denominator(scaled);
  if (whole < 0) throw Error(ErrorKind::domain, "norm bound must be nonnegative");
  if (whole > 100'000'000) throw Error(ErrorKind::enumeration_budget, "norm bound too large");
  s.bound_numerator = whole.convert_to<std::int64_t>();
  s.counts.assign(static_cast<std::size_t>(s.bound_numerator) + 1, 0);
  for_each_point(
      lattice, s.bound_numerator,
      [&](std::span<const std::int64_t>, std::int64_t num) { ++s.counts[static_cast<std::size_t>(num)]; }, options);
  return s;
}

QSeries theta_series_for(const Lattice& lattice, double y, double rel_tol, const EnumerationOptions& options) {
  if (!(y > 0.0) || !std::isfinite(y)) throw Error(ErrorKind::domain, "theta argument must satisfy y > 0");
  double bound = -std::log(rel_tol * 1e-3) / (kPi * y);
  for (int attempt = 0; attempt < 40; ++attempt, bound *= 1.25) {
    const QSeries s = theta_series(lattice, Rational(static_cast<std::int64_t>(std::ceil(bound * 64.0)), 64), options);
    const double den = static_cast<double>(s.den);
    const double top = static_cast<double>(s.bound_numerator);
    double total = 0.0;
    double count_low = 0.0;
    double count_high = 0.0;
    for (std::size_t k = 0; k < s.counts.size(); ++k) {
      if (s.counts[k] == 0) continue;
      const double c = static_cast<double>(s.counts[k]);
      total += c * std::exp(-kPi * y * static_cast<double>(k) / den);
      const double kk = static_cast<double>(k);
      if (kk > 0.75 * top) {
        count_high += c;
      } else if (kk > 0.5 * top) {
        count_low += c;
      }
    }
    if (count_high == 0.0 && count_low == 0.0) return s;
    if (count_low > 0.0) {
      // Each later band holds about `growth` times the points of the one before
      // and every weight is at most e^{-pi y T} at the boundary T.
      const double growth = std::max(1.0, count_high / count_low);
      const double decay = growth * std::exp(-kPi * y * 0.25 * top / den);
      const double edge = std::exp(-kPi * y * top / den);
      if (decay < 1.0 && growth * count_high * edge / (1.0 - decay) < rel_tol * total) return s;
    }
  }
  throw Error(ErrorKind::enumeration_budget, "theta series did not converge within the growth limit");
}

double theta_enum(const Lattice& lattice, double y, const EnumerationOptions& options) {
  return theta_series_for(lattice, y, 1e-13, options).evaluate(y);
}

double log_theta_closed_form(std::string_view name, double y) {
  const ThetaTriple t = jacobi_thetas_at(y);
  const double r2 = t.t2 / t.t3;
  const double r4 = t.t4 / t.t3;
  const double l3 = std::log(t.t3);
  if (name == "E8") return std::log(0.5) + 8.0 * l3 + std::log1p(std::pow(r2, 8) + std::pow(r4, 8));
  if (name == "Leech" || name == "Lambda24") {
    const double e = 1.0 + std::pow(r2, 8) + std::pow(r4, 8);
    const double inner = e * e * e / 8.0 - 45.0 / 16.0 * std::pow(r2 * r4, 8);
    return 24.0 * l3 + std::log(inner);
  }
  if (!name.empty() && name[0] == 'Z') return static_cast<double>(parse_dimension(name.substr(1), name)) * l3;
  if (!name.empty() && name[0] == 'D') {
    const std::size_t n = parse_dimension(name.substr(1), name);
    if (n < 2) throw Error(ErrorKind::unknown_name, "no closed form for " + std::string(name));
    return static_cast<double>(n) * l3 + std::log(0.5 * (1.0 + std::pow(r4, static_cast<double>(n))));
  }
  throw Error(ErrorKind::unknown_name, "no closed form for " + std::string(name));
}

double theta_closed_form(std::string_view name, double y) { return std::exp(log_theta_closed_form(name, y)); }

double jacobi_identity_residual(const Lattice& lattice, double y, const EnumerationOptions& options) {
  if (!lattice.is_square()) throw Error(ErrorKind::unsupported_rank, "identity needs a full-rank lattice");
  const double n = static_cast<double>(lattice.rank());
  const double lhs = theta_enum(lattice, y, options);
  const double rhs = std::pow(y, -0.5 * n) / lattice.volume() * theta_enum(dual(lattice), 1.0 / y, options);
  return std::abs(lhs - rhs) / lhs;
}

double poisson_summation_residual(const Lattice& lattice, double sigma, std::span<const double> shift) {
  if (!(sigma > 0.0)) throw Error(ErrorKind::domain, "sigma must be positive");
  if (!lattice.is_square() || shift.size() != lattice.dimension())
    throw Error(ErrorKind::invalid_argument, "shift must match a full-rank lattice");
  const double s2 = sigma * sigma;
  const double cutoff = 48.0;  // terms below e^{-48} of the peak are dropped

  std::vector<double> neg(shift.begin(), shift.end());
  for (auto& v : neg) v = -v;
  const std::vector<double> center = lattice.real_coords(neg);
  double bound = 2.0 * s2 * cutoff;
  double direct = 0.0;
  detail::sphere_search(lattice.cholesky(), center, bound,
                        [&](std::span<const std::int64_t>, double d) { direct += std::exp(-d / (2.0 * s2)); });

  const Lattice d = dual(lattice);
  const double dual_bound = cutoff / (2.0 * kPi * kPi * s2);
  double fourier = 0.0;
  for (const auto& p : enumerate_points(d, dual_bound)) {
    double norm = 0.0;
    double dot = 0.0;
    for (std::size_t i = 0; i < p.ambient.size(); ++i) {
      norm += p.ambient[i] * p.ambient[i];
      dot += p.ambient[i] * shift[i];
    }
    fourier += std::exp(-2.0 * kPi * kPi * s2 * norm) * std::cos(2.0 * kPi * dot);
  }
  const double n = static_cast<double>(lattice.rank());
  fourier *= std::pow(2.0 * kPi * s2, 0.5 * n) / lattice.volume();
  return std::abs(direct - fourier) / std::abs(direct);
}

}  // namespace latsec

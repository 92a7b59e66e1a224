#include "latsec/secrecy.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <memory>
#include <numbers>
#include <vector>

#include "latsec/catalog.hpp"
#include "latsec/error.hpp"
#include "latsec/theta.hpp"

namespace latsec {

namespace {

constexpr double kPi = std::numbers::pi;

std::optional<BigInt> exact_root(const BigInt& v, unsigned n) {
  if (v < 0) return std::nullopt;
  if (v == 0 || v == 1 || n == 1) return v;
  const double est = std::pow(v.convert_to<double>(), 1.0 / n);
  const auto base = static_cast<long long>(std::llround(est));
  for (long long r = std::max(0LL, base - 1); r <= base + 1; ++r) {
    if (boost::multiprecision::pow(BigInt(r), n) == v) return BigInt(r);
  }
  return std::nullopt;
}

// vol^{-4/n} as a rational, from vol^2 = V: c^n = V^{-2}.
std::optional<Rational> dual_norm_ratio(const Rational& volume_squared, unsigned n) {
  const BigInt num = boost::multiprecision::numerator(volume_squared);
  const BigInt den = boost::multiprecision::denominator(volume_squared);
  const auto rn = exact_root(num * num, n);
  const auto rd = exact_root(den * den, n);
  if (!rn || !rd) return std::nullopt;
  return Rational(*rd, *rn);
}

double golden_section_max(const std::function<double(double)>& f, double a, double b, double tol, double& best_x) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c);
  double fd = f(d);
  while (b - a > tol) {
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  best_x = fc >= fd ? c : d;
  return std::max(fc, fd);
}

std::optional<unsigned> parse_unsigned(std::string_view s) {
  if (s.empty() || s.size() > 4) return std::nullopt;
  unsigned v = 0;
  for (const char ch : s) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) return std::nullopt;
    v = v * 10 + static_cast<unsigned>(ch - '0');
  }
  return v;
}

}  // namespace

ThetaEvaluator cubic_evaluator(std::size_t n) {
  ThetaEvaluator ev;
  ev.name = "Z" + std::to_string(n);
  ev.n = n;
  ev.volume = 1.0;
  ev.cubic = true;
  ev.symmetry_point = 1.0;
  ev.log_theta = [n](double y) { return static_cast<double>(n) * std::log(jacobi_thetas_at(y).t3); };
  return ev;
}

ThetaEvaluator polynomial_evaluator(const ThetaPolynomial& p, std::string name) {
  ThetaEvaluator ev;
  ev.name = name.empty() ? "extremal" + std::to_string(p.n) : std::move(name);
  ev.n = p.n;
  ev.volume = 1.0;
  ev.polynomial = p;
  ev.symmetry_point = 1.0;
  ev.log_theta = [p](double y) { return p.log_evaluate(y); };
  return ev;
}

ThetaEvaluator closed_form_evaluator(std::string_view name) {
  const std::string key(name);
  if (key == "Leech" || key == "Lambda24") {
    ThetaEvaluator ev = polynomial_evaluator(extremal_theta(24), key);
    ev.log_theta = [key](double y) { return log_theta_closed_form(key, y); };
    return ev;
  }
  if (key == "E8") {
    ThetaEvaluator ev = polynomial_evaluator(extremal_theta(8), key);
    ev.log_theta = [key](double y) { return log_theta_closed_form(key, y); };
    return ev;
  }
  if (key.size() > 1 && key[0] == 'Z') {
    const auto n = parse_unsigned(std::string_view(key).substr(1));
    if (!n || *n == 0) throw Error(ErrorKind::unknown_name, "no closed form for " + key);
    return cubic_evaluator(*n);
  }
  if (key.size() > 1 && key[0] == 'D') {
    const auto n = parse_unsigned(std::string_view(key).substr(1));
    if (!n || *n < 2) throw Error(ErrorKind::unknown_name, "no closed form for " + key);
    ThetaEvaluator ev;
    ev.name = key;
    ev.n = *n;
    ev.volume = 2.0;
    if (*n == 4) ev.symmetry_point = std::pow(2.0, -0.5);
    ev.log_theta = [key](double y) { return log_theta_closed_form(key, y); };
    return ev;
  }
  throw Error(ErrorKind::unknown_name, "no closed form for " + key);
}

std::optional<double> dual_symmetry_point(const Lattice& lattice, const EnumerationOptions& options) {
  if (!lattice.is_square()) return std::nullopt;
  const auto n = static_cast<unsigned>(lattice.rank());
  const auto ratio = dual_norm_ratio(lattice.volume_squared(), n);
  if (!ratio) return std::nullopt;
  const Lattice d = dual(lattice);
  // Four times the minimum norm covers several shells for every lattice we enumerate.
  const Rational bound = min_norm_and_kissing(lattice, options).norm * 4;
  const QSeries a = theta_series(lattice, bound, options);
  const QSeries b = theta_series(d, bound * *ratio, options);
  std::int64_t matched = 0;
  for (std::size_t k = 0; k < a.counts.size(); ++k) {
    if (b.coefficient(Rational(static_cast<std::int64_t>(k), a.den) * *ratio) != a.counts[k]) return std::nullopt;
    matched += a.counts[k];
  }
  std::int64_t total_b = 0;
  for (const auto c : b.counts) total_b += c;
  if (total_b != matched) return std::nullopt;
  return std::pow(lattice.volume(), -2.0 / n);
}

ThetaEvaluator lattice_evaluator(const Lattice& lattice, const EnumerationOptions& options) {
  if (!lattice.is_square()) throw Error(ErrorKind::unsupported_rank, "secrecy analysis needs a full-rank lattice");
  ThetaEvaluator ev;
  ev.name = lattice.name();
  ev.n = lattice.rank();
  ev.volume = lattice.volume();
  const double nn = static_cast<double>(ev.n);

  if (lattice.is_cubic()) {
    const double c = to_double(lattice.gram()[0][0]);
    ev.cubic = true;
    ev.symmetry_point = 1.0 / c;
    ev.log_theta = [c, nn](double y) { return nn * std::log(jacobi_thetas_at(c * y).t3); };
    return ev;
  }

  const double pivot = std::pow(ev.volume, -2.0 / nn);
  auto direct = std::make_shared<QSeries>(theta_series_for(lattice, pivot, 1e-15, options));
  auto dual_side = std::make_shared<QSeries>(theta_series_for(dual(lattice), 1.0 / pivot, 1e-15, options));
  const double log_vol = std::log(ev.volume);
  ev.log_theta = [direct, dual_side, pivot, nn, log_vol](double y) {
    if (!(y > 0.0)) throw Error(ErrorKind::domain, "theta argument must satisfy y > 0");
    if (y >= pivot) return std::log(direct->evaluate(y));
    return -log_vol - 0.5 * nn * std::log(y) + std::log(dual_side->evaluate(1.0 / y));
  };

  if (lattice.is_even_unimodular()) {
    ThetaPolynomial shape = theta_polynomial_shape(static_cast<unsigned>(ev.n));
    std::vector<Rational> counts(shape.m + 1, Rational(0));
    if (shape.m > 0) {
      const QSeries s = theta_series(lattice, Rational(2 * static_cast<std::int64_t>(shape.m)), options);
      for (unsigned i = 0; i <= shape.m; ++i) counts[i] = s.coefficient(Rational(2 * static_cast<std::int64_t>(i)));
    }
    ev.polynomial = theta_polynomial_from_counts(static_cast<unsigned>(ev.n), counts);
    ev.symmetry_point = 1.0;
  } else {
    ev.symmetry_point = dual_symmetry_point(lattice, options);
  }
  return ev;
}

ThetaEvaluator evaluator_for(std::string_view name) {
  if (name.starts_with("extremal")) {
    const auto n = parse_unsigned(name.substr(8));
    if (!n) throw Error(ErrorKind::unknown_name, "unknown lattice: " + std::string(name));
    return polynomial_evaluator(extremal_theta(*n));
  }
  if (const auto n = parse_unsigned(name)) return polynomial_evaluator(extremal_theta(*n));
  if (name == "Leech" || name == "Lambda24") return closed_form_evaluator(name);
  return lattice_evaluator(lookup_lattice(name));
}

double log_secrecy_function(const ThetaEvaluator& theta, double y) {
  if (!(y > 0.0) || !std::isfinite(y)) throw Error(ErrorKind::domain, "secrecy function needs y > 0");
  const double n = static_cast<double>(theta.n);
  const double lambda2 = std::pow(theta.volume, 2.0 / n);
  if (theta.cubic) return 0.0;
  return n * std::log(jacobi_thetas_at(lambda2 * y).t3) - theta.log_theta(y);
}

double secrecy_function(const ThetaEvaluator& theta, double y) { return std::exp(log_secrecy_function(theta, y)); }

Rational weak_secrecy_gain(const ThetaPolynomial& p) {
  const Rational rho_e(3, 4);
  const Rational rho_d = pow2(-12);
  Rational inv = 0;
  for (unsigned j = 0; j <= p.m; ++j) {
    const Rational coef = j == 0 ? Rational(1) : p.b[j - 1];
    inv += coef * pow(rho_e, 3 * (p.m - j) + p.k) * pow(rho_d, j);
  }
  return 1 / inv;
}

WeakGain weak_secrecy_gain(const ThetaEvaluator& theta) {
  WeakGain g;
  if (theta.cubic) {
    g.exact = Rational(1);
    g.value = 1.0;
    g.y0 = theta.symmetry_point.value_or(1.0);
    return g;
  }
  if (theta.polynomial) {
    g.exact = weak_secrecy_gain(*theta.polynomial);
    g.value = to_double(*g.exact);
    g.y0 = 1.0;
    return g;
  }
  if (!theta.symmetry_point)
    throw Error(ErrorKind::requires_symmetry, "no symmetry point known for " + theta.name + "; use the strong gain");
  g.y0 = *theta.symmetry_point;
  g.value = secrecy_function(theta, g.y0);
  return g;
}

StrongGain strong_secrecy_gain(const ThetaEvaluator& theta, const StrongGainOptions& options) {
  StrongGain out;
  if (theta.cubic) {
    out.flat = true;
    out.value = 1.0;
    out.y_star = 1.0;
    return out;
  }
  const auto f = [&](double db) { return log_secrecy_function(theta, std::pow(10.0, db / 10.0)); };
  const auto steps = static_cast<std::size_t>(std::ceil((options.high_db - options.low_db) / options.grid_step_db));
  std::vector<double> xs(steps + 1);
  std::vector<double> fs(steps + 1);
  for (std::size_t i = 0; i <= steps; ++i) {
    xs[i] = std::min(options.high_db, options.low_db + options.grid_step_db * static_cast<double>(i));
    fs[i] = f(xs[i]);
  }
  const auto best = static_cast<std::size_t>(std::max_element(fs.begin(), fs.end()) - fs.begin());
  const double spread = fs[best] - *std::min_element(fs.begin(), fs.end());
  if (spread < 1e-12) {
    out.flat = true;
    out.value = std::exp(fs[best]);
    out.y_star = 1.0;
    return out;
  }
  const double slack = 1e-12 * std::max(1.0, std::abs(fs[best]));
  for (std::size_t i = 1; i <= steps; ++i) {
    const bool rising_side = i <= best;
    if (rising_side && fs[i] < fs[i - 1] - slack) out.unimodal = false;
    if (!rising_side && fs[i] > fs[i - 1] + slack) out.unimodal = false;
  }
  const double a = xs[best == 0 ? 0 : best - 1];
  const double b = xs[best == steps ? steps : best + 1];
  // A tolerance on log10 y of t is 10 t on the dB axis; refine well past it.
  double x_star = xs[best];
  const double value = golden_section_max(f, a, b, 0.1 * options.log10_tolerance, x_star);
  if (value >= fs[best]) {
    out.value = std::exp(value);
    out.y_star = std::pow(10.0, x_star / 10.0);
  } else {
    out.value = std::exp(fs[best]);
    out.y_star = std::pow(10.0, xs[best] / 10.0);
  }
  return out;
}

SecrecyGain secrecy_gain(const ThetaEvaluator& theta, const StrongGainOptions& options) {
  SecrecyGain g;
  g.name = theta.name;
  g.strong = strong_secrecy_gain(theta, options);
  if (theta.cubic || theta.polynomial || theta.symmetry_point) {
    const WeakGain w = weak_secrecy_gain(theta);
    g.weak_exact = w.exact;
    g.weak = w.value;
    g.y0 = w.y0;
    g.weak_strong_gap = std::abs(g.strong.value - w.value) / w.value;
  }
  return g;
}

double secrecy_gain_lower_bound(unsigned n) {
  if (n < 8 || n % 8 != 0 || n > 400) throw Error(ErrorKind::domain, "dimension must be a multiple of 8 in [8, 400]");
  const double q = std::exp(-kPi);
  return std::exp(n * std::log(jacobi_theta(3, q)) - std::log(eisenstein(n / 2, q)));
}

double secrecy_gain_asymptotic(unsigned n) { return 0.5 * std::exp(n * std::log(jacobi_theta(3, std::exp(-kPi)))); }

double secrecy_gain_asymptotic_rounded(unsigned n) { return 0.5 * std::pow(1.086, static_cast<double>(n)); }

double two_term_gain_approximation(unsigned n) {
  const KissingData k = kissing_data(extremal_theta(n));
  const double cubic = 1.0 + 2.0 * n * std::exp(-kPi);
  const double lattice = 1.0 + to_double(k.count) * std::exp(-kPi * k.norm);
  return cubic / lattice;
}

}  // namespace latsec

#include "latsec/modular.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "json.hpp"
#include "latsec/error.hpp"
#include "latsec/theta.hpp"

namespace latsec {

namespace {

constexpr unsigned kMaxBernoulli = 200;

const std::vector<Rational>& bernoulli_table() {
  static const std::vector<Rational> table = [] {
    std::vector<Rational> b(kMaxBernoulli + 1);
    b[0] = 1;
    for (unsigned l = 1; l <= kMaxBernoulli; ++l) {
      // Pascal row l+1 built incrementally: C(l+1, j).
      Rational acc = 0;
      BigInt binom = 1;
      for (unsigned j = 0; j < l; ++j) {
        acc += Rational(binom) * b[j];
        binom = binom * (l + 1 - j) / (j + 1);
      }
      b[l] = -acc / Rational(l + 1);
    }
    return b;
  }();
  return table;
}

Rational eisenstein_factor(unsigned k2) {
  if (k2 < 4 || k2 % 2 != 0 || k2 > kMaxBernoulli)
    throw Error(ErrorKind::domain, "Eisenstein weight must be even with 4 <= k <= 200");
  return Rational(-2 * static_cast<std::int64_t>(k2)) / bernoulli(k2);
}

long double eisenstein_long(unsigned k2, long double q, long double c) {
  long double sum = 0.0L;
  const long double q2 = q * q;
  long double qm = 1.0L;
  long double prev = 0.0L;
  for (unsigned m = 1;; ++m) {
    qm *= q2;
    const long double term = c * std::pow(static_cast<long double>(m), static_cast<long double>(k2 - 1)) * qm / (1.0L - qm);
    sum += term;
    const long double mag = std::fabs(term);
    if (m >= 50 && mag <= prev && mag <= 1e-22L * std::fabs(1.0L + sum)) break;
    prev = mag;
  }
  return 1.0L + sum;
}

std::string power_term(const char* base, unsigned e) {
  if (e == 0) return {};
  if (e == 1) return base;
  return std::string(base) + "^" + std::to_string(e);
}

}  // namespace

Rational bernoulli(unsigned l) {
  if (l > kMaxBernoulli) throw Error(ErrorKind::domain, "Bernoulli index limited to 200");
  return bernoulli_table()[l];
}

double eisenstein(unsigned k2, double q) {
  if (!(q > 0.0 && q < 1.0)) throw Error(ErrorKind::domain, "Eisenstein series needs 0 < q < 1");
  const Rational c = eisenstein_factor(k2);
  const double sign = c < 0 ? -1.0 : 1.0;
  const double log_c = log_abs(c);
  const double log_q2 = 2.0 * std::log(q);
  double sum = 0.0;
  double prev = 0.0;
  bool past_peak = false;
  for (unsigned m = 1;; ++m) {
    const double lm = log_q2 * m;
    const double log_term = log_c + (k2 - 1.0) * std::log(static_cast<double>(m)) + lm - std::log1p(-std::exp(lm));
    const double term = std::exp(log_term);
    sum += sign * term;
    if (m > 1 && term < prev) past_peak = true;
    if (past_peak && m >= 50 && term <= 1e-18 * std::abs(1.0 + sum)) break;
    prev = term;
  }
  return 1.0 + sum;
}

double discriminant_delta(double q) {
  if (!(q > 0.0 && q < 1.0)) throw Error(ErrorKind::domain, "discriminant needs 0 < q < 1");
  const ThetaTriple t = jacobi_thetas_at(-std::log(q) / std::numbers::pi);
  return std::pow(t.t2 * t.t3 * t.t4, 8) / 256.0;
}

double discriminant_delta_eisenstein(double q) {
  if (!(q > 0.0 && q < 1.0)) throw Error(ErrorKind::domain, "discriminant needs 0 < q < 1");
  const long double e4 = eisenstein_long(4, q, 240.0L);
  const long double e6 = eisenstein_long(6, q, -504.0L);
  return static_cast<double>((e4 * e4 * e4 - e6 * e6) / 1728.0L);
}

ExactSeries eisenstein_expansion(unsigned k2, std::size_t order) {
  const Rational c = eisenstein_factor(k2);
  ExactSeries out(order + 1, Rational(0));
  out[0] = 1;
  for (std::size_t m = 1; m <= order; ++m) {
    BigInt sigma = 0;
    for (std::size_t d = 1; d <= m; ++d) {
      if (m % d == 0) sigma += boost::multiprecision::pow(BigInt(d), k2 - 1);
    }
    out[m] = c * Rational(sigma);
  }
  return out;
}

ExactSeries series_multiply(const ExactSeries& a, const ExactSeries& b, std::size_t order) {
  ExactSeries out(order + 1, Rational(0));
  for (std::size_t i = 0; i < a.size() && i <= order; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size() && i + j <= order; ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

ExactSeries series_power(const ExactSeries& a, unsigned e, std::size_t order) {
  ExactSeries result(order + 1, Rational(0));
  result[0] = 1;
  ExactSeries base = a;
  base.resize(order + 1, Rational(0));
  while (e > 0) {
    if (e & 1u) result = series_multiply(result, base, order);
    e >>= 1;
    if (e > 0) base = series_multiply(base, base, order);
  }
  return result;
}

ExactSeries delta_expansion(std::size_t order) {
  const ExactSeries e4 = eisenstein_expansion(4, order);
  const ExactSeries e6 = eisenstein_expansion(6, order);
  const ExactSeries e4c = series_power(e4, 3, order);
  const ExactSeries e6s = series_power(e6, 2, order);
  ExactSeries out(order + 1);
  for (std::size_t i = 0; i <= order; ++i) out[i] = (e4c[i] - e6s[i]) / 1728;
  return out;
}

ThetaPolynomial theta_polynomial_shape(unsigned n) {
  if (n == 0 || n % 8 != 0 || n > 200) throw Error(ErrorKind::domain, "dimension must be a positive multiple of 8, at most 200");
  ThetaPolynomial p;
  p.n = n;
  p.m = n / 24;
  p.k = (n % 24) / 8;
  p.b.assign(p.m, Rational(0));
  return p;
}

ExactSeries ThetaPolynomial::expansion(std::size_t order) const {
  const ExactSeries e4 = eisenstein_expansion(4, order);
  const ExactSeries delta = delta_expansion(order);
  ExactSeries out(order + 1, Rational(0));
  for (unsigned j = 0; j <= m; ++j) {
    const Rational coef = j == 0 ? Rational(1) : b[j - 1];
    if (coef == 0) continue;
    const ExactSeries term =
        series_multiply(series_power(e4, 3 * (m - j) + k, order), series_power(delta, j, order), order);
    for (std::size_t i = 0; i <= order; ++i) out[i] += coef * term[i];
  }
  return out;
}

double ThetaPolynomial::log_evaluate(double y) const {
  const ThetaTriple t = jacobi_thetas_at(y);
  const double r2 = std::pow(t.t2 / t.t3, 8);
  const double r4 = std::pow(t.t4 / t.t3, 8);
  const double s = 1.0 + r2 + r4;
  // E4 = theta_3^8 s / 2 and Delta / E4^3 = r2 r4 / (32 s^3).
  const double ratio = r2 * r4 / (32.0 * s * s * s);
  double poly = 0.0;
  for (unsigned j = m + 1; j-- > 0;) {
    const double coef = j == 0 ? 1.0 : to_double(b[j - 1]);
    poly = poly * ratio + coef;
  }
  const double log_e4 = 8.0 * std::log(t.t3) + std::log(0.5 * s);
  return (3.0 * m + k) * log_e4 + std::log(poly);
}

double ThetaPolynomial::evaluate(double y) const { return std::exp(log_evaluate(y)); }

std::string ThetaPolynomial::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (unsigned j = 0; j <= m; ++j) {
    const Rational coef = j == 0 ? Rational(1) : b[j - 1];
    if (coef == 0) continue;
    std::string monomial = power_term("E4", 3 * (m - j) + k);
    const std::string d = power_term("Delta", j);
    if (!d.empty()) monomial = monomial.empty() ? d : monomial + "*" + d;
    if (monomial.empty()) monomial = "1";

    const Rational mag = coef < 0 ? Rational(-coef) : coef;
    std::string factor;
    if (mag != 1 || monomial == "1") {
      factor = is_integer(mag) ? format_rational(mag) : "(" + format_rational(mag) + ")";
      if (monomial != "1") factor += "*";
    }
    if (first) {
      out << (coef < 0 ? "-" : "");
    } else {
      out << (coef < 0 ? " - " : " + ");
    }
    out << factor << (monomial == "1" && !factor.empty() ? "" : monomial);
    first = false;
  }
  return out.str();
}

std::string ThetaPolynomial::to_json() const {
  nlohmann::json j;
  j["n"] = n;
  j["m"] = m;
  j["k"] = k;
  nlohmann::json coeffs = nlohmann::json::array();
  for (const auto& v : b) coeffs.push_back(format_rational(v));
  j["b"] = std::move(coeffs);
  return j.dump();
}

ThetaPolynomial ThetaPolynomial::from_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::parse, e.what());
  }
  if (!j.is_object() || !j.contains("n") || !j.contains("b")) throw Error(ErrorKind::parse, "theta polynomial needs n and b");
  ThetaPolynomial p = theta_polynomial_shape(j["n"].get<unsigned>());
  if ((j.contains("m") && j["m"].get<unsigned>() != p.m) || (j.contains("k") && j["k"].get<unsigned>() != p.k))
    throw Error(ErrorKind::parse, "m and k do not match n = 24m + 8k");
  const auto coeffs = j["b"].get<std::vector<std::string>>();
  if (coeffs.size() != p.m) throw Error(ErrorKind::parse, "b must hold exactly m coefficients");
  for (std::size_t i = 0; i < coeffs.size(); ++i) p.b[i] = parse_rational(coeffs[i]);
  return p;
}

ThetaPolynomial theta_polynomial_from_counts(unsigned n, const std::vector<Rational>& counts) {
  ThetaPolynomial p = theta_polynomial_shape(n);
  const std::size_t order = p.m;
  if (counts.size() < order + 1) throw Error(ErrorKind::invalid_argument, "need counts up to norm 2m");
  const ExactSeries e4 = eisenstein_expansion(4, order);
  const ExactSeries delta = delta_expansion(order);
  std::vector<ExactSeries> basis;
  for (unsigned j = 0; j <= p.m; ++j)
    basis.push_back(series_multiply(series_power(e4, 3 * (p.m - j) + p.k, order), series_power(delta, j, order), order));
  // Delta^j starts at Q^j with coefficient 1, so the system is unit lower triangular.
  for (unsigned i = 1; i <= p.m; ++i) {
    Rational acc = basis[0][i];
    for (unsigned j = 1; j < i; ++j) acc += p.b[j - 1] * basis[j][i];
    p.b[i - 1] = (counts[i] - acc) / basis[i][i];
  }
  return p;
}

ThetaPolynomial extremal_theta(unsigned n) {
  const ThetaPolynomial shape = theta_polynomial_shape(n);
  return theta_polynomial_from_counts(n, std::vector<Rational>(shape.m + 1, Rational(0)));
}

KissingData kissing_data(const ThetaPolynomial& p) {
  const std::size_t order = p.m + 8;
  const ExactSeries s = p.expansion(order);
  for (std::size_t i = 1; i <= order; ++i) {
    if (s[i] != 0) return KissingData{static_cast<unsigned>(2 * i), s[i]};
  }
  throw Error(ErrorKind::domain, "no nonzero coefficient within the expansion window");
}

}  // namespace latsec

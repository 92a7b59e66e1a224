#include <cmath>
#include <vector>

#include "doctest.h"
#include "latsec/catalog.hpp"
#include "latsec/error.hpp"
#include "latsec/modular.hpp"
#include "latsec/secrecy.hpp"
#include "latsec/theta.hpp"

using namespace latsec;

namespace {
const double kPi = std::acos(-1.0);
const double kQ = std::exp(-kPi);

double rel(double a, double b) { return std::fabs(a - b) / std::fabs(b); }
}  // namespace

TEST_SUITE("jacobi theta") {
  TEST_CASE("constants at e^-pi") {
    const double t2 = jacobi_theta(2, kQ), t3 = jacobi_theta(3, kQ), t4 = jacobi_theta(4, kQ);
    CHECK(rel(t3, std::pow(kPi, 0.25) / std::tgamma(0.75)) < 1e-12);
    CHECK(rel(t2, t4) < 1e-12);
    CHECK(rel(t3, std::pow(2.0, 0.25) * t4) < 1e-12);
    CHECK(t3 == doctest::Approx(1.0864348).epsilon(1e-7));
  }
  TEST_CASE("Jacobi quartic identity") {
    for (double y : {0.05, 0.3, 1.0, 4.0}) {
      const auto t = jacobi_thetas_at(y);
      CHECK(rel(std::pow(t.t3, 4), std::pow(t.t2, 4) + std::pow(t.t4, 4)) < 1e-12);
    }
  }
  TEST_CASE("domain") {
    CHECK_THROWS_AS(jacobi_theta(3, 1.0), Error);
    CHECK_THROWS_AS(jacobi_theta(1, 0.5), Error);
    CHECK_THROWS_AS(jacobi_thetas_at(-1.0), Error);
  }
}

TEST_SUITE("theta series") {
  TEST_CASE("enumeration agrees with closed forms") {
    CHECK(rel(theta_enum(cubic_lattice(1), 1.0), jacobi_theta(3, kQ)) < 1e-12);
    for (const char* name : {"Z3", "D2", "D4", "D8", "E8"}) {
      for (double y : {0.7, 1.3}) CHECK(rel(theta_enum(lookup_lattice(name), y), theta_closed_form(name, y)) < 1e-11);
    }
  }
  TEST_CASE("Leech at y = 1") {
    const double ratio = theta_closed_form("Leech", 1.0) / std::pow(jacobi_theta(3, kQ), 24);
    CHECK(rel(ratio, 63.0 / 256.0) < 1e-12);
  }
  TEST_CASE("q-series coefficients") {
    const QSeries s = theta_series(gosset_lattice(), Rational(6));
    CHECK(s.coefficient(Rational(0)) == 1);
    CHECK(s.coefficient(Rational(2)) == 240);
    CHECK(s.coefficient(Rational(4)) == 2160);
    CHECK(s.coefficient(Rational(6)) == 6720);
    CHECK(s.coefficient(Rational(3)) == 0);
  }
  TEST_CASE("identities") {
    CHECK(jacobi_identity_residual(cubic_lattice(4), 1.0) < 1e-10);
    CHECK(jacobi_identity_residual(lookup_lattice("D4"), 0.7) < 1e-9);
    CHECK(jacobi_identity_residual(gosset_lattice(), 2.0) < 1e-9);
    const std::vector<double> u1{0.3}, u2{0.3, 0.3};
    CHECK(poisson_summation_residual(cubic_lattice(1), 1.0, u1) < 1e-9);
    CHECK(poisson_summation_residual(cubic_lattice(2), 0.5, u2) < 1e-9);
  }
}

TEST_SUITE("modular forms") {
  TEST_CASE("Bernoulli numbers") {
    CHECK(bernoulli(0) == 1);
    CHECK(bernoulli(1) == Rational(-1, 2));
    CHECK(bernoulli(4) == Rational(-1, 30));
    CHECK(bernoulli(6) == Rational(1, 42));
    CHECK(bernoulli(7) == 0);
    const double b80 = std::fabs(to_double(bernoulli(80)));
    const double asym = 2.0 * std::exp(std::lgamma(81.0) - 80.0 * std::log(2.0 * kPi));
    CHECK(rel(b80, asym) < 0.01);
  }
  TEST_CASE("Eisenstein series") {
    const double t3 = jacobi_theta(3, kQ);
    CHECK(rel(eisenstein(4, kQ) / std::pow(t3, 8), 0.75) < 1e-12);
    const ExactSeries e4 = eisenstein_expansion(4, 3);
    CHECK(e4[0] == 1);
    CHECK(e4[1] == 240);
    CHECK(e4[2] == 2160);
    for (unsigned k : {40u, 80u, 120u}) {
      const double v = eisenstein(k, kQ);
      CHECK(v > 1.9);
      CHECK(v < 2.1);
    }
  }
  TEST_CASE("discriminant") {
    const double t3 = jacobi_theta(3, kQ);
    CHECK(rel(discriminant_delta(kQ) / std::pow(t3, 24), std::pow(2.0, -12)) < 1e-12);
    for (int i = 0; i < 20; ++i) {
      const double q = std::exp(-kPi * (0.3 + 0.2 * i));
      CHECK(rel(discriminant_delta(q), discriminant_delta_eisenstein(q)) < 1e-10);
    }
    const ExactSeries d = delta_expansion(4);
    CHECK(d[0] == 0);
    CHECK(d[1] == 1);
    CHECK(d[2] == -24);
  }
  TEST_CASE("extremal polynomials") {
    CHECK(extremal_theta(24).to_string() == "E4^3 - 720*Delta");
    CHECK(extremal_theta(48).b == std::vector<Rational>{-1440, 125280});
    CHECK(extremal_theta(80).b == std::vector<Rational>{-2400, 1360800, -103488000});
    const auto k = kissing_data(extremal_theta(80));
    CHECK(k.norm == 8);
    CHECK(k.count == 1250172000);
    CHECK(kissing_data(extremal_theta(24)).count == 196560);
  }
  TEST_CASE("extremal expansions vanish through order m") {
    for (unsigned n : {8u, 16u, 24u, 32u, 48u, 72u, 80u, 120u}) {
      const ThetaPolynomial p = extremal_theta(n);
      const ExactSeries s = p.expansion(p.m + 1);
      CHECK(s[0] == 1);
      for (unsigned i = 1; i <= p.m; ++i) CHECK(s[i] == 0);
      CHECK(s[p.m + 1] > 0);
    }
  }
  TEST_CASE("polynomial from counts recovers E8 squared") {
    const auto e8sq = theta_series(direct_sum(gosset_lattice(), gosset_lattice()), Rational(2));
    const ThetaPolynomial p = theta_polynomial_from_counts(16, {Rational(e8sq.coefficient(Rational(2)))});
    CHECK(p.b.empty());
    CHECK(p.k == 2);
  }
  TEST_CASE("json round trip and shape errors") {
    const ThetaPolynomial p = extremal_theta(72);
    const ThetaPolynomial q = ThetaPolynomial::from_json(p.to_json());
    CHECK(q.b == p.b);
    CHECK(q.n == 72);
    CHECK_THROWS_AS(theta_polynomial_shape(12), Error);
    CHECK_THROWS_AS(ThetaPolynomial::from_json("{\"n\": 24, \"b\": []}"), Error);
  }
  TEST_CASE("log evaluation matches the q expansion") {
    const ThetaPolynomial p = extremal_theta(24);
    const ExactSeries s = p.expansion(12);
    for (double y : {1.0, 2.0}) {
      double direct = 0;
      for (std::size_t i = 0; i < s.size(); ++i) direct += to_double(s[i]) * std::exp(-2.0 * kPi * y * static_cast<double>(i));
      CHECK(rel(p.evaluate(y), direct) < 1e-12);
    }
    CHECK(rel(p.evaluate(1.0), theta_closed_form("Leech", 1.0)) < 1e-12);
  }
}

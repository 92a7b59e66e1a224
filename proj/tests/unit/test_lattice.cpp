#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "latsec/binary_code.hpp"
#include "latsec/catalog.hpp"
#include "latsec/closest_point.hpp"
#include "latsec/coset.hpp"
#include "latsec/enumerate.hpp"
#include "latsec/error.hpp"
#include "latsec/lattice.hpp"
#include "latsec/matrix.hpp"
#include "latsec/rational.hpp"
#include "latsec/rng.hpp"
#include "latsec/theta.hpp"

using namespace latsec;

namespace {

std::map<Rational, std::int64_t> shell_counts(const Lattice& l, const Rational& bound) {
  std::map<Rational, std::int64_t> out;
  for (const auto& p : enumerate_points(l, bound)) ++out[l.norm(p.coords)];
  return out;
}

// Every vector of 2Z^n + C with norm <= bound, by brute force over codewords
// and small even offsets.
std::map<int, std::int64_t> brute_construction_a(const BinaryCode& code, int bound) {
  const std::size_t n = code.length();
  std::map<int, std::int64_t> out;
  for (const auto& c : code.codewords()) {
    std::vector<int> x(n);
    // Each coordinate is c_i + 2t with t in {-2, -1, 0, 1}.
    const int choices = 4;
    long long total = 1;
    for (std::size_t i = 0; i < n; ++i) total *= choices;
    for (long long idx = 0; idx < total; ++idx) {
      long long r = idx;
      int norm = 0;
      for (std::size_t i = 0; i < n; ++i) {
        const int t = static_cast<int>(r % choices) - 2;
        r /= choices;
        x[i] = c[i] + 2 * t;
        norm += x[i] * x[i];
      }
      if (norm <= bound) ++out[norm];
    }
  }
  return out;
}

}  // namespace

TEST_SUITE("rational") {
  TEST_CASE("parse and format round trip") {
    CHECK(format_rational(parse_rational("-6/4")) == "-3/2");
    CHECK(format_rational(parse_rational("7")) == "7");
    CHECK(pow2(-3) == Rational(1, 8));
    CHECK(is_integer(Rational(4, 2)));
    CHECK_THROWS_AS(parse_rational("1/0"), Error);
    CHECK_THROWS_AS(parse_rational("x"), Error);
  }
}

TEST_SUITE("matrix") {
  TEST_CASE("inverse and determinant are exact") {
    const RationalMatrix a = mat::from_int({{2, 1}, {1, 1}});
    CHECK(mat::determinant(a) == 1);
    CHECK(mat::multiply(a, mat::inverse(a)) == mat::identity(2));
  }
  TEST_CASE("smith normal form of 2I over a skew basis") {
    const auto snf = mat::smith_normal_form({{2, 0}, {2, 4}});
    CHECK(snf.diagonal == std::vector<std::int64_t>{2, 4});
    CHECK(mat::multiply(snf.right, snf.right_inverse) == IntMatrix{{1, 0}, {0, 1}});
  }
}

TEST_SUITE("binary code") {
  TEST_CASE("parameters") {
    const BinaryCode rm = reed_muller_8_4_4();
    CHECK(rm.length() == 8);
    CHECK(rm.dimension() == 4);
    CHECK(rm.min_distance() == 4);
    CHECK(rm.dual().dimension() == 4);
    CHECK(rm.contains(Bits{1, 1, 1, 1, 1, 1, 1, 1}));
    CHECK_THROWS_AS(BinaryCode::from_strings(4, {"1100", "1100"}), Error);
  }
  TEST_CASE("nesting codes follow the tower") {
    const std::vector<std::size_t> dmin = {0, 8, 4, 4, 4, 2, 2, 2, 1};
    for (std::size_t k = 1; k <= 8; ++k) CHECK(nesting_code(k).min_distance() == dmin[k]);
    CHECK(nesting_code(3).dual().dimension() == 5);
    for (const auto& w : nesting_code(5).dual().codewords()) CHECK(nesting_code(3).contains(w));
  }
}

TEST_SUITE("lattice") {
  TEST_CASE("volumes") {
    CHECK(volume(cubic_lattice(5)) == doctest::Approx(1.0));
    CHECK(volume(lookup_lattice("D4")) == doctest::Approx(2.0));
    CHECK(volume(gosset_lattice()) == doctest::Approx(1.0));
    CHECK(gosset_lattice().volume_squared() == 1);
    CHECK(gosset_lattice().is_even_unimodular());
    CHECK_FALSE(lookup_lattice("D4").is_even_unimodular());
  }

  TEST_CASE("dual of Zn is Zn and of E8 has E8's shells") {
    const Lattice z3 = dual(cubic_lattice(3));
    CHECK(z3.gram() == cubic_lattice(3).gram());
    const Lattice e8 = gosset_lattice();
    CHECK(shell_counts(dual(e8), Rational(20)) == shell_counts(e8, Rational(20)));
  }

  TEST_CASE("D4 dual obeys the Jacobi identity") {
    const Lattice d4 = lookup_lattice("D4");
    const Lattice d4s = dual(d4);
    for (double y : {0.5, 1.0, 2.0}) {
      const double lhs = theta_enum(d4s, y);
      const double rhs = theta_enum(d4, 1.0 / y) / (volume(d4s) * y * y);
      CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
    }
  }

  TEST_CASE("construction A examples") {
    const Lattice z2 = construction_a(BinaryCode::from_strings(2, {"10", "01"}));
    CHECK(z2.volume_squared() == 1);
    CHECK(z2.gram() == cubic_lattice(2).gram());
    const Lattice d2 = construction_a(BinaryCode::from_strings(2, {"11"}));
    CHECK(volume(d2) == doctest::Approx(2.0));
    CHECK(contains(lookup_lattice("D2"), d2));
    CHECK(contains(d2, lookup_lattice("D2")));
  }

  TEST_CASE("construction A of Reed-Muller matches brute force and sqrt2 E8") {
    const Lattice l = construction_a(reed_muller_8_4_4());
    const auto counts = shell_counts(l, Rational(4));
    CHECK(counts.at(Rational(4)) == 240);
    const auto brute = brute_construction_a(reed_muller_8_4_4(), 4);
    CHECK(brute.at(4) == 240);
    CHECK(brute.count(2) == 0);
    CHECK(shell_counts(lookup_lattice("sqrt2E8"), Rational(8)) == shell_counts(l, Rational(8)));
  }

  TEST_CASE("unsupported rank") {
    CHECK_THROWS_AS(Lattice(mat::from_int({{1, 0}, {2, 0}})), Error);
    CHECK_THROWS_AS(dual(Lattice(mat::from_int({{1, 0, 0}}))), Error);
  }

  TEST_CASE("json round trip") {
    const Lattice l = lookup_lattice("2(D4*)^2");
    const Lattice back = lattice_from_json(lattice_to_json(l));
    CHECK(back.gram() == l.gram());
    const BinaryCode c = nesting_code(5);
    CHECK(code_from_json(code_to_json(c)).generator() == c.generator());
    CHECK_THROWS_AS(lattice_from_json("{\"basis\": 3}"), Error);
  }
}

TEST_SUITE("enumeration") {
  TEST_CASE("small balls") {
    const auto z1 = enumerate_points(cubic_lattice(1), Rational(1));
    REQUIRE(z1.size() == 3);
    CHECK(z1[0].coords[0] == -1);
    CHECK(z1[2].coords[0] == 1);
    CHECK(enumerate_points(gosset_lattice(), Rational(2)).size() == 241);
    CHECK(enumerate_points(lookup_lattice("D4"), Rational(2)).size() == 25);
  }

  TEST_CASE("minimum norm and kissing number") {
    for (std::size_t n : {1u, 4u, 8u, 80u}) {
      const auto m = min_norm_and_kissing(cubic_lattice(n));
      CHECK(m.norm == 1);
      CHECK(m.kissing == static_cast<std::int64_t>(2 * n));
    }
    CHECK(min_norm_and_kissing(gosset_lattice()).kissing == 240);
    CHECK(min_norm_and_kissing(gosset_lattice()).norm == 2);
    CHECK(min_norm_and_kissing(lookup_lattice("D4")).kissing == 24);
    CHECK(min_norm_and_kissing(l8_lattice()).kissing == 16);
  }

  TEST_CASE("budget") {
    EnumerationOptions opts;
    opts.max_points = 100;
    CHECK_THROWS_AS(enumerate_points(gosset_lattice(), Rational(4), opts), Error);
  }
}

TEST_SUITE("closest point") {
  TEST_CASE("examples") {
    const std::vector<double> a{0.4, -0.6};
    const auto p = closest_point(cubic_lattice(2), a);
    CHECK(p.coords == IntVector{0, -1});
    const std::vector<double> b{0.9, 0.9};
    const auto q = closest_point(lookup_lattice("D2"), b);
    CHECK(q.ambient[0] == doctest::Approx(1.0));
    CHECK(q.ambient[1] == doctest::Approx(1.0));
  }

  TEST_CASE("E8 decodes inside the packing radius") {
    const Lattice e8 = gosset_lattice();
    CounterRng rng(99);
    for (int t = 0; t < 300; ++t) {
      IntVector c(8);
      for (auto& v : c) v = rng.uniform_int(-3, 3);
      const auto x = make_point(e8, c);
      std::vector<double> y = x.ambient;
      std::vector<double> e(8);
      double norm = 0;
      for (auto& v : e) {
        v = rng.gaussian();
        norm += v * v;
      }
      const double scale = 0.7 * rng.uniform() / std::sqrt(norm);
      for (std::size_t i = 0; i < 8; ++i) y[i] += scale * e[i];
      CHECK(closest_point(e8, y).coords == c);
    }
  }

  TEST_CASE("fast paths agree with the sphere decoder") {
    CounterRng rng(5);
    for (const char* name : {"Z4", "D4", "L8", "D4^2", "sqrt2E8", "E8"}) {
      const Lattice l = lookup_lattice(name);
      for (int t = 0; t < 100; ++t) {
        std::vector<double> y(l.dimension());
        for (auto& v : y) v = 4.0 * (rng.uniform() - 0.5);
        const auto a = closest_point(l, y);
        const auto b = closest_point_sphere(l, y);
        double da = 0, db = 0;
        for (std::size_t i = 0; i < y.size(); ++i) {
          da += (a.ambient[i] - y[i]) * (a.ambient[i] - y[i]);
          db += (b.ambient[i] - y[i]) * (b.ambient[i] - y[i]);
        }
        CHECK(da == doctest::Approx(db).epsilon(1e-12));
      }
    }
  }
}

TEST_SUITE("coset labels") {
  TEST_CASE("Z2 over 2Z2") {
    const Lattice z2 = cubic_lattice(2);
    const Lattice two = lookup_lattice("2Z2");
    const auto p = make_point(z2, {2, 3});
    const auto q = make_point(z2, {0, 1});
    CHECK(coset_label(z2, two, p) == coset_label(z2, two, q));
    CHECK(coset_label(z2, two, make_point(z2, {0, 0})) == 0);
  }

  TEST_CASE("E8 over 2E8 has 256 distinct labels") {
    const CosetIndexer idx(gosset_lattice(), lookup_lattice("2E8"));
    CHECK(idx.size() == 256);
    CHECK(idx.bits() == 8);
    std::set<std::uint64_t> seen;
    for (std::uint64_t l = 0; l < 256; ++l) {
      CHECK(idx.label(idx.representative_coords(l)) == l);
      seen.insert(l);
    }
    CHECK(seen.size() == 256);
  }

  TEST_CASE("bit conversions") {
    CHECK(label_to_bits(1, 2) == std::vector<std::uint8_t>{0, 1});
    const std::vector<std::uint8_t> b{1, 0, 1};
    CHECK(bits_to_label(b) == 5);
  }

  TEST_CASE("errors") {
    CHECK_THROWS_AS(CosetIndexer(lookup_lattice("2Z2"), cubic_lattice(2)), Error);
    CHECK_THROWS_AS(CosetIndexer(cubic_lattice(2), lookup_lattice("3Z2")), Error);
    CHECK_THROWS_AS(CosetIndexer(cubic_lattice(2), cubic_lattice(3)), Error);
  }
}

TEST_SUITE("catalog") {
  TEST_CASE("tower volumes double at every step") {
    const auto tower = nesting_tower();
    REQUIRE(tower.size() == 9);
    Rational expected = 1;
    for (const auto& t : tower) {
      const Lattice l = lookup_lattice(t.lattice_name);
      CHECK(l.volume_squared() == expected);
      expected *= 4;
      const Lattice a = construction_a(t.code_dimension == 0 ? BinaryCode(8, {}) : nesting_code(t.code_dimension));
      CHECK(shell_counts(a, Rational(8)) == shell_counts(l, Rational(8)));
    }
  }

  TEST_CASE("unknown names") {
    CHECK_THROWS_AS(lookup_lattice("Q7"), Error);
    CHECK_THROWS_AS(lookup_lattice("(D4"), Error);
  }

  TEST_CASE("nesting matrix asset is bit exact") {
    std::ifstream f(LATSEC_ASSET_DIR "/nesting_matrix.json");
    REQUIRE(f.good());
    const auto j = nlohmann::json::parse(f);
    CHECK(j["version"] == 1);
    const auto& rows = nesting_rows();
    for (std::size_t i = 0; i < 8; ++i) {
      std::string s;
      for (auto b : rows[i]) s.push_back(static_cast<char>('0' + b));
      CHECK(j["rows"]["g" + std::to_string(i)].get<std::string>() == s);
    }
    const auto tower = nesting_tower();
    REQUIRE(j["tower"].size() == tower.size());
    for (std::size_t t = 0; t < tower.size(); ++t) {
      const auto& e = j["tower"][t];
      CHECK(e["lattice"].get<std::string>() == tower[t].lattice_name);
      CHECK(e["kappa"].get<std::size_t>() == tower[t].code_dimension);
      if (tower[t].code_dimension > 0)
        CHECK(e["generator_rows"].get<std::vector<std::string>>() ==
              nesting_code(tower[t].code_dimension).generator_strings());
    }
  }
}

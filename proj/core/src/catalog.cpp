#include "latsec/catalog.hpp"

#include <cctype>

#include "json.hpp"
#include "latsec/error.hpp"

namespace latsec {

namespace {

Bits bits_of(std::string_view s) {
  Bits out;
  for (const char c : s) out.push_back(static_cast<std::uint8_t>(c == '1'));
  return out;
}

std::size_t parse_count(std::string_view digits, std::string_view whole) {
  if (digits.empty() || digits.size() > 4) throw Error(ErrorKind::unknown_name, "unknown lattice: " + std::string(whole));
  std::size_t v = 0;
  for (const char c : digits) {
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw Error(ErrorKind::unknown_name, "unknown lattice: " + std::string(whole));
    v = v * 10 + static_cast<std::size_t>(c - '0');
  }
  return v;
}

std::size_t leading_digits(std::string_view s) {
  std::size_t i = 0;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
  return i;
}

Lattice parse_core(std::string_view s, std::string_view whole) {
  const auto unknown = [&] { return Error(ErrorKind::unknown_name, "unknown lattice: " + std::string(whole)); };
  if (s.empty()) throw unknown();

  std::optional<Lattice> base;
  std::size_t pos = 0;
  if (s[0] == '(') {
    int depth = 0;
    std::size_t close = std::string_view::npos;
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s[i] == '(') ++depth;
      if (s[i] == ')' && --depth == 0) {
        close = i;
        break;
      }
    }
    if (close == std::string_view::npos) throw unknown();
    base = lookup_lattice(s.substr(1, close - 1));
    pos = close + 1;
  } else {
    const char head = s[0];
    const std::size_t len = leading_digits(s.substr(1));
    const std::size_t n = parse_count(s.substr(1, len), whole);
    pos = 1 + len;
    if (head == 'Z' && n >= 1) {
      base = cubic_lattice(n);
    } else if (head == 'D' && n >= 2) {
      base = checkerboard_lattice(n);
    } else if (head == 'E' && n == 8) {
      base = gosset_lattice();
    } else if (head == 'L' && n == 8) {
      base = l8_lattice();
    } else {
      throw unknown();
    }
  }

  while (pos < s.size()) {
    if (s[pos] == '*') {
      base = dual(*base);
      ++pos;
    } else if (s[pos] == '^') {
      const std::size_t len = leading_digits(s.substr(pos + 1));
      const std::size_t k = parse_count(s.substr(pos + 1, len), whole);
      if (k == 0) throw unknown();
      Lattice acc = *base;
      for (std::size_t i = 1; i < k; ++i) acc = direct_sum(acc, *base);
      base = acc;
      pos += 1 + len;
    } else {
      throw unknown();
    }
  }
  return *base;
}

}  // namespace

const std::array<Bits, 8>& nesting_rows() {
  static const std::array<Bits, 8> rows = {
      bits_of("00000001"), bits_of("00010001"), bits_of("00000011"), bits_of("00000101"),
      bits_of("00110011"), bits_of("01010101"), bits_of("00001111"), bits_of("11111111"),
  };
  return rows;
}

BinaryCode nesting_code(std::size_t kappa) {
  if (kappa > 8) throw Error(ErrorKind::invalid_argument, "code dimension must be at most 8");
  const auto& rows = nesting_rows();
  return BinaryCode(8, std::vector<Bits>(rows.end() - static_cast<std::ptrdiff_t>(kappa), rows.end()));
}

BinaryCode reed_muller_8_4_4() { return nesting_code(4); }

Lattice cubic_lattice(std::size_t n) {
  if (n == 0) throw Error(ErrorKind::invalid_argument, "dimension must be positive");
  IntMatrix b(n, IntVector(n, 0));
  for (std::size_t i = 0; i < n; ++i) b[i][i] = 1;
  return Lattice::from_int(b, 0, "Z" + std::to_string(n));
}

Lattice checkerboard_lattice(std::size_t n) {
  if (n < 2) throw Error(ErrorKind::invalid_argument, "checkerboard lattice needs n >= 2");
  IntMatrix b(n, IntVector(n, 0));
  b[0][0] = -1;
  b[0][1] = -1;
  for (std::size_t i = 1; i < n; ++i) {
    b[i][i - 1] = 1;
    b[i][i] = -1;
  }
  return Lattice::from_int(b, 0, "D" + std::to_string(n));
}

Lattice gosset_lattice() {
  RationalMatrix b(8, RationalVector(8, Rational(0)));
  b[0][0] = 2;
  for (std::size_t i = 1; i < 7; ++i) {
    b[i][i - 1] = -1;
    b[i][i] = 1;
  }
  for (std::size_t j = 0; j < 8; ++j) b[7][j] = Rational(1, 2);
  return Lattice(std::move(b), 0, "E8");
}

Lattice l8_lattice() { return construction_a(nesting_code(5)).renamed("L8"); }

Lattice direct_sum(const Lattice& a, const Lattice& b) {
  if (a.scale2() != b.scale2()) throw Error(ErrorKind::invalid_argument, "direct sum needs equal scale2");
  const std::size_t n = a.dimension() + b.dimension();
  RationalMatrix out;
  for (const auto& row : a.basis()) {
    RationalVector r(n, Rational(0));
    std::copy(row.begin(), row.end(), r.begin());
    out.push_back(std::move(r));
  }
  for (const auto& row : b.basis()) {
    RationalVector r(n, Rational(0));
    std::copy(row.begin(), row.end(), r.begin() + static_cast<std::ptrdiff_t>(a.dimension()));
    out.push_back(std::move(r));
  }
  return Lattice(std::move(out), a.scale2());
}

Lattice lookup_lattice(std::string_view name) {
  std::string_view rest = name;
  int extra_scale2 = 0;
  Rational factor = 1;
  if (rest.starts_with("sqrt2")) {
    extra_scale2 = 1;
    rest.remove_prefix(5);
  } else if (const std::size_t len = leading_digits(rest); len > 0) {
    const std::size_t k = parse_count(rest.substr(0, len), name);
    if (k == 0) throw Error(ErrorKind::unknown_name, "unknown lattice: " + std::string(name));
    factor = Rational(static_cast<std::int64_t>(k));
    rest.remove_prefix(len);
  }
  Lattice core = parse_core(rest, name);
  if (factor == 1 && extra_scale2 == 0) return core.renamed(std::string(name));
  return core.scaled(factor, extra_scale2, std::string(name));
}

std::vector<CatalogEntry> catalog_lattices() {
  return {
      {"Zn", "cubic lattice, any n >= 1 (e.g. Z1 .. Z8)"},
      {"Dn", "checkerboard lattice, n >= 2 (D2, D4, D8, ...)"},
      {"E8", "Gosset lattice, even unimodular"},
      {"L8", "Construction A of the (8,5,2) code g3..g7"},
      {"L8*", "dual of L8"},
      {"D4^2", "direct sum of two D4"},
      {"(D4^2)*", "dual of D4^2"},
      {"D8*", "dual of D8"},
      {"sqrt2E8", "E8 scaled by sqrt(2)"},
      {"2L8*", "dual of L8 scaled by 2"},
      {"2(D4*)^2", "direct sum of two D4* scaled by 2"},
      {"2D8*", "dual of D8 scaled by 2"},
      {"2Z8", "cubic lattice scaled by 2"},
  };
}

std::vector<CodeEntry> catalog_codes() {
  std::vector<CodeEntry> out;
  out.push_back({"universe(2,2,1)", BinaryCode::from_strings(2, {"10", "01"})});
  out.push_back({"repetition(2,1,2)", BinaryCode::from_strings(2, {"11"})});
  out.push_back({"reed-muller(8,4,4)", reed_muller_8_4_4()});
  for (std::size_t kappa = 8; kappa-- > 0;) {
    const BinaryCode c = nesting_code(kappa + 1);
    out.push_back({"nesting-" + std::to_string(kappa + 1), c});
  }
  return out;
}

std::vector<TowerEntry> nesting_tower() {
  return {{"Z8", 8},      {"D8", 7},          {"D4^2", 6}, {"L8", 5}, {"sqrt2E8", 4},
          {"2L8*", 3},    {"2(D4*)^2", 2},    {"2D8*", 1}, {"2Z8", 0}};
}

std::string lattice_to_json(const Lattice& lattice) {
  nlohmann::json j;
  j["name"] = lattice.name();
  j["scale2"] = lattice.scale2();
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : lattice.basis()) {
    nlohmann::json r = nlohmann::json::array();
    for (const auto& v : row) r.push_back(format_rational(v));
    rows.push_back(std::move(r));
  }
  j["basis"] = std::move(rows);
  return j.dump(2);
}

Lattice lattice_from_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::parse, e.what());
  }
  if (!j.is_object() || !j.contains("basis") || !j["basis"].is_array())
    throw Error(ErrorKind::parse, "lattice JSON needs a basis array");
  RationalMatrix basis;
  for (const auto& row : j["basis"]) {
    if (!row.is_array()) throw Error(ErrorKind::parse, "basis rows must be arrays");
    RationalVector r;
    for (const auto& v : row) {
      if (v.is_string()) {
        r.push_back(parse_rational(v.get<std::string>()));
      } else if (v.is_number_integer()) {
        r.emplace_back(v.get<std::int64_t>());
      } else {
        throw Error(ErrorKind::parse, "basis entries must be \"p/q\" strings or integers");
      }
    }
    basis.push_back(std::move(r));
  }
  const int scale2 = j.value("scale2", 0);
  return Lattice(std::move(basis), scale2, j.value("name", std::string{}));
}

std::string code_to_json(const BinaryCode& code) {
  nlohmann::json j;
  j["n"] = code.length();
  j["kappa"] = code.dimension();
  j["generator_rows"] = code.generator_strings();
  return j.dump(2);
}

BinaryCode code_from_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::parse, e.what());
  }
  if (!j.is_object() || !j.contains("n") || !j.contains("generator_rows"))
    throw Error(ErrorKind::parse, "code JSON needs n and generator_rows");
  const auto n = j["n"].get<std::size_t>();
  const auto rows = j["generator_rows"].get<std::vector<std::string>>();
  BinaryCode code = BinaryCode::from_strings(n, rows);
  if (j.contains("kappa") && j["kappa"].get<std::size_t>() != code.dimension())
    throw Error(ErrorKind::parse, "kappa does not match the generator rows");
  return code;
}

}  // namespace latsec

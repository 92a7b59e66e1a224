#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "latsec/binary_code.hpp"
#include "latsec/lattice.hpp"

namespace latsec {

/// Rows g0..g7 of the 8x8 nesting matrix; the tower code of dimension kappa
/// is spanned by the last kappa rows.
const std::array<Bits, 8>& nesting_rows();
BinaryCode nesting_code(std::size_t kappa);
/// Reed-Muller (8,4,4), the span of g4..g7.
BinaryCode reed_muller_8_4_4();

Lattice cubic_lattice(std::size_t n);
/// {x in Z^n : sum x even}, n >= 2.
Lattice checkerboard_lattice(std::size_t n);
/// E8 in the even coordinate system (D8 plus the all-halves coset).
Lattice gosset_lattice();
/// Construction A of the (8,5,2) code spanned by g3..g7.
Lattice l8_lattice();
/// Block-diagonal direct sum; both inputs must share scale2.
Lattice direct_sum(const Lattice& a, const Lattice& b);

/// Resolves names such as "Z8", "D4", "E8", "L8*", "D4^2", "(D4^2)*",
/// "sqrt2E8", "2L8*" or "2(D4*)^2": an optional integer or "sqrt2" multiplier,
/// then an atom (Zn, Dn, E8, L8 or a parenthesized name) with optional "*"
/// and "^k" suffixes. Throws Error{unknown_name}.
Lattice lookup_lattice(std::string_view name);

struct CatalogEntry {
  std::string name;
  std::string description;
};
std::vector<CatalogEntry> catalog_lattices();

struct CodeEntry {
  std::string name;
  BinaryCode code;
};
std::vector<CodeEntry> catalog_codes();

/// The nine lattices of the 8-dimensional nesting tower, finest first, paired
/// with the dimension of the code that realizes each via Construction A.
struct TowerEntry {
  std::string lattice_name;
  std::size_t code_dimension;
};
std::vector<TowerEntry> nesting_tower();

/// {"name", "basis": [["p/q", ...], ...], "scale2"}.
std::string lattice_to_json(const Lattice& lattice);
Lattice lattice_from_json(std::string_view text);
/// {"n", "kappa", "generator_rows": ["0101...", ...]}.
std::string code_to_json(const BinaryCode& code);
BinaryCode code_from_json(std::string_view text);

}  // namespace latsec

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "latsec/lattice.hpp"
#include "latsec/matrix.hpp"

namespace latsec {

/// Bijection between the quotient fine/coarse and the integers [0, 2^k).
///
/// With T the coarse basis written in fine coordinates and T = U D V its Smith
/// form, a fine point with coordinates u maps to w = u V^{-1}; the coarse
/// lattice becomes the row lattice of D, so the digits w_i mod d_i identify the
/// coset. Digits are read as a mixed-radix number, first digit most significant.
class CosetIndexer {
 public:
  /// Throws Error{containment} unless coarse is inside fine, and
  /// Error{unsupported_quotient} unless the index is a finite power of two.
  CosetIndexer(const Lattice& fine, const Lattice& coarse);

  std::uint64_t size() const noexcept { return size_; }
  std::size_t bits() const noexcept { return bits_; }

  /// Label of the fine point with basis coordinates `coords`.
  std::uint64_t label(std::span<const std::int64_t> coords) const;
  /// Fine coordinates of a canonical member of coset `label` (not reduced).
  IntVector representative_coords(std::uint64_t label) const;

  const std::vector<std::int64_t>& diagonal() const noexcept { return snf_.diagonal; }
  const IntMatrix& coarse_in_fine() const noexcept { return t_; }

 private:
  IntMatrix t_;
  mat::SmithForm snf_;
  std::uint64_t size_ = 1;
  std::size_t bits_ = 0;
};

std::uint64_t coset_label(const Lattice& fine, const Lattice& coarse, const LatticePoint& x);

/// Label bits, most significant first, `width` entries.
std::vector<std::uint8_t> label_to_bits(std::uint64_t label, std::size_t width);
std::uint64_t bits_to_label(std::span<const std::uint8_t> bits);

}  // namespace latsec

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "latsec/binary_code.hpp"
#include "latsec/lattice.hpp"

namespace latsec {

/// The 8-dimensional tower Lambda_d = 2Z^8 + C_{8-d}, d = 0..8, where C_kappa
/// is spanned by the last kappa rows of the nesting matrix. Level d runs from
/// Z^8 (d = 0) down to 2Z^8 (d = 8); every step has index 2.
class NestedChain8 {
 public:
  NestedChain8();

  const Lattice& level(std::size_t d) const { return levels_.at(d); }
  const std::vector<Lattice>& levels() const noexcept { return levels_; }

  /// Level d of the periodic continuation: 2^{d/8} Lambda_{d mod 8}.
  Lattice extended_level(std::size_t d) const;

  /// (1/sqrt2)E8 > L8* > (D4^2)* > D8* > Z8 > D8 > D4^2 > L8 > sqrt2E8,
  /// realized as 1/2 Lambda_4 .. 1/2 Lambda_7, then Lambda_0 .. Lambda_4.
  std::vector<Lattice> shifted_chain() const;
  static std::vector<std::string> shifted_chain_names();

 private:
  std::vector<Lattice> levels_;
};

enum class ChainKind { z8, e8 };

struct MultilevelOptions {
  /// Replace the output by the minimum-norm member of its coset modulo the
  /// shaping lattice (the extended level at the bit count).
  bool voronoi_reduce = false;
  /// Subtract the midpoint of the encoder's image box so the constellation is
  /// centered; ignored when voronoi_reduce is set.
  bool center = false;
  /// Fill MultilevelCodeword::coset_labels_per_level (exact rational work).
  bool with_labels = true;
};

struct MultilevelCodeword {
  /// Integer point in the frame of the tower (before centering).
  IntVector point;
  /// True coordinates are (point - offset) * 2^{frame_scale2 / 2}.
  int frame_scale2 = 0;
  Rational offset = 0;
  std::size_t bit_count = 0;
  /// Coset label of the point at each data level; equals the input bits.
  std::vector<std::uint8_t> coset_labels_per_level;

  std::vector<double> ambient() const;
  /// point - offset, still in the tower frame.
  std::vector<double> frame_point() const;
};

/// x = sum_m 2^m c_m with c_m = s_m G over F2, lifted to {0,1}^8. The last
/// block is zero-padded.
MultilevelCodeword multilevel_encode_z8(std::span<const std::uint8_t> bits, const MultilevelOptions& options = {});
/// Four zero bits are prepended, so the point lies in sqrt2 E8 (frame_scale2 = -1
/// places it in E8 itself).
MultilevelCodeword multilevel_encode_e8(std::span<const std::uint8_t> bits, const MultilevelOptions& options = {});
MultilevelCodeword multilevel_encode(ChainKind kind, std::span<const std::uint8_t> bits,
                                     const MultilevelOptions& options = {});

/// Hard-decision multistage decoder. `y` is in the tower frame after removing
/// any centering offset (use MultilevelCodeword::frame_point for noiseless
/// input). Bits beyond `bit_count` and the E8 prefix are forced to zero.
Bits multilevel_decode(std::span<const double> y, std::size_t bit_count, ChainKind kind);

/// Label of `point` in extended_level(d) / extended_level(d + 1) after
/// removing the contribution of the first d chain bits.
std::vector<std::uint8_t> multilevel_coset_labels(const IntVector& point, std::span<const std::uint8_t> chain_bits);

}  // namespace latsec

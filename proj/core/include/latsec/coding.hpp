#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "latsec/binary_code.hpp"
#include "latsec/coset.hpp"
#include "latsec/lattice.hpp"
#include "latsec/rng.hpp"

namespace latsec {

/// Nested pair coarse (Lambda_e) inside fine (Lambda_b) with 2^k cosets and a
/// minimum-norm leader for each.
class CosetCode {
 public:
  CosetCode(Lattice fine, Lattice coarse);

  const Lattice& fine() const noexcept { return fine_; }
  const Lattice& coarse() const noexcept { return coarse_; }
  const CosetIndexer& indexer() const noexcept { return indexer_; }
  std::size_t k() const noexcept { return indexer_.bits(); }
  std::uint64_t size() const noexcept { return indexer_.size(); }

  /// Leader of each coset, indexed by label; fine-lattice points.
  const std::vector<LatticePoint>& representatives() const noexcept { return leaders_; }

  std::uint64_t label(const LatticePoint& x) const { return indexer_.label(x.coords); }
  /// Fine coordinates of a coarse-lattice point.
  IntVector coarse_to_fine(std::span<const std::int64_t> coarse_coords) const;

 private:
  Lattice fine_;
  Lattice coarse_;
  CosetIndexer indexer_;
  std::vector<LatticePoint> leaders_;
};

CosetCode build_coset_code(const Lattice& fine, const Lattice& coarse);

struct EncodeOptions {
  /// The random coarse point has coordinates uniform in [-box, box].
  std::int64_t box = 4;
};

/// Leader of coset `bits` plus a random coarse-lattice point.
/// Throws Error{bit_length} when bits.size() != k.
LatticePoint encode(const CosetCode& code, std::span<const std::uint8_t> bits, CounterRng& rng,
                    const EncodeOptions& options = {});
/// Leader of coset `bits` plus the coarse point with the given coordinates.
LatticePoint encode_with_offset(const CosetCode& code, std::span<const std::uint8_t> bits,
                                std::span<const std::int64_t> coarse_coords);

/// Nearest fine-lattice point, then its coset label as k bits.
Bits coset_decode(const CosetCode& code, std::span<const double> y);

/// vol^{-2/n}.
double operating_point(const Lattice& coarse);

struct RandomBitRate {
  double value = 0.0;
  bool clamped = false;
};
/// R_e = (gamma_db / 10) log2(10) - log2(2 pi), clamped at zero.
RandomBitRate random_bit_rate(double gamma_e_db);

/// vol^{2/n} / (2 pi sigma^2).
double gsnr(const Lattice& coarse, double sigma);

struct RatePlan {
  std::size_t n = 0;
  double total_rate = 0.0;
  double secrecy_rate = 0.0;
  double random_rate = 0.0;
  double k = 0.0;  // n R_s / 2 secret bits per codeword
  double r = 0.0;  // n R_e / 2 random bits per codeword
};
/// Splits a total rate R into R_e from Eve's GSNR and R_s = R - R_e.
RatePlan make_rate_plan(std::size_t n, double total_rate, double gamma_e_db);

}  // namespace latsec

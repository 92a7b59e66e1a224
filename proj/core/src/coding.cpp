#include "latsec/coding.hpp"

#include <cmath>
#include <numbers>

#include "latsec/closest_point.hpp"
#include "latsec/error.hpp"

namespace latsec {

CosetCode::CosetCode(Lattice fine, Lattice coarse)
    : fine_(std::move(fine)), coarse_(std::move(coarse)), indexer_(fine_, coarse_) {
  leaders_.reserve(indexer_.size());
  for (std::uint64_t label = 0; label < indexer_.size(); ++label) {
    IntVector rep = indexer_.representative_coords(label);
    const std::vector<double> v = fine_.ambient(rep);
    const LatticePoint nearest = closest_point(coarse_, v);
    const IntVector shift = coarse_to_fine(nearest.coords);
    for (std::size_t i = 0; i < rep.size(); ++i) rep[i] -= shift[i];
    leaders_.push_back(make_point(fine_, std::move(rep)));
  }
}

IntVector CosetCode::coarse_to_fine(std::span<const std::int64_t> coarse_coords) const {
  return mat::row_times(coarse_coords, indexer_.coarse_in_fine());
}

CosetCode build_coset_code(const Lattice& fine, const Lattice& coarse) { return CosetCode(fine, coarse); }

LatticePoint encode_with_offset(const CosetCode& code, std::span<const std::uint8_t> bits,
                                std::span<const std::int64_t> coarse_coords) {
  if (bits.size() != code.k())
    throw Error(ErrorKind::bit_length, "expected " + std::to_string(code.k()) + " bits, got " + std::to_string(bits.size()));
  if (coarse_coords.size() != code.coarse().rank()) throw Error(ErrorKind::invalid_argument, "coarse offset has wrong rank");
  IntVector coords = code.representatives()[bits_to_label(bits)].coords;
  const IntVector shift = code.coarse_to_fine(coarse_coords);
  for (std::size_t i = 0; i < coords.size(); ++i) coords[i] += shift[i];
  return make_point(code.fine(), std::move(coords));
}

LatticePoint encode(const CosetCode& code, std::span<const std::uint8_t> bits, CounterRng& rng,
                    const EncodeOptions& options) {
  IntVector r(code.coarse().rank());
  for (auto& v : r) v = rng.uniform_int(-options.box, options.box);
  return encode_with_offset(code, bits, r);
}

Bits coset_decode(const CosetCode& code, std::span<const double> y) {
  const LatticePoint x = closest_point(code.fine(), y);
  return label_to_bits(code.label(x), code.k());
}

double operating_point(const Lattice& coarse) {
  return std::pow(coarse.volume(), -2.0 / static_cast<double>(coarse.rank()));
}

RandomBitRate random_bit_rate(double gamma_e_db) {
  if (!std::isfinite(gamma_e_db)) throw Error(ErrorKind::domain, "GSNR must be finite");
  const double raw = gamma_e_db / 10.0 * std::log2(10.0) - std::log2(2.0 * std::numbers::pi);
  if (raw < 0.0) return {0.0, true};
  return {raw, false};
}

double gsnr(const Lattice& coarse, double sigma) {
  if (!(sigma > 0.0)) throw Error(ErrorKind::domain, "sigma must be positive");
  return std::pow(coarse.volume(), 2.0 / static_cast<double>(coarse.rank())) / (2.0 * std::numbers::pi * sigma * sigma);
}

RatePlan make_rate_plan(std::size_t n, double total_rate, double gamma_e_db) {
  RatePlan p;
  p.n = n;
  p.total_rate = total_rate;
  p.random_rate = random_bit_rate(gamma_e_db).value;
  p.secrecy_rate = total_rate - p.random_rate;
  if (p.secrecy_rate < 0.0) throw Error(ErrorKind::domain, "total rate is below the random-bit rate");
  p.k = static_cast<double>(n) * p.secrecy_rate / 2.0;
  p.r = static_cast<double>(n) * p.random_rate / 2.0;
  return p;
}

}  // namespace latsec

#include "latsec/coset.hpp"

#include "latsec/error.hpp"

namespace latsec {

namespace {

std::int64_t floor_mod(std::int64_t a, std::int64_t m) {
  const std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace

CosetIndexer::CosetIndexer(const Lattice& fine, const Lattice& coarse) {
  if (fine.dimension() != coarse.dimension())
    throw Error(ErrorKind::containment, "lattices live in different dimensions");
  auto t = sublattice_matrix(fine, coarse);
  if (!t) throw Error(ErrorKind::containment, "coarse lattice is not contained in the fine lattice");
  if (coarse.rank() != fine.rank()) throw Error(ErrorKind::unsupported_quotient, "quotient is infinite");
  t_ = std::move(*t);
  snf_ = mat::smith_normal_form(t_);
  for (const auto d : snf_.diagonal) {
    if ((d & (d - 1)) != 0) throw Error(ErrorKind::unsupported_quotient, "index is not a power of two");
    for (std::int64_t v = d; v > 1; v >>= 1) ++bits_;
  }
  if (bits_ > 62) throw Error(ErrorKind::unsupported_quotient, "index too large");
  size_ = std::uint64_t{1} << bits_;
}

std::uint64_t CosetIndexer::label(std::span<const std::int64_t> coords) const {
  const IntVector w = mat::row_times(coords, snf_.right_inverse);
  std::uint64_t out = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    const std::int64_t d = snf_.diagonal[i];
    out = out * static_cast<std::uint64_t>(d) + static_cast<std::uint64_t>(floor_mod(w[i], d));
  }
  return out;
}

IntVector CosetIndexer::representative_coords(std::uint64_t label) const {
  if (label >= size_) throw Error(ErrorKind::invalid_argument, "coset label out of range");
  const std::size_t m = snf_.diagonal.size();
  IntVector w(m, 0);
  for (std::size_t i = m; i-- > 0;) {
    const auto d = static_cast<std::uint64_t>(snf_.diagonal[i]);
    w[i] = static_cast<std::int64_t>(label % d);
    label /= d;
  }
  return mat::row_times(w, snf_.right);
}

std::uint64_t coset_label(const Lattice& fine, const Lattice& coarse, const LatticePoint& x) {
  return CosetIndexer(fine, coarse).label(x.coords);
}

std::vector<std::uint8_t> label_to_bits(std::uint64_t label, std::size_t width) {
  std::vector<std::uint8_t> out(width, 0);
  for (std::size_t i = width; i-- > 0;) {
    out[i] = static_cast<std::uint8_t>(label & 1u);
    label >>= 1;
  }
  return out;
}

std::uint64_t bits_to_label(std::span<const std::uint8_t> bits) {
  std::uint64_t out = 0;
  for (const auto b : bits) out = (out << 1) | (b & 1u);
  return out;
}

}  // namespace latsec

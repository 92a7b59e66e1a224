#include "latsec/multilevel.hpp"

#include <array>
#include <cmath>

#include "latsec/catalog.hpp"
#include "latsec/closest_point.hpp"
#include "latsec/coset.hpp"
#include "latsec/error.hpp"

namespace latsec {

namespace {

constexpr std::size_t kE8Prefix = 4;

const NestedChain8& chain() {
  static const NestedChain8 c;
  return c;
}

const std::vector<CosetIndexer>& step_indexers() {
  static const std::vector<CosetIndexer> idx = [] {
    std::vector<CosetIndexer> out;
    for (std::size_t d = 0; d < 8; ++d) out.emplace_back(chain().level(d), chain().level(d + 1));
    return out;
  }();
  return idx;
}

// Codewords of span(g_{i+1}, ..., g_7) for each i.
const std::vector<std::vector<Bits>>& tail_spans() {
  static const std::vector<std::vector<Bits>> spans = [] {
    std::vector<std::vector<Bits>> out(8);
    for (std::size_t i = 0; i < 8; ++i) {
      if (i == 7) {
        out[i] = {Bits(8, 0)};
      } else {
        out[i] = nesting_code(7 - i).codewords();
      }
    }
    return out;
  }();
  return spans;
}

IntVector sum_of_blocks(std::span<const std::uint8_t> chain_bits) {
  const auto& g = nesting_rows();
  IntVector x(8, 0);
  const std::size_t blocks = (chain_bits.size() + 7) / 8;
  for (std::size_t m = 0; m < blocks; ++m) {
    Bits c(8, 0);
    for (std::size_t i = 0; i < 8; ++i) {
      const std::size_t j = 8 * m + i;
      if (j < chain_bits.size() && (chain_bits[j] & 1u)) {
        for (std::size_t k = 0; k < 8; ++k) c[k] ^= g[i][k];
      }
    }
    const std::int64_t w = std::int64_t{1} << m;
    for (std::size_t k = 0; k < 8; ++k) x[k] += w * c[k];
  }
  return x;
}

MultilevelCodeword encode_chain(std::span<const std::uint8_t> chain_bits, std::size_t data_offset, int frame_scale2,
                                const MultilevelOptions& options) {
  if (chain_bits.size() <= data_offset) throw Error(ErrorKind::bit_length, "at least one data bit is required");
  if (chain_bits.size() > 8 * 40) throw Error(ErrorKind::bit_length, "bit string too long for 64-bit coordinates");
  MultilevelCodeword cw;
  cw.frame_scale2 = frame_scale2;
  cw.bit_count = chain_bits.size() - data_offset;
  cw.point = sum_of_blocks(chain_bits);

  if (options.voronoi_reduce) {
    const Lattice shaping = chain().extended_level(chain_bits.size());
    const std::vector<double> v(cw.point.begin(), cw.point.end());
    const LatticePoint t = closest_point(shaping, v);
    for (std::size_t k = 0; k < 8; ++k) cw.point[k] -= static_cast<std::int64_t>(std::llround(t.ambient[k]));
  } else if (options.center) {
    const std::size_t blocks = (chain_bits.size() + 7) / 8;
    cw.offset = Rational((std::int64_t{1} << blocks) - 1, 2);
  }

  if (options.with_labels) {
    const auto labels = multilevel_coset_labels(cw.point, chain_bits);
    cw.coset_labels_per_level.assign(labels.begin() + static_cast<std::ptrdiff_t>(data_offset), labels.end());
  }
  return cw;
}

}  // namespace

NestedChain8::NestedChain8() {
  const auto tower = nesting_tower();
  for (std::size_t d = 0; d <= 8; ++d) levels_.push_back(construction_a(nesting_code(8 - d)).renamed(tower[d].lattice_name));
}

Lattice NestedChain8::extended_level(std::size_t d) const {
  const std::size_t m = d / 8;
  if (m >= 40) throw Error(ErrorKind::invalid_argument, "chain level too deep");
  const Lattice& base = levels_[d % 8];
  if (m == 0) return base;
  return base.scaled(Rational(BigInt(1) << m), 0, "2^" + std::to_string(m) + "*" + base.name());
}

std::vector<Lattice> NestedChain8::shifted_chain() const {
  const auto names = shifted_chain_names();
  std::vector<Lattice> out;
  for (std::size_t d = 4; d < 8; ++d) out.push_back(levels_[d].scaled(Rational(1, 2), 0, names[d - 4]));
  for (std::size_t d = 0; d <= 4; ++d) out.push_back(levels_[d].renamed(names[d + 4]));
  return out;
}

std::vector<std::string> NestedChain8::shifted_chain_names() {
  return {"(1/sqrt2)E8", "L8*", "(D4^2)*", "D8*", "Z8", "D8", "D4^2", "L8", "sqrt2E8"};
}

std::vector<double> MultilevelCodeword::frame_point() const {
  const double off = to_double(offset);
  std::vector<double> out(point.size());
  for (std::size_t i = 0; i < point.size(); ++i) out[i] = static_cast<double>(point[i]) - off;
  return out;
}

std::vector<double> MultilevelCodeword::ambient() const {
  std::vector<double> out = frame_point();
  const double s = std::pow(2.0, 0.5 * frame_scale2);
  for (auto& v : out) v *= s;
  return out;
}

std::vector<std::uint8_t> multilevel_coset_labels(const IntVector& point, std::span<const std::uint8_t> chain_bits) {
  std::vector<std::uint8_t> labels;
  labels.reserve(chain_bits.size());
  for (std::size_t j = 0; j < chain_bits.size(); ++j) {
    const IntVector prefix = sum_of_blocks(chain_bits.subspan(0, j));
    const std::size_t m = j / 8;
    const std::size_t i = j % 8;
    const std::int64_t scale = std::int64_t{1} << m;
    RationalVector diff(8);
    for (std::size_t k = 0; k < 8; ++k) diff[k] = Rational(point[k] - prefix[k], scale);
    const auto coords = chain().level(i).coords_of(diff, 0);
    if (!coords) throw Error(ErrorKind::containment, "point left the chain at level " + std::to_string(j));
    labels.push_back(static_cast<std::uint8_t>(step_indexers()[i].label(*coords)));
  }
  return labels;
}

MultilevelCodeword multilevel_encode_z8(std::span<const std::uint8_t> bits, const MultilevelOptions& options) {
  return encode_chain(bits, 0, 0, options);
}

MultilevelCodeword multilevel_encode_e8(std::span<const std::uint8_t> bits, const MultilevelOptions& options) {
  Bits chain_bits(kE8Prefix, 0);
  chain_bits.insert(chain_bits.end(), bits.begin(), bits.end());
  return encode_chain(chain_bits, kE8Prefix, -1, options);
}

MultilevelCodeword multilevel_encode(ChainKind kind, std::span<const std::uint8_t> bits, const MultilevelOptions& options) {
  return kind == ChainKind::z8 ? multilevel_encode_z8(bits, options) : multilevel_encode_e8(bits, options);
}

Bits multilevel_decode(std::span<const double> y, std::size_t bit_count, ChainKind kind) {
  if (y.size() != 8) throw Error(ErrorKind::invalid_argument, "multilevel decoding needs an 8-dimensional input");
  if (bit_count == 0) throw Error(ErrorKind::bit_length, "at least one data bit is required");
  const std::size_t prefix = kind == ChainKind::e8 ? kE8Prefix : 0;
  const std::size_t total = bit_count + prefix;
  const std::size_t blocks = (total + 7) / 8;
  const auto& g = nesting_rows();
  const auto& spans = tail_spans();

  std::vector<double> cur(y.begin(), y.end());
  Bits decided;
  decided.reserve(total);
  std::array<std::array<double, 2>, 8> cost{};
  for (std::size_t m = 0; m < blocks; ++m) {
    // cost[k][b]: squared distance from cur[k] to the nearest point of b + 2Z.
    for (std::size_t k = 0; k < 8; ++k) {
      for (int b = 0; b < 2; ++b) {
        const double e = cur[k] - b;
        const double r = e - 2.0 * std::round(e / 2.0);
        cost[k][b] = r * r;
      }
    }
    Bits word(8, 0);
    for (std::size_t i = 0; i < 8; ++i) {
      const std::size_t j = 8 * m + i;
      const bool forced = j < prefix || j >= total;
      std::uint8_t bit = 0;
      if (!forced) {
        double best[2] = {0.0, 0.0};
        for (int b = 0; b < 2; ++b) {
          Bits base = word;
          if (b) {
            for (std::size_t k = 0; k < 8; ++k) base[k] ^= g[i][k];
          }
          double d_min = INFINITY;
          for (const Bits& u : spans[i]) {
            double d = 0.0;
            for (std::size_t k = 0; k < 8; ++k) d += cost[k][base[k] ^ u[k]];
            d_min = std::min(d_min, d);
          }
          best[b] = d_min;
        }
        bit = best[1] < best[0] ? 1 : 0;
      }
      if (bit) {
        for (std::size_t k = 0; k < 8; ++k) word[k] ^= g[i][k];
      }
      if (j < total) decided.push_back(bit);
    }
    for (std::size_t k = 0; k < 8; ++k) cur[k] = (cur[k] - word[k]) / 2.0;
  }
  return Bits(decided.begin() + static_cast<std::ptrdiff_t>(prefix), decided.end());
}

}  // namespace latsec

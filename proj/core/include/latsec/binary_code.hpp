#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace latsec {

using Bits = std::vector<std::uint8_t>;

/// Linear binary (n, kappa, d) code given by a generator matrix over F2.
/// Immutable; the minimum distance is computed once at construction.
class BinaryCode {
 public:
  /// Rows must all have length n and be linearly independent over F2.
  BinaryCode(std::size_t n, std::vector<Bits> generator);

  /// Parses rows like "01010101".
  static BinaryCode from_strings(std::size_t n, const std::vector<std::string>& rows);

  std::size_t length() const noexcept { return n_; }
  std::size_t dimension() const noexcept { return generator_.size(); }
  /// 0 encodes "infinite" (the zero code).
  std::size_t min_distance() const noexcept { return min_distance_; }
  const std::vector<Bits>& generator() const noexcept { return generator_; }

  /// message (kappa bits) times generator, over F2.
  Bits encode(const Bits& message) const;
  /// All 2^kappa codewords, ordered by message value (first bit most significant).
  std::vector<Bits> codewords() const;
  /// Basis of the orthogonal code.
  BinaryCode dual() const;
  bool contains(const Bits& word) const;

  std::vector<std::string> generator_strings() const;

 private:
  std::size_t n_;
  std::vector<Bits> generator_;
  std::size_t min_distance_;
};

/// Rank of a set of F2 vectors.
std::size_t f2_rank(std::vector<Bits> rows);

}  // namespace latsec

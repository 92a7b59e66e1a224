#pragma once

#include <cstdint>

namespace latsec {

std::uint64_t splitmix64(std::uint64_t x) noexcept;

/// Counter-based generator: output i is splitmix64(key + i * golden), so a
/// stream is fully determined by its key and any number of streams can run
/// side by side without shared state.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t key) noexcept : key_(key) {}
  /// Key derived from a seed plus two stream indices (e.g. receiver, trial).
  static CounterRng for_stream(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0) noexcept;

  std::uint64_t next() noexcept;
  /// Uniform on (0, 1), 53 random bits, never 0.
  double uniform() noexcept;
  /// Uniform integer in [lo, hi] by a 128-bit multiply (no rejection loop).
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) noexcept;
  /// Standard normal via Box-Muller; every call consumes exactly two words.
  double gaussian() noexcept;

  std::uint64_t counter() const noexcept { return counter_; }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

}  // namespace latsec

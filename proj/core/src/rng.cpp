#include "latsec/rng.hpp"

#include <cmath>
#include <numbers>

namespace latsec {

namespace {
constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;
__extension__ typedef unsigned __int128 u128;
}  // namespace

std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += kGolden;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

CounterRng CounterRng::for_stream(std::uint64_t seed, std::uint64_t a, std::uint64_t b) noexcept {
  return CounterRng(splitmix64(splitmix64(splitmix64(seed) ^ a) ^ (b * 0xD1B54A32D192ED03ULL)));
}

std::uint64_t CounterRng::next() noexcept { return splitmix64(key_ + counter_++ * kGolden); }

double CounterRng::uniform() noexcept { return (static_cast<double>(next() >> 11) + 0.5) * 0x1.0p-53; }

std::int64_t CounterRng::uniform_int(std::int64_t lo, std::int64_t hi) noexcept {
  const auto span = static_cast<u128>(static_cast<std::uint64_t>(hi - lo) + 1);
  const auto scaled = static_cast<std::uint64_t>((static_cast<u128>(next()) * span) >> 64);
  return lo + static_cast<std::int64_t>(scaled);
}

double CounterRng::gaussian() noexcept {
  const double u1 = uniform();
  const double u2 = uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

}  // namespace latsec

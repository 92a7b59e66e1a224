#include <benchmark/benchmark.h>

#include <vector>

#include "latsec/catalog.hpp"
#include "latsec/closest_point.hpp"
#include "latsec/enumerate.hpp"
#include "latsec/modular.hpp"
#include "latsec/multilevel.hpp"
#include "latsec/rng.hpp"
#include "latsec/secrecy.hpp"
#include "latsec/theta.hpp"

using namespace latsec;

static void BM_EnumerateE8(benchmark::State& state) {
  const Lattice e8 = gosset_lattice();
  const Rational bound(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(theta_series(e8, bound));
}
BENCHMARK(BM_EnumerateE8)->Arg(4)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);

static void BM_ThetaEnumD8(benchmark::State& state) {
  const Lattice d8 = lookup_lattice("D8");
  for (auto _ : state) benchmark::DoNotOptimize(theta_enum(d8, 1.0));
}
BENCHMARK(BM_ThetaEnumD8)->Unit(benchmark::kMillisecond);

static void closest_point_bench(benchmark::State& state, const char* name) {
  const Lattice l = lookup_lattice(name);
  CounterRng rng(1);
  std::vector<std::vector<double>> targets(1024, std::vector<double>(l.dimension()));
  for (auto& t : targets)
    for (auto& v : t) v = 6.0 * (rng.uniform() - 0.5);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(closest_point(l, targets[i++ & 1023]));
}
BENCHMARK_CAPTURE(closest_point_bench, Z8, "Z8");
BENCHMARK_CAPTURE(closest_point_bench, D4, "D4");
BENCHMARK_CAPTURE(closest_point_bench, E8, "E8");
BENCHMARK_CAPTURE(closest_point_bench, L8, "L8");

static void BM_ExtremalSynthesis(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    const ThetaPolynomial p = extremal_theta(n);
    benchmark::DoNotOptimize(weak_secrecy_gain(p));
  }
}
BENCHMARK(BM_ExtremalSynthesis)->Arg(24)->Arg(80)->Arg(200)->Unit(benchmark::kMillisecond);

static void BM_StrongGainE8(benchmark::State& state) {
  const ThetaEvaluator ev = closed_form_evaluator("E8");
  for (auto _ : state) benchmark::DoNotOptimize(strong_secrecy_gain(ev));
}
BENCHMARK(BM_StrongGainE8)->Unit(benchmark::kMillisecond);

static void BM_MultilevelRoundTrip(benchmark::State& state) {
  MultilevelOptions opts;
  opts.with_labels = false;
  CounterRng rng(3);
  Bits s(24);
  for (auto _ : state) {
    for (auto& b : s) b = static_cast<std::uint8_t>(rng.next() >> 63);
    const auto w = multilevel_encode_z8(s, opts);
    benchmark::DoNotOptimize(multilevel_decode(w.frame_point(), s.size(), ChainKind::z8));
  }
}
BENCHMARK(BM_MultilevelRoundTrip);
BENCHMARK_MAIN();

#include "latsec/channel.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <numbers>
#include <thread>
#include <vector>

#include "latsec/closest_point.hpp"
#include "latsec/catalog.hpp"
#include "latsec/error.hpp"

namespace latsec {

namespace {

constexpr std::uint64_t kMessageStream = 0;
constexpr std::uint64_t kBobStream = 1;
constexpr std::uint64_t kEveStream = 2;
constexpr std::uint64_t kPamStream = 3;
constexpr std::uint64_t kQamStream = 4;

std::size_t worker_count(std::size_t requested, std::size_t trials) {
  std::size_t n = requested == 0 ? std::max(1u, std::thread::hardware_concurrency()) : requested;
  return std::max<std::size_t>(1, std::min(n, trials));
}

// Runs body(t, tallies) for t in [0, trials) over contiguous chunks and sums
// the per-worker integer tallies.
template <std::size_t K>
std::array<std::size_t, K> parallel_tally(std::size_t trials, std::size_t threads,
                                          const std::function<void(std::size_t, std::array<std::size_t, K>&)>& body) {
  const std::size_t workers = worker_count(threads, trials);
  std::vector<std::array<std::size_t, K>> partial(workers, std::array<std::size_t, K>{});
  std::vector<std::exception_ptr> errors(workers);
  auto run = [&](std::size_t w) {
    try {
      const std::size_t begin = trials * w / workers;
      const std::size_t end = trials * (w + 1) / workers;
      for (std::size_t t = begin; t < end; ++t) body(t, partial[w]);
    } catch (...) {
      errors[w] = std::current_exception();
    }
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(run, w);
    for (auto& th : pool) th.join();
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  std::array<std::size_t, K> total{};
  for (const auto& p : partial)
    for (std::size_t i = 0; i < K; ++i) total[i] += p[i];
  return total;
}

SimResult make_result(std::size_t successes, std::size_t trials) {
  SimResult r;
  r.trials = trials;
  r.successes = successes;
  r.p_correct = static_cast<double>(successes) / static_cast<double>(trials);
  r.standard_error = std::sqrt(r.p_correct * (1.0 - r.p_correct) / static_cast<double>(trials));
  return r;
}

void check_trials(std::size_t trials) {
  if (trials == 0) throw Error(ErrorKind::invalid_argument, "trials must be at least 1");
}

}  // namespace

double q_function(double x) { return 0.5 * std::erfc(x / std::numbers::sqrt2); }

double pce_4qam(double ebn0) {
  if (!(ebn0 > 0.0)) throw Error(ErrorKind::domain, "Eb/N0 must be positive");
  return 1.0 - 2.0 * q_function(std::sqrt(2.0 * ebn0));
}

double pce_4qam_exact(double ebn0) {
  if (!(ebn0 > 0.0)) throw Error(ErrorKind::domain, "Eb/N0 must be positive");
  const double q = q_function(std::sqrt(2.0 * ebn0));
  return (1.0 - q) * (1.0 - q);
}

double pce_coset_z2(double ebn0) {
  if (!(ebn0 > 0.0)) throw Error(ErrorKind::domain, "Eb/N0 must be positive");
  const double s = std::sqrt(6.0 / 35.0 * ebn0);
  const double inner = 5.0 * q_function(s) - 4.0 * q_function(3.0 * s) + 3.0 * q_function(5.0 * s) -
                       2.0 * q_function(7.0 * s) + q_function(9.0 * s);
  const double per_dim = 1.0 - inner / 3.0;
  return per_dim * per_dim;
}

double correct_decision_bound(const CosetCode& code, const ThetaEvaluator& coarse_theta, double sigma) {
  if (!(sigma > 0.0)) throw Error(ErrorKind::domain, "sigma must be positive");
  const double n = static_cast<double>(code.fine().rank());
  const double two_pi_s2 = 2.0 * std::numbers::pi * sigma * sigma;
  return std::exp(std::log(code.fine().volume()) - 0.5 * n * std::log(two_pi_s2) + coarse_theta.log_theta(1.0 / two_pi_s2));
}

double correct_decision_bound(const CosetCode& code, double sigma) {
  return correct_decision_bound(code, lattice_evaluator(code.coarse()), sigma);
}

WiretapResult simulate_wiretap(const CosetCode& code, const ChannelParams& params, const SimulationOptions& options) {
  check_trials(params.trials);
  if (!(params.sigma_b > 0.0) || !(params.sigma_e > 0.0)) throw Error(ErrorKind::domain, "noise deviations must be positive");
  const Lattice& fine = code.fine();
  const std::size_t n = fine.dimension();

  const auto tally = parallel_tally<2>(params.trials, options.threads, [&](std::size_t t, std::array<std::size_t, 2>& acc) {
    CounterRng msg = CounterRng::for_stream(params.seed, kMessageStream, t);
    const auto label = static_cast<std::uint64_t>(msg.uniform_int(0, static_cast<std::int64_t>(code.size()) - 1));
    const Bits bits = label_to_bits(label, code.k());
    const LatticePoint x = encode(code, bits, msg, options.encode);

    std::vector<double> y(n);
    const std::uint64_t streams[2] = {kBobStream, kEveStream};
    const double sigmas[2] = {params.sigma_b, params.sigma_e};
    for (int r = 0; r < 2; ++r) {
      CounterRng noise = CounterRng::for_stream(params.seed, streams[r], t);
      for (std::size_t i = 0; i < n; ++i) y[i] = x.ambient[i] + sigmas[r] * noise.gaussian();
      if (code.label(closest_point(fine, y)) == label) ++acc[static_cast<std::size_t>(r)];
    }
  });

  WiretapResult out{make_result(tally[0], params.trials), make_result(tally[1], params.trials)};
  if (options.compute_bounds) {
    const ThetaEvaluator coarse_theta = lattice_evaluator(code.coarse());
    out.bob.bound = correct_decision_bound(code, coarse_theta, params.sigma_b);
    out.eve.bound = correct_decision_bound(code, coarse_theta, params.sigma_e);
  }
  return out;
}

double pam6_z2_sigma(double ebn0) {
  if (!(ebn0 > 0.0)) throw Error(ErrorKind::domain, "Eb/N0 must be positive");
  return std::sqrt(35.0 / 12.0 / (2.0 * ebn0));
}

SimResult simulate_pam6_z2(double ebn0, std::size_t trials, std::uint64_t seed, std::size_t threads) {
  check_trials(trials);
  const double sigma = pam6_z2_sigma(ebn0);
  const CosetCode code = build_coset_code(cubic_lattice(2), lookup_lattice("2Z2"));
  const auto tally = parallel_tally<1>(trials, threads, [&](std::size_t t, std::array<std::size_t, 1>& acc) {
    CounterRng rng = CounterRng::for_stream(seed, kPamStream, t);
    const auto label = static_cast<std::uint64_t>(rng.uniform_int(0, 3));
    const std::int64_t r[2] = {rng.uniform_int(0, 2), rng.uniform_int(0, 2)};
    const LatticePoint x = encode_with_offset(code, label_to_bits(label, 2), r);
    IntVector detected(2);
    for (std::size_t i = 0; i < 2; ++i) {
      const double y = x.ambient[i] + sigma * rng.gaussian();
      detected[i] = std::clamp<std::int64_t>(std::llround(y), 0, 5);
    }
    if (code.indexer().label(detected) == label) ++acc[0];
  });
  return make_result(tally[0], trials);
}

SimResult simulate_4qam(double ebn0, std::size_t trials, std::uint64_t seed, std::size_t threads) {
  check_trials(trials);
  if (!(ebn0 > 0.0)) throw Error(ErrorKind::domain, "Eb/N0 must be positive");
  const double sigma = std::sqrt(1.0 / (2.0 * ebn0));
  const auto tally = parallel_tally<1>(trials, threads, [&](std::size_t t, std::array<std::size_t, 1>& acc) {
    CounterRng rng = CounterRng::for_stream(seed, kQamStream, t);
    bool ok = true;
    for (int i = 0; i < 2; ++i) {
      const double s = (rng.next() & 1u) ? 1.0 : -1.0;
      const double y = s + sigma * rng.gaussian();
      ok = ok && ((y >= 0.0) == (s > 0.0));
    }
    if (ok) ++acc[0];
  });
  return make_result(tally[0], trials);
}

double bound_ratio(const ThetaEvaluator& a, const ThetaEvaluator& b, double sigma_e) {
  if (!(sigma_e > 0.0)) throw Error(ErrorKind::domain, "sigma must be positive");
  if (a.n != b.n) throw Error(ErrorKind::invalid_argument, "theta series must share a dimension");
  const double y = 1.0 / (2.0 * std::numbers::pi * sigma_e * sigma_e);
  return std::exp(a.log_theta(y) - b.log_theta(y));
}

double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
double linear_to_db(double v) { return 10.0 * std::log10(v); }

}  // namespace latsec

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>

#include "latsec/coding.hpp"
#include "latsec/secrecy.hpp"

namespace latsec {

/// Gaussian tail probability, 0.5 erfc(x / sqrt 2).
double q_function(double x);

/// 1 - 2 Q(sqrt(2 Eb/N0)): the first-order 4-QAM correct-decision probability.
double pce_4qam(double ebn0);
/// (1 - Q(sqrt(2 Eb/N0)))^2: the exact per-symbol value of the same scheme.
double pce_4qam_exact(double ebn0);
/// Eve's correct-decision probability for the Z^2 / 2Z^2 coset scheme with
/// theta = (6/35) Eb/N0.
double pce_coset_z2(double ebn0);

struct ChannelParams {
  double sigma_b = 1.0;
  double sigma_e = 1.0;
  std::uint64_t seed = 0;
  std::size_t trials = 1;
};

struct SimResult {
  double p_correct = 0.0;
  double standard_error = 0.0;
  std::size_t trials = 0;
  std::size_t successes = 0;
  /// vol(Lambda_b) (2 pi sigma^2)^{-n/2} Theta_{Lambda_e}(1 / (2 pi sigma^2)).
  std::optional<double> bound;
};

struct WiretapResult {
  SimResult bob;
  SimResult eve;
};

struct SimulationOptions {
  EncodeOptions encode;
  /// Worker threads; 0 picks the hardware concurrency.
  std::size_t threads = 0;
  /// Evaluate the theta-series bounds alongside the estimates.
  bool compute_bounds = true;
};

/// Monte Carlo over random messages and random coarse points. Every trial t
/// draws from streams keyed by (seed, stream, t), so the result is
/// bit-identical for any thread count.
WiretapResult simulate_wiretap(const CosetCode& code, const ChannelParams& params, const SimulationOptions& options = {});

/// The theta-series bound for one receiver.
double correct_decision_bound(const CosetCode& code, double sigma);
double correct_decision_bound(const CosetCode& code, const ThetaEvaluator& coarse_theta, double sigma);

/// Eve's side of the Z^2 / 2Z^2 coset scheme: 6-PAM per dimension (points 0..5,
/// spacing 1), the 2-bit message picks a coset of 2Z^2 and a random member of
/// it inside the box; detection is nearest constellation point followed by
/// the coset label. Noise variance per dimension is Eb / (2 Eb/N0) with
/// Eb = 35/12.
SimResult simulate_pam6_z2(double ebn0, std::size_t trials, std::uint64_t seed, std::size_t threads = 0);

/// 4-QAM (+-1 per dimension) symbol detection at the same Eb/N0 convention.
SimResult simulate_4qam(double ebn0, std::size_t trials, std::uint64_t seed, std::size_t threads = 0);

/// Noise standard deviation for a given Eb/N0 for the Z^2 / 2Z^2 coset scheme.
double pam6_z2_sigma(double ebn0);

/// Theta_A(y) / Theta_B(y) at y = 1 / (2 pi sigma_e^2).
double bound_ratio(const ThetaEvaluator& a, const ThetaEvaluator& b, double sigma_e);

double db_to_linear(double db);
double linear_to_db(double v);

}  // namespace latsec

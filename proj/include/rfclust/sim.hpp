#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace rfclust::sim {

/// AR(2) process parameterized by the modulus M and frequency index nu of
/// its complex characteristic roots: |y| = M, arg(y) = 2*pi*nu/ws.
struct AR2Spec {
  double nu;         // modal frequency, in (0, ws/2)
  double M;          // root magnitude, > 1 for causality
  double ws = 1.0;   // sampling frequency in Hertz
};

struct AR2Coeffs {
  double u1 = 0.0;
  double u2 = 0.0;
  double sigma = 1.0;  // innovation standard deviation
};

struct TimeSeries {
  std::vector<double> values;
  double ws = 1.0;
};

/// Weighted sum of independent AR(2) processes plus additive white noise:
/// X_t = sum_i a_i * Y_t^i + eps_t.
struct MixtureSpec {
  std::vector<AR2Spec> components;
  std::vector<double> weights;
  double noise_sd = 1.0;
};

enum class Scheme { clean, i, ii, iii };

struct ScenarioSpec {
  Scheme scheme = Scheme::clean;
  int n_per_cluster = 50;
  int n_contaminating = 11;  // forced to 0 for Scheme::clean
  int T = 1000;
  int burn_in = 500;
  std::uint64_t seed = 0;
  double mixture_weight = 1.0;  // a_1 = a_2 for schemes (ii) and (iii)
};

struct Scenario {
  std::vector<TimeSeries> series;
  std::vector<int> labels;  // 1..K for cluster members, 0 for contaminating
};

/// Map (nu, M, ws) to AR coefficients: u1 = 2*cos(2*pi*nu/ws)/M, u2 = -1/M^2.
/// Throws std::invalid_argument if M <= 1 or nu outside (0, ws/2).
AR2Coeffs ar2_coeffs(const AR2Spec& spec);

/// True iff both roots of 1 - u1*y - u2*y^2 lie outside the unit circle.
bool is_causal(const AR2Coeffs& c);

/// X_t = u1*X_{t-1} + u2*X_{t-2} + eps_t with Gaussian innovations; the
/// first `burn_in` samples are discarded. Deterministic for a fixed seed.
TimeSeries simulate_ar2(const AR2Coeffs& coeffs, int T, int burn_in,
                        std::uint64_t seed, double ws = 1.0);

TimeSeries simulate_mixture(const MixtureSpec& spec, int T, int burn_in,
                            std::uint64_t seed);

/// Labeled simulation scenario: two clusters of AR(2) series at
/// (nu=0.21, M=1.15) and (nu=0.22, M=1.15), plus contaminating series
/// according to the scheme. Per-series RNG substreams are derived from the
/// scenario seed, so series i is reproducible independently of the counts.
Scenario generate_scenario(const ScenarioSpec& spec);

Scheme scheme_from_string(const std::string& s);
std::string to_string(Scheme s);

void validate(const ScenarioSpec& spec);

}  // namespace rfclust::sim

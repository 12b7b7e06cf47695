#include "rfclust/sim.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

#include "rfclust/rng.hpp"

namespace rfclust::sim {

namespace {

constexpr double kPi = std::numbers::pi;

TimeSeries simulate_ar2_stream(const AR2Coeffs& coeffs, int T, int burn_in,
                               std::mt19937_64& rng, double ws) {
  if (T < 2) throw std::invalid_argument("simulate_ar2: T must be >= 2");
  if (burn_in < 0) throw std::invalid_argument("simulate_ar2: negative burn_in");
  if (!is_causal(coeffs)) {
    throw std::invalid_argument("simulate_ar2: non-causal coefficients");
  }
  std::normal_distribution<double> noise(0.0, coeffs.sigma);
  TimeSeries out;
  out.ws = ws;
  out.values.resize(T);
  double xm1 = 0.0, xm2 = 0.0;
  for (int t = 0; t < burn_in + T; ++t) {
    const double x = coeffs.u1 * xm1 + coeffs.u2 * xm2 + noise(rng);
    xm2 = xm1;
    xm1 = x;
    if (t >= burn_in) out.values[t - burn_in] = x;
  }
  return out;
}

}  // namespace

AR2Coeffs ar2_coeffs(const AR2Spec& spec) {
  if (!(spec.ws > 0.0)) throw std::invalid_argument("ar2_coeffs: ws must be > 0");
  if (!(spec.M > 1.0)) throw std::invalid_argument("ar2_coeffs: M must be > 1");
  if (!(spec.nu > 0.0) || !(spec.nu < spec.ws / 2.0)) {
    throw std::invalid_argument("ar2_coeffs: nu must lie in (0, ws/2)");
  }
  const double w0 = 2.0 * kPi * spec.nu / spec.ws;
  AR2Coeffs c;
  c.u1 = 2.0 * std::cos(w0) / spec.M;
  c.u2 = -1.0 / (spec.M * spec.M);
  c.sigma = 1.0;
  return c;
}

bool is_causal(const AR2Coeffs& c) {
  // Roots of the characteristic polynomial h(y) = 1 - u1*y - u2*y^2.
  if (c.u2 == 0.0) {
    if (c.u1 == 0.0) return true;  // white noise
    return std::abs(1.0 / c.u1) > 1.0;
  }
  const std::complex<double> disc =
      std::sqrt(std::complex<double>(c.u1 * c.u1 + 4.0 * c.u2, 0.0));
  const std::complex<double> y1 = (-c.u1 + disc) / (2.0 * c.u2);
  const std::complex<double> y2 = (-c.u1 - disc) / (2.0 * c.u2);
  return std::abs(y1) > 1.0 && std::abs(y2) > 1.0;
}

TimeSeries simulate_ar2(const AR2Coeffs& coeffs, int T, int burn_in,
                        std::uint64_t seed, double ws) {
  auto rng = make_rng(seed);
  return simulate_ar2_stream(coeffs, T, burn_in, rng, ws);
}

TimeSeries simulate_mixture(const MixtureSpec& spec, int T, int burn_in,
                            std::uint64_t seed) {
  if (spec.components.empty()) {
    throw std::invalid_argument("simulate_mixture: empty component list");
  }
  if (spec.components.size() != spec.weights.size()) {
    throw std::invalid_argument("simulate_mixture: components/weights size mismatch");
  }
  if (spec.noise_sd < 0.0) {
    throw std::invalid_argument("simulate_mixture: negative noise_sd");
  }
  TimeSeries out;
  out.ws = spec.components.front().ws;
  out.values.assign(T, 0.0);
  // Substream 0 is the additive noise, substream j+1 drives component j;
  // component count changes therefore do not shift the other streams.
  for (std::size_t j = 0; j < spec.components.size(); ++j) {
    const AR2Coeffs c = ar2_coeffs(spec.components[j]);
    auto rng = make_rng(substream_seed(seed, j + 1));
    const TimeSeries y = simulate_ar2_stream(c, T, burn_in, rng, out.ws);
    for (int t = 0; t < T; ++t) out.values[t] += spec.weights[j] * y.values[t];
  }
  if (spec.noise_sd > 0.0) {
    auto rng = make_rng(substream_seed(seed, 0));
    std::normal_distribution<double> noise(0.0, spec.noise_sd);
    for (int t = 0; t < T; ++t) out.values[t] += noise(rng);
  }
  return out;
}

void validate(const ScenarioSpec& spec) {
  if (spec.n_per_cluster <= 0) {
    throw std::invalid_argument("scenario: n_per_cluster must be positive");
  }
  if (spec.n_contaminating < 0) {
    throw std::invalid_argument("scenario: n_contaminating must be >= 0");
  }
  if (spec.T < 2) throw std::invalid_argument("scenario: T must be >= 2");
  if (spec.burn_in < 0) throw std::invalid_argument("scenario: negative burn_in");
}

Scenario generate_scenario(const ScenarioSpec& spec) {
  validate(spec);
  const int n_cont = spec.scheme == Scheme::clean ? 0 : spec.n_contaminating;
  const int n = 2 * spec.n_per_cluster + n_cont;

  Scenario sc;
  sc.series.reserve(n);
  sc.labels.reserve(n);

  for (int i = 0; i < n; ++i) {
    const std::uint64_t si = substream_seed(spec.seed, i);
    const std::uint64_t sim_seed = substream_seed(si, 1);
    auto params = make_rng(substream_seed(si, 0));

    if (i < 2 * spec.n_per_cluster) {
      const bool first = i < spec.n_per_cluster;
      const AR2Spec cluster{first ? 0.21 : 0.22, 1.15, 1.0};
      sc.series.push_back(
          simulate_ar2(ar2_coeffs(cluster), spec.T, spec.burn_in, sim_seed, cluster.ws));
      sc.labels.push_back(first ? 1 : 2);
      continue;
    }

    switch (spec.scheme) {
      case Scheme::i: {
        std::uniform_real_distribution<double> u(0.20, 0.25);
        const AR2Spec s{u(params), 1.2, 1.0};
        sc.series.push_back(
            simulate_ar2(ar2_coeffs(s), spec.T, spec.burn_in, sim_seed, s.ws));
        break;
      }
      case Scheme::ii: {
        MixtureSpec m;
        m.components = {{0.20, 1.05, 1.0}, {0.25, 1.1, 1.0}};
        m.weights = {spec.mixture_weight, spec.mixture_weight};
        sc.series.push_back(simulate_mixture(m, spec.T, spec.burn_in, sim_seed));
        break;
      }
      case Scheme::iii: {
        std::uniform_real_distribution<double> u1(0.19, 0.22), u2(0.24, 0.26);
        MixtureSpec m;
        m.components = {{u1(params), 1.05, 1.0}, {u2(params), 1.1, 1.0}};
        m.weights = {spec.mixture_weight, spec.mixture_weight};
        sc.series.push_back(simulate_mixture(m, spec.T, spec.burn_in, sim_seed));
        break;
      }
      case Scheme::clean:
        break;  // unreachable: n_cont == 0
    }
    sc.labels.push_back(0);
  }
  return sc;
}

Scheme scheme_from_string(const std::string& s) {
  if (s == "clean") return Scheme::clean;
  if (s == "i") return Scheme::i;
  if (s == "ii") return Scheme::ii;
  if (s == "iii") return Scheme::iii;
  throw std::invalid_argument("unknown scheme: " + s);
}

std::string to_string(Scheme s) {
  switch (s) {
    case Scheme::clean: return "clean";
    case Scheme::i: return "i";
    case Scheme::ii: return "ii";
    case Scheme::iii: return "iii";
  }
  return "clean";
}

}  // namespace rfclust::sim
